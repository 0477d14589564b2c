#include "semirelax/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace semirelax::spectral {
namespace {

enum class Kind { complex_forward, complex_backward, dst2, dst3 };

using PlanKey = std::tuple<Kind, int, int>;  // kind, rank, points per axis

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(Kind kind, int rank, int n) {
    std::lock_guard lock(mutex_);
    const PlanKey key{kind, rank, n};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    if (kind == Kind::complex_forward || kind == Kind::complex_backward) {
      std::size_t total = 1;
      std::vector<int> dims(rank, n);
      for (int a = 0; a < rank; ++a) total *= n;
      std::vector<fftw_complex> scratch(total);
      plan = fftw_plan_dft(rank, dims.data(), scratch.data(), scratch.data(),
                           kind == Kind::complex_forward ? FFTW_FORWARD : FFTW_BACKWARD, flags);
    } else {
      std::vector<double> scratch(n);
      plan = fftw_plan_r2r_1d(n, scratch.data(), scratch.data(), kind == Kind::dst2 ? FFTW_RODFT10 : FFTW_RODFT01,
                              flags);
    }
    if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run_complex(const Grid& grid, std::span<cplx> data, Kind kind) {
  if (data.size() != grid.size()) throw std::invalid_argument("transform buffer does not match grid size");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cache().get(kind, grid.dim(), grid.points()), ptr, ptr);
}

void run_real(std::span<double> data, Kind kind) {
  if (data.empty()) throw std::invalid_argument("empty sine transform");
  fftw_execute_r2r(cache().get(kind, 1, static_cast<int>(data.size())), data.data(), data.data());
}

}  // namespace

void dft_forward(const Grid& grid, std::span<cplx> data) { run_complex(grid, data, Kind::complex_forward); }
void dft_backward(const Grid& grid, std::span<cplx> data) { run_complex(grid, data, Kind::complex_backward); }
void dst_forward(std::span<double> data) { run_real(data, Kind::dst2); }
void dst_backward(std::span<double> data) { run_real(data, Kind::dst3); }

}  // namespace semirelax::spectral
