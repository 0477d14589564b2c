#include "semirelax/runner/initial_data.hpp"

#include <cmath>
#include <numbers>

#include "semirelax/errors.hpp"
#include "semirelax/radial/profile_io.hpp"
#include "semirelax/spectral/snapshot_io.hpp"

namespace semirelax::runner {

spectral::Field make_field(const Scenario& sc) {
  const auto grid = spectral::make_grid(sc.n, sc.N, sc.L);
  const auto& d = sc.data;
  switch (d.kind) {
    case DataSpec::Kind::gaussian:
      return spectral::Field::sample(grid, [&](const spectral::Vec3& x) {
        const double dx = x[0] - d.center;
        return spectral::cplx(d.amplitude * std::exp(-(dx * dx + x[1] * x[1] + x[2] * x[2]) / (d.width * d.width)));
      });
    case DataSpec::Kind::mode:
      return spectral::Field::sample(grid, [&](const spectral::Vec3& x) {
        return d.amplitude * std::polar(1.0, 2.0 * std::numbers::pi * d.mode * x[0] / sc.L);
      });
    case DataSpec::Kind::file: {
      auto f = spectral::read_field(d.path).to_physical();
      if (!(f.grid() == grid))
        throw HypothesisError("scenario '" + sc.name + "': snapshot " + d.path.string() + " does not match n, N, L");
      return f;
    }
  }
  throw std::logic_error("unhandled data kind");
}

radial::RadialProfile make_profile(const Scenario& sc) {
  const auto& d = sc.data;
  switch (d.kind) {
    case DataSpec::Kind::gaussian:
      if (d.center != 0.0) break;
      return radial::RadialProfile::sample(
          sc.R, sc.M, [&](double r) { return radial::cplx(d.amplitude * std::exp(-r * r / (d.width * d.width))); });
    case DataSpec::Kind::mode: break;
    case DataSpec::Kind::file: {
      auto f = radial::read_profile(d.path);
      if (f.samples() != sc.M || f.extent() != sc.R)
        throw HypothesisError("scenario '" + sc.name + "': profile " + d.path.string() + " does not match M, R");
      return f;
    }
  }
  throw HypothesisError("scenario '" + sc.name + "': data " + d.str() + " is not radial");
}

}  // namespace semirelax::runner
