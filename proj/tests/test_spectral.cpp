#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "semirelax/errors.hpp"
#include "semirelax/spectral/littlewood_paley.hpp"
#include "semirelax/spectral/multiplier.hpp"
#include "semirelax/spectral/norms.hpp"
#include "semirelax/spectral/snapshot_io.hpp"
#include "support/oracles.hpp"

using namespace semirelax::spectral;
using std::numbers::pi;

namespace {

Field random_field(const Grid& g, std::mt19937_64& rng) { return Field(g, oracle::random_values(g.size(), rng)); }

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const Field& a) {
  double m = 0.0;
  for (const auto& v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

Field gaussian_1d(int N = 256, double L = 40.0) {
  return Field::sample(make_grid(1, N, L), [](const Vec3& x) { return cplx(std::exp(-x[0] * x[0])); });
}

// Continuum Fourier transform of exp(-x^2) is sqrt(pi) exp(-xi^2/4).
double gaussian_spectral_integral(const std::function<double(double)>& weight) {
  return oracle::integrate(
             [&](double xi) {
               const double fh = std::sqrt(pi) * std::exp(-xi * xi / 4.0);
               return weight(xi) * fh * fh;
             },
             -60.0, 60.0) /
         (2.0 * pi);
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("one-dimensional grid of period 2 pi") {
    const Grid g = make_grid(1, 8, 2 * pi);
    CHECK(g.spacing() == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(g.spacing() * g.points() == g.length());
    std::set<long> modes;
    for (double k : g.wavenumbers()) modes.insert(std::lround(k));
    CHECK(modes == std::set<long>{-4, -3, -2, -1, 0, 1, 2, 3});
  }

  TEST_CASE("three-dimensional grid") {
    const Grid g = make_grid(3, 16, 10.0);
    CHECK(g.size() == 4096);
    CHECK(g.spacing() == 0.625);
  }

  TEST_CASE("wavenumbers are symmetric except the Nyquist mode") {
    const Grid g = make_grid(1, 32, 7.0);
    const auto k = g.wavenumbers();
    for (int i = 1; i < 16; ++i) CHECK(k[i] == -k[32 - i]);
    CHECK(k[16] == doctest::Approx(-pi * 32 / 7.0));
  }

  TEST_CASE("invalid grids are rejected") {
    CHECK_THROWS_AS(make_grid(2, 7, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 16, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 16, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(4, 16, 1.0), std::invalid_argument);
  }
}

TEST_SUITE("transforms") {
  TEST_CASE("constant field has all mass in the zero mode") {
    const Grid g = make_grid(2, 16, 3.0);
    const Field s = Field::sample(g, [](const Vec3&) { return cplx(1.0); }).to_spectral();
    CHECK(std::abs(s[0]) == doctest::Approx(9.0));
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(std::abs(s[i]) < 1e-13);
  }

  TEST_CASE("a pure exponential is a single mode") {
    const Grid g = make_grid(1, 8, 2 * pi);
    const Field s = Field::sample(g, [](const Vec3& x) { return std::polar(1.0, x[0]); }).to_spectral();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i == 1)
        CHECK(std::abs(s[i]) == doctest::Approx(2 * pi));
      else
        CHECK(std::abs(s[i]) < 1e-13);
    }
  }

  TEST_CASE("round trip and Parseval hold for random fields in every dimension") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 3; ++n) {
      const Grid g = make_grid(n, n == 3 ? 16 : 32, 1.7 + n);
      for (int trial = 0; trial < 5; ++trial) {
        const Field f = random_field(g, rng);
        const Field s = f.to_spectral();
        const Field back = s.to_physical();
        CHECK(max_abs_diff(back, f) / max_abs(f) < 1e-12);

        double phys = 0.0, spec = 0.0;
        for (const auto& v : f.values()) phys += std::norm(v);
        for (const auto& v : s.values()) spec += std::norm(v);
        phys *= g.cell_volume();
        spec /= std::pow(g.length(), n);
        CHECK(oracle::rel(phys, spec) < 1e-12);
      }
    }
  }
}

TEST_SUITE("multipliers") {
  TEST_CASE("unit symbol is the identity") {
    std::mt19937_64 rng(1);
    const Field f = random_field(make_grid(2, 16, 5.0), rng);
    const Field g = apply_multiplier(f, [](const Vec3&) { return cplx(1.0); }, SymbolParity::even_per_axis);
    CHECK(max_abs_diff(f, g) / max_abs(f) < 1e-13);
  }

  TEST_CASE("plane waves are eigenfunctions of D") {
    const Grid g1 = make_grid(1, 16, 2 * pi);
    const Field w = Field::sample(g1, [](const Vec3& x) { return std::polar(1.0, 2 * x[0]); });
    const Field dw = half_laplacian(w);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(dw[i] - 2.0 * w[i]) < 1e-12);

    const Grid g2 = make_grid(2, 16, 2 * pi);
    const Field w2 = Field::sample(g2, [](const Vec3& x) { return std::polar(1.0, 3 * x[0] + 4 * x[1]); });
    const Field dw2 = half_laplacian(w2);
    for (std::size_t i = 0; i < w2.size(); ++i) CHECK(std::abs(dw2[i] - 5.0 * w2[i]) < 1e-11);
  }

  TEST_CASE("D annihilates constants") {
    const Field c = Field::sample(make_grid(3, 8, 2.0), [](const Vec3&) { return cplx(3.0, -1.0); });
    CHECK(max_abs(half_laplacian(c)) < 1e-13);
  }

  TEST_CASE("D of a Gaussian matches the continuum integral") {
    const double oracle_value = std::sqrt(gaussian_spectral_integral([](double xi) { return xi * xi; }));
    // closed form: sqrt(sqrt(2 pi) / 2)
    CHECK(oracle_value == doctest::Approx(std::sqrt(std::sqrt(2 * pi) / 2)).epsilon(1e-12));
    const double discrete = lp_norm(half_laplacian(gaussian_1d()), 2.0);
    CHECK(oracle::rel(discrete, oracle_value) < 1e-6);
  }

  TEST_CASE("non-finite symbols are reported with the mode") {
    const Field f = gaussian_1d(16, 4.0);
    try {
      apply_multiplier(f, [](const Vec3& xi) { return cplx(1.0 / std::abs(xi[0])); });
      FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("(0)") != std::string::npos);
    }
  }

  TEST_CASE("multipliers compose") {
    std::mt19937_64 rng(3);
    const Field f = random_field(make_grid(2, 32, 6.0), rng);
    const Symbol m1 = [](const Vec3& xi) { return cplx(1.0 + xi[0] * xi[0], 0.5 * xi[1]); };
    const Symbol m2 = [](const Vec3& xi) { return std::polar(1.0, 0.3 * std::hypot(xi[0], xi[1])); };
    const Field a = apply_multiplier(apply_multiplier(f, m1), m2);
    const Field b = apply_multiplier(f, [&](const Vec3& xi) { return m1(xi) * m2(xi); });
    CHECK(max_abs_diff(a, b) / max_abs(b) < 1e-12);
  }

  TEST_CASE("D is self-adjoint on the grid") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
      const Grid g = make_grid(n, 16, 4.0);
      const Field f = random_field(g, rng), h = random_field(g, rng);
      const cplx lhs = inner_product(half_laplacian(f), h);
      const cplx rhs = inner_product(f, half_laplacian(h));
      CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
    }
  }

  TEST_CASE("odd symbols drop the unpaired Nyquist mode") {
    const Grid g = make_grid(1, 8, 2 * pi);
    const Field nyq = Field::sample(g, [](const Vec3& x) { return std::polar(1.0, -4 * x[0]); });
    CHECK(max_abs(partial_derivative(nyq, 0)) < 1e-13);
    CHECK(max_abs(half_laplacian(nyq)) == doctest::Approx(4.0));
  }
}

TEST_SUITE("norms") {
  TEST_CASE("zero field has zero norms") {
    const Field z(make_grid(2, 16, 3.0));
    CHECK(lp_norm(z, 2.0) == 0.0);
    CHECK(lp_norm(z, INFINITY) == 0.0);
    CHECK(sobolev_norm(z, {1.5, false}) == 0.0);
    CHECK(sobolev_norm(z, {-1.0, true}) == 0.0);
    CHECK(besov_norm(z, 1.0, 4.0) == 0.0);
    CHECK(weighted_norm(z, 0.5, 2.0, -1) == 0.0);
  }

  TEST_CASE("indicator of a unit interval has unit Lp norm") {
    const Grid g = make_grid(1, 64, 8.0);
    const Field f = Field::sample(g, [](const Vec3& x) { return cplx(x[0] >= 0.0 && x[0] < 1.0 ? 1.0 : 0.0); });
    for (double p : {1.0, 2.0, 3.5, 7.0}) CHECK(lp_norm(f, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lp_norm(f, INFINITY) == 1.0);
    CHECK_THROWS_AS(lp_norm(f, 0.5), std::invalid_argument);
  }

  TEST_CASE("L4 norm of a Gaussian matches quadrature") {
    const double oracle_value =
        std::pow(oracle::integrate([](double x) { return std::exp(-4 * x * x); }, -20, 20), 0.25);
    CHECK(oracle_value == doctest::Approx(0.9702557723).epsilon(1e-9));  // (sqrt(pi)/2)^{1/4}
    CHECK(oracle::rel(lp_norm(gaussian_1d(), 4.0), oracle_value) < 1e-8);
  }

  TEST_CASE("single-mode homogeneous norm scales with the mode number") {
    const Grid g = make_grid(1, 16, 2 * pi);
    const Field w = Field::sample(g, [](const Vec3& x) { return std::polar(1.0 / std::sqrt(2 * pi), 2 * x[0]); });
    CHECK(lp_norm(w, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sobolev_norm(w, {1.0, true}) == doctest::Approx(2.0 * lp_norm(w, 2.0)).epsilon(1e-13));
  }

  TEST_CASE("H1 norm of a Gaussian matches quadrature") {
    const double oracle_value = std::sqrt(gaussian_spectral_integral([](double xi) { return 1.0 + xi * xi; }));
    CHECK(oracle::rel(sobolev_norm(gaussian_1d(), {1.0, false}), oracle_value) < 1e-6);
  }

  TEST_CASE("s = 0 inhomogeneous norm equals L2, and Sobolev norms increase with s") {
    std::mt19937_64 rng(5);
    const Field f = random_field(make_grid(2, 16, 5.0), rng);
    CHECK(oracle::rel(sobolev_norm(f, {0.0, false}), lp_norm(f, 2.0)) < 1e-12);
    double prev = 0.0;
    for (double s = -1.0; s <= 2.5; s += 0.25) {
      const double v = sobolev_norm(f, {s, false});
      CHECK(v >= prev);
      prev = v;
    }
  }

  TEST_CASE("negative homogeneous norm needs zero mean") {
    const Field g = gaussian_1d(64, 20.0);
    CHECK_THROWS_AS(sobolev_norm(g, {-0.5, true}), std::domain_error);
    const Field zero_mean = Field::sample(make_grid(1, 64, 20.0), [](const Vec3& x) {
      return cplx(x[0] * std::exp(-x[0] * x[0]));
    });
    CHECK(sobolev_norm(zero_mean, {-0.5, true}) > 0.0);
  }
}

TEST_SUITE("besov") {
  TEST_CASE("partition of unity on the grid") {
    const LittlewoodPaley lp(200.0);
    for (double xi = 0.0; xi <= 200.0; xi += 0.01) {
      double sum = 0.0;
      for (int b = 0; b < lp.block_count(); ++b) sum += lp.weight(b, xi);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }

  TEST_CASE("a field inside one dyadic shell collapses to one block") {
    // L = 2 pi: mode k has |xi| = k. Block j = 3 has plateau [9, 16].
    const Grid g = make_grid(1, 64, 2 * pi);
    const Field f = Field::sample(g, [](const Vec3& x) {
      return std::polar(0.7, 10 * x[0]) + std::polar(0.4, -13 * x[0] + 0.3) + cplx(0.2) * std::polar(1.0, 15 * x[0]);
    });
    CHECK(oracle::rel(besov_norm(f, 0.0, 2.0), lp_norm(f, 2.0)) < 1e-13);
    CHECK(oracle::rel(besov_norm(f, 1.5, 4.0), std::pow(8.0, 1.5) * lp_norm(f, 4.0)) < 1e-13);
  }

  TEST_CASE("B^s_{2,2} is equivalent to H^s with the partition's frame constants") {
    const double s = 1.25;
    const Grid g = make_grid(2, 64, 9.0);
    const auto mags = wavenumber_magnitudes(g);
    const LittlewoodPaley lp(*std::max_element(mags.begin(), mags.end()));
    // Frame constants from the implemented partition, scanned over the grid's band.
    const double band = *std::max_element(mags.begin(), mags.end());
    double c2 = INFINITY, C2 = 0.0;
    for (double xi = 0.0; xi <= band; xi += 1e-3) {
      double acc = 0.0;
      for (int b = 0; b < lp.block_count(); ++b) {
        const double w = lp.weight(b, xi);
        acc += std::pow(lp.scale(b), 2 * s) * w * w;
      }
      const double ratio = acc / std::pow(1 + xi * xi, s);
      c2 = std::min(c2, ratio);
      C2 = std::max(C2, ratio);
    }
    const double c = std::sqrt(c2), C = std::sqrt(C2);
    CHECK(c > 0.05);
    CHECK(C < 2.0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      const Field f = random_field(g, rng);
      const double b = besov_norm(f, s, 2.0);
      const double h = sobolev_norm(f, {s, false});
      CHECK(b >= c * h * (1 - 1e-12));
      CHECK(b <= C * h * (1 + 1e-12));
    }
  }

  TEST_CASE("r < 1 is rejected") { CHECK_THROWS_AS(besov_norm(gaussian_1d(16, 4.0), 0.0, 0.5), std::invalid_argument); }
}

TEST_SUITE("weighted and space-time norms") {
  TEST_CASE("bracket weight at |x| = 1 is 2") {
    for (double d : {0.1, 0.5, 1.0, 3.0}) CHECK(bracket_weight(1.0, d) == 2.0);
  }

  TEST_CASE("radial shell weighted norm matches quadrature") {
    // Edges 1 and 2 fall on cell boundaries (h = 1/128).
    const semirelax::radial::RadialProfile f = semirelax::radial::RadialProfile::sample(
        4.0, 512, [](double r) { return r > 1.0 && r < 2.0 ? semirelax::radial::cplx(1.0) : 0.0; });
    const double integral = oracle::integrate(
        [](double r) { return 4 * pi * r * r / (std::sqrt(r) + std::pow(r, 1.5)); }, 1.0, 2.0, 200);
    CHECK(oracle::rel(weighted_norm(f, 0.5, 2.0, -1), std::sqrt(integral)) < 1e-5);
  }

  TEST_CASE("grid weighted norm drops the origin for the singular sign") {
    const Grid g = make_grid(1, 16, 4.0);
    Field f(g);
    f[8] = 1.0;  // x = 0
    CHECK(weighted_norm(f, 0.5, 2.0, -1) == 0.0);
    CHECK(weighted_norm(f, 0.5, 2.0, 1) == 0.0);
  }

  TEST_CASE("time quadrature of a decaying trajectory") {
    const Grid g = make_grid(1, 64, 20.0);
    const Field base = Field::sample(g, [](const Vec3& x) { return cplx(std::exp(-x[0] * x[0])); });
    semirelax::propagator::Trajectory traj;
    const int steps = 2000;
    for (int i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      traj.times.push_back(t);
      traj.snapshots.push_back(cplx(std::exp(-t)) * base);
    }
    const SpatialNorm l2 = [](const Field& f) { return lp_norm(f, 2.0); };
    const double expected = lp_norm(base, 2.0) * std::sqrt((1 - std::exp(-2.0)) / 2);
    CHECK(oracle::rel(space_time_norm(traj, 2.0, l2), expected) < 1e-7);

    semirelax::propagator::Trajectory single;
    single.times = {0.0};
    single.snapshots = {base};
    CHECK(space_time_norm(single, INFINITY, l2) == lp_norm(base, 2.0));
    CHECK_THROWS_AS(space_time_norm(single, 2.0, l2), std::invalid_argument);

    semirelax::propagator::Trajectory empty;
    CHECK_THROWS_AS(space_time_norm(empty, INFINITY, l2), std::invalid_argument);
  }
}

TEST_SUITE("snapshot files") {
  TEST_CASE("write then read reproduces the field bit for bit") {
    std::mt19937_64 rng(21);
    const Field f(make_grid(2, 8, 1.25), oracle::random_values(64, rng));
    std::stringstream ss;
    write_field(ss, f);
    const Field back = read_field(ss);
    CHECK(back.grid() == f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
    std::string header = ss.str().substr(0, ss.str().find('\n'));
    CHECK(header == "2 8 1.25 physical");
  }

  TEST_CASE("malformed data reports the line") {
    std::stringstream ss("1 8 2 physical\n1 0\n1 0\noops\n");
    try {
      read_field(ss);
      FAIL("expected ParseError");
    } catch (const semirelax::ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
}
