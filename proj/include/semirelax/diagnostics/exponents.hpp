#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace semirelax::diagnostics {

/// Exact fraction with 64-bit parts, always reduced with a positive
/// denominator. Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "3", "-2", "3/2", "0.75", "1e-3". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  Rational operator-() const { return {-num_, den_}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// An integrability exponent in [1, infinity], stored by its reciprocal so
/// that infinity is exact (reciprocal 0).
class Exponent {
 public:
  static Exponent finite(Rational value);
  static Exponent infinity() { return Exponent(Rational(0)); }
  /// "inf" / "infinity" or anything Rational::parse accepts.
  static Exponent parse(std::string_view text);

  Rational reciprocal() const noexcept { return inv_; }
  bool is_infinite() const noexcept { return inv_ == Rational(0); }
  double value() const noexcept;
  std::string str() const;

 private:
  explicit Exponent(Rational inv) : inv_(inv) {}
  Rational inv_;
};

/// s_{n,p} = n/2 - 1/(p-1). Throws std::invalid_argument on p <= 1.
Rational scaling_critical_exponent(int n, Rational p);
double scaling_critical_exponent(int n, double p);

/// p_{n,s} = 1 + 2/(n - 2s), the power whose critical index is s.
/// Throws std::invalid_argument unless s < n/2.
Rational critical_power(int n, Rational s);
double critical_power(int n, double s);

/// Exponent ratio sigma^{1/(p-1) + s - n/2} of ||u_{0,sigma}||_{H^s-dot} to ||u_0||.
double scaling_exponent(int n, double p, double s);

/// Time/space exponents of a Strichartz pair for the half-wave group.
struct StrichartzExponents {
  int n;
  Exponent q;
  Exponent r;

  Rational alpha() const { return Rational(1, 2) - r.reciprocal(); }
  Rational lambda() const { return Rational(n + 1, 2); }
  Rational sigma() const { return Rational(n - 1); }
};

/// Admissibility sigma (1/2 - 1/r) = 2/q with 2 <= r <= infinity for n = 1, 2
/// and 2 <= r < infinity for n = 3. The relation is used in multiplied form:
/// for n = 1 (sigma = 0) it forces q = infinity with any r.
bool is_admissible(const StrichartzExponents& e);

/// s - (3/2)(1/2 - 1/r) - 2/r > 0. Throws std::invalid_argument on r <= 2.
bool embedding_exponent_check(Rational s, Exponent r);
bool embedding_exponent_check(double s, double r);
/// The threshold 3/4 + 1/(2r) in the other form of the same condition.
Rational embedding_threshold(Exponent r);

/// Everything check-exponents prints for one (n, p, s, q, r) tuple.
struct ExponentReport {
  int n = 1;
  Rational p;
  Rational critical_s;
  std::optional<Rational> s;
  /// p_{n,s} for the given s, when s < n/2.
  std::optional<Rational> critical_p;
  std::optional<Exponent> q;
  std::optional<Exponent> r;
  std::optional<bool> admissible;
  std::optional<bool> embedding;
  std::optional<Rational> embedding_threshold;
  /// Both forms of the embedding condition agree; false is an internal error.
  bool forms_agree = true;

  std::string to_json() const;
};

/// Throws std::invalid_argument on n outside 1..3 or p <= 1.
ExponentReport check_exponents(int n, Rational p, std::optional<Rational> s = std::nullopt,
                               std::optional<Exponent> q = std::nullopt, std::optional<Exponent> r = std::nullopt);

}  // namespace semirelax::diagnostics
