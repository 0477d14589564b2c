#include "semirelax/diagnostics/exponents.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace semirelax::diagnostics {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational arithmetic overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational arithmetic overflow");
  return out;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: " + std::string(text));
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

  std::int64_t exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_int(text.substr(e + 1 + (text[e + 1] == '+')));
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits(text);
  if (const auto dot = digits.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<std::int64_t>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a number: " + std::string(text));
  Rational r(parse_int(digits));
  if (std::abs(exp10) > 18) throw std::invalid_argument("exponent out of range: " + std::string(text));
  std::int64_t scale = 1;
  for (std::int64_t i = 0; i < std::abs(exp10); ++i) scale *= 10;
  r = exp10 >= 0 ? r * Rational(scale) : r / Rational(scale);
  return negative ? -r : r;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  return Rational(checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g)),
                  checked_mul(a.den_ / g, b.den_));
}

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
  const std::int64_t n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(Rational a, Rational b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

Exponent Exponent::finite(Rational value) {
  if (value < Rational(1)) throw std::invalid_argument("integrability exponent must be >= 1, got " + value.str());
  return Exponent(Rational(1) / value);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  return finite(Rational::parse(text));
}

double Exponent::value() const noexcept { return is_infinite() ? INFINITY : 1.0 / inv_.value(); }

std::string Exponent::str() const { return is_infinite() ? "inf" : (Rational(1) / inv_).str(); }

Rational scaling_critical_exponent(int n, Rational p) {
  if (p <= Rational(1)) throw std::invalid_argument("power p must exceed 1");
  return Rational(n, 2) - Rational(1) / (p - Rational(1));
}

double scaling_critical_exponent(int n, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("power p must exceed 1");
  return 0.5 * n - 1.0 / (p - 1.0);
}

Rational critical_power(int n, Rational s) {
  if (!(s < Rational(n, 2))) throw std::invalid_argument("critical power needs s < n/2, got s = " + s.str());
  return Rational(1) + Rational(2) / (Rational(n) - Rational(2) * s);
}

double critical_power(int n, double s) {
  if (!(s < 0.5 * n)) throw std::invalid_argument("critical power needs s < n/2");
  return 1.0 + 2.0 / (n - 2.0 * s);
}

double scaling_exponent(int n, double p, double s) { return 1.0 / (p - 1.0) + s - 0.5 * n; }

bool is_admissible(const StrichartzExponents& e) {
  if (e.n < 1 || e.n > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  const Rational inv_r = e.r.reciprocal();
  if (inv_r > Rational(1, 2)) return false;
  if (e.n == 3 && e.r.is_infinite()) return false;
  return e.sigma() * e.alpha() == Rational(2) * e.q.reciprocal();
}

bool embedding_exponent_check(Rational s, Exponent r) {
  if (r.reciprocal() >= Rational(1, 2)) throw std::invalid_argument("embedding check needs r > 2");
  const Rational inv_r = r.reciprocal();
  return s - Rational(3, 2) * (Rational(1, 2) - inv_r) - Rational(2) * inv_r > Rational(0);
}

bool embedding_exponent_check(double s, double r) {
  if (!(r > 2.0)) throw std::invalid_argument("embedding check needs r > 2");
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  return s - 1.5 * (0.5 - inv_r) - 2.0 * inv_r > 0.0;
}

Rational embedding_threshold(Exponent r) { return Rational(3, 4) + Rational(1, 2) * r.reciprocal(); }

ExponentReport check_exponents(int n, Rational p, std::optional<Rational> s, std::optional<Exponent> q,
                               std::optional<Exponent> r) {
  if (n < 1 || n > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  ExponentReport rep;
  rep.n = n;
  rep.p = p;
  rep.critical_s = scaling_critical_exponent(n, p);
  rep.s = s;
  rep.q = q;
  rep.r = r;
  if (s && *s < Rational(n, 2)) rep.critical_p = critical_power(n, *s);
  if (q && r) rep.admissible = is_admissible({n, *q, *r});
  if (s && r && r->reciprocal() < Rational(1, 2)) {
    rep.embedding = embedding_exponent_check(*s, *r);
    rep.embedding_threshold = embedding_threshold(*r);
    rep.forms_agree = (*s > *rep.embedding_threshold) == *rep.embedding;
  }
  return rep;
}

std::string ExponentReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p.str();
  j["critical_s"] = critical_s.str();
  j["critical_s_value"] = critical_s.value();
  if (s) j["s"] = s->str();
  if (critical_p) {
    j["critical_p"] = critical_p->str();
    j["critical_p_value"] = critical_p->value();
  }
  if (q) j["q"] = q->str();
  if (r) j["r"] = r->str();
  if (admissible) j["admissible"] = *admissible;
  if (embedding) {
    j["embedding_threshold"] = embedding_threshold->str();
    j["embedding"] = *embedding;
    j["forms_agree"] = forms_agree;
  }
  return j.dump(2);
}

}  // namespace semirelax::diagnostics
