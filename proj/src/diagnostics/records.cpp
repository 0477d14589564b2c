#include "semirelax/diagnostics/records.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace semirelax::diagnostics {

namespace {

nlohmann::ordered_json number(double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr; }

}  // namespace

IdentityResidual IdentityResidual::make(double lhs, double rhs) {
  IdentityResidual r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.relative = r.residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return r;
}

BoundReport BoundReport::make(double lhs, double rhs, double empirical_constant) {
  BoundReport b;
  b.lhs = lhs;
  b.rhs = rhs;
  b.residual = std::abs(lhs - rhs);
  b.relative = b.residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  b.empirical_constant = empirical_constant;
  b.holds = lhs <= rhs;
  return b;
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["lhs"] = number(lhs);
  j["rhs"] = number(rhs);
  j["residual"] = number(residual);
  j["relative"] = number(relative);
  j["empirical_constant"] = number(empirical_constant);
  j["holds"] = holds;
  if (std::isfinite(signed_constant)) j["signed_constant"] = signed_constant;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

std::string to_json(const IdentityResidual& r) {
  nlohmann::ordered_json j;
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["residual"] = number(r.residual);
  j["relative"] = number(r.relative);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2);
}

}  // namespace semirelax::diagnostics
