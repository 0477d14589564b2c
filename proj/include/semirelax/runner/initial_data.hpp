#pragma once

#include "semirelax/radial/profile.hpp"
#include "semirelax/runner/config.hpp"
#include "semirelax/spectral/field.hpp"

namespace semirelax::runner {

/// u0 on the scenario's n-dimensional grid (N, L). gaussian(a, w, c) is
/// a exp(-|x - c e_1|^2 / w^2); mode(k, a) is a exp(2 pi i k x_1 / L);
/// file(path) reads a snapshot whose grid must match the scenario.
spectral::Field make_field(const Scenario& sc);

/// u0 on the radial grid (M, R). file(path) reads a profile file whose
/// grid must match. Throws HypothesisError for non-radial data.
radial::RadialProfile make_profile(const Scenario& sc);

}  // namespace semirelax::runner
