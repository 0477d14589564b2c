#pragma once

#include <functional>
#include <optional>

#include "semirelax/spectral/field.hpp"

namespace semirelax::spectral {

using Symbol = std::function<cplx(const Vec3& xi)>;

/// Whether m(xi) is unchanged by flipping the sign of any single component.
/// Symbols that are not get the unpaired Nyquist modes zeroed before use.
enum class SymbolParity { even_per_axis, general };

/// Multiplies the spectral coefficients of `f` by m(xi). The result is
/// returned in `out` representation (default: that of `f`). Throws
/// std::domain_error naming the offending mode if m is not finite there.
Field apply_multiplier(const Field& f, const Symbol& m, SymbolParity parity = SymbolParity::general,
                       std::optional<Representation> out = std::nullopt);

/// Same as apply_multiplier but with the symbol already tabulated per flat
/// spectral index. Used by the time steppers.
Field apply_multiplier_table(const Field& f, std::span<const cplx> table, SymbolParity parity,
                             std::optional<Representation> out = std::nullopt);

void zero_nyquist(Field& spectral);

/// D = (-Delta)^{1/2}, the multiplier |xi|.
Field half_laplacian(const Field& f);
/// d/dx_axis, the multiplier i xi_axis.
Field partial_derivative(const Field& f, int axis);
/// d^2/dx_j dx_k, the multiplier -xi_j xi_k.
Field second_derivative(const Field& f, int j, int k);

}  // namespace semirelax::spectral
