#pragma once

#include <filesystem>
#include <iosfwd>

#include "semirelax/spectral/field.hpp"

namespace semirelax::spectral {

// Snapshot text format:
//   line 1: "n N L representation"   (representation is physical|spectral)
//   then N^n lines "re im", row-major, 17 significant digits.

void write_field(std::ostream& os, const Field& f);
void write_field(const std::filesystem::path& path, const Field& f);

/// Throws ParseError (with line number) on malformed input.
Field read_field(std::istream& is);
Field read_field(const std::filesystem::path& path);

}  // namespace semirelax::spectral
