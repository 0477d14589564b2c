#pragma once

#include <filesystem>
#include <iosfwd>

#include "semirelax/radial/profile.hpp"

namespace semirelax::radial {

// Profile text format: line 1 "M R", then M lines "re im" (17 digits).

void write_profile(std::ostream& os, const RadialProfile& f);
void write_profile(const std::filesystem::path& path, const RadialProfile& f);
/// Throws ParseError (with line number) on malformed input.
RadialProfile read_profile(std::istream& is);
RadialProfile read_profile(const std::filesystem::path& path);

/// Same directory layout as propagator::write_trajectory.
void write_radial_trajectory(const std::filesystem::path& dir, const RadialTrajectory& traj);
RadialTrajectory read_radial_trajectory(const std::filesystem::path& dir);

}  // namespace semirelax::radial
