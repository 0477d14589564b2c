#pragma once

#include <filesystem>

#include "semirelax/propagator/trajectory.hpp"

namespace semirelax::propagator {

// Directory layout: meta.json (config echo, times, snapshot file names) plus
// one snapshot text file per stored time, snapshot_00000.txt, ...

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj);
/// Throws IoError on missing files and ParseError on malformed contents.
Trajectory read_trajectory(const std::filesystem::path& dir);

}  // namespace semirelax::propagator
