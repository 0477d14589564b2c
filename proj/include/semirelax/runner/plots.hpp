#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace semirelax::runner {

/// Writes one SVG line chart per data column of a diagnostics CSV (x = t)
/// into out_dir as <column>.svg and returns the paths. The plot is a pure
/// function of the CSV text. Throws IoError if the CSV is missing and
/// ParseError if it has no data rows.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv, const std::filesystem::path& out_dir);

/// Least-squares slope of log(y) against log(x). Needs two or more points,
/// all positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Log-log chart of y against x with the fitted slope printed in the title
/// line ("slope = %.6f"). Returns the slope.
double write_refinement_plot(std::span<const double> x, std::span<const double> y, const std::string& title,
                             const std::string& x_label, const std::string& y_label,
                             const std::filesystem::path& svg);

}  // namespace semirelax::runner
