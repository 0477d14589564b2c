#include "semirelax/runner/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "semirelax/errors.hpp"

namespace semirelax::runner {

namespace {

constexpr double kWidth = 640, kHeight = 400, kLeft = 80, kRight = 20, kTop = 40, kBottom = 50;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Line chart of already-transformed coordinates; tick labels come from `label`.
std::string chart(std::span<const double> x, std::span<const double> y, const std::string& title,
                  const std::string& x_label, const std::string& y_label, auto&& label) {
  double x0 = *std::min_element(x.begin(), x.end()), x1 = *std::max_element(x.begin(), x.end());
  double y0 = *std::min_element(y.begin(), y.end()), y1 = *std::max_element(y.begin(), y.end());
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double w = kWidth - kLeft - kRight, h = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (v - x0) / (x1 - x0) * w; };
  auto py = [&](double v) { return kTop + (y1 - v) / (y1 - y0) * h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
     << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << w << "\" height=\"" << h
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    os << "<text x=\"" << fmt("%.2f", px(xv)) << "\" y=\"" << kHeight - kBottom + 16
       << "\" text-anchor=\"middle\" font-size=\"11\">" << label(xv, true) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt("%.2f", py(yv) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << label(yv, false) << "</text>\n";
  }
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\" font-size=\"12\">"
     << escape(x_label) << "</text>\n";
  os << "<text x=\"14\" y=\"" << kHeight / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 " << kHeight / 2
     << ")\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << fmt("%.4f", px(x[i])) << ',' << fmt("%.4f", py(y[i]));
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path.string());
  os << text;
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv, const std::filesystem::path& out_dir) {
  std::ifstream is(csv);
  if (!is) throw IoError("diagnostics CSV not found: " + csv.string());
  std::string line;
  if (!std::getline(is, line)) throw ParseError(1, "empty diagnostics CSV");
  std::vector<std::string> names;
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) names.push_back(name);
  }
  if (names.size() < 2) throw ParseError(1, "diagnostics CSV needs a time column and at least one data column");
  std::vector<std::vector<double>> cols(names.size());
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c >= names.size()) throw ParseError(lineno, "too many columns");
      try {
        cols[c++].push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError(lineno, "not a number: '" + cell + "'");
      }
    }
    if (c != names.size()) throw ParseError(lineno, "expected " + std::to_string(names.size()) + " columns");
  }
  if (cols[0].empty()) throw ParseError(2, "diagnostics CSV has no data rows");

  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto label = [](double v, bool) { return fmt("%.4g", v); };
  for (std::size_t c = 1; c < names.size(); ++c) {
    const auto path = out_dir / (names[c] + ".svg");
    write(path, chart(cols[0], cols[c], names[c] + " against t", names[0], names[c], label));
    written.push_back(path);
  }
  return written;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs two or more (x, y) pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive values");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope fit needs at least two distinct x values");
  return (n * sxy - sx * sy) / denom;
}

double write_refinement_plot(std::span<const double> x, std::span<const double> y, const std::string& title,
                             const std::string& x_label, const std::string& y_label,
                             const std::filesystem::path& svg) {
  const double slope = loglog_slope(x, y);
  std::vector<double> lx(x.size()), ly(y.size());
  std::transform(x.begin(), x.end(), lx.begin(), [](double v) { return std::log10(v); });
  std::transform(y.begin(), y.end(), ly.begin(), [](double v) { return std::log10(v); });
  auto label = [](double v, bool) { return fmt("%.3g", std::pow(10.0, v)); };
  if (svg.has_parent_path()) std::filesystem::create_directories(svg.parent_path());
  write(svg, chart(lx, ly, title + " (slope = " + fmt("%.6f", slope) + ")", x_label, y_label, label));
  return slope;
}

}  // namespace semirelax::runner
