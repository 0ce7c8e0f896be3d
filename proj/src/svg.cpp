#include "banditlab/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "banditlab/csv.hpp"

namespace banditlab {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = kWidth - 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = kHeight - 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf"};

std::string fixed2(double v) {
  char buffer[64];
  const auto res = std::to_chars(buffer, buffer + sizeof(buffer), v,
                                 std::chars_format::fixed, 2);
  return std::string(buffer, res.ptr);
}

// Tick step of the form {1,2,5} * 10^m covering range/target intervals.
double nice_step(double range, int target) {
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm <= 1.0) return mag;
  if (norm <= 2.0) return 2.0 * mag;
  if (norm <= 5.0) return 5.0 * mag;
  return 10.0 * mag;
}

std::string axis_label(double v) {
  if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-3)) {
    char buffer[64];
    const auto res = std::to_chars(buffer, buffer + sizeof(buffer), v,
                                   std::chars_format::scientific, 1);
    return std::string(buffer, res.ptr);
  }
  return format_number(v);
}

}  // namespace

void write_regret_svg(const std::vector<AggregateCurve>& curves,
                      const std::filesystem::path& path, bool log_x) {
  if (curves.empty()) {
    throw std::invalid_argument("write_regret_svg: no curves");
  }
  double x_max = 1.0;
  double x_min_round = std::numeric_limits<double>::max();
  double y_max = 0.0;
  for (const AggregateCurve& curve : curves) {
    for (std::size_t c = 0; c < curve.rounds.size(); ++c) {
      x_max = std::max(x_max, static_cast<double>(curve.rounds[c]));
      x_min_round = std::min(x_min_round, static_cast<double>(curve.rounds[c]));
      y_max = std::max(y_max, curve.mean_regret[c] + curve.stderr_regret[c]);
    }
  }
  if (y_max <= 0.0) {
    y_max = 1.0;
  }
  y_max *= 1.05;

  const double x_lo = log_x ? std::log10(std::max(1.0, x_min_round)) : 0.0;
  const double x_hi = log_x ? std::log10(x_max) : x_max;
  const double x_span = std::max(x_hi - x_lo, 1e-9);

  const auto to_x = [&](double round) {
    const double v = log_x ? std::log10(std::max(1.0, round)) : round;
    return kLeft + (v - x_lo) / x_span * (kRight - kLeft);
  };
  const auto to_y = [&](double regret) {
    return kBottom - regret / y_max * (kBottom - kTop);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
      << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Axes.
  out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kBottom) << "\" x2=\""
      << fixed2(kRight) << "\" y2=\"" << fixed2(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop) << "\" x2=\""
      << fixed2(kLeft) << "\" y2=\"" << fixed2(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // X ticks: powers of ten when log-scaled, nice steps otherwise.
  if (log_x) {
    const int lo_exp = static_cast<int>(std::ceil(x_lo - 1e-9));
    const int hi_exp = static_cast<int>(std::floor(x_hi + 1e-9));
    for (int e = lo_exp; e <= hi_exp; ++e) {
      const double round = std::pow(10.0, e);
      const double x = to_x(round);
      out << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(kBottom) << "\" x2=\""
          << fixed2(x) << "\" y2=\"" << fixed2(kBottom + 5)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      out << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(kBottom + 20)
          << "\" font-size=\"12\" text-anchor=\"middle\">1e" << e << "</text>\n";
    }
  } else {
    const double step = nice_step(x_hi - x_lo, 6);
    for (double v = 0.0; v <= x_hi + 1e-9; v += step) {
      const double x = to_x(v);
      out << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(kBottom) << "\" x2=\""
          << fixed2(x) << "\" y2=\"" << fixed2(kBottom + 5)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      out << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(kBottom + 20)
          << "\" font-size=\"12\" text-anchor=\"middle\">" << axis_label(v)
          << "</text>\n";
    }
  }

  // Y ticks.
  {
    const double step = nice_step(y_max, 6);
    for (double v = 0.0; v <= y_max + 1e-9; v += step) {
      const double y = to_y(v);
      out << "<line x1=\"" << fixed2(kLeft - 5) << "\" y1=\"" << fixed2(y) << "\" x2=\""
          << fixed2(kLeft) << "\" y2=\"" << fixed2(y)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      out << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(y + 4)
          << "\" font-size=\"12\" text-anchor=\"end\">" << axis_label(v) << "</text>\n";
    }
  }

  // Axis labels.
  out << "<text x=\"" << fixed2((kLeft + kRight) / 2) << "\" y=\"" << fixed2(kHeight - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">round</text>\n";
  out << "<text x=\"18\" y=\"" << fixed2((kTop + kBottom) / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fixed2((kTop + kBottom) / 2)
      << ")\">cumulative pseudo-regret</text>\n";

  // Curves.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const AggregateCurve& curve = curves[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t c = 0; c < curve.rounds.size(); ++c) {
      if (c > 0) {
        out << ' ';
      }
      out << fixed2(to_x(static_cast<double>(curve.rounds[c]))) << ','
          << fixed2(to_y(curve.mean_regret[c]));
    }
    out << "\"/>\n";
  }

  // Legend.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double y = kTop + 10.0 + 20.0 * static_cast<double>(i);
    out << "<line x1=\"" << fixed2(kRight + 10) << "\" y1=\"" << fixed2(y) << "\" x2=\""
        << fixed2(kRight + 40) << "\" y2=\"" << fixed2(y) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fixed2(kRight + 46) << "\" y=\"" << fixed2(y + 4)
        << "\" font-size=\"13\">" << curves[i].policy << "</text>\n";
  }

  out << "</svg>\n";
}

}  // namespace banditlab
