#include "vtype/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace vtype::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 360.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 160.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 45.0;

constexpr std::array<const char*, 6> kColours = {"#1f4e9c", "#2a8c3c", "#b06a00", "#6b2c91",
                                                 "#444444", "#0a8a8a"};

std::string fixed(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, r.ptr);
}

std::string tick(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, r.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Bounds {
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
};

Bounds bounds_of(const Panel& panel) {
  Bounds b;
  for (const auto& line : panel.lines)
    for (const auto& run : line.runs)
      for (const auto& p : run) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
        b.x0 = std::min(b.x0, p.x);
        b.x1 = std::max(b.x1, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.y1 = std::max(b.y1, p.y);
      }
  if (!(b.x0 <= b.x1)) b = {0.0, 1.0, 0.0, 1.0};
  if (b.x1 == b.x0) b.x1 = b.x0 + 1.0;
  if (b.y1 == b.y0) {
    b.y0 -= 0.5;
    b.y1 += 0.5;
  }
  const double pad = 0.05 * (b.y1 - b.y0);
  b.y0 -= pad;
  b.y1 += pad;
  return b;
}

void render_panel(std::ostringstream& os, const Panel& panel, double offset) {
  const Bounds b = bounds_of(panel);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kPanelHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - b.x0) / (b.x1 - b.x0) * plot_w; };
  auto py = [&](double y) { return offset + kTop + (b.y1 - y) / (b.y1 - b.y0) * plot_h; };

  os << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(offset + kTop) << "\" width=\""
     << fixed(plot_w) << "\" height=\"" << fixed(plot_h)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << fixed(kLeft) << "\" y=\"" << fixed(offset + kTop - 10)
     << "\" font-size=\"14\">" << escape(panel.title) << "</text>\n";
  os << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(offset + kPanelHeight - 8)
     << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(panel.x_label) << "</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = b.x0 + (b.x1 - b.x0) * k / 4.0;
    const double fy = b.y0 + (b.y1 - b.y0) * k / 4.0;
    os << "<text x=\"" << fixed(px(fx)) << "\" y=\"" << fixed(offset + kTop + plot_h + 16)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    os << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(py(fy) + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
  }
  if (b.y0 < 0.0 && b.y1 > 0.0) {
    os << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(py(0.0)) << "\" x2=\""
       << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(py(0.0))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  }

  std::size_t colour = 0;
  double legend_y = offset + kTop + 12;
  for (const auto& line : panel.lines) {
    const char* stroke = line.emphasized ? "#d62020" : kColours[colour++ % kColours.size()];
    const char* dash = line.emphasized ? "" : " stroke-dasharray=\"5,3\"";
    for (const auto& run : line.runs) {
      if (run.size() < 2) continue;
      os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\""
         << (panel.lines.size() > 1 && !line.emphasized ? dash : "") << " points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (i) os << ' ';
        os << fixed(px(run[i].x)) << ',' << fixed(py(run[i].y));
      }
      os << "\"/>\n";
    }
    if (!line.label.empty()) {
      os << "<text x=\"" << fixed(kWidth - kRight + 10) << "\" y=\"" << fixed(legend_y)
         << "\" font-size=\"11\" fill=\"" << stroke << "\">" << escape(line.label) << "</text>\n";
      legend_y += 15;
    }
  }
}

}  // namespace

std::string render(std::span<const Panel> panels) {
  std::ostringstream os;
  const double height = kPanelHeight * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth) << "\" height=\""
     << fixed(height) << "\" viewBox=\"0 0 " << fixed(kWidth) << ' ' << fixed(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i)
    render_panel(os, panels[i], kPanelHeight * static_cast<double>(i));
  os << "</svg>\n";
  return os.str();
}

}  // namespace vtype::svg
