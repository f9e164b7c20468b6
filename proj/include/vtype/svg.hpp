#pragma once

#include <span>
#include <string>
#include <vector>

#include "vtype/contour.hpp"

namespace vtype::svg {

struct Line {
  std::string label;
  std::vector<std::vector<Point2>> runs;  // separate runs leave gaps between them
  bool emphasized = false;                // drawn solid red, others cycle colours
};

struct Panel {
  std::string title;
  std::string x_label;
  std::vector<Line> lines;
};

/// Panels stacked vertically with auto-scaled axes. Output depends only on the
/// input values; no timestamps or locale.
std::string render(std::span<const Panel> panels);

}  // namespace vtype::svg
