#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vtype {

struct Point2 {
  double x;
  double y;
};

struct Polyline {
  double level;
  std::vector<Point2> points;
  bool closed;
};

/// Scalar samples on a rectilinear grid, row-major: values[iy * nx + ix].
struct ScalarGrid {
  std::span<const double> x_axis;
  std::span<const double> y_axis;
  std::span<const double> values;
};

/// Marching squares at one level. Crossings are placed by linear
/// interpolation along cell edges; a corner counts as inside when its value is
/// >= level. Saddle cells are resolved with the cell-centre average. Segments
/// are stitched into polylines through shared edges, open lines first (in the
/// order their first segment was found), then closed loops.
std::vector<Polyline> extract_isolines(const ScalarGrid& grid, double level);

}  // namespace vtype
