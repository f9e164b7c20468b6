#include "vtype/contour.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace vtype {

namespace {

// Edge ids: 2*(iy*nx+ix) is the edge from (ix,iy) to (ix+1,iy), +1 the edge
// from (ix,iy) to (ix,iy+1).
using EdgeId = std::uint64_t;

struct Segment {
  EdgeId a;
  EdgeId b;
};

class IsolineBuilder {
 public:
  IsolineBuilder(const ScalarGrid& g, double level)
      : g_(g), nx_(g.x_axis.size()), ny_(g.y_axis.size()), level_(level) {}

  std::vector<Polyline> run() {
    if (nx_ < 2 || ny_ < 2 || g_.values.size() != nx_ * ny_) return {};
    collect_segments();
    return stitch();
  }

 private:
  double value(std::size_t ix, std::size_t iy) const { return g_.values[iy * nx_ + ix]; }

  EdgeId horizontal(std::size_t ix, std::size_t iy) const { return 2 * (iy * nx_ + ix); }
  EdgeId vertical(std::size_t ix, std::size_t iy) const { return 2 * (iy * nx_ + ix) + 1; }

  Point2 crossing(EdgeId e) const {
    const std::size_t node = e / 2;
    const std::size_t ix = node % nx_;
    const std::size_t iy = node / nx_;
    const bool is_vertical = e % 2 == 1;
    const std::size_t jx = is_vertical ? ix : ix + 1;
    const std::size_t jy = is_vertical ? iy + 1 : iy;
    const double v0 = value(ix, iy);
    const double v1 = value(jx, jy);
    const double t = v1 == v0 ? 0.5 : (level_ - v0) / (v1 - v0);
    return {g_.x_axis[ix] + t * (g_.x_axis[jx] - g_.x_axis[ix]),
            g_.y_axis[iy] + t * (g_.y_axis[jy] - g_.y_axis[iy])};
  }

  void collect_segments() {
    for (std::size_t iy = 0; iy + 1 < ny_; ++iy) {
      for (std::size_t ix = 0; ix + 1 < nx_; ++ix) {
        // corners counter-clockwise from the lower left
        const std::array<double, 4> v = {value(ix, iy), value(ix + 1, iy), value(ix + 1, iy + 1),
                                         value(ix, iy + 1)};
        if (!std::isfinite(v[0]) || !std::isfinite(v[1]) || !std::isfinite(v[2]) ||
            !std::isfinite(v[3]))
          continue;
        unsigned mask = 0;
        for (unsigned k = 0; k < 4; ++k)
          if (v[k] >= level_) mask |= 1u << k;
        if (mask == 0 || mask == 15) continue;

        const EdgeId bottom = horizontal(ix, iy);
        const EdgeId right = vertical(ix + 1, iy);
        const EdgeId top = horizontal(ix, iy + 1);
        const EdgeId left = vertical(ix, iy);

        switch (mask) {
          case 1: case 14: add(left, bottom); break;
          case 2: case 13: add(bottom, right); break;
          case 3: case 12: add(left, right); break;
          case 4: case 11: add(right, top); break;
          case 6: case 9: add(bottom, top); break;
          case 7: case 8: add(left, top); break;
          case 5: case 10: {
            const bool centre_inside = 0.25 * (v[0] + v[1] + v[2] + v[3]) >= level_;
            // mask 5: lower-left and upper-right inside
            if ((mask == 5) == centre_inside) {
              add(left, top);
              add(bottom, right);
            } else {
              add(left, bottom);
              add(right, top);
            }
            break;
          }
          default: break;
        }
      }
    }
  }

  void add(EdgeId a, EdgeId b) {
    const std::size_t id = segments_.size();
    segments_.push_back({a, b});
    incident_[a].push_back(id);
    incident_[b].push_back(id);
  }

  // Follows unused segments from `edge`, appending crossing points.
  void walk(EdgeId edge, std::vector<Point2>& pts, std::vector<bool>& used) const {
    while (true) {
      const auto it = incident_.find(edge);
      std::size_t next = segments_.size();
      for (std::size_t s : it->second)
        if (!used[s]) {
          next = s;
          break;
        }
      if (next == segments_.size()) return;
      used[next] = true;
      edge = segments_[next].a == edge ? segments_[next].b : segments_[next].a;
      pts.push_back(crossing(edge));
    }
  }

  std::vector<Polyline> stitch() const {
    std::vector<Polyline> out;
    std::vector<bool> used(segments_.size(), false);

    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used[s]) continue;
      for (EdgeId end : {segments_[s].a, segments_[s].b}) {
        if (incident_.at(end).size() != 1) continue;
        Polyline line{level_, {crossing(end)}, false};
        walk(end, line.points, used);
        out.push_back(std::move(line));
        break;
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used[s]) continue;
      const EdgeId start = segments_[s].a;
      Polyline loop{level_, {crossing(start)}, true};
      walk(start, loop.points, used);
      out.push_back(std::move(loop));
    }
    return out;
  }

  const ScalarGrid& g_;
  std::size_t nx_;
  std::size_t ny_;
  double level_;
  std::vector<Segment> segments_;
  std::unordered_map<EdgeId, std::vector<std::size_t>> incident_;
};

}  // namespace

std::vector<Polyline> extract_isolines(const ScalarGrid& grid, double level) {
  return IsolineBuilder(grid, level).run();
}

}  // namespace vtype
