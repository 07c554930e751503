#include "hivelab/matriochka.hpp"

#include "hivelab/errors.hpp"

#include <algorithm>
#include <map>

namespace hivelab {

namespace {

using Point = std::pair<Int, Int>;

Int cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool inside(const std::vector<Point>& hull, const Point& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], p) != 0) return false;
    return std::min(hull[0], hull[1]) <= p && p <= std::max(hull[0], hull[1]);
  }
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

} // namespace

MatriochkaReport matriochka_check(const Weight& lam, const Weight& mu, const HiveOptions& opts) {
  if (lam.n != 3 || mu.n != 3) throw RankMismatch("matriochka check is for SU(3)");
  std::map<Point, Count> mult;
  MatriochkaReport rep;
  for (const auto& e : tensor_decompose(lam, mu, opts)) {
    mult[{e.nu.labels[0], e.nu.labels[1]}] = e.multiplicity;
    rep.max_multiplicity = std::max(rep.max_multiplicity, e.multiplicity);
  }
  Int lo1 = 0, hi1 = 0, hi2 = 0;
  for (const auto& [p, _] : mult) {
    hi1 = std::max(hi1, p.first);
    hi2 = std::max(hi2, p.second);
  }
  auto level_points = [&](Count m) {
    std::vector<Point> pts;
    for (const auto& [p, c] : mult)
      if (c >= m) pts.push_back(p);
    return pts;
  };

  rep.pass = rep.max_multiplicity > 0;
  for (Count m = 1; m <= rep.max_multiplicity; ++m) {
    MatriochkaLevel level;
    level.m = m;
    std::vector<Point> pts = level_points(m);
    std::vector<Point> hull = convex_hull(pts);
    level.points = pts.size();
    level.hull_vertices = hull.size();

    level.nested = true;
    for (const Point& p : convex_hull(level_points(m + 1)))
      if (!inside(hull, p)) level.nested = false;

    level.lattice_convex = true;
    for (Int a = lo1; a <= hi1; ++a)
      for (Int b = 0; b <= hi2; ++b) {
        Point p{a, b};
        if (!is_compatible(Triple(lam, mu, Weight(3, {a, b})))) continue;
        if (!inside(hull, p)) continue;
        auto it = mult.find(p);
        if (it == mult.end() || it->second < m) level.lattice_convex = false;
      }
    rep.pass = rep.pass && level.nested && level.lattice_convex;
    rep.levels.push_back(level);
  }
  return rep;
}

} // namespace hivelab
