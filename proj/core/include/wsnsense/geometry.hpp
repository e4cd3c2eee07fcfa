#ifndef WSNSENSE_GEOMETRY_HPP
#define WSNSENSE_GEOMETRY_HPP

#include <cmath>

namespace wsnsense {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2& a, const Vec2& b) = default;
};

inline double dist_sq(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(const Vec2& a, const Vec2& b) {
  return std::sqrt(dist_sq(a, b));
}

}  // namespace wsnsense

#endif
