#include "gq/geometry.hpp"

#include <cmath>

namespace gq {

std::optional<double> ray_triangle_intersect(const Ray& ray, const Vec3& v0,
                                             const Vec3& v1, const Vec3& v2,
                                             double t_min) {
  constexpr double kEps = 1e-14;
  const Vec3 e1 = v1 - v0;
  const Vec3 e2 = v2 - v0;
  const Vec3 p = ray.dir.cross(e2);
  const double det = e1.dot(p);
  if (std::abs(det) < kEps) return std::nullopt;
  const double inv_det = 1.0 / det;
  const Vec3 s = ray.origin - v0;
  const double u = s.dot(p) * inv_det;
  if (u < -1e-12 || u > 1.0 + 1e-12) return std::nullopt;
  const Vec3 q = s.cross(e1);
  const double v = ray.dir.dot(q) * inv_det;
  if (v < -1e-12 || u + v > 1.0 + 1e-12) return std::nullopt;
  const double t = e2.dot(q) * inv_det;
  if (t <= t_min) return std::nullopt;
  return t;
}

double OrientedBox::min_z() const {
  double m = center.z();
  for (int k = 0; k < 3; ++k) m -= std::abs(axes(2, k)) * half_extents[k];
  return m;
}

bool OrientedBox::contains(const Vec3& p) const {
  const Vec3 local = axes.transpose() * (p - center);
  return std::abs(local.x()) <= half_extents.x() &&
         std::abs(local.y()) <= half_extents.y() &&
         std::abs(local.z()) <= half_extents.z();
}

namespace {

// Projects a triangle (in box-local coordinates) onto an axis and tests the
// interval against the box extent along the same axis.
bool axis_separates(const Vec3& axis, const Vec3& a, const Vec3& b,
                    const Vec3& c, const Vec3& h) {
  const double pa = axis.dot(a), pb = axis.dot(b), pc = axis.dot(c);
  const double tri_min = std::min({pa, pb, pc});
  const double tri_max = std::max({pa, pb, pc});
  const double r = h.x() * std::abs(axis.x()) + h.y() * std::abs(axis.y()) +
                   h.z() * std::abs(axis.z());
  return tri_min > r || tri_max < -r;
}

}  // namespace

bool box_triangle_intersect(const OrientedBox& box, const Vec3& a,
                            const Vec3& b, const Vec3& c) {
  // Work in box-local coordinates so the box becomes an AABB at the origin.
  const Mat3 rt = box.axes.transpose();
  const Vec3 la = rt * (a - box.center);
  const Vec3 lb = rt * (b - box.center);
  const Vec3 lc = rt * (c - box.center);
  const Vec3& h = box.half_extents;

  // Box face normals.
  for (int k = 0; k < 3; ++k) {
    Vec3 axis = Vec3::Zero();
    axis[k] = 1.0;
    if (axis_separates(axis, la, lb, lc, h)) return false;
  }
  // Triangle normal.
  const Vec3 n = (lb - la).cross(lc - la);
  if (n.squaredNorm() > 1e-24 && axis_separates(n, la, lb, lc, h)) return false;
  // Cross products of box axes with triangle edges.
  const Vec3 edges[3] = {lb - la, lc - lb, la - lc};
  for (int k = 0; k < 3; ++k) {
    Vec3 unit = Vec3::Zero();
    unit[k] = 1.0;
    for (const Vec3& e : edges) {
      const Vec3 axis = unit.cross(e);
      if (axis.squaredNorm() < 1e-24) continue;
      if (axis_separates(axis, la, lb, lc, h)) return false;
    }
  }
  return true;
}

}  // namespace gq
