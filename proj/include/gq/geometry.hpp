#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <optional>

namespace gq {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Iso3 = Eigen::Isometry3d;

// Minimal rotation mapping unit vector `from` onto unit vector `to`.
inline Mat3 rotation_between(const Vec3& from, const Vec3& to) {
  return Eigen::Quaterniond::FromTwoVectors(from, to).toRotationMatrix();
}

// Deterministic unit vector perpendicular to n.
inline Vec3 any_perpendicular(const Vec3& n) {
  Vec3 a = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (a - n * n.dot(a)).normalized();
}

struct Ray {
  Vec3 origin;
  Vec3 dir;  // unit length
};

// Moller-Trumbore. Returns the ray parameter t of the hit, front or back
// facing, with t > t_min.
std::optional<double> ray_triangle_intersect(const Ray& ray, const Vec3& v0,
                                             const Vec3& v1, const Vec3& v2,
                                             double t_min = 0.0);

struct OrientedBox {
  Vec3 center;
  Mat3 axes;          // columns are the local axes
  Vec3 half_extents;  // positive

  Vec3 corner(int i) const {
    return center + axes * Vec3((i & 1) ? half_extents.x() : -half_extents.x(),
                                (i & 2) ? half_extents.y() : -half_extents.y(),
                                (i & 4) ? half_extents.z() : -half_extents.z());
  }
  double min_z() const;
  bool contains(const Vec3& p) const;
};

// Separating-axis test between an oriented box and a triangle.
bool box_triangle_intersect(const OrientedBox& box, const Vec3& a,
                            const Vec3& b, const Vec3& c);

}  // namespace gq
