#pragma once

#include <array>
#include <vector>

#include "gq/geometry.hpp"

namespace gq {

// 3D convex hull with outward-oriented triangles and coplanar triangles
// merged into polygonal facets (a cube yields 6 facets, not 12 triangles).
struct ConvexHull {
  std::vector<Vec3> vertices;                  // hull vertices only
  std::vector<std::array<int, 3>> triangles;   // outward winding

  struct Facet {
    Vec3 normal;                 // outward unit normal
    double offset;               // plane: normal . x = offset
    std::vector<int> loop;       // boundary vertices, CCW from outside
    std::vector<int> neighbors;  // facet index across loop edge (i, i+1)
  };
  std::vector<Facet> facets;

  bool contains(const Vec3& p, double tol = 1e-9) const;

  // Signed distance from p to the facet plane (positive outside).
  double facet_plane_distance(int f, const Vec3& p) const {
    return facets[f].normal.dot(p) - facets[f].offset;
  }

  // True if the in-plane point q lies inside facet f's polygon, with `tol`
  // slack on each edge half-plane (negative tol demands strict interiority).
  bool facet_contains(int f, const Vec3& q, double tol) const;
};

// Builds the hull of at least 4 affinely independent points. Coplanar or
// otherwise degenerate input raises DegenerateGeometryError.
ConvexHull convex_hull_3d(const std::vector<Vec3>& points);

}  // namespace gq
