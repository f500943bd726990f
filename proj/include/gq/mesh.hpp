#pragma once

#include <array>
#include <string>
#include <vector>

#include "gq/geometry.hpp"

namespace gq {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  bool empty() const { return vertices.empty() || faces.empty(); }

  Vec3 face_normal(int f) const {
    const auto& t = faces[f];
    const Vec3 n = (vertices[t[1]] - vertices[t[0]])
                       .cross(vertices[t[2]] - vertices[t[0]]);
    const double len = n.norm();
    return len > 0.0 ? Vec3(n / len) : Vec3::Zero();
  }

  double face_area(int f) const {
    const auto& t = faces[f];
    return 0.5 * (vertices[t[1]] - vertices[t[0]])
                     .cross(vertices[t[2]] - vertices[t[0]])
                     .norm();
  }

  Eigen::AlignedBox3d bounding_box() const {
    Eigen::AlignedBox3d box;
    for (const auto& v : vertices) box.extend(v);
    return box;
  }

  double surface_area() const {
    double a = 0.0;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) a += face_area(f);
    return a;
  }

  TriangleMesh transformed(const Iso3& t) const {
    TriangleMesh out = *this;
    for (auto& v : out.vertices) v = t * v;
    return out;
  }
};

struct MassProperties {
  double mass = 0.0;
  Vec3 center_of_mass = Vec3::Zero();
};

// Wavefront OBJ input: `v` and `f` records, 1-indexed; polygon faces are
// fan-triangulated; normals/texcoords ignored. Degenerate faces
// (area < 1e-12 m^2) are dropped. Units: meters.
TriangleMesh load_obj(const std::string& path);
void save_obj(const TriangleMesh& mesh, const std::string& path);

struct PreprocessResult {
  TriangleMesh mesh;
  MassProperties props;
  double scale = 1.0;  // uniform rescale applied
};

// Aligns the mesh to the principal axes of its vertex covariance, centers it
// on the bounding-box center, rescales so the minimal bounding-box extent
// fits the gripper width, and assigns a 1.0 kg mass at the box center.
PreprocessResult preprocess_mesh(const TriangleMesh& mesh,
                                 double gripper_width);

}  // namespace gq
