#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gq/mesh.hpp"
#include "gq/wrench.hpp"

namespace gq {

struct Grasp3D {
  Vec3 center;      // object frame, meters
  Vec3 axis;        // unit jaw-closing direction
  double max_width = 0.05;
};

struct GripperModel {
  double max_width = 0.05;     // jaw opening
  double jaw_thickness = 0.01; // along the grasp axis
  double jaw_width = 0.02;     // horizontal, perpendicular to the axis
  double jaw_length = 0.06;    // vertical extent of a finger
  double tip_below = 0.01;     // fingertip reach below the grasp center line
  double base_height = 0.02;   // palm block above the fingers
};

struct GraspContacts {
  Contact first;
  Contact second;
  double width = 0.0;
};

// Re-derives the two jaw contacts by casting the grasp line through the mesh:
// the first jaw contacts the nearest entry surface, the second the farthest.
// Returns nullopt when a jaw misses the object or the grasp is wider than
// max_width. Contact tangent anchors are grasp-equivariant.
std::optional<GraspContacts> grasp_contacts(const TriangleMesh& mesh,
                                            const Grasp3D& grasp,
                                            double friction);

struct AntipodalSampleConfig {
  int max_grasps = 100;
  double friction = 0.6;
  double max_width = 0.05;
  int budget_factor = 200;         // attempts = budget_factor * max_grasps
  double min_center_distance = 0.0025;
  double min_axis_angle = 10.0 * M_PI / 180.0;
  std::uint64_t seed = 0;
};

// Rejection samples antipodal contact pairs: a surface point, a direction in
// its friction cone, and the opposite surface hit; accepted when the grasp
// axis lies inside both contact friction cones. Surface coverage is enforced
// by rejecting near-duplicate (center, axis) pairs.
std::vector<Grasp3D> sample_antipodal_grasps_3d(const TriangleMesh& mesh,
                                                const AntipodalSampleConfig& config);

// All parameters of a ray/mesh intersection query.
struct RayHit {
  double t;
  int face;
};
std::vector<RayHit> intersect_mesh(const TriangleMesh& mesh, const Ray& ray,
                                   double t_min = 0.0);

}  // namespace gq
