#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gq/geometry.hpp"

namespace gq {

struct Contact {
  Vec3 point;     // meters
  Vec3 normal;    // inward unit normal (into the object)
  double friction = 0.5;
  // Equivariant tangent anchor: when nonzero, the first cone tangent is built
  // from this direction so the discretized cone rotates with the scene.
  Vec3 tangent_anchor = Vec3::Zero();
};

// Finite set of contact wrenches. Wrenches are d-dimensional with the force
// block first; 3D grasps use d=6 (force, torque * lambda) and planar slices
// use d=3 (fx, fy, torque * lambda).
struct WrenchSet {
  std::vector<Eigen::VectorXd> wrenches;

  int dim() const { return wrenches.empty() ? 0 : static_cast<int>(wrenches[0].size()); }
  bool empty() const { return wrenches.empty(); }
  void append(const WrenchSet& other) {
    wrenches.insert(wrenches.end(), other.wrenches.begin(), other.wrenches.end());
  }
};

struct ConeConfig {
  int num_edges = 8;
  // Soft-finger torsional resistance: torsion = coefficient * friction per
  // unit normal force. Zero disables the torsional wrench pair.
  double torsion_coefficient = 0.005;
};

// Cone-boundary force wrenches (unit normal force component) about `com`,
// torques scaled by `torque_scale`, plus the +/- torsional wrench pair.
// A frictionless contact collapses to the single normal wrench.
WrenchSet friction_cone_wrenches(const Contact& contact, int num_edges,
                                 const Vec3& com, double torque_scale,
                                 double torsion_coefficient = 0.005);

// Minimum-norm point of the convex hull of `points` (Wolfe's algorithm).
Eigen::VectorXd min_norm_point(const std::vector<Eigen::VectorXd>& points,
                               double tol = 1e-12, int max_iter = 2000);

// True iff the origin lies in the interior of the convex hull of the
// wrenches: the min-norm point has norm < 1e-9 and the support function is
// positive in every +/- basis direction.
bool force_closure(const WrenchSet& ws);

struct EpsilonConfig {
  int directions = 1000;   // sampled unit directions
  int descent_steps = 20;  // projected gradient refinements per direction
};

// Ferrari-Canny epsilon metric: distance from the origin to the boundary of
// the grasp wrench space, or 0 when force closure fails. Estimated by
// minimizing the support function over sampled directions with projected
// gradient refinement and an active-facet polish; every evaluation is an
// upper bound on the true distance.
double epsilon_quality(const WrenchSet& ws, const EpsilonConfig& config = {});

// Torque scale used throughout: 1 / (max distance from COM to any vertex).
double torque_scale_for(const std::vector<Vec3>& vertices, const Vec3& com);

}  // namespace gq
