#pragma once

#include <cstdint>

#include "gq/grasp.hpp"
#include "gq/wrench.hpp"

namespace gq {

struct PerturbationConfig {
  // Friction prior: truncated N(mean, sigma^2) on [0, 1].
  double friction_mean = 0.5;
  double friction_sigma = 0.1;
  // Gripper pose uncertainty.
  double gripper_translation_sigma = 0.005;  // meters, isotropic
  double gripper_rotation_sigma = 0.02;      // radians about a random axis
  // Object pose uncertainty, planar in the object frame.
  double object_translation_sigma = 0.005;   // meters in xy
  double object_rotation_sigma = 0.02;       // radians about z
  int num_samples = 25;
  ConeConfig cone;
  EpsilonConfig epsilon;
};

// Deterministic epsilon for a grasp at a fixed friction: contacts re-derived
// by ray casting, zero when contact is lost.
double grasp_epsilon(const TriangleMesh& mesh, const Grasp3D& grasp,
                     double friction, const Vec3& com, double torque_scale,
                     const ConeConfig& cone = {}, const EpsilonConfig& eps = {});

// Robust epsilon quality E_Q: mean epsilon over Monte-Carlo draws of
// friction, gripper pose, and object pose. Lost contacts score zero.
double robust_epsilon_quality(const TriangleMesh& mesh, const Grasp3D& grasp,
                              const MassProperties& props,
                              const PerturbationConfig& config,
                              std::uint64_t seed);

struct GraspLabel {
  double epsilon = 0.0;      // at the nominal friction
  double robust_epsilon = 0.0;
  bool collision_free = false;
  int success = 0;
};

// Success model: 1 iff E_Q > delta and the grasp is collision-free.
inline int success_label(double robust_epsilon, bool collision_free, double delta) {
  return (robust_epsilon > delta && collision_free) ? 1 : 0;
}

}  // namespace gq
