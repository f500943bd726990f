#pragma once

#include <cstdint>
#include <vector>

#include "gq/convex_hull.hpp"
#include "gq/mesh.hpp"

namespace gq {

struct StablePose {
  Mat3 rotation;       // object frame -> table frame; resting normal maps to -z
  double probability;  // quasi-static occurrence probability
  int facet;           // hull facet the object rests on
};

struct StablePoseConfig {
  double threshold = 0.01;
  int tumble_samples = 10000;
  std::uint64_t seed = 0;
};

// Candidate poses are hull facets whose plane projection of the center of
// mass lies strictly inside the facet. Occurrence probabilities are estimated
// by tumbling uniformly random orientations quasi-statically: the object
// falls onto the facet its gravity ray exits through, then topples across the
// most-violated facet edge until the center of mass projects inside the
// supporting facet. Results are filtered by threshold and sorted by
// descending probability.
std::vector<StablePose> compute_stable_poses(const TriangleMesh& mesh,
                                             const MassProperties& props,
                                             const StablePoseConfig& config);

std::vector<StablePose> compute_stable_poses(const ConvexHull& hull,
                                             const Vec3& com,
                                             const StablePoseConfig& config);

// Height offset that places the rotated mesh on the z=0 plane.
double resting_height(const TriangleMesh& mesh, const Mat3& rotation);

}  // namespace gq
