#include "gq/stable_poses.hpp"

#include <algorithm>
#include <cmath>

#include "gq/common.hpp"
#include "gq/rng.hpp"

namespace gq {

namespace {

Vec3 project_to_facet_plane(const ConvexHull& hull, int f, const Vec3& p) {
  const auto& facet = hull.facets[f];
  return p - facet.normal * (facet.normal.dot(p) - facet.offset);
}

// Facet through which the ray com + t*d (t > 0) exits the hull.
int exit_facet(const ConvexHull& hull, const Vec3& com, const Vec3& d) {
  int best = -1;
  double best_t = std::numeric_limits<double>::infinity();
  for (int f = 0; f < static_cast<int>(hull.facets.size()); ++f) {
    const auto& facet = hull.facets[f];
    const double denom = facet.normal.dot(d);
    if (denom <= 1e-12) continue;
    const double t = (facet.offset - facet.normal.dot(com)) / denom;
    if (t <= 0.0) continue;
    const Vec3 q = com + t * d;
    if (hull.facet_contains(f, q, 1e-9) && t < best_t) {
      best_t = t;
      best = f;
    }
  }
  return best;
}

// Quasi-static settling: topple across the most-violated edge until the COM
// projection falls inside the supporting facet. Returns the resting facet or
// -1 if the walk fails to terminate.
int settle(const ConvexHull& hull, const Vec3& com, int facet) {
  const int max_steps = 4 * static_cast<int>(hull.facets.size()) + 64;
  for (int step = 0; step < max_steps; ++step) {
    const auto& f = hull.facets[facet];
    const Vec3 q = project_to_facet_plane(hull, facet, com);
    int worst_edge = -1;
    double worst = -1e-12;
    const int n = static_cast<int>(f.loop.size());
    for (int i = 0; i < n; ++i) {
      const Vec3& a = hull.vertices[f.loop[i]];
      const Vec3& b = hull.vertices[f.loop[(i + 1) % n]];
      const Vec3 e = b - a;
      const double len = e.norm();
      if (len < 1e-15) continue;
      const double s = e.cross(q - a).dot(f.normal) / len;  // >0 inside
      if (-s > worst) {
        worst = -s;
        worst_edge = i;
      }
    }
    if (worst <= 1e-12) return facet;  // stable here
    const int nb = f.neighbors[worst_edge];
    if (nb < 0) return -1;
    facet = nb;
  }
  return -1;
}

}  // namespace

std::vector<StablePose> compute_stable_poses(const TriangleMesh& mesh,
                                             const MassProperties& props,
                                             const StablePoseConfig& config) {
  const ConvexHull hull = convex_hull_3d(mesh.vertices);
  return compute_stable_poses(hull, props.center_of_mass, config);
}

std::vector<StablePose> compute_stable_poses(const ConvexHull& hull,
                                             const Vec3& com,
                                             const StablePoseConfig& config) {
  const int nf = static_cast<int>(hull.facets.size());
  std::vector<int> counts(nf, 0);
  Rng rng(derive_seed(config.seed, "stable_poses"));

  int terminated = 0;
  for (int s = 0; s < config.tumble_samples; ++s) {
    const Vec3 d = rng.unit_vector();
    const int start = exit_facet(hull, com, d);
    if (start < 0) continue;
    const int rest = settle(hull, com, start);
    if (rest < 0) continue;
    ++counts[rest];
    ++terminated;
  }
  if (terminated < config.tumble_samples)
    log_warn("tumbling samples failed to settle",
             {{"failed", std::to_string(config.tumble_samples - terminated)}});

  std::vector<StablePose> poses;
  const Vec3 down(0.0, 0.0, -1.0);
  for (int f = 0; f < nf; ++f) {
    // Candidate facets: COM projects strictly inside.
    const Vec3 q = project_to_facet_plane(hull, f, com);
    if (!hull.facet_contains(f, q, -1e-9)) continue;
    const double p = static_cast<double>(counts[f]) /
                     static_cast<double>(config.tumble_samples);
    if (p <= config.threshold) continue;
    StablePose pose;
    pose.rotation = rotation_between(hull.facets[f].normal, down);
    pose.probability = p;
    pose.facet = f;
    poses.push_back(pose);
  }
  std::sort(poses.begin(), poses.end(), [](const StablePose& a, const StablePose& b) {
    return a.probability > b.probability;
  });
  return poses;
}

double resting_height(const TriangleMesh& mesh, const Mat3& rotation) {
  double min_z = std::numeric_limits<double>::infinity();
  for (const auto& v : mesh.vertices) min_z = std::min(min_z, (rotation * v).z());
  return -min_z;
}

}  // namespace gq
