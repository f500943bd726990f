#include "gq/grasp.hpp"

#include <algorithm>
#include <cmath>

#include "gq/common.hpp"
#include "gq/rng.hpp"

namespace gq {

std::vector<RayHit> intersect_mesh(const TriangleMesh& mesh, const Ray& ray,
                                   double t_min) {
  std::vector<RayHit> hits;
  for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
    const auto& tri = mesh.faces[f];
    const auto t = ray_triangle_intersect(ray, mesh.vertices[tri[0]],
                                          mesh.vertices[tri[1]],
                                          mesh.vertices[tri[2]], t_min);
    if (t) hits.push_back({*t, f});
  }
  std::sort(hits.begin(), hits.end(),
            [](const RayHit& a, const RayHit& b) { return a.t < b.t; });
  return hits;
}

std::optional<GraspContacts> grasp_contacts(const TriangleMesh& mesh,
                                            const Grasp3D& grasp,
                                            double friction) {
  const double half = 0.5 * grasp.max_width;
  Ray ray{grasp.center - grasp.axis * (half * 1.5), grasp.axis};
  const auto hits = intersect_mesh(mesh, ray, 1e-9);
  if (hits.size() < 2) return std::nullopt;

  const RayHit& entry = hits.front();
  const RayHit& exit = hits.back();
  const double width = exit.t - entry.t;
  if (width <= 1e-9 || width > grasp.max_width + 1e-9) return std::nullopt;
  // Both jaws must be able to reach their contact from outside the opening.
  if (entry.t < half * 1.5 - half - 1e-9) return std::nullopt;
  if (exit.t > half * 1.5 + half + 1e-9) return std::nullopt;

  auto inward_normal = [&](int face, const Vec3& jaw_dir) {
    Vec3 n = mesh.face_normal(face);
    // Winding-robust: the inward normal opposes the approaching jaw.
    if (n.dot(jaw_dir) < 0.0) n = -n;
    return n;
  };

  GraspContacts out;
  out.width = width;
  out.first.point = ray.origin + entry.t * ray.dir;
  out.first.normal = inward_normal(entry.face, grasp.axis);
  out.first.friction = friction;
  out.second.point = ray.origin + exit.t * ray.dir;
  out.second.normal = inward_normal(exit.face, -grasp.axis);
  out.second.friction = friction;

  // Equivariant tangent anchor; falls back to a canonical perpendicular for
  // exactly axis-aligned contacts inside friction_cone_wrenches.
  const Vec3 anchor = grasp.axis.cross(out.first.normal);
  out.first.tangent_anchor = anchor;
  out.second.tangent_anchor = anchor;
  return out;
}

namespace {

bool antipodal(const GraspContacts& contacts, const Vec3& axis, double friction,
               double slack = 1e-9) {
  const double cone_cos = std::cos(std::atan(friction) + slack);
  return axis.dot(contacts.first.normal) >= cone_cos &&
         (-axis).dot(contacts.second.normal) >= cone_cos;
}

}  // namespace

std::vector<Grasp3D> sample_antipodal_grasps_3d(const TriangleMesh& mesh,
                                                const AntipodalSampleConfig& config) {
  if (config.max_grasps < 1)
    throw ConfigError("sample_antipodal_grasps_3d: max_grasps < 1");
  Rng rng(derive_seed(config.seed, "antipodal3d"));

  // Area-weighted cumulative face distribution.
  std::vector<double> cumulative(mesh.faces.size());
  double total = 0.0;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    total += mesh.face_area(static_cast<int>(f));
    cumulative[f] = total;
  }
  if (total <= 0.0) throw EmptyGeometryError("sample_antipodal_grasps_3d: zero area");

  std::vector<Grasp3D> grasps;
  const long budget =
      static_cast<long>(config.budget_factor) * config.max_grasps;
  const double cone_angle = std::atan(config.friction);

  for (long attempt = 0;
       attempt < budget && static_cast<int>(grasps.size()) < config.max_grasps;
       ++attempt) {
    // Surface point, area-weighted.
    const double r = rng.uniform() * total;
    const int face = static_cast<int>(
        std::lower_bound(cumulative.begin(), cumulative.end(), r) -
        cumulative.begin());
    double b0 = rng.uniform(), b1 = rng.uniform();
    if (b0 + b1 > 1.0) {
      b0 = 1.0 - b0;
      b1 = 1.0 - b1;
    }
    const auto& tri = mesh.faces[face];
    const Vec3 p1 = mesh.vertices[tri[0]] +
                    b0 * (mesh.vertices[tri[1]] - mesh.vertices[tri[0]]) +
                    b1 * (mesh.vertices[tri[2]] - mesh.vertices[tri[0]]);

    // Direction inside the friction cone of the inward normal; the inward
    // orientation is fixed by requiring the cast to enter the object.
    Vec3 n_in = mesh.face_normal(face);
    if (n_in.isZero(0.0)) continue;
    const double cos_max = std::cos(cone_angle);
    const double cos_theta = 1.0 - rng.uniform() * (1.0 - cos_max);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const Vec3 t1 = any_perpendicular(n_in);
    const Vec3 t2 = n_in.cross(t1);
    Vec3 dir = cos_theta * n_in + sin_theta * (std::cos(phi) * t1 + std::sin(phi) * t2);

    // Probe both orientations; keep the one that crosses the body.
    auto probe = [&](const Vec3& d) -> std::optional<Vec3> {
      const auto hits = intersect_mesh(mesh, Ray{p1, d}, 1e-9);
      if (hits.empty()) return std::nullopt;
      const Vec3 p2 = p1 + hits.back().t * d;
      if ((p2 - p1).norm() > config.max_width) return std::nullopt;
      return p2;
    };
    std::optional<Vec3> p2 = probe(dir);
    if (!p2) {
      dir = -dir;
      p2 = probe(dir);
    }
    if (!p2) continue;
    if ((*p2 - p1).norm() < 1e-6) continue;

    Grasp3D grasp;
    grasp.center = 0.5 * (p1 + *p2);
    grasp.axis = (*p2 - p1).normalized();
    grasp.max_width = config.max_width;

    const auto contacts = grasp_contacts(mesh, grasp, config.friction);
    if (!contacts) continue;
    if (!antipodal(*contacts, grasp.axis, config.friction)) continue;

    // Surface coverage: drop near-duplicates of an accepted grasp.
    bool duplicate = false;
    for (const auto& g : grasps) {
      if ((g.center - grasp.center).norm() >= config.min_center_distance) continue;
      const double cosang = std::abs(g.axis.dot(grasp.axis));
      if (std::acos(std::min(1.0, cosang)) < config.min_axis_angle) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    grasps.push_back(grasp);
  }

  if (grasps.empty())
    log_warn("no antipodal grasps found within budget",
             {{"budget", std::to_string(budget)}});
  return grasps;
}

}  // namespace gq
