#include "gq/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gq/common.hpp"

namespace gq {

namespace {

struct HullTri {
  int v[3];
  Vec3 normal;
  double offset;
  bool alive = true;
};

Vec3 tri_normal(const std::vector<Vec3>& pts, int a, int b, int c) {
  return (pts[b] - pts[a]).cross(pts[c] - pts[a]);
}

}  // namespace

bool ConvexHull::contains(const Vec3& p, double tol) const {
  for (const auto& f : facets)
    if (f.normal.dot(p) - f.offset > tol) return false;
  return true;
}

bool ConvexHull::facet_contains(int f, const Vec3& q, double tol) const {
  const Facet& facet = facets[f];
  const int n = static_cast<int>(facet.loop.size());
  for (int i = 0; i < n; ++i) {
    const Vec3& a = vertices[facet.loop[i]];
    const Vec3& b = vertices[facet.loop[(i + 1) % n]];
    const Vec3 edge = b - a;
    const double len = edge.norm();
    if (len < 1e-15) continue;
    // CCW loop: interior points have positive cross component along normal.
    const double s = edge.cross(q - a).dot(facet.normal) / len;
    if (s < -tol) return false;
  }
  return true;
}

ConvexHull convex_hull_3d(const std::vector<Vec3>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateGeometryError("convex_hull_3d: need at least 4 points");

  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  scale = std::max(scale, 1e-12);
  const double eps = 1e-10 * scale;

  // Initial simplex from extreme points.
  int i0 = 0, i1 = 0;
  {
    double best = -1.0;
    int lo[3], hi[3];
    for (int k = 0; k < 3; ++k) {
      lo[k] = hi[k] = 0;
      for (int i = 1; i < n; ++i) {
        if (points[i][k] < points[lo[k]][k]) lo[k] = i;
        if (points[i][k] > points[hi[k]][k]) hi[k] = i;
      }
      const double d = (points[hi[k]] - points[lo[k]]).norm();
      if (d > best) {
        best = d;
        i0 = lo[k];
        i1 = hi[k];
      }
    }
    if (best < eps) throw DegenerateGeometryError("convex_hull_3d: all points coincide");
  }
  int i2 = -1;
  {
    double best = -1.0;
    const Vec3 dir = (points[i1] - points[i0]).normalized();
    for (int i = 0; i < n; ++i) {
      const Vec3 d = points[i] - points[i0];
      const double dist = (d - dir * dir.dot(d)).norm();
      if (dist > best) {
        best = dist;
        i2 = i;
      }
    }
    if (best < eps) throw DegenerateGeometryError("convex_hull_3d: collinear input");
  }
  int i3 = -1;
  {
    double best = -1.0;
    const Vec3 nrm = tri_normal(points, i0, i1, i2).normalized();
    for (int i = 0; i < n; ++i) {
      const double dist = std::abs(nrm.dot(points[i] - points[i0]));
      if (dist > best) {
        best = dist;
        i3 = i;
      }
    }
    if (best < eps) throw DegenerateGeometryError("convex_hull_3d: coplanar input");
  }

  std::vector<HullTri> tris;
  auto add_tri = [&](int a, int b, int c, const Vec3& interior) {
    HullTri t;
    t.v[0] = a;
    t.v[1] = b;
    t.v[2] = c;
    Vec3 nn = tri_normal(points, a, b, c);
    if (nn.dot(interior - points[a]) > 0.0) {
      std::swap(t.v[1], t.v[2]);
      nn = -nn;
    }
    t.normal = nn.normalized();
    t.offset = t.normal.dot(points[t.v[0]]);
    tris.push_back(t);
  };

  const Vec3 interior =
      (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;
  add_tri(i0, i1, i2, interior);
  add_tri(i0, i1, i3, interior);
  add_tri(i0, i2, i3, interior);
  add_tri(i1, i2, i3, interior);

  // Incremental insertion with horizon detection.
  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      if (tris[t].normal.dot(points[p]) - tris[t].offset > eps)
        visible.push_back(t);
    }
    if (visible.empty()) continue;

    // Horizon: directed edges of visible triangles whose reverse edge is not
    // itself part of a visible triangle.
    std::set<std::pair<int, int>> vis_edges;
    for (int t : visible)
      for (int k = 0; k < 3; ++k)
        vis_edges.insert({tris[t].v[k], tris[t].v[(k + 1) % 3]});
    std::vector<std::pair<int, int>> horizon;
    for (const auto& e : vis_edges)
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    for (int t : visible) tris[t].alive = false;
    for (const auto& [a, b] : horizon) add_tri(a, b, p, interior);
  }

  // Compact triangles and remap vertices.
  ConvexHull hull;
  std::vector<int> vmap(n, -1);
  for (const auto& t : tris) {
    if (!t.alive) continue;
    std::array<int, 3> f{};
    for (int k = 0; k < 3; ++k) {
      if (vmap[t.v[k]] < 0) {
        vmap[t.v[k]] = static_cast<int>(hull.vertices.size());
        hull.vertices.push_back(points[t.v[k]]);
      }
      f[k] = vmap[t.v[k]];
    }
    hull.triangles.push_back(f);
  }
  if (hull.triangles.size() < 4)
    throw DegenerateGeometryError("convex_hull_3d: degenerate hull");

  // Merge coplanar triangles into polygonal facets.
  const int nt = static_cast<int>(hull.triangles.size());
  std::vector<Vec3> tnormals(nt);
  for (int t = 0; t < nt; ++t) {
    const auto& f = hull.triangles[t];
    tnormals[t] = tri_normal(hull.vertices, f[0], f[1], f[2]).normalized();
  }
  std::map<std::pair<int, int>, int> edge_tri;  // directed edge -> triangle
  for (int t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k)
      edge_tri[{hull.triangles[t][k], hull.triangles[t][(k + 1) % 3]}] = t;

  std::vector<int> group(nt, -1);
  int ngroups = 0;
  for (int t = 0; t < nt; ++t) {
    if (group[t] >= 0) continue;
    const int g = ngroups++;
    std::vector<int> stack{t};
    group[t] = g;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        const auto it = edge_tri.find({hull.triangles[cur][(k + 1) % 3],
                                       hull.triangles[cur][k]});
        if (it == edge_tri.end()) continue;
        const int nb = it->second;
        if (group[nb] >= 0) continue;
        if (tnormals[cur].dot(tnormals[nb]) > 1.0 - 1e-8) {
          group[nb] = g;
          stack.push_back(nb);
        }
      }
    }
  }

  hull.facets.resize(ngroups);
  std::map<std::pair<int, int>, int> boundary_owner;  // directed edge -> facet
  for (int g = 0; g < ngroups; ++g) {
    // Area-weighted normal and boundary edges of the group.
    Vec3 nsum = Vec3::Zero();
    std::map<int, int> next;  // boundary edge chain
    for (int t = 0; t < nt; ++t) {
      if (group[t] != g) continue;
      const auto& f = hull.triangles[t];
      nsum += tri_normal(hull.vertices, f[0], f[1], f[2]);
      for (int k = 0; k < 3; ++k) {
        const int a = f[k], b = f[(k + 1) % 3];
        const auto it = edge_tri.find({b, a});
        if (it == edge_tri.end() || group[it->second] != g) {
          next[a] = b;
          boundary_owner[{a, b}] = g;
        }
      }
    }
    ConvexHull::Facet& facet = hull.facets[g];
    facet.normal = nsum.normalized();
    const int start = next.begin()->first;
    int cur = start;
    do {
      facet.loop.push_back(cur);
      cur = next.at(cur);
    } while (cur != start && facet.loop.size() <= next.size());
    double off = 0.0;
    for (int v : facet.loop) off += facet.normal.dot(hull.vertices[v]);
    facet.offset = off / static_cast<double>(facet.loop.size());
  }
  for (int g = 0; g < ngroups; ++g) {
    auto& facet = hull.facets[g];
    facet.neighbors.resize(facet.loop.size(), -1);
    for (size_t i = 0; i < facet.loop.size(); ++i) {
      const int a = facet.loop[i];
      const int b = facet.loop[(i + 1) % facet.loop.size()];
      const auto it = boundary_owner.find({b, a});
      if (it != boundary_owner.end()) facet.neighbors[i] = it->second;
    }
  }
  return hull;
}

}  // namespace gq
