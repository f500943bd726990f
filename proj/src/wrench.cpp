#include "gq/wrench.hpp"

#include <cmath>

#include "gq/common.hpp"
#include "gq/rng.hpp"

namespace gq {

WrenchSet friction_cone_wrenches(const Contact& contact, int num_edges,
                                 const Vec3& com, double torque_scale,
                                 double torsion_coefficient) {
  if (num_edges < 3) throw ConfigError("friction_cone_wrenches: num_edges < 3");
  const double nlen = contact.normal.norm();
  if (nlen < 1e-12)
    throw DegenerateContactError("friction_cone_wrenches: zero contact normal");
  const Vec3 n = contact.normal / nlen;
  const Vec3 arm = contact.point - com;

  WrenchSet ws;
  auto push = [&](const Vec3& force, const Vec3& extra_torque) {
    Eigen::VectorXd w(6);
    const Vec3 torque = torque_scale * arm.cross(force) + extra_torque;
    w << force.x(), force.y(), force.z(), torque.x(), torque.y(), torque.z();
    ws.wrenches.push_back(w);
  };

  const double gamma = contact.friction;
  if (gamma <= 0.0) {
    push(n, Vec3::Zero());
    return ws;
  }

  Vec3 t1;
  if (contact.tangent_anchor.squaredNorm() > 1e-16) {
    const Vec3 a = contact.tangent_anchor - n * n.dot(contact.tangent_anchor);
    t1 = a.squaredNorm() > 1e-16 ? Vec3(a.normalized()) : any_perpendicular(n);
  } else {
    t1 = any_perpendicular(n);
  }
  const Vec3 t2 = n.cross(t1);

  for (int k = 0; k < num_edges; ++k) {
    const double phi = 2.0 * M_PI * static_cast<double>(k) /
                       static_cast<double>(num_edges);
    const Vec3 force = n + gamma * (std::cos(phi) * t1 + std::sin(phi) * t2);
    push(force, Vec3::Zero());
  }
  if (torsion_coefficient > 0.0) {
    const Vec3 torsion = torque_scale * torsion_coefficient * gamma * n;
    Eigen::VectorXd w(6);
    w << 0, 0, 0, torsion.x(), torsion.y(), torsion.z();
    ws.wrenches.push_back(w);
    ws.wrenches.push_back(-w);
  }
  return ws;
}

Eigen::VectorXd min_norm_point(const std::vector<Eigen::VectorXd>& points,
                               double tol, int max_iter) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw NumericError("min_norm_point: empty point set");
  const int d = static_cast<int>(points[0].size());

  // Start from the lowest-norm point.
  int start = 0;
  for (int i = 1; i < n; ++i)
    if (points[i].squaredNorm() < points[start].squaredNorm()) start = i;

  std::vector<int> corral{start};
  Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd x = points[start];

  double scale2 = 0.0;
  for (const auto& p : points) scale2 = std::max(scale2, p.squaredNorm());
  scale2 = std::max(scale2, 1e-300);

  for (int iter = 0; iter < max_iter; ++iter) {
    // Linear minimization oracle over the point set.
    int best = 0;
    double best_dot = x.dot(points[0]);
    for (int i = 1; i < n; ++i) {
      const double dp = x.dot(points[i]);
      if (dp < best_dot) {
        best_dot = dp;
        best = i;
      }
    }
    if (x.squaredNorm() - best_dot <= tol * scale2) break;
    bool in_corral = false;
    for (int i : corral) in_corral |= (i == best);
    if (!in_corral) {
      corral.push_back(best);
      Eigen::VectorXd nl(lambda.size() + 1);
      nl.head(lambda.size()) = lambda;
      nl(lambda.size()) = 0.0;
      lambda = nl;
    }

    // Minor cycle: affine min-norm over the corral, trimming negative weights.
    for (int minor = 0; minor < 4 * d + 16; ++minor) {
      const int m = static_cast<int>(corral.size());
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          kkt(i, j) = points[corral[i]].dot(points[corral[j]]);
      kkt.block(0, m, m, 1).setOnes();
      kkt.block(m, 0, 1, m).setOnes();
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      rhs(m) = 1.0;
      const Eigen::VectorXd sol = kkt.colPivHouseholderQr().solve(rhs);
      const Eigen::VectorXd alpha = sol.head(m);

      if ((alpha.array() > -1e-12).all()) {
        lambda = alpha.cwiseMax(0.0);
        lambda /= lambda.sum();
        break;
      }
      // Step toward alpha until the first weight hits zero, then drop it.
      double t = 1.0;
      for (int i = 0; i < m; ++i) {
        if (alpha(i) < -1e-15) {
          const double ti = lambda(i) / (lambda(i) - alpha(i));
          t = std::min(t, ti);
        }
      }
      Eigen::VectorXd mixed = (1.0 - t) * lambda + t * alpha;
      int drop = -1;
      double lowest = 1e-10;
      for (int i = 0; i < m; ++i) {
        if (mixed(i) < lowest) {
          lowest = mixed(i);
          drop = i;
        }
      }
      if (drop < 0) {
        lambda = mixed.cwiseMax(0.0);
        lambda /= lambda.sum();
        break;
      }
      corral.erase(corral.begin() + drop);
      Eigen::VectorXd nl(mixed.size() - 1);
      int w = 0;
      for (int i = 0; i < m; ++i)
        if (i != drop) nl(w++) = std::max(mixed(i), 0.0);
      lambda = nl;
      if (lambda.sum() <= 0.0) {
        lambda.setOnes();
      }
      lambda /= lambda.sum();
    }

    x = Eigen::VectorXd::Zero(d);
    for (size_t i = 0; i < corral.size(); ++i) x += lambda(i) * points[corral[i]];
  }
  return x;
}

bool force_closure(const WrenchSet& ws) {
  if (ws.empty()) throw NumericError("force_closure: empty wrench set");
  const int d = ws.dim();
  const Eigen::VectorXd mnp = min_norm_point(ws.wrenches);
  if (mnp.norm() >= 1e-9) return false;
  // Interiority: positive support in all +/- basis directions.
  for (int k = 0; k < d; ++k) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = -std::numeric_limits<double>::infinity();
    for (const auto& w : ws.wrenches) {
      hi = std::max(hi, w(k));
      lo = std::max(lo, -w(k));
    }
    if (hi <= 1e-12 || lo <= 1e-12) return false;
  }
  return true;
}

namespace {

struct SupportEval {
  double value;
  int argmax;
};

SupportEval support(const Eigen::MatrixXd& w_mat, const Eigen::VectorXd& u) {
  Eigen::Index idx = 0;
  const double v = (w_mat * u).maxCoeff(&idx);
  return {v, static_cast<int>(idx)};
}

}  // namespace

double epsilon_quality(const WrenchSet& ws, const EpsilonConfig& config) {
  if (ws.empty()) throw NumericError("epsilon_quality: empty wrench set");
  if (!force_closure(ws)) return 0.0;

  const int d = ws.dim();
  const int n = static_cast<int>(ws.wrenches.size());
  Eigen::MatrixXd w_mat(n, d);
  for (int i = 0; i < n; ++i) w_mat.row(i) = ws.wrenches[i].transpose();
  double scale = 0.0;
  for (const auto& w : ws.wrenches) scale = std::max(scale, w.norm());

  // Fixed internal direction stream keeps the metric a pure function of the
  // wrench set.
  Rng rng(derive_seed(0x9e11a6u, "epsilon_directions"));
  double best = std::numeric_limits<double>::infinity();

  auto polish = [&](const Eigen::VectorXd& u) {
    // Active wrenches at u span the candidate face; the least-norm point of
    // their affine hull gives the exact face distance when the guess is
    // right, and evaluating the support there keeps it an upper bound.
    const SupportEval se = support(w_mat, u);
    std::vector<int> active;
    for (int i = 0; i < n; ++i)
      if (ws.wrenches[i].dot(u) >= se.value - 1e-7 * std::max(scale, 1e-12))
        active.push_back(i);
    const int m = static_cast<int>(active.size());
    if (m == 0) return;
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        kkt(i, j) = ws.wrenches[active[i]].dot(ws.wrenches[active[j]]);
    kkt.block(0, m, m, 1).setOnes();
    kkt.block(m, 0, 1, m).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    rhs(m) = 1.0;
    const Eigen::VectorXd sol = kkt.colPivHouseholderQr().solve(rhs);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < m; ++i) p += sol(i) * ws.wrenches[active[i]];
    const double plen = p.norm();
    if (plen > 1e-12 && p.allFinite()) {
      const SupportEval at_p = support(w_mat, Eigen::VectorXd(p / plen));
      best = std::min(best, at_p.value);
    }
  };

  for (int s = 0; s < config.directions; ++s) {
    Eigen::VectorXd u(d);
    for (int k = 0; k < d; ++k) u(k) = rng.normal();
    const double len = u.norm();
    if (len < 1e-12) continue;
    u /= len;

    Eigen::VectorXd u_best = u;
    double h_best = support(w_mat, u).value;
    for (int step = 0; step < config.descent_steps; ++step) {
      const SupportEval se = support(w_mat, u);
      if (se.value < h_best) {
        h_best = se.value;
        u_best = u;
      }
      Eigen::VectorXd g = ws.wrenches[se.argmax];
      Eigen::VectorXd tang = g - g.dot(u) * u;
      const double tlen = tang.norm();
      if (tlen < 1e-14) break;
      const double eta = 0.4 / static_cast<double>(step + 1);
      u = (u - eta * tang / tlen).normalized();
    }
    const SupportEval last = support(w_mat, u);
    if (last.value < h_best) {
      h_best = last.value;
      u_best = u;
    }
    best = std::min(best, h_best);
    polish(u_best);
  }
  return std::max(best, 0.0);
}

double torque_scale_for(const std::vector<Vec3>& vertices, const Vec3& com) {
  double max_dist = 0.0;
  for (const auto& v : vertices) max_dist = std::max(max_dist, (v - com).norm());
  return max_dist > 1e-12 ? 1.0 / max_dist : 1.0;
}

}  // namespace gq
