#pragma once

#include <Eigen/Geometry>
#include <cstdint>
#include <random>
#include <string_view>

namespace gq {

// Deterministic RNG. All distributions are implemented explicitly (not via
// std:: distribution classes, whose algorithms are implementation-defined)
// so that identical seeds reproduce identical streams bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(uniform() * static_cast<double>(n)) % n;
  }

  // Standard normal via Box-Muller; the sine partner is cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  // Rejection-sampled truncation of N(mu, sigma^2) to [lo, hi].
  double truncated_normal(double mu, double sigma, double lo, double hi) {
    if (sigma == 0.0) return std::min(hi, std::max(lo, mu));
    for (int i = 0; i < 10000; ++i) {
      const double x = normal(mu, sigma);
      if (x >= lo && x <= hi) return x;
    }
    return std::min(hi, std::max(lo, mu));
  }

  // Marsaglia-Tsang gamma sampler (shape >= 1), scaled.
  double gamma(double shape, double scale) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v * scale;
    }
  }

  // Uniform direction on the unit sphere.
  Eigen::Vector3d unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  // Uniform rotation (Shoemake quaternion method).
  Eigen::Quaterniond rotation() {
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    return Eigen::Quaterniond(a * std::sin(2.0 * M_PI * u2),
                              a * std::cos(2.0 * M_PI * u2),
                              b * std::sin(2.0 * M_PI * u3),
                              b * std::cos(2.0 * M_PI * u3));
  }

 private:
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Stable seed derivation for independent per-unit streams, FNV-1a based.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace gq
