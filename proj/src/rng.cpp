#include "gq/rng.hpp"

namespace gq {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

// splitmix64 finalizer for avalanche.
std::uint64_t finalize(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = kFnvOffset;
  h = fnv_mix(h, base);
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= kFnvPrime;
  }
  h = fnv_mix(h, a);
  h = fnv_mix(h, b);
  h = fnv_mix(h, c);
  return finalize(h);
}

}  // namespace gq
