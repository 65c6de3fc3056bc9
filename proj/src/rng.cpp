#include "subdyn/rng.hpp"

#include <cmath>

namespace subdyn {

std::uint64_t Rng::mix(std::uint64_t z) {
  // splitmix64 finalizer (Steele, Lea, Flood 2014)
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(mix(seed) ^ (0x9E3779B97F4A7C15ULL * stream + 1))) {}

Rng Rng::split(std::uint64_t substream) const {
  return Rng(raw_key_tag{},
             mix(key_ ^ (0xD1B54A32D192ED03ULL * substream + 0x2545F4914F6CDD1DULL)));
}

std::uint64_t Rng::next_u64() {
  return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
}

double Rng::uniform() {
  // 53-bit mantissa, shifted into (0,1); zero is remapped to avoid log(0)
  double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::normal() {
  if (have_spare_normal_) {
    have_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * m;
  have_spare_normal_ = true;
  return u * m;
}

double Rng::gamma_variate(double shape) {
  if (shape < 1.0) {
    // boost: G(a) = G(a+1) * U^{1/a}
    double u = uniform();
    return gamma_variate(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze method
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double halton(std::uint64_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace subdyn
