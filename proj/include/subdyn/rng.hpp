#ifndef SUBDYN_RNG_HPP
#define SUBDYN_RNG_HPP

#include <cstdint>
#include <vector>

namespace subdyn {

// Counter-based splittable generator. A stream is identified by a 64-bit
// key derived from (seed, stream-id, optional substream ids); outputs are a
// bijective mix of key + counter (splitmix64), so draws depend only on the
// key and the position in the stream. Disjoint keys give independent
// streams, which makes parallel Monte Carlo and lazily refined paths
// bit-reproducible.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Derive a child stream; used for per-cell draws in path refinement.
  Rng split(std::uint64_t substream) const;

  std::uint64_t next_u64();
  double uniform();      // (0, 1)
  double exponential();  // rate 1
  double normal();       // standard normal, Marsaglia polar
  double gamma_variate(double shape);  // rate 1, Marsaglia-Tsang

  std::uint64_t key() const { return key_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  struct raw_key_tag {};
  Rng(raw_key_tag, std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Halton low-discrepancy sequence, used for reproducible sampling boxes.
double halton(std::uint64_t index, unsigned base);

}  // namespace subdyn

#endif
