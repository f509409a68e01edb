#ifndef LTM_RNG_HPP_
#define LTM_RNG_HPP_

#include <cstdint>

namespace ltm {

/// Counter-based pseudo-random stream keyed by (seed, stream_id).
///
/// The generator applies two rounds of the splitmix64 finalizer to a
/// 64-bit counter mixed with a per-stream key, so the i-th output is a
/// pure function of (seed, stream_id, i). Identical construction
/// arguments therefore give bit-identical sequences on every platform,
/// streams with distinct ids are statistically independent, and jumping
/// ahead is O(1). A stream is single-owner: clone or derive substreams
/// instead of sharing one instance across workers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : key_lo_(mix64(seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1)))),
        key_hi_(mix64(stream_id ^ (0xD1B54A32D192ED03ULL * (seed + 1)))) {}

  std::uint64_t seed_key() const noexcept { return key_lo_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept {
    return mix64(mix64(counter_++ + key_lo_) ^ key_hi_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Child stream for worker `idx`; independent of this stream and of
  /// other children. Does not consume state.
  RngStream substream(std::uint64_t idx) const noexcept {
    RngStream child(0, 0);
    child.key_lo_ = mix64(key_lo_ ^ (0xBF58476D1CE4E5B9ULL * (idx + 1)));
    child.key_hi_ = mix64(key_hi_ + 0x94D049BB133111EBULL * idx);
    return child;
  }

  void skip(std::uint64_t n) noexcept { counter_ += n; }

 private:
  static std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_lo_;
  std::uint64_t key_hi_;
  std::uint64_t counter_ = 0;
};

}  // namespace ltm

#endif  // LTM_RNG_HPP_
