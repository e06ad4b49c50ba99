#ifndef HAWKES_RNG_HPP
#define HAWKES_RNG_HPP

#include <cstdint>

namespace hawkes {

/// Which driving Poisson measure a stream realizes. A coupled pair shares
/// the post-cut stream by key identity; the two pre-cut streams are disjoint.
enum class StreamPhase : std::uint32_t {
  pre_cut_original = 0,
  pre_cut_coupled = 1,
  post_cut_shared = 2,
  generic = 3,
};

/// Key of one deterministic random stream. Two keys that differ in any field
/// produce statistically independent streams; equal keys produce identical
/// streams regardless of thread count or call order.
struct RandomKey {
  std::uint64_t master_seed = 0;
  std::int32_t component = 0;
  StreamPhase phase = StreamPhase::generic;
  std::uint64_t replicate = 0;

  RandomKey with_component(std::int32_t c) const {
    RandomKey k = *this;
    k.component = c;
    return k;
  }
  RandomKey with_phase(StreamPhase ph) const {
    RandomKey k = *this;
    k.phase = ph;
    return k;
  }
  RandomKey with_replicate(std::uint64_t r) const {
    RandomKey k = *this;
    k.replicate = r;
    return k;
  }
};

namespace detail {

// SplitMix64 finalizer (Stafford mix 13): a strong 64-bit avalanche bijection.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t key_base(const RandomKey& k) {
  std::uint64_t h = mix64(k.master_seed ^ 0x5851f42d4c957f2dULL);
  h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.component)) * 0x9e3779b97f4a7c15ULL + 0x0b5af3cd1ccf63d2ULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(k.phase) * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL));
  h = mix64(h ^ (k.replicate * 0xc2b2ae3d27d4eb4fULL + 0x165667b19e3779f9ULL));
  return h;
}

}  // namespace detail

/// Counter-based uniform stream: word i is a pure function of (key, i), so a
/// stream can be re-opened anywhere and shared between consumers by key.
class CounterRng {
 public:
  CounterRng() : base_(0) {}
  explicit CounterRng(const RandomKey& key) : base_(detail::key_base(key)) {}

  std::uint64_t next_word() {
    return detail::mix64(base_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform draw on (0, 1]; never returns 0, so -log(u) is finite.
  double next_uniform() {
    return static_cast<double>((next_word() >> 11) + 1) * 0x1.0p-53;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace hawkes

#endif  // HAWKES_RNG_HPP
