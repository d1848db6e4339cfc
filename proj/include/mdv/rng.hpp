#ifndef MDV_RNG_HPP
#define MDV_RNG_HPP

#include <cstdint>

namespace mdv {

// splitmix64. Seeded runs must reproduce bit-for-bit on every
// platform, so no std:: engine or distribution is used anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Integer in [lo, hi]. The modulo bias is negligible for the tiny
  // ranges used here and keeps the stream portable.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace mdv

#endif
