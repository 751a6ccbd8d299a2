#pragma once

#include <cstdint>

#include "qnets/forms.hpp"
#include "qnets/rational.hpp"

namespace qnets {

// splitmix64: tiny, deterministic, good enough for fixture generation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }
  // uniform integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + long(below(uint64_t(hi - lo + 1)));
  }
  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  Rational rational(long max_num = 9, long max_den = 3) {
    long num = range(-max_num, max_num);
    long den = range(1, max_den);
    return rat(num, den);
  }

 private:
  uint64_t state_;
};

inline SymmetricForm random_symmetric(Rng& rng, int n, long max_num = 9,
                                      long max_den = 3) {
  SymmetricForm f(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) f.set(i, j, rng.rational(max_num, max_den));
  return f;
}

// Random net with independent members (resamples on the rare rank drop).
inline Net random_net(Rng& rng, int N, int r = 2, long max_num = 3,
                      long max_den = 2) {
  for (;;) {
    Net net;
    net.N = N;
    net.r = r;
    for (int k = 0; k <= r; ++k)
      net.members.push_back(random_symmetric(rng, N + 1, max_num, max_den));
    try {
      net.validate();
      return net;
    } catch (const std::invalid_argument&) {
      // dependent sample; redraw
    }
  }
}

}  // namespace qnets
