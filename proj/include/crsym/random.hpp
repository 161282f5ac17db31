#pragma once

#include <cstdint>
#include <random>

#include "crsym/sualg.hpp"

namespace crsym {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Seeded generator of small exact values for property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 9, long max_den = 5) {
    Rational r(integer(-bound, bound), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Scalar real(bool radical = false, int d = kDefaultD) {
    return radical ? Scalar(rational(), 0, rational(), 0, d) : Scalar(rational());
  }
  Scalar complex(bool radical = false, int d = kDefaultD) {
    return radical ? Scalar(rational(), rational(), rational(), rational(), d) : Scalar(rational(), rational());
  }
  Scalar nonzero_complex(bool radical = false, int d = kDefaultD) {
    for (;;) {
      Scalar s = complex(radical, d);
      if (!s.is_zero()) return s;
    }
  }
  Vec complex_vec(std::size_t n) {
    Vec v(n);
    for (auto& s : v) s = complex();
    return v;
  }
  SMat member(const Signature& sig) {
    Vec c(sig.size() * sig.size() - 1);
    for (auto& s : c) s = integer(0, 2) == 0 ? Scalar() : real();
    return su_element(c, sig);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace crsym
