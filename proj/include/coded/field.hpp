#pragma once

#include <cstdint>
#include <random>

#include "coded/errors.hpp"

namespace coded {

// An element of F_q, always kept reduced to [0, q).
using fe = std::uint64_t;

// Prime field F_q for q <= 2^31 - 1, so that products fit in 64 bits.
// Immutable and shareable across threads; all operations are pure.
class Field {
 public:
  explicit Field(fe q);

  fe modulus() const { return q_; }

  fe add(fe a, fe b) const {
    fe s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  fe sub(fe a, fe b) const { return a >= b ? a - b : a + (q_ - b); }
  fe neg(fe a) const { return a == 0 ? 0 : q_ - a; }
  fe mul(fe a, fe b) const { return (a * b) % q_; }

  // Multiplicative inverse by extended Euclid. Throws ZeroInverse on 0.
  fe inv(fe a) const;

  fe pow(fe a, std::uint64_t e) const;

  // Reduces an arbitrary signed integer into [0, q).
  fe from_int(long long v) const;

  bool operator==(const Field& other) const { return q_ == other.q_; }

 private:
  fe q_;
};

// Deterministic seedable generator (mt19937_64 under the hood). Child
// streams are derived from the original seed and a tag, so a transcript
// of draws is replayable from the root seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased uniform draw from [0, bound) via rejection sampling.
  std::uint64_t below(std::uint64_t bound);

  fe uniform(const Field& f) { return below(f.modulus()); }
  fe uniform_nonzero(const Field& f) { return 1 + below(f.modulus() - 1); }

  // Derived stream; independent of how much this stream has been consumed.
  Rng fork(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

}  // namespace coded
