#include "coded/field.hpp"

namespace coded {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Field::Field(fe q) : q_(q) {
  if (q > 2147483647ULL) {
    throw std::invalid_argument("modulus exceeds 2^31 - 1");
  }
  if (!is_prime_u64(q)) {
    throw std::invalid_argument("modulus is not prime");
  }
}

fe Field::inv(fe a) const {
  if (a == 0) throw ZeroInverse();
  // Extended Euclid on (a, q); q prime so gcd is 1.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(q_), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long quot = r / new_r;
    long long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(q_);
  return static_cast<fe>(t);
}

fe Field::pow(fe a, std::uint64_t e) const {
  fe r = 1;
  a %= q_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fe Field::from_int(long long v) const {
  long long m = static_cast<long long>(q_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<fe>(r);
}

Rng::Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased for any bound.
  u128 span = (u128)1 << 64;
  std::uint64_t limit = static_cast<std::uint64_t>(span - span % bound);
  std::uint64_t r = next_u64();
  while (limit != 0 && r >= limit) r = next_u64();
  return r % bound;
}

Rng Rng::fork(std::uint64_t tag) const {
  return Rng(splitmix64(seed_ ^ splitmix64(tag)));
}

}  // namespace coded
