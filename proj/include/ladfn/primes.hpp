#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <vector>

#include "ladfn/rational.hpp"

namespace ladfn {

struct PrimeFactor {
  Int prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor& a, const PrimeFactor& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
/// Empty exactly for n == 1.
struct Factorization {
  std::vector<PrimeFactor> factors;

  Int value() const {
    Int n = 1;
    for (const auto& f : factors) n *= boost::multiprecision::pow(f.prime, f.exponent);
    return n;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors == b.factors;
  }
};

/// Smallest-prime-factor table for 2..limit, built with a linear sieve.
/// Immutable once built; shared read-only across all evaluation.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) {
    if (limit < 2) throw domain_error("PrimeSieve: limit must be >= 2");
    if (limit > 0xFFFFFFFFull)
      throw domain_error("PrimeSieve: limit exceeds the 32-bit table range");
    limit_ = static_cast<std::uint32_t>(limit);
    spf_.assign(limit_ + 1, 0);
    for (std::uint32_t i = 2; i <= limit_; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = i;
        primes_.push_back(i);
      }
      for (std::uint32_t p : primes_) {
        std::uint64_t m = std::uint64_t{p} * i;
        if (p > spf_[i] || m > limit_) break;
        spf_[m] = p;
      }
    }
  }

  std::uint32_t limit() const { return limit_; }

  /// Smallest prime factor of k, 2 <= k <= limit.
  std::uint32_t smallest_factor(std::uint64_t k) const { return spf_[k]; }

  /// All primes <= limit, ascending.
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeSieve build_sieve(std::uint64_t limit) { return PrimeSieve(limit); }

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic over the full 64-bit range with these witnesses.
inline bool miller_rabin64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Probabilistic beyond 64 bits: fixed small witnesses plus witnesses from a
// fixed-seed generator, so results are reproducible.
inline bool miller_rabin_big(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto witness = [&](const Int& a) {
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) return false;
    }
    return true;  // a certifies n composite
  };
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (witness(Int(a))) return false;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int round = 0; round < 24; ++round) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    Int a = 2 + Int(state) % (n - 3);
    if (witness(a)) return false;
  }
  return true;
}

inline std::uint64_t pollard_rho64(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without a factor; retry with next c
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

inline Int pollard_rho_big(const Int& n) {
  if ((n & 1) == 0) return Int(2);
  for (Int c = 1;; ++c) {
    auto step = [&](const Int& x) { return (x * x + c) % n; };
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x > y ? x - y : y - x;
      if (diff.is_zero()) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

inline bool is_prime_nosieve(const Int& n) {
  if (n <= 0xFFFFFFFFFFFFFFFFull)
    return miller_rabin64(n.convert_to<std::uint64_t>());
  return miller_rabin_big(n);
}

// Largest r with r^k <= n, by binary search over the bit length.
inline Int iroot(const Int& n, unsigned k) {
  if (n < 2 || k == 1) return n;
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  Int lo = Int(1) << ((bits - 1) / k);
  Int hi = Int(2) << (bits / k);
  while (lo + 1 < hi) {
    Int mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, k) <= n) lo = mid;
    else hi = mid;
  }
  return lo;
}

// n has no prime factor <= the largest sieved prime; split what remains.
inline void factor_large(Int n, std::map<Int, unsigned>& acc, unsigned mult = 1) {
  if (n == 1) return;
  if (is_prime_nosieve(n)) {
    acc[n] += mult;
    return;
  }
  // Rho cycles degenerate on perfect powers (all of whose prime factors are
  // large and repeated), so peel any power structure off first.
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  for (unsigned k = 2; k <= bits; ++k) {
    Int r = iroot(n, k);
    if (r < 2) break;
    if (boost::multiprecision::pow(r, k) == n) {
      factor_large(r, acc, mult * k);
      return;
    }
  }
  Int d = n <= 0xFFFFFFFFFFFFFFFFull
              ? Int(pollard_rho64(n.convert_to<std::uint64_t>()))
              : pollard_rho_big(n);
  factor_large(d, acc, mult);
  factor_large(n / d, acc, mult);
}

// v fits the sieve table: repeated smallest-prime-factor division.
inline void factor_spf(std::uint64_t v, const PrimeSieve& sieve,
                       std::map<Int, unsigned>& acc) {
  while (v > 1) {
    std::uint32_t p = sieve.smallest_factor(v);
    unsigned e = 0;
    do {
      v /= p;
      ++e;
    } while (v % p == 0);
    acc[Int(p)] += e;
  }
}

}  // namespace detail

/// Primality test without a sieve: deterministic Miller-Rabin through the
/// 64-bit range, reproducible probabilistic rounds beyond it.
inline bool is_prime(const Int& n) { return detail::is_prime_nosieve(n); }

/// Sieve-accelerated primality test.
inline bool is_prime(const Int& n, const PrimeSieve& sieve) {
  if (n < 2) return false;
  if (n <= sieve.limit()) {
    std::uint64_t v = n.convert_to<std::uint64_t>();
    return sieve.smallest_factor(v) == v;
  }
  return detail::is_prime_nosieve(n);
}

/// Canonical factorization of n >= 1.  Within the sieve this is repeated
/// smallest-prime-factor division; beyond it, trial division by sieved
/// primes, then Miller-Rabin and Pollard's rho on whatever is left.
inline Factorization factorize(const Int& n, const PrimeSieve& sieve) {
  if (n.is_zero())
    throw domain_error(
        "factorize: arithmetic functions are defined on positive integers");
  if (n < 0) throw domain_error("factorize: n must be >= 1");

  std::map<Int, unsigned> acc;
  if (n <= sieve.limit()) {
    detail::factor_spf(n.convert_to<std::uint64_t>(), sieve, acc);
  } else {
    Int m = n;
    bool settled = false;
    for (std::uint32_t p : sieve.primes()) {
      if (Int(p) * p > m) {
        ++acc[m];  // m is prime: no factor up to sqrt(m)
        settled = true;
        break;
      }
      if (m % p == 0) {
        unsigned e = 0;
        do {
          m /= p;
          ++e;
        } while (m % p == 0);
        acc[Int(p)] += e;
        if (m <= sieve.limit()) {
          if (m > 1) detail::factor_spf(m.convert_to<std::uint64_t>(), sieve, acc);
          settled = true;
          break;
        }
      }
    }
    if (!settled) detail::factor_large(m, acc);
  }

  Factorization out;
  out.factors.reserve(acc.size());
  for (auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

/// Largest k with p^k | n.  Requires n >= 1 and p prime.
inline unsigned valuation(const Int& n, const Int& p, const PrimeSieve& sieve) {
  if (n.is_zero())
    throw domain_error(
        "valuation: arithmetic functions are defined on positive integers");
  if (n < 0) throw domain_error("valuation: n must be >= 1");
  if (!is_prime(p, sieve)) throw domain_error("valuation: " + p.str() + " is not prime");
  unsigned k = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

/// All divisors in strictly increasing order, merged from prime-power
/// multiples so the output never needs a sort.
inline std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : f.factors) {
    std::vector<Int> scaled = divs;
    std::vector<Int> merged = divs;
    for (unsigned k = 1; k <= e; ++k) {
      for (auto& d : scaled) d *= p;
      std::vector<Int> next;
      next.reserve(merged.size() + scaled.size());
      std::merge(merged.begin(), merged.end(), scaled.begin(), scaled.end(),
                 std::back_inserter(next));
      merged = std::move(next);
    }
    divs = std::move(merged);
  }
  return divs;
}

}  // namespace ladfn
