#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ladfn/dirichlet.hpp"

namespace ladfn {

/// Outcome of sweeping one identity over a finite range.  A passing sweep
/// proves there is no counterexample up to the limit — never more; a failing
/// sweep carries the first counterexample in the documented iteration order
/// (lexicographic (m, n), or ascending n), so reports are reproducible.
struct IdentityReport {
  struct Failure {
    std::string witness;  // e.g. "(2, 2)" or "n=4"
    Rational lhs;
    Rational rhs;
  };

  std::string identity;
  std::uint64_t limit = 0;
  std::uint64_t checks = 0;  // instances evaluated, including a failing one
  std::optional<std::uint64_t> seed;
  std::optional<Failure> failure;

  bool passed() const { return !failure.has_value(); }

  std::string line() const {
    if (failure)
      return "FAIL " + identity + " at " + failure->witness +
             ": lhs=" + failure->lhs.str() + " rhs=" + failure->rhs.str();
    std::string out = "PASS " + identity + " checks=" + std::to_string(checks) +
                      " limit=" + std::to_string(limit);
    if (seed) out += " seed=" + std::to_string(*seed);
    return out;
  }
};

/// Reproducible table of integer values in [-9, 9] for convolution sweeps.
inline ValueTable random_table(std::size_t limit, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ValueTable t(limit);
  for (std::size_t k = 1; k <= limit; ++k)
    t[k] = Rational(static_cast<int>(rng() % 19) - 9);
  return t;
}

namespace detail {

inline ValueTable table_product(const ValueTable& a, const ValueTable& b) {
  ValueTable out(a.limit());
  for (std::size_t k = 1; k <= a.limit(); ++k) out[k] = a[k] * b[k];
  return out;
}

inline ValueTable table_sum(const ValueTable& a, const ValueTable& b) {
  ValueTable out(a.limit());
  for (std::size_t k = 1; k <= a.limit(); ++k) out[k] = a[k] + b[k];
  return out;
}

/// Compares two tables ascending and fills in the report.
inline void compare_tables(IdentityReport& report, const ValueTable& lhs,
                           const ValueTable& rhs) {
  for (std::size_t n = 1; n <= lhs.limit(); ++n) {
    ++report.checks;
    if (lhs[n] != rhs[n]) {
      report.failure = {"n=" + std::to_string(n), lhs[n], rhs[n]};
      return;
    }
  }
}

}  // namespace detail

/// f(mn) = f(m)h(n) + f(n)h(m) for all 1 <= m <= n <= maxMN.
inline IdentityReport verify_leibniz(const ArithFunction& f, const ArithFunction& h,
                                     std::size_t maxMN, const PrimeSieve& sieve) {
  if (maxMN < 1) throw domain_error("verify_leibniz: maxMN must be >= 1");
  IdentityReport report{"leibniz", maxMN};
  ValueTable ftab = tabulate(f, maxMN, sieve);
  ValueTable htab = tabulate(h, maxMN, sieve);
  for (std::size_t m = 1; m <= maxMN; ++m) {
    for (std::size_t n = m; n <= maxMN; ++n) {
      ++report.checks;
      Rational lhs;
      try {
        lhs = f.eval(Int(m) * Int(n), sieve);
      } catch (const eval_error& err) {
        throw eval_error(std::string(err.what()) + " (checking pair (" +
                         std::to_string(m) + ", " + std::to_string(n) + "))");
      }
      Rational rhs = ftab[m] * htab[n] + ftab[n] * htab[m];
      if (lhs != rhs) {
        report.failure = {"(" + std::to_string(m) + ", " + std::to_string(n) + ")",
                          std::move(lhs), std::move(rhs)};
        return report;
      }
    }
  }
  return report;
}

/// f(u*v) = (fu)*v + u*(fv) pointwise on 1..limit, with f applied as a
/// pointwise multiplier on tables.  Holds for every completely additive f.
inline IdentityReport verify_schwab(const ArithFunction& f, const ValueTable& u,
                                    const ValueTable& v, std::size_t limit,
                                    const PrimeSieve& sieve) {
  if (u.limit() < limit || v.limit() < limit)
    throw domain_error("verify_schwab: tables do not cover 1..limit");
  IdentityReport report{"schwab", limit};
  ValueTable ftab = tabulate(f, limit, sieve);
  ValueTable lhs = detail::table_product(ftab, convolve_prefix(u, v));
  ValueTable rhs = detail::table_sum(convolve_prefix(detail::table_product(ftab, u), v),
                                     convolve_prefix(u, detail::table_product(ftab, v)));
  detail::compare_tables(report, lhs, rhs);
  return report;
}

/// f(u*v) = (fu)*(hv) + (hu)*(fv) pointwise on 1..limit; requires h to be
/// nonzero-valued there.
inline IdentityReport verify_gen_schwab(const ArithFunction& f, const ArithFunction& h,
                                        const ValueTable& u, const ValueTable& v,
                                        std::size_t limit, const PrimeSieve& sieve) {
  if (u.limit() < limit || v.limit() < limit)
    throw domain_error("verify_gen_schwab: tables do not cover 1..limit");
  IdentityReport report{"gen-schwab", limit};
  ValueTable ftab = tabulate(f, limit, sieve);
  ValueTable htab = tabulate(h, limit, sieve);
  for (std::size_t n = 1; n <= limit; ++n)
    if (htab[n].is_zero())
      throw domain_error("verify_gen_schwab: h(" + std::to_string(n) +
                         ") = 0; the identity requires nonzero-valued h");
  ValueTable lhs = detail::table_product(ftab, convolve_prefix(u, v));
  ValueTable rhs = detail::table_sum(
      convolve_prefix(detail::table_product(ftab, u), detail::table_product(htab, v)),
      convolve_prefix(detail::table_product(htab, u), detail::table_product(ftab, v)));
  detail::compare_tables(report, lhs, rhs);
  return report;
}

/// D(u*v) = (Du)*(Nv) + (Nu)*(Dv) pointwise on 1..limit.
inline IdentityReport verify_cor33(const ValueTable& u, const ValueTable& v,
                                   std::size_t limit, const PrimeSieve& sieve) {
  if (u.limit() < limit || v.limit() < limit)
    throw domain_error("verify_cor33: tables do not cover 1..limit");
  IdentityReport report{"cor33", limit};
  ValueTable dtab = tabulate(ArithFunction::derivative(), limit, sieve);
  ValueTable ntab = tabulate(ArithFunction::identity(), limit, sieve);
  ValueTable lhs = detail::table_product(dtab, convolve_prefix(u, v));
  ValueTable rhs = detail::table_sum(
      convolve_prefix(detail::table_product(dtab, u), detail::table_product(ntab, v)),
      convolve_prefix(detail::table_product(ntab, u), detail::table_product(dtab, v)));
  detail::compare_tables(report, lhs, rhs);
  return report;
}

/// f(u*u) = 2 (fu)*(hu) pointwise on 1..limit, for f L-additive with part h.
inline IdentityReport verify_square_conv(const ArithFunction& f, const ArithFunction& h,
                                         const ValueTable& u, std::size_t limit,
                                         const PrimeSieve& sieve) {
  if (u.limit() < limit)
    throw domain_error("verify_square_conv: table does not cover 1..limit");
  IdentityReport report{"square-conv", limit};
  ValueTable ftab = tabulate(f, limit, sieve);
  ValueTable htab = tabulate(h, limit, sieve);
  ValueTable lhs = detail::table_product(ftab, convolve_prefix(u, u));
  ValueTable twice = convolve_prefix(detail::table_product(ftab, u),
                                     detail::table_product(htab, u));
  for (std::size_t k = 1; k <= limit; ++k) twice[k] += twice[k];
  detail::compare_tables(report, lhs, twice);
  return report;
}

/// f(n) tau(n) = 2 (f*h)(n) for n <= limit, for f L-additive with part h.
inline IdentityReport verify_tau_identity(const ArithFunction& f, const ArithFunction& h,
                                          std::size_t limit, const PrimeSieve& sieve) {
  if (limit < 1) throw domain_error("verify_tau_identity: limit must be >= 1");
  IdentityReport report{"tau", limit};
  ValueTable ftab = tabulate(f, limit, sieve);
  ValueTable htab = tabulate(h, limit, sieve);
  ValueTable tautab = tabulate(ArithFunction::divisor_count(), limit, sieve);
  ValueTable lhs = detail::table_product(ftab, tautab);
  ValueTable rhs = convolve_prefix(ftab, htab);
  for (std::size_t k = 1; k <= limit; ++k) rhs[k] += rhs[k];
  detail::compare_tables(report, lhs, rhs);
  return report;
}

/// h(u*v) = (hu)*(hv) pointwise on 1..limit; the mark of a completely
/// multiplicative h.
inline IdentityReport verify_distributivity(const ArithFunction& h, const ValueTable& u,
                                            const ValueTable& v, std::size_t limit,
                                            const PrimeSieve& sieve) {
  if (u.limit() < limit || v.limit() < limit)
    throw domain_error("verify_distributivity: tables do not cover 1..limit");
  IdentityReport report{"distributivity", limit};
  ValueTable htab = tabulate(h, limit, sieve);
  ValueTable lhs = detail::table_product(htab, convolve_prefix(u, v));
  ValueTable rhs = convolve_prefix(detail::table_product(htab, u),
                                   detail::table_product(htab, v));
  detail::compare_tables(report, lhs, rhs);
  return report;
}

}  // namespace ladfn
