#include <catch_amalgamated.hpp>

#include "ladfn/fnspec.hpp"
#include "ladfn/verify.hpp"

using ladfn::ArithFunction;
using ladfn::IdentityReport;
using ladfn::Int;
using ladfn::PrimeSieve;
using ladfn::Rational;
using ladfn::ValueTable;

namespace {
const PrimeSieve& sieve() {
  static PrimeSieve s(100000);
  return s;
}
ArithFunction fn(const std::string& spec) { return ladfn::build(ladfn::parse(spec)); }
}  // namespace

TEST_CASE("product rule sweep for the derivative") {
  IdentityReport r = ladfn::verify_leibniz(fn("D"), fn("N"), 200, sieve());
  CHECK(r.passed());
  CHECK(r.checks == 20100);  // 200 * 201 / 2 pairs
  CHECK(r.line() == "PASS leibniz checks=20100 limit=200");
}

TEST_CASE("completely additive functions satisfy the rule with companion 1") {
  IdentityReport r = ladfn::verify_leibniz(fn("ld"), fn("E"), 100, sieve());
  CHECK(r.passed());
}

TEST_CASE("wrong companion is caught at the first pair") {
  IdentityReport r = ladfn::verify_leibniz(fn("D"), fn("E"), 10, sieve());
  REQUIRE_FALSE(r.passed());
  CHECK(r.failure->witness == "(2, 2)");
  CHECK(r.failure->lhs == Rational(4));  // D(4)
  CHECK(r.failure->rhs == Rational(2));  // D(2)*1 + D(2)*1
  CHECK(r.checks == 11);                 // ten pairs with m = 1, then (2, 2)
  CHECK(r.line() == "FAIL leibniz at (2, 2): lhs=4 rhs=2");
}

TEST_CASE("derivation-over-convolution sweep for a completely additive f") {
  ValueTable u = ladfn::random_table(300, 1);
  ValueTable v = ladfn::random_table(300, 2);
  IdentityReport r = ladfn::verify_schwab(fn("ld"), u, v, 300, sieve());
  CHECK(r.passed());
  CHECK(r.checks == 300);
}

TEST_CASE("the same sweep rejects a non-additive f") {
  ValueTable e = ladfn::tabulate(fn("E"), 20, sieve());
  IdentityReport r = ladfn::verify_schwab(fn("D"), e, e, 20, sieve());
  REQUIRE_FALSE(r.passed());
  CHECK(r.failure->witness == "n=4");
  CHECK(r.failure->lhs == Rational(12));  // D(4) tau(4)
  CHECK(r.failure->rhs == Rational(10));  // 2 (D(1)+D(2)+D(4))
}

TEST_CASE("the zero function passes trivially") {
  ValueTable u = ladfn::random_table(100, 3);
  ValueTable v = ladfn::random_table(100, 4);
  IdentityReport r = ladfn::verify_schwab(fn("cadd{}"), u, v, 100, sieve());
  CHECK(r.passed());
}

TEST_CASE("two-companion sweep") {
  ValueTable u = ladfn::random_table(300, 5);
  ValueTable v = ladfn::random_table(300, 6);
  SECTION("derivative with its companion") {
    IdentityReport r = ladfn::verify_gen_schwab(fn("D"), fn("N"), u, v, 300, sieve());
    CHECK(r.passed());
  }
  SECTION("companion 1 reduces to the single-table sweep") {
    IdentityReport r = ladfn::verify_gen_schwab(fn("ld"), fn("E"), u, v, 300, sieve());
    CHECK(r.passed());
  }
  SECTION("wrong companion fails") {
    ValueTable e = ladfn::tabulate(fn("E"), 10, sieve());
    IdentityReport r = ladfn::verify_gen_schwab(fn("D"), fn("E"), e, e, 10, sieve());
    CHECK_FALSE(r.passed());
  }
  SECTION("vanishing companion is rejected up front") {
    CHECK_THROWS_AS(ladfn::verify_gen_schwab(fn("D"), fn("eps"), u, v, 300, sieve()),
                    ladfn::domain_error);
  }
}

TEST_CASE("derivative of a convolution, fixed and random tables") {
  SECTION("ones tables") {
    ValueTable e = ladfn::tabulate(fn("E"), 500, sieve());
    IdentityReport r = ladfn::verify_cor33(e, e, 500, sieve());
    CHECK(r.passed());
    CHECK(r.checks == 500);
  }
  SECTION("unit table degenerates both sides") {
    ValueTable eps = ladfn::tabulate(fn("eps"), 100, sieve());
    ValueTable v = ladfn::random_table(100, 17);
    IdentityReport r = ladfn::verify_cor33(eps, v, 100, sieve());
    CHECK(r.passed());
  }
  SECTION("random tables") {
    IdentityReport r = ladfn::verify_cor33(ladfn::random_table(300, 8),
                                           ladfn::random_table(300, 9), 300, sieve());
    CHECK(r.passed());
  }
}

TEST_CASE("squared-convolution sweep") {
  SECTION("derivative against ones") {
    ValueTable e = ladfn::tabulate(fn("E"), 500, sieve());
    IdentityReport r = ladfn::verify_square_conv(fn("D"), fn("N"), e, 500, sieve());
    CHECK(r.passed());
  }
  SECTION("zero table passes trivially") {
    ValueTable zero(200);
    IdentityReport r = ladfn::verify_square_conv(fn("D"), fn("N"), zero, 200, sieve());
    CHECK(r.passed());
  }
  SECTION("wrong companion fails") {
    ValueTable e = ladfn::tabulate(fn("E"), 10, sieve());
    IdentityReport r = ladfn::verify_square_conv(fn("D"), fn("E"), e, 10, sieve());
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("divisor-count identity") {
  SECTION("derivative") {
    IdentityReport r = ladfn::verify_tau_identity(fn("D"), fn("N"), 1000, sieve());
    CHECK(r.passed());
    CHECK(r.checks == 1000);
  }
  SECTION("logarithmic derivative") {
    IdentityReport r = ladfn::verify_tau_identity(fn("ld"), fn("E"), 500, sieve());
    CHECK(r.passed());
  }
  SECTION("a completely multiplicative f fails at once") {
    IdentityReport r = ladfn::verify_tau_identity(fn("N"), fn("N"), 10, sieve());
    REQUIRE_FALSE(r.passed());
    CHECK(r.failure->witness == "n=1");
    CHECK(r.failure->lhs == Rational(1));
    CHECK(r.failure->rhs == Rational(2));
  }
}

TEST_CASE("distributivity over convolution marks complete multiplicativity") {
  ValueTable u = ladfn::random_table(300, 10);
  ValueTable v = ladfn::random_table(300, 11);
  CHECK(ladfn::verify_distributivity(fn("N"), u, v, 300, sieve()).passed());
  CHECK(ladfn::verify_distributivity(fn("E"), u, v, 300, sieve()).passed());
  CHECK(ladfn::verify_distributivity(fn("cmul{2: -1; default p}"), u, v, 200, sieve())
            .passed());

  ValueTable e = ladfn::tabulate(fn("E"), 12, sieve());
  IdentityReport r = ladfn::verify_distributivity(fn("D"), e, e, 12, sieve());
  REQUIRE_FALSE(r.passed());
  CHECK(r.failure->witness == "n=2");
}

TEST_CASE("perturbing one value breaks the divisor-count identity") {
  // the identity f tau = 2 (f * h) characterizes L-additive f: a table
  // that agrees with an L-additive function everywhere but one prime
  // square must be caught
  std::size_t limit = 60;
  ValueTable f = ladfn::tabulate(fn("mul(cadd{2: 3/2, 3: -1; default 1/p}, "
                                    "cmul{default p})"),
                                 limit, sieve());
  ValueTable h = ladfn::tabulate(fn("cmul{default p}"), limit, sieve());
  ValueTable tau = ladfn::tabulate(fn("tau"), limit, sieve());

  auto holds = [&](const ValueTable& ft) {
    ValueTable rhs = ladfn::convolve_prefix(ft, h);
    for (std::size_t n = 1; n <= limit; ++n)
      if (ft[n] * tau[n] != rhs[n] + rhs[n]) return false;
    return true;
  };
  CHECK(holds(f));
  f[49] += Rational(1);
  CHECK_FALSE(holds(f));
}

TEST_CASE("random tables are reproducible and bounded") {
  ValueTable a = ladfn::random_table(500, 123);
  ValueTable b = ladfn::random_table(500, 123);
  ValueTable c = ladfn::random_table(500, 124);
  bool all_equal = true, any_difference = false, bounded = true;
  for (std::size_t n = 1; n <= 500; ++n) {
    all_equal = all_equal && a[n] == b[n];
    any_difference = any_difference || a[n] != c[n];
    bounded = bounded && a[n] >= Rational(-9) && a[n] <= Rational(9) &&
              a[n].is_integer();
  }
  CHECK(all_equal);
  CHECK(any_difference);
  CHECK(bounded);
}

TEST_CASE("report lines carry the seed only when one was used") {
  IdentityReport r = ladfn::verify_tau_identity(fn("D"), fn("N"), 50, sieve());
  CHECK(r.line() == "PASS tau checks=50 limit=50");
  r.seed = 99;
  CHECK(r.line() == "PASS tau checks=50 limit=50 seed=99");
}

TEST_CASE("table ranges are validated") {
  ValueTable small(10);
  CHECK_THROWS_AS(ladfn::verify_schwab(fn("ld"), small, small, 20, sieve()),
                  ladfn::domain_error);
  CHECK_THROWS_AS(ladfn::verify_cor33(small, small, 20, sieve()),
                  ladfn::domain_error);
}
