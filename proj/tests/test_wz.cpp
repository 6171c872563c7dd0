#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sc/numthy.hpp"
#include "sc/wz.hpp"

using namespace sc;
namespace wz = sc::wz;

namespace {

Int fac(long n) {
  Int r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Direct factorial-formula oracle for F at interior points where every
// factorial argument is nonnegative.
Rational oracle_F(long n, long k) {
  Rational num = Rational(Int(n) * (6 * n - 4 * k - 3)) *
                 Rational(fac(2 * k) * fac(4 * n - 2 * k - 2)) *
                 Rational(fac(3 * n - k - 2) * fac(2 * n - 2 * k - 2));
  Rational den = sc::pow2(6 * n - 2 * k) *
                 Rational(fac(2 * n - k - 1) * fac(2 * n - k - 1)) *
                 Rational(fac(n - k - 1) * fac(n - k - 1)) *
                 Rational(fac(2 * n) * fac(n - 1) * fac(k));
  return num / den;
}

Rational oracle_G(long n, long k) {
  Rational num = Rational(-wz::alpha(n, k)) *
                 Rational(fac(4 * n - 2 * k) * fac(3 * n - k - 1)) *
                 Rational(fac(2 * n - 2 * k) * fac(2 * k));
  Rational den =
      sc::pow2(6 * n - 2 * k + 6) *
      Rational(fac(2 * n - k + 1) * fac(2 * n - k)) *
      Rational(fac(n - k - 1) * fac(n - k - 1) * Int(n - k) * (n - k)) *
      Rational(fac(2 * n + 1) * fac(n) * fac(k));
  return num / den;
}

}  // namespace

TEST_CASE("certificate polynomial") {
  CHECK(wz::alpha(0, 0) == 0);
  CHECK(wz::alpha(1, 0) == 486);  // 184 + 214 + 79 + 9
  CHECK(wz::alpha(1, 1) == 90);
}

TEST_CASE("F values") {
  CHECK(wz::F(0, 3) == 0);
  CHECK(wz::F(1, 0) == make_rational(3, 64));
  CHECK(wz::F(2, 1) == make_rational(15, 512));
  for (long n = 1; n <= 8; ++n)
    for (long k = 0; k <= n - 1; ++k) CHECK(wz::F(n, k) == oracle_F(n, k));
}

TEST_CASE("G values") {
  CHECK(wz::G(2, 5) == 0);
  CHECK(wz::G(1, 0) == make_rational(-81, 512));
  CHECK_THROWS_AS(wz::G(1, 1), wz::PoleAtDiagonal);
  CHECK_THROWS_AS(wz::G(0, 0), wz::PoleAtDiagonal);
  for (long n = 1; n <= 8; ++n)
    for (long k = 0; k <= n - 1; ++k) CHECK(wz::G(n, k) == oracle_G(n, k));
}

TEST_CASE("pair equation on a small grid") {
  CHECK(wz::pair_equation_holds(1, 0));
  CHECK(wz::pair_equation_holds(3, 1));
  CHECK(wz::pair_equation_holds(2, 4));  // both sides collapse to zeros
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= 14; ++k) {
      if (k == n || k + 1 == n) continue;
      CHECK(wz::pair_equation_holds(n, k));
    }
}

TEST_CASE("pair equation next to the diagonal uses the combined rows") {
  // At k = n-1 and k = n the single-row statement would need G(n,n);
  // the combined two-row statement avoids it and must still hold.
  for (long n = 1; n <= 12; ++n) {
    CHECK(wz::pair_equation_holds(n, n - 1));
    CHECK(wz::pair_equation_holds(n, n));
  }
  CHECK_THROWS_AS(wz::pair_equation_holds(0, 2), std::domain_error);
}

TEST_CASE("closed form of G(n,0)") {
  CHECK(wz::closed_form_G0(1) == make_rational(-81, 512));
  CHECK(wz::closed_form_G0(0) == make_rational(-3, 64));
  for (long n = 1; n <= 50; ++n) CHECK(wz::closed_form_G0(n) == wz::G(n, 0));
}

TEST_CASE("closed form of F((p-1)/2, k)") {
  CHECK(wz::closed_form_F_half(5, 0) == wz::F(2, 0));
  CHECK(wz::closed_form_F_half(7, 1) == wz::F(3, 1));
  CHECK(wz::closed_form_F_half(11, 4) == wz::F(5, 4));
  for (long p : primes_in_range(3, 61))
    for (long k = 0; k <= (p - 3) / 2; ++k)
      CHECK(wz::closed_form_F_half(p, k) == wz::F((p - 1) / 2, k));
  CHECK_THROWS_AS(wz::closed_form_F_half(7, 3), std::domain_error);
  CHECK_THROWS_AS(wz::closed_form_F_half(9, 0), std::domain_error);
}

TEST_CASE("boundary zeros of F((p-1)/2, k)") {
  for (long p : primes_in_range(3, 61))
    for (long k = (p - 1) / 2; k <= p - 1; ++k)
      CHECK(wz::F((p - 1) / 2, k) == 0);
}

TEST_CASE("row telescope") {
  CHECK(wz::row_telescope_holds(1, 5));
  CHECK(wz::row_telescope_holds(3, 9));
  CHECK(wz::row_telescope_holds(6, 20));
  CHECK_THROWS_AS(wz::row_telescope_holds(3, 4), std::domain_error);
}

TEST_CASE("half telescope") {
  CHECK(wz::half_telescope_holds(5));
  CHECK(wz::half_telescope_holds(7));
  CHECK(wz::half_telescope_holds(13));
}

TEST_CASE("full telescope") {
  CHECK(wz::full_telescope_holds(3));
  CHECK(wz::full_telescope_holds(5));
  CHECK(wz::full_telescope_holds(11));
}

TEST_CASE("companion terms factor F(p,k) exactly") {
  for (long p : {3L, 5L, 7L, 13L}) {
    Rational scale = Rational(Int(p)) * Rational(binomial(3 * p - 1, 2 * p)) *
                     sc::pow2(-6 * p);
    for (long k = 0; k <= p - 1; ++k)
      CHECK(wz::F(p, k) == scale * wz::b_term(p, k));
  }
}
