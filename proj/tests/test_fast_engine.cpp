#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sc/catalog.hpp"

using namespace sc;
using namespace sc::catalog;

TEST_CASE("factorial decomposition n! = p^v * u") {
  fast::Workspace ws(7, 6);
  Int p6 = ws.working_modulus();
  for (long n : {0L, 1L, 6L, 7L, 30L, 48L, 300L}) {
    long v;
    Int u;
    ws.factorial_vu(n, v, u);
    Int direct(1);
    for (long i = 2; i <= n; ++i) direct *= i;
    Int pv(1);
    for (long i = 0; i < v; ++i) pv *= 7;
    CHECK(direct % pv == 0);
    Int unit_exact = direct / pv;
    CHECK(unit_exact % 7 != 0);
    CHECK(unit_exact % p6 == u);
  }
}

TEST_CASE("p-adic values reproduce exact reduction on random rationals") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-40000, 40000);
  std::uniform_int_distribution<long> den(1, 40000);
  for (long p : {3L, 13L, 199L}) {
    fast::Workspace ws(p, 12);
    for (int iter = 0; iter < 300; ++iter) {
      long d = den(rng);
      while (d % p == 0) d = den(rng);
      long a = num(rng);
      Rational q = make_rational(a, d);
      fast::PVal x = fast::from_rational(ws, Int(a), Int(d));
      for (int e = 1; e <= 4; ++e)
        CHECK(fast::to_residue(x, e) == reduce(q, PrimePower(p, e)).value());
    }
  }
}

TEST_CASE("p-adic arithmetic agrees with rational arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  long p = 11;
  fast::Workspace ws(p, 12);
  PrimePower m(p, 4);
  for (int iter = 0; iter < 500; ++iter) {
    long d1 = den(rng), d2 = den(rng);
    long a1 = num(rng), a2 = num(rng);
    Rational q1 = make_rational(a1, d1), q2 = make_rational(a2, d2);
    fast::PVal x1 = fast::from_rational(ws, Int(a1), Int(d1));
    fast::PVal x2 = fast::from_rational(ws, Int(a2), Int(d2));
    Rational sum = q1 + q2, prod = q1 * q2, diff = q1 - q2;
    auto check_against = [&](const Rational& want, const fast::PVal& got) {
      if (mpz_divisible_ui_p(want.get_den().get_mpz_t(), p)) return;
      CHECK(fast::to_residue(got, 4) == reduce(want, m).value());
    };
    check_against(sum, x1 + x2);
    check_against(diff, x1 - x2);
    check_against(prod, x1 * x2);
    if (a2 != 0) check_against(q1 / q2, x1 / x2);
  }
}

TEST_CASE("binomials with p-power content") {
  for (long p : {5L, 13L}) {
    fast::Workspace ws(p, 12);
    for (long n = 0; n <= 4 * p; ++n)
      for (long k = -1; k <= n + 1; ++k) {
        Int expected = (k < 0 || k > n) ? Int(0) : binomial(n, k);
        CHECK(fast::to_residue(fast::binom(ws, n, k), 3) ==
              expected % PrimePower(p, 3).modulus());
      }
  }
}

TEST_CASE("negative valuation values reduce or refuse correctly") {
  fast::Workspace ws(5, 12);
  fast::PVal third = fast::from_rational(ws, Int(1), Int(5));  // 1/5
  CHECK_THROWS_AS(fast::to_residue(third, 2), NotPIntegral);
  fast::PVal x = third * fast::from_int(ws, 10);  // = 2
  CHECK(fast::to_residue(x, 3) == 2);
  fast::PVal y = third + fast::from_rational(ws, Int(4), Int(5));  // = 1
  CHECK(fast::to_residue(y, 3) == 1);
}

TEST_CASE("engines agree on every entry at sample primes") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 31L, 97L}) {
    for (const Entry& e : registry()) {
      CheckResult exact = check(e, p, Engine::exact);
      CheckResult fast_r = check(e, p, Engine::fast);
      INFO(e.id << " at p=" << p);
      CHECK(results_agree(exact, fast_r));
      if (!exact.skipped) CHECK(exact.pass);
    }
  }
}

TEST_CASE("engines agree across the unit-carrier boundary") {
  // 509 is the largest single-limb prime; 521 falls back to big units.
  REQUIRE(fast::kWordPrimeMax == 509);
  for (long p : {509L, 521L, 523L}) {
    for (const Entry& e : registry()) {
      CheckResult exact = check(e, p, Engine::exact);
      CheckResult fast_r = check(e, p, Engine::fast);
      INFO(e.id << " at p=" << p);
      CHECK(results_agree(exact, fast_r));
      CHECK(exact.pass);
    }
  }
}

TEST_CASE("fast engine representative independence") {
  for (const char* id : {"C-03", "A-Quarter1"}) {
    const Entry* e = find_entry(id);
    REQUIRE(e != nullptr);
    long p = 13;
    FastCtx plain(p, 0), shifted(p, 1);
    auto a = e->fast_eval(plain);
    auto b = e->fast_eval(shifted);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(fast::to_residue(a[i].second, e->exponent) ==
            fast::to_residue(b[i].second, e->exponent));
  }
}
