#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "sc/exact.hpp"

using namespace sc;

namespace {

// Independent oracles: direct products and a hand-rolled extended gcd,
// deliberately separate from the library's code paths.

Int product_factorial(long n) {
  Int r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int egcd_inverse(Int a, Int m) {
  Int old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  REQUIRE(old_r == 1);
  Int inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

Int oracle_reduce(const Rational& q, long p, int e) {
  Int mod(1);
  for (int i = 0; i < e; ++i) mod *= p;
  Int num = q.get_num() % mod;
  if (num < 0) num += mod;
  return num * egcd_inverse(q.get_den(), mod) % mod;
}

}  // namespace

TEST_CASE("factorial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);  // == direct product oracle below
  for (long n : {10L, 37L, 200L}) CHECK(factorial(n) == product_factorial(n));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("factorial table beyond cap computes on the fly") {
  FactorialTable small(10);
  CHECK(small(12) == product_factorial(12));
  CHECK(small(3) == 6);
  CHECK(small(25) == product_factorial(25));
}

TEST_CASE("factorial table survives concurrent readers and growth") {
  FactorialTable table(2000);
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      std::mt19937_64 rng(t);
      std::uniform_int_distribution<long> arg(0, 1500);
      for (int i = 0; i < 400; ++i) {
        long n = arg(rng);
        if (table(n) != product_factorial(n)) ok = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(ok);
}

TEST_CASE("binomial examples and edges") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  // factorial quotient oracle
  CHECK(binomial(8, 4) == product_factorial(8) /
                              (product_factorial(4) * product_factorial(4)));
  CHECK(binomial(8, 4) == 70);
  CHECK_THROWS_AS(binomial(-2, 1), std::domain_error);
}

TEST_CASE("Pascal rule up to 200") {
  for (long n = 1; n <= 200; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("reduce examples against extended gcd oracle") {
  PrimePower p27(3, 3);
  // 243/8: 243 = 3^5, so the numerator vanishes mod 27
  CHECK(reduce(make_rational(243, 8), p27).value() == 0);
  // 2 * 14 = 28 == 1 (mod 27)
  CHECK(reduce(make_rational(1, 2), p27).value() == 14);
  CHECK(reduce(make_rational(1, 2), p27).value() ==
        oracle_reduce(make_rational(1, 2), 3, 3));
  CHECK_THROWS_AS(reduce(make_rational(1, 3), p27), NotPIntegral);
  try {
    reduce(make_rational(1, 18), p27);
    FAIL("expected NotPIntegral");
  } catch (const NotPIntegral& e) {
    CHECK(e.denominator_valuation() == 2);
  }
}

TEST_CASE("reduce is compatible across exponents") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (long p : {3L, 5L, 13L}) {
    for (int iter = 0; iter < 200; ++iter) {
      long d = den(rng);
      while (d % p == 0) d = den(rng);
      Rational q = make_rational(num(rng), d);
      for (int e = 2; e <= 4; ++e) {
        Int hi = reduce(q, PrimePower(p, e)).value();
        Int lo = reduce(q, PrimePower(p, e - 1)).value();
        Int mod_lo = PrimePower(p, e - 1).modulus();
        CHECK(hi % mod_lo == lo);
      }
    }
  }
}

TEST_CASE("reduce is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-300, 300);
  std::uniform_int_distribution<long> den(1, 300);
  PrimePower m(7, 3);
  for (int iter = 0; iter < 300; ++iter) {
    long da = den(rng), db = den(rng);
    while (da % 7 == 0) da = den(rng);
    while (db % 7 == 0) db = den(rng);
    Rational a = make_rational(num(rng), da);
    Rational b = make_rational(num(rng), db);
    CHECK(reduce(a + b, m) == reduce(a, m) + reduce(b, m));
    CHECK(reduce(a * b, m) == reduce(a, m) * reduce(b, m));
  }
}

TEST_CASE("residue arithmetic rejects mixed moduli") {
  Residue a(Int(4), PrimePower(5, 2));
  Residue b(Int(4), PrimePower(5, 3));
  CHECK_THROWS_AS(a + b, std::domain_error);
}

TEST_CASE("prime power validation") {
  CHECK_THROWS_AS(PrimePower(9, 2), std::domain_error);
  CHECK_THROWS_AS(PrimePower(2, 1), std::domain_error);
  CHECK_THROWS_AS(PrimePower(5, 5), std::domain_error);
  CHECK(PrimePower(499, 4).modulus() == Int("62001498001"));
}

TEST_CASE("factorial ratio convention") {
  CHECK(eval_factorial_ratio({{2}, {1, 1}, Rational(1)}) == 2);
  // squared negative denominator argument: zero order 2 beats pole order 0
  CHECK(eval_factorial_ratio({{4}, {-1, -1}, Rational(1)}) == 0);
  // zero order 3 strictly beats pole order 1
  CHECK(eval_factorial_ratio({{-2}, {-1, -1, -10}, Rational(1)}) == 0);
  CHECK_THROWS_AS(eval_factorial_ratio({{-1}, {2}, Rational(1)}),
                  OutsideDomain);
  CHECK_THROWS_AS(eval_factorial_ratio({{-1, -3}, {-2, 5}, Rational(1)}),
                  OutsideDomain);
}

TEST_CASE("factorial ratio matches direct quotient on random instances") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> arg(0, 40);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<long> sc_num(-20, 20);
  std::uniform_int_distribution<long> sc_den(1, 20);
  for (int iter = 0; iter < 1000; ++iter) {
    FactorialRatio fr;
    int nn = count(rng), nd = count(rng);
    for (int i = 0; i < nn; ++i) fr.numerator_args.push_back(arg(rng));
    for (int i = 0; i < nd; ++i) fr.denominator_args.push_back(arg(rng));
    fr.scalar = make_rational(sc_num(rng), sc_den(rng));
    Int num(1), den(1);
    for (long a : fr.numerator_args) num *= product_factorial(a);
    for (long a : fr.denominator_args) den *= product_factorial(a);
    CHECK(eval_factorial_ratio(fr) == fr.scalar * make_rational(num, den));
  }
}
