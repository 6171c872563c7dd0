#include "sc/catalog.hpp"

namespace sc::catalog {

// ---------------------------------------------------------------------
// Registry. Each entry's two sides are written once, against the shared
// context vocabulary, and instantiated for every engine carrier.

namespace {

template <class Cx>
using VT = typename std::decay_t<Cx>::V;

template <class Cx>
using Claims = std::vector<std::pair<VT<Cx>, VT<Cx>>>;

template <class Body>
Entry def(std::string id, int exponent, long min_prime, std::string family,
          std::string description, std::string statement, Body body) {
  Entry e;
  e.id = std::move(id);
  e.exponent = exponent;
  e.min_prime = min_prime;
  e.family = std::move(family);
  e.description = std::move(description);
  e.statement = std::move(statement);
  e.exact_eval = [body](ExactCtx& cx) { return body(cx); };
  e.fast_eval = [body](FastCtx& cx) { return body(cx); };
  e.fast64_eval = [body](FastCtx64& cx) { return body(cx); };
  return e;
}

// sum_{k=0}^{kmax} (92k^2+61k+9)/((2k+1) 64^k) C(2k,k) C(3k,k) C(4k,2k)
template <class Cx>
VT<Cx> sun_sum(Cx& cx, long kmax) {
  auto s = cx.i(0);
  for (long k = 0; k <= kmax; ++k) {
    s = s + cx.r(92 * k * k + 61 * k + 9, 2 * k + 1) * cx.pow2(-6 * k) *
                cx.binom(2 * k, k) * cx.binom(3 * k, k) *
                cx.binom(4 * k, 2 * k);
  }
  return s;
}

// sum_{k=1}^{(p-1)/2} C(2k,k)/2^k
template <class Cx>
VT<Cx> central_half_sum(Cx& cx) {
  auto s = cx.i(0);
  for (long k = 1; k <= (cx.p - 1) / 2; ++k)
    s = s + cx.binom(2 * k, k) * cx.pow2(-k);
  return s;
}

// sum_{k=1}^{(p-1)/2} 2^k/k
template <class Cx>
VT<Cx> pow_over_k_sum(Cx& cx) {
  auto s = cx.i(0);
  for (long k = 1; k <= (cx.p - 1) / 2; ++k) s = s + cx.pow2(k) / cx.i(k);
  return s;
}

// k-th term of the companion sum B
template <class Cx>
VT<Cx> b_term(Cx& cx, long k) {
  long p = cx.p;
  auto num = cx.i((6 * p - 4 * k - 3) * (p - k)) * cx.pow2(2 * k) *
             cx.binom(2 * k, k) * cx.binom(2 * p - 2 * k, p - k) *
             cx.binom(4 * p - 2 * k - 2, 2 * p - k - 1);
  auto den = cx.i(2 * (3 * p - k - 1) * (2 * p - 2 * k - 1)) *
             cx.binom(3 * p - 1, k);
  return num / den;
}

// sum of B terms over the reversal window k = (p+1)/2 .. p-2
template <class Cx>
VT<Cx> b_tail(Cx& cx) {
  auto s = cx.i(0);
  for (long k = (cx.p + 1) / 2; k <= cx.p - 2; ++k) s = s + b_term(cx, k);
  return s;
}

// k-th term of the index-reversed tail (k = 1 .. (p-3)/2)
template <class Cx>
VT<Cx> reversed_tail_term(Cx& cx, long k) {
  long p = cx.p;
  auto num = cx.i((2 * p + 4 * k + 1) * (p - k)) *
             cx.pow2(2 * (p - 1 - k)) * cx.binom(2 * k, k) *
             cx.binom(2 * p - 2 * k, p - k) * cx.binom(2 * p + 2 * k, p + k);
  auto den = cx.i(2 * (2 * p + k) * (2 * p - 2 * k - 1)) *
             cx.binom(3 * p - 1, p - 1 - k);
  return num / den;
}

// sum_{k=1}^{(p-3)/2} C(2k,k)(1+4k) / ((-4)^k k (1+2k))
template <class Cx>
VT<Cx> alt_central_sum(Cx& cx) {
  auto s = cx.i(0);
  for (long k = 1; k <= (cx.p - 3) / 2; ++k) {
    s = s + cx.neg1(k) * cx.binom(2 * k, k) * cx.i(1 + 4 * k) /
                (cx.pow2(2 * k) * cx.i(k * (1 + 2 * k)));
  }
  return s;
}

// A1 = sum_{k=1}^{(p-7)/2} 4^k (3p-4k-6) C(2k,k) C(2p-2k-4,p-k-2)
//      C(p-3-2k,(p-3-2k)/2) / ((3p-2k-5) C((3p-5)/2,k))
template <class Cx>
VT<Cx> a1_sum(Cx& cx) {
  long p = cx.p;
  auto s = cx.i(0);
  for (long k = 1; k <= (p - 7) / 2; ++k) {
    auto num = cx.pow2(2 * k) * cx.i(3 * p - 4 * k - 6) *
               cx.binom(2 * k, k) * cx.binom(2 * p - 2 * k - 4, p - k - 2) *
               cx.binom(p - 3 - 2 * k, (p - 3 - 2 * k) / 2);
    auto den = cx.i(3 * p - 2 * k - 5) * cx.binom((3 * p - 5) / 2, k);
    s = s + num / den;
  }
  return s;
}

// A2, the boundary part of the half-range decomposition
template <class Cx>
VT<Cx> a2_value(Cx& cx) {
  long p = cx.p;
  auto t1 = cx.i(Int(72) * (p - 1) * (p - 1) * (p - 1)) *
            cx.pow2(-3 * (p - 1)) / cx.i(Int(2 * p - 3) * (3 * p - 5)) *
            cx.binom((3 * p - 5) / 2, p - 1) * cx.binom(2 * p - 2, p - 1) *
            cx.binom(p - 1, (p - 1) / 2);
  auto bracket = cx.i(1) + cx.i(Int(p - 1) * (p + 4)) /
                              cx.i(Int(p + 1) * (p - 4));
  auto half_binom = cx.binom(p - 1, (p - 1) / 2);
  auto t2 = cx.i(Int(6 * p) * (p - 1)) * cx.pow2(-2 * (p - 1)) /
            cx.i(p - 2) * bracket * half_binom * half_binom;
  return t1 + t2;
}

// boundary terms of the full-range companion congruence
template <class Cx>
VT<Cx> b_boundary_k0(Cx& cx) {
  long p = cx.p;
  return cx.i(6 * p - 3) * cx.binom(4 * p - 2, 2 * p - 1) *
         cx.binom(2 * p - 2, p - 1) / cx.i(3 * p - 1);
}

template <class Cx>
VT<Cx> b_boundary_mid(Cx& cx) {
  long p = cx.p;
  auto half_binom = cx.binom(p - 1, (p - 1) / 2);
  return cx.i(2) * cx.i(4 * p - 1) * cx.pow2(p - 1) * half_binom *
         half_binom * cx.binom(3 * p - 1, (3 * p - 1) / 2) /
         (cx.i(5 * p - 1) * cx.binom(3 * p - 1, (p - 1) / 2));
}

template <class Cx>
VT<Cx> b_boundary_last(Cx& cx) {
  long p = cx.p;
  auto central = cx.binom(2 * p - 2, p - 1);
  return cx.pow2(2 * (p - 1)) * cx.i(Int(4) * p * p - 1) * central * central /
         (cx.i(Int(p) * p) * cx.binom(3 * p - 1, p - 1));
}

template <class Cx>
VT<Cx> full_companion_lhs(Cx& cx) {
  long p = cx.p;
  auto b = cx.i(0);
  for (long k = 0; k <= p - 1; ++k) b = b + b_term(cx, k);
  return cx.i(192 * p) * cx.binom(3 * p - 1, 2 * p) * cx.pow2(-6 * p) * b;
}

std::vector<Entry> build_registry() {
  std::vector<Entry> reg;

  // ----- headline congruences -------------------------------------------

  reg.push_back(def(
      "C-01", 3, 3, "",
      "half-range central binomial product sum, base congruence",
      "sum_{k=0}^{(p-3)/2} (92k^2+61k+9)/((2k+1)64^k) C(2k,k)C(3k,k)C(4k,2k) "
      "== 6p + 16p^2 (-1/p)  (mod p^3)",
      [](auto& cx) {
        long p = cx.p;
        auto lhs = sun_sum(cx, (p - 3) / 2);
        auto rhs = cx.i(6 * p) + cx.i(16 * p * p) * cx.leg();
        return Claims<decltype(cx)>{{lhs, rhs}};
      }));

  reg.push_back(def(
      "C-03", 4, 3, "",
      "half-range central binomial product sum, strengthened mod p^4",
      "sum_{k=0}^{(p-3)/2} (92k^2+61k+9)/((2k+1)64^k) C(2k,k)C(3k,k)C(4k,2k) "
      "== 6p + (16p^2+52p^3-48p^3 q)(-1/p) - 12p^3 (-1/p) E  (mod p^4)",
      [](auto& cx) {
        long p = cx.p;
        auto lhs = sun_sum(cx, (p - 3) / 2);
        auto rhs = cx.i(6 * p) +
                   (cx.i(Int(16) * p * p + Int(52) * p * p * p) -
                    cx.i(Int(48) * p * p * p) * cx.q2()) *
                       cx.leg() -
                   cx.i(Int(12) * p * p * p) * cx.leg() * cx.eup3();
        return Claims<decltype(cx)>{{lhs, rhs}};
      }));

  reg.push_back(def(
      "C-04", 3, 3, "",
      "full-range central binomial product sum",
      "sum_{k=0}^{p-1} (92k^2+61k+9)/((2k+1)64^k) C(2k,k)C(3k,k)C(4k,2k) "
      "== 9p  (mod p^3)",
      [](auto& cx) {
        auto lhs = sun_sum(cx, cx.p - 1);
        return Claims<decltype(cx)>{{lhs, cx.i(9 * cx.p)}};
      }));

  reg.push_back(def(
      "C-05", 1, 3, "",
      "half-range sum of C(2k,k)/2^k, first order",
      "sum_{k=1}^{(p-1)/2} C(2k,k)/2^k == (-1/p) - 1  (mod p)",
      [](auto& cx) {
        return Claims<decltype(cx)>{
            {central_half_sum(cx), cx.leg() - cx.i(1)}};
      }));

  reg.push_back(def(
      "C-06", 2, 3, "",
      "half-range sum of C(2k,k)/2^k, second order",
      "sum_{k=1}^{(p-1)/2} C(2k,k)/2^k == -(p/2)(-1/p) sum_{k=1}^{(p-1)/2} "
      "2^k/k + (-1/p) - 1  (mod p^2)",
      [](auto& cx) {
        long p = cx.p;
        auto rhs = cx.i(0) - cx.r(p, 2) * cx.leg() * pow_over_k_sum(cx) +
                   cx.leg() - cx.i(1);
        return Claims<decltype(cx)>{{central_half_sum(cx), rhs}};
      }));

  // ----- harmonic-weighted triple-product sums ----------------------------

  reg.push_back(def(
      "L-2.1a", 1, 5, "",
      "alternating H_k/k over the half range",
      "sum_{k=1}^{(p-1)/2} (-1)^k H(k)/k == q^2/2 + (-1/p) E  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 1) / 2; ++k)
          s = s + cx.neg1(k) * cx.H(k) / cx.i(k);
        auto rhs = cx.r(1, 2) * cx.q2() * cx.q2() + cx.leg() * cx.eup3();
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "L-2.1b", 1, 5, "",
      "H_k/k over indices divisible by four",
      "sum_{k=1, 4|k}^{p-1} H(k)/k == (5/16) q^2  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 4; k <= cx.p - 1; k += 4) s = s + cx.H(k) / cx.i(k);
        auto rhs = cx.r(5, 16) * cx.q2() * cx.q2();
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "L-2.1c", 1, 5, "",
      "H_{2k}/k over the half range",
      "sum_{k=1}^{(p-1)/2} H(2k)/k == q^2  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 1) / 2; ++k)
          s = s + cx.H(2 * k) / cx.i(k);
        return Claims<decltype(cx)>{{s, cx.q2() * cx.q2()}};
      }));

  reg.push_back(def(
      "L-2.2a", 2, 7, "",
      "alternating odd-denominator triple product sum",
      "sum_{k=1}^{(p-7)/2} (-1)^k/((2k+1)(2k+3)(2k+5)) == "
      "(-1/p)(q/4 - p q^2/8 - 11p/128 - 5/32) - 2/5  (mod p^2)",
      [](auto& cx) {
        long p = cx.p;
        auto s = cx.i(0);
        for (long k = 1; k <= (p - 7) / 2; ++k)
          s = s + cx.neg1(k) /
                      cx.i((2 * k + 1) * (2 * k + 3) * (2 * k + 5));
        auto q = cx.q2();
        auto rhs = cx.leg() * (q / cx.i(4) - cx.r(p, 8) * q * q -
                               cx.r(11 * p, 128) - cx.r(5, 32)) -
                   cx.r(2, 5);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "L-2.2b", 1, 7, "",
      "H_k-weighted variant of the triple product sum",
      "sum_{k=1}^{(p-7)/2} (-1)^k H(k)/((2k+1)(2k+3)(2k+5)) == "
      "(-1/p)((35/48)q - q^2/2 - 77/72) + q/3 + E/4 - 29/36  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 7) / 2; ++k)
          s = s + cx.neg1(k) * cx.H(k) /
                      cx.i((2 * k + 1) * (2 * k + 3) * (2 * k + 5));
        auto q = cx.q2();
        auto rhs = cx.leg() * (cx.r(35, 48) * q - cx.r(1, 2) * q * q -
                               cx.r(77, 72)) +
                   cx.r(1, 3) * q + cx.r(1, 4) * cx.eup3() - cx.r(29, 36);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "L-2.2c", 1, 7, "",
      "H_{2k}-weighted variant of the triple product sum",
      "sum_{k=1}^{(p-7)/2} (-1)^k H(2k)/((2k+1)(2k+3)(2k+5)) == "
      "(-1/p)((19/48)q - q^2/16 - 13/18) + q/6 - 11/18  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 7) / 2; ++k)
          s = s + cx.neg1(k) * cx.H(2 * k) /
                      cx.i((2 * k + 1) * (2 * k + 3) * (2 * k + 5));
        auto q = cx.q2();
        auto rhs = cx.leg() * (cx.r(19, 48) * q - cx.r(1, 16) * q * q -
                               cx.r(13, 18)) +
                   cx.r(1, 6) * q - cx.r(11, 18);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  // ----- classical and auxiliary harmonic congruences --------------------

  reg.push_back(def(
      "A-Wolstenholme", 2, 5, "",
      "vanishing of H_{p-1}",
      "H(p-1) == 0  (mod p^2)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{cx.H(cx.p - 1), cx.i(0)}};
      }));

  reg.push_back(def(
      "A-Lehmer", 2, 3, "",
      "half harmonic number vs Fermat quotient",
      "H((p-1)/2) == -2q + p q^2  (mod p^2)",
      [](auto& cx) {
        auto q = cx.q2();
        auto rhs = cx.i(0) - cx.i(2) * q + cx.i(cx.p) * q * q;
        return Claims<decltype(cx)>{{cx.H((cx.p - 1) / 2), rhs}};
      }));

  reg.push_back(def(
      "A-AltHalf", 1, 3, "",
      "alternating half harmonic number",
      "Halt((p-1)/2) == -q  (mod p)",
      [](auto& cx) {
        return Claims<decltype(cx)>{
            {cx.Halt((cx.p - 1) / 2), cx.i(0) - cx.q2()}};
      }));

  reg.push_back(def(
      "A-HalfSq", 1, 5, "chain of 2 claims",
      "vanishing of the half sum of 1/k^2",
      "H((p-1)/2, 2) == (1/2) H(p-1, 2) == 0  (mod p)",
      [](auto& cx) {
        auto mid = cx.r(1, 2) * cx.H(cx.p - 1, 2);
        return Claims<decltype(cx)>{{cx.H((cx.p - 1) / 2, 2), mid},
                                    {mid, cx.i(0)}};
      }));

  reg.push_back(def(
      "A-Quarter2", 1, 5, "",
      "quarter-range sum of 1/k^2",
      "H(floor(p/4), 2) == 4 (-1/p) E  (mod p)",
      [](auto& cx) {
        return Claims<decltype(cx)>{
            {cx.H(cx.p / 4, 2), cx.i(4) * cx.leg() * cx.eup3()}};
      }));

  reg.push_back(def(
      "A-Quarter1", 2, 5, "",
      "quarter-range harmonic number",
      "H(floor(p/4)) == -3q + (3/2) p q^2 - (-1/p) p E  (mod p^2)",
      [](auto& cx) {
        auto q = cx.q2();
        auto rhs = cx.i(0) - cx.i(3) * q + cx.r(3 * cx.p, 2) * q * q -
                   cx.leg() * cx.i(cx.p) * cx.eup3();
        return Claims<decltype(cx)>{{cx.H(cx.p / 4), rhs}};
      }));

  reg.push_back(def(
      "A-OddAlt", 2, 5, "",
      "alternating odd-denominator sum",
      "sum_{k=1}^{(p-3)/2} (-1)^k/(1+2k) == (-1/p) q/2 - (-1/p)(p/4) q^2 - 1 "
      " (mod p^2)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 3) / 2; ++k)
          s = s + cx.neg1(k) / cx.i(2 * k + 1);
        auto q = cx.q2();
        auto rhs = cx.leg() * q * cx.r(1, 2) -
                   cx.leg() * cx.r(cx.p, 4) * q * q - cx.i(1);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "A-AltHk", 1, 5, "",
      "alternating H_k over odd denominators",
      "sum_{k=1}^{(p-3)/2} (-1)^k H(k)/(1+2k) == -(-1/p) q^2 + E/2  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 3) / 2; ++k)
          s = s + cx.neg1(k) * cx.H(k) / cx.i(2 * k + 1);
        auto rhs = cx.i(0) - cx.leg() * cx.q2() * cx.q2() +
                   cx.r(1, 2) * cx.eup3();
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "A-AltH2k", 1, 5, "",
      "alternating H_{2k-1} over odd denominators",
      "sum_{k=1}^{(p-3)/2} (-1)^k H(2k-1)/(1+2k) == -(-1/p) q^2/8 + "
      "((1+(-1/p))/2) q - (-1/p) - 1  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 3) / 2; ++k)
          s = s + cx.neg1(k) * cx.H(2 * k - 1) / cx.i(2 * k + 1);
        auto q = cx.q2();
        auto rhs = cx.i(0) - cx.leg() * q * q * cx.r(1, 8) +
                   (cx.i(1) + cx.leg()) * cx.r(1, 2) * q - cx.leg() - cx.i(1);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "A-Hshift", 1, 3, "k = 1 .. (p-1)/2",
      "harmonic shift across the half point",
      "H((p-1)/2 - k) == H((p-1)/2) + 2 H(2k) - H(k)  (mod p)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long half = (cx.p - 1) / 2;
        for (long k = 1; k <= half; ++k) {
          out.emplace_back(cx.H(half - k),
                           cx.H(half) + cx.i(2) * cx.H(2 * k) - cx.H(k));
        }
        return out;
      }));

  reg.push_back(def(
      "A-Hshift2", 1, 3, "k = 1 .. (p-1)/2",
      "harmonic reflection",
      "H(p-2k-1) == H(2k)  (mod p)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        for (long k = 1; k <= (cx.p - 1) / 2; ++k)
          out.emplace_back(cx.H(cx.p - 2 * k - 1), cx.H(2 * k));
        return out;
      }));

  // ----- binomial expansions around the half point ------------------------

  reg.push_back(def(
      "A-03-binom35", 4, 5, "",
      "expansion of C((3p-5)/2, p-1)",
      "C((3p-5)/2, p-1) == -2p(1+3p+9p^2) / (3 * 4^(p-1))  (mod p^4)",
      [](auto& cx) {
        long p = cx.p;
        auto rhs = cx.i(0) -
                   cx.i(Int(2) * p * (1 + 3 * p + Int(9) * p * p)) *
                       cx.pow2(-2 * (p - 1)) / cx.i(3);
        return Claims<decltype(cx)>{{cx.binom((3 * p - 5) / 2, p - 1), rhs}};
      }));

  reg.push_back(def(
      "A-Morley", 3, 5, "",
      "central binomial coefficient vs 4^(p-1)",
      "C(p-1, (p-1)/2) == (-1/p) 4^(p-1)  (mod p^3)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{cx.binom(cx.p - 1, (cx.p - 1) / 2),
                                     cx.leg() * cx.pow2(2 * (cx.p - 1))}};
      }));

  reg.push_back(def(
      "A-03-2p2", 3, 3, "",
      "expansion of C(2p-2, p-1)",
      "C(2p-2, p-1) == -p - 2p^2  (mod p^3)",
      [](auto& cx) {
        long p = cx.p;
        return Claims<decltype(cx)>{
            {cx.binom(2 * p - 2, p - 1), cx.i(-p - 2 * p * p)}};
      }));

  reg.push_back(def(
      "A-03-A2", 4, 7, "",
      "boundary part of the half-range decomposition",
      "A2 == -16p^2(15+49p)(-1/p) / (75 * 8^(p-1)) + (3/8) 4^(p-1) "
      "(16p - 20p^2 + 11p^3)  (mod p^4)",
      [](auto& cx) {
        long p = cx.p;
        auto rhs = cx.i(0) -
                   cx.i(Int(16) * p * p * (15 + 49 * p)) *
                       cx.pow2(-3 * (p - 1)) / cx.i(75) * cx.leg() +
                   cx.r(3, 8) * cx.pow2(2 * (p - 1)) *
                       cx.i(Int(16) * p - Int(20) * p * p +
                            Int(11) * p * p * p);
        return Claims<decltype(cx)>{{a2_value(cx), rhs}};
      }));

  reg.push_back(def(
      "A-03-AltSq", 1, 5, "",
      "alternating half sum of 1/k^2",
      "Halt((p-1)/2, 2) == 2 (-1/p) E  (mod p)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{cx.Halt((cx.p - 1) / 2, 2),
                                     cx.i(2) * cx.leg() * cx.eup3()}};
      }));

  reg.push_back(def(
      "A-03-Cubic", 1, 7, "",
      "cubic-numerator partial fraction sum",
      "sum_{k=1}^{(p-7)/2} (-1)^k(-76k^3-308k^2-387k-158) / "
      "(2(2k+1)^2(2k+3)^2(2k+5)^2(k+1)) == 3007/1800 - q/6 + (q/24)(-1/p) - "
      "(43/576)(-1/p) - (7/8) E  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 7) / 2; ++k) {
          Int num = Int(-76) * k * k * k - Int(308) * k * k - 387 * k - 158;
          Int den = Int(2) * (2 * k + 1) * (2 * k + 1) * (2 * k + 3) *
                    (2 * k + 3) * (2 * k + 5) * (2 * k + 5) * (k + 1);
          s = s + cx.neg1(k) * cx.i(num) / cx.i(den);
        }
        auto q = cx.q2();
        auto rhs = cx.r(3007, 1800) - q / cx.i(6) +
                   q * cx.r(1, 24) * cx.leg() - cx.r(43, 576) * cx.leg() -
                   cx.r(7, 8) * cx.eup3();
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "A-03-7", 3, 5, "k = 1 .. (p-3)/2",
      "central binomial pairing across p",
      "C(2k,k) C(2p-2k,p-k) == -2p(1 - 2p H(k-1) + 2p H(2k-1))/k  (mod p^3)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = 1; k <= (p - 3) / 2; ++k) {
          auto lhs = cx.binom(2 * k, k) * cx.binom(2 * p - 2 * k, p - k);
          auto rhs = (cx.i(0) - cx.i(2 * p) *
                                    (cx.i(1) - cx.i(2 * p) * cx.H(k - 1) +
                                     cx.i(2 * p) * cx.H(2 * k - 1))) /
                     cx.i(k);
          out.emplace_back(lhs, rhs);
        }
        return out;
      }));

  reg.push_back(def(
      "A-03-8", 2, 7, "k = 1 .. (p-7)/2",
      "expansion of C((3p-5)/2, k)",
      "C((3p-5)/2,k) == (-1)^k (2k+1)(2k+3) C(2k,k) / (4^k (3p-1)(3p-3) "
      "(1 - (3p/2) H(k+1) + 3p H(2k+3)))  (mod p^2)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = 1; k <= (p - 7) / 2; ++k) {
          auto den = cx.pow2(2 * k) * cx.i((3 * p - 1) * (3 * p - 3)) *
                     (cx.i(1) - cx.r(3 * p, 2) * cx.H(k + 1) +
                      cx.i(3 * p) * cx.H(2 * k + 3));
          auto rhs = cx.neg1(k) * cx.i((2 * k + 1) * (2 * k + 3)) *
                     cx.binom(2 * k, k) / den;
          out.emplace_back(cx.binom((3 * p - 5) / 2, k), rhs);
        }
        return out;
      }));

  reg.push_back(def(
      "A-03-9", 2, 3, "k = 0 .. (p-1)/2",
      "central binomial with shrunk upper index",
      "C(p-1-2k, (p-1-2k)/2) == (-1/p) 4^(p-1) C(2k,k) (1 - p H(2k) + p "
      "H(k)) / 16^k  (mod p^2)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = 0; k <= (p - 1) / 2; ++k) {
          auto rhs = cx.leg() * cx.pow2(2 * (p - 1)) * cx.binom(2 * k, k) *
                     cx.pow2(-4 * k) *
                     (cx.i(1) - cx.i(p) * cx.H(2 * k) + cx.i(p) * cx.H(k));
          out.emplace_back(cx.binom(p - 1 - 2 * k, (p - 1 - 2 * k) / 2), rhs);
        }
        return out;
      }));

  reg.push_back(def(
      "A-03-A1", 3, 7, "",
      "interior part of the half-range decomposition",
      "A1 == (3/8) 4^(p-1) [((41/32)p^2 - p/4) q - (7/8) p^2 q^2 + ((2/5)p + "
      "(451/900)p^2 - (p^2/4) E)(-1/p) - (51/128)p^2 + (5/32)p]  (mod p^3)",
      [](auto& cx) {
        long p = cx.p;
        auto q = cx.q2();
        auto inner = (cx.r(41 * p * p, 32) - cx.r(p, 4)) * q -
                     cx.r(7 * p * p, 8) * q * q +
                     (cx.r(2 * p, 5) + cx.r(451 * p * p, 900) -
                      cx.r(p * p, 4) * cx.eup3()) *
                         cx.leg() -
                     (cx.r(51 * p * p, 128) - cx.r(5 * p, 32));
        auto rhs = cx.r(3, 8) * cx.pow2(2 * (p - 1)) * inner;
        return Claims<decltype(cx)>{{a1_sum(cx), rhs}};
      }));

  // ----- full-range companion pieces --------------------------------------

  reg.push_back(def(
      "A-04-1", 3, 5, "k = (p+1)/2 .. p-2",
      "central binomial pairing, reversal window",
      "C(2k,k) C(2p-2k,p-k) == (2p/k)(1 - 2p (H(p+k-1) - H(2k-1)))  "
      "(mod p^3)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = (p + 1) / 2; k <= p - 2; ++k) {
          auto lhs = cx.binom(2 * k, k) * cx.binom(2 * p - 2 * k, p - k);
          auto rhs = cx.i(2 * p) / cx.i(k) *
                     (cx.i(1) - cx.i(2 * p) *
                                    (cx.H(p + k - 1) - cx.H(2 * k - 1)));
          out.emplace_back(lhs, rhs);
        }
        return out;
      }));

  reg.push_back(def(
      "A-04-2", 2, 5, "k = (p+1)/2 .. p-2",
      "cross-multiplied tail binomial pairing",
      "C(4p-2k-2, 2p-k-1) (k+1) C(2p-k-1, k+1) == 2 (-1)^k p  (mod p^2)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = (p + 1) / 2; k <= p - 2; ++k) {
          auto lhs = cx.binom(4 * p - 2 * k - 2, 2 * p - k - 1) *
                     cx.i(k + 1) * cx.binom(2 * p - k - 1, k + 1);
          out.emplace_back(lhs, cx.i(2) * cx.neg1(k) * cx.i(p));
        }
        return out;
      }));

  reg.push_back(def(
      "A-04-B", 2, 5, "",
      "companion sum vs its three boundary terms",
      "B == T(k=0) + T(k=(p-1)/2) + T(k=p-1)  (mod p^2)",
      [](auto& cx) {
        auto b = cx.i(0);
        for (long k = 0; k <= cx.p - 1; ++k) b = b + b_term(cx, k);
        auto rhs = b_boundary_k0(cx) + b_boundary_mid(cx) +
                   b_boundary_last(cx);
        return Claims<decltype(cx)>{{b, rhs}};
      }));

  reg.push_back(def(
      "A-04-3p2", 2, 5, "",
      "expansion of C(3p-2, (3p-1)/2)",
      "C(3p-2, (3p-1)/2) == (1 + 2p (H(p-1) - H((p-1)/2))) C(p-1, (p-1)/2)  "
      "(mod p^2)",
      [](auto& cx) {
        long p = cx.p;
        auto rhs = (cx.i(1) + cx.i(2 * p) *
                                  (cx.H(p - 1) - cx.H((p - 1) / 2))) *
                   cx.binom(p - 1, (p - 1) / 2);
        return Claims<decltype(cx)>{
            {cx.binom(3 * p - 2, (3 * p - 1) / 2), rhs}};
      }));

  reg.push_back(def(
      "A-04-ratio", 2, 5, "",
      "ratio of two C(3p-1, .) coefficients",
      "C(3p-1, (3p-1)/2) / C(3p-1, (p-1)/2) == 2 (1 + p H(p-1))  (mod p^2)",
      [](auto& cx) {
        long p = cx.p;
        auto lhs = cx.binom(3 * p - 1, (3 * p - 1) / 2) /
                   cx.binom(3 * p - 1, (p - 1) / 2);
        auto rhs = cx.i(2) * (cx.i(1) + cx.i(p) * cx.H(p - 1));
        return Claims<decltype(cx)>{{lhs, rhs}};
      }));

  reg.push_back(def(
      "A-04-5", 2, 5, "",
      "middle boundary term of the companion sum",
      "2(4p-1) 2^(p-1) C(p-1,(p-1)/2)^2 C(3p-1,(3p-1)/2) / ((5p-1) "
      "C(3p-1,(p-1)/2)) == 4(p+1) 32^(p-1)  (mod p^2)",
      [](auto& cx) {
        auto rhs = cx.i(4) * cx.i(cx.p + 1) * cx.pow2(5 * (cx.p - 1));
        return Claims<decltype(cx)>{{b_boundary_mid(cx), rhs}};
      }));

  reg.push_back(def(
      "A-04-6", 2, 5, "",
      "last boundary term of the companion sum",
      "4^(p-1)(4p^2-1) C(2p-2,p-1)^2 / (p^2 C(3p-1,p-1)) == -4^(p-1)(1+4p)  "
      "(mod p^2)",
      [](auto& cx) {
        auto rhs = cx.i(0) -
                   cx.pow2(2 * (cx.p - 1)) * cx.i(1 + 4 * cx.p);
        return Claims<decltype(cx)>{{b_boundary_last(cx), rhs}};
      }));

  reg.push_back(def(
      "A-04-7", 2, 5, "",
      "vanishing first boundary term",
      "(6p-3) C(4p-2,2p-1) C(2p-2,p-1) / (3p-1) == 0  (mod p^2)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{b_boundary_k0(cx), cx.i(0)}};
      }));

  reg.push_back(def(
      "A-04-final", 3, 5, "chain of 2 claims",
      "scaled companion sum collapses to 9p",
      "(192p C(3p-1,2p)/64^p) B == 12(p+p^2)/2^(p-1) - 3(p+4p^2)/16^(p-1) == "
      "9p  (mod p^3)",
      [](auto& cx) {
        long p = cx.p;
        auto mid = cx.i(12) * cx.i(Int(p) * (1 + p)) * cx.pow2(-(p - 1)) -
                   cx.i(3) * cx.i(Int(p) * (1 + 4 * p)) *
                       cx.pow2(-4 * (p - 1));
        return Claims<decltype(cx)>{{full_companion_lhs(cx), mid},
                                    {mid, cx.i(9 * p)}};
      }));

  // ----- second-order consequences -----------------------------------------

  reg.push_back(def(
      "A-05-1", 2, 5, "",
      "reversed tail vs twice-scaled alternating central sum",
      "sum_{k=1}^{(p-3)/2} T'(k) == 2p sum_{k=1}^{(p-3)/2} C(2k,k)(1+4k) / "
      "((-4)^k k (1+2k))  (mod p^2)",
      [](auto& cx) {
        auto s = cx.i(0);
        for (long k = 1; k <= (cx.p - 3) / 2; ++k)
          s = s + reversed_tail_term(cx, k);
        auto rhs = cx.i(2 * cx.p) * alt_central_sum(cx);
        return Claims<decltype(cx)>{{s, rhs}};
      }));

  reg.push_back(def(
      "A-05-2", 2, 5, "",
      "vanishing of the companion tail",
      "sum_{k=(p+1)/2}^{p-2} T(k) == 0  (mod p^2)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{b_tail(cx), cx.i(0)}};
      }));

  reg.push_back(def(
      "A-05-3", 2, 5, "",
      "index reversal of the companion tail (exact identity)",
      "sum_{k=(p+1)/2}^{p-2} T(k) = sum_{k=1}^{(p-3)/2} T'(k)  (exactly)",
      [](auto& cx) {
        auto rhs = cx.i(0);
        for (long k = 1; k <= (cx.p - 3) / 2; ++k)
          rhs = rhs + reversed_tail_term(cx, k);
        return Claims<decltype(cx)>{{b_tail(cx), rhs}};
      }));

  reg.push_back(def(
      "A-05-4", 1, 5, "",
      "vanishing alternating central sum",
      "sum_{k=1}^{(p-3)/2} C(2k,k)(1+4k)/((-4)^k k(1+2k)) == 0  (mod p)",
      [](auto& cx) {
        return Claims<decltype(cx)>{{alt_central_sum(cx), cx.i(0)}};
      }));

  reg.push_back(def(
      "A-05-5", 2, 3, "k = 1 .. (p-1)/2",
      "scaled half binomial vs odd harmonic partial sum",
      "(-4)^k C((p-1)/2, k) / C(2k,k) == 1 - p sum_{j=1}^{k} 1/(2j-1)  "
      "(mod p^2)",
      [](auto& cx) {
        Claims<decltype(cx)> out;
        long p = cx.p;
        for (long k = 1; k <= (p - 1) / 2; ++k) {
          auto lhs = cx.neg1(k) * cx.pow2(2 * k) *
                     cx.binom((p - 1) / 2, k) / cx.binom(2 * k, k);
          auto odd = cx.H(2 * k) - cx.r(1, 2) * cx.H(k);
          out.emplace_back(lhs, cx.i(1) - cx.i(p) * odd);
        }
        return out;
      }));

  reg.push_back(def(
      "A-05-final", 1, 5, "",
      "combined binomial-harmonic sum vanishes",
      "sum_{k=1}^{(p-3)/2} (1/k + 2/(1+2k)) C((p-1)/2, k) == 0  (mod p)",
      [](auto& cx) {
        auto s = cx.i(0);
        long p = cx.p;
        for (long k = 1; k <= (p - 3) / 2; ++k)
          s = s + (cx.i(1) / cx.i(k) + cx.i(2) / cx.i(2 * k + 1)) *
                      cx.binom((p - 1) / 2, k);
        return Claims<decltype(cx)>{{s, cx.i(0)}};
      }));

  // A-05-3 checks exact equality of both sides, not just residues.
  for (Entry& e : reg)
    if (e.id == "A-05-3") e.exact_identity = true;

  return reg;
}

}  // namespace

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = build_registry();
  return reg;
}

}  // namespace sc::catalog
