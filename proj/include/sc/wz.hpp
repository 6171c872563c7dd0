#pragma once

#include "sc/exact.hpp"

namespace sc::wz {

/// Raised when G is evaluated on its diagonal n = k, a genuine pole.
class PoleAtDiagonal : public std::domain_error {
 public:
  PoleAtDiagonal(long n, long k)
      : std::domain_error("G(" + std::to_string(n) + "," + std::to_string(k) +
                          ") has a pole on the diagonal") {}
};

/// The degree-4 certificate polynomial of the pair.
Int alpha(long n, long k);

/// First member of the pair. F(0, k) = 0; hypergeometric support gives
/// exact zeros outside the triangle, uncancelled poles throw OutsideDomain.
Rational F(long n, long k);

/// Second member (the certificate term). Zero for n < k; n = k throws
/// PoleAtDiagonal.
Rational G(long n, long k);

/// Exact check of F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k).
bool pair_equation_holds(long n, long k);

/// Closed form of G(n, 0), valid for n >= 0:
/// -(92n^2+61n+9) / (192 (2n+1) 64^n) * C(2n,n) C(3n,n) C(4n,2n).
Rational closed_form_G0(long n);

/// Closed form of F((p-1)/2, k) for odd prime p and 0 <= k <= (p-3)/2.
Rational closed_form_F_half(long p, long k);

/// Row telescope: sum_{k<K} F(n+1,k) - sum_{k<K} F(n,k) = -G(n,0),
/// with K > n+1 so the upper boundary term vanishes.
bool row_telescope_holds(long n, long K);

/// Half-range telescope for odd prime p >= 5:
/// sum_{k=0}^{p-1} F((p-1)/2, k) = -sum_{n=0}^{(p-3)/2} G(n, 0).
bool half_telescope_holds(long p);

/// Full telescope for odd prime p >= 3. Checks both
///   sum_{k=0}^{p-1} F(p, k) = -sum_{n=0}^{p-1} G(n, 0)
/// and the bridge identity rewriting that sum as
/// (192 p C(3p-1,2p) / 64^p) * B with B the companion k-sum.
bool full_telescope_holds(long p);

/// One term of the companion sum B (k in 0..p-1).
Rational b_term(long p, long k);

/// The companion sum B(p) = sum_{k=0}^{p-1} b_term(p, k).
Rational b_sum(long p);

}  // namespace sc::wz
