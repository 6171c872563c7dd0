#pragma once

#include <functional>

#include "sc/exact.hpp"

namespace sc::identities {

/// sum_{k=1}^{n} C(n,k) / (1+2k).
Rational h1_lhs(long n);

/// Closed form of h1: (4^n / ((1+2n) C(2n,n))) (1 + sum_{k=1}^{n} C(2k,k)/2^k) - 1.
Rational h1_rhs(long n);

/// sum_{k=1}^{n} C(n,k) / k.
Rational h2_lhs(long n);

/// Closed form of h2: -H_n + sum_{k=1}^{n} 2^k / k.
Rational h2_rhs(long n);

using SequenceFn = std::function<Rational(long)>;

/// 0 = 1 - 4(1+n) s(n) + 2(5+3n) s(n+1) + (-5-2n) s(n+2), exactly.
bool recurrence_h1_holds(long n, const SequenceFn& s);

/// 0 = 1 - 2(1+n) s(n) + (4+3n) s(n+1) - (2+n) s(n+2), exactly.
bool recurrence_h2_holds(long n, const SequenceFn& s);

}  // namespace sc::identities
