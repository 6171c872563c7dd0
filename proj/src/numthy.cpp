#include "sc/numthy.hpp"

#include <map>
#include <mutex>

namespace sc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (1u << 16)) {
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  // Deterministic for n < 3.3e24 with this base set.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == a) return true;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::vector<long> primes_in_range(long lo, long hi) {
  std::vector<long> out;
  for (long n = std::max(lo, 2L); n <= hi; ++n)
    if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
  return out;
}

int legendre_minus_one(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("legendre_minus_one requires an odd prime");
  return p % 4 == 1 ? 1 : -1;
}

Int fermat_quotient(const Int& a, long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("fermat_quotient requires an odd prime");
  if (mpz_divisible_ui_p(a.get_mpz_t(), p))
    throw std::domain_error("fermat_quotient requires gcd(a, p) = 1");
  Int t;
  mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p - 1));
  t -= 1;
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
  return t;
}

namespace {

// E_0, E_2, E_4, ... via sum_{j=0}^{m} C(2m,2j) E_{2j} = 0.
class EulerTable {
 public:
  Int at(long even_index) {
    std::lock_guard lock(mu_);
    std::size_t want = static_cast<std::size_t>(even_index / 2);
    while (evens_.size() <= want) {
      long m = static_cast<long>(evens_.size());
      Int acc(0);
      for (long j = 0; j < m; ++j) acc += binomial(2 * m, 2 * j) * evens_[j];
      evens_.push_back(-acc);
    }
    return evens_[want];
  }

 private:
  std::mutex mu_;
  std::vector<Int> evens_{Int(1)};
};

EulerTable& euler_table() {
  static EulerTable t;
  return t;
}

}  // namespace

Int euler_number(long n) {
  if (n < 0) throw std::domain_error("euler_number of negative index");
  if (n % 2 == 1) return 0;
  return euler_table().at(n);
}

Residue euler_number_mod(long n, long p) {
  PrimePower m(p, 1);
  if (n % 2 == 1) return Residue(Int(0), m);
  thread_local std::map<std::pair<long, long>, unsigned long> memo;
  if (auto it = memo.find({n, p}); it != memo.end())
    return Residue(Int(it->second), m);
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  long half = n / 2;
  std::vector<std::uint64_t> evens(static_cast<std::size_t>(half) + 1);
  evens[0] = 1 % up;
  // Pascal row mod p, extended two rows per step so row[i] = C(2m, i).
  std::vector<std::uint64_t> row{1 % up};
  for (long m2 = 1; m2 <= half; ++m2) {
    for (int step = 0; step < 2; ++step) {
      row.push_back(1 % up);
      for (std::size_t j = row.size() - 2; j >= 1; --j)
        row[j] = (row[j] + row[j - 1]) % up;
    }
    std::uint64_t acc = 0;
    for (long j = 0; j < m2; ++j)
      acc = (acc + mulmod_u64(row[2 * j], evens[j], up)) % up;
    evens[m2] = (up - acc) % up;
  }
  unsigned long result = static_cast<unsigned long>(evens[half]);
  memo[{n, p}] = result;
  return Residue(Int(result), m);
}

namespace {

// Prefix caches for harmonic streams, one per (order, alternating) pair.
// thread_local: sweeps run one worker per thread, caches are never shared.
struct HarmonicCache {
  std::map<std::pair<long, bool>, std::vector<Rational>> streams;

  const Rational& at(long n, long r, bool alternating) {
    auto& v = streams[{r, alternating}];
    if (v.empty()) v.emplace_back(0);
    while (v.size() <= static_cast<std::size_t>(n)) {
      long k = static_cast<long>(v.size());
      Int kr(k);
      for (long i = 1; i < r; ++i) kr *= k;
      Rational term = make_rational(Int(1), kr);
      if (alternating && k % 2 == 1) term = -term;
      v.push_back(v.back() + term);
    }
    return v[static_cast<std::size_t>(n)];
  }
};

thread_local HarmonicCache harmonic_cache;

}  // namespace

Rational harmonic(long n, long r) {
  if (n < 0 || r < 1) throw std::domain_error("harmonic arguments");
  return harmonic_cache.at(n, r, false);
}

Rational harmonic_alt(long n, long r) {
  if (n < 0 || r < 1) throw std::domain_error("harmonic arguments");
  return harmonic_cache.at(n, r, true);
}

Rational double_harmonic(long n) {
  if (n < 0) throw std::domain_error("double_harmonic of negative index");
  // Incremental direct sum: adding index j contributes H_{j-1}/j.
  thread_local std::vector<Rational> cache{Rational(0), Rational(0)};
  while (cache.size() <= static_cast<std::size_t>(n)) {
    long j = static_cast<long>(cache.size());
    cache.push_back(cache.back() +
                    harmonic(j - 1, 1) * make_rational(Int(1), Int(j)));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace sc
