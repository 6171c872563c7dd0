// Acceptance suite: runs every headline criterion at its stated tolerance
// and prints one pass/fail line each. Exact equality of residues
// throughout; runtime budgets are asserted where stated, and the fast
// engine's speed target is warn-only.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sc/catalog.hpp"
#include "sc/identities.hpp"
#include "sc/numthy.hpp"
#include "sc/wz.hpp"

using namespace sc;
using namespace sc::catalog;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct SweepOutcome {
  bool all_pass = true;
  bool clean = true;  // no evaluation errors / p-integrality failures
  double elapsed_s = 0.0;
  std::vector<CheckResult> rows;
};

SweepOutcome run_ids(const std::vector<std::string>& ids, long hi) {
  SweepOptions opt;
  opt.ids = ids;
  opt.prime_lo = 3;
  opt.prime_hi = hi;
  opt.jobs = 1;
  auto t0 = std::chrono::steady_clock::now();
  Report rep = sweep(opt);
  SweepOutcome out;
  out.elapsed_s = seconds_since(t0);
  out.all_pass = rep.failures == 0;
  for (const CheckResult& r : rep.rows)
    if (!r.note.empty()) out.clean = false;
  out.rows = std::move(rep.rows);
  return out;
}

const CheckResult* find_row(const std::vector<CheckResult>& rows,
                            const std::string& id, long p) {
  for (const CheckResult& r : rows)
    if (r.entry_id == id && r.prime == p) return &r;
  return nullptr;
}

std::string fmt_time(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

}  // namespace

int main() {
  constexpr long kSweepTop = 499;
  bool integrality_clean = true;

  // 1. strengthened mod p^4 congruence across the sweep range
  {
    SweepOutcome o = run_ids({"C-03"}, kSweepTop);
    integrality_clean = integrality_clean && o.clean;
    const CheckResult* p3 = find_row(o.rows, "C-03", 3);
    const CheckResult* p5 = find_row(o.rows, "C-03", 5);
    bool spots = p3 && p3->lhs == 9 && p3->rhs == 9 && p5 && p5->lhs == 430 &&
                 p5->rhs == 430;
    report(1, "mod p^4 congruence, primes 3..499", o.all_pass && spots &&
               o.elapsed_s < 120.0,
           fmt_time(o.elapsed_s) + ", spot residues 9 (mod 81) and 430 (mod "
           "625)");
  }

  // 2. full-range sum == 9p mod p^3
  {
    SweepOutcome o = run_ids({"C-04"}, kSweepTop);
    integrality_clean = integrality_clean && o.clean;
    const CheckResult* p3 = find_row(o.rows, "C-04", 3);
    bool spot = p3 && p3->lhs == 0 && p3->rhs == 0;
    report(2, "full-range sum == 9p mod p^3, primes 3..499",
           o.all_pass && spot && o.elapsed_s < 120.0, fmt_time(o.elapsed_s));
  }

  // 3. base congruence and the two half-range consequences
  {
    SweepOutcome o = run_ids({"C-01", "C-05", "C-06"}, kSweepTop);
    integrality_clean = integrality_clean && o.clean;
    const CheckResult* c6 = find_row(o.rows, "C-06", 5);
    bool spot = c6 && c6->lhs == 15 && c6->rhs == 15;
    report(3, "base and half-range congruences, primes 3..499",
           o.all_pass && spot, fmt_time(o.elapsed_s));
  }

  // 4. every supporting entry in the catalog
  {
    std::vector<std::string> ids;
    for (const Entry& e : registry())
      if (e.id[0] == 'L' || e.id[0] == 'A') ids.push_back(e.id);
    SweepOutcome o = run_ids(ids, kSweepTop);
    integrality_clean = integrality_clean && o.clean;
    bool coverage = true;
    for (const Entry& e : registry()) {
      if (e.id[0] != 'L' && e.id[0] != 'A') continue;
      long n = static_cast<long>(
          primes_in_range(e.min_prime, kSweepTop).size());
      if (n < 90) coverage = false;
    }
    const CheckResult* morley = find_row(o.rows, "A-Morley", 5);
    const CheckResult* lehmer = find_row(o.rows, "A-Lehmer", 5);
    bool spots = morley && morley->lhs == 6 && morley->rhs == 6 && lehmer &&
                 lehmer->lhs == 14 && lehmer->rhs == 14;
    report(4, "supporting entries, admissible primes <= 499",
           o.all_pass && coverage && spots, fmt_time(o.elapsed_s));
  }

  // 5. pair certificate, closed forms, telescopes
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (long n = 1; n <= 30 && ok; ++n)
      for (long k = 0; k <= 35 && ok; ++k) {
        if (k == n || k + 1 == n) continue;
        ok = wz::pair_equation_holds(n, k);
      }
    for (long n = 1; n <= 50 && ok; ++n)
      ok = wz::closed_form_G0(n) == wz::G(n, 0);
    for (long p : primes_in_range(3, 61)) {
      if (!ok) break;
      for (long k = 0; k <= (p - 3) / 2 && ok; ++k)
        ok = wz::closed_form_F_half(p, k) == wz::F((p - 1) / 2, k);
      if (ok) ok = wz::row_telescope_holds((p - 1) / 2, p);
      if (ok && p >= 5) ok = wz::half_telescope_holds(p);
      if (ok) ok = wz::full_telescope_holds(p);
    }
    double el = seconds_since(t0);
    report(5, "pair equation grid, closed forms, telescopes",
           ok && el < 60.0, fmt_time(el));
  }

  // 6. finite identities and their recurrences up to 300
  {
    auto t0 = std::chrono::steady_clock::now();
    namespace id = identities;
    bool ok = true;
    for (long n = 1; n <= 300 && ok; ++n) {
      ok = id::h1_lhs(n) == id::h1_rhs(n) && id::h2_lhs(n) == id::h2_rhs(n) &&
           id::recurrence_h1_holds(n, id::h1_lhs) &&
           id::recurrence_h1_holds(n, id::h1_rhs) &&
           id::recurrence_h2_holds(n, id::h2_lhs) &&
           id::recurrence_h2_holds(n, id::h2_rhs);
    }
    double el = seconds_since(t0);
    report(6, "finite identities and recurrences, n <= 300",
           ok && el < 30.0, fmt_time(el));
  }

  // 7. engine equivalence (bit-for-bit) and the speed target
  {
    SweepOptions exact_opt;
    exact_opt.prime_lo = 3;
    exact_opt.prime_hi = 199;
    exact_opt.jobs = 1;
    auto t0 = std::chrono::steady_clock::now();
    Report exact_rep = sweep(exact_opt);
    double exact_s = seconds_since(t0);

    SweepOptions fast_opt = exact_opt;
    fast_opt.run_exact = false;
    fast_opt.run_fast = true;
    t0 = std::chrono::steady_clock::now();
    Report fast_rep = sweep(fast_opt);
    double fast_s = seconds_since(t0);

    bool agree = exact_rep.rows.size() == fast_rep.rows.size();
    if (agree)
      for (std::size_t i = 0; i < exact_rep.rows.size(); ++i)
        if (!results_agree(exact_rep.rows[i], fast_rep.rows[i])) {
          agree = false;
          std::printf("  engine mismatch: %s p=%ld\n",
                      exact_rep.rows[i].entry_id.c_str(),
                      exact_rep.rows[i].prime);
          break;
        }
    double ratio = fast_s > 0 ? exact_s / fast_s : 0.0;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "exact %.1fs, fast %.1fs, ratio %.1fx", exact_s, fast_s,
                  ratio);
    bool pass = agree && exact_rep.failures == 0 && fast_rep.failures == 0;
    report(7, "engine equivalence on primes <= 199", pass, detail);
    if (pass && ratio < 5.0)
      std::printf("  warning: fast engine below the 5x speed target "
                  "(%.1fx)\n", ratio);
  }

  // 8. property suites
  {
    bool reduce_compat = true;
    for (long p : {3L, 7L, 31L})
      for (long a = -40; a <= 40 && reduce_compat; ++a)
        for (long b = 1; b <= 12; ++b) {
          if (b % p == 0) continue;
          Rational q = make_rational(a, b);
          for (int e = 2; e <= 4; ++e) {
            Int hi = reduce(q, PrimePower(p, e)).value();
            Int lo = reduce(q, PrimePower(p, e - 1)).value();
            if (hi % PrimePower(p, e - 1).modulus() != lo)
              reduce_compat = false;
          }
        }

    bool dh = true;
    for (long n = 0; n <= 1000 && dh; ++n) {
      Rational h = harmonic(n, 1);
      dh = double_harmonic(n) == (h * h - harmonic(n, 2)) / 2;
    }

    bool euler_ok = true;
    for (long n = 0; n <= 40 && euler_ok; n += 2)
      for (long p : primes_in_range(3, 31))
        if (!(euler_number_mod(n, p) ==
              reduce(Rational(euler_number(n)), PrimePower(p, 1))))
          euler_ok = false;

    SweepOptions par;
    par.prime_lo = 3;
    par.prime_hi = 101;
    par.run_fast = true;
    par.jobs = 1;
    Report serial = sweep(par);
    par.jobs = 8;
    Report parallel = sweep(par);
    RenderOptions ro;
    ro.format = Format::csv;
    ro.include_skips = true;
    bool bytes_equal = render(serial, ro) == render(parallel, ro);

    bool pass = integrality_clean && reduce_compat && dh && euler_ok &&
                bytes_equal;
    std::string detail;
    if (!integrality_clean) detail += "p-integrality violated; ";
    if (!reduce_compat) detail += "reduce compatibility failed; ";
    if (!dh) detail += "double harmonic identity failed; ";
    if (!euler_ok) detail += "euler agreement failed; ";
    if (!bytes_equal) detail += "parallel/serial reports differ; ";
    report(8, "property suites", pass, detail);
  }

  std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
  return g_failures == 0 ? 0 : 1;
}
