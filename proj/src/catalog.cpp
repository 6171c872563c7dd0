#include "sc/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace sc::catalog {

std::string_view engine_name(Engine e) {
  return e == Engine::exact ? "exact" : "fast";
}

const Entry* find_entry(std::string_view id) {
  for (const Entry& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

CheckResult skipped_result(const Entry& entry, long p, Engine engine) {
  CheckResult r;
  r.entry_id = entry.id;
  r.prime = p;
  r.exponent = entry.exponent;
  r.skipped = true;
  r.pass = true;
  r.engine = engine;
  return r;
}

template <class Claims>
void judge(long p, int exponent, const Claims& claims,
           bool exact_equality_required, CheckResult& out) {
  PrimePower m(p, exponent);
  out.pass = true;
  bool first = true;
  for (const auto& [lhs, rhs] : claims) {
    Int lv, rv;
    constexpr bool kExactEngine =
        std::is_same_v<typename Claims::value_type,
                       std::pair<ExactVal, ExactVal>>;
    if constexpr (kExactEngine) {
      lv = reduce(lhs.rational(), m).value();
      rv = reduce(rhs.rational(), m).value();
    } else {
      lv = fast::to_residue(lhs, exponent);
      rv = fast::to_residue(rhs, exponent);
    }
    bool ok = (lv == rv);
    if (ok && exact_equality_required) {
      // The exact engine owns the stronger exact comparison; the fast
      // engine can only certify residue equality.
      if constexpr (kExactEngine) {
        if (lhs.rational() != rhs.rational()) {
          ok = false;
          out.note = "residues agree but exact identity fails";
        }
      }
    }
    if (first || !ok) {
      out.lhs = lv;
      out.rhs = rv;
      first = false;
    }
    if (!ok) {
      out.pass = false;
      break;
    }
  }
}

}  // namespace

CheckResult check_at_exponent(const Entry& entry, long p, Engine engine,
                              int exponent) {
  if (!is_prime(static_cast<std::uint64_t>(p)) || p < 3 || p % 2 == 0)
    throw std::invalid_argument("check requires an odd prime");
  if (p < entry.min_prime) return skipped_result(entry, p, engine);

  CheckResult r;
  r.entry_id = entry.id;
  r.prime = p;
  r.exponent = exponent;
  r.engine = engine;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (engine == Engine::exact) {
      ExactCtx cx(p);
      judge(p, exponent, entry.exact_eval(cx), entry.exact_identity, r);
    } else if (p <= fast::kWordPrimeMax) {
      FastCtx64 cx(p);
      judge(p, exponent, entry.fast64_eval(cx), entry.exact_identity, r);
    } else {
      FastCtx cx(p);
      judge(p, exponent, entry.fast_eval(cx), entry.exact_identity, r);
    }
  } catch (const NotPIntegral& e) {
    r.pass = false;
    r.note = std::string("not p-integral: ") + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.note = std::string("evaluation error: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  return r;
}

CheckResult check(const Entry& entry, long p, Engine engine) {
  return check_at_exponent(entry, p, engine, entry.exponent);
}

CheckResult check(std::string_view id, long p, Engine engine) {
  const Entry* e = find_entry(id);
  if (e == nullptr)
    throw std::invalid_argument("unknown entry id: " + std::string(id));
  return check(*e, p, engine);
}

bool results_agree(const CheckResult& a, const CheckResult& b) {
  return a.entry_id == b.entry_id && a.prime == b.prime &&
         a.exponent == b.exponent && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.pass == b.pass && a.skipped == b.skipped;
}

Report sweep(const SweepOptions& options) {
  std::vector<const Entry*> entries;
  if (options.ids.empty()) {
    for (const Entry& e : registry()) entries.push_back(&e);
  } else {
    for (const std::string& id : options.ids) {
      const Entry* e = find_entry(id);
      if (e == nullptr)
        throw std::invalid_argument("unknown entry id: " + id);
      entries.push_back(e);
    }
  }
  std::vector<long> primes = primes_in_range(std::max(options.prime_lo, 3L),
                                             options.prime_hi);

  struct Task {
    const Entry* entry;
    long prime;
  };
  std::vector<Task> tasks;
  tasks.reserve(entries.size() * primes.size());
  for (const Entry* e : entries)
    for (long p : primes) tasks.push_back({e, p});

  std::vector<std::vector<CheckResult>> partial;
  int jobs = std::max(1, options.jobs);
  partial.resize(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next{0};

  auto worker = [&](int slot) {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) break;
      const Task& t = tasks[idx];
      if (options.run_exact)
        partial[slot].push_back(check(*t.entry, t.prime, Engine::exact));
      if (options.run_fast)
        partial[slot].push_back(check(*t.entry, t.prime, Engine::fast));
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }

  Report rep;
  for (auto& part : partial)
    for (auto& row : part) rep.rows.push_back(std::move(row));
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const CheckResult& a, const CheckResult& b) {
              if (a.entry_id != b.entry_id) return a.entry_id < b.entry_id;
              if (a.prime != b.prime) return a.prime < b.prime;
              return static_cast<int>(a.engine) < static_cast<int>(b.engine);
            });

  for (const CheckResult& r : rep.rows) {
    if (r.skipped) {
      ++rep.skips;
    } else {
      ++rep.checked;
      if (!r.pass) ++rep.failures;
    }
  }
  if (options.run_exact && options.run_fast) {
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
      const CheckResult& a = rep.rows[i];
      const CheckResult& b = rep.rows[i + 1];
      if (a.entry_id == b.entry_id && a.prime == b.prime &&
          a.engine != b.engine && !results_agree(a, b)) {
        rep.mismatches.push_back({a.entry_id, a.prime});
      }
    }
  }
  return rep;
}

}  // namespace sc::catalog
