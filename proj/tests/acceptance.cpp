// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bellcong/bigint.hpp"
#include "bellcong/congruences.hpp"
#include "bellcong/oracle.hpp"
#include "bellcong/sequences.hpp"
#include "bellcong/sweep.hpp"

using namespace bellcong;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string describe(const VerificationReport& r) { return format_report(r, OutputFormat::Text); }

void expect_all(Outcome& o, const std::vector<VerificationReport>& rs) {
  for (const auto& r : rs) o.expect(r.pass, describe(r));
}

std::vector<std::uint32_t> primes(std::uint32_t lo, std::uint32_t hi) { return primes_in_range(lo, hi); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome intro_constant() {
  Outcome o;
  std::size_t count = 0;
  for (auto p : primes(3, 1000)) {
    const PrimeTables t(p);
    const auto r = verify_intro_constant(t, 8);
    o.expect(r.pass, describe(r));
    o.expect(r.rhs == side(normalize(-1853, t.context())), "constant is not -1853 at p=" + std::to_string(p));
    ++count;
  }
  o.detail = o.pass ? std::to_string(count) + " primes" : o.detail;
  return o;
}

Outcome theorem1() {
  Outcome o;
  std::size_t count = 0;
  for (auto p : primes(2, 200)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= 3ULL * p; ++m) {
      if (m % p == 0) continue;
      const auto r = verify_theorem1(t, m);
      o.expect(r.pass, describe(r));
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " (p, m) pairs";
  return o;
}

Outcome corollary() {
  Outcome o;
  std::size_t main = 0;
  std::size_t kernel = 0;
  for (auto p : primes(2, 100)) {
    const auto rs = verify_corollary(PrimeTables(p));
    expect_all(o, rs);
    const auto n_main = std::ranges::count_if(rs, [](const auto& r) { return r.identity == Identity::Corollary; });
    o.expect(n_main == static_cast<std::ptrdiff_t>(p - 1), "missing n at p=" + std::to_string(p));
    main += n_main;
    kernel += rs.size() - n_main;
  }
  if (o.pass) o.detail = std::to_string(main) + " corollary, " + std::to_string(kernel) + " kernel reports";
  return o;
}

Outcome recurrence_chain() {
  Outcome o;
  for (auto p : primes(2, 101)) {
    const PrimeTables t(p);
    const auto rs = verify_eq4(t);
    expect_all(o, rs);
    o.expect(rs.size() == (p == 2 ? 1 : p - 1), "wrong step count at p=" + std::to_string(p));
    const auto chain = eq4_unrolled(t);
    for (std::uint32_t m = 1; m < p; ++m) {
      o.expect(chain[m - 1] == s_m(t, m), "unrolled chain differs at p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome bell_p() {
  Outcome o;
  std::size_t count = 0;
  for (auto p : primes(2, 1000)) {
    const auto r = verify_bell_p(PrimeTables(p));
    o.expect(r.pass, describe(r));
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " primes";
  return o;
}

Outcome touchard() {
  Outcome o;
  for (auto p : primes(2, 101)) expect_all(o, verify_touchard(PrimeTables(p), 2ULL * p));
  return o;
}

Outcome polynomial_identity() {
  Outcome o;
  for (auto p : primes(2, 61)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= 2ULL * p; ++m) {
      if (m % p == 0) continue;
      const auto r = verify_theorem2(t, m);
      o.expect(r.pass, describe(r));
      if (p <= 31) {
        expect_all(o, verify_proof_intermediate(t, m));
        o.expect(proof_intermediate(t, m) == touchard_weighted_sum(t, m),
                 "proof intermediate differs from the direct sum at p=" + std::to_string(p));
      }
      expect_all(o, verify_factorial_lemma(t, m));
      expect_all(o, geometric_sum_lemma_check(t, m));
    }
  }
  return o;
}

Outcome evaluated_forms() {
  Outcome o;
  std::size_t count = 0;
  for (auto p : primes(2, 97)) {
    const PrimeTables t(p);
    for (std::int64_t x = 1; x < p; ++x) {
      const auto values = touchard_values_at(t, x);
      const auto special = verify_special_cases(t, x, values);
      expect_all(o, special);
      const std::size_t expected = p == 2 ? 1 : p == 3 ? 2 : 3;
      o.expect(special.size() == expected, "wrong special-case count at p=" + std::to_string(p));
      for (std::uint64_t m = 1; m <= 4; ++m) {
        if (m % p == 0) continue;
        const auto r = verify_theorem2_eval(t, m, x, values);
        o.expect(r.pass, describe(r));
        if (x == 1) {
          const auto r1 = verify_theorem1(t, m);
          o.expect(r.lhs == r1.lhs && r.rhs == r1.rhs, "x = 1 disagrees with s_m at p=" + std::to_string(p));
        }
        ++count;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " evaluations";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;

  const std::string bell_line = [] {
    std::ostringstream os;
    for (std::uint32_t n = 0; n <= 8; ++n) os << (n ? " " : "") << oracle::bell_exact(n);
    return os.str();
  }();
  const std::string derangement_line = [] {
    std::ostringstream os;
    for (std::uint32_t n = 0; n <= 8; ++n) os << (n ? " " : "") << oracle::derangement_exact(n);
    return os.str();
  }();
  o.expect(bell_line == "1 1 2 5 15 52 203 877 4140", "Bell table: " + bell_line);
  o.expect(derangement_line == "1 0 1 2 9 44 265 1854 14833", "derangement table: " + derangement_line);
  o.expect(oracle::egf_bell_check(30), "egf_bell_check(30) is false");

  constexpr std::uint32_t kDerangementMax = 200;
  std::vector<BigInt> derangements;
  for (std::uint32_t n = 0; n < kDerangementMax; ++n) {
    const BigInt d = oracle::derangement_exact(n);
    o.expect(oracle::derangement_exact_formula(n) == d, "derangement formula at n=" + std::to_string(n));
    if (n <= oracle::kMaxBruteDerangement) {
      o.expect(oracle::derangement_brute(n) == d, "derangement brute force at n=" + std::to_string(n));
    }
    derangements.push_back(d);
  }

  const auto bells = oracle::bell_exact_table(oracle::kMaxBellIndex);
  for (auto p : primes(2, 1000)) {
    const auto ctx = make_context(p);
    const auto row = bell_row(*ctx);
    const auto triangle = bell_triangle_row(*ctx);
    o.expect(row == triangle, "Bell row and triangle differ at p=" + std::to_string(p));
    for (std::uint32_t n = 0; n < p; ++n) {
      o.expect(row[n] == oracle::reduce(bells[n], *ctx), "Bell row at p=" + std::to_string(p));
    }
    if (p <= 200) {
      const auto drow = derangement_row(*ctx);
      for (std::uint32_t n = 0; n < p; ++n) {
        const Residue d = oracle::reduce(derangements[n], *ctx);
        o.expect(drow[n] == d, "derangement row at p=" + std::to_string(p));
        o.expect(derangement_series_mod(n, *ctx) == d, "derangement series at p=" + std::to_string(p));
      }
    }
    if (p <= 101) {
      const std::uint64_t limit = std::min<std::uint64_t>(1ULL * p * p, oracle::kMaxBellIndex + 1);
      for (std::uint64_t n = 0; n < limit; ++n) {
        o.expect(bell_mod(n, row) == oracle::reduce(bells[n], *ctx), "bell_mod at p=" + std::to_string(p));
      }
    }
    if (p <= 61) {
      const auto polys = touchard_polys(p - 1, *ctx);
      for (std::uint32_t n = 0; n < p; ++n) {
        const auto exact = oracle::stirling2_exact_row(n);
        for (std::uint32_t k = 0; k <= n; ++k) {
          const Residue s = oracle::reduce(exact[k], *ctx);
          o.expect(stirling2_mod(n, k, *ctx) == s, "Stirling at p=" + std::to_string(p));
          o.expect(polys[n].coeff(k) == s, "Touchard coefficient at p=" + std::to_string(p));
        }
      }
    }
  }
  return o;
}

Outcome performance() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const auto ctx = make_context(9973);
  const auto row = bell_row(*ctx);
  const double bell_secs = seconds_since(t0);
  o.expect(bell_row(*ctx) == row, "bell_row is not reproducible");
  o.expect(bell_secs <= 10.0, "bell_row(9973) took " + std::to_string(bell_secs) + " s");

  SweepConfig config;
  config.prime_lo = 2;
  config.prime_hi = 500;
  config.identities = {Identity::Theorem1};
  config.format = OutputFormat::Jsonl;
  config.workers = 4;
  std::ostringstream four;
  t0 = std::chrono::steady_clock::now();
  const auto summary = run_sweep(config, four);
  const double sweep_secs = seconds_since(t0);
  o.expect(summary.reports_failed == 0, "THEOREM1 sweep reported failures");
  o.expect(sweep_secs <= 60.0, "sweep took " + std::to_string(sweep_secs) + " s");

  config.workers = 1;
  std::ostringstream one;
  run_sweep(config, one);
  o.expect(one.str() == four.str(), "report stream differs between 1 and 4 workers");

  config.prime_hi = 60;
  config.identities = parse_identity_list("all");
  std::string streams[3];
  const unsigned counts[3] = {1, 3, 8};
  for (int i = 0; i < 3; ++i) {
    config.workers = counts[i];
    std::ostringstream os;
    run_sweep(config, os);
    streams[i] = os.str();
  }
  o.expect(streams[0] == streams[1] && streams[1] == streams[2], "full sweep stream differs across worker counts");

  if (o.pass) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << "bell_row(9973) " << bell_secs << " s, sweep p<=500 " << sweep_secs << " s";
    o.detail = os.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"intro constant -1853 for 2 < p <= 1000", intro_constant},
      {"s_m congruence for p <= 200, m <= 3p", theorem1},
      {"corollary and kernel for p <= 100", corollary},
      {"recurrence chain for p <= 101", recurrence_chain},
      {"B_p = 2 for p <= 1000", bell_p},
      {"Touchard congruence for p <= 101, n <= 2p", touchard},
      {"polynomial identity and lemmas for p <= 61, m <= 2p", polynomial_identity},
      {"evaluated forms and m = 2, 3, 4 closed forms for p <= 97", evaluated_forms},
      {"oracle agreement", oracle_agreement},
      {"performance and determinism", performance},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s  %2zu  %-58s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, name, seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
