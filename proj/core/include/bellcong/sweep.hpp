#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bellcong/congruences.hpp"
#include "bellcong/report_io.hpp"

namespace bellcong {

/// Parses a comma-separated list of identity groups. Accepted names:
/// touchard, theorem1, intro, corollary, eq4, bell_p, theorem2,
/// theorem2_eval, special, proof, factorial_lemma, geometric_sum, all,
/// or any canonical identity name such as THEOREM1. Throws
/// std::invalid_argument on an unknown name.
std::set<Identity> parse_identity_list(std::string_view list);

struct SweepConfig {
  std::uint32_t prime_lo = 2;
  std::uint32_t prime_hi = 100;
  std::set<Identity> identities;
  /// Largest m per prime; default 2p. Multiples of p are skipped.
  std::optional<std::uint64_t> m_max;
  /// A single m instead of the 1..m_max grid.
  std::optional<std::uint64_t> m_fixed;
  /// Largest n for Touchard's congruence; default p.
  std::optional<std::uint64_t> n_max;
  /// A single evaluation point instead of the default x grid.
  std::optional<std::int64_t> x_fixed;
  /// Every x in 1..p-1 regardless of p.
  bool x_all = false;
  /// Mixed with p to seed the x sample for p > 101.
  std::uint64_t seed = 0;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output_path;
};

struct SweepSummary {
  std::uint64_t primes_checked = 0;
  std::uint64_t reports_total = 0;
  std::uint64_t reports_failed = 0;
  std::optional<VerificationReport> first_failure;
  double wall_time = 0.0;
};

/// Folds one report into the counters; the first failed report seen is kept.
void accumulate(SweepSummary& summary, const VerificationReport& report);

/// m values used for prime p under config.
std::vector<std::uint64_t> m_grid(std::uint32_t p, const SweepConfig& config);
/// x values used for prime p under config (exhaustive for p <= 101,
/// otherwise 32 distinct values drawn deterministically from (seed, p)).
std::vector<std::int64_t> x_grid(std::uint32_t p, const SweepConfig& config);

/// Every selected report for one prime, in canonical order.
std::vector<VerificationReport> verify_prime(std::uint32_t p, const SweepConfig& config);

/// Runs the sweep on a pool of config.workers threads (one prime per work
/// unit) and writes every report to `out` in prime order. The stream is
/// identical for any worker count. Throws IoError if writing fails.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out);

std::string format_summary(const SweepSummary& summary);

struct BenchResult {
  std::uint32_t p = 0;
  double bell_row_seconds = 0;
  double theorem1_seconds = 0;
  std::uint64_t bell_row_ops = 0;
  std::uint64_t theorem1_ops = 0;
  std::uint64_t theorem1_failures = 0;
};

/// Times bell_row(p) and a THEOREM1 sweep over m in 1..2p at p.
BenchResult bench_prime(std::uint64_t p);
std::string format_bench(const BenchResult& result);

}  // namespace bellcong
