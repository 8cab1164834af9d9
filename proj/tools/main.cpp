// bellcong: print Bell/derangement/Stirling/Touchard values and verify the
// congruences linking them over ranges of primes.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellcong/congruences.hpp"
#include "bellcong/oracle.hpp"
#include "bellcong/sequences.hpp"
#include "bellcong/sweep.hpp"

namespace {

using namespace bellcong;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

// "N" or "LO..HI"
std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_u64(s);
    return {v, v};
  }
  const auto lo = parse_u64(s.substr(0, dots));
  const auto hi = parse_u64(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + std::string(s) + "'");
  return {lo, hi};
}

std::string poly_list(std::span<const std::uint32_t> coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

std::string bigint_list(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out + "]";
}

struct SeqOptions {
  std::string family;
  std::string range;
  std::optional<std::uint64_t> mod;
  std::optional<std::uint64_t> k;
  std::optional<std::int64_t> x;
};

std::uint32_t small_index(std::uint64_t n) {
  if (n > UINT32_MAX) throw IndexTooLarge("index " + std::to_string(n) + " is too large");
  return static_cast<std::uint32_t>(n);
}

int run_seq(const SeqOptions& o) {
  const auto [lo, hi] = parse_range(o.range);
  ContextPtr ctx = o.mod ? make_context(*o.mod) : nullptr;
  std::optional<BellRow> bells;
  std::optional<DerangementRow> derangements;
  if (ctx && o.family == "bell") bells = bell_row(*ctx);
  if (ctx && o.family == "derangement") derangements = derangement_row(*ctx);

  std::vector<std::string> values;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (o.family == "bell") {
      values.push_back(ctx ? std::to_string(bell_mod(n, *bells).value())
                           : oracle::bell_exact(small_index(n)).to_string());
    } else if (o.family == "derangement") {
      if (!ctx) {
        values.push_back(oracle::derangement_exact(small_index(n)).to_string());
      } else if (n < ctx->modulus()) {
        values.push_back(std::to_string((*derangements)[n].value()));
      } else {
        // (-1)^n D_n is periodic in n mod p.
        Residue v = signed_derangement_series_mod(n, *ctx);
        values.push_back(std::to_string((n % 2 == 0 ? v : -v).value()));
      }
    } else if (o.family == "stirling") {
      if (!o.k) throw UsageError("seq stirling needs --k");
      values.push_back(ctx ? std::to_string(stirling2_mod(n, *o.k, *ctx).value())
                           : oracle::stirling2_exact(small_index(n), small_index(*o.k)).to_string());
    } else if (o.family == "touchard") {
      if (ctx) {
        const DensePoly t = touchard_poly(n, *ctx);
        values.push_back(o.x ? std::to_string(eval(t, normalize(*o.x, *ctx)).value())
                             : poly_list(t.coeffs()));
      } else {
        const auto row = oracle::stirling2_exact_row(small_index(n));
        if (o.x) {
          BigInt acc;
          for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * BigInt(*o.x) + *it;
          values.push_back(acc.to_string());
        } else {
          values.push_back(bigint_list(row));
        }
      }
    } else {
      throw UsageError("unknown family '" + o.family + "' (bell, derangement, stirling, touchard)");
    }
  }
  // Polynomials one per line, scalars on one line.
  const char sep = (o.family == "touchard" && !o.x) ? '\n' : ' ';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) std::cout << sep;
    std::cout << values[i];
  }
  std::cout << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::string primes = "2..100";
  std::string identities = "all";
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n_max;
  std::optional<std::string> x;
  unsigned workers = 1;
  std::string format = "text";
  std::optional<std::string> out;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyOptions& o) {
  SweepConfig config;
  const auto [lo, hi] = parse_range(o.primes);
  if (hi >= PrimeContext::kMaxModulus) throw UsageError("primes must be below 2^31");
  config.prime_lo = static_cast<std::uint32_t>(lo);
  config.prime_hi = static_cast<std::uint32_t>(hi);
  try {
    config.identities = parse_identity_list(o.identities);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.m_max = o.m_max;
  config.m_fixed = o.m;
  config.n_max = o.n_max;
  if (o.x) {
    if (*o.x == "all") {
      config.x_all = true;
    } else {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(o.x->data(), o.x->data() + o.x->size(), v);
      if (ec != std::errc() || ptr != o.x->data() + o.x->size()) {
        throw UsageError("--x expects an integer or 'all'");
      }
      config.x_fixed = v;
    }
  }
  if (o.workers == 0) throw UsageError("--workers must be at least 1");
  config.workers = o.workers;
  auto fmt = parse_output_format(o.format);
  if (!fmt) throw UsageError("--format must be text, jsonl or csv");
  config.format = *fmt;
  config.seed = o.seed;
  config.output_path = o.out;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (o.out) {
    file.open(*o.out);
    if (!file) throw IoError("cannot open '" + *o.out + "' for writing");
    out = &file;
  }
  const SweepSummary summary = run_sweep(config, *out);
  std::cerr << format_summary(summary);
  return summary.reports_failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell numbers, derangements and Touchard polynomials modulo primes"};
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print sequence values (exact, or modulo --mod)");
  seq_cmd->add_option("family", seq.family, "bell | derangement | stirling | touchard")->required();
  seq_cmd->add_option("n", seq.range, "index N or range LO..HI")->required();
  seq_cmd->add_option("--mod", seq.mod, "prime modulus");
  seq_cmd->add_option("--k", seq.k, "block count for stirling");
  seq_cmd->add_option("--x", seq.x, "evaluate Touchard polynomials at x");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify congruences over a range of primes");
  verify_cmd->add_option("--primes", verify.primes, "prime range LO..HI")->capture_default_str();
  verify_cmd->add_option("--identities", verify.identities,
                         "comma list: touchard,theorem1,intro,corollary,eq4,bell_p,theorem2,"
                         "theorem2_eval,special,proof,factorial_lemma,geometric_sum | all")
      ->capture_default_str();
  verify_cmd->add_option("--m-max", verify.m_max, "largest m per prime (default 2p)");
  verify_cmd->add_option("--m", verify.m, "single m instead of the 1..m-max grid");
  verify_cmd->add_option("--n-max", verify.n_max, "largest n for Touchard's congruence (default p)");
  verify_cmd->add_option("--x", verify.x, "evaluation point, or 'all'");
  verify_cmd->add_option("--workers", verify.workers, "worker threads")->capture_default_str();
  verify_cmd->add_option("--format", verify.format, "text | jsonl | csv")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "write reports to this file instead of stdout");
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled x grids")->capture_default_str();

  std::uint64_t bench_p = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Time bell_row and a THEOREM1 sweep at one prime");
  bench_cmd->add_option("p", bench_p, "prime modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*seq_cmd) return run_seq(seq);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) {
      std::cout << format_bench(bench_prime(bench_p));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
  } catch (const bellcong::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
