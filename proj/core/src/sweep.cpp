#include "bellcong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <iomanip>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bellcong/oracle.hpp"

namespace bellcong {
namespace {

constexpr std::uint32_t kExhaustiveXLimit = 101;
constexpr std::size_t kSampledX = 32;

const std::vector<std::pair<std::string_view, std::vector<Identity>>>& identity_groups() {
  static const std::vector<std::pair<std::string_view, std::vector<Identity>>> groups{
      {"touchard", {Identity::TouchardEq1}},
      {"theorem1", {Identity::Theorem1}},
      {"intro", {Identity::IntroConstant}},
      {"corollary", {Identity::Corollary, Identity::CorollaryKernel}},
      {"eq4", {Identity::Eq4Base, Identity::Eq4Step}},
      {"bell_p", {Identity::BellP}},
      {"theorem2", {Identity::Theorem2Poly}},
      {"theorem2_eval", {Identity::Theorem2Eval}},
      {"special", {Identity::SpecialCaseM}},
      {"proof", {Identity::ProofIntermediate, Identity::FactorialLemma, Identity::GeometricSumLemma}},
      {"factorial_lemma", {Identity::FactorialLemma}},
      {"geometric_sum", {Identity::GeometricSumLemma}},
  };
  return groups;
}

bool wants(const SweepConfig& c, Identity id) { return c.identities.contains(id); }

bool wants_any(const SweepConfig& c, std::initializer_list<Identity> ids) {
  return std::ranges::any_of(ids, [&](Identity id) { return wants(c, id); });
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport>&& more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

struct Slot {
  bool ready = false;
  std::vector<VerificationReport> reports;
  std::exception_ptr error;
};

}  // namespace

std::set<Identity> parse_identity_list(std::string_view list) {
  std::set<Identity> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (name.empty()) continue;
    if (name == "all") {
      for (const auto& [_, ids] : identity_groups()) out.insert(ids.begin(), ids.end());
      continue;
    }
    if (auto id = identity_from_name(name)) {
      out.insert(*id);
      continue;
    }
    auto it = std::ranges::find_if(identity_groups(), [&](const auto& g) { return g.first == name; });
    if (it == identity_groups().end()) {
      throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
    }
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

void accumulate(SweepSummary& summary, const VerificationReport& report) {
  ++summary.reports_total;
  if (!report.pass) {
    ++summary.reports_failed;
    if (!summary.first_failure) summary.first_failure = report;
  }
}

std::vector<std::uint64_t> m_grid(std::uint32_t p, const SweepConfig& config) {
  std::vector<std::uint64_t> out;
  if (config.m_fixed) {
    if (*config.m_fixed % p != 0) out.push_back(*config.m_fixed);
    return out;
  }
  const std::uint64_t hi = config.m_max.value_or(2ULL * p);
  for (std::uint64_t m = 1; m <= hi; ++m) {
    if (m % p != 0) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> x_grid(std::uint32_t p, const SweepConfig& config) {
  if (config.x_fixed) {
    if (detail::reduce_signed(*config.x_fixed, p) == 0) return {};
    return {*config.x_fixed};
  }
  std::vector<std::int64_t> all(p - 1);
  std::iota(all.begin(), all.end(), 1);
  if (config.x_all || p <= kExhaustiveXLimit) return all;
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32), p};
  std::mt19937_64 rng(seq);
  std::vector<std::int64_t> sample;
  std::sample(all.begin(), all.end(), std::back_inserter(sample), kSampledX, rng);
  return sample;
}

std::vector<VerificationReport> verify_prime(std::uint32_t p, const SweepConfig& config) {
  const PrimeTables t(p);
  const auto ms = m_grid(p, config);
  std::vector<VerificationReport> out;

  if (wants(config, Identity::TouchardEq1)) append(out, verify_touchard(t, config.n_max.value_or(p)));
  if (wants(config, Identity::Theorem1)) {
    for (auto m : ms) out.push_back(verify_theorem1(t, m));
  }
  if (wants(config, Identity::IntroConstant)) {
    // The constant needs exact D_{m-1}; the oracle stops at 1200.
    for (auto m : ms) {
      if (m - 1 <= oracle::kMaxDerangementIndex) out.push_back(verify_intro_constant(t, m));
    }
  }
  if (wants_any(config, {Identity::Corollary, Identity::CorollaryKernel})) {
    for (auto& r : verify_corollary(t)) {
      if (wants(config, r.identity)) out.push_back(std::move(r));
    }
  }
  if (wants_any(config, {Identity::Eq4Base, Identity::Eq4Step})) {
    for (auto& r : verify_eq4(t)) {
      if (wants(config, r.identity)) out.push_back(std::move(r));
    }
  }
  if (wants(config, Identity::BellP)) out.push_back(verify_bell_p(t));
  if (wants(config, Identity::Theorem2Poly)) {
    for (auto m : ms) out.push_back(verify_theorem2(t, m));
  }
  if (wants_any(config, {Identity::Theorem2Eval, Identity::SpecialCaseM})) {
    for (auto x : x_grid(p, config)) {
      const auto values = touchard_values_at(t, x);
      if (wants(config, Identity::Theorem2Eval)) {
        for (auto m : ms) out.push_back(verify_theorem2_eval(t, m, x, values));
      }
      if (wants(config, Identity::SpecialCaseM)) append(out, verify_special_cases(t, x, values));
    }
  }
  for (auto m : ms) {
    if (wants(config, Identity::ProofIntermediate)) append(out, verify_proof_intermediate(t, m));
    if (wants(config, Identity::FactorialLemma)) append(out, verify_factorial_lemma(t, m));
    if (wants(config, Identity::GeometricSumLemma)) append(out, geometric_sum_lemma_check(t, m));
  }

  std::stable_sort(out.begin(), out.end(), report_less);
  return out;
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& out) {
  if (config.prime_lo > config.prime_hi) throw std::invalid_argument("empty prime range");
  if (config.workers == 0) throw std::invalid_argument("workers must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const auto primes = primes_in_range(config.prime_lo, config.prime_hi);

  std::vector<Slot> slots(primes.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size() || cancelled.load()) return;
      Slot done;
      try {
        done.reports = verify_prime(primes[i], config);
      } catch (...) {
        done.error = std::current_exception();
      }
      done.ready = true;
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(done);
      }
      cv.notify_all();
    }
  };

  const unsigned n_threads = std::min<std::size_t>(config.workers, std::max<std::size_t>(primes.size(), 1));
  std::vector<std::jthread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);

  SweepSummary summary;
  if (config.format == OutputFormat::Csv) out << csv_header() << '\n';
  try {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      Slot slot;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[i].ready; });
        slot = std::move(slots[i]);
      }
      if (slot.error) std::rethrow_exception(slot.error);
      for (const auto& r : slot.reports) {
        out << format_report(r, config.format) << '\n';
        accumulate(summary, r);
      }
      if (!out) throw IoError("failed to write report stream");
      ++summary.primes_checked;
    }
    out.flush();
    if (!out) throw IoError("failed to flush report stream");
  } catch (...) {
    cancelled = true;
    throw;
  }
  pool.clear();
  summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string format_summary(const SweepSummary& s) {
  std::ostringstream os;
  os << "primes checked: " << s.primes_checked << "\nreports: " << s.reports_total
     << "\nfailed: " << s.reports_failed << "\nwall time: " << std::fixed << std::setprecision(3)
     << s.wall_time << " s\n";
  if (s.first_failure) os << "first failure: " << format_report(*s.first_failure, OutputFormat::Text) << '\n';
  return os.str();
}

BenchResult bench_prime(std::uint64_t p) {
  using clock = std::chrono::steady_clock;
  auto ctx = make_context(p);
  BenchResult r;
  r.p = ctx->modulus();

  auto t0 = clock::now();
  BellRow row = bell_row(*ctx);
  r.bell_row_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  r.bell_row_ops = static_cast<std::uint64_t>(r.p) * (r.p - 1) / 2;

  t0 = clock::now();
  const PrimeTables tables(ctx);
  for (std::uint64_t m = 1; m <= 2ULL * r.p; ++m) {
    if (m % r.p == 0) continue;
    r.theorem1_failures += !verify_theorem1(tables, m).pass;
    r.theorem1_ops += r.p - 1;
  }
  r.theorem1_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return r;
}

std::string format_bench(const BenchResult& r) {
  auto rate = [](std::uint64_t ops, double secs) { return secs > 0 ? ops / secs : 0.0; };
  std::ostringstream os;
  os << std::setprecision(4);
  os << "p = " << r.p << '\n'
     << "bell_row: " << r.bell_row_seconds << " s, " << r.bell_row_ops << " residue ops, "
     << rate(r.bell_row_ops, r.bell_row_seconds) << " ops/s\n"
     << "theorem1 sweep (m = 1.." << 2ULL * r.p << ", tables included): " << r.theorem1_seconds
     << " s, " << r.theorem1_ops << " residue ops, " << rate(r.theorem1_ops, r.theorem1_seconds)
     << " ops/s, " << r.theorem1_failures << " failures\n";
  return os.str();
}

}  // namespace bellcong
