#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bellcong/modarith.hpp"
#include "bellcong/polynomial.hpp"
#include "bellcong/sequences.hpp"

namespace bellcong {

/// Identity checked by a VerificationReport. The declaration order is the
/// canonical report order within one prime.
enum class Identity {
  TouchardEq1,
  Theorem1,
  IntroConstant,
  Corollary,
  CorollaryKernel,
  Eq4Base,
  Eq4Step,
  BellP,
  Theorem2Poly,
  Theorem2Eval,
  SpecialCaseM,
  ProofIntermediate,
  FactorialLemma,
  GeometricSumLemma,
};

/// "TOUCHARD_EQ1", "THEOREM1", ...
std::string_view identity_name(Identity id) noexcept;
std::optional<Identity> identity_from_name(std::string_view name) noexcept;

/// One side of an identity: a residue or an ascending coefficient list.
using SideValue = std::variant<std::uint32_t, std::vector<std::uint32_t>>;

SideValue side(const Residue& r);
SideValue side(const DensePoly& poly);

struct VerificationReport {
  Identity identity{};
  /// Always contains "p"; other keys are m, n, x, k, l, j, r, stage as applicable.
  std::map<std::string, std::int64_t> params;
  SideValue lhs;
  SideValue rhs;
  bool pass = false;

  std::uint32_t p() const { return static_cast<std::uint32_t>(params.at("p")); }
  std::optional<std::int64_t> param(const std::string& key) const;
};

VerificationReport make_report(Identity id, std::map<std::string, std::int64_t> params,
                               SideValue lhs, SideValue rhs);

/// Canonical order: identity, p, m, n, x, then the remaining params.
bool report_less(const VerificationReport& a, const VerificationReport& b);

/// Per-prime cache of the O(p^2) rows shared by every verifier for that
/// prime. Bell and derangement rows are built eagerly, the Touchard list on
/// first use (thread-safe).
class PrimeTables {
 public:
  explicit PrimeTables(std::uint64_t p);
  explicit PrimeTables(ContextPtr ctx);
  PrimeTables(const PrimeTables&) = delete;
  PrimeTables& operator=(const PrimeTables&) = delete;

  const PrimeContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  std::uint32_t p() const noexcept { return ctx_->modulus(); }
  const BellRow& bell() const noexcept { return bell_; }
  const DerangementRow& derangements() const noexcept { return derangements_; }
  /// [T_0, ..., T_{p-1}].
  const std::vector<DensePoly>& touchard() const;

 private:
  ContextPtr ctx_;
  BellRow bell_;
  DerangementRow derangements_;
  mutable std::once_flag touchard_once_;
  mutable std::vector<DensePoly> touchard_;
};

// --- S_m and the derangement congruence -------------------------------------

/// S_m = sum_{0<k<p} B_k / (-m)^k. Throws BadModulus if p | m.
Residue s_m(const PrimeTables& t, std::uint64_t m);
/// (-1)^{m-1} D_{m-1} mod p. For m - 1 >= p this is the falling-factorial
/// series at (m-1) mod p, which is periodic in m with period p.
Residue theorem1_rhs(const PrimeTables& t, std::uint64_t m);
VerificationReport verify_theorem1(const PrimeTables& t, std::uint64_t m);

/// sum_{n=0}^{p-1} B_n/(-m)^n against 1 + (-1)^{m-1} D_{m-1} with the exact
/// derangement number from the oracle (so m - 1 <= 1200). For m = 8 the
/// constant is -1853.
VerificationReport verify_intro_constant(const PrimeTables& t, std::uint64_t m);

/// One COROLLARY report per n in 1..p-1, followed by COROLLARY_KERNEL
/// reports for sum_{0<m<p} (-m)^{n-k} = -delta(n,k) over all n, k in 1..p-1.
std::vector<VerificationReport> verify_corollary(const PrimeTables& t);

/// EQ4_BASE (S_1 = 1) and one EQ4_STEP (m S_m = S_1 - S_{m+1}) per m in
/// 1..p-2. For p = 2 the step range is empty and only the base is returned.
std::vector<VerificationReport> verify_eq4(const PrimeTables& t);
/// S_1..S_{p-1} obtained by unrolling S_{m+1} = S_1 - m S_m from S_1 = 1.
std::vector<Residue> eq4_unrolled(const PrimeTables& t);

/// B_{p+n} = B_n + B_{n+1} for n in 0..n_max. Bell values come from
/// bell_mod where the index is below p^2 and from the exact oracle otherwise.
std::vector<VerificationReport> verify_touchard(const PrimeTables& t, std::uint64_t n_max);

/// bell_mod(p) = 2.
VerificationReport verify_bell_p(const PrimeTables& t);

// --- Touchard polynomial identity -------------------------------------------

/// (m-1)!/l! as the product (l+1)...(m-1) mod p, for l = 0..m-1.
std::vector<std::uint32_t> falling_factorial_ratios(const PrimeContext& ctx, std::uint64_t m);

/// sum_{0<n<p} T_n(x) / (-m)^n as a polynomial.
DensePoly touchard_weighted_sum(const PrimeTables& t, std::uint64_t m);
/// (-x)^m * touchard_weighted_sum.
DensePoly theorem2_lhs(const PrimeTables& t, std::uint64_t m);
/// -x^p sum_{l<m} (m-1)!/l! (-x)^l.
DensePoly theorem2_rhs(const PrimeTables& t, std::uint64_t m);
VerificationReport verify_theorem2(const PrimeTables& t, std::uint64_t m);

/// T_1(x)..T_{p-1}(x) evaluated at x, index n at position n (position 0 is T_0(x)).
std::vector<std::uint32_t> touchard_values_at(const PrimeTables& t, std::int64_t x);

/// sum_{0<n<p} T_n(x)/(-m)^n against (-x)^{1-m} sum_{k<m} (m-1)!/k! (-x)^k.
/// Throws BadModulus if p | m and BadPoint if p | x.
VerificationReport verify_theorem2_eval(const PrimeTables& t, std::uint64_t m, std::int64_t x);
/// Same check with T_n(x) precomputed by touchard_values_at.
VerificationReport verify_theorem2_eval(const PrimeTables& t, std::uint64_t m, std::int64_t x,
                                        std::span<const std::uint32_t> touchard_at_x);

/// The closed forms for m = 2, 3, 4: (x-1)/x, (x^2-2x+2)/x^2 and
/// (x^3-3x^2+6x-6)/x^3, each skipped when p = 2 (m = 2, 4) or p = 3 (m = 3).
std::vector<VerificationReport> verify_special_cases(const PrimeTables& t, std::int64_t x);
std::vector<VerificationReport> verify_special_cases(const PrimeTables& t, std::int64_t x,
                                                     std::span<const std::uint32_t> touchard_at_x);

/// Least positive residue r of -m mod p (1 <= r <= p-1 when p does not divide m).
std::uint32_t least_positive_residue_of_neg(std::uint64_t m, std::uint32_t p);

/// ((-1)^{r+1}/r!) sum_{k=r}^{p-1} (-x)^k/(k-r)!.
DensePoly proof_intermediate(const PrimeTables& t, std::uint64_t m);
/// ((-1)^{r+1}/r!) sum_{l=m+r-p}^{m-1} (-x)^{p+l}/(p+l-m-r)!, the same
/// expression after multiplying by (-x)^m.
DensePoly proof_intermediate_shifted(const PrimeTables& t, std::uint64_t m);
/// stage 1: proof_intermediate against touchard_weighted_sum.
/// stage 2: proof_intermediate_shifted against theorem2_lhs.
std::vector<VerificationReport> verify_proof_intermediate(const PrimeTables& t, std::uint64_t m);

/// One report per l in 0..m-1 for
///   (m-1)!/l! = (-1)^{r+1} / (r! (p+l-m-r)!)  if m+r-p <= l < m,
///   (m-1)!/l! = 0                             if 0 <= l < m+r-p.
std::vector<VerificationReport> verify_factorial_lemma(const PrimeTables& t, std::uint64_t m);

/// One report per j in 1..p-1: sum_{n=1}^{p-1} (-j/m)^n is -1 when
/// p | m+j and 0 otherwise.
std::vector<VerificationReport> geometric_sum_lemma_check(const PrimeTables& t, std::uint64_t m);

}  // namespace bellcong
