#include "bellcong/congruences.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bellcong/oracle.hpp"

namespace bellcong {
namespace {

using detail::add_mod;
using detail::mul_mod;
using detail::neg_mod;
using detail::sub_mod;

constexpr std::array<std::pair<Identity, std::string_view>, 14> kIdentityNames{{
    {Identity::TouchardEq1, "TOUCHARD_EQ1"},
    {Identity::Theorem1, "THEOREM1"},
    {Identity::IntroConstant, "INTRO_CONSTANT"},
    {Identity::Corollary, "COROLLARY"},
    {Identity::CorollaryKernel, "COROLLARY_KERNEL"},
    {Identity::Eq4Base, "EQ4_BASE"},
    {Identity::Eq4Step, "EQ4_STEP"},
    {Identity::BellP, "BELL_P"},
    {Identity::Theorem2Poly, "THEOREM2_POLY"},
    {Identity::Theorem2Eval, "THEOREM2_EVAL"},
    {Identity::SpecialCaseM, "SPECIAL_CASE_M"},
    {Identity::ProofIntermediate, "PROOF_INTERMEDIATE"},
    {Identity::FactorialLemma, "FACTORIAL_LEMMA"},
    {Identity::GeometricSumLemma, "GEOMETRIC_SUM_LEMMA"},
}};

__extension__ using u128 = unsigned __int128;
using Params = std::map<std::string, std::int64_t>;

std::int64_t as_param(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void require_unit_m(const PrimeTables& t, std::uint64_t m, const char* what) {
  if (m == 0 || m % t.p() == 0) {
    throw BadModulus(std::string(what) + ": p = " + std::to_string(t.p()) +
                     " divides m = " + std::to_string(m));
  }
}

std::uint32_t require_unit_x(const PrimeTables& t, std::int64_t x, const char* what) {
  const std::uint32_t v = detail::reduce_signed(x, t.p());
  if (v == 0) {
    throw BadPoint(std::string(what) + ": p = " + std::to_string(t.p()) + " divides x = " +
                   std::to_string(x));
  }
  return v;
}

// (-m)^{-1} mod p.
std::uint32_t inv_neg_m(const PrimeTables& t, std::uint64_t m) {
  const std::uint32_t p = t.p();
  const std::uint32_t neg = neg_mod(static_cast<std::uint32_t>(m % p), p);
  return mod_inv(Residue(neg, t.context())).value();
}

std::uint32_t signed_one(std::uint64_t exponent, std::uint32_t p) {
  return exponent % 2 == 0 ? 1 % p : p - 1;
}

// sum_{0<n<p} T_n(x) c^n from precomputed T_n(x).
std::uint32_t weighted_touchard_value(const PrimeTables& t, std::uint32_t c,
                                      std::span<const std::uint32_t> touchard_at_x) {
  const std::uint32_t p = t.p();
  if (touchard_at_x.size() != p) {
    throw std::invalid_argument("touchard values must have one entry per n in 0..p-1");
  }
  std::uint32_t acc = 0;
  std::uint32_t power = 1 % p;
  for (std::uint32_t n = 1; n < p; ++n) {
    power = mul_mod(power, c, p);
    acc = add_mod(acc, mul_mod(touchard_at_x[n], power, p), p);
  }
  return acc;
}

// Bell value for the Touchard check: bell_mod inside its domain, the exact
// oracle beyond it.
Residue bell_any(const PrimeTables& t, std::uint64_t n) {
  const std::uint64_t p = t.p();
  if (n < p * p) return bell_mod(n, t.bell());
  if (n <= oracle::kMaxBellIndex) {
    return oracle::reduce(oracle::bell_exact(static_cast<std::uint32_t>(n)), t.context());
  }
  throw IndexTooLarge("Bell index " + std::to_string(n) + " is beyond p^2 = " +
                      std::to_string(p * p) + " and the exact table");
}

}  // namespace

std::string_view identity_name(Identity id) noexcept {
  for (const auto& [key, name] : kIdentityNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

std::optional<Identity> identity_from_name(std::string_view name) noexcept {
  for (const auto& [key, n] : kIdentityNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

SideValue side(const Residue& r) { return r.value(); }

SideValue side(const DensePoly& poly) {
  return std::vector<std::uint32_t>(poly.coeffs().begin(), poly.coeffs().end());
}

std::optional<std::int64_t> VerificationReport::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

VerificationReport make_report(Identity id, Params params, SideValue lhs, SideValue rhs) {
  if (!params.contains("p")) throw std::invalid_argument("report parameters must include p");
  const bool pass = lhs == rhs;
  return {id, std::move(params), std::move(lhs), std::move(rhs), pass};
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  auto key = [](const VerificationReport& r) {
    return std::make_tuple(static_cast<int>(r.identity), r.param("p"), r.param("m"), r.param("n"),
                           r.param("x"));
  };
  const auto ka = key(a);
  const auto kb = key(b);
  if (ka != kb) return ka < kb;
  return a.params < b.params;
}

PrimeTables::PrimeTables(std::uint64_t p) : PrimeTables(make_context(p)) {}

PrimeTables::PrimeTables(ContextPtr ctx)
    : ctx_(std::move(ctx)), bell_(bell_row(*ctx_)), derangements_(derangement_row(*ctx_)) {}

const std::vector<DensePoly>& PrimeTables::touchard() const {
  std::call_once(touchard_once_, [this] { touchard_ = touchard_polys(p() - 1, *ctx_); });
  return touchard_;
}

// --- S_m and the derangement congruence -------------------------------------

Residue s_m(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "s_m");
  const std::uint32_t p = t.p();
  const std::uint32_t c = inv_neg_m(t, m);
  const auto b = t.bell().values();
  u128 acc = 0;
  std::uint32_t power = 1 % p;
  for (std::uint32_t k = 1; k < p; ++k) {
    power = mul_mod(power, c, p);
    acc += static_cast<std::uint64_t>(b[k]) * power;
  }
  return {static_cast<std::uint32_t>(acc % p), t.context()};
}

Residue theorem1_rhs(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "theorem1_rhs");
  const std::uint64_t n = m - 1;
  if (n < t.p()) {
    const Residue d = t.derangements()[n];
    return n % 2 == 0 ? d : -d;
  }
  // sum_r (-1)^r (m-1)(m-2)...(m-r) is (-1)^{m-1} D_{m-1} as one periodic object.
  return signed_derangement_series_mod(n, t.context());
}

VerificationReport verify_theorem1(const PrimeTables& t, std::uint64_t m) {
  return make_report(Identity::Theorem1, {{"p", t.p()}, {"m", as_param(m)}}, side(s_m(t, m)),
                     side(theorem1_rhs(t, m)));
}

VerificationReport verify_intro_constant(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "verify_intro_constant");
  if (m - 1 > oracle::kMaxDerangementIndex) {
    throw IndexTooLarge("verify_intro_constant: m - 1 = " + std::to_string(m - 1) +
                        " exceeds the exact derangement range");
  }
  const std::uint32_t p = t.p();
  const std::uint32_t c = inv_neg_m(t, m);
  const auto b = t.bell().values();
  std::uint32_t lhs = 0;
  std::uint32_t power = 1 % p;
  for (std::uint32_t n = 0; n < p; ++n) {
    lhs = add_mod(lhs, mul_mod(b[n], power, p), p);
    power = mul_mod(power, c, p);
  }
  BigInt constant = oracle::derangement_exact(static_cast<std::uint32_t>(m - 1));
  if ((m - 1) % 2 == 1) constant = -constant;
  constant += BigInt(1);
  return make_report(Identity::IntroConstant, {{"p", p}, {"m", as_param(m)}}, lhs,
                     side(oracle::reduce(constant, t.context())));
}

std::vector<VerificationReport> verify_corollary(const PrimeTables& t) {
  const std::uint32_t p = t.p();
  const auto b = t.bell().values();
  const auto d = t.derangements().values();
  std::vector<VerificationReport> out;

  // weight[m] = (-1)^m D_{m-1}, power[m] = (-m)^n
  std::vector<std::uint32_t> weight(p, 0);
  std::vector<std::uint32_t> power(p, 1 % p);
  for (std::uint32_t m = 1; m < p; ++m) {
    weight[m] = m % 2 == 0 ? d[m - 1] : neg_mod(d[m - 1], p);
  }
  for (std::uint32_t n = 1; n < p; ++n) {
    std::uint32_t rhs = 0;
    for (std::uint32_t m = 1; m < p; ++m) {
      power[m] = mul_mod(power[m], neg_mod(m, p), p);
      rhs = add_mod(rhs, mul_mod(weight[m], power[m], p), p);
    }
    out.push_back(make_report(Identity::Corollary, {{"p", p}, {"n", n}}, b[n], rhs));
  }

  // sums[e + (p-2)] = sum_{0<m<p} (-m)^e for e in -(p-2)..(p-2)
  if (p > 2) {
    const std::size_t span_len = 2 * (p - 2) + 1;
    std::vector<std::uint32_t> sums(span_len, 0);
    for (std::uint32_t m = 1; m < p; ++m) {
      const std::uint32_t base = neg_mod(m, p);
      const std::uint32_t inv = mod_inv(Residue(base, t.context())).value();
      std::uint32_t up = 1;
      std::uint32_t down = 1;
      sums[p - 2] = add_mod(sums[p - 2], 1, p);
      for (std::uint32_t e = 1; e <= p - 2; ++e) {
        up = mul_mod(up, base, p);
        down = mul_mod(down, inv, p);
        sums[p - 2 + e] = add_mod(sums[p - 2 + e], up, p);
        sums[p - 2 - e] = add_mod(sums[p - 2 - e], down, p);
      }
    }
    for (std::uint32_t n = 1; n < p; ++n) {
      for (std::uint32_t k = 1; k < p; ++k) {
        const std::uint32_t lhs = sums[static_cast<std::size_t>(p - 2) + n - k];
        const std::uint32_t rhs = n == k ? p - 1 : 0;
        out.push_back(make_report(Identity::CorollaryKernel, {{"p", p}, {"n", n}, {"k", k}}, lhs, rhs));
      }
    }
  } else {
    // p = 2: the only pair is n = k = 1 and the sum is (-1)^0 = 1 = -1 mod 2.
    out.push_back(make_report(Identity::CorollaryKernel, {{"p", 2}, {"n", 1}, {"k", 1}},
                              std::uint32_t{1}, std::uint32_t{1}));
  }
  return out;
}

std::vector<VerificationReport> verify_eq4(const PrimeTables& t) {
  const std::uint32_t p = t.p();
  std::vector<std::uint32_t> s(p, 0);
  for (std::uint32_t m = 1; m < p; ++m) s[m] = s_m(t, m).value();

  std::vector<VerificationReport> out;
  out.push_back(make_report(Identity::Eq4Base, {{"p", p}, {"m", 1}}, s[1], std::uint32_t{1 % p}));
  for (std::uint32_t m = 1; m + 2 <= p; ++m) {
    out.push_back(make_report(Identity::Eq4Step, {{"p", p}, {"m", m}}, mul_mod(m, s[m], p),
                              sub_mod(s[1], s[m + 1], p)));
  }
  return out;
}

std::vector<Residue> eq4_unrolled(const PrimeTables& t) {
  const std::uint32_t p = t.p();
  std::vector<Residue> out;
  out.reserve(p - 1);
  std::uint32_t s = 1 % p;
  for (std::uint32_t m = 1; m < p; ++m) {
    out.emplace_back(s, t.context());
    s = sub_mod(1 % p, mul_mod(m, s, p), p);
  }
  return out;
}

std::vector<VerificationReport> verify_touchard(const PrimeTables& t, std::uint64_t n_max) {
  const std::uint32_t p = t.p();
  std::vector<VerificationReport> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const Residue lhs = bell_any(t, p + n);
    const Residue rhs = bell_any(t, n) + bell_any(t, n + 1);
    out.push_back(make_report(Identity::TouchardEq1, {{"p", p}, {"n", as_param(n)}}, side(lhs), side(rhs)));
  }
  return out;
}

VerificationReport verify_bell_p(const PrimeTables& t) {
  const std::uint32_t p = t.p();
  return make_report(Identity::BellP, {{"p", p}, {"n", p}}, side(bell_mod(p, t.bell())),
                     side(normalize(2, t.context())));
}

// --- Touchard polynomial identity -------------------------------------------

std::vector<std::uint32_t> falling_factorial_ratios(const PrimeContext& ctx, std::uint64_t m) {
  const std::uint32_t p = ctx.modulus();
  std::vector<std::uint32_t> ratio(m);
  if (m == 0) return ratio;
  ratio[m - 1] = 1 % p;
  for (std::uint64_t l = m - 1; l-- > 0;) {
    ratio[l] = mul_mod(ratio[l + 1], static_cast<std::uint32_t>((l + 1) % p), p);
  }
  return ratio;
}

DensePoly touchard_weighted_sum(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "touchard_weighted_sum");
  const std::uint32_t p = t.p();
  const std::uint32_t c = inv_neg_m(t, m);
  const auto& polys = t.touchard();
  std::vector<std::uint32_t> acc(p, 0);
  std::uint32_t power = 1 % p;
  for (std::uint32_t n = 1; n < p; ++n) {
    power = mul_mod(power, c, p);
    const auto tn = polys[n].coeffs();
    for (std::size_t i = 0; i < tn.size(); ++i) acc[i] = add_mod(acc[i], mul_mod(tn[i], power, p), p);
  }
  return {t.context(), std::move(acc)};
}

DensePoly theorem2_lhs(const PrimeTables& t, std::uint64_t m) {
  const DensePoly sum = touchard_weighted_sum(t, m);
  return mul_monomial(sum, m, Residue(signed_one(m, t.p()), t.context()));
}

DensePoly theorem2_rhs(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "theorem2_rhs");
  const std::uint32_t p = t.p();
  const auto ratio = falling_factorial_ratios(t.context(), m);
  std::vector<std::uint32_t> c(p + m, 0);
  for (std::uint64_t l = 0; l < m; ++l) {
    // -(-1)^l = (-1)^{l+1}
    c[p + l] = l % 2 == 1 ? ratio[l] : neg_mod(ratio[l], p);
  }
  return {t.context(), std::move(c)};
}

VerificationReport verify_theorem2(const PrimeTables& t, std::uint64_t m) {
  return make_report(Identity::Theorem2Poly, {{"p", t.p()}, {"m", as_param(m)}},
                     side(theorem2_lhs(t, m)), side(theorem2_rhs(t, m)));
}

std::vector<std::uint32_t> touchard_values_at(const PrimeTables& t, std::int64_t x) {
  const Residue xr = normalize(x, t.context());
  const auto& polys = t.touchard();
  std::vector<std::uint32_t> out;
  out.reserve(polys.size());
  for (const auto& poly : polys) out.push_back(eval(poly, xr).value());
  return out;
}

VerificationReport verify_theorem2_eval(const PrimeTables& t, std::uint64_t m, std::int64_t x) {
  require_unit_m(t, m, "verify_theorem2_eval");
  require_unit_x(t, x, "verify_theorem2_eval");
  return verify_theorem2_eval(t, m, x, touchard_values_at(t, x));
}

VerificationReport verify_theorem2_eval(const PrimeTables& t, std::uint64_t m, std::int64_t x,
                                        std::span<const std::uint32_t> touchard_at_x) {
  require_unit_m(t, m, "verify_theorem2_eval");
  const std::uint32_t xv = require_unit_x(t, x, "verify_theorem2_eval");
  const std::uint32_t p = t.p();
  const std::uint32_t lhs = weighted_touchard_value(t, inv_neg_m(t, m), touchard_at_x);

  const std::uint32_t neg_x = neg_mod(xv, p);
  const auto ratio = falling_factorial_ratios(t.context(), m);
  std::uint32_t sum = 0;
  std::uint32_t power = 1 % p;  // (-x)^k
  for (std::uint64_t k = 0; k < m; ++k) {
    sum = add_mod(sum, mul_mod(ratio[k], power, p), p);
    power = mul_mod(power, neg_x, p);
  }
  const std::uint32_t denom = detail::pow_mod(neg_x, m - 1, p);
  const std::uint32_t rhs = mul_mod(sum, mod_inv(Residue(denom, t.context())).value(), p);
  return make_report(Identity::Theorem2Eval, {{"p", p}, {"m", as_param(m)}, {"x", x}}, lhs, rhs);
}

std::vector<VerificationReport> verify_special_cases(const PrimeTables& t, std::int64_t x) {
  require_unit_x(t, x, "verify_special_cases");
  return verify_special_cases(t, x, touchard_values_at(t, x));
}

std::vector<VerificationReport> verify_special_cases(const PrimeTables& t, std::int64_t x,
                                                     std::span<const std::uint32_t> touchard_at_x) {
  const std::uint32_t xv = require_unit_x(t, x, "verify_special_cases");
  const std::uint32_t p = t.p();
  const PrimeContext& ctx = t.context();
  const Residue X(xv, ctx);
  const Residue inv_x = mod_inv(X);

  std::vector<VerificationReport> out;
  for (std::uint32_t m : {2u, 3u, 4u}) {
    const bool excluded = (m == 3) ? p == 3 : p == 2;
    if (excluded || m % p == 0) continue;
    Residue closed = ctx.zero();
    switch (m) {
      case 2:  // (x - 1)/x
        closed = (X - ctx.one()) * inv_x;
        break;
      case 3:  // (x^2 - 2x + 2)/x^2
        closed = (X * X - normalize(2, ctx) * X + normalize(2, ctx)) * inv_x * inv_x;
        break;
      default:  // (x^3 - 3x^2 + 6x - 6)/x^3
        closed = (X * X * X - normalize(3, ctx) * X * X + normalize(6, ctx) * X - normalize(6, ctx)) *
                 mod_pow(inv_x, 3);
        break;
    }
    const std::uint32_t lhs = weighted_touchard_value(t, inv_neg_m(t, m), touchard_at_x);
    out.push_back(make_report(Identity::SpecialCaseM, {{"p", p}, {"m", m}, {"x", x}}, lhs, side(closed)));
  }
  return out;
}

std::uint32_t least_positive_residue_of_neg(std::uint64_t m, std::uint32_t p) {
  const auto r = static_cast<std::uint32_t>((p - m % p) % p);
  return r == 0 ? p : r;
}

DensePoly proof_intermediate(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "proof_intermediate");
  const std::uint32_t p = t.p();
  const std::uint32_t r = least_positive_residue_of_neg(m, p);
  const auto inv_fact = t.context().inverse_factorials();
  const std::uint32_t lead = mul_mod(signed_one(r + 1, p), inv_fact[r], p);
  std::vector<std::uint32_t> c(p, 0);
  for (std::uint32_t k = r; k < p; ++k) {
    c[k] = mul_mod(mul_mod(lead, signed_one(k, p), p), inv_fact[k - r], p);
  }
  return {t.context(), std::move(c)};
}

DensePoly proof_intermediate_shifted(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "proof_intermediate_shifted");
  const std::uint32_t p = t.p();
  const std::uint32_t r = least_positive_residue_of_neg(m, p);
  const auto inv_fact = t.context().inverse_factorials();
  const std::uint32_t lead = mul_mod(signed_one(r + 1, p), inv_fact[r], p);
  const std::uint64_t l_lo = m + r - p;  // m + r is a positive multiple of p
  std::vector<std::uint32_t> c(p + m, 0);
  for (std::uint64_t l = l_lo; l < m; ++l) {
    const std::uint64_t f = p + l - m - r;
    c[p + l] = mul_mod(mul_mod(lead, signed_one(p + l, p), p), inv_fact[f], p);
  }
  return {t.context(), std::move(c)};
}

std::vector<VerificationReport> verify_proof_intermediate(const PrimeTables& t, std::uint64_t m) {
  const std::uint32_t p = t.p();
  const auto r = static_cast<std::int64_t>(least_positive_residue_of_neg(m, p));
  std::vector<VerificationReport> out;
  out.push_back(make_report(Identity::ProofIntermediate,
                            {{"p", p}, {"m", as_param(m)}, {"r", r}, {"stage", 1}},
                            side(proof_intermediate(t, m)), side(touchard_weighted_sum(t, m))));
  out.push_back(make_report(Identity::ProofIntermediate,
                            {{"p", p}, {"m", as_param(m)}, {"r", r}, {"stage", 2}},
                            side(proof_intermediate_shifted(t, m)), side(theorem2_lhs(t, m))));
  return out;
}

std::vector<VerificationReport> verify_factorial_lemma(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "verify_factorial_lemma");
  const std::uint32_t p = t.p();
  const std::uint32_t r = least_positive_residue_of_neg(m, p);
  const auto fact = t.context().factorials();
  const auto ratio = falling_factorial_ratios(t.context(), m);
  const std::uint64_t threshold = m + r - p;

  std::vector<VerificationReport> out;
  out.reserve(m);
  for (std::uint64_t l = 0; l < m; ++l) {
    std::uint32_t rhs = 0;
    if (l >= threshold) {
      const std::uint64_t f = p + l - m - r;
      if (r >= p || f >= p) {
        throw std::logic_error("factorial argument outside [0, p) in the factorial lemma");
      }
      const std::uint32_t denom = mul_mod(fact[r], fact[f], p);
      rhs = mul_mod(signed_one(r + 1, p), mod_inv(Residue(denom, t.context())).value(), p);
    }
    out.push_back(make_report(Identity::FactorialLemma,
                              {{"p", p}, {"m", as_param(m)}, {"l", as_param(l)}, {"r", r}}, ratio[l], rhs));
  }
  return out;
}

std::vector<VerificationReport> geometric_sum_lemma_check(const PrimeTables& t, std::uint64_t m) {
  require_unit_m(t, m, "geometric_sum_lemma_check");
  const std::uint32_t p = t.p();
  const std::uint32_t inv_m =
      mod_inv(Residue(static_cast<std::uint32_t>(m % p), t.context())).value();
  std::vector<VerificationReport> out;
  out.reserve(p - 1);
  for (std::uint32_t j = 1; j < p; ++j) {
    const std::uint32_t ratio = mul_mod(neg_mod(j, p), inv_m, p);
    std::uint32_t sum = 0;
    std::uint32_t power = 1 % p;
    for (std::uint32_t n = 1; n < p; ++n) {
      power = mul_mod(power, ratio, p);
      sum = add_mod(sum, power, p);
    }
    const std::uint32_t rhs = (m + j) % p == 0 ? p - 1 : 0;
    out.push_back(make_report(Identity::GeometricSumLemma, {{"p", p}, {"m", as_param(m)}, {"j", j}}, sum, rhs));
  }
  return out;
}

}  // namespace bellcong
