#include <algorithm>
#include <vector>

#include "bellcong/congruences.hpp"
#include "bellcong/oracle.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bellcong;
namespace to = testing_oracles;

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::uint32_t scalar(const SideValue& v) { return std::get<std::uint32_t>(v); }
Coeffs coeffs(const DensePoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

bool all_pass(const std::vector<VerificationReport>& rs) {
  return std::ranges::all_of(rs, [](const auto& r) { return r.pass; });
}

}  // namespace

TEST_CASE("identity names round-trip") {
  for (int i = 0; i <= static_cast<int>(Identity::GeometricSumLemma); ++i) {
    const auto id = static_cast<Identity>(i);
    CHECK(identity_from_name(identity_name(id)) == id);
  }
  CHECK(identity_name(Identity::Theorem1) == "THEOREM1");
  CHECK_FALSE(identity_from_name("NOPE").has_value());
}

TEST_CASE("reports record both sides and require p") {
  const auto r = make_report(Identity::Theorem1, {{"p", 7}, {"m", 2}}, std::uint32_t{3}, std::uint32_t{4});
  CHECK_FALSE(r.pass);
  CHECK(r.p() == 7);
  CHECK(r.param("m") == 2);
  CHECK_FALSE(r.param("x").has_value());
  CHECK_THROWS_AS(make_report(Identity::Theorem1, {{"m", 2}}, std::uint32_t{0}, std::uint32_t{0}),
                  std::invalid_argument);
}

TEST_CASE("s_m") {
  const PrimeTables t7(7);
  CHECK(s_m(t7, 1).value() == 1);
  CHECK(s_m(t7, 2).value() == 0);
  CHECK(s_m(t7, 9) == s_m(t7, 2));
  CHECK_THROWS_AS(s_m(t7, 14), BadModulus);
}

TEST_CASE("s_m is periodic in m") {
  for (std::uint32_t p : to::primes_trial(2, 101)) {
    const PrimeTables t(p);
    for (std::uint32_t m = 1; m <= p; ++m) {
      if (m % p == 0) continue;
      CHECK(s_m(t, m) == s_m(t, m + p));
    }
  }
}

TEST_CASE("theorem1_rhs and verify_theorem1") {
  const PrimeTables t7(7);
  CHECK(theorem1_rhs(t7, 1).value() == 1);
  CHECK(theorem1_rhs(t7, 2).value() == 0);
  CHECK(theorem1_rhs(t7, 3).value() == 1);
  CHECK_THROWS_AS(theorem1_rhs(t7, 7), BadModulus);

  auto r = verify_theorem1(t7, 1);
  CHECK(r.pass);
  CHECK(scalar(r.lhs) == 1);
  r = verify_theorem1(t7, 2);
  CHECK(r.pass);
  CHECK(scalar(r.rhs) == 0);

  const PrimeTables t5(5);
  r = verify_theorem1(t5, 8);
  CHECK(r.pass);
  CHECK(scalar(r.rhs) == 1);

  // Beyond m < p the series form must still equal the exact signed derangement.
  for (std::uint64_t m = 1; m <= 15; ++m) {
    if (m % 5 == 0) continue;
    BigInt d = oracle::derangement_exact(static_cast<std::uint32_t>(m - 1));
    if ((m - 1) % 2) d = -d;
    CHECK(theorem1_rhs(t5, m) == oracle::reduce(d, t5.context()));
  }
}

TEST_CASE("verify_intro_constant") {
  const PrimeTables t3(3);
  auto r = verify_intro_constant(t3, 8);
  CHECK(r.pass);
  CHECK(scalar(r.lhs) == 1);
  CHECK(scalar(r.rhs) == 1);

  const PrimeTables t5(5);
  r = verify_intro_constant(t5, 8);
  CHECK(r.pass);
  CHECK(scalar(r.rhs) == 2);

  const PrimeTables t7(7);
  r = verify_intro_constant(t7, 1);
  CHECK(r.pass);
  CHECK(scalar(r.rhs) == 2);

  const PrimeTables t2(2);
  CHECK_THROWS_AS(verify_intro_constant(t2, 8), BadModulus);
  CHECK_THROWS_AS(verify_intro_constant(t3, 1202), IndexTooLarge);
}

TEST_CASE("verify_corollary") {
  const PrimeTables t3(3);
  const auto rs = verify_corollary(t3);
  std::vector<VerificationReport> main;
  std::ranges::copy_if(rs, std::back_inserter(main), [](const auto& r) { return r.identity == Identity::Corollary; });
  REQUIRE(main.size() == 2);
  CHECK(scalar(main[0].rhs) == 1);
  CHECK(scalar(main[1].rhs) == 2);
  CHECK(all_pass(rs));
  // kernel: (p-1)^2 pairs
  CHECK(std::ranges::count_if(rs, [](const auto& r) { return r.identity == Identity::CorollaryKernel; }) == 4);

  const PrimeTables t5(5);
  const auto r5 = verify_corollary(t5);
  CHECK(std::ranges::count_if(r5, [](const auto& r) { return r.identity == Identity::Corollary && r.pass; }) == 4);
  CHECK(all_pass(verify_corollary(PrimeTables(2))));
}

TEST_CASE("verify_eq4 and the unrolled chain") {
  const PrimeTables t7(7);
  const auto rs = verify_eq4(t7);
  REQUIRE(rs.size() == 6);
  CHECK(rs[0].identity == Identity::Eq4Base);
  CHECK(scalar(rs[0].lhs) == 1);
  CHECK(rs[2].param("m") == 2);
  CHECK(scalar(rs[2].lhs) == 0);
  CHECK(scalar(rs[2].rhs) == 0);
  CHECK(all_pass(rs));
  CHECK(all_pass(verify_eq4(PrimeTables(3))));

  const auto two = verify_eq4(PrimeTables(2));
  REQUIRE(two.size() == 1);
  CHECK(two[0].identity == Identity::Eq4Base);
  CHECK(two[0].pass);

  const auto unrolled = eq4_unrolled(t7);
  for (std::uint32_t m = 1; m < 7; ++m) CHECK(unrolled[m - 1] == s_m(t7, m));
}

TEST_CASE("verify_touchard") {
  const PrimeTables t5(5);
  const auto rs = verify_touchard(t5, 1);
  REQUIRE(rs.size() == 2);
  CHECK(scalar(rs[0].lhs) == 2);
  CHECK(scalar(rs[1].lhs) == 3);
  CHECK(all_pass(rs));
  const auto r3 = verify_touchard(PrimeTables(3), 2);
  CHECK(scalar(r3[2].lhs) == 1);
  CHECK(all_pass(r3));
  // indices beyond p^2 fall back to the exact table
  CHECK(all_pass(verify_touchard(PrimeTables(2), 4)));
  CHECK_THROWS_AS(verify_touchard(PrimeTables(2), 1300), IndexTooLarge);
}

TEST_CASE("verify_bell_p") {
  CHECK(verify_bell_p(PrimeTables(2)).pass);
  const auto r = verify_bell_p(PrimeTables(997));
  CHECK(r.pass);
  CHECK(scalar(r.lhs) == 2);
}

TEST_CASE("theorem2_lhs") {
  const PrimeTables t3(3);
  CHECK(coeffs(theorem2_lhs(t3, 2)) == Coeffs{0, 0, 0, 2, 1});
  // m = 5 = 2 + p: the weighted sum is the same, only the (-x)^m factor changes
  CHECK(theorem2_lhs(t3, 5) == mul_monomial(theorem2_lhs(t3, 2), 3, -t3.context().one()));
  CHECK(coeffs(theorem2_lhs(PrimeTables(2), 1)) == Coeffs{0, 0, 1});
  CHECK_THROWS_AS(theorem2_lhs(t3, 3), BadModulus);
}

TEST_CASE("theorem2_rhs") {
  CHECK(coeffs(theorem2_rhs(PrimeTables(3), 2)) == Coeffs{0, 0, 0, 2, 1});
  CHECK(coeffs(theorem2_rhs(PrimeTables(2), 1)) == Coeffs{0, 0, 1});
  CHECK(coeffs(theorem2_rhs(PrimeTables(5), 4)) == Coeffs{0, 0, 0, 0, 0, 4, 1, 2, 1});
  // (m-1)!/l! by products, never by division: m - 1 >= p still works
  const PrimeTables t3(3);
  const auto big_m = theorem2_rhs(t3, 7);
  CHECK(big_m.degree() == 3 + 6);
}

TEST_CASE("verify_theorem2") {
  CHECK(verify_theorem2(PrimeTables(3), 2).pass);
  CHECK(verify_theorem2(PrimeTables(5), 1).pass);
  CHECK(verify_theorem2(PrimeTables(7), 4).pass);
  for (std::uint32_t p : to::primes_trial(2, 31)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= 2 * p; ++m) {
      if (m % p == 0) continue;
      const auto l = theorem2_lhs(t, m);
      const auto r = theorem2_rhs(t, m);
      CHECK(l == r);
      CHECK(l.degree() <= static_cast<std::ptrdiff_t>(p + m - 1));
    }
  }
}

TEST_CASE("verify_theorem2_eval") {
  const PrimeTables t5(5);
  auto r = verify_theorem2_eval(t5, 2, 2);
  CHECK(r.pass);
  CHECK(scalar(r.lhs) == 3);
  r = verify_theorem2_eval(t5, 2, 1);
  CHECK(r.pass);
  CHECK(scalar(r.lhs) == 0);
  r = verify_theorem2_eval(PrimeTables(7), 3, 1);
  CHECK(r.pass);
  CHECK(scalar(r.rhs) == 1);
  CHECK_THROWS_AS(verify_theorem2_eval(t5, 2, 10), BadPoint);
  CHECK_THROWS_AS(verify_theorem2_eval(t5, 5, 1), BadModulus);
  CHECK(verify_theorem2_eval(t5, 2, -3).pass);
}

TEST_CASE("polynomial identity evaluated at x matches the scalar form") {
  for (std::uint32_t p : to::primes_trial(2, 31)) {
    const PrimeTables t(p);
    const auto& ctx = t.context();
    for (std::uint64_t m = 1; m <= p; ++m) {
      if (m % p == 0) continue;
      const auto lhs = theorem2_lhs(t, m);
      const auto rhs = theorem2_rhs(t, m);
      for (std::int64_t x = 1; x < p; ++x) {
        const Residue X = normalize(x, ctx);
        const Residue a = eval(lhs, X);
        CHECK(a == eval(rhs, X));
        const auto report = verify_theorem2_eval(t, m, x);
        CHECK(report.pass);
        const Residue scale = mod_inv(mod_pow(-X, m));
        CHECK((a * scale).value() == scalar(report.lhs));
      }
    }
  }
}

TEST_CASE("evaluation at x = 1 reduces to the derangement congruence") {
  for (std::uint32_t p : to::primes_trial(2, 61)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= p; ++m) {
      if (m % p == 0) continue;
      const auto r2 = verify_theorem2_eval(t, m, 1);
      const auto r1 = verify_theorem1(t, m);
      CHECK(r2.lhs == r1.lhs);
      CHECK(r2.rhs == r1.rhs);
    }
  }
}

TEST_CASE("verify_special_cases") {
  const auto r5 = verify_special_cases(PrimeTables(5), 2);
  REQUIRE(r5.size() == 3);
  CHECK(r5[0].param("m") == 2);
  CHECK(scalar(r5[0].rhs) == 3);
  CHECK(all_pass(r5));

  const auto r7 = verify_special_cases(PrimeTables(7), 1);
  REQUIRE(r7.size() == 3);
  CHECK(r7[2].param("m") == 4);
  CHECK(scalar(r7[2].rhs) == 5);
  CHECK(all_pass(r7));

  const auto r3 = verify_special_cases(PrimeTables(3), 1);
  CHECK(std::ranges::none_of(r3, [](const auto& r) { return r.param("m") == 3; }));
  CHECK(r3.size() == 2);
  const auto r2 = verify_special_cases(PrimeTables(2), 1);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].param("m") == 3);
  CHECK(r2[0].pass);
  CHECK_THROWS_AS(verify_special_cases(PrimeTables(5), 5), BadPoint);
}

TEST_CASE("proof_intermediate") {
  const PrimeTables t3(3);
  CHECK(least_positive_residue_of_neg(2, 3) == 1);
  CHECK(least_positive_residue_of_neg(1, 5) == 4);
  CHECK(least_positive_residue_of_neg(3, 7) == 4);
  CHECK(least_positive_residue_of_neg(7, 7) == 7);
  CHECK(coeffs(proof_intermediate(t3, 2)) == Coeffs{0, 2, 1});
  CHECK(proof_intermediate(t3, 2) == touchard_weighted_sum(t3, 2));

  for (std::uint32_t p : to::primes_trial(2, 31)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= 2 * p; ++m) {
      if (m % p == 0) continue;
      const auto rs = verify_proof_intermediate(t, m);
      REQUIRE(rs.size() == 2);
      CHECK(all_pass(rs));
    }
  }
}

TEST_CASE("verify_factorial_lemma") {
  const auto r52 = verify_factorial_lemma(PrimeTables(5), 2);
  REQUIRE(r52.size() == 2);
  CHECK(r52[1].param("r") == 3);
  CHECK(scalar(r52[1].lhs) == 1);
  CHECK(scalar(r52[1].rhs) == 1);
  CHECK(all_pass(r52));

  const auto r37 = verify_factorial_lemma(PrimeTables(3), 7);
  CHECK(r37[0].param("r") == 2);
  CHECK(scalar(r37[0].lhs) == 0);
  CHECK(scalar(r37[0].rhs) == 0);
  CHECK(all_pass(r37));

  const auto r51 = verify_factorial_lemma(PrimeTables(5), 1);
  REQUIRE(r51.size() == 1);
  CHECK(scalar(r51[0].rhs) == 1);
  CHECK(r51[0].pass);
}

TEST_CASE("geometric_sum_lemma_check") {
  auto values = [](const std::vector<VerificationReport>& rs) {
    Coeffs v;
    for (const auto& r : rs) v.push_back(scalar(r.lhs));
    return v;
  };
  const auto r52 = geometric_sum_lemma_check(PrimeTables(5), 2);
  CHECK(values(r52) == Coeffs{0, 0, 4, 0});
  CHECK(all_pass(r52));
  CHECK(values(geometric_sum_lemma_check(PrimeTables(3), 1)) == Coeffs{0, 2});
  const auto r76 = geometric_sum_lemma_check(PrimeTables(7), 6);
  CHECK(values(r76) == Coeffs{6, 0, 0, 0, 0, 0});

  for (std::uint32_t p : to::primes_trial(2, 31)) {
    const PrimeTables t(p);
    for (std::uint64_t m = 1; m <= 2 * p; ++m) {
      if (m % p == 0) continue;
      const auto rs = geometric_sum_lemma_check(t, m);
      CHECK(all_pass(rs));
      CHECK(std::ranges::count_if(rs, [&](const auto& r) { return scalar(r.lhs) == p - 1; }) == 1);
    }
  }
}

TEST_CASE("report_less orders by identity, p, m, n, x") {
  auto mk = [](Identity id, std::int64_t p, std::int64_t m) {
    return make_report(id, {{"p", p}, {"m", m}}, std::uint32_t{0}, std::uint32_t{0});
  };
  CHECK(report_less(mk(Identity::TouchardEq1, 7, 1), mk(Identity::Theorem1, 3, 1)));
  CHECK(report_less(mk(Identity::Theorem1, 3, 9), mk(Identity::Theorem1, 5, 1)));
  CHECK(report_less(mk(Identity::Theorem1, 5, 2), mk(Identity::Theorem1, 5, 10)));
  CHECK_FALSE(report_less(mk(Identity::Theorem1, 5, 2), mk(Identity::Theorem1, 5, 2)));
}
