#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "detchain/chain.hpp"
#include "detchain/errors.hpp"
#include "detchain/serialize.hpp"
#include "test_util.hpp"

using namespace detchain;
using testutil::matrix_of;

namespace {

ChainConfig fast_chain_cfg(std::uint64_t seed = 1) {
  ChainConfig cfg;
  cfg.check.seed = seed;
  return cfg;
}

}  // namespace

TEST_SUITE("chain") {

TEST_CASE("one biliaison step on the generic 3x3 at t = 2") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 3, 3);
  BiliaisonStep step = biliaison_step(m, 2, 1, fast_chain_cfg());
  CHECK(step.certified);
  CHECK(step.level() == 2);
  CHECK(step.shift_a == 1);
  REQUIRE(step.height_checks.size() == 3);
  for (const HeightReport& r : step.height_checks) {
    CHECK(r.verdict == Verdict::Match);
  }
  CHECK(step.height_checks[0].computed_height == 4);  // X
  CHECK(step.height_checks[1].computed_height == 3);  // Y
  CHECK(step.height_checks[2].computed_height == 4);  // X'
  CHECK(step.ratio_pairs_total == 16);
  CHECK(step.ratio_residues.size() == 16);
  CHECK(step.ratio_all_zero);
  CHECK(step.successor().logical_rows() == 2);
  CHECK(step.successor().logical_cols() == 2);
  CHECK(step.y_ideal().generators().size() == 5);
  CHECK(step.y_ideal().has_basis());
  CHECK_FALSE(step.budget_exhausted);
}

TEST_CASE("step guards") {
  Field fp = Field::prime(32003);
  ChainConfig cfg = fast_chain_cfg();
  CHECK_THROWS_AS((void)biliaison_step(generic_matrix(fp, 2, 3), 1, 1, cfg),
                  InputError);
  CHECK_THROWS_AS((void)biliaison_step(generic_matrix(fp, 2, 2), 2, 1, cfg),
                  InputError);
  CHECK_THROWS_AS((void)biliaison_step(generic_matrix(fp, 3, 3), 4, 1, cfg),
                  InputError);
}

TEST_CASE("ratio relation check enumerates ordered pairs and caps fairly") {
  Field fp = Field::prime(32003);
  PolyMatrix m = generic_matrix(fp, 3, 3);
  IdealHandle y =
      ladder_minors_ideal(m, corner_ladder_mask(m), 2, MonomialOrder::grevlex());
  CHECK_THROWS_AS((void)ratio_relation_check(m, 2, y, 100, 1), InputError);
  compute_groebner_basis(y);

  std::vector<RatioResidue> full = ratio_relation_check(m, 2, y, 100, 1);
  CHECK(full.size() == 16);
  std::set<std::pair<std::vector<int>, std::vector<int>>> firsts;
  for (const RatioResidue& r : full) {
    CHECK(r.zero);
    firsts.emplace(r.i_rows, r.i_cols);
    CHECK(r.i_rows.size() == 1);
    CHECK(r.i_rows.front() >= 1);
    CHECK(r.i_rows.front() <= 2);  // the corner row never appears
  }
  CHECK(firsts.size() == 4);

  std::vector<RatioResidue> capped = ratio_relation_check(m, 2, y, 5, 9);
  CHECK(capped.size() == 5);
  std::vector<RatioResidue> again = ratio_relation_check(m, 2, y, 5, 9);
  REQUIRE(again.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {  // seeded sampling replays
    CHECK(capped[i].i_rows == again[i].i_rows);
    CHECK(capped[i].k_cols == again[i].k_cols);
    CHECK(capped[i].zero);
  }
}

TEST_CASE("the 2x3 ratio identity holds by direct expansion, no bases") {
  Field q = Field::rationals();
  PolyMatrix m = generic_matrix(q, 2, 3);
  MinorCache cache(m);
  Polynomial lhs = m.entry(0, 1) * cache.minor({0, 1}, {0, 2}) -
                   m.entry(0, 0) * cache.minor({0, 1}, {1, 2});
  Polynomial rhs = m.entry(0, 2) * cache.minor({0, 1}, {0, 1});
  CHECK(lhs == rhs);
}

TEST_CASE("full chain on the generic 2x3 certifies with one step") {
  Field q = Field::rationals();
  PolyMatrix m = generic_matrix(q, 2, 3);
  ChainConfig cfg = fast_chain_cfg();
  cfg.check.field = q;
  ChainCertificate cert = full_chain(m, 2, 1, cfg);
  CHECK(cert.status == ChainStatus::Certified);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].shift_a == 1);
  CHECK(cert.steps[0].ratio_residues.size() == 4);
  CHECK(cert.steps[0].y_ideal().generators().size() == 1);
  REQUIRE(cert.terminal.has_value());
  CHECK(cert.terminal->height == 2);
  CHECK(cert.terminal->is_ci);
  CHECK(cert.terminal->generators.size() == 2);
  CHECK(cert.terminal->degree_sequence == std::vector<int>{1, 1});
  CHECK(cert.m == 2);
  CHECK(cert.n == 3);
  CHECK(cert.master_seed == 1);
}

TEST_CASE("full chain on the generic 3x3 at t = 2") {
  Field fp = Field::prime(32003);
  ChainCertificate cert =
      full_chain(generic_matrix(fp, 3, 3), 2, 1, fast_chain_cfg());
  CHECK(cert.status == ChainStatus::Certified);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].ratio_residues.size() == 16);
  CHECK(cert.terminal->height == 4);
  CHECK(cert.terminal->is_ci);
}

TEST_CASE("terminal-only chains") {
  Field fp = Field::prime(32003);
  ChainCertificate entries =
      full_chain(generic_matrix(fp, 2, 3), 1, 1, fast_chain_cfg());
  CHECK(entries.status == ChainStatus::Certified);
  CHECK(entries.steps.empty());
  CHECK(entries.terminal->generators.size() == 6);
  CHECK(entries.terminal->height == 6);

  ChainCertificate hyper =
      full_chain(generic_matrix(fp, 3, 3), 3, 1, fast_chain_cfg());
  CHECK(hyper.status == ChainStatus::Certified);
  CHECK(hyper.steps.empty());
  CHECK(hyper.terminal->degree_sequence == std::vector<int>{3});
}

TEST_CASE("chains fail loudly on non-determinantal input") {
  Field fp = Field::prime(32003);
  PolyMatrix flat = matrix_of(fp, 3, {{"x0", "x1", "x2"}, {"x0", "x1", "x2"}});
  ChainCertificate cert = full_chain(flat, 2, 1, fast_chain_cfg());
  CHECK(cert.status == ChainStatus::Failed);
  CHECK(cert.failed_level == 2);
  CHECK_FALSE(cert.failure_reason.empty());
  REQUIRE(cert.steps.size() == 1);
  CHECK_FALSE(cert.steps[0].certified);
  CHECK_FALSE(cert.terminal.has_value());

  PolyMatrix sq = matrix_of(fp, 2, {{"x0", "x1"}, {"x0", "x1"}});
  ChainCertificate hyper = full_chain(sq, 2, 1, fast_chain_cfg());
  CHECK(hyper.status == ChainStatus::Failed);  // det = 0, not a hypersurface
}

TEST_CASE("chain JSON replays byte for byte") {
  Field fp = Field::prime(32003);
  ChainCertificate a =
      full_chain(generic_matrix(fp, 3, 3), 2, 7, fast_chain_cfg());
  ChainCertificate b =
      full_chain(generic_matrix(fp, 3, 3), 2, 7, fast_chain_cfg());
  CHECK(chain_json(a) == chain_json(b));
  ChainCertificate c =
      full_chain(generic_matrix(fp, 3, 3), 2, 8, fast_chain_cfg());
  CHECK(chain_json(a) != chain_json(c));  // the seed is live, not decorative
}

TEST_CASE("Huneke-Ulrich licci criterion") {
  BettiShifts two_by_four{3, {2, 2, 2, 2, 2, 2}, {4, 4, 4}};
  CHECK(huneke_ulrich_licci(two_by_four) == LicciVerdict::NotLicci);
  BettiShifts hilbert_burch{2, {2, 2, 2}, {3, 3}};
  CHECK(huneke_ulrich_licci(hilbert_burch) == LicciVerdict::Inconclusive);
  CHECK(licci_str(LicciVerdict::NotLicci) == "NotLicci");
  CHECK(licci_str(LicciVerdict::Inconclusive) == "Inconclusive");

  CHECK_THROWS_AS((void)huneke_ulrich_licci(BettiShifts{0, {2}, {4}}),
                  InputError);
  CHECK_THROWS_AS((void)huneke_ulrich_licci(BettiShifts{3, {}, {4}}),
                  InputError);
  CHECK_THROWS_AS((void)huneke_ulrich_licci(BettiShifts{3, {2}, {0}}),
                  InputError);
}

TEST_CASE("certificates record failure when the budget dies") {
  Field fp = Field::prime(32003);
  ChainConfig cfg = fast_chain_cfg();
  cfg.check.groebner.step_budget = 2;
  ChainCertificate cert =
      full_chain(generic_matrix(fp, 3, 3), 2, 1, cfg);
  CHECK(cert.status == ChainStatus::Failed);
  CHECK(cert.budget_exhausted);
}

}  // TEST_SUITE
