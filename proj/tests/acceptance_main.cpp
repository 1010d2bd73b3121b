// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Everything runs the public library API end to end at desk scale.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "detchain/chain.hpp"
#include "detchain/checks.hpp"
#include "detchain/errors.hpp"
#include "detchain/serialize.hpp"

using namespace detchain;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name;
  if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<std::pair<int, int>> desk_shapes(int max_cells) {
  std::vector<std::pair<int, int>> shapes;
  for (int m = 1; m <= max_cells; ++m) {
    for (int n = m; m * n <= max_cells; ++n) shapes.emplace_back(m, n);
  }
  return shapes;
}

CheckConfig cfg_with_seed(std::uint64_t seed) {
  CheckConfig cfg;
  cfg.seed = seed;
  return cfg;
}

// 1. generic determinantal heights over the whole mn <= 12 desk sweep
bool criterion_generic_heights(std::string& detail) {
  Field fp = Field::prime(32003);
  CheckConfig cfg = cfg_with_seed(1);
  for (auto [m, n] : desk_shapes(12)) {
    for (int t = 1; t <= m; ++t) {
      HeightReport r = is_determinantal(generic_matrix(fp, m, n), t, cfg);
      if (r.verdict != Verdict::Match) {
        detail = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                 std::to_string(t) + ") gave ht " +
                 std::to_string(r.computed_height) + ", expected " +
                 std::to_string(r.predicted_height);
        return false;
      }
    }
  }
  // the landmark values, pinned explicitly
  auto pin = [&](int m, int n, int t, int want) {
    return is_determinantal(generic_matrix(fp, m, n), t, cfg)
               .computed_height == want;
  };
  if (!pin(2, 3, 2, 2) || !pin(3, 3, 2, 4) || !pin(2, 4, 2, 3) ||
      !pin(3, 4, 2, 6)) {
    detail = "landmark heights moved";
    return false;
  }
  return true;
}

// 2. ladder heights, same sweep, t >= 2
bool criterion_ladder_heights(std::string& detail) {
  CheckConfig cfg = cfg_with_seed(1);
  for (auto [m, n] : desk_shapes(12)) {
    for (int t = 2; t <= m; ++t) {
      HeightReport r = herzog_trung_check(m, n, t, cfg);
      if (r.verdict != Verdict::Match) {
        detail = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                 std::to_string(t) + ") gave ht " +
                 std::to_string(r.computed_height) + ", expected " +
                 std::to_string(r.predicted_height);
        return false;
      }
    }
  }
  return true;
}

// 3. column deletion exact + row deletion exact on three separate seeds
bool criterion_deletion(std::string& detail) {
  Field fp = Field::prime(32003);
  for (auto [m, n] : {std::pair{3, 3}, std::pair{2, 3}}) {
    CheckConfig cfg = cfg_with_seed(1);
    ColumnDeletionReport col =
        verify_column_deletion(generic_matrix(fp, m, n), 2, n, cfg);
    if (col.t_height.verdict != Verdict::Match || !col.lower_bound.holds) {
      detail = "column deletion failed on " + std::to_string(m) + "x" +
               std::to_string(n);
      return false;
    }
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      CheckConfig one = cfg_with_seed(seed);
      one.max_reseeds = 0;  // three honest single-shot seeds
      HeightReport row = verify_row_deletion(col.deleted, 2, one);
      if (row.verdict != Verdict::Match) {
        detail = "row deletion seed " + std::to_string(seed) + " on " +
                 std::to_string(m) + "x" + std::to_string(n) + " gave " +
                 std::to_string(row.computed_height);
        return false;
      }
    }
  }
  return true;
}

// 4. every 2x2 block position yields a regular sequence on (3,3,2)
bool criterion_regular_sequence(std::string& detail) {
  Field fp = Field::prime(32003);
  std::vector<HeightReport> sweep = verify_regular_sequence_sweep(
      generic_matrix(fp, 3, 3), 2, cfg_with_seed(1));
  if (sweep.size() != 9) {
    detail = "expected 9 block positions, saw " +
             std::to_string(sweep.size());
    return false;
  }
  for (const HeightReport& r : sweep) {
    if (r.verdict != Verdict::Match || r.computed_height != 4) {
      detail = r.ideal_desc + " gave " + std::to_string(r.computed_height);
      return false;
    }
  }
  return true;
}

// 5. laddcanc inequality with exact values on (3,3,2) and (3,4,2)
bool criterion_laddcanc(std::string& detail) {
  Field fp = Field::prime(32003);
  struct Want {
    int m, n, lhs, rhs;
  };
  for (Want w : {Want{3, 3, 3, 3}, Want{3, 4, 5, 5}}) {
    LadderHeightReport rep = verify_ladder_height(
        generic_matrix(fp, w.m, w.n), 2, cfg_with_seed(1));
    if (!rep.laddcanc || !rep.laddcanc->holds ||
        rep.laddcanc->lhs != w.lhs || rep.laddcanc->rhs != w.rhs) {
      detail = std::to_string(w.m) + "x" + std::to_string(w.n) + " gave " +
               (rep.laddcanc ? std::to_string(rep.laddcanc->lhs) + " vs " +
                                   std::to_string(rep.laddcanc->rhs)
                             : std::string("no inequality"));
      return false;
    }
  }
  return true;
}

// 6. chain certification on (2,3,2) and (3,3,2), plus the symbolic identity
bool criterion_chain(std::string& detail) {
  Field fp = Field::prime(32003);
  ChainConfig cfg;
  cfg.check.seed = 1;
  struct Want {
    int m, n, ratio_pairs, terminal_height;
  };
  for (Want w : {Want{2, 3, 4, 2}, Want{3, 3, 16, 4}}) {
    ChainCertificate cert =
        full_chain(generic_matrix(fp, w.m, w.n), 2, 1, cfg);
    bool ok = cert.status == ChainStatus::Certified &&
              cert.steps.size() == 1 && cert.steps[0].shift_a == 1 &&
              cert.steps[0].ratio_all_zero &&
              static_cast<int>(cert.steps[0].ratio_residues.size()) ==
                  w.ratio_pairs &&
              cert.terminal && cert.terminal->is_ci &&
              cert.terminal->height == w.terminal_height &&
              cert.terminal->height == expected_codim(w.m, w.n, 2);
    if (!ok) {
      detail = std::to_string(w.m) + "x" + std::to_string(w.n) +
               " chain not certified as expected";
      return false;
    }
  }
  // x12 * M_{12;13} - x11 * M_{12;23} = x13 * M_{12;12}, by expansion alone
  Field q = Field::rationals();
  PolyMatrix m = generic_matrix(q, 2, 3);
  MinorCache cache(m);
  Polynomial residue = m.entry(0, 1) * cache.minor({0, 1}, {0, 2}) -
                       m.entry(0, 0) * cache.minor({0, 1}, {1, 2}) -
                       m.entry(0, 2) * cache.minor({0, 1}, {0, 1});
  if (!residue.is_zero()) {
    detail = "symbolic 2x3 ratio identity failed";
    return false;
  }
  return true;
}

// 7. closed formulas: sweep 1 <= t <= m <= n <= 8 in under a second
bool criterion_formulas(std::string& detail) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      for (int t = 1; t <= m; ++t) {
        if (2 <= t && t <= m - 1) {
          if (!gaeta_inequality(m, n, t).holds) {
            detail = "Gaeta failed at (" + std::to_string(m) + "," +
                     std::to_string(n) + "," + std::to_string(t) + ")";
            return false;
          }
        }
        // CI classification against the count oracle: mu equals the number
        // of admitted minors, the height is the closed form.
        bool full_ci = minor_count(m, n, t) == expected_codim(m, n, t);
        if ((ci_classification(m, n, t, MinorsVariant::FullMinors) ==
             CiClass::CompleteIntersection) != full_ci) {
          detail = "full-minors CI class disagrees at (" + std::to_string(m) +
                   "," + std::to_string(n) + "," + std::to_string(t) + ")";
          return false;
        }
        long long ladder_ht = static_cast<long long>(expected_codim(m, n, t)) - 1;
        bool ladder_ci = ladder_minor_count(m, n, t) == ladder_ht;
        if ((ci_classification(m, n, t, MinorsVariant::Ladder) ==
             CiClass::CompleteIntersection) != ladder_ci) {
          detail = "ladder CI class disagrees at (" + std::to_string(m) + "," +
                   std::to_string(n) + "," + std::to_string(t) + ")";
          return false;
        }
        CmType c = cm_type(m, n, t);
        if (t >= 2 && c.defined && (c.value == 1) != (m == n)) {
          detail = "CM type 1 off the square locus at (" + std::to_string(m) +
                   "," + std::to_string(n) + "," + std::to_string(t) + ")";
          return false;
        }
        if (t == 1 && (!c.defined || c.value != 1)) {
          detail = "CM type at t = 1 must be 1";
          return false;
        }
      }
    }
  }
  if (cm_type(2, 3, 2).value != 2) {
    detail = "cm_type(2,3,2) != 2";
    return false;
  }
  return true;
}

// 8. universal bounds on 200 seeded random matrices with mn <= 9
bool criterion_universal_bounds(std::string& detail) {
  Field fp = Field::prime(32003);
  const std::pair<int, int> shapes[] = {{1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}};
  for (int i = 0; i < 200; ++i) {
    auto [m, n] = shapes[i % 5];
    SplitMix64 rng(derive_seed(static_cast<std::uint64_t>(i), 8));
    int nv = 2 + static_cast<int>(rng.below(3));
    std::vector<int> row_degs(static_cast<std::size_t>(m));
    std::vector<int> col_degs(static_cast<std::size_t>(n));
    for (auto& d : row_degs) d = 1 + static_cast<int>(rng.below(2));
    for (auto& d : col_degs) d = static_cast<int>(rng.below(2));
    int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    PolyMatrix mat =
        random_forms_matrix(fp, nv, row_degs, col_degs, rng.next(), 2);
    int bound = expected_codim(m, n, t);
    IdealHandle full = minors_ideal(mat, t, MonomialOrder::grevlex());
    IdealHandle ladder = ladder_minors_ideal(mat, corner_ladder_mask(mat), t,
                                             MonomialOrder::grevlex());
    if (height(full) > bound || height(ladder) > bound - 1) {
      detail = "bound violated at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 9. Huneke-Ulrich verdicts on the committed resolution-shift fixtures
bool criterion_licci_fixtures(std::string& detail) {
  std::ifstream in(std::string(DETCHAIN_FIXTURE_DIR) + "/betti_shifts.json");
  if (!in) {
    detail = "fixture file missing";
    return false;
  }
  nlohmann::json doc = nlohmann::json::parse(in);
  int seen = 0;
  for (const auto& c : doc.at("cases")) {
    BettiShifts b;
    b.codim = c.at("codim").get<int>();
    b.first_shifts = c.at("first_shifts").get<std::vector<int>>();
    b.last_shifts = c.at("last_shifts").get<std::vector<int>>();
    std::string got = licci_str(huneke_ulrich_licci(b));
    if (got != c.at("expected").get<std::string>()) {
      detail = c.at("name").get<std::string>() + " gave " + got;
      return false;
    }
    ++seen;
  }
  if (seen != 2) {
    detail = "expected 2 fixtures, saw " + std::to_string(seen);
    return false;
  }
  return true;
}

// 10. reruns of items 3 and 6 with the same seeds are byte-identical JSON
bool criterion_determinism(std::string& detail) {
  Field fp = Field::prime(32003);
  auto del_doc = [&]() {
    CheckConfig cfg = cfg_with_seed(5);
    ColumnDeletionReport col =
        verify_column_deletion(generic_matrix(fp, 3, 3), 2, 3, cfg);
    VerifyBundle b;
    b.heights.push_back(col.t_height);
    b.inequalities.push_back(col.lower_bound);
    b.heights.push_back(verify_row_deletion(col.deleted, 2, cfg));
    RunParams p;
    p.command = "verify";
    p.statement = "del";
    p.m = 3;
    p.n = 3;
    p.t = 2;
    p.field_name = fp.name();
    p.order_name = "grevlex";
    p.seed = 5;
    p.budget = kDefaultStepBudget;
    p.matrix_source = "generic";
    return verify_json(p, b);
  };
  auto chain_doc = [&]() {
    ChainConfig cfg;
    cfg.check.seed = 5;
    return chain_json(full_chain(generic_matrix(fp, 3, 3), 2, 5, cfg));
  };
  if (del_doc() != del_doc()) {
    detail = "verify del JSON differs between reruns";
    return false;
  }
  std::string first = chain_doc();
  if (first != chain_doc()) {
    detail = "chain JSON differs between reruns";
    return false;
  }
  if (first.find("\"status\": \"Certified\"") == std::string::npos) {
    detail = "rerun chain is not certified";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Item {
    int index;
    const char* name;
    bool (*fn)(std::string&);
  };
  const Item items[] = {
      {1, "generic determinantal heights, full mn <= 12 sweep",
       criterion_generic_heights},
      {2, "ladder heights, same sweep with t >= 2", criterion_ladder_heights},
      {3, "column and generalized-row deletion, 3 seeds each",
       criterion_deletion},
      {4, "regular sequences at all nine block positions of (3,3,2)",
       criterion_regular_sequence},
      {5, "ladder cancellation inequality on (3,3,2) and (3,4,2)",
       criterion_laddcanc},
      {6, "chain certification on (2,3,2) and (3,3,2) plus the symbolic "
          "2x3 identity",
       criterion_chain},
      {7, "closed-formula suite, 1 <= t <= m <= n <= 8", criterion_formulas},
      {8, "universal height bounds on 200 random matrices",
       criterion_universal_bounds},
      {9, "Huneke-Ulrich licci verdicts on the fixture shifts",
       criterion_licci_fixtures},
      {10, "byte-identical JSON on reruns of items 3 and 6",
       criterion_determinism},
  };
  for (const Item& item : items) {
    std::string detail;
    bool ok = false;
    try {
      ok = item.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report(item.index, item.name, ok, detail);
  }
  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
