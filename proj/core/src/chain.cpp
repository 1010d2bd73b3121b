#include "detchain/chain.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

std::optional<int> safe_height(IdealHandle& ideal, const GroebnerConfig& cfg) {
  try {
    return height(ideal, cfg);
  } catch (const BudgetError&) {
    return std::nullopt;
  }
}

HeightReport make_report(std::string desc, std::string statement,
                         std::optional<int> computed, int predicted,
                         std::optional<std::uint64_t> seed) {
  HeightReport r;
  r.ideal_desc = std::move(desc);
  r.statement = std::move(statement);
  r.predicted_height = predicted;
  r.seed = seed;
  if (!computed) {
    r.verdict = Verdict::BudgetExceeded;
  } else {
    r.computed_height = *computed;
    r.verdict = *computed == predicted ? Verdict::Match : Verdict::Mismatch;
  }
  return r;
}

std::pair<PolyMatrix, RowOpRecord> ops_on_stored_rows(const PolyMatrix& m,
                                                      std::uint64_t seed) {
  return m.transposed() ? generalized_col_ops(m, seed)
                        : generalized_row_ops(m, seed);
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

}  // namespace

std::vector<RatioResidue> ratio_relation_check(const PolyMatrix& m, int t,
                                               const IdealHandle& y, int cap,
                                               std::uint64_t seed,
                                               const GroebnerConfig& cfg) {
  if (!y.has_basis()) {
    throw InputError("ratio relation check needs a cached basis for Y");
  }
  if (cap < 1) throw InputError("ratio pair cap must be positive");
  int mm = m.rows(), nn = m.cols();
  if (t < 2 || t > mm) throw InputError("ratio relation check needs 2 <= t <= m");

  // Index tuples of size t-1 avoiding the corner row/column.
  std::vector<std::vector<int>> row_tuples = subsets_of(mm - 1, t - 1);
  std::vector<std::vector<int>> col_tuples = subsets_of(nn - 1, t - 1);
  std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> tuples;
  for (const auto& r : row_tuples) {
    for (const auto& c : col_tuples) tuples.emplace_back(&r, &c);
  }
  long long total = static_cast<long long>(tuples.size()) *
                    static_cast<long long>(tuples.size());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (total <= cap) {
    for (std::size_t a = 0; a < tuples.size(); ++a) {
      for (std::size_t b = 0; b < tuples.size(); ++b) pairs.emplace_back(a, b);
    }
  } else {
    SplitMix64 rng(derive_seed(seed, 4));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (pairs.size() < static_cast<std::size_t>(cap)) {
      std::size_t a = rng.below(tuples.size());
      std::size_t b = rng.below(tuples.size());
      if (seen.emplace(a, b).second) pairs.emplace_back(a, b);
    }
  }

  MinorCache cache(m);
  auto with_corner = [&](const std::vector<int>& rows,
                         const std::vector<int>& cols)
      -> std::pair<std::vector<int>, std::vector<int>> {
    std::vector<int> r = rows, c = cols;
    r.push_back(mm - 1);
    c.push_back(nn - 1);
    return {std::move(r), std::move(c)};
  };

  std::vector<RatioResidue> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const auto& [r1, c1] = tuples[a];
    const auto& [r2, c2] = tuples[b];
    auto [r1x, c1x] = with_corner(*r1, *c1);
    auto [r2x, c2x] = with_corner(*r2, *c2);
    Polynomial lhs = cache.minor(r1x, c1x) * cache.minor(*r2, *c2) -
                     cache.minor(r2x, c2x) * cache.minor(*r1, *c1);
    RatioResidue res;
    res.i_rows = one_based(*r1);
    res.i_cols = one_based(*c1);
    res.k_rows = one_based(*r2);
    res.k_cols = one_based(*c2);
    res.zero = normal_form(lhs, y, cfg).is_zero();
    out.push_back(std::move(res));
  }
  return out;
}

BiliaisonStep biliaison_step(const PolyMatrix& m, int t, std::uint64_t seed,
                             const ChainConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  if (t < 2) throw InputError("a biliaison step needs t >= 2");
  if (t > mm) throw InputError("t exceeds the matrix size");
  if (t == mm && mm == nn) {
    throw InputError(
        "hypersurface case t = m = n has no biliaison step; the scheme is "
        "already a complete intersection");
  }
  const CheckConfig& chk = cfg.check;
  int c = expected_codim(mm, nn, t);

  HeightReport x_report = is_determinantal(m, t, chk);

  struct AttemptState {
    PolyMatrix opped;
    RowOpRecord rec;
    IdealHandle y;
    PolyMatrix succ;
    HeightReport y_report;
    HeightReport xprime_report;
    bool heights_ok = false;
    bool budget = false;
    std::uint64_t seed_used = 0;
  };
  std::optional<AttemptState> best;
  std::vector<Attempt> y_trail;
  std::string resample_notes;

  for (int k = 0; k <= chk.max_reseeds; ++k) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    auto [opped, rec] = ops_on_stored_rows(m, s);
    if (opped.entry(mm - 1, nn - 1).is_zero()) {
      resample_notes += "seed " + std::to_string(s) +
                        " left a zero corner entry, resampled; ";
      continue;
    }
    IdealHandle y =
        ladder_minors_ideal(opped, corner_ladder_mask(opped), t, chk.order);
    std::optional<int> hy = safe_height(y, chk.groebner);
    HeightReport y_report = make_report("I_" + std::to_string(t) + "(L)",
                                        "chain", hy, c - 1, s);
    y_trail.push_back(Attempt{s, hy.value_or(-1)});

    PolyMatrix succ = corner_submatrix(opped);
    IdealHandle xprime = minors_ideal(succ, t - 1, chk.order);
    std::optional<int> hx = safe_height(xprime, chk.groebner);
    HeightReport xprime_report =
        make_report("I_" + std::to_string(t - 1) + "(N)", "chain", hx, c, s);

    AttemptState st{std::move(opped), std::move(rec),  std::move(y),
                    std::move(succ),  std::move(y_report),
                    std::move(xprime_report)};
    st.seed_used = s;
    st.heights_ok = st.y_report.verdict == Verdict::Match &&
                    st.xprime_report.verdict == Verdict::Match;
    st.budget = st.y_report.verdict == Verdict::BudgetExceeded ||
                st.xprime_report.verdict == Verdict::BudgetExceeded;
    bool done = st.heights_ok || st.budget;
    best.emplace(std::move(st));
    if (done) break;
  }

  if (!best) {
    throw SamplingError(
        "row operations kept producing a zero corner entry; the matrix looks "
        "degenerate");
  }

  AttemptState st = std::move(*best);
  st.y_report.attempts = y_trail;

  BiliaisonStep step(t, std::move(st.opped), std::move(st.rec),
                     std::move(st.y), std::move(st.succ));
  step.shift_a =
      step.matrix_before().entry(mm - 1, nn - 1).degree().value_or(0);
  step.height_checks = {x_report, st.y_report, st.xprime_report};
  step.budget_exhausted =
      st.budget || x_report.verdict == Verdict::BudgetExceeded;

  bool heights_ok =
      x_report.verdict == Verdict::Match && st.heights_ok;
  if (heights_ok) {
    step.ratio_residues =
        ratio_relation_check(step.matrix_before(), t, step.y_ideal(),
                             cfg.ratio_cap, st.seed_used, chk.groebner);
    long long side =
        static_cast<long long>(subsets_of(mm - 1, t - 1).size()) *
        static_cast<long long>(subsets_of(nn - 1, t - 1).size());
    step.ratio_pairs_total = side * side;
    step.ratio_all_zero =
        std::all_of(step.ratio_residues.begin(), step.ratio_residues.end(),
                    [](const RatioResidue& r) { return r.zero; });
    if (!step.ratio_all_zero) {
      step.note = "a ratio residue failed to reduce to zero modulo Y";
    }
  } else if (step.budget_exhausted) {
    step.note = "step budget exhausted before the heights were certified";
  } else {
    step.note = "height certification failed after reseeds";
  }
  step.note = resample_notes + step.note;
  step.certified = heights_ok && step.ratio_all_zero;
  return step;
}

ChainCertificate full_chain(const PolyMatrix& m, int t,
                            std::uint64_t master_seed, const ChainConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  if (t < 1 || t > mm) throw InputError("chain needs 1 <= t <= min(m, n)");

  ChainCertificate cert;
  cert.m = mm;
  cert.n = nn;
  cert.t = t;
  cert.field = m.field();
  cert.order_name = cfg.check.order.name();
  cert.master_seed = master_seed;
  cert.note =
      "steps count the t-1 ascending G-biliaisons; conventions that also "
      "count the terminal complete-intersection step arrive at t";

  PolyMatrix cur = m;
  int level = t;

  auto fail = [&](int at_level, const std::string& why, bool budget) {
    cert.status = ChainStatus::Failed;
    cert.failed_level = at_level;
    cert.failure_reason = why;
    cert.budget_exhausted = budget;
  };

  if (t == 1 || (t == mm && mm == nn)) {
    HeightReport initial = is_determinantal(cur, t, cfg.check);
    if (initial.verdict != Verdict::Match) {
      fail(t, "input matrix is not determinantal (ht = " +
                  std::to_string(initial.computed_height) + ", expected " +
                  std::to_string(initial.predicted_height) + ")",
           initial.verdict == Verdict::BudgetExceeded);
      return cert;
    }
  } else {
    while (level >= 2 && !(level == cur.rows() && cur.rows() == cur.cols())) {
      BiliaisonStep step =
          biliaison_step(cur, level, derive_seed(master_seed, level), cfg);
      bool ok = step.certified;
      bool budget = step.budget_exhausted;
      std::string why = step.note;
      PolyMatrix next = step.successor();
      cert.steps.push_back(std::move(step));
      if (!ok) {
        fail(level, why.empty() ? "step not certified" : why, budget);
        return cert;
      }
      cur = std::move(next);
      --level;
    }
  }

  // Terminal complete intersection: the entries at t = 1, the determinant in
  // the square maximal case.
  try {
    TerminalReport term;
    IdealHandle terminal_ideal =
        level == 1 ? minors_ideal(cur, 1, cfg.check.order)
                   : IdealHandle(cur.field(), cur.num_vars(),
                                 {determinant(cur)}, cfg.check.order);
    term.generators = minimal_generator_set(terminal_ideal, cfg.check.groebner);
    term.height = height(terminal_ideal, cfg.check.groebner);
    term.is_ci =
        term.height == static_cast<int>(term.generators.size());
    for (const Polynomial& g : term.generators) {
      term.degree_sequence.push_back(g.degree().value_or(0));
    }
    std::sort(term.degree_sequence.rbegin(), term.degree_sequence.rend());
    term.note = level == 1
                    ? "entry ideal of the final matrix"
                    : "principal ideal of the determinant (hypersurface case)";
    term.note +=
        "; descending CI-biliaisons to a linear variety follow the degree "
        "sequence";
    bool ci = term.is_ci;
    cert.terminal = std::move(term);
    if (!ci) {
      fail(level, "terminal ideal is not a complete intersection", false);
      return cert;
    }
  } catch (const BudgetError&) {
    fail(level, "step budget exhausted during the terminal check", true);
    return cert;
  }

  cert.status = ChainStatus::Certified;
  return cert;
}

std::string licci_str(LicciVerdict v) {
  return v == LicciVerdict::NotLicci ? "NotLicci" : "Inconclusive";
}

LicciVerdict huneke_ulrich_licci(const BettiShifts& b) {
  if (b.codim < 1) throw InputError("codimension must be positive");
  if (b.first_shifts.empty() || b.last_shifts.empty()) {
    throw InputError("shift lists must be nonempty");
  }
  for (int s : b.first_shifts) {
    if (s <= 0) throw InputError("shifts must be positive");
  }
  for (int s : b.last_shifts) {
    if (s <= 0) throw InputError("shifts must be positive");
  }
  int max_last = *std::max_element(b.last_shifts.begin(), b.last_shifts.end());
  int min_first =
      *std::min_element(b.first_shifts.begin(), b.first_shifts.end());
  if (max_last <= (b.codim - 1) * min_first) return LicciVerdict::NotLicci;
  return LicciVerdict::Inconclusive;
}

}  // namespace detchain
