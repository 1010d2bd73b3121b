#include "detchain/checks.hpp"

#include <algorithm>
#include <utility>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

void require_range(int m, int n, int t) {
  if (!(1 <= t && t <= m && m <= n)) {
    throw InputError("parameters must satisfy 1 <= t <= m <= n, got (m,n,t) = (" +
                     std::to_string(m) + "," + std::to_string(n) + "," +
                     std::to_string(t) + ")");
  }
}

std::string sub(const std::string& base, int t) {
  return "I_" + std::to_string(t) + "(" + base + ")";
}

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

// Row operations on the normalized (rows <= cols) view's rows: when storage
// holds the transpose, those are the logical columns.
std::pair<PolyMatrix, RowOpRecord> ops_on_stored_rows(const PolyMatrix& m,
                                                      std::uint64_t seed) {
  return m.transposed() ? generalized_col_ops(m, seed)
                        : generalized_row_ops(m, seed);
}

std::pair<PolyMatrix, RowOpRecord> ops_on_stored_cols(const PolyMatrix& m,
                                                      std::uint64_t seed) {
  return m.transposed() ? generalized_row_ops(m, seed)
                        : generalized_col_ops(m, seed);
}

// Submatrix by stored index sets, reoriented so logical rows follow the
// stored row side.
PolyMatrix stored_submatrix(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  std::vector<std::vector<Polynomial>> grid;
  for (int i : rows) {
    std::vector<Polynomial> row;
    for (int j : cols) row.push_back(m.entry(i, j));
    grid.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(m.field(), m.num_vars(), grid);
}

bool next_subset(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

std::string idx_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + ")";
}

}  // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "Match";
    case Verdict::Mismatch:
      return "Mismatch";
    case Verdict::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

std::string ci_class_str(CiClass c) {
  return c == CiClass::CompleteIntersection ? "CompleteIntersection" : "NotCI";
}

void ensure_desk_scale(int num_vars, const CheckConfig& cfg) {
  if (num_vars > kDeskScaleVarLimit && !cfg.guardrail_override) {
    throw InputError(
        "generic instance needs " + std::to_string(num_vars) +
        " variables, above the desk-scale limit of " +
        std::to_string(kDeskScaleVarLimit) +
        "; pass the override flag to force the computation");
  }
}

int expected_codim(int m, int n, int t) {
  require_range(m, n, t);
  return (m - t + 1) * (n - t + 1);
}

CmType cm_type(int m, int n, int t) {
  require_range(m, n, t);
  CmType r;
  if (m == n) {
    // Every factor is C(n-i,t-1)/C(n-i,t-1); the product collapses to 1 even
    // where individual binomials vanish.
    r.note = "square case, all factors cancel";
    return r;
  }
  for (int i = 1; i <= t - 1; ++i) {
    mpz_class num, den;
    mpz_bin_uiui(num.get_mpz_t(), static_cast<unsigned long>(n - i),
                 static_cast<unsigned long>(t - 1));
    mpz_bin_uiui(den.get_mpz_t(), static_cast<unsigned long>(m - i),
                 static_cast<unsigned long>(t - 1));
    if (den == 0) {
      r.defined = false;
      r.value = 0;
      r.note = "factor i=" + std::to_string(i) + " has zero denominator C(" +
               std::to_string(m - i) + "," + std::to_string(t - 1) + ")";
      return r;
    }
    mpq_class factor(num, den);
    factor.canonicalize();
    r.value *= factor;
  }
  r.value.canonicalize();
  return r;
}

CiClass ci_classification(int m, int n, int t, MinorsVariant variant) {
  require_range(m, n, t);
  if (t == 1) return CiClass::CompleteIntersection;
  switch (variant) {
    case MinorsVariant::FullMinors:
      return (t == m && m == n) ? CiClass::CompleteIntersection
                                : CiClass::NotCI;
    case MinorsVariant::Ladder:
      // t = m = n is the empty ladder: the zero ideal, vacuously a complete
      // intersection of height 0.
      if (t == m && (n == m + 1 || n == m)) return CiClass::CompleteIntersection;
      return CiClass::NotCI;
  }
  return CiClass::NotCI;
}

GaetaReport gaeta_inequality(int m, int n, int t) {
  if (!(2 <= t && t <= m - 1 && m <= n)) {
    throw InputError("hypothesis needs 2 <= t <= m-1 and m <= n");
  }
  GaetaReport r;
  long long lhs = static_cast<long long>(m) * n - static_cast<long long>(t) * t;
  for (int k = m - t + 2; k <= m - 1; ++k) lhs *= k;
  for (int k = n - t + 2; k <= n - 1; ++k) lhs *= k;
  long long fact = 1;
  for (int k = 2; k <= t; ++k) fact *= k;
  r.lhs = lhs;
  r.rhs = fact * fact;
  r.holds = r.lhs > r.rhs;
  return r;
}

std::vector<Polynomial> minimal_generator_set(const IdealHandle& ideal,
                                              const GroebnerConfig& cfg) {
  std::vector<Polynomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& a, const Polynomial& b) {
              int da = a.degree().value_or(0), db = b.degree().value_or(0);
              if (da != db) return da < db;
              return a.str() < b.str();
            });
  // Ascending degree lets graded Nakayama justify the greedy drop test.
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gens) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    IdealHandle partial(ideal.field(), ideal.num_vars(), kept, ideal.order());
    compute_groebner_basis(partial, cfg);
    if (!ideal_member(g, partial, cfg)) kept.push_back(g);
  }
  return kept;
}

int minimal_generator_count(const IdealHandle& ideal,
                            const GroebnerConfig& cfg) {
  return static_cast<int>(minimal_generator_set(ideal, cfg).size());
}

HeightReport is_determinantal(const PolyMatrix& m, int t,
                              const CheckConfig& cfg) {
  IdealHandle ideal = minors_ideal(m, t, cfg.order);
  int predicted = expected_codim(m.rows(), m.cols(), t);
  HeightReport r = make_report(sub("M", t), "codim",
                               safe_height(ideal, cfg.groebner), predicted,
                               std::nullopt);
  if (r.verdict == Verdict::Match) {
    r.note = "height attains the bound: the matrix defines a determinantal scheme";
  }
  return r;
}

LocalCiReport local_ci_radius(const PolyMatrix& m, int t,
                              const CheckConfig& cfg) {
  if (t < 2) throw InputError("local CI radius needs t >= 2");
  LocalCiReport r;
  IdealHandle upper = minors_ideal(m, t, cfg.order);
  IdealHandle lower = minors_ideal(m, t - 1, cfg.order);
  std::optional<int> c = safe_height(upper, cfg.groebner);
  std::optional<int> d = safe_height(lower, cfg.groebner);
  if (!c || !d) {
    r.verdict = Verdict::BudgetExceeded;
    r.note = "step budget exhausted";
    return r;
  }
  r.codim = *c;
  r.d_max = *d;
  r.generically_ci = r.d_max > r.codim;
  try {
    r.scheme_is_ci = minimal_generator_count(upper, cfg.groebner) == r.codim;
  } catch (const BudgetError&) {
    r.note = "minimal generator count hit the step budget";
  }
  if (r.scheme_is_ci) {
    r.note =
        "the scheme is a complete intersection; the height criterion for "
        "local complete intersections does not apply to this case";
  } else {
    r.note = "locally a complete intersection outside codimension d for every "
             "d <= " +
             std::to_string(r.d_max);
  }
  return r;
}

ColumnDeletionReport verify_column_deletion(const PolyMatrix& m, int t, int j,
                                            const CheckConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  if (j < 1 || j > nn) {
    throw InputError("column index out of range for the normalized view");
  }
  HeightReport det = is_determinantal(m, t, cfg);
  if (det.verdict != Verdict::Match) {
    throw InputError("precondition failed: matrix is not determinantal (ht " +
                     sub("M", t) + " = " +
                     std::to_string(det.computed_height) + ", expected " +
                     std::to_string(det.predicted_height) + ")");
  }
  // Delete column j of the normalized view, keeping its rows as the logical
  // rows of O so downstream row deletion acts on the right side.
  std::vector<int> keep_rows, keep_cols;
  for (int i = 0; i < mm; ++i) keep_rows.push_back(i);
  for (int c = 0; c < nn; ++c) {
    if (c != j - 1) keep_cols.push_back(c);
  }
  PolyMatrix o = stored_submatrix(m, keep_rows, keep_cols);
  for (const std::string& p : m.provenance()) o.add_provenance(p);
  o.add_provenance("deleted column " + std::to_string(j) +
                   " of the normalized view");

  ColumnDeletionReport rep{
      HeightReport{}, InequalityReport{}, std::move(o)};

  IdealHandle it_o = minors_ideal(rep.deleted, t, cfg.order);
  rep.t_height = make_report(sub("O", t), "gooddet",
                             safe_height(it_o, cfg.groebner),
                             (mm - t + 1) * (nn - t), std::nullopt);

  rep.lower_bound.statement = "gooddet";
  rep.lower_bound.lhs_desc = sub("O", t - 1) + " height";
  rep.lower_bound.rhs_desc = "(m-t+1)(n-t+1)";
  rep.lower_bound.rhs = expected_codim(mm, nn, t);
  if (t == 1) {
    rep.lower_bound.holds = true;
    rep.lower_bound.note =
        "size-0 minors generate the unit ideal; the bound holds vacuously";
  } else {
    IdealHandle low_o = minors_ideal(rep.deleted, t - 1, cfg.order);
    std::optional<int> h = safe_height(low_o, cfg.groebner);
    if (!h) {
      rep.lower_bound.note = "step budget exhausted";
    } else {
      rep.lower_bound.lhs = *h;
      rep.lower_bound.holds = *h >= rep.lower_bound.rhs;
    }
  }
  return rep;
}

HeightReport verify_row_deletion(const PolyMatrix& o, int t,
                                 const CheckConfig& cfg) {
  if (t < 2) throw InputError("row deletion check needs t >= 2");
  // o is m x (n-1) with the logical rows carrying the original row side.
  int mo = o.logical_rows(), no = o.logical_cols();
  if (t > std::min(mo, no)) throw InputError("t exceeds the matrix size");
  {
    IdealHandle pre = minors_ideal(o, t, cfg.order);
    int expected_pre = (mo - t + 1) * (no - t + 1);
    int h = height(pre, cfg.groebner);
    if (h != expected_pre) {
      throw InputError(
          "precondition failed: ht " + sub("O", t) + " = " +
          std::to_string(h) + ", expected " + std::to_string(expected_pre));
    }
  }
  int predicted = (mo - t + 1) * (no - t + 2);
  HeightReport r;
  std::vector<Attempt> trail;
  for (int k = 0; k <= cfg.max_reseeds; ++k) {
    std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(k);
    auto [opped, rec] = generalized_row_ops(o, s);
    (void)rec;
    PolyMatrix n = delete_row(opped, mo);
    IdealHandle ideal = minors_ideal(n, t - 1, cfg.order);
    std::optional<int> h = safe_height(ideal, cfg.groebner);
    r = make_report(sub("N", t - 1), "del", h, predicted, s);
    trail.push_back(Attempt{s, h.value_or(-1)});
    if (r.verdict != Verdict::Mismatch) break;  // Match, or budget ran out
  }
  r.attempts = trail;
  if (trail.size() > 1) {
    r.note = "reseeded " + std::to_string(trail.size() - 1) +
             " time(s) before the final verdict";
  }
  return r;
}

namespace {

// Shared reseed scaffolding: run `attempt` with seeds seed+0..seed+max until
// it reports success, collecting the trail into the caller's reports.
template <typename AttemptFn>
void reseed_loop(const CheckConfig& cfg, AttemptFn&& attempt) {
  for (int k = 0; k <= cfg.max_reseeds; ++k) {
    if (attempt(cfg.seed + static_cast<std::uint64_t>(k))) return;
  }
}

}  // namespace

HeightReport verify_regular_sequence(const PolyMatrix& m, int t,
                                     const CheckConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  HeightReport det = is_determinantal(m, t, cfg);
  if (det.verdict != Verdict::Match) {
    throw InputError("precondition failed: matrix is not determinantal");
  }
  int predicted = expected_codim(mm, nn, t);
  std::vector<int> rows, cols;
  for (int i = 0; i < mm - t + 1; ++i) rows.push_back(i);
  for (int j = 0; j < nn - t + 1; ++j) cols.push_back(j);

  HeightReport r;
  std::vector<Attempt> trail;
  reseed_loop(cfg, [&](std::uint64_t s) {
    auto [m1, rec1] = ops_on_stored_rows(m, s);
    auto [m2, rec2] = ops_on_stored_cols(m1, s);
    (void)rec1;
    (void)rec2;
    PolyMatrix h = stored_submatrix(m2, rows, cols);
    IdealHandle entries = minors_ideal(h, 1, cfg.order);
    std::optional<int> ht_h = safe_height(entries, cfg.groebner);
    r = make_report("I_1(H), H the leading " + std::to_string(mm - t + 1) +
                        "x" + std::to_string(nn - t + 1) + " block",
                    "ci", ht_h, predicted, s);
    trail.push_back(Attempt{s, ht_h.value_or(-1)});
    return r.verdict != Verdict::Mismatch;
  });
  r.attempts = trail;
  if (r.verdict == Verdict::Match) {
    r.note = "entry count equals height: the entries form a regular sequence";
  }
  return r;
}

std::vector<HeightReport> verify_regular_sequence_sweep(const PolyMatrix& m,
                                                        int t,
                                                        const CheckConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  HeightReport det = is_determinantal(m, t, cfg);
  if (det.verdict != Verdict::Match) {
    throw InputError("precondition failed: matrix is not determinantal");
  }
  int predicted = expected_codim(mm, nn, t);
  auto [m1, rec1] = ops_on_stored_rows(m, cfg.seed);
  auto [m2, rec2] = ops_on_stored_cols(m1, cfg.seed);
  (void)rec1;
  (void)rec2;

  std::vector<HeightReport> out;
  std::vector<int> rows(static_cast<std::size_t>(mm - t + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
  do {
    std::vector<int> cols(static_cast<std::size_t>(nn - t + 1));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<int>(j);
    do {
      PolyMatrix h = stored_submatrix(m2, rows, cols);
      IdealHandle entries = minors_ideal(h, 1, cfg.order);
      HeightReport r = make_report(
          "I_1(H), H at rows " + idx_str(rows) + " cols " + idx_str(cols),
          "ci", safe_height(entries, cfg.groebner), predicted, cfg.seed);
      out.push_back(std::move(r));
    } while (next_subset(cols, nn));
  } while (next_subset(rows, mm));
  return out;
}

LadderHeightReport verify_ladder_height(const PolyMatrix& m, int t,
                                        const CheckConfig& cfg) {
  int mm = m.rows(), nn = m.cols();
  HeightReport det = is_determinantal(m, t, cfg);
  if (det.verdict != Verdict::Match) {
    throw InputError("precondition failed: matrix is not determinantal");
  }
  int c = expected_codim(mm, nn, t);

  LadderHeightReport rep;
  std::vector<Attempt> trail;
  reseed_loop(cfg, [&](std::uint64_t s) {
    auto [opped, rec] = ops_on_stored_rows(m, s);
    (void)rec;
    IdealHandle y = ladder_minors_ideal(opped, corner_ladder_mask(opped), t,
                                        cfg.order);
    std::optional<int> hy = safe_height(y, cfg.groebner);
    rep.ladder = make_report(sub("L", t), "ladder", hy, c - 1, s);
    trail.push_back(Attempt{s, hy.value_or(-1)});

    bool ok = rep.ladder.verdict == Verdict::Match;
    if (t >= 2) {
      PolyMatrix n = corner_submatrix(opped);
      IdealHandle xprime = minors_ideal(n, t - 1, cfg.order);
      std::optional<int> hn = safe_height(xprime, cfg.groebner);
      rep.corner = make_report(sub("N", t - 1), "ladder", hn, c, s);
      ok = ok && rep.corner->verdict == Verdict::Match;

      IdealHandle k_ideal = ladder_minors_ideal(n, corner_ladder_mask(n),
                                                t - 1, cfg.order);
      std::optional<int> hk = safe_height(k_ideal, cfg.groebner);
      InequalityReport ineq;
      ineq.statement = "laddcanc";
      ineq.lhs_desc = sub("L", t) + " height";
      ineq.rhs_desc = sub("K", t - 1) + " height";
      ineq.seed = s;
      if (hy && hk) {
        ineq.lhs = *hy;
        ineq.rhs = *hk;
        ineq.holds = *hy >= *hk;
      } else {
        ineq.note = "step budget exhausted";
      }
      rep.laddcanc = std::move(ineq);
    }
    if (rep.ladder.verdict == Verdict::BudgetExceeded ||
        (rep.corner && rep.corner->verdict == Verdict::BudgetExceeded)) {
      return true;  // reseeding cannot buy more budget
    }
    return ok;
  });
  rep.ladder.attempts = trail;
  return rep;
}

HeightReport herzog_trung_check(int m, int n, int t, const CheckConfig& cfg) {
  require_range(m, n, t);
  ensure_desk_scale(m * n, cfg);
  PolyMatrix g = generic_matrix(cfg.field, m, n);
  IdealHandle ladder =
      ladder_minors_ideal(g, corner_ladder_mask(g), t, cfg.order);
  HeightReport r = make_report(sub("L", t) + " of the generic matrix",
                               "herzog-trung", safe_height(ladder, cfg.groebner),
                               expected_codim(m, n, t) - 1, std::nullopt);
  if (ladder.generators().empty()) {
    r.note = "the ladder admits no minors of size t; the ideal is zero";
  }
  return r;
}

}  // namespace detchain
