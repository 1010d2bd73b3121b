#include "detchain/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "detchain/errors.hpp"

namespace detchain {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json params_json(const RunParams& p) {
  ordered_json j;
  j["command"] = p.command;
  if (!p.statement.empty()) j["statement"] = p.statement;
  j["m"] = p.m;
  j["n"] = p.n;
  j["t"] = p.t;
  j["field"] = p.field_name;
  j["order"] = p.order_name;
  j["seed"] = p.seed;
  j["budget"] = p.budget;
  j["force"] = p.force;
  j["matrix_source"] = p.matrix_source;
  return j;
}

ordered_json height_json(const HeightReport& r) {
  ordered_json j;
  j["ideal_desc"] = r.ideal_desc;
  j["computed_height"] = r.computed_height;
  j["predicted_height"] = r.predicted_height;
  j["statement"] = r.statement;
  j["verdict"] = verdict_str(r.verdict);
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  ordered_json trail = ordered_json::array();
  for (const Attempt& a : r.attempts) {
    trail.push_back({{"seed", a.seed}, {"computed", a.computed}});
  }
  j["attempts"] = trail;
  j["note"] = r.note;
  return j;
}

ordered_json inequality_json(const InequalityReport& r) {
  ordered_json j;
  j["statement"] = r.statement;
  j["lhs_desc"] = r.lhs_desc;
  j["rhs_desc"] = r.rhs_desc;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

ordered_json local_ci_json(const LocalCiReport& r) {
  ordered_json j;
  j["d_max"] = r.d_max;
  j["codim"] = r.codim;
  j["generically_ci"] = r.generically_ci;
  j["scheme_is_ci"] = r.scheme_is_ci;
  j["verdict"] = verdict_str(r.verdict);
  j["note"] = r.note;
  return j;
}

ordered_json matrix_grid_json(const PolyMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.logical_grid()) {
    ordered_json cells = ordered_json::array();
    for (const Polynomial& p : row) cells.push_back(p.str());
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

FormulaTable formulas_table(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1 || t > m || m > n) {
    throw InputError("formulas need 1 <= t <= m <= n");
  }
  FormulaTable tbl;
  tbl.m = m;
  tbl.n = n;
  tbl.t = t;
  tbl.codim = expected_codim(m, n, t);
  tbl.minor_count = minor_count(m, n, t);
  tbl.ladder_count = ladder_minor_count(m, n, t);
  tbl.cm = cm_type(m, n, t);
  tbl.gorenstein = tbl.cm.defined && tbl.cm.value == 1;
  tbl.ci_full = ci_classification(m, n, t, MinorsVariant::FullMinors);
  tbl.ci_ladder = ci_classification(m, n, t, MinorsVariant::Ladder);
  if (2 <= t && t <= m - 1) tbl.gaeta = gaeta_inequality(m, n, t);
  return tbl;
}

bool bundle_all_match(const VerifyBundle& b) {
  for (const HeightReport& r : b.heights) {
    if (r.verdict != Verdict::Match) return false;
  }
  for (const InequalityReport& r : b.inequalities) {
    if (!r.holds) return false;
  }
  if (b.local_ci && b.local_ci->verdict != Verdict::Match) return false;
  return true;
}

bool bundle_budget_exceeded(const VerifyBundle& b) {
  for (const HeightReport& r : b.heights) {
    if (r.verdict == Verdict::BudgetExceeded) return true;
  }
  if (b.local_ci && b.local_ci->verdict == Verdict::BudgetExceeded) return true;
  return false;
}

std::string formulas_json(const RunParams& p, const FormulaTable& tbl) {
  ordered_json j;
  j["params"] = params_json(p);
  j["expected_codim"] = tbl.codim;
  j["minor_count"] = tbl.minor_count;
  j["ladder_minor_count"] = tbl.ladder_count;
  if (tbl.cm.defined) {
    j["cm_type"] = tbl.cm.value.get_str();
  } else {
    j["cm_type"] = nullptr;
  }
  j["cm_type_note"] = tbl.cm.note;
  j["gorenstein"] = tbl.gorenstein;
  j["ci_full_minors"] = ci_class_str(tbl.ci_full);
  j["ci_ladder"] = ci_class_str(tbl.ci_ladder);
  if (tbl.gaeta) {
    j["gaeta"] = {{"lhs", tbl.gaeta->lhs},
                  {"rhs", tbl.gaeta->rhs},
                  {"holds", tbl.gaeta->holds}};
  } else {
    j["gaeta"] = nullptr;
  }
  return dump(j);
}

std::string check_json(const RunParams& p, const THomogeneityReport& rep) {
  ordered_json j;
  j["params"] = params_json(p);
  j["pass"] = rep.pass;
  j["t"] = rep.t;
  if (rep.pass) {
    j["counterexample"] = nullptr;
  } else {
    j["counterexample"] = {{"size", rep.fail_size},
                           {"rows", rep.fail_rows},
                           {"cols", rep.fail_cols}};
  }
  j["note"] = rep.note;
  return dump(j);
}

std::string verify_json(const RunParams& p, const VerifyBundle& b) {
  ordered_json j;
  j["params"] = params_json(p);
  ordered_json hs = ordered_json::array();
  for (const HeightReport& r : b.heights) hs.push_back(height_json(r));
  j["heights"] = hs;
  ordered_json is = ordered_json::array();
  for (const InequalityReport& r : b.inequalities) {
    is.push_back(inequality_json(r));
  }
  j["inequalities"] = is;
  if (b.local_ci) {
    j["local_ci"] = local_ci_json(*b.local_ci);
  } else {
    j["local_ci"] = nullptr;
  }
  j["all_match"] = bundle_all_match(b);
  return dump(j);
}

std::string chain_json(const ChainCertificate& cert) {
  ordered_json j;
  j["params"] = ordered_json{{"m", cert.m},
                             {"n", cert.n},
                             {"t", cert.t},
                             {"field", cert.field.name()},
                             {"order", cert.order_name},
                             {"master_seed", cert.master_seed}};
  ordered_json steps = ordered_json::array();
  for (const BiliaisonStep& s : cert.steps) {
    ordered_json js;
    js["level"] = s.level();
    js["row_op_seed"] = s.row_op().seed;
    ordered_json gens = ordered_json::array();
    for (const Polynomial& g : s.y_ideal().generators()) {
      gens.push_back(g.str());
    }
    js["Y_generators"] = gens;
    ordered_json hs = ordered_json::array();
    for (const HeightReport& r : s.height_checks) {
      hs.push_back({{"desc", r.ideal_desc},
                    {"computed", r.computed_height},
                    {"predicted", r.predicted_height},
                    {"verdict", verdict_str(r.verdict)}});
    }
    js["heights"] = hs;
    js["shift_a"] = s.shift_a;
    js["ratio_pairs_checked"] =
        static_cast<long long>(s.ratio_residues.size());
    js["ratio_pairs_total"] = s.ratio_pairs_total;
    js["ratio_all_zero"] = s.ratio_all_zero;
    js["successor_matrix"] = matrix_grid_json(s.successor());
    if (!s.note.empty()) js["note"] = s.note;
    steps.push_back(std::move(js));
  }
  j["steps"] = steps;
  if (cert.terminal) {
    ordered_json jt;
    ordered_json gens = ordered_json::array();
    for (const Polynomial& g : cert.terminal->generators) {
      gens.push_back(g.str());
    }
    jt["generators"] = gens;
    jt["height"] = cert.terminal->height;
    jt["is_ci"] = cert.terminal->is_ci;
    jt["degree_sequence"] = cert.terminal->degree_sequence;
    jt["note"] = cert.terminal->note;
    j["terminal"] = jt;
  } else {
    j["terminal"] = nullptr;
  }
  j["status"] =
      cert.status == ChainStatus::Certified ? "Certified" : "Failed";
  if (cert.status == ChainStatus::Failed) {
    j["failed_level"] = cert.failed_level;
    j["failure_reason"] = cert.failure_reason;
  }
  j["budget_exhausted"] = cert.budget_exhausted;
  j["note"] = cert.note;
  return dump(j);
}

std::string formulas_text(const FormulaTable& tbl) {
  std::ostringstream os;
  os << "formulas for m=" << tbl.m << " n=" << tbl.n << " t=" << tbl.t << "\n";
  os << "  expected codim      " << tbl.codim << "\n";
  os << "  t-minors            " << tbl.minor_count << "\n";
  os << "  ladder t-minors     " << tbl.ladder_count << "\n";
  os << "  CM type             "
     << (tbl.cm.defined ? tbl.cm.value.get_str() : std::string("undefined"));
  if (!tbl.cm.note.empty()) os << "  (" << tbl.cm.note << ")";
  os << "\n";
  os << "  Gorenstein          " << yesno(tbl.gorenstein) << "\n";
  os << "  CI (full minors)    " << ci_class_str(tbl.ci_full) << "\n";
  os << "  CI (ladder)         " << ci_class_str(tbl.ci_ladder) << "\n";
  if (tbl.gaeta) {
    os << "  Gaeta inequality    " << tbl.gaeta->lhs
       << (tbl.gaeta->holds ? " > " : " <= ") << tbl.gaeta->rhs << "\n";
  } else {
    os << "  Gaeta inequality    not applicable (needs 2 <= t <= m-1)\n";
  }
  return os.str();
}

std::string check_text(const THomogeneityReport& rep) {
  std::ostringstream os;
  if (rep.pass) {
    os << "t-homogeneity: pass up to size " << rep.t << "\n";
  } else {
    os << "t-homogeneity: FAIL at size " << rep.fail_size << ", rows {";
    for (std::size_t i = 0; i < rep.fail_rows.size(); ++i) {
      os << (i ? "," : "") << rep.fail_rows[i];
    }
    os << "}, cols {";
    for (std::size_t i = 0; i < rep.fail_cols.size(); ++i) {
      os << (i ? "," : "") << rep.fail_cols[i];
    }
    os << "}\n";
  }
  if (!rep.note.empty()) os << "  note: " << rep.note << "\n";
  return os.str();
}

namespace {

void height_text(std::ostringstream& os, const HeightReport& r) {
  os << "  [" << verdict_str(r.verdict) << "] ht " << r.ideal_desc << " = "
     << r.computed_height << " (predicted " << r.predicted_height << ")";
  if (r.seed) os << "  seed " << *r.seed;
  if (!r.note.empty()) os << "  -- " << r.note;
  os << "\n";
}

void inequality_text(std::ostringstream& os, const InequalityReport& r) {
  os << "  [" << (r.holds ? "holds" : "FAILS") << "] " << r.lhs_desc << " = "
     << r.lhs << (r.holds ? " >= " : " < ") << r.rhs << " = " << r.rhs_desc;
  if (r.seed) os << "  seed " << *r.seed;
  if (!r.note.empty()) os << "  -- " << r.note;
  os << "\n";
}

}  // namespace

std::string verify_text(const VerifyBundle& b) {
  std::ostringstream os;
  for (const HeightReport& r : b.heights) height_text(os, r);
  for (const InequalityReport& r : b.inequalities) inequality_text(os, r);
  if (b.local_ci) {
    const LocalCiReport& r = *b.local_ci;
    os << "  [" << verdict_str(r.verdict) << "] local CI radius d_max = "
       << r.d_max << ", codim = " << r.codim << ", generically CI "
       << yesno(r.generically_ci) << ", scheme is CI "
       << yesno(r.scheme_is_ci);
    if (!r.note.empty()) os << "  -- " << r.note;
    os << "\n";
  }
  if (bundle_all_match(b)) {
    os << "verdict: Match\n";
  } else {
    os << (bundle_budget_exceeded(b) ? "verdict: BudgetExceeded\n"
                                     : "verdict: Mismatch\n");
  }
  return os.str();
}

std::string chain_text(const ChainCertificate& cert) {
  std::ostringstream os;
  os << "chain for generic-shape " << cert.m << "x" << cert.n
     << ", t = " << cert.t << ", field " << cert.field.name() << ", seed "
     << cert.master_seed << "\n";
  for (const BiliaisonStep& s : cert.steps) {
    os << "step t=" << s.level() << " -> " << s.level() - 1
       << "  (row-op seed " << s.row_op().seed << ", shift a = " << s.shift_a
       << ")\n";
    for (const HeightReport& r : s.height_checks) height_text(os, r);
    os << "  ratio pairs: " << s.ratio_residues.size() << "/"
       << s.ratio_pairs_total << " checked, all zero "
       << yesno(s.ratio_all_zero) << "\n";
    if (!s.note.empty()) os << "  note: " << s.note << "\n";
  }
  if (cert.terminal) {
    os << "terminal: " << cert.terminal->generators.size()
       << " generators, height " << cert.terminal->height << ", CI "
       << yesno(cert.terminal->is_ci) << ", degrees (";
    for (std::size_t i = 0; i < cert.terminal->degree_sequence.size(); ++i) {
      os << (i ? "," : "") << cert.terminal->degree_sequence[i];
    }
    os << ")\n";
  }
  os << "status: "
     << (cert.status == ChainStatus::Certified ? "Certified" : "Failed");
  if (cert.status == ChainStatus::Failed) {
    os << " at level " << cert.failed_level << ": " << cert.failure_reason;
  }
  os << "\n";
  return os.str();
}

}  // namespace detchain
