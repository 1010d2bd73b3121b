#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detchain/chain.hpp"
#include "detchain/checks.hpp"
#include "detchain/errors.hpp"
#include "detchain/serialize.hpp"

namespace dc = detchain;

namespace {

// Exit-code contract: 0 success, 2 mismatch/failed certification,
// 3 step budget exhausted, 4 malformed input.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

struct GlobalOpts {
  std::string field_arg = "Fp:32003";
  std::string order_name = "grevlex";
  std::uint64_t seed = 1;
  long long budget = dc::kDefaultStepBudget;
  bool json = false;
  bool force = false;
};

dc::Field parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return dc::Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return dc::Field::prime(std::stoll(text.substr(3)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw dc::InputError("cannot read the prime in --field " + text);
  }
  throw dc::InputError("--field must be Q or Fp:<prime>, got " + text);
}

dc::MonomialOrder parse_order(const std::string& name, int m, int n,
                              int num_vars) {
  if (name == "grevlex") return dc::MonomialOrder::grevlex();
  if (name == "lex") return dc::MonomialOrder::lex();
  if (name == "diag") {
    if (num_vars != m * n) {
      throw dc::InputError(
          "--order diag needs the generic m*n variable layout");
    }
    return dc::MonomialOrder::diagonal(
        dc::MonomialOrder::diagonal_weights(m, n));
  }
  throw dc::InputError("--order must be grevlex, lex or diag, got " + name);
}

dc::CheckConfig make_check_config(const GlobalOpts& g, const dc::Field& field,
                                  int m, int n, int num_vars) {
  dc::CheckConfig cfg;
  cfg.field = field;
  cfg.order = parse_order(g.order_name, m, n, num_vars);
  cfg.groebner.step_budget = g.budget;
  cfg.seed = g.seed;
  cfg.guardrail_override = g.force;
  return cfg;
}

dc::RunParams make_params(const GlobalOpts& g, std::string command,
                          std::string statement, int m, int n, int t,
                          const dc::Field& field, std::string source) {
  dc::RunParams p;
  p.command = std::move(command);
  p.statement = std::move(statement);
  p.m = m;
  p.n = n;
  p.t = t;
  p.field_name = field.name();
  p.order_name = g.order_name;
  p.seed = g.seed;
  p.budget = g.budget;
  p.force = g.force;
  p.matrix_source = std::move(source);
  return p;
}

int infer_num_vars(const std::string& text) {
  int mx = -1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    std::size_t j = i + 1;
    long v = 0;
    while (j < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      ++j;
    }
    if (v > mx) mx = static_cast<int>(v);
  }
  return mx + 1;
}

// The matrix a verify/chain invocation acts on: a file when given (its header
// fixes the field), the seeded guardrail-checked generic matrix otherwise.
dc::PolyMatrix acquire_matrix(const GlobalOpts& g, const std::string& path,
                              int m, int n, std::string& source,
                              dc::Field& field) {
  if (!path.empty()) {
    dc::PolyMatrix mat = dc::read_matrix_file(path);
    source = path;
    field = mat.field();
    return mat;
  }
  if (m < 1 || n < 1) {
    throw dc::InputError("need --m and --n (or --matrix FILE)");
  }
  field = parse_field(g.field_arg);
  dc::CheckConfig guard;
  guard.guardrail_override = g.force;
  dc::ensure_desk_scale(m * n, guard);
  source = "generic";
  return dc::generic_matrix(field, m, n);
}

void emit(const GlobalOpts& g, const std::string& json_doc,
          const std::string& text_doc) {
  std::cout << (g.json ? json_doc : text_doc);
}

int chain_exit(const dc::ChainCertificate& cert) {
  if (cert.status == dc::ChainStatus::Certified) return kExitOk;
  return cert.budget_exhausted ? kExitBudget : kExitMismatch;
}

int bundle_exit(const dc::VerifyBundle& b) {
  if (dc::bundle_all_match(b)) return kExitOk;
  return dc::bundle_budget_exceeded(b) ? kExitBudget : kExitMismatch;
}

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string piece = text.substr(pos, comma - pos);
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw dc::InputError("cannot read integer list entry '" + piece + "'");
    }
    pos = comma + 1;
  }
  return out;
}

int run_chain_like(const GlobalOpts& g, const dc::PolyMatrix& mat, int t,
                   int cap, const std::string& json_out,
                   const std::string& source) {
  dc::ChainConfig ccfg;
  ccfg.check = make_check_config(g, mat.field(), mat.rows(), mat.cols(),
                                 mat.num_vars());
  ccfg.ratio_cap = cap;
  (void)source;
  dc::ChainCertificate cert = dc::full_chain(mat, t, g.seed, ccfg);
  std::string doc = dc::chain_json(cert);
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    if (!os) throw dc::InputError("cannot open " + json_out + " for writing");
    os << doc;
  }
  emit(g, doc, dc::chain_text(cert));
  return chain_exit(cert);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "detchain: exact certificates for determinantal schemes, ladder "
      "ideals and G-biliaison chains"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--field", g.field_arg, "Q or Fp:<prime>")
      ->capture_default_str();
  app.add_option("--order", g.order_name, "grevlex, lex or diag")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "base seed for all sampling")
      ->envname("DETCHAIN_SEED")
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Groebner step budget")
      ->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--force", g.force, "override the desk-scale guardrail");

  // formulas M N T
  auto* cmd_formulas = app.add_subcommand(
      "formulas", "closed-form panel for the parameter triple");
  int fm = 0, fn = 0, ft = 0;
  cmd_formulas->add_option("m", fm, "rows")->required();
  cmd_formulas->add_option("n", fn, "cols")->required();
  cmd_formulas->add_option("t", ft, "minor size")->required();

  // generate {generic|hyper|random}
  auto* cmd_generate =
      app.add_subcommand("generate", "write a matrix in the text format");
  cmd_generate->require_subcommand(1);
  std::string gen_out;
  cmd_generate->add_option("--out", gen_out, "output file (stdout otherwise)");
  auto* gen_generic =
      cmd_generate->add_subcommand("generic", "matrix of indeterminates");
  int ggm = 0, ggn = 0;
  gen_generic->add_option("m", ggm)->required();
  gen_generic->add_option("n", ggn)->required();
  auto* gen_hyper = cmd_generate->add_subcommand(
      "hyper", "form F times the t x t identity, so I_t = (F^t)");
  std::string hyper_form;
  int hyper_t = 0;
  gen_hyper->add_option("form", hyper_form, "homogeneous polynomial, e.g. x0")
      ->required();
  gen_hyper->add_option("t", hyper_t)->required();
  int hyper_vars = 0;
  gen_hyper->add_option("--vars", hyper_vars,
                        "ring size (default: highest index in the form + 1)");
  auto* gen_random = cmd_generate->add_subcommand(
      "random", "random forms with an additive degree layout");
  int grm = 0, grn = 0, gr_vars = 0, gr_terms = 3;
  std::string gr_rows, gr_cols;
  gen_random->add_option("m", grm)->required();
  gen_random->add_option("n", grn)->required();
  gen_random->add_option("--vars", gr_vars, "ring size (default m*n)");
  gen_random->add_option("--row-degs", gr_rows, "comma list, default all 1");
  gen_random->add_option("--col-degs", gr_cols, "comma list, default all 0");
  gen_random->add_option("--terms", gr_terms, "terms per entry")
      ->capture_default_str();

  // check --matrix FILE --t T
  auto* cmd_check =
      app.add_subcommand("check", "t-homogeneity of a matrix file");
  std::string check_path;
  int check_t = 0;
  cmd_check->add_option("--matrix", check_path)->required();
  cmd_check->add_option("--t", check_t)->required();

  // verify STATEMENT --m --n --t [--matrix FILE] [--col J] [--sweep] [--cap]
  auto* cmd_verify =
      app.add_subcommand("verify", "height certificates for one statement");
  std::string v_statement, v_path;
  int vm = 0, vn = 0, vt = 0, v_col = 0, v_cap = 100;
  bool v_sweep = false;
  cmd_verify
      ->add_option("statement", v_statement,
                   "codim | gooddet | del | ci | ladder | laddcanc | "
                   "herzog-trung | local-ci | detgci")
      ->required();
  cmd_verify->add_option("--m", vm);
  cmd_verify->add_option("--n", vn);
  cmd_verify->add_option("--t", vt)->required();
  cmd_verify->add_option("--matrix", v_path, "matrix file instead of generic");
  cmd_verify->add_option("--col", v_col,
                         "1-based column to delete (default: last)");
  cmd_verify->add_flag("--sweep", v_sweep,
                       "ci: every block position, not just the leading one");
  cmd_verify->add_option("--cap", v_cap, "detgci: ratio-pair cap")
      ->capture_default_str();

  // chain --generic M N | --matrix FILE, --t, --cap, --json-out
  auto* cmd_chain =
      app.add_subcommand("chain", "construct and certify the biliaison chain");
  std::vector<int> chain_generic;
  std::string chain_path, chain_json_out;
  int chain_t = 0, chain_cap = 100;
  cmd_chain->add_option("--generic", chain_generic, "M N")->expected(2);
  cmd_chain->add_option("--matrix", chain_path);
  cmd_chain->add_option("--t", chain_t)->required();
  cmd_chain->add_option("--cap", chain_cap, "ratio-pair cap")
      ->capture_default_str();
  cmd_chain->add_option("--json-out", chain_json_out,
                        "also write the certificate JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cmd_formulas) {
      dc::FormulaTable tbl = dc::formulas_table(fm, fn, ft);
      dc::Field field = parse_field(g.field_arg);
      dc::RunParams p =
          make_params(g, "formulas", "", fm, fn, ft, field, "none");
      emit(g, dc::formulas_json(p, tbl), dc::formulas_text(tbl));
      return kExitOk;
    }

    if (*cmd_generate) {
      dc::Field field = parse_field(g.field_arg);
      std::optional<dc::PolyMatrix> mat;
      if (*gen_generic) {
        dc::CheckConfig guard;
        guard.guardrail_override = g.force;
        dc::ensure_desk_scale(ggm * ggn, guard);
        mat = dc::generic_matrix(field, ggm, ggn);
      } else if (*gen_hyper) {
        int nv = hyper_vars > 0 ? hyper_vars : infer_num_vars(hyper_form);
        if (nv < 1) {
          throw dc::InputError(
              "the diagonal form must involve at least one variable");
        }
        dc::Polynomial f = dc::parse_polynomial(field, nv, hyper_form);
        mat = dc::hyper_matrix(f, hyper_t);
      } else if (*gen_random) {
        if (grm < 1 || grn < 1) throw dc::InputError("need m, n >= 1");
        int nv = gr_vars > 0 ? gr_vars : grm * grn;
        std::vector<int> row_degs =
            gr_rows.empty() ? std::vector<int>(grm, 1) : parse_csv_ints(gr_rows);
        std::vector<int> col_degs =
            gr_cols.empty() ? std::vector<int>(grn, 0) : parse_csv_ints(gr_cols);
        if (static_cast<int>(row_degs.size()) != grm ||
            static_cast<int>(col_degs.size()) != grn) {
          throw dc::InputError("degree lists must have lengths m and n");
        }
        mat = dc::random_forms_matrix(field, nv, row_degs, col_degs, g.seed,
                                      gr_terms);
      }
      if (gen_out.empty()) {
        std::cout << dc::matrix_to_text(*mat);
      } else {
        dc::write_matrix_file(*mat, gen_out);
      }
      return kExitOk;
    }

    if (*cmd_check) {
      dc::PolyMatrix mat = dc::read_matrix_file(check_path);
      dc::THomogeneityReport rep = dc::check_t_homogeneous(mat, check_t);
      dc::RunParams p = make_params(g, "check", "", mat.rows(), mat.cols(),
                                    check_t, mat.field(), check_path);
      emit(g, dc::check_json(p, rep), dc::check_text(rep));
      return rep.pass ? kExitOk : kExitInput;
    }

    if (*cmd_verify) {
      dc::Field field = dc::Field::rationals();
      std::string source;
      dc::PolyMatrix mat = acquire_matrix(g, v_path, vm, vn, source, field);
      int m = mat.rows(), n = mat.cols();
      dc::CheckConfig cfg = make_check_config(g, field, m, n, mat.num_vars());
      dc::RunParams p =
          make_params(g, "verify", v_statement, m, n, vt, field, source);

      if (v_statement == "detgci") {
        return run_chain_like(g, mat, vt, v_cap, "", source);
      }

      dc::VerifyBundle b;
      if (v_statement == "codim") {
        b.heights.push_back(dc::is_determinantal(mat, vt, cfg));
      } else if (v_statement == "gooddet") {
        int col = v_col > 0 ? v_col : n;
        dc::ColumnDeletionReport r =
            dc::verify_column_deletion(mat, vt, col, cfg);
        b.heights.push_back(r.t_height);
        b.inequalities.push_back(r.lower_bound);
      } else if (v_statement == "del") {
        int col = v_col > 0 ? v_col : n;
        dc::ColumnDeletionReport r =
            dc::verify_column_deletion(mat, vt, col, cfg);
        b.heights.push_back(r.t_height);
        b.inequalities.push_back(r.lower_bound);
        b.heights.push_back(dc::verify_row_deletion(r.deleted, vt, cfg));
      } else if (v_statement == "ci") {
        if (v_sweep) {
          b.heights = dc::verify_regular_sequence_sweep(mat, vt, cfg);
        } else {
          b.heights.push_back(dc::verify_regular_sequence(mat, vt, cfg));
        }
      } else if (v_statement == "ladder" || v_statement == "laddcanc") {
        dc::LadderHeightReport r = dc::verify_ladder_height(mat, vt, cfg);
        b.heights.push_back(r.ladder);
        if (r.corner) b.heights.push_back(*r.corner);
        if (v_statement == "laddcanc") {
          if (!r.laddcanc) {
            throw dc::InputError("laddcanc needs t >= 2");
          }
          b.inequalities.push_back(*r.laddcanc);
        }
      } else if (v_statement == "herzog-trung") {
        b.heights.push_back(dc::herzog_trung_check(m, n, vt, cfg));
      } else if (v_statement == "local-ci") {
        b.local_ci = dc::local_ci_radius(mat, vt, cfg);
      } else {
        throw dc::InputError("unknown verify statement '" + v_statement + "'");
      }
      emit(g, dc::verify_json(p, b), dc::verify_text(b));
      return bundle_exit(b);
    }

    if (*cmd_chain) {
      if (chain_generic.empty() == chain_path.empty()) {
        throw dc::InputError("chain needs exactly one of --generic or --matrix");
      }
      dc::Field field = dc::Field::rationals();
      std::string source;
      int m = chain_generic.empty() ? 0 : chain_generic[0];
      int n = chain_generic.empty() ? 0 : chain_generic[1];
      dc::PolyMatrix mat = acquire_matrix(g, chain_path, m, n, source, field);
      return run_chain_like(g, mat, chain_t, chain_cap, chain_json_out,
                            source);
    }
  } catch (const dc::BudgetError& e) {
    std::cerr << "error (budget): " << e.what() << "\n";
    return kExitBudget;
  } catch (const dc::SamplingError& e) {
    std::cerr << "error (sampling): " << e.what() << "\n";
    return kExitMismatch;
  } catch (const dc::EmptySchemeError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return kExitInput;
  } catch (const dc::InputError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
