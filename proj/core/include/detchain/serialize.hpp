#ifndef DETCHAIN_SERIALIZE_HPP
#define DETCHAIN_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detchain/chain.hpp"
#include "detchain/checks.hpp"

namespace detchain {

/// Everything an invocation depended on; recorded in every JSON document so
/// identical inputs reproduce identical bytes.
struct RunParams {
  std::string command;
  std::string statement;  // verify statement, empty for other commands
  int m = 0, n = 0, t = 0;
  std::string field_name;
  std::string order_name;
  std::uint64_t seed = 0;
  long long budget = 0;
  bool force = false;
  std::string matrix_source;  // "generic", "hyper", "random", or a file path
};

/// The closed-form panel: everything about (m, n, t) that needs no Groebner
/// run.
struct FormulaTable {
  int m = 0, n = 0, t = 0;
  int codim = 0;
  long long minor_count = 0;
  long long ladder_count = 0;
  CmType cm;
  bool gorenstein = false;  // CM type 1
  CiClass ci_full = CiClass::NotCI;
  CiClass ci_ladder = CiClass::NotCI;
  // Populated only on the hypothesis domain 2 <= t <= m-1.
  std::optional<GaetaReport> gaeta;
};
FormulaTable formulas_table(int m, int n, int t);

/// Accumulated output of one verify statement; the JSON and the human
/// rendering both come from here.
struct VerifyBundle {
  std::vector<HeightReport> heights;
  std::vector<InequalityReport> inequalities;
  std::optional<LocalCiReport> local_ci;
};

bool bundle_all_match(const VerifyBundle& b);
bool bundle_budget_exceeded(const VerifyBundle& b);

std::string formulas_json(const RunParams& p, const FormulaTable& tbl);
std::string check_json(const RunParams& p, const THomogeneityReport& rep);
std::string verify_json(const RunParams& p, const VerifyBundle& b);
std::string chain_json(const ChainCertificate& cert);

std::string formulas_text(const FormulaTable& tbl);
std::string check_text(const THomogeneityReport& rep);
std::string verify_text(const VerifyBundle& b);
std::string chain_text(const ChainCertificate& cert);

}  // namespace detchain

#endif
