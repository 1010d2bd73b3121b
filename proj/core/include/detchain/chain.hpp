#ifndef DETCHAIN_CHAIN_HPP
#define DETCHAIN_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detchain/checks.hpp"

namespace detchain {

/// One ratio-relation membership test: with corner row m and corner column n
/// appended, M_{i,m;j,n} * M_{k;l} - M_{k,m;l,n} * M_{i;j} must reduce to 0
/// modulo the ladder ideal Y. Tuples are 1-based row/column index sets of
/// size t-1 over the normalized view.
struct RatioResidue {
  std::vector<int> i_rows, i_cols;
  std::vector<int> k_rows, k_cols;
  bool zero = false;
};

struct ChainConfig {
  CheckConfig check{};
  int ratio_cap = 100;  // pairs above this are a seeded sample
};

/// One ascending G-biliaison: X (from I_t(M)) is linked to X' (from
/// I_{t-1}(N)) as divisors on the ladder scheme Y, with shift a equal to the
/// degree of the corner entry after row operations.
class BiliaisonStep {
 public:
  BiliaisonStep(int level, PolyMatrix matrix_before, RowOpRecord row_op,
                IdealHandle y_ideal, PolyMatrix successor)
      : level_(level),
        matrix_before_(std::move(matrix_before)),
        row_op_(std::move(row_op)),
        y_ideal_(std::move(y_ideal)),
        successor_(std::move(successor)) {}

  int level() const { return level_; }
  const PolyMatrix& matrix_before() const { return matrix_before_; }
  const RowOpRecord& row_op() const { return row_op_; }
  const IdealHandle& y_ideal() const { return y_ideal_; }
  const PolyMatrix& successor() const { return successor_; }

  int shift_a = 0;
  std::vector<HeightReport> height_checks;
  std::vector<RatioResidue> ratio_residues;
  long long ratio_pairs_total = 0;  // before capping
  bool ratio_all_zero = false;
  bool budget_exhausted = false;
  bool certified = false;
  std::string note;

 private:
  int level_;
  PolyMatrix matrix_before_;
  RowOpRecord row_op_;
  IdealHandle y_ideal_;
  PolyMatrix successor_;
};

struct TerminalReport {
  std::vector<Polynomial> generators;  // minimal generating set
  int height = -1;
  bool is_ci = false;
  // Generator degrees, descending: the bookkeeping for the final CI-biliaisons
  // down to a linear variety.
  std::vector<int> degree_sequence;
  std::string note;
};

enum class ChainStatus { Certified, Failed };

struct ChainCertificate {
  int m = 0, n = 0, t = 0;
  Field field = Field::rationals();
  std::string order_name;
  std::uint64_t master_seed = 0;
  std::vector<BiliaisonStep> steps;
  std::optional<TerminalReport> terminal;
  ChainStatus status = ChainStatus::Failed;
  int failed_level = -1;
  std::string failure_reason;
  bool budget_exhausted = false;
  std::string note;
};

// Requires t >= 2 and not t = m = n (the hypersurface case short-circuits to
// a terminal report in full_chain).
BiliaisonStep biliaison_step(const PolyMatrix& m, int t, std::uint64_t seed,
                             const ChainConfig& cfg);

// All ordered pairs of (t-1)-index tuples over rows 1..m-1, cols 1..n-1 when
// their count is at most cap, otherwise a seeded sample of cap distinct pairs.
// Y must have a cached basis.
std::vector<RatioResidue> ratio_relation_check(const PolyMatrix& m, int t,
                                               const IdealHandle& y, int cap,
                                               std::uint64_t seed,
                                               const GroebnerConfig& cfg = {});

ChainCertificate full_chain(const PolyMatrix& m, int t,
                            std::uint64_t master_seed, const ChainConfig& cfg);

/// Graded Betti shifts of a minimal free resolution: n_{1j} for the generator
/// column, n_{cj} for the last. Consumed as given; no resolutions are
/// computed here.
struct BettiShifts {
  int codim = 0;
  std::vector<int> first_shifts;
  std::vector<int> last_shifts;
};

enum class LicciVerdict { NotLicci, Inconclusive };
std::string licci_str(LicciVerdict v);

// max(last_shifts) <= (codim - 1) * min(first_shifts) rules licci out; the
// criterion is one-directional, so everything else is Inconclusive.
LicciVerdict huneke_ulrich_licci(const BettiShifts& b);

}  // namespace detchain

#endif
