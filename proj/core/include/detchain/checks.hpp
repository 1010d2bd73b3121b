#ifndef DETCHAIN_CHECKS_HPP
#define DETCHAIN_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detchain/matrix.hpp"

namespace detchain {

enum class Verdict { Match, Mismatch, BudgetExceeded };
std::string verdict_str(Verdict v);

struct Attempt {
  std::uint64_t seed = 0;
  int computed = -1;
};

/// The universal certificate unit: a computed height against the predicted
/// one. verdict is Match exactly when the two agree; BudgetExceeded leaves
/// computed_height at -1.
struct HeightReport {
  std::string ideal_desc;
  int computed_height = -1;
  int predicted_height = -1;
  std::string statement;
  Verdict verdict = Verdict::Mismatch;
  std::optional<std::uint64_t> seed;
  std::vector<Attempt> attempts;  // reseed trail when sampling was involved
  std::string note;
};

/// One-sided bounds (lhs >= rhs) that are not equality predictions.
struct InequalityReport {
  std::string statement;
  std::string lhs_desc;
  std::string rhs_desc;
  int lhs = -1;
  int rhs = -1;
  bool holds = false;
  std::optional<std::uint64_t> seed;
  std::string note;
};

struct CheckConfig {
  Field field = Field::prime(32003);
  MonomialOrder order = MonomialOrder::grevlex();
  GroebnerConfig groebner{};
  std::uint64_t seed = 1;
  int max_reseeds = 3;
  bool guardrail_override = false;
};

// Generic instances above this many variables are refused without the
// override; keeps default Groebner runs in the seconds-to-minutes range.
inline constexpr int kDeskScaleVarLimit = 20;
void ensure_desk_scale(int num_vars, const CheckConfig& cfg);

// --- closed-form calculators -------------------------------------------------

// (m-t+1)(n-t+1), the height a determinantal scheme attains.
int expected_codim(int m, int n, int t);

struct CmType {
  bool defined = true;  // the product can hit a zero denominator when m < n
  mpq_class value{1};
  std::string note;
};
// prod_{i=1}^{t-1} C(n-i, t-1) / C(m-i, t-1), exact; 1 when m = n (every
// factor cancels) and an empty product when t = 1.
CmType cm_type(int m, int n, int t);

enum class CiClass { CompleteIntersection, NotCI };
enum class MinorsVariant { FullMinors, Ladder };
std::string ci_class_str(CiClass c);
// Exceptional parameter triples whose minor ideal is a complete intersection.
CiClass ci_classification(int m, int n, int t, MinorsVariant variant);

struct GaetaReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};
// (mn - t^2) (m-1)...(m-t+2) (n-1)...(n-t+2) > (t!)^2, empty descending
// products are 1. Requires 2 <= t <= m-1 and m <= n.
GaetaReport gaeta_inequality(int m, int n, int t);

// Minimal number of generators of a homogeneous ideal (ascending-degree
// greedy, valid by the graded Nakayama lemma). Deterministic.
int minimal_generator_count(const IdealHandle& ideal,
                            const GroebnerConfig& cfg = {});
std::vector<Polynomial> minimal_generator_set(const IdealHandle& ideal,
                                              const GroebnerConfig& cfg = {});

// --- Groebner-backed verifiers ----------------------------------------------

// Height of I_t(M) against expected_codim; Match certifies that M defines a
// determinantal scheme.
HeightReport is_determinantal(const PolyMatrix& m, int t,
                              const CheckConfig& cfg);

/// ht I_{t-1}(M) = d_max certifies the scheme of I_t(M) is locally a complete
/// intersection outside a closed subset of codimension d for every d <= d_max;
/// the equivalence needs the scheme itself not to be a complete intersection,
/// so that case carries a warning instead of a verdict.
struct LocalCiReport {
  int d_max = -1;          // ht I_{t-1}(M)
  int codim = -1;          // ht I_t(M)
  bool generically_ci = false;  // d_max > codim
  bool scheme_is_ci = false;    // minimal generators == height for I_t(M)
  Verdict verdict = Verdict::Match;  // BudgetExceeded on blowup, else Match
  std::string note;
};
LocalCiReport local_ci_radius(const PolyMatrix& m, int t,
                              const CheckConfig& cfg);

struct ColumnDeletionReport {
  HeightReport t_height;          // ht I_t(O) = (m-t+1)(n-t)
  InequalityReport lower_bound;   // ht I_{t-1}(O) >= (m-t+1)(n-t+1)
  PolyMatrix deleted;             // O itself, for chaining into row deletion
};
// Deletes logical column j (1-based) of a determinantal M.
ColumnDeletionReport verify_column_deletion(const PolyMatrix& m, int t, int j,
                                            const CheckConfig& cfg);

// O is m x (n-1) as produced by verify_column_deletion with ht I_t(O) =
// (m-t+1)(n-t). Applies seeded generalized row ops, deletes the last logical
// row, and checks ht I_{t-1}(N) = (m-t+1)(n-t+1); reseeds on Mismatch.
HeightReport verify_row_deletion(const PolyMatrix& o, int t,
                                 const CheckConfig& cfg);

// Seeded generic row and column ops, then the leading
// (m-t+1) x (n-t+1) block H; checks ht I_1(H) = (m-t+1)(n-t+1), i.e. the
// entries of H form a regular sequence.
HeightReport verify_regular_sequence(const PolyMatrix& m, int t,
                                     const CheckConfig& cfg);
// Same after one seeded op application, for every (m-t+1) x (n-t+1) submatrix
// position.
std::vector<HeightReport> verify_regular_sequence_sweep(const PolyMatrix& m,
                                                        int t,
                                                        const CheckConfig& cfg);

struct LadderHeightReport {
  HeightReport ladder;                       // ht I_t(L) = c - 1
  std::optional<HeightReport> corner;        // ht I_{t-1}(N) = c, t >= 2
  std::optional<InequalityReport> laddcanc;  // ht I_t(L) >= ht I_{t-1}(K)
};
// After seeded generalized row ops: L is the ladder of M' omitting the far
// corner, N the corner submatrix, K the ladder of N omitting its own corner.
LadderHeightReport verify_ladder_height(const PolyMatrix& m, int t,
                                        const CheckConfig& cfg);

// Ladder of the plain generic m x n matrix: ht I_t(L) = (m-t+1)(n-t+1) - 1.
HeightReport herzog_trung_check(int m, int n, int t, const CheckConfig& cfg);

}  // namespace detchain

#endif
