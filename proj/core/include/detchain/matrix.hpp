#ifndef DETCHAIN_MATRIX_HPP
#define DETCHAIN_MATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detchain/ideal.hpp"
#include "detchain/polynomial.hpp"
#include "detchain/rng.hpp"

namespace detchain {

/// Matrix of forms. Storage is normalized so that stored rows <= stored cols;
/// when the logical (as-given) matrix is taller than wide we keep its
/// transpose and set transposed(). Minor ideals and the corner ladder are
/// invariant under that flip, so all minor enumeration runs on storage
/// coordinates; row/column surgery takes logical coordinates and consults the
/// flag.
class PolyMatrix {
 public:
  // grid is the logical matrix, row-major. All entries must share the field
  // and variable count.
  static PolyMatrix from_rows(const Field& field, int num_vars,
                              std::vector<std::vector<Polynomial>> grid);

  const Field& field() const { return field_; }
  int num_vars() const { return num_vars_; }

  int rows() const { return rows_; }  // stored, rows() <= cols()
  int cols() const { return cols_; }
  bool transposed() const { return transposed_; }
  int logical_rows() const { return transposed_ ? cols_ : rows_; }
  int logical_cols() const { return transposed_ ? rows_ : cols_; }

  const Polynomial& entry(int i, int j) const {  // stored coords, 0-based
    return grid_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Polynomial& logical_entry(int i, int j) const {
    return transposed_ ? entry(j, i) : entry(i, j);
  }
  std::optional<int> entry_degree(int i, int j) const {
    return entry(i, j).degree();
  }

  const std::vector<std::string>& provenance() const { return provenance_; }
  void add_provenance(std::string note) {
    provenance_.push_back(std::move(note));
  }

  std::vector<std::vector<Polynomial>> logical_grid() const;

  bool same_entries(const PolyMatrix& other) const;

 private:
  PolyMatrix(const Field& field, int num_vars)
      : field_(field), num_vars_(num_vars) {}

  Field field_;
  int num_vars_;
  int rows_ = 0, cols_ = 0;
  bool transposed_ = false;
  std::vector<Polynomial> grid_;  // stored row-major
  std::vector<std::string> provenance_;
};

// --- minors ---------------------------------------------------------------

/// Laplace expansion with sub-determinants memoized across calls, keyed by
/// (row mask, column mask) over storage indices.
class MinorCache {
 public:
  explicit MinorCache(const PolyMatrix& m) : m_(&m) {}

  // Equal-size index tuples, stored coordinates, 0-based, strictly ascending.
  const Polynomial& minor(const std::vector<int>& rows,
                          const std::vector<int>& cols);
  const Polynomial& minor_masks(std::uint32_t row_mask, std::uint32_t col_mask);

 private:
  const PolyMatrix* m_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo_;
};

Polynomial minor(const PolyMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols);
Polynomial determinant(const PolyMatrix& m);  // square logical shape only

struct THomogeneityReport {
  bool pass = true;
  int t = 0;
  // First failing tuple in enumeration order, 1-based storage indices.
  int fail_size = 0;
  std::vector<int> fail_rows, fail_cols;
  std::string note;
};

// All s x s minors homogeneous for every s <= t. Computes actual minors, so
// entry-level cancellation is handled.
THomogeneityReport check_t_homogeneous(const PolyMatrix& m, int t);

/// Region of a matrix closed to the ladder shape used here: the full grid
/// minus a set of excluded cells (1-based storage coordinates). A minor
/// belongs to the ladder iff its index rectangle avoids every excluded cell.
struct LadderMask {
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> excluded;

  bool admits(const std::vector<int>& minor_rows,
              const std::vector<int>& minor_cols) const;  // 0-based tuples
};

// The one-step ladder: everything except the far corner cell (m, n).
LadderMask corner_ladder_mask(const PolyMatrix& m);

// Ideal of t x t minors. Requires 1 <= t <= rows() and t-homogeneity.
IdealHandle minors_ideal(const PolyMatrix& m, int t, const MonomialOrder& ord);
// Same, restricted to minors admitted by the mask.
IdealHandle ladder_minors_ideal(const PolyMatrix& m, const LadderMask& mask,
                                int t, const MonomialOrder& ord);

long long minor_count(int m, int n, int t);
long long ladder_minor_count(int m, int n, int t);

// --- surgery (logical coordinates, 1-based) --------------------------------

PolyMatrix delete_column(const PolyMatrix& m, int j);
PolyMatrix delete_row(const PolyMatrix& m, int i);
// Drop the last logical row and column.
PolyMatrix corner_submatrix(const PolyMatrix& m);

struct RowOpRecord {
  std::uint64_t seed = 0;
  // Invertible logical-rows x logical-rows transform, block structured along
  // the degree classes.
  std::vector<std::vector<Coeff>> transform;
  // Partition of logical row indices (1-based) by entry degree vector.
  std::vector<std::vector<int>> degree_classes;
};

// M' = T * M with T invertible and supported on the degree-class blocks, so
// entry degrees and t-homogeneity survive. Throws SamplingError if no
// invertible block shows up after a bounded number of draws.
std::pair<PolyMatrix, RowOpRecord> generalized_row_ops(const PolyMatrix& m,
                                                       std::uint64_t seed);
// Same on logical columns: M' = M * T.
std::pair<PolyMatrix, RowOpRecord> generalized_col_ops(const PolyMatrix& m,
                                                       std::uint64_t seed);

// --- constructions ----------------------------------------------------------

// Entries x_{i*n+j} over m*n fresh variables, logical row-major.
PolyMatrix generic_matrix(const Field& field, int m, int n);
// F times the t x t identity, F a nonzero form.
PolyMatrix hyper_matrix(const Polynomial& f, int t);
// Homogeneous entries with deg(i,j) = row_degs[i] + col_degs[j]; this additive
// layout is what keeps every minor homogeneous.
PolyMatrix random_forms_matrix(const Field& field, int num_vars,
                               const std::vector<int>& row_degs,
                               const std::vector<int>& col_degs,
                               std::uint64_t seed, int terms_per_entry = 3);

Polynomial random_form(const Field& field, int num_vars, int degree,
                       SplitMix64& rng, int max_terms = 3);

// --- text format ------------------------------------------------------------

// field: Q | field: F <p>; vars: <count>; dims: <rows> <cols>; then one line
// per logical row with comma-separated polynomial entries.
PolyMatrix parse_matrix_text(const std::string& text);
PolyMatrix read_matrix_file(const std::string& path);
std::string matrix_to_text(const PolyMatrix& m);
void write_matrix_file(const PolyMatrix& m, const std::string& path);

}  // namespace detchain

#endif
