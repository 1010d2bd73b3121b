#include "detchain/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

// Next k-subset of {0..n-1} in lexicographic order; c starts as {0..k-1}.
bool next_combination(std::vector<int>& c, int n) {
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

std::vector<int> first_combination(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= (std::uint32_t{1} << i);
  return m;
}

std::string tuple_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[static_cast<std::size_t>(i)] + 1);
  }
  return s + ")";
}

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

long long to_ll(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p()) {
    throw InputError(std::string(what) + " does not fit a machine word");
  }
  return v.get_si();
}

}  // namespace

PolyMatrix PolyMatrix::from_rows(const Field& field, int num_vars,
                                 std::vector<std::vector<Polynomial>> grid) {
  if (grid.empty() || grid.front().empty()) {
    throw InputError("matrix needs at least one row and one column");
  }
  int lr = static_cast<int>(grid.size());
  int lc = static_cast<int>(grid.front().size());
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != lc) {
      throw InputError("matrix rows have unequal lengths");
    }
    for (const Polynomial& e : row) {
      if (e.field() != field || e.num_vars() != num_vars) {
        throw InputError("matrix entry from a different ring");
      }
    }
  }
  PolyMatrix m(field, num_vars);
  m.transposed_ = lr > lc;
  m.rows_ = m.transposed_ ? lc : lr;
  m.cols_ = m.transposed_ ? lr : lc;
  m.grid_.reserve(static_cast<std::size_t>(m.rows_) * m.cols_);
  for (int i = 0; i < m.rows_; ++i) {
    for (int j = 0; j < m.cols_; ++j) {
      m.grid_.push_back(m.transposed_ ? grid[static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(i)]
                                      : grid[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

std::vector<std::vector<Polynomial>> PolyMatrix::logical_grid() const {
  std::vector<std::vector<Polynomial>> g;
  g.reserve(static_cast<std::size_t>(logical_rows()));
  for (int i = 0; i < logical_rows(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(logical_cols()));
    for (int j = 0; j < logical_cols(); ++j) row.push_back(logical_entry(i, j));
    g.push_back(std::move(row));
  }
  return g;
}

bool PolyMatrix::same_entries(const PolyMatrix& other) const {
  if (logical_rows() != other.logical_rows() ||
      logical_cols() != other.logical_cols()) {
    return false;
  }
  for (int i = 0; i < logical_rows(); ++i) {
    for (int j = 0; j < logical_cols(); ++j) {
      if (!(logical_entry(i, j) == other.logical_entry(i, j))) return false;
    }
  }
  return true;
}

// --- minors ---------------------------------------------------------------

const Polynomial& MinorCache::minor_masks(std::uint32_t row_mask,
                                          std::uint32_t col_mask) {
  auto key = std::make_pair(row_mask, col_mask);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const Field& F = m_->field();
  Polynomial result(F, m_->num_vars());
  if (row_mask == 0) {
    result = Polynomial::constant(F, m_->num_vars(), F.one());
  } else {
    int top = 0;
    while (!(row_mask & (std::uint32_t{1} << top))) ++top;
    std::uint32_t rest_rows = row_mask & ~(std::uint32_t{1} << top);
    // Expand along the first stored row of the block.
    int sign = 1;
    for (int j = 0; j < m_->cols(); ++j) {
      if (!(col_mask & (std::uint32_t{1} << j))) continue;
      const Polynomial& e = m_->entry(top, j);
      if (!e.is_zero()) {
        const Polynomial& sub =
            minor_masks(rest_rows, col_mask & ~(std::uint32_t{1} << j));
        Polynomial piece = e * sub;
        result = (sign > 0) ? result + piece : result - piece;
      }
      sign = -sign;
    }
  }
  auto [pos, inserted] = memo_.emplace(key, std::move(result));
  (void)inserted;
  return pos->second;
}

const Polynomial& MinorCache::minor(const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
  if (rows.size() != cols.size()) {
    throw InputError("minor needs equally many rows and columns");
  }
  for (int r : rows) {
    if (r < 0 || r >= m_->rows()) throw InputError("minor row out of range");
  }
  for (int c : cols) {
    if (c < 0 || c >= m_->cols()) throw InputError("minor column out of range");
  }
  return minor_masks(mask_of(rows), mask_of(cols));
}

Polynomial minor(const PolyMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  MinorCache cache(m);
  return cache.minor(rows, cols);
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.logical_rows() != m.logical_cols()) {
    throw InputError("determinant of a non-square matrix");
  }
  std::vector<int> all = first_combination(m.rows());
  return minor(m, all, all);
}

namespace {

THomogeneityReport check_t_homogeneous_cached(const PolyMatrix& m, int t,
                                              MinorCache& cache) {
  THomogeneityReport rep;
  rep.t = t;
  if (t < 1 || t > m.rows()) {
    throw InputError("t must satisfy 1 <= t <= min(rows, cols)");
  }
  for (int s = 1; s <= t; ++s) {
    std::vector<int> rows = first_combination(s);
    do {
      std::vector<int> cols = first_combination(s);
      do {
        if (!cache.minor(rows, cols).is_homogeneous()) {
          rep.pass = false;
          rep.fail_size = s;
          rep.fail_rows = rows;
          rep.fail_cols = cols;
          for (int& v : rep.fail_rows) ++v;
          for (int& v : rep.fail_cols) ++v;
          rep.note = "minor " + tuple_str(rows) + "x" + tuple_str(cols) +
                     " of size " + std::to_string(s) + " is not homogeneous";
          return rep;
        }
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
  }
  return rep;
}

}  // namespace

THomogeneityReport check_t_homogeneous(const PolyMatrix& m, int t) {
  MinorCache cache(m);
  return check_t_homogeneous_cached(m, t, cache);
}

bool LadderMask::admits(const std::vector<int>& minor_rows,
                        const std::vector<int>& minor_cols) const {
  for (const auto& [a, b] : excluded) {
    bool row_hit = std::find(minor_rows.begin(), minor_rows.end(), a - 1) !=
                   minor_rows.end();
    bool col_hit = std::find(minor_cols.begin(), minor_cols.end(), b - 1) !=
                   minor_cols.end();
    if (row_hit && col_hit) return false;
  }
  return true;
}

LadderMask corner_ladder_mask(const PolyMatrix& m) {
  return LadderMask{m.rows(), m.cols(), {{m.rows(), m.cols()}}};
}

namespace {

IdealHandle minors_ideal_impl(const PolyMatrix& m, const LadderMask* mask,
                              int t, const MonomialOrder& ord) {
  if (t < 1 || t > m.rows()) {
    throw InputError("minor size t must satisfy 1 <= t <= min(rows, cols)");
  }
  MinorCache cache(m);
  THomogeneityReport hom = check_t_homogeneous_cached(m, t, cache);
  if (!hom.pass) {
    throw InputError("matrix is not " + std::to_string(t) +
                     "-homogeneous: " + hom.note);
  }
  std::vector<Polynomial> gens;
  std::vector<int> rows = first_combination(t);
  do {
    std::vector<int> cols = first_combination(t);
    do {
      if (mask == nullptr || mask->admits(rows, cols)) {
        gens.push_back(cache.minor(rows, cols));
      }
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return IdealHandle(m.field(), m.num_vars(), std::move(gens), ord);
}

}  // namespace

IdealHandle minors_ideal(const PolyMatrix& m, int t, const MonomialOrder& ord) {
  return minors_ideal_impl(m, nullptr, t, ord);
}

IdealHandle ladder_minors_ideal(const PolyMatrix& m, const LadderMask& mask,
                                int t, const MonomialOrder& ord) {
  if (mask.rows != m.rows() || mask.cols != m.cols()) {
    throw InputError("ladder mask shape does not match the matrix");
  }
  return minors_ideal_impl(m, &mask, t, ord);
}

long long minor_count(int m, int n, int t) {
  return to_ll(binom(m, t) * binom(n, t), "minor count");
}

long long ladder_minor_count(int m, int n, int t) {
  return to_ll(binom(m, t) * binom(n, t) - binom(m - 1, t - 1) * binom(n - 1, t - 1),
               "ladder minor count");
}

// --- surgery ----------------------------------------------------------------

PolyMatrix delete_column(const PolyMatrix& m, int j) {
  if (j < 1 || j > m.logical_cols()) {
    throw InputError("column index out of range");
  }
  if (m.logical_cols() < 2) {
    throw InputError("cannot delete the only column");
  }
  auto grid = m.logical_grid();
  for (auto& row : grid) {
    row.erase(row.begin() + (j - 1));
  }
  PolyMatrix out = PolyMatrix::from_rows(m.field(), m.num_vars(), grid);
  for (const std::string& p : m.provenance()) out.add_provenance(p);
  out.add_provenance("deleted column " + std::to_string(j));
  return out;
}

PolyMatrix delete_row(const PolyMatrix& m, int i) {
  if (i < 1 || i > m.logical_rows()) {
    throw InputError("row index out of range");
  }
  if (m.logical_rows() < 2) {
    throw InputError("cannot delete the only row");
  }
  auto grid = m.logical_grid();
  grid.erase(grid.begin() + (i - 1));
  PolyMatrix out = PolyMatrix::from_rows(m.field(), m.num_vars(), grid);
  for (const std::string& p : m.provenance()) out.add_provenance(p);
  out.add_provenance("deleted row " + std::to_string(i));
  return out;
}

PolyMatrix corner_submatrix(const PolyMatrix& m) {
  if (m.logical_rows() < 2 || m.logical_cols() < 2) {
    throw InputError("corner submatrix needs at least a 2x2 matrix");
  }
  auto grid = m.logical_grid();
  grid.pop_back();
  for (auto& row : grid) row.pop_back();
  PolyMatrix out = PolyMatrix::from_rows(m.field(), m.num_vars(), grid);
  for (const std::string& p : m.provenance()) out.add_provenance(p);
  out.add_provenance("corner submatrix");
  return out;
}

// --- row / column operations ------------------------------------------------

namespace {

// Entry degree tuple of one logical row; zero entries stay distinct from any
// degree so classes never mix a zero slot with a form.
std::vector<int> degree_signature(const std::vector<Polynomial>& row) {
  std::vector<int> sig;
  sig.reserve(row.size());
  for (const Polynomial& e : row) {
    sig.push_back(e.degree().value_or(-1));
  }
  return sig;
}

bool block_invertible(const Field& F, std::vector<std::vector<Coeff>> a) {
  int k = static_cast<int>(a.size());
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (!F.is_zero(a[static_cast<std::size_t>(r)]
                      [static_cast<std::size_t>(col)])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[static_cast<std::size_t>(col)],
              a[static_cast<std::size_t>(pivot)]);
    for (int r = col + 1; r < k; ++r) {
      Coeff factor = F.div(
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
          a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
      for (int c = col; c < k; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = F.sub(
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
            F.mul(factor, a[static_cast<std::size_t>(col)]
                           [static_cast<std::size_t>(c)]));
      }
    }
  }
  return true;
}

// Row-op core on an explicit logical grid. Returns transformed grid + record.
std::pair<std::vector<std::vector<Polynomial>>, RowOpRecord> row_ops_on_grid(
    const Field& F, int num_vars, const std::vector<std::vector<Polynomial>>& grid,
    std::uint64_t seed, std::uint64_t stream_label) {
  int lr = static_cast<int>(grid.size());
  SplitMix64 rng(derive_seed(seed, stream_label));

  // Group rows by degree signature, classes ordered by first member.
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> signatures;
  std::vector<int> class_of(static_cast<std::size_t>(lr), -1);
  for (int i = 0; i < lr; ++i) {
    std::vector<int> sig = degree_signature(grid[static_cast<std::size_t>(i)]);
    int found = -1;
    for (std::size_t c = 0; c < signatures.size(); ++c) {
      if (signatures[c] == sig) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(classes.size());
      classes.emplace_back();
      signatures.push_back(std::move(sig));
    }
    classes[static_cast<std::size_t>(found)].push_back(i);
    class_of[static_cast<std::size_t>(i)] = found;
  }

  // Identity off the class blocks; each block is a fresh invertible draw.
  std::vector<std::vector<Coeff>> T(
      static_cast<std::size_t>(lr),
      std::vector<Coeff>(static_cast<std::size_t>(lr), F.zero()));
  for (int i = 0; i < lr; ++i) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = F.one();

  for (const std::vector<int>& cls : classes) {
    int k = static_cast<int>(cls.size());
    std::vector<std::vector<Coeff>> block;
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
      block.assign(static_cast<std::size_t>(k),
                   std::vector<Coeff>(static_cast<std::size_t>(k), F.zero()));
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          block[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              F.sample(rng);
        }
      }
      ok = block_invertible(F, block);
    }
    if (!ok) {
      throw SamplingError(
          "failed to sample an invertible row transform block over " +
          F.name());
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        T[static_cast<std::size_t>(cls[static_cast<std::size_t>(a)])]
         [static_cast<std::size_t>(cls[static_cast<std::size_t>(b)])] =
            block[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
  }

  int lc = static_cast<int>(grid.front().size());
  std::vector<std::vector<Polynomial>> out(
      static_cast<std::size_t>(lr),
      std::vector<Polynomial>(static_cast<std::size_t>(lc),
                              Polynomial(F, num_vars)));
  for (int i = 0; i < lr; ++i) {
    for (int k : classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])]) {
      const Coeff& c = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (F.is_zero(c)) continue;
      for (int j = 0; j < lc; ++j) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
            grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]
                .scaled(c);
      }
    }
  }

  RowOpRecord rec;
  rec.seed = seed;
  rec.transform = std::move(T);
  for (const std::vector<int>& cls : classes) {
    std::vector<int> one_based;
    for (int i : cls) one_based.push_back(i + 1);
    rec.degree_classes.push_back(std::move(one_based));
  }
  return {std::move(out), std::move(rec)};
}

}  // namespace

std::pair<PolyMatrix, RowOpRecord> generalized_row_ops(const PolyMatrix& m,
                                                       std::uint64_t seed) {
  auto [grid, rec] =
      row_ops_on_grid(m.field(), m.num_vars(), m.logical_grid(), seed, 1);
  PolyMatrix out = PolyMatrix::from_rows(m.field(), m.num_vars(), grid);
  for (const std::string& p : m.provenance()) out.add_provenance(p);
  out.add_provenance("row ops, seed " + std::to_string(seed));
  return {std::move(out), std::move(rec)};
}

std::pair<PolyMatrix, RowOpRecord> generalized_col_ops(const PolyMatrix& m,
                                                       std::uint64_t seed) {
  auto grid = m.logical_grid();
  std::vector<std::vector<Polynomial>> flipped(
      static_cast<std::size_t>(m.logical_cols()),
      std::vector<Polynomial>(static_cast<std::size_t>(m.logical_rows()),
                              Polynomial(m.field(), m.num_vars())));
  for (int i = 0; i < m.logical_rows(); ++i) {
    for (int j = 0; j < m.logical_cols(); ++j) {
      flipped[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  auto [tgrid, rec] =
      row_ops_on_grid(m.field(), m.num_vars(), flipped, seed, 2);
  std::vector<std::vector<Polynomial>> back(
      static_cast<std::size_t>(m.logical_rows()),
      std::vector<Polynomial>(static_cast<std::size_t>(m.logical_cols()),
                              Polynomial(m.field(), m.num_vars())));
  for (int i = 0; i < m.logical_rows(); ++i) {
    for (int j = 0; j < m.logical_cols(); ++j) {
      back[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          tgrid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  PolyMatrix out = PolyMatrix::from_rows(m.field(), m.num_vars(), back);
  for (const std::string& p : m.provenance()) out.add_provenance(p);
  out.add_provenance("column ops, seed " + std::to_string(seed));
  return {std::move(out), std::move(rec)};
}

// --- constructions ----------------------------------------------------------

PolyMatrix generic_matrix(const Field& field, int m, int n) {
  if (m < 1 || n < 1) throw InputError("matrix dimensions must be positive");
  int num_vars = m * n;
  std::vector<std::vector<Polynomial>> grid;
  for (int i = 0; i < m; ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < n; ++j) {
      row.push_back(Polynomial::variable(field, num_vars, i * n + j));
    }
    grid.push_back(std::move(row));
  }
  PolyMatrix out = PolyMatrix::from_rows(field, num_vars, grid);
  out.add_provenance("generic " + std::to_string(m) + "x" + std::to_string(n) +
                     " over " + field.name());
  return out;
}

PolyMatrix hyper_matrix(const Polynomial& f, int t) {
  if (t < 1) throw InputError("hyper matrix size must be positive");
  if (f.is_zero() || !f.is_homogeneous()) {
    throw InputError("hyper matrix needs a nonzero homogeneous form");
  }
  const Field& F = f.field();
  std::vector<std::vector<Polynomial>> grid(
      static_cast<std::size_t>(t),
      std::vector<Polynomial>(static_cast<std::size_t>(t),
                              Polynomial(F, f.num_vars())));
  for (int i = 0; i < t; ++i) grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f;
  PolyMatrix out = PolyMatrix::from_rows(F, f.num_vars(), grid);
  out.add_provenance("hypersurface form times identity, t = " +
                     std::to_string(t));
  return out;
}

Polynomial random_form(const Field& field, int num_vars, int degree,
                       SplitMix64& rng, int max_terms) {
  if (degree < 0) throw InputError("form degree must be nonnegative");
  if (max_terms < 1) throw InputError("need at least one term");
  // All monomials of the given degree, lexicographic.
  std::vector<Monomial> monos;
  std::vector<unsigned> exps(static_cast<std::size_t>(num_vars), 0u);
  auto gen = [&](auto&& self, int var, int left) -> void {
    if (var == num_vars - 1) {
      exps[static_cast<std::size_t>(var)] = static_cast<unsigned>(left);
      monos.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = static_cast<unsigned>(e);
      self(self, var + 1, left - e);
    }
  };
  if (num_vars == 0) throw InputError("need at least one variable");
  gen(gen, 0, degree);

  int take = std::min<int>(max_terms, static_cast<int>(monos.size()));
  // Partial Fisher-Yates on the index list keeps the draw deterministic.
  std::vector<int> idx(monos.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  for (int i = 0; i < take; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    rng.below(idx.size() - static_cast<std::size_t>(i));
    std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
  }
  std::vector<Term> terms;
  for (int i = 0; i < take; ++i) {
    terms.push_back(Term{monos[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                         field.sample_nonzero(rng)});
  }
  return Polynomial::from_terms(field, num_vars, std::move(terms));
}

PolyMatrix random_forms_matrix(const Field& field, int num_vars,
                               const std::vector<int>& row_degs,
                               const std::vector<int>& col_degs,
                               std::uint64_t seed, int terms_per_entry) {
  if (row_degs.empty() || col_degs.empty()) {
    throw InputError("degree layout must be nonempty");
  }
  SplitMix64 rng(derive_seed(seed, 3));
  std::vector<std::vector<Polynomial>> grid;
  for (int u : row_degs) {
    std::vector<Polynomial> row;
    for (int v : col_degs) {
      if (u + v < 0) throw InputError("entry degree must be nonnegative");
      row.push_back(random_form(field, num_vars, u + v, rng, terms_per_entry));
    }
    grid.push_back(std::move(row));
  }
  PolyMatrix out = PolyMatrix::from_rows(field, num_vars, grid);
  out.add_provenance("random forms, seed " + std::to_string(seed));
  return out;
}

// --- text format ------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string expect_header(const std::string& line, const std::string& key) {
  if (line.rfind(key, 0) != 0) {
    throw InputError("matrix file: expected '" + key + " ...', got '" + line +
                     "'");
  }
  return trim(line.substr(key.size()));
}

}  // namespace

PolyMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string t = trim(raw);
    if (!t.empty() && t[0] != '#') lines.push_back(t);
  }
  if (lines.size() < 3) throw InputError("matrix file: missing headers");

  std::string field_spec = expect_header(lines[0], "field:");
  Field field = Field::rationals();
  if (field_spec == "Q") {
    field = Field::rationals();
  } else if (field_spec.rfind("F", 0) == 0) {
    std::string rest = trim(field_spec.substr(1));
    if (!rest.empty() && rest[0] == '_') rest = trim(rest.substr(1));
    try {
      field = Field::prime(std::stoll(rest));
    } catch (const std::invalid_argument&) {
      throw InputError("matrix file: bad prime in field header");
    } catch (const std::out_of_range&) {
      throw InputError("matrix file: bad prime in field header");
    }
  } else {
    throw InputError("matrix file: field must be 'Q' or 'F <p>'");
  }

  int num_vars = 0, lr = 0, lc = 0;
  try {
    num_vars = std::stoi(expect_header(lines[1], "vars:"));
    std::istringstream ds(expect_header(lines[2], "dims:"));
    if (!(ds >> lr >> lc)) throw std::invalid_argument("dims");
  } catch (const std::exception&) {
    throw InputError("matrix file: bad vars/dims header");
  }
  if (num_vars < 1 || num_vars > 64) {
    throw InputError("matrix file: vars must be between 1 and 64");
  }
  if (lr < 1 || lc < 1) throw InputError("matrix file: bad dimensions");
  if (lines.size() != static_cast<std::size_t>(3 + lr)) {
    throw InputError("matrix file: expected " + std::to_string(lr) +
                     " entry rows, got " + std::to_string(lines.size() - 3));
  }

  std::vector<std::vector<Polynomial>> grid;
  for (int i = 0; i < lr; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(3 + i)];
    std::vector<Polynomial> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string piece = comma == std::string::npos
                              ? line.substr(start)
                              : line.substr(start, comma - start);
      row.push_back(parse_polynomial(field, num_vars, piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(row.size()) != lc) {
      throw InputError("matrix file: row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(lc));
    }
    grid.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(field, num_vars, grid);
}

PolyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  PolyMatrix m = parse_matrix_text(buf.str());
  m.add_provenance("read from " + path);
  return m;
}

std::string matrix_to_text(const PolyMatrix& m) {
  std::ostringstream out;
  if (m.field().kind() == FieldKind::Rationals) {
    out << "field: Q\n";
  } else {
    out << "field: F " << m.field().characteristic() << "\n";
  }
  out << "vars: " << m.num_vars() << "\n";
  out << "dims: " << m.logical_rows() << " " << m.logical_cols() << "\n";
  for (int i = 0; i < m.logical_rows(); ++i) {
    for (int j = 0; j < m.logical_cols(); ++j) {
      if (j) out << ", ";
      out << m.logical_entry(i, j).str();
    }
    out << "\n";
  }
  return out.str();
}

void write_matrix_file(const PolyMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  out << matrix_to_text(m);
  if (!out) throw InputError("failed writing matrix file: " + path);
}

}  // namespace detchain
