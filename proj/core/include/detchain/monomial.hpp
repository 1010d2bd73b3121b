#ifndef DETCHAIN_MONOMIAL_HPP
#define DETCHAIN_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace detchain {

/// Power product over a fixed variable set x0..x{r}. Exponent vector plus a
/// cached total degree.
class Monomial {
 public:
  explicit Monomial(int num_vars)
      : exps_(static_cast<std::size_t>(num_vars), 0u), degree_(0) {}

  static Monomial variable(int num_vars, int v);
  static Monomial from_exponents(std::vector<unsigned> exps);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  unsigned degree() const { return degree_; }
  unsigned exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;  // this | other
  Monomial divide_by(const Monomial& d) const;  // exact quotient, caller checks
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  // Bitset of variables with a positive exponent; requires num_vars <= 64.
  std::uint64_t support_mask() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::string str() const;  // "x0^2*x3", "1" for the empty product

 private:
  std::vector<unsigned> exps_;
  unsigned degree_;
};

// Fixed order-independent comparison used for canonical term storage:
// total degree descending, then lexicographic descending on x0, x1, ...
bool canonical_term_less(const Monomial& a, const Monomial& b);

enum class OrderKind { GrevLex, Lex, DiagonalWeighted };

/// Term order used for Groebner computations. DiagonalWeighted compares a
/// strictly supermodular weight first (so main-diagonal products of matrix
/// entries lead the minors) and falls back to grevlex on ties.
class MonomialOrder {
 public:
  static MonomialOrder grevlex();
  static MonomialOrder lex();
  static MonomialOrder diagonal(std::vector<long> weights);

  OrderKind kind() const { return kind_; }
  const std::vector<long>& weights() const { return weights_; }
  std::string name() const;

  // Three-way: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && weights_ == other.weights_;
  }

  // Weight vector w(i,j) = (i+1)*(j+1) on the m*n generic variables, row-major.
  static std::vector<long> diagonal_weights(int m, int n);

 private:
  MonomialOrder(OrderKind kind, std::vector<long> weights)
      : kind_(kind), weights_(std::move(weights)) {}

  OrderKind kind_;
  std::vector<long> weights_;
};

}  // namespace detchain

#endif
