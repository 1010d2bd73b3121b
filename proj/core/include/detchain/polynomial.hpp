#ifndef DETCHAIN_POLYNOMIAL_HPP
#define DETCHAIN_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detchain/field.hpp"
#include "detchain/monomial.hpp"

namespace detchain {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Multivariate polynomial over a fixed Field and variable count. Terms are
/// stored sorted by the fixed canonical order (degree then lex, descending),
/// with no zero coefficients and no duplicate monomials, so equal polynomials
/// have identical representations regardless of any Groebner term order.
class Polynomial {
 public:
  Polynomial(const Field& field, int num_vars)
      : field_(field), num_vars_(num_vars) {}

  static Polynomial zero(const Field& field, int num_vars) {
    return Polynomial(field, num_vars);
  }
  static Polynomial constant(const Field& field, int num_vars, const Coeff& c);
  static Polynomial variable(const Field& field, int num_vars, int v);
  static Polynomial from_terms(const Field& field, int num_vars,
                               std::vector<Term> terms);

  const Field& field() const { return field_; }
  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;  // zero counts as homogeneous

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial negated() const;
  Polynomial scaled(const Coeff& c) const;
  // this * c * m in one pass.
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string str() const;  // re-parseable text form

 private:
  Field field_;
  int num_vars_;
  std::vector<Term> terms_;  // canonical order, descending
};

// Text grammar: integer coefficients, variables x0..x{num_vars-1},
// operators + - * ^, parentheses; ^ takes a nonnegative integer.
// Throws InputError with position info on malformed input.
Polynomial parse_polynomial(const Field& field, int num_vars,
                            std::string_view text);

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

}  // namespace detchain

#endif
