#ifndef DETCHAIN_IDEAL_HPP
#define DETCHAIN_IDEAL_HPP

#include <optional>
#include <vector>

#include "detchain/polynomial.hpp"

namespace detchain {

inline constexpr long long kDefaultStepBudget = 2'000'000;

struct GroebnerConfig {
  // Top-reduction steps allowed per basis computation / normal form call.
  long long step_budget = kDefaultStepBudget;
};

/// A homogeneous ideal with a chosen term order and an optionally cached
/// reduced Groebner basis. Generators are normalized on construction: zero
/// generators are dropped and every generator must be homogeneous.
class IdealHandle {
 public:
  IdealHandle(const Field& field, int num_vars, std::vector<Polynomial> gens,
              MonomialOrder order);

  const Field& field() const { return field_; }
  int num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  bool has_basis() const { return basis_.has_value(); }
  // Reduced Groebner basis, monic, sorted by leading monomial ascending.
  const std::vector<Polynomial>& basis() const;
  long long basis_steps() const { return basis_steps_; }

 private:
  friend void compute_groebner_basis(IdealHandle&, const GroebnerConfig&);

  Field field_;
  int num_vars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::optional<std::vector<Polynomial>> basis_;
  long long basis_steps_ = 0;
};

// Buchberger with the normal pair-selection strategy and both standard
// pair-elimination criteria. Idempotent; throws BudgetError when the step
// budget runs out.
void compute_groebner_basis(IdealHandle& ideal, const GroebnerConfig& cfg = {});

// Full normal form against the cached basis (InputError if none is cached).
Polynomial normal_form(const Polynomial& p, const IdealHandle& ideal,
                       const GroebnerConfig& cfg = {});
bool ideal_member(const Polynomial& p, const IdealHandle& ideal,
                  const GroebnerConfig& cfg = {});

bool is_zero_ideal(IdealHandle& ideal, const GroebnerConfig& cfg = {});
bool is_unit_ideal(IdealHandle& ideal, const GroebnerConfig& cfg = {});

// Krull dimension of R/I via maximal independent variable sets against the
// leading monomials. EmptySchemeError on the unit ideal. Computes and caches
// the basis when absent.
int krull_dimension(IdealHandle& ideal, const GroebnerConfig& cfg = {});
// num_vars - krull_dimension; the codimension certificate everything else
// leans on.
int height(IdealHandle& ideal, const GroebnerConfig& cfg = {});

}  // namespace detchain

#endif
