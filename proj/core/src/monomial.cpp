#include "detchain/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "detchain/errors.hpp"

namespace detchain {

Monomial Monomial::variable(int num_vars, int v) {
  if (v < 0 || v >= num_vars) {
    throw InputError("variable index x" + std::to_string(v) +
                     " out of range for " + std::to_string(num_vars) +
                     " variables");
  }
  Monomial m(num_vars);
  m.exps_[static_cast<std::size_t>(v)] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::from_exponents(std::vector<unsigned> exps) {
  Monomial m(static_cast<int>(exps.size()));
  m.exps_ = std::move(exps);
  m.degree_ = std::accumulate(m.exps_.begin(), m.exps_.end(), 0u);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= d.exps_[i];
  r.degree_ -= d.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  }
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) mask |= (std::uint64_t{1} << i);
  }
  return mask;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

bool canonical_term_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  }
  return false;
}

MonomialOrder MonomialOrder::grevlex() {
  return MonomialOrder(OrderKind::GrevLex, {});
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(OrderKind::Lex, {}); }

MonomialOrder MonomialOrder::diagonal(std::vector<long> weights) {
  if (weights.empty()) throw InputError("diagonal order needs a weight vector");
  return MonomialOrder(OrderKind::DiagonalWeighted, std::move(weights));
}

std::vector<long> MonomialOrder::diagonal_weights(int m, int n) {
  std::vector<long> w;
  w.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) w.push_back(static_cast<long>(i) * j);
  }
  return w;
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Equal degree: larger is the one whose trailing exponent difference is
  // negative, i.e. scan from the last variable down.
  for (int i = a.num_vars() - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::GrevLex:
      return grevlex_compare(a, b);
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::DiagonalWeighted: {
      if (static_cast<std::size_t>(a.num_vars()) != weights_.size()) {
        throw InputError("diagonal order weight vector has wrong length");
      }
      long long wa = 0, wb = 0;
      for (int i = 0; i < a.num_vars(); ++i) {
        wa += static_cast<long long>(weights_[static_cast<std::size_t>(i)]) *
              a.exp(i);
        wb += static_cast<long long>(weights_[static_cast<std::size_t>(i)]) *
              b.exp(i);
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grevlex_compare(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DiagonalWeighted:
      return "diag";
  }
  return "?";
}

}  // namespace detchain
