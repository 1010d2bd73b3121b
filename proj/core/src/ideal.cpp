#include "detchain/ideal.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

struct Budget {
  long long remaining;
  long long used = 0;
  void charge() {
    if (--remaining < 0) {
      throw BudgetError("Groebner step budget exhausted after " +
                        std::to_string(used) + " reduction steps");
    }
    ++used;
  }
};

// Terms sorted descending under the active order; empty means zero.
struct OrdPoly {
  std::vector<Term> t;
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
  OrdPoly r{p.terms()};
  std::sort(r.t.begin(), r.t.end(), [&ord](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return r;
}

Polynomial to_poly(const Field& field, int num_vars, const OrdPoly& p) {
  return Polynomial::from_terms(field, num_vars, p.t);
}

// p - c * x^m * g, merged in one pass. Both inputs sorted descending.
OrdPoly sub_mul(const OrdPoly& p, std::size_t p_from, const Field& F,
                const MonomialOrder& ord, const Coeff& c, const Monomial& m,
                const OrdPoly& g) {
  OrdPoly r;
  r.t.reserve(p.t.size() - p_from + g.t.size());
  std::size_t i = p_from, j = 0;
  while (i < p.t.size() && j < g.t.size()) {
    Monomial gm = g.t[j].mono * m;
    int cmp = ord.compare(p.t[i].mono, gm);
    if (cmp > 0) {
      r.t.push_back(p.t[i++]);
    } else if (cmp < 0) {
      r.t.push_back(Term{std::move(gm), F.neg(F.mul(c, g.t[j].coeff))});
      ++j;
    } else {
      Coeff cc = F.sub(p.t[i].coeff, F.mul(c, g.t[j].coeff));
      if (!F.is_zero(cc)) r.t.push_back(Term{p.t[i].mono, std::move(cc)});
      ++i;
      ++j;
    }
  }
  for (; i < p.t.size(); ++i) r.t.push_back(p.t[i]);
  for (; j < g.t.size(); ++j) {
    r.t.push_back(Term{g.t[j].mono * m, F.neg(F.mul(c, g.t[j].coeff))});
  }
  return r;
}

void make_monic(OrdPoly& p, const Field& F) {
  if (p.t.empty() || F.is_one(p.t.front().coeff)) return;
  Coeff inv = F.inv(p.t.front().coeff);
  for (Term& t : p.t) t.coeff = F.mul(t.coeff, inv);
}

// Full normal form: reduce every term of p against G.
OrdPoly reduce_full(OrdPoly p, const std::vector<OrdPoly>& G, const Field& F,
                    const MonomialOrder& ord, Budget& budget) {
  OrdPoly rem;
  std::size_t pos = 0;
  while (pos < p.t.size()) {
    const Monomial& lead = p.t[pos].mono;
    const OrdPoly* reducer = nullptr;
    for (const OrdPoly& g : G) {
      if (!g.t.empty() && g.t.front().mono.divides(lead)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      rem.t.push_back(p.t[pos++]);
      continue;
    }
    budget.charge();
    Coeff c = F.div(p.t[pos].coeff, reducer->t.front().coeff);
    Monomial m = lead.divide_by(reducer->t.front().mono);
    p = sub_mul(p, pos, F, ord, c, m, *reducer);
    pos = 0;
  }
  return rem;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

// Normal selection: smallest lcm degree, ties by the order, then indices.
std::size_t select_pair(const std::vector<Pair>& pending,
                        const MonomialOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pending.size(); ++k) {
    const Pair& a = pending[k];
    const Pair& b = pending[best];
    int cmp;
    if (a.lcm.degree() != b.lcm.degree()) {
      cmp = a.lcm.degree() < b.lcm.degree() ? -1 : 1;
    } else {
      cmp = ord.compare(a.lcm, b.lcm);
    }
    if (cmp < 0 || (cmp == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) {
      best = k;
    }
  }
  return best;
}

std::vector<OrdPoly> buchberger(const std::vector<Polynomial>& gens,
                                const Field& F, const MonomialOrder& ord,
                                Budget& budget) {
  std::vector<OrdPoly> G;
  for (const Polynomial& g : gens) {
    OrdPoly og = to_ord(g, ord);
    make_monic(og, F);
    G.push_back(std::move(og));
  }
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> in_queue;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      pending.push_back(
          Pair{i, j, Monomial::lcm(G[i].t.front().mono, G[j].t.front().mono)});
      in_queue.emplace(i, j);
    }
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    std::size_t k = select_pair(pending, ord);
    Pair pr = std::move(pending[k]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k));
    in_queue.erase({pr.i, pr.j});

    const Monomial& lti = G[pr.i].t.front().mono;
    const Monomial& ltj = G[pr.j].t.front().mono;
    if (Monomial::coprime(lti, ltj)) continue;  // first Buchberger criterion
    bool chained = false;  // second criterion: a mediator k already handled
    for (int h = 0; h < static_cast<int>(G.size()); ++h) {
      if (h == pr.i || h == pr.j) continue;
      if (!G[h].t.front().mono.divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, h);
      auto key2 = std::minmax(pr.j, h);
      if (in_queue.count({key1.first, key1.second}) == 0 &&
          in_queue.count({key2.first, key2.second}) == 0) {
        chained = true;
        break;
      }
    }
    if (chained) continue;

    budget.charge();
    Monomial mi = pr.lcm.divide_by(lti);
    Monomial mj = pr.lcm.divide_by(ltj);
    OrdPoly lifted;
    lifted.t.reserve(G[pr.i].t.size());
    for (const Term& t : G[pr.i].t) {
      lifted.t.push_back(Term{t.mono * mi, t.coeff});
    }
    OrdPoly s = sub_mul(lifted, 0, F, ord, F.one(), mj, G[pr.j]);
    OrdPoly r = reduce_full(std::move(s), G, F, ord, budget);
    if (!r.t.empty()) {
      make_monic(r, F);
      G.push_back(std::move(r));
      push_pairs_for(static_cast<int>(G.size()) - 1);
    }
  }
  return G;
}

// Minimize then tail-reduce; returns the unique reduced basis, LT-ascending.
std::vector<OrdPoly> reduce_basis(std::vector<OrdPoly> G, const Field& F,
                                  const MonomialOrder& ord, Budget& budget) {
  std::sort(G.begin(), G.end(), [&ord](const OrdPoly& a, const OrdPoly& b) {
    int cmp = ord.compare(a.t.front().mono, b.t.front().mono);
    if (cmp != 0) return cmp < 0;
    return a.t.size() < b.t.size();
  });
  std::vector<OrdPoly> minimal;
  for (OrdPoly& g : G) {
    bool redundant = false;
    for (const OrdPoly& h : minimal) {
      if (h.t.front().mono.divides(g.t.front().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<OrdPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrdPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    OrdPoly r = reduce_full(minimal[i], others, F, ord, budget);
    make_monic(r, F);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ord](const OrdPoly& a, const OrdPoly& b) {
              return ord.less(a.t.front().mono, b.t.front().mono);
            });
  return reduced;
}

// Smallest set of variables meeting every support mask; complement of a
// maximal independent set.
int min_hitting_set(const std::vector<std::uint64_t>& supports, int num_vars) {
  int best = num_vars;
  auto dfs = [&](auto&& self, const std::vector<std::uint64_t>& remaining,
                 int chosen) -> void {
    if (remaining.empty()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + 1 >= best) return;
    std::uint64_t pivot = remaining.front();
    for (int v = 0; v < num_vars; ++v) {
      if (!(pivot & (std::uint64_t{1} << v))) continue;
      std::vector<std::uint64_t> rest;
      rest.reserve(remaining.size());
      for (std::uint64_t s : remaining) {
        if (!(s & (std::uint64_t{1} << v))) rest.push_back(s);
      }
      self(self, rest, chosen + 1);
    }
  };
  dfs(dfs, supports, 0);
  return best;
}

}  // namespace

IdealHandle::IdealHandle(const Field& field, int num_vars,
                         std::vector<Polynomial> gens, MonomialOrder order)
    : field_(field), num_vars_(num_vars), order_(std::move(order)) {
  for (Polynomial& g : gens) {
    if (g.field() != field_ || g.num_vars() != num_vars_) {
      throw InputError("ideal generator from a different ring");
    }
    if (!g.is_homogeneous()) {
      throw InputError("ideal generators must be homogeneous, got: " + g.str());
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& IdealHandle::basis() const {
  if (!basis_) {
    throw InputError("no cached Groebner basis; compute one first");
  }
  return *basis_;
}

void compute_groebner_basis(IdealHandle& ideal, const GroebnerConfig& cfg) {
  if (ideal.basis_) return;
  Budget budget{cfg.step_budget};
  std::vector<OrdPoly> G =
      buchberger(ideal.gens_, ideal.field_, ideal.order_, budget);
  std::vector<OrdPoly> R;
  if (!G.empty()) {
    R = reduce_basis(std::move(G), ideal.field_, ideal.order_, budget);
  }
  std::vector<Polynomial> out;
  out.reserve(R.size());
  for (const OrdPoly& g : R) {
    out.push_back(to_poly(ideal.field_, ideal.num_vars_, g));
  }
  ideal.basis_ = std::move(out);
  ideal.basis_steps_ = budget.used;
}

Polynomial normal_form(const Polynomial& p, const IdealHandle& ideal,
                       const GroebnerConfig& cfg) {
  if (p.field() != ideal.field() || p.num_vars() != ideal.num_vars()) {
    throw InputError("normal form of a polynomial from a different ring");
  }
  const std::vector<Polynomial>& basis = ideal.basis();
  std::vector<OrdPoly> G;
  G.reserve(basis.size());
  for (const Polynomial& g : basis) G.push_back(to_ord(g, ideal.order()));
  Budget budget{cfg.step_budget};
  OrdPoly r =
      reduce_full(to_ord(p, ideal.order()), G, ideal.field(), ideal.order(),
                  budget);
  return to_poly(ideal.field(), ideal.num_vars(), r);
}

bool ideal_member(const Polynomial& p, const IdealHandle& ideal,
                  const GroebnerConfig& cfg) {
  return normal_form(p, ideal, cfg).is_zero();
}

bool is_zero_ideal(IdealHandle& ideal, const GroebnerConfig& cfg) {
  compute_groebner_basis(ideal, cfg);
  return ideal.basis().empty();
}

bool is_unit_ideal(IdealHandle& ideal, const GroebnerConfig& cfg) {
  compute_groebner_basis(ideal, cfg);
  const std::vector<Polynomial>& basis = ideal.basis();
  return !basis.empty() && basis.front().is_constant();
}

int krull_dimension(IdealHandle& ideal, const GroebnerConfig& cfg) {
  compute_groebner_basis(ideal, cfg);
  if (ideal.num_vars() > 64) {
    throw InputError("dimension computation supports at most 64 variables");
  }
  if (is_unit_ideal(ideal, cfg)) {
    throw EmptySchemeError("unit ideal defines the empty scheme");
  }
  std::vector<std::uint64_t> supports;
  supports.reserve(ideal.basis().size());
  for (const Polynomial& g : ideal.basis()) {
    supports.push_back(g.terms().front().mono.support_mask());
  }
  // dim R/I equals dim of the leading term ideal; a variable set is
  // independent iff it misses every leading support entirely.
  return ideal.num_vars() - min_hitting_set(supports, ideal.num_vars());
}

int height(IdealHandle& ideal, const GroebnerConfig& cfg) {
  return ideal.num_vars() - krull_dimension(ideal, cfg);
}

}  // namespace detchain
