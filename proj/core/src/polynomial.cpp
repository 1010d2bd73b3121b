#include "detchain/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) {
    throw InputError("polynomial arithmetic across different fields");
  }
  if (a.num_vars() != b.num_vars()) {
    throw InputError("polynomial arithmetic across different variable counts");
  }
}

}  // namespace

Polynomial Polynomial::constant(const Field& field, int num_vars,
                                const Coeff& c) {
  std::vector<Term> ts;
  if (!field.is_zero(c)) ts.push_back(Term{Monomial(num_vars), c});
  return from_terms(field, num_vars, std::move(ts));
}

Polynomial Polynomial::variable(const Field& field, int num_vars, int v) {
  return from_terms(field, num_vars,
                    {Term{Monomial::variable(num_vars, v), field.one()}});
}

Polynomial Polynomial::from_terms(const Field& field, int num_vars,
                                  std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.num_vars() != num_vars) {
      throw InputError("term monomial has wrong variable count");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_term_less(b.mono, a.mono);
  });
  Polynomial p(field, num_vars);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Canonical order is degree-first, so the front term carries the degree.
  return static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.degree();
  return terms_.back().mono.degree() == d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_compatible(*this, other);
  Polynomial r(field_, num_vars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.mono == b.mono) {
      Coeff c = field_.add(a.coeff, b.coeff);
      if (!field_.is_zero(c)) r.terms_.push_back(Term{a.mono, std::move(c)});
      ++i;
      ++j;
    } else if (canonical_term_less(b.mono, a.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other.negated();
}

Polynomial Polynomial::negated() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (field_.is_zero(c)) return Polynomial(field_, num_vars_);
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  if (field_.is_zero(c)) return Polynomial(field_, num_vars_);
  Polynomial r(field_, num_vars_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a fixed monomial preserves the canonical term order.
  for (const Term& t : terms_) {
    r.terms_.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_compatible(*this, other);
  if (is_zero() || other.is_zero()) return Polynomial(field_, num_vars_);
  Polynomial acc(field_, num_vars_);
  for (const Term& t : other.terms_) {
    acc = acc + mul_term(t.coeff, t.mono);
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (field_ != other.field_ || num_vars_ != other.num_vars_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono) return false;
    if (!field_.equal(terms_[i].coeff, other.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string cs = field_.str(t.coeff);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += mag;
    } else if (mag == "1") {
      out += t.mono.str();
    } else {
      out += mag + "*" + t.mono.str();
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the integer-coefficient grammar.
class PolyParser {
 public:
  PolyParser(const Field& field, int num_vars, std::string_view text)
      : field_(field), num_vars_(num_vars), text_(text) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at position " +
                     std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial parse_expr() {
    bool neg = false;
    if (consume('-')) {
      neg = true;
    } else {
      consume('+');
    }
    Polynomial acc = parse_term();
    if (neg) acc = acc.negated();
    while (true) {
      if (consume('+')) {
        acc = acc + parse_term();
      } else if (consume('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (consume('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (consume('^')) {
      mpz_class e = parse_integer();
      if (e < 0 || e > 4096) fail("exponent out of range");
      unsigned long k = e.get_ui();
      Polynomial acc = Polynomial::constant(field_, num_vars_, field_.one());
      for (unsigned long i = 0; i < k; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      mpz_class idx = parse_integer();
      if (idx < 0 || idx >= num_vars_) {
        fail("variable x" + idx.get_str() + " out of range, have " +
             std::to_string(num_vars_) + " variables");
      }
      return Polynomial::variable(field_, num_vars_,
                                  static_cast<int>(idx.get_si()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(field_, num_vars_,
                                  field_.from_mpz(parse_integer()));
    }
    fail("expected a number, variable, or '('");
  }

  Field field_;
  int num_vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Field& field, int num_vars,
                            std::string_view text) {
  return PolyParser(field, num_vars, text).run();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return a + b;
    case PolyOp::Sub:
      return a - b;
    case PolyOp::Mul:
      return a * b;
  }
  throw InputError("unknown polynomial operation");
}

}  // namespace detchain
