#include "detchain/field.hpp"

#include <cstdlib>

#include "detchain/errors.hpp"

namespace detchain {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; a must be in 1..p-1 with p prime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, p);
}

const mpq_class& as_q(const Coeff& c) { return std::get<mpq_class>(c); }
std::int64_t as_p(const Coeff& c) { return std::get<std::int64_t>(c); }

}  // namespace

bool is_prime_word(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_word(p)) {
    throw InputError("field characteristic must be a prime below 2^31, got " +
                     std::to_string(p));
  }
  return Field(FieldKind::PrimeField, p);
}

Coeff Field::zero() const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(0));
  return Coeff(std::int64_t{0});
}

Coeff Field::one() const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(1));
  return Coeff(std::int64_t{1});
}

Coeff Field::from_int(long long v) const {
  if (kind_ == FieldKind::Rationals) {
    mpq_class q;
    q = mpz_class(std::to_string(v));
    return Coeff(q);
  }
  return Coeff(mod_reduce(static_cast<std::int64_t>(v % p_), p_));
}

Coeff Field::from_mpz(const mpz_class& v) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(v));
  mpz_class r = v % p_;
  std::int64_t w = r.get_si();
  return Coeff(mod_reduce(w, p_));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(as_q(a) + as_q(b)));
  return Coeff(mod_reduce(as_p(a) + as_p(b), p_));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(as_q(a) - as_q(b)));
  return Coeff(mod_reduce(as_p(a) - as_p(b), p_));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(as_q(a) * as_q(b)));
  return Coeff(mod_reduce(as_p(a) * as_p(b), p_));  // p < 2^31 keeps this in range
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw InputError("division by zero in coefficient field");
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(1 / as_q(a)));
  return Coeff(mod_inverse(as_p(a), p_));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(-as_q(a)));
  return Coeff(mod_reduce(-as_p(a), p_));
}

bool Field::is_zero(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return sgn(as_q(a)) == 0;
  return as_p(a) == 0;
}

bool Field::is_one(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return as_q(a) == 1;
  return as_p(a) == 1;
}

bool Field::equal(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return as_q(a) == as_q(b);
  return as_p(a) == as_p(b);
}

Coeff Field::sample(SplitMix64& rng) const {
  if (kind_ == FieldKind::Rationals) {
    // Small integers keep coefficient growth in check downstream.
    return from_int(static_cast<long long>(rng.below(19)) - 9);
  }
  return Coeff(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p_))));
}

Coeff Field::sample_nonzero(SplitMix64& rng) const {
  if (kind_ == FieldKind::Rationals) {
    long long v = static_cast<long long>(rng.below(18)) - 9;
    if (v >= 0) ++v;  // skip zero, range -9..-1, 1..9
    return from_int(v);
  }
  return Coeff(static_cast<std::int64_t>(
      1 + rng.below(static_cast<std::uint64_t>(p_ - 1))));
}

std::string Field::str(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return as_q(a).get_str();
  return std::to_string(as_p(a));
}

std::string Field::name() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "F_" + std::to_string(p_);
}

}  // namespace detchain
