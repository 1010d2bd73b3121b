#ifndef DETCHAIN_FIELD_HPP
#define DETCHAIN_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "detchain/rng.hpp"

namespace detchain {

enum class FieldKind { Rationals, PrimeField };

// One coefficient. Rationals are arbitrary-precision normalized fractions;
// prime-field elements are canonical representatives 0..p-1 in a word.
using Coeff = std::variant<mpq_class, std::int64_t>;

/// The coefficient field K: either Q or F_p for a word-size prime p.
/// All arithmetic on Coeff values goes through the owning Field so the
/// prime-field path stays in machine words.
class Field {
 public:
  static Field rationals();
  static Field prime(std::int64_t p);  // InputError unless p is prime, p < 2^31

  FieldKind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }  // 0 for Q
  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_mpz(const mpz_class& v) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;  // InputError on zero divisor
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool equal(const Coeff& a, const Coeff& b) const;

  // Uniform element / nonzero element. Q samples small integers.
  Coeff sample(SplitMix64& rng) const;
  Coeff sample_nonzero(SplitMix64& rng) const;

  std::string str(const Coeff& a) const;
  std::string name() const;  // "Q" or "F_<p>"

 private:
  Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::int64_t p_;
};

bool is_prime_word(std::int64_t p);

}  // namespace detchain

#endif
