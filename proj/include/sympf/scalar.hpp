#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sympf {

using Rational = mpq_class;

// Always "a/b", with b = 1 for integers.
std::string format_rational(const Rational& q);
// Accepts "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& q);
Rational factorial(int k);
bool is_prime(std::uint64_t p);

class RationalField {
 public:
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_rational(const Rational& q) const { return q; }
};

// Z/pZ with residues kept in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem from_integer(const mpz_class& z) const;
  // Throws UsageError when the denominator vanishes mod p.
  Elem from_rational(const Rational& q) const;

 private:
  std::uint64_t p_;
};

// Choice of coefficient field: the rationals, or F_p for a prime p.
struct FieldSpec {
  std::uint64_t prime = 0;  // 0 selects the rationals

  bool is_rational() const { return prime == 0; }
  std::string to_string() const;  // "q" or "fp:P"
  static FieldSpec parse(std::string_view text);
  // Throws UsageError unless the field is Q, or p is prime with p > r.
  void require_valid_for(int r) const;
};

}  // namespace sympf
