#include "sympf/scalar.hpp"

#include <charconv>

#include "sympf/errors.hpp"

namespace sympf {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw UsageError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw UsageError("malformed rational: '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 62)) throw UsageError("prime too large: " + std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2).
  Elem result = 1, base = a;
  for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& z) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p_);
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const {
  Elem den = from_integer(q.get_den());
  if (den == 0) throw UsageError("denominator divisible by p=" + std::to_string(p_));
  return mul(from_integer(q.get_num()), inv(den));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(prime);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return FieldSpec{};
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw UsageError("malformed field spec: '" + std::string(text) + "'");
    }
    return FieldSpec{p};
  }
  throw UsageError("field must be 'q' or 'fp:P', got '" + std::string(text) + "'");
}

void FieldSpec::require_valid_for(int r) const {
  if (is_rational()) return;
  if (!is_prime(prime)) throw UsageError("field modulus " + std::to_string(prime) + " is not prime");
  if (prime <= static_cast<std::uint64_t>(r)) {
    throw UsageError("prime field needs p > r (p=" + std::to_string(prime) + ", r=" + std::to_string(r) + ")");
  }
  if (prime >= (std::uint64_t{1} << 62)) throw UsageError("prime too large");
}

}  // namespace sympf
