#include "hopfcoh/field.hpp"

#include <charconv>

namespace hopfcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::checked(std::int64_t characteristic) {
  if (characteristic == 0) return FieldSpec{0};
  if (characteristic < 0 || characteristic >= (std::int64_t{1} << 31) || !is_prime(characteristic))
    throw Error("field characteristic must be 0 or a prime below 2^31, got " +
                std::to_string(characteristic));
  return FieldSpec{static_cast<std::uint32_t>(characteristic)};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 0) throw Error("characteristic 0 has no prime-field arithmetic; use the rational path");
  if (p >= (1u << 31) || !is_prime(p)) throw Error("not a prime below 2^31: " + std::to_string(p));
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

namespace {

Elem parse_integer(const PrimeField& f, std::string_view text) {
  if (text.empty()) throw Error("empty scalar literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error("malformed scalar literal '" + std::string(text) + "'");
  // Digit-by-digit reduction keeps arbitrarily long literals exact.
  Elem acc = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw Error("malformed scalar literal '" + std::string(text) + "'");
    acc = f.add(f.mul(acc, 10 % f.p()), static_cast<Elem>((c - '0') % f.p()));
  }
  return negative ? f.neg(acc) : acc;
}

}  // namespace

Elem PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_integer(*this, text);
  Elem num = parse_integer(*this, text.substr(0, slash));
  Elem den = parse_integer(*this, text.substr(slash + 1));
  if (den == 0) throw Error("denominator vanishes mod " + std::to_string(p_) + " in '" + std::string(text) + "'");
  return mul(num, inv(den));
}

}  // namespace hopfcoh
