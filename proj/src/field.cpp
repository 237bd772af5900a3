#include "coringlab/field.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "coringlab/detail/field_ops.hpp"

namespace coringlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

mpz_class parse_integer(std::string_view text) {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && s.size() > 1))) ok = false;
  }
  if (!ok) throw InvalidInput("malformed integer '" + std::string(text) + "'");
  return mpz_class(s);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "Q" || s == "QQ") return rationals();
  std::string_view digits;
  if (s.substr(0, 2) == "F_") {
    digits = s.substr(2);
  } else if (s.substr(0, 3) == "GF(" && s.size() > 4 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else {
    throw InvalidInput("unknown field '" + std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || end != digits.data() + digits.size())
    throw InvalidInput("unknown field '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.value_ = Rational(mpz_class(std::to_string(v)));
  } else {
    long long r = v % static_cast<long long>(f.characteristic());
    if (r < 0) r += f.characteristic();
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.value_ = q;
    s.value_.canonicalize();
    return s;
  }
  detail::PrimeOps ops{f.characteristic()};
  std::uint32_t den = reduce_mod(q.get_den(), ops.p);
  if (den == 0) throw InvalidInput("denominator of " + q.get_str() + " vanishes in " + f.name());
  s.residue_ = ops.mul(reduce_mod(q.get_num(), ops.p), ops.inv(den));
  return s;
}

Scalar Scalar::from_residue(const Field& f, std::uint32_t r) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational())
    s.value_ = r;
  else
    s.residue_ = r % f.characteristic();
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string_view s = trim(text);
  if (auto pos = s.find("mod"); pos != std::string_view::npos) {
    if (f.is_rational()) throw InvalidInput("residue '" + std::string(text) + "' given over Q");
    mpz_class modulus = parse_integer(s.substr(pos + 3));
    if (modulus != f.characteristic())
      throw FieldMismatch("residue '" + std::string(text) + "' does not belong to " + f.name());
    return from_rational(f, Rational(parse_integer(s.substr(0, pos))));
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash));
    mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return from_rational(f, Rational(num, den));
  }
  return from_rational(f, Rational(parse_integer(s)));
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(value_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? value_ == 1 : residue_ == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.value_ = 1 / value_;
  else
    s.residue_ = detail::PrimeOps{field_.characteristic()}.inv(residue_);
  return s;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return value_.get_str();
  return std::to_string(residue_) + " mod " + std::to_string(field_.characteristic());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.value_ = -value_;
  else
    s.residue_ = detail::PrimeOps{field_.characteristic()}.neg(residue_);
  return s;
}

namespace {

template <class Fn>
Scalar combine(const Scalar& a, const Scalar& b, Fn&& fn) {
  require_same_field(a.field(), b.field());
  return detail::with_ops(a.field(), [&](auto ops) {
    return ops.to(a.field(), fn(ops, ops.from(a), ops.from(b)));
  });
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](auto ops, const auto& x, const auto& y) { return ops.add(x, y); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](auto ops, const auto& x, const auto& y) { return ops.sub(x, y); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](auto ops, const auto& x, const auto& y) { return ops.mul(x, y); });
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_field(a.field(), b.field());
  return a.field().is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

}  // namespace coringlab
