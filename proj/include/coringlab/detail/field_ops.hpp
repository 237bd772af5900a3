#pragma once

#include <cstdint>
#include <utility>

#include "coringlab/field.hpp"

namespace coringlab::detail {

struct PrimeOps {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<Elem>(t < 0 ? t + p : t);
  }
  // y += a * x
  void fma(Elem& y, Elem a, Elem x) const {
    y = static_cast<Elem>((y + static_cast<std::uint64_t>(a) * x) % p);
  }
  Elem from(const Scalar& s) const { return s.residue(); }
  Scalar to(const Field& f, Elem a) const { return Scalar::from_residue(f, a); }
};

struct RationalOps {
  using Elem = Rational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  void fma(Elem& y, const Elem& a, const Elem& x) const { y += a * x; }
  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Field& f, const Elem& a) const { return Scalar::from_rational(f, a); }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalOps{});
  return fn(PrimeOps{f.characteristic()});
}

}  // namespace coringlab::detail
