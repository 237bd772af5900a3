#pragma once

#include <cstdint>
#include <random>

#include "coringlab/bimodule.hpp"

namespace coringlab::testing {

inline Field F2() { return Field::prime(2); }
inline Field F3() { return Field::prime(3); }
inline Field QQ() { return Field::rationals(); }

// k[x]/(x^2) on the basis {1, x}.
inline AlgebraPtr dual_numbers(const Field& f) {
  Vec one = Vec::unit(f, 2, 0), x = Vec::unit(f, 2, 1), zero(f, 2);
  return Algebra::create(f, {{one, x}, {x, zero}}, one, "k[x]/x^2");
}

// Upper triangular 2x2 matrices on the basis {E11, E12, E22}.
inline AlgebraPtr upper_triangular(const Field& f) {
  Vec e11 = Vec::unit(f, 3, 0), e12 = Vec::unit(f, 3, 1), e22 = Vec::unit(f, 3, 2), z(f, 3);
  return Algebra::create(f, {{e11, e12, z}, {z, z, e12}, {z, z, e22}}, e11 + e22, "T_2");
}

// k^n with both actions scalar.
inline Bimodule kn_bimodule(std::size_t n, const Field& f) {
  AlgebraPtr k = field_algebra(f);
  return Bimodule::create(k, k, n, {Mat::identity(f, n)}, {Mat::identity(f, n)}, "k^" + std::to_string(n));
}

// k as a (k[x]/x^2, k)-bimodule with x acting as zero.
inline Bimodule dual_number_module(const Field& f) {
  AlgebraPtr b = dual_numbers(f);
  AlgebraPtr k = field_algebra(f);
  return Bimodule::create(b, k, 1, {Mat::identity(f, 1), Mat(f, 1, 1)}, {Mat::identity(f, 1)}, "k_eps");
}

// Row vectors k^{1 x n} as a (k, M_n)-bimodule: e_l E_ij = delta_li e_j.
inline Bimodule row_module(std::size_t n, const Field& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr mn = matrix_algebra(n, f);
  std::vector<Mat> right;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat r(f, n, n);
      r.set(j, i, Scalar::one(f));
      right.push_back(r);
    }
  return Bimodule::create(k, mn, n, {Mat::identity(f, n)}, right, "rows");
}

// Column vectors k^{n x 1} as an (M_n, k)-bimodule: E_ij e_l = delta_jl e_i.
inline Bimodule column_module(std::size_t n, const Field& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr mn = matrix_algebra(n, f);
  std::vector<Mat> left;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat l(f, n, n);
      l.set(i, j, Scalar::one(f));
      left.push_back(l);
    }
  return Bimodule::create(mn, k, n, left, {Mat::identity(f, n)}, "cols");
}

// Diagonal embedding k -> k x k.
inline AlgebraMap diagonal_map(const Field& f) {
  AlgebraPtr k = field_algebra(f);
  AlgebraPtr kk = direct_product(k, k);
  return {k, kk, Mat::from_columns(f, 2, {kk->unit()})};
}

// A viewed as a (B,A)-bimodule along f : B -> A.
inline Bimodule regular_along(const AlgebraMap& f) {
  return Bimodule::regular(f.target).restrict_left(f).renamed("A");
}

inline Mat random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c,
                         unsigned density_percent = 60) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (rng() % 100 >= density_percent) continue;
      if (f.is_rational())
        m.set(i, j, Scalar::from_rational(f, Rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3)));
      else
        m.set(i, j, Scalar::from_residue(f, static_cast<std::uint32_t>(rng() % f.characteristic())));
    }
  return m;
}

}  // namespace coringlab::testing
