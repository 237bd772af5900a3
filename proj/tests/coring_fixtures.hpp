#pragma once

#include <functional>

#include "coringlab/coring.hpp"
#include "fixtures.hpp"

namespace coringlab::testing {

// Basis c_ij of k^{n x n} at index i*n + j, Delta(c_ij) = sum_k c_ik (x) c_kj,
// counit c_ij -> delta_ij, written out by hand.
inline Coring matrix_coring(std::size_t n, const Field& f) {
  Bimodule c = kn_bimodule(n * n, f).renamed("C_" + std::to_string(n));
  auto cc = std::make_shared<const TensorSpace>(c, c);
  Mat delta(f, cc->dim(), n * n), eps(f, 1, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec col(f, cc->dim());
      for (std::size_t k = 0; k < n; ++k) col += cc->pure(c.basis(i * n + k), c.basis(k * n + j));
      delta.set_column(i * n + j, col);
      if (i == j) eps.set(0, i * n + j, Scalar::one(f));
    }
  return Coring::create(cc, delta, eps, "C_" + std::to_string(n));
}

// The map M (x) N -> k^rows determined by its values on pure tensors of basis
// elements; solves against the pure tensors, which span M (x) N.
inline Mat tensor_map_from_pure(const TensorSpace& t, std::size_t rows,
                                const std::function<Vec(std::size_t, std::size_t)>& value) {
  const Field& f = t.field();
  const Bimodule& m = t.left_factor();
  const Bimodule& n = t.right_factor();
  std::vector<Vec> pures, vals;
  for (std::size_t x = 0; x < m.dim(); ++x)
    for (std::size_t y = 0; y < n.dim(); ++y) {
      pures.push_back(t.pure(m.basis(x), n.basis(y)));
      vals.push_back(value(x, y));
    }
  Mat p = Mat::from_columns(f, t.dim(), pures);
  Mat v = Mat::from_columns(f, rows, vals);
  auto g = solve_linear(p.transpose(), v.transpose());
  if (!g) throw InvalidInput("values are not balanced");
  return g->transpose();
}

inline Mat map_from_pure(const Coring& c, const std::function<Vec(std::size_t, std::size_t)>& value) {
  return tensor_map_from_pure(c.cc(), c.base()->dim(), value);
}

}  // namespace coringlab::testing
