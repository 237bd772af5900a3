#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "coringlab/linalg.hpp"

namespace coringlab {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional associative unital algebra given by structure
// constants: b_i * b_j = sum_k products[i][j][k] b_k.
class Algebra {
 public:
  // Validates associativity on every basis triple and the unit law; throws
  // AxiomViolation naming the first failing indices.
  static AlgebraPtr create(const Field& f, std::vector<std::vector<Vec>> products, Vec unit,
                           std::string name = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Vec& unit() const { return unit_; }
  Vec basis(std::size_t i) const { return Vec::unit(field_, dim_, i); }
  Vec zero() const { return Vec(field_, dim_); }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  Vec multiply(const Vec& x, const Vec& y) const;

  // Column j of left_mult(i) is b_i b_j; column j of right_mult(i) is b_j b_i.
  const Mat& left_mult(std::size_t i) const { return left_[i]; }
  const Mat& right_mult(std::size_t i) const { return right_[i]; }
  Mat left_mult(const Vec& x) const { return combine(x, left_, dim_, dim_); }
  Mat right_mult(const Vec& x) const { return combine(x, right_, dim_, dim_); }
  const std::vector<Mat>& left_mults() const { return left_; }
  const std::vector<Mat>& right_mults() const { return right_; }

  bool same_structure(const Algebra& o) const;

 private:
  Algebra() = default;
  Field field_;
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::vector<Vec>> products_;
  Vec unit_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
};

// Pointer identity or identical structure constants.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& context);

AlgebraPtr field_algebra(const Field& f);
// M_n(k) on the matrix units E_ij, stored at index i*n + j.
AlgebraPtr matrix_algebra(std::size_t n, const Field& f);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

// Basis of the center, as the kernel of x -> (b_i x - x b_i)_i.
std::vector<Vec> center_basis(const Algebra& a);

struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Mat matrix;  // target.dim x source.dim

  Vec apply(const Vec& x) const { return matrix * x; }
};

AlgebraMap identity_map(const AlgebraPtr& a);
// Unit embedding k -> A.
AlgebraMap unit_map(const AlgebraPtr& a);
bool check_algebra_map(const AlgebraMap& f);

// The smallest subalgebra containing gens, on an echelon basis, with its
// inclusion into a.
AlgebraMap generated_subalgebra(const AlgebraPtr& a, const std::vector<Vec>& gens, std::string name = {});

}  // namespace coringlab
