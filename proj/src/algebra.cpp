#include "coringlab/algebra.hpp"

namespace coringlab {

AlgebraPtr Algebra::create(const Field& f, std::vector<std::vector<Vec>> products, Vec unit,
                           std::string name) {
  std::size_t n = unit.size();
  require_same_field(f, unit.field());
  if (products.size() != n) throw DimensionMismatch("structure tensor has wrong outer dimension");
  for (const auto& row : products) {
    if (row.size() != n) throw DimensionMismatch("structure tensor has wrong middle dimension");
    for (const auto& v : row) {
      require_same_field(f, v.field());
      if (v.size() != n) throw DimensionMismatch("structure tensor has wrong inner dimension");
    }
  }
  std::shared_ptr<Algebra> a(new Algebra());
  a->field_ = f;
  a->dim_ = n;
  a->name_ = std::move(name);
  a->products_ = std::move(products);
  a->unit_ = std::move(unit);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> lcols, rcols;
    for (std::size_t j = 0; j < n; ++j) {
      lcols.push_back(a->products_[i][j]);
      rcols.push_back(a->products_[j][i]);
    }
    a->left_.push_back(Mat::from_columns(f, n, lcols));
    a->right_.push_back(Mat::from_columns(f, n, rcols));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat lhs = a->left_mult(a->products_[i][j]);
      Mat rhs = a->left_[i] * a->left_[j];
      if (lhs != rhs) {
        for (std::size_t k = 0; k < n; ++k)
          if (lhs.column(k) != rhs.column(k))
            throw AxiomViolation("non-associative triple (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
      }
    }
  Mat lu = a->left_mult(a->unit_);
  Mat ru = a->right_mult(a->unit_);
  Mat id = Mat::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    if (lu.column(i) != id.column(i) || ru.column(i) != id.column(i))
      throw AxiomViolation("unit law fails at basis element " + std::to_string(i));
  return a;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const { return left_mult(x) * y; }

bool Algebra::same_structure(const Algebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && products_ == o.products_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& context) {
  if (!same_algebra(a, b)) throw AlgebraMismatch(context + ": algebras differ");
}

AlgebraPtr field_algebra(const Field& f) {
  return Algebra::create(f, {{Vec::unit(f, 1, 0)}}, Vec::unit(f, 1, 0), "k");
}

AlgebraPtr matrix_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw InvalidInput("matrix algebra of size 0");
  std::size_t d = n * n;
  std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d, Vec(f, d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) prod[i * n + j][j * n + l] = Vec::unit(f, d, i * n + l);
  Vec unit(f, d);
  for (std::size_t i = 0; i < n; ++i) unit.set(i * n + i, Scalar::one(f));
  return Algebra::create(f, std::move(prod), std::move(unit), "M_" + std::to_string(n));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::size_t n = a->dim();
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = a->product(j, i);
  return Algebra::create(a->field(), std::move(prod), a->unit(), "op(" + a->name() + ")");
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  require_same_field(a->field(), b->field());
  const Field& f = a->field();
  std::size_t n = a->dim(), m = b->dim(), d = n + m;
  std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d, Vec(f, d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i][j].set_slice(0, a->product(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[n + i][n + j].set_slice(n, b->product(i, j));
  Vec unit = Vec::concat(f, {a->unit(), b->unit()});
  return Algebra::create(f, std::move(prod), std::move(unit), "(" + a->name() + " x " + b->name() + ")");
}

std::vector<Vec> center_basis(const Algebra& a) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.dim(); ++i) blocks.push_back(a.left_mult(i) - a.right_mult(i));
  return kernel_basis(Mat::vstack(a.field(), a.dim(), blocks));
}

AlgebraMap identity_map(const AlgebraPtr& a) { return {a, a, Mat::identity(a->field(), a->dim())}; }

AlgebraMap unit_map(const AlgebraPtr& a) {
  AlgebraPtr k = field_algebra(a->field());
  return {k, a, Mat::from_columns(a->field(), a->dim(), {a->unit()})};
}

bool check_algebra_map(const AlgebraMap& f) {
  if (f.source->field() != f.target->field()) return false;
  if (f.matrix.rows() != f.target->dim() || f.matrix.cols() != f.source->dim()) return false;
  if (f.apply(f.source->unit()) != f.target->unit()) return false;
  for (std::size_t i = 0; i < f.source->dim(); ++i) {
    Vec fi = f.matrix.column(i);
    for (std::size_t j = 0; j < f.source->dim(); ++j)
      if (f.apply(f.source->product(i, j)) != f.target->multiply(fi, f.matrix.column(j))) return false;
  }
  return true;
}

AlgebraMap generated_subalgebra(const AlgebraPtr& a, const std::vector<Vec>& gens, std::string name) {
  const Field& f = a->field();
  RowReducer span(f, a->dim());
  std::vector<Vec> basis;
  auto add = [&](const Vec& v) {
    if (span.insert(v)) basis.push_back(v);
  };
  add(a->unit());
  for (const auto& g : gens) add(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& g : gens) add(a->multiply(basis[i], g));
  basis.clear();
  for (std::size_t r = 0; r < span.rank(); ++r) basis.push_back(span.row(r));
  std::size_t n = basis.size();
  Mat inc = Mat::from_columns(f, a->dim(), basis);
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = solve_linear(inc, a->multiply(basis[i], basis[j]));
      if (!c) throw InternalInconsistency("subalgebra closure is not closed");
      prod[i][j] = std::move(*c);
    }
  auto unit = solve_linear(inc, a->unit());
  if (!unit) throw InternalInconsistency("subalgebra closure misses the unit");
  AlgebraPtr b = Algebra::create(f, std::move(prod), std::move(*unit), std::move(name));
  return AlgebraMap{b, a, std::move(inc)};
}

}  // namespace coringlab

