#include "coringlab/linalg.hpp"

#include <algorithm>
#include <variant>

#include "coringlab/detail/field_ops.hpp"

namespace coringlab {

namespace {

template <class Ops>
class Echelon {
 public:
  using E = typename Ops::Elem;

  Echelon(Ops ops, std::size_t dim) : ops_(ops), dim_(dim) {}

  void reduce_in_place(std::vector<E>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (ops_.is_zero(v[p])) continue;
      E c = ops_.neg(v[p]);
      const auto& row = rows_[r];
      for (std::size_t j = p; j < dim_; ++j)
        if (!ops_.is_zero(row[j])) ops_.fma(v[j], c, row[j]);
    }
  }

  bool insert(std::vector<E> v) {
    reduce_in_place(v);
    std::size_t lead = 0;
    while (lead < dim_ && ops_.is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    E inv = ops_.inv(v[lead]);
    for (std::size_t j = lead; j < dim_; ++j) v[j] = ops_.mul(v[j], inv);
    for (auto& row : rows_) {
      if (ops_.is_zero(row[lead])) continue;
      E c = ops_.neg(row[lead]);
      for (std::size_t j = lead; j < dim_; ++j)
        if (!ops_.is_zero(v[j])) ops_.fma(row[j], c, v[j]);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<E>& row(std::size_t r) const { return rows_[r]; }
  std::size_t rank() const { return rows_.size(); }

 private:
  Ops ops_;
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<E>> rows_;
};

using AnyEchelon = std::variant<Echelon<detail::PrimeOps>, Echelon<detail::RationalOps>>;

AnyEchelon make_echelon(const Field& f, std::size_t dim) {
  if (f.is_rational()) return Echelon<detail::RationalOps>(detail::RationalOps{}, dim);
  return Echelon<detail::PrimeOps>(detail::PrimeOps{f.characteristic()}, dim);
}

}  // namespace

struct RowReducer::Impl {
  AnyEchelon ech;
};

RowReducer::RowReducer(const Field& f, std::size_t dim)
    : field_(f), dim_(dim), impl_(std::make_unique<Impl>(Impl{make_echelon(f, dim)})) {}
RowReducer::RowReducer(const RowReducer& o)
    : field_(o.field_), dim_(o.dim_), impl_(std::make_unique<Impl>(*o.impl_)) {}
RowReducer& RowReducer::operator=(const RowReducer& o) {
  if (this != &o) {
    field_ = o.field_;
    dim_ = o.dim_;
    impl_ = std::make_unique<Impl>(*o.impl_);
  }
  return *this;
}
RowReducer::RowReducer(RowReducer&&) noexcept = default;
RowReducer& RowReducer::operator=(RowReducer&&) noexcept = default;
RowReducer::~RowReducer() = default;

std::size_t RowReducer::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->ech);
}

bool RowReducer::insert(const Vec& v) {
  require_same_field(field_, v.field());
  if (v.size() != dim_) throw DimensionMismatch("row length does not match reducer dimension");
  return std::visit(
      [&](auto& e) {
        using E = typename std::decay_t<decltype(e)>::E;
        return e.insert(v.raw<E>());
      },
      impl_->ech);
}

Vec RowReducer::reduce(const Vec& v) const {
  require_same_field(field_, v.field());
  if (v.size() != dim_) throw DimensionMismatch("vector length does not match reducer dimension");
  Vec out = v;
  std::visit(
      [&](const auto& e) {
        using E = typename std::decay_t<decltype(e)>::E;
        e.reduce_in_place(out.raw<E>());
      },
      impl_->ech);
  return out;
}

const std::vector<std::size_t>& RowReducer::pivots() const {
  return std::visit([](const auto& e) -> const std::vector<std::size_t>& { return e.pivots(); },
                    impl_->ech);
}

std::vector<std::size_t> RowReducer::free_columns() const {
  const auto& piv = pivots();
  std::vector<std::size_t> out;
  std::size_t r = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (r < piv.size() && piv[r] == j)
      ++r;
    else
      out.push_back(j);
  }
  return out;
}

Vec RowReducer::row(std::size_t r) const {
  Vec out(field_, dim_);
  std::visit(
      [&](const auto& e) {
        using E = typename std::decay_t<decltype(e)>::E;
        out.raw<E>() = e.row(r);
      },
      impl_->ech);
  return out;
}

Vec RowReducer::quotient_coordinates(const Vec& v) const {
  Vec red = reduce(v);
  auto fc = free_columns();
  Vec out(field_, fc.size());
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& src = red.raw<E>();
    auto& dst = out.raw<E>();
    for (std::size_t k = 0; k < fc.size(); ++k) dst[k] = src[fc[k]];
  });
  return out;
}

QuotientPresentation quotient_by(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& relations) {
  RowReducer red(f, ambient_dim);
  for (const auto& r : relations) red.insert(r);
  QuotientPresentation q;
  q.ambient_dim = ambient_dim;
  for (std::size_t r = 0; r < red.rank(); ++r) q.relation_basis.push_back(red.row(r));
  auto fc = red.free_columns();
  q.quotient_dim = fc.size();
  q.projection = Mat(f, fc.size(), ambient_dim);
  q.section = Mat(f, ambient_dim, fc.size());
  const auto& piv = red.pivots();
  for (std::size_t k = 0; k < fc.size(); ++k) {
    q.projection.set(k, fc[k], Scalar::one(f));
    q.section.set(fc[k], k, Scalar::one(f));
    for (std::size_t r = 0; r < piv.size(); ++r) {
      Scalar c = q.relation_basis[r].at(fc[k]);
      if (!c.is_zero()) q.projection.set(k, piv[r], -c);
    }
  }
  return q;
}

Vec Kernel::coordinates(const Vec& x) const {
  Vec out(x.field(), coordinate_columns.size());
  for (std::size_t k = 0; k < coordinate_columns.size(); ++k) out.set(k, x.at(coordinate_columns[k]));
  return out;
}

Vec Kernel::combine(const Vec& coords) const {
  if (coords.size() != basis.size()) throw DimensionMismatch("kernel coordinates have wrong length");
  if (basis.empty()) throw DimensionMismatch("combination in a zero-dimensional kernel has no ambient size");
  Vec out(coords.field(), basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) out.axpy(coords.at(k), basis[k]);
  return out;
}

Kernel kernel(const Mat& a) {
  RowReducer red(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) red.insert(a.row(i));
  Kernel k;
  k.coordinate_columns = red.free_columns();
  const auto& piv = red.pivots();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < piv.size(); ++r) rows.push_back(red.row(r));
  for (std::size_t f : k.coordinate_columns) {
    Vec x = Vec::unit(a.field(), a.cols(), f);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      Scalar c = rows[r].at(f);
      if (!c.is_zero()) x.set(piv[r], -c);
    }
    k.basis.push_back(std::move(x));
  }
  return k;
}

std::vector<Vec> kernel_basis(const Mat& a) { return kernel(a).basis; }

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
  std::size_t n = a.cols();
  RowReducer red(a.field(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) red.insert(Vec::concat(a.field(), {a.row(i), b.row(i)}));
  Mat x(a.field(), n, b.cols());
  const auto& piv = red.pivots();
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= n) return std::nullopt;
    x.set_row(piv[r], red.row(r).slice(n, b.cols()));
  }
  return x;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  auto x = solve_linear(a, Mat::from_columns(b.field(), b.size(), {b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

QuotientPresentation cokernel(const Mat& a) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return quotient_by(a.field(), a.rows(), cols);
}

std::size_t rank(const Mat& a) {
  RowReducer red(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) red.insert(a.row(i));
  return red.rank();
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_linear(a, Mat::identity(a.field(), a.rows()));
}

}  // namespace coringlab
