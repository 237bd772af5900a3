#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "coringlab/matrix.hpp"

namespace coringlab {

// Incrementally maintained reduced row echelon form. Pivots are the first
// nonzero column of each row, rows are normalized to a leading 1 and every
// pivot column is cleared in all other rows, so the stored rows are exactly
// the RREF of everything inserted so far.
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t dim);
  RowReducer(const RowReducer&);
  RowReducer& operator=(const RowReducer&);
  RowReducer(RowReducer&&) noexcept;
  RowReducer& operator=(RowReducer&&) noexcept;
  ~RowReducer();

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const;
  // Returns false when v already lies in the span.
  bool insert(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  const std::vector<std::size_t>& pivots() const;
  std::vector<std::size_t> free_columns() const;
  Vec row(std::size_t r) const;
  // Entries of reduce(v) at the free columns: coordinates in the quotient
  // by the span, relative to the standard complement.
  Vec quotient_coordinates(const Vec& v) const;

 private:
  struct Impl;
  Field field_;
  std::size_t dim_;
  std::unique_ptr<Impl> impl_;
};

struct QuotientPresentation {
  std::size_t ambient_dim = 0;
  std::vector<Vec> relation_basis;
  std::size_t quotient_dim = 0;
  Mat projection;  // quotient_dim x ambient_dim
  Mat section;     // ambient_dim x quotient_dim
};

// Quotient of k^ambient_dim by the span of the given relations.
QuotientPresentation quotient_by(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& relations);

// Solution space of a.x = 0 together with the columns whose entries give
// coordinates of a kernel vector in this basis.
struct Kernel {
  std::vector<Vec> basis;
  std::vector<std::size_t> coordinate_columns;
  std::size_t dim() const { return basis.size(); }
  Vec coordinates(const Vec& x) const;
  Vec combine(const Vec& coords) const;
};

Kernel kernel(const Mat& a);
std::vector<Vec> kernel_basis(const Mat& a);
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);
QuotientPresentation cokernel(const Mat& a);
std::size_t rank(const Mat& a);
std::optional<Mat> inverse(const Mat& a);

}  // namespace coringlab
