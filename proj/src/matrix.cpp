#include "coringlab/matrix.hpp"

#include <ostream>
#include <sstream>

#include "coringlab/detail/field_ops.hpp"

namespace coringlab {

namespace {

using detail::PrimeOps;
using detail::RationalOps;

Storage make_storage(const Field& f, std::size_t n) {
  if (f.is_rational()) return std::vector<Rational>(n);
  return std::vector<std::uint32_t>(n, 0);
}

void require_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

// c[0..n) += a * b[0..n) for one row, with deferred reduction for small primes.
void prime_row_product(const PrimeOps& ops, const std::uint32_t* arow, std::size_t inner,
                       const std::uint32_t* b, std::size_t bcols, std::uint32_t* out,
                       std::vector<std::uint64_t>& acc) {
  acc.assign(bcols, 0);
  if (ops.p < (1u << 16)) {
    for (std::size_t t = 0; t < inner; ++t) {
      std::uint64_t a = arow[t];
      if (a == 0) continue;
      const std::uint32_t* brow = b + t * bcols;
      for (std::size_t j = 0; j < bcols; ++j) acc[j] += a * brow[j];
    }
    for (std::size_t j = 0; j < bcols; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % ops.p);
  } else {
    for (std::size_t t = 0; t < inner; ++t) {
      std::uint64_t a = arow[t];
      if (a == 0) continue;
      const std::uint32_t* brow = b + t * bcols;
      for (std::size_t j = 0; j < bcols; ++j) acc[j] = (acc[j] + a * brow[j]) % ops.p;
    }
    for (std::size_t j = 0; j < bcols; ++j) out[j] = static_cast<std::uint32_t>(acc[j]);
  }
}

}  // namespace

Vec::Vec(const Field& f, std::size_t n) : field_(f), size_(n), data_(make_storage(f, n)) {}

Vec Vec::unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v(f, n);
  v.set(i, Scalar::one(f));
  return v;
}

Vec Vec::from_scalars(const Field& f, const std::vector<Scalar>& entries) {
  Vec v(f, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, entries[i]);
  return v;
}

Vec Vec::from_ints(const Field& f, std::initializer_list<long long> entries) {
  Vec v(f, entries.size());
  std::size_t i = 0;
  for (long long e : entries) v.set(i++, Scalar::from_int(f, e));
  return v;
}

Vec Vec::concat(const Field& f, const std::vector<Vec>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  Vec v(f, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    v.set_slice(off, p);
    off += p.size();
  }
  return v;
}

Scalar Vec::at(std::size_t i) const {
  return detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    return ops.to(field_, raw<E>().at(i));
  });
}

void Vec::set(std::size_t i, const Scalar& s) {
  require_same_field(field_, s.field());
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    raw<E>().at(i) = ops.from(s);
  });
}

bool Vec::is_zero() const { return leading_index() == size_; }

std::size_t Vec::leading_index() const {
  return detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    for (std::size_t i = 0; i < size_; ++i)
      if (!ops.is_zero(d[i])) return i;
    return size_;
  });
}

Vec Vec::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > size_) throw DimensionMismatch("slice out of range");
  Vec v(field_, len);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = raw<E>();
    std::copy(s.begin() + offset, s.begin() + offset + len, v.raw<E>().begin());
  });
  return v;
}

void Vec::set_slice(std::size_t offset, const Vec& v) {
  require_same_field(field_, v.field_);
  if (offset + v.size_ > size_) throw DimensionMismatch("slice out of range");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = v.raw<E>();
    std::copy(s.begin(), s.end(), raw<E>().begin() + offset);
  });
}

void Vec::add_to_slice(std::size_t offset, const Vec& v) {
  require_same_field(field_, v.field_);
  if (offset + v.size_ > size_) throw DimensionMismatch("slice out of range");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = v.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < s.size(); ++i) d[offset + i] = ops.add(d[offset + i], s[i]);
  });
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_field(field_, o.field_);
  require_size(size_, o.size_, "vector sum");
  add_to_slice(0, o);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_field(field_, o.field_);
  require_size(size_, o.size_, "vector difference");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = o.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < size_; ++i) d[i] = ops.sub(d[i], s[i]);
  });
  return *this;
}

Vec Vec::operator-() const {
  Vec v = *this;
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    for (auto& x : v.raw<E>()) x = ops.neg(x);
  });
  return v;
}

Vec Vec::scaled(const Scalar& a) const {
  require_same_field(field_, a.field());
  Vec v = *this;
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    E s = ops.from(a);
    for (auto& x : v.raw<E>()) x = ops.mul(s, x);
  });
  return v;
}

void Vec::axpy(const Scalar& a, const Vec& x) {
  require_same_field(field_, x.field_);
  require_same_field(field_, a.field());
  require_size(size_, x.size_, "axpy");
  if (a.is_zero()) return;
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    E s = ops.from(a);
    const auto& xs = x.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < size_; ++i)
      if (!ops.is_zero(xs[i])) ops.fma(d[i], s, xs[i]);
  });
}

bool operator==(const Vec& a, const Vec& b) {
  require_same_field(a.field_, b.field_);
  return a.size_ == b.size_ && a.data_ == b.data_;
}

std::vector<Scalar> Vec::entries() const {
  std::vector<Scalar> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::string Vec::to_string() const {
  std::ostringstream os;
  os << '(';
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) os << ", ";
      if constexpr (std::is_same_v<E, Rational>)
        os << d[i].get_str();
      else
        os << d[i];
    }
  });
  os << ')';
  return os.str();
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(make_storage(f, rows * cols)) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Mat Mat::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Mat Mat::from_ints(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Mat m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_size(row.size(), c, "ragged matrix literal");
    std::size_t j = 0;
    for (long long e : row) m.set(i, j++, Scalar::from_int(f, e));
    ++i;
  }
  return m;
}

Mat Mat::hstack(const Field& f, std::size_t rows, const std::vector<Mat>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_size(b.rows_, rows, "hstack rows");
    cols += b.cols_;
  }
  Mat m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(0, off, b);
    off += b.cols_;
  }
  return m;
}

Mat Mat::vstack(const Field& f, std::size_t cols, const std::vector<Mat>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_size(b.cols_, cols, "vstack columns");
    rows += b.rows_;
  }
  Mat m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(off, 0, b);
    off += b.rows_;
  }
  return m;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_);
  Mat m(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  detail::with_ops(a.field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& ad = a.raw<E>();
    const auto& bd = b.raw<E>();
    auto& md = m.raw<E>();
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const E& x = ad[i * a.cols_ + j];
        if (ops.is_zero(x)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            md[(i * b.rows_ + k) * m.cols_ + j * b.cols_ + l] = ops.mul(x, bd[k * b.cols_ + l]);
      }
  });
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    return ops.to(field_, raw<E>()[i * cols_ + j]);
  });
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& s) {
  require_same_field(field_, s.field());
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    raw<E>()[i * cols_ + j] = ops.from(s);
  });
}

Vec Mat::row(std::size_t i) const {
  if (i >= rows_) throw DimensionMismatch("row index out of range");
  Vec v(field_, cols_);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    std::copy(d.begin() + i * cols_, d.begin() + (i + 1) * cols_, v.raw<E>().begin());
  });
  return v;
}

Vec Mat::column(std::size_t j) const {
  if (j >= cols_) throw DimensionMismatch("column index out of range");
  Vec v(field_, rows_);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    auto& out = v.raw<E>();
    for (std::size_t i = 0; i < rows_; ++i) out[i] = d[i * cols_ + j];
  });
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  require_same_field(field_, v.field());
  require_size(v.size(), cols_, "row length");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = v.raw<E>();
    std::copy(s.begin(), s.end(), raw<E>().begin() + i * cols_);
  });
}

void Mat::set_column(std::size_t j, const Vec& v) {
  require_same_field(field_, v.field());
  require_size(v.size(), rows_, "column length");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = v.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < rows_; ++i) d[i * cols_ + j] = s[i];
  });
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Mat m(field_, nr, nc);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    auto& out = m.raw<E>();
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out[i * nc + j] = d[(r0 + i) * cols_ + c0 + j];
  });
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require_same_field(field_, b.field_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& s = b.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = s[i * b.cols_ + j];
  });
}

Vec Mat::flatten() const {
  Vec v(field_, rows_ * cols_);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    v.raw<E>() = raw<E>();
  });
  return v;
}

Mat Mat::reshape(const Vec& v, std::size_t rows, std::size_t cols) {
  require_size(v.size(), rows * cols, "reshape");
  Mat m(v.field(), rows, cols);
  detail::with_ops(v.field(), [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    m.raw<E>() = v.raw<E>();
  });
  return m;
}

bool Mat::is_zero() const {
  return detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    for (const auto& x : raw<E>())
      if (!ops.is_zero(x)) return false;
    return true;
  });
}

bool Mat::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

Mat Mat::transpose() const {
  Mat m(field_, cols_, rows_);
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    const auto& d = raw<E>();
    auto& out = m.raw<E>();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = d[i * cols_ + j];
  });
  return m;
}

Mat Mat::scaled(const Scalar& a) const {
  return reshape(flatten().scaled(a), rows_, cols_);
}

void Mat::axpy(const Scalar& a, const Mat& m) {
  require_same_field(field_, m.field_);
  require_size(rows_, m.rows_, "matrix axpy rows");
  require_size(cols_, m.cols_, "matrix axpy cols");
  if (a.is_zero()) return;
  detail::with_ops(field_, [&](auto ops) {
    using E = typename decltype(ops)::Elem;
    E s = ops.from(a);
    const auto& src = m.raw<E>();
    auto& d = raw<E>();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!ops.is_zero(src[i])) ops.fma(d[i], s, src[i]);
  });
}

Mat& Mat::operator+=(const Mat& o) {
  axpy(Scalar::one(field_), o);
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  axpy(-Scalar::one(field_), o);
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_);
  require_size(a.cols_, b.rows_, "matrix product");
  Mat c(a.field_, a.rows_, b.cols_);
  if (a.field_.is_rational()) {
    const auto& ad = a.raw<Rational>();
    const auto& bd = b.raw<Rational>();
    auto& cd = c.raw<Rational>();
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const Rational& x = ad[i * a.cols_ + t];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& y = bd[t * b.cols_ + j];
          if (sgn(y) != 0) cd[i * b.cols_ + j] += x * y;
        }
      }
  } else {
    PrimeOps ops{a.field_.characteristic()};
    const auto& ad = a.raw<std::uint32_t>();
    const auto& bd = b.raw<std::uint32_t>();
    auto& cd = c.raw<std::uint32_t>();
    std::vector<std::uint64_t> acc;
    for (std::size_t i = 0; i < a.rows_; ++i)
      prime_row_product(ops, ad.data() + i * a.cols_, a.cols_, bd.data(), b.cols_,
                        cd.data() + i * b.cols_, acc);
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  require_same_field(a.field_, v.field());
  require_size(a.cols_, v.size(), "matrix-vector product");
  Vec out(a.field_, a.rows_);
  if (a.field_.is_rational()) {
    const auto& ad = a.raw<Rational>();
    const auto& vd = v.raw<Rational>();
    auto& od = out.raw<Rational>();
    for (std::size_t t = 0; t < a.cols_; ++t) {
      if (sgn(vd[t]) == 0) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        const Rational& x = ad[i * a.cols_ + t];
        if (sgn(x) != 0) od[i] += x * vd[t];
      }
    }
  } else {
    PrimeOps ops{a.field_.characteristic()};
    const auto& ad = a.raw<std::uint32_t>();
    const auto& vd = v.raw<std::uint32_t>();
    auto& od = out.raw<std::uint32_t>();
    bool small = ops.p < (1u << 16);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const std::uint32_t* row = ad.data() + i * a.cols_;
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < a.cols_; ++t) {
        acc += static_cast<std::uint64_t>(row[t]) * vd[t];
        if (!small) acc %= ops.p;
      }
      od[i] = static_cast<std::uint32_t>(acc % ops.p);
    }
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_);
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << row(i).to_string();
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.to_string(); }

Mat combine(const Vec& coeffs, const std::vector<Mat>& mats, std::size_t rows, std::size_t cols) {
  require_size(coeffs.size(), mats.size(), "linear combination");
  Mat out(coeffs.field(), rows, cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Scalar c = coeffs.at(i);
    if (!c.is_zero()) out.axpy(c, mats[i]);
  }
  return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uint64_t r = rng();
  if (f.is_rational()) return Scalar::from_int(f, static_cast<long long>(r % 17) - 8);
  return Scalar::from_residue(f, static_cast<std::uint32_t>(r % f.characteristic()));
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v(f, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, random_scalar(f, rng));
  return v;
}

}  // namespace coringlab

