#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

using Storage = std::variant<std::vector<std::uint32_t>, std::vector<Rational>>;

// Dense vector over a Field. Entries are stored as residues for F_p and as
// GMP rationals for Q.
class Vec {
 public:
  Vec() : Vec(Field::rationals(), 0) {}
  Vec(const Field& f, std::size_t n);

  static Vec zero(const Field& f, std::size_t n) { return Vec(f, n); }
  static Vec unit(const Field& f, std::size_t n, std::size_t i);
  static Vec from_scalars(const Field& f, const std::vector<Scalar>& entries);
  static Vec from_ints(const Field& f, std::initializer_list<long long> entries);
  static Vec concat(const Field& f, const std::vector<Vec>& parts);

  const Field& field() const { return field_; }
  std::size_t size() const { return size_; }
  Scalar at(std::size_t i) const;
  void set(std::size_t i, const Scalar& s);
  bool is_zero() const;
  // Index of the first nonzero entry, or size() when the vector is zero.
  std::size_t leading_index() const;

  Vec slice(std::size_t offset, std::size_t len) const;
  void set_slice(std::size_t offset, const Vec& v);
  void add_to_slice(std::size_t offset, const Vec& v);

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec operator-() const;
  Vec scaled(const Scalar& a) const;
  // this += a * x
  void axpy(const Scalar& a, const Vec& x);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend bool operator==(const Vec& a, const Vec& b);
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  std::vector<Scalar> entries() const;
  std::string to_string() const;

  template <class E>
  const std::vector<E>& raw() const { return std::get<std::vector<E>>(data_); }
  template <class E>
  std::vector<E>& raw() { return std::get<std::vector<E>>(data_); }

 private:
  Field field_;
  std::size_t size_ = 0;
  Storage data_;
};

// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat() : Mat(Field::rationals(), 0, 0) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat zero(const Field& f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_ints(const Field& f, std::initializer_list<std::initializer_list<long long>> rows);
  static Mat hstack(const Field& f, std::size_t rows, const std::vector<Mat>& blocks);
  static Mat vstack(const Field& f, std::size_t cols, const std::vector<Mat>& blocks);
  static Mat kron(const Mat& a, const Mat& b);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_column(std::size_t j, const Vec& v);
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  // Row-major flattening, the inverse of reshape().
  Vec flatten() const;
  static Mat reshape(const Vec& v, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool is_identity() const;
  Mat transpose() const;
  Mat scaled(const Scalar& a) const;
  // this += a * m
  void axpy(const Scalar& a, const Mat& m);

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string to_string() const;

  template <class E>
  const std::vector<E>& raw() const { return std::get<std::vector<E>>(data_); }
  template <class E>
  std::vector<E>& raw() { return std::get<std::vector<E>>(data_); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage data_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

// Linear combination sum_i coeffs[i] * mats[i]; coeffs is a coordinate vector.
Mat combine(const Vec& coeffs, const std::vector<Mat>& mats, std::size_t rows, std::size_t cols);

// Entries uniform mod p, or integers in [-8, 8] over Q.
Scalar random_scalar(const Field& f, std::mt19937_64& rng);
Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng);

}  // namespace coringlab
