#pragma once

#include <optional>
#include <vector>

#include "coringlab/bimodule.hpp"

namespace coringlab {

struct TensorOptions {
  // Build the induced outer bimodule structure. Triple tensor products used
  // only as comparison spaces can skip it.
  bool induce_actions = true;
};

// M (x)_A N for an (X,A)-bimodule M and an (A,Y)-bimodule N.
//
// N is presented as a quotient of the free left module A^r on generators
// g_1..g_r, which identifies M (x)_A N with M^r modulo the images m.kappa of
// the relations kappa in A^r. An element is stored in "ambient" form as r
// slots in M (slot k holds the M-component paired with g_k) and reduced
// against the echelon form of the relations. Quotient basis vector q is the
// non-pivot ambient position (k, i) and stands for e_i (x) g_k.
class TensorSpace {
 public:
  TensorSpace(const Bimodule& m, const Bimodule& n, TensorOptions opts = {});

  const Bimodule& left_factor() const { return m_; }
  const Bimodule& right_factor() const { return n_; }
  const Field& field() const { return m_.field(); }
  std::size_t dim() const { return free_.size(); }
  std::size_t generator_count() const { return gens_.size(); }
  const std::vector<Vec>& generators() const { return gens_; }
  std::size_t ambient_dim() const { return gens_.size() * m_.dim(); }
  bool has_module() const { return module_.valid(); }
  // Induced (X,Y)-bimodule; throws when built without actions.
  const Bimodule& module() const;

  std::size_t slot_of(std::size_t q) const { return free_[q] / m_.dim(); }
  std::size_t left_index_of(std::size_t q) const { return free_[q] % m_.dim(); }
  Vec section_left(std::size_t q) const { return m_.basis(left_index_of(q)); }
  const Vec& section_right(std::size_t q) const { return gens_[slot_of(q)]; }

  // Coefficients alpha_k in A with n = sum_k alpha_k g_k (a particular choice).
  std::vector<Vec> express(const Vec& n) const;
  Vec ambient_pure(const Vec& m, const Vec& n) const;
  Vec pure(const Vec& m, const Vec& n) const { return project(ambient_pure(m, n)); }
  // Matrix of n -> m (x) n (dim x N.dim) and of m -> m (x) n (dim x M.dim).
  Mat left_fixed(const Vec& m) const;
  Mat right_fixed(const Vec& n) const;

  Vec project(const Vec& ambient) const;
  Mat project_columns(const Mat& ambient) const;
  Vec section(const Vec& q) const;
  // Slot k of the section of q, an element of M.
  Vec section_slot(const Vec& q, std::size_t k) const { return section(q).slice(k * m_.dim(), m_.dim()); }
  const RowReducer& relations() const { return rel_; }
  QuotientPresentation presentation() const;

 private:
  Bimodule m_, n_;
  std::vector<Vec> gens_;
  Mat expr_;  // (r * dimA) x dimN: column j expresses basis vector n_j
  RowReducer rel_;
  std::vector<std::size_t> free_;
  std::optional<Mat> dense_projection_;
  Bimodule module_;
};

// (f (x) g) : M (x) N -> M' (x) N' as a matrix in quotient coordinates.
Mat tensor_maps(const TensorSpace& src, const TensorSpace& dst, const Mat& f, const Mat& g);

// The linear map M (x) N -> k^rows with values[x][y] on e_x (x) f_y. Throws
// InvalidInput when the values are not balanced.
Mat tensor_map_from_values(const TensorSpace& t, std::size_t rows, const std::vector<std::vector<Vec>>& values);

// The canonical identification M (x)_A M* = End_A(M) and its inverse
// s -> sum_i s(e_i) (x) e_i*.
struct SIso {
  Endomorphisms endo;
  DualBasis basis;
  TensorSpace tensor;  // M (x)_A M* as an (S,S)-bimodule
  Mat forward;         // tensor -> S
  Mat backward;        // S -> tensor
};

// Throws NotProjective when M_A has no dual basis.
SIso canonical_s_iso(const Bimodule& m);
// The three product rules of the identification, checked on basis elements.
bool check_s_iso_product_rules(const SIso& iso);

}  // namespace coringlab
