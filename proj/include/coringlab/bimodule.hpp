#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/algebra.hpp"

namespace coringlab {

// A (B,A)-bimodule with B = left_algebra() and A = right_algebra(). Column m
// of left_action(b) holds the coordinates of b_b . e_m, column m of
// right_action(a) those of e_m . a_a.
class Bimodule {
 public:
  Bimodule() = default;
  // Validated construction; throws AxiomViolation with the failing indices.
  static Bimodule create(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                         std::vector<Mat> right_action, std::string name = {});
  // Construction without axiom checks, for structures induced by verified
  // constructions (tensor products, duals).
  static Bimodule unchecked(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                            std::vector<Mat> right_action, std::string name = {});
  static Bimodule regular(const AlgebraPtr& a);

  bool valid() const { return static_cast<bool>(d_); }
  const AlgebraPtr& left_algebra() const { return d_->left; }
  const AlgebraPtr& right_algebra() const { return d_->right; }
  const Field& field() const { return d_->left->field(); }
  std::size_t dim() const { return d_->dim; }
  const std::string& name() const { return d_->name; }
  const Mat& left_action(std::size_t b) const { return d_->left_action[b]; }
  const Mat& right_action(std::size_t a) const { return d_->right_action[a]; }
  const std::vector<Mat>& left_actions() const { return d_->left_action; }
  const std::vector<Mat>& right_actions() const { return d_->right_action; }
  Mat left_act(const Vec& b) const;
  Mat right_act(const Vec& a) const;
  Vec act_left(const Vec& b, const Vec& m) const { return left_act(b) * m; }
  Vec act_right(const Vec& m, const Vec& a) const { return right_act(a) * m; }
  Vec basis(std::size_t i) const { return Vec::unit(field(), dim(), i); }

  // Throws AxiomViolation when a module law fails.
  void validate() const;
  Bimodule renamed(std::string name) const;
  // Pull back the left (resp. right) action along f : X -> current algebra.
  Bimodule restrict_left(const AlgebraMap& f) const;
  Bimodule restrict_right(const AlgebraMap& f) const;
  // Replace one side by the base field acting through scalars.
  Bimodule forget_left() const;
  Bimodule forget_right() const;

  bool same_structure(const Bimodule& o) const;

 private:
  struct Data {
    AlgebraPtr left;
    AlgebraPtr right;
    std::size_t dim = 0;
    std::vector<Mat> left_action;
    std::vector<Mat> right_action;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

// M as a quotient of the free left module B^r: generators g_k, a particular
// expression m_j = sum_k alpha_jk g_k for every basis vector (column j of
// expression holds the alpha_jk in blocks of dim(B)), and a basis of the
// relation module {kappa in B^r : sum_k kappa_k g_k = 0}.
struct LeftPresentation {
  std::vector<Vec> generators;
  Mat expression;  // (r * dim B) x dim M
  std::vector<Vec> relations;
};

// Generators are chosen greedily by the dimension they add; basis vectors are
// preferred, then a few fixed-seed random vectors are tried.
LeftPresentation left_presentation(const Bimodule& m);

struct BimoduleMap {
  Bimodule source;
  Bimodule target;
  Mat matrix;  // target.dim x source.dim

  Vec apply(const Vec& x) const { return matrix * x; }
};

bool is_bimodule_map(const BimoduleMap& f);
// Requires matching algebras on both sides; throws AlgebraMismatch otherwise.
void require_same_sides(const Bimodule& m, const Bimodule& n, const std::string& context);

// One-sided dual of a bimodule M. For the right dual M* = Hom_A(M, A) the
// functionals are dim(A) x dim(M) matrices; for the left dual *M = Hom_B(M, B)
// they are dim(B) x dim(M) matrices. Both duals are (A,B)-bimodules.
struct Dual {
  Bimodule module;
  Bimodule source;
  bool right = true;
  Kernel space;  // flattened functional matrices

  std::size_t codomain_dim() const;
  Mat map(const Vec& coords) const;
  Vec coordinates(const Mat& functional) const;
  Vec evaluate(const Vec& phi, const Vec& m) const { return map(phi) * m; }
};

// (a.phi.b)(m) = a phi(b m)
Dual right_dual(const Bimodule& m);
// (a.phi.b)(m) = phi(m a) b
Dual left_dual(const Bimodule& m);

// Elements e_i of M with functionals phi_i such that x = sum_i e_i phi_i(x)
// (right) or x = sum_i phi_i(x) e_i (left).
struct DualBasis {
  Dual dual;
  std::vector<Vec> elements;
  std::vector<Vec> functionals;  // coordinates in dual.module

  const Bimodule& module() const { return dual.source; }
  std::size_t size() const { return elements.size(); }
};

bool verify_dual_basis(const DualBasis& db);
// Uses the field basis of M as generators, so absence means M is not finitely
// generated projective on that side.
std::optional<DualBasis> dual_basis(const Bimodule& m);
std::optional<DualBasis> left_dual_basis(const Bimodule& m);
// Dual basis with prescribed elements (must generate M on the right).
std::optional<DualBasis> dual_basis_for(const Bimodule& m, const std::vector<Vec>& elements);
// Checks the identity and throws InvalidInput when it fails.
DualBasis make_dual_basis(const Bimodule& m, std::vector<Vec> elements, std::vector<Vec> functionals);

struct Endomorphisms {
  AlgebraPtr algebra;
  Kernel space;         // flattened endomorphism matrices
  AlgebraMap from_left;  // left algebra of M -> algebra
  Bimodule module;      // M with the endomorphisms acting

  std::size_t module_dim() const { return module.dim(); }
  Mat map(const Vec& coords) const;
  Vec coordinates(const Mat& endo) const;
};

// S = End_A(M) with composition (st)(m) = s(t(m)); module is M as an
// (S,A)-bimodule and from_left is B -> S, b -> (m -> bm).
Endomorphisms endomorphism_algebra(const Bimodule& m);
// End_B(M) with the opposite composition (f*g)(m) = g(f(m)); module is M as
// a (B,E)-bimodule via m.f = f(m), and from_left is A -> E, a -> (m -> ma).
Endomorphisms left_endomorphism_algebra(const Bimodule& m);

struct HomSpace {
  Bimodule source;
  Bimodule target;
  Kernel space;  // flattened target.dim x source.dim matrices

  std::size_t dim() const { return space.dim(); }
  BimoduleMap map(std::size_t i) const;
  Mat matrix(const Vec& coords) const;
  std::vector<BimoduleMap> basis() const;
};

HomSpace hom_space(const Bimodule& m, const Bimodule& n);
std::vector<BimoduleMap> hom_bimodule(const Bimodule& m, const Bimodule& n);

enum class IsoVerdict { Found, ProvenAbsent, Inconclusive };

std::string to_string(IsoVerdict v);

struct IsoSearch {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<BimoduleMap> iso;
  std::string method;
};

struct IsoSearchOptions {
  std::uint64_t seed = 0;
  std::size_t attempts = 32;
  std::uint64_t enumeration_budget = std::uint64_t{1} << 20;
};

// Identity first, then seeded random elements of the hom space, then (over
// F_p with p^h within budget) exhaustive enumeration, which makes a negative
// answer exact.
IsoSearch random_bimodule_iso(const Bimodule& m, const Bimodule& n, const IsoSearchOptions& opts = {});

}  // namespace coringlab
