#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/tensor.hpp"

namespace coringlab {

enum class Truth { False, True, Inconclusive };

std::string to_string(Truth t);

// An A-coring: an (A,A)-bimodule C with coproduct C -> C (x)_A C and counit
// C -> A, stored in the quotient coordinates of cc().
class Coring {
 public:
  // Validates bimodule-map properties, both counit laws and coassociativity;
  // throws AxiomViolation naming the first failing basis element.
  static Coring create(const Bimodule& carrier, Mat coproduct, Mat counit, std::string name = {});
  static Coring create(std::shared_ptr<const TensorSpace> cc, Mat coproduct, Mat counit, std::string name = {});

  const AlgebraPtr& base() const { return carrier().left_algebra(); }
  const Bimodule& carrier() const { return cc_->left_factor(); }
  const Field& field() const { return carrier().field(); }
  std::size_t dim() const { return carrier().dim(); }
  const TensorSpace& cc() const { return *cc_; }
  const std::shared_ptr<const TensorSpace>& cc_ptr() const { return cc_; }
  const Mat& coproduct() const { return coproduct_; }
  const Mat& counit() const { return counit_; }
  const std::string& name() const { return name_; }

  // Ambient (slot) form of the section of Delta(c) for every basis c:
  // rows k*dim .. (k+1)*dim - 1 hold the components paired with generator k.
  Mat coproduct_sections() const;

 private:
  Coring() = default;
  std::shared_ptr<const TensorSpace> cc_;
  Mat coproduct_;
  Mat counit_;
  std::string name_;
};

struct CoringMorphism {
  Coring source;
  Coring target;
  Mat matrix;
};

bool is_coring_morphism(const CoringMorphism& f);

// C = A with Delta(a) = a (x) 1 and counit the identity.
Coring trivial_coring(const AlgebraPtr& a);

struct SweedlerCoring {
  AlgebraMap map;
  std::shared_ptr<const TensorSpace> space;  // A (x)_B A
  Coring coring;
};

// Throws InvalidInput when f is not an algebra map.
SweedlerCoring sweedler_coring(const AlgebraMap& f);

// *C = left A-linear maps C -> A with (phi phi')(c) = sum phi(c_(1) phi'(c_(2))).
struct DualRing {
  AlgebraPtr algebra;
  Dual functionals;  // left dual of the carrier
};

DualRing left_dual_ring(const Coring& c);

// C^A = {c : a c = c a for all a}.
Kernel invariants(const Coring& c);

// A-central e with counit(e) = 1, if one exists; a -> a e is then an
// (A,A)-bimodule section of the counit.
std::optional<Vec> is_cosplit(const Coring& c);
BimoduleMap cosplit_section(const Coring& c, const Vec& e);

// gamma : C (x)_A C -> A as a dim(A) x dim(CC) matrix.
struct Cointegral {
  Mat gamma;
};

struct FrobeniusSystem {
  Mat gamma;
  Vec e;
};

// Precomputed data for evaluating the pre-cointegral identity of many maps
// on one coring.
class CointegralChecker {
 public:
  explicit CointegralChecker(const Coring& c);

  // (c (x) c') -> sum c_(1) gamma(c_(2) (x) c') - sum gamma(c (x) c'_(1)) c'_(2)
  // as a dim(C) x dim(CC) matrix.
  Mat defect(const Mat& gamma) const;
  bool is_bimodule_map(const Mat& gamma) const;
  bool is_precointegral(const Mat& gamma) const;
  bool is_cointegral(const Mat& gamma) const;
  bool is_frobenius_system(const FrobeniusSystem& fs) const;
  // gamma(c (x) e) and gamma(e (x) c) for all basis c, each dim(A) x dim(C).
  Mat right_pairing(const Mat& gamma, const Vec& e) const;
  Mat left_pairing(const Mat& gamma, const Vec& e) const;
  const Coring& coring() const { return c_; }

 private:
  Coring c_;
  std::size_t r_;
  std::vector<Mat> blocks_;             // slot blocks of the coproduct sections
  std::vector<Mat> gen_right_fixed_;     // (- (x) g_k) : C -> CC
  std::vector<std::vector<Mat>> y_right_fixed_;  // (- (x) y_{k,k'}) : C -> CC
  std::vector<Mat> gen_left_actions_;    // columns a -> b_a g_k
};

bool verify_cointegral(const Coring& c, const Cointegral& g);
bool verify_precointegral(const Coring& c, const Mat& gamma);
bool verify_frobenius_system(const Coring& c, const FrobeniusSystem& fs);

struct SearchLimits {
  // Largest dim(CC) * dim(A) for which the hom-space linear system is built.
  std::size_t max_unknowns = 4096;
  std::uint64_t enumeration_budget = std::uint64_t{1} << 16;
  std::size_t random_candidates = 64;
};

struct CointegralSearch {
  Truth verdict = Truth::Inconclusive;
  std::optional<Cointegral> cointegral;
  std::string method;
};

// Basis of the space of pre-cointegrals (bimodule maps satisfying the
// pre-cointegral identity), or nothing when the system exceeds the limits.
std::optional<std::vector<Mat>> precointegral_basis(const Coring& c, const SearchLimits& limits = {});
CointegralSearch find_cointegral(const Coring& c, const SearchLimits& limits = {});

struct FrobeniusSearch {
  Truth verdict = Truth::Inconclusive;
  std::optional<FrobeniusSystem> system;
  std::string method;
};

// Enumerates e over C^A when small, then tries seeded random e, then looks
// for an (A,R)-bimodule isomorphism C = R with R the opposite of *C.
FrobeniusSearch find_frobenius_system(const Coring& c, std::uint64_t seed, const SearchLimits& limits = {});
// The isomorphism criterion alone; the system is derived from the iso.
FrobeniusSearch frobenius_by_isomorphism(const Coring& c, std::uint64_t seed);

}  // namespace coringlab
