#pragma once

#include <memory>
#include <optional>

#include "coringlab/coring.hpp"

namespace coringlab {

// M* (x)_B M for a (B,A)-bimodule M with M_A finitely generated projective.
struct ComatrixCoring {
  Bimodule m;
  DualBasis basis;
  std::shared_ptr<const TensorSpace> space;  // M* (x)_B M
  Coring coring;
};

// Delta(phi (x) m) = sum_i phi (x) e_i (x) e_i* (x) m, counit phi (x) m -> phi(m).
// Throws NotProjective when M_A has no dual basis.
ComatrixCoring comatrix_coring(const Bimodule& m);
ComatrixCoring comatrix_coring(const Bimodule& m, const DualBasis& basis);

// Compares the coproduct built from the standard dual basis with the one built
// from alternative; throws InvalidInput if alternative is not a dual basis.
bool coproduct_basis_independence(const Bimodule& m, const DualBasis& alternative);

// N an (A,B)-bimodule and M a (B,A)-bimodule with sigma : N (x)_B M -> A and
// tau : B -> M (x)_A N.
struct CoringContext {
  Bimodule n;
  Bimodule m;
  std::shared_ptr<const TensorSpace> nm;  // N (x)_B M
  std::shared_ptr<const TensorSpace> mn;  // M (x)_A N
  Mat sigma;                              // dim A x dim(N (x) M)
  Mat tau;                                // dim(M (x) N) x dim B

  const AlgebraPtr& a_alg() const { return n.left_algebra(); }
  const AlgebraPtr& b_alg() const { return m.left_algebra(); }
};

// Builds the two tensor spaces and validates: throws AxiomViolation when a map
// is not a bimodule map or a triangle identity fails.
CoringContext make_context(const Bimodule& n, const Bimodule& m, Mat sigma, Mat tau);
void validate_context(const CoringContext& ctx);

struct MoritaData {
  Bimodule n;
  Bimodule m;
  std::shared_ptr<const TensorSpace> nm;  // N (x)_B M
  std::shared_ptr<const TensorSpace> mn;  // M (x)_A N
  Mat sigma;                              // N (x)_B M -> A
  Mat tau_tilde;                          // M (x)_A N -> B
};

// Checks both maps are bimodule maps and both associativity rules on basis
// triples; throws AxiomViolation otherwise.
MoritaData make_morita(const Bimodule& n, const Bimodule& m, Mat sigma, Mat tau_tilde);

// N = M*, sigma = evaluation, tau(b) = sum_i b e_i (x) e_i*.
CoringContext context_from_bimodule(const Bimodule& m);
// Nothing when tau_tilde is not surjective; otherwise tau is its inverse.
std::optional<CoringContext> context_from_morita(const MoritaData& md);

struct ContextDualBasis {
  DualBasis basis;     // m_k and sigma(n_k (x) -) from tau(1) = sum_k m_k (x) n_k
  BimoduleMap chi;     // N -> M*, n -> sigma(n (x) -)
  BimoduleMap chi_inv; // phi -> sum_k phi(m_k) n_k
};

ContextDualBasis context_dual_basis(const CoringContext& ctx);

// N (x)_B M with n (x) m -> n (x) tau(1) (x) m and counit sigma.
Coring context_coring(const CoringContext& ctx);

struct ContextIso {
  Coring context;
  ComatrixCoring comatrix;
  CoringMorphism forward;   // chi (x) M
  CoringMorphism backward;  // phi (x) m -> sum_k phi(m_k) n_k (x) m
};

// Both directions verified as coring morphisms composing to identities.
ContextIso context_iso(const CoringContext& ctx);

struct AntiIso {
  DualRing dual_ring;  // *(M* (x)_B M)
  Endomorphisms endo;  // left B-linear endomorphisms of M, opposite composition
  Mat xi;              // dim(endo) x dim(dual ring) in the two coordinate systems
  Mat xi_inverse;
};

// xi(phi)(m) = sum_i e_i phi(e_i* (x) m); verified bijective with
// xi(phi phi') = xi(phi) o xi(phi') as maps, i.e. xi(phi') * xi(phi) in the
// opposite-composition ring. Throws InternalInconsistency on failure.
AntiIso left_dual_anti_iso(const Bimodule& m);

struct SweedlerComatrixIso {
  SweedlerCoring sweedler;
  ComatrixCoring comatrix;
  CoringMorphism forward;   // a (x) a' -> (x -> a x) (x) a'
  CoringMorphism backward;  // phi (x) a -> phi(1) (x) a
};

// A viewed as a (B,A)-bimodule along f; both directions verified.
SweedlerComatrixIso sweedler_comatrix_iso(const AlgebraMap& f);

}  // namespace coringlab
