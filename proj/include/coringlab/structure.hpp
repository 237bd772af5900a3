#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/comatrix.hpp"

namespace coringlab {

// Splitting of the evaluation M (x)_A *M -> B, m (x) phi -> phi(m).
struct Separability {
  Dual left_dual;                            // *M
  std::shared_ptr<const TensorSpace> space;  // M (x)_A *M
  Mat evaluation;                            // dim B x dim(space)
  Vec element;                               // B-central, evaluates to 1
  BimoduleMap nu;                            // b -> b . element
};

// Exact: nothing means no (B,B)-bimodule splitting exists.
std::optional<Separability> is_separable_bimodule(const Bimodule& m);

struct FrobeniusBimodule {
  Truth verdict = Truth::Inconclusive;
  std::optional<BimoduleMap> theta;  // M* -> *M
  std::string method;
};

FrobeniusBimodule is_frobenius_bimodule(const Bimodule& m, std::uint64_t seed);

// A (B,B)-bimodule map s : S -> B with s(1) = 1, if one exists.
std::optional<BimoduleMap> split_extension_check(const AlgebraMap& f);

struct FrobeniusExtension {
  Truth verdict = Truth::Inconclusive;
  std::optional<BimoduleMap> iso;  // Hom_B(S, B) -> S as (B,S)-bimodules
  std::string method;
};

FrobeniusExtension frobenius_extension_check(const AlgebraMap& f, std::uint64_t seed);

// (M* separable, comatrix coring cosplit); throws InternalInconsistency when
// they differ.
std::pair<bool, bool> cosplit_equivalence(const Bimodule& m);

// The rings and corings shared by the lifting constructions. All S coordinates
// come from one endomorphism algebra, and the Sweedler coring is the one of
// B -> S.
struct LiftSetting {
  ComatrixCoring comatrix;
  SIso s_iso;  // M (x)_A M* = S
  SweedlerCoring sweedler;

  const AlgebraPtr& s_alg() const { return s_iso.endo.algebra; }
  const AlgebraMap& b_to_s() const { return s_iso.endo.from_left; }
  // The element of S corresponding to m (x) phi, i.e. x -> m phi(x).
  Vec s_element(const Vec& m, const Vec& phi) const;
};

LiftSetting lift_setting(const Bimodule& m);

// Sugano's map s(f) = sum_k phi_k(f(m_k)) for the separability element
// sum_k m_k (x) phi_k; a (B,B)-bimodule map S -> B with s(1) = 1.
BimoduleMap split_from_separability(const LiftSetting& ls, const Separability& sep);

// e~ = sum_{i,a} e_i (x) w_a* (x) w_a (x) e_i* for e = sum_a w_a* (x) w_a.
// Throws InvalidInput unless e is a cosplit element of the comatrix coring.
Vec lift_cosplit(const LiftSetting& ls, const Vec& e);

// gamma(phi (x) m (x) phi' (x) m') = phi(s(m (x) phi') m'). Throws InvalidInput
// unless s is a normalized (B,B)-bimodule map S -> B.
Cointegral cointegral_from_split(const LiftSetting& ls, const BimoduleMap& s);
Cointegral cointegral_from_separability(const LiftSetting& ls, const Separability& sep);

// gamma~ = M (x) gamma (x) M* on S (x)_B S (x)_B S. Throws InvalidInput unless
// gamma is a pre-cointegral of the comatrix coring.
Mat lift_precointegral(const LiftSetting& ls, const Mat& gamma);
Cointegral lift_cointegral(const LiftSetting& ls, const Cointegral& gamma);
FrobeniusSystem lift_frobenius_system(const LiftSetting& ls, const FrobeniusSystem& fs);

// iota(phi (x) m)(x) = theta(phi)(x) m, from the comatrix coring onto the
// left B-linear endomorphisms of M.
struct Iota {
  Endomorphisms endo;  // End(_B M), opposite composition
  Mat matrix;          // dim(endo) x dim(comatrix coring)
};

// Verified bijective, left A-linear (iota(a c) = iota(c) o a) and right
// linear for (phi (x) m) . r = phi (x) r(m). Throws InvalidInput when theta
// is not an (A,B)-bimodule isomorphism M* -> *M.
Iota iota_from_frobenius(const ComatrixCoring& c, const BimoduleMap& theta);

enum class Side { Left, Right };

std::string to_string(Side s);

// Projective generator test for S as a one-sided B-module.
bool faithfully_flat_check(const AlgebraMap& f, Side side);

struct WilliardCheck {
  Truth verdict = Truth::Inconclusive;
  std::string method;
  std::optional<BimoduleMap> iso;            // Hom_A(M, A) -> Hom_S(M, S)
  std::vector<Vec> generator_elements;       // m_k with sum phi_k(m_k) = 1
  std::vector<Vec> generator_functionals;    // phi_k in M*
};

// Hom_S(M, S) = Hom_A(M, A) as (A,B)-bimodules. M_A a generator is checked
// first and suffices.
WilliardCheck williard_check(const Bimodule& m, std::uint64_t seed);

enum class FlagId {
  MSeparable,
  MStarSeparable,
  MFrobenius,
  ComatrixCosplit,
  ComatrixCoseparable,
  ComatrixFrobenius,
  ExtensionSplit,
  ExtensionFrobenius,
  SweedlerCosplit,
  SweedlerCoseparable,
  SweedlerFrobenius,
  FaithfullyFlat,
  Williard,
};

inline constexpr std::size_t kFlagCount = 13;

std::string flag_name(FlagId id);
std::optional<FlagId> flag_from_name(const std::string& name);

// Matrices (and a few vectors stored as single columns) that certify a true
// flag; check_witness rebuilds the verifier from these alone.
struct Witness {
  std::string kind;
  std::map<std::string, Mat> data;
};

struct Flag {
  Truth value = Truth::Inconclusive;
  std::string method;
  std::optional<Witness> witness;
};

enum class AuditStatus { Holds, Vacuous, Excluded, Violated };

std::string to_string(AuditStatus s);

struct AuditEntry {
  std::vector<std::string> hypotheses;
  std::string conclusion;
  std::string tag;
  AuditStatus status = AuditStatus::Excluded;
};

// Objects produced by the constructive lifts, each re-verified.
struct Construction {
  std::string name;
  bool verified = false;
  std::string detail;
};

struct AnalysisReport {
  Bimodule subject;
  std::uint64_t seed = 0;
  std::array<Flag, kFlagCount> flags;
  // Side conditions used by the audit that are not flags.
  std::map<std::string, Truth> conditions;
  std::vector<Construction> constructions;
  std::vector<AuditEntry> audit;

  const Flag& flag(FlagId id) const { return flags[static_cast<std::size_t>(id)]; }
  Flag& flag(FlagId id) { return flags[static_cast<std::size_t>(id)]; }
  bool audit_clean() const;
};

struct AnalysisOptions {
  SearchLimits limits;
};

// Runs every decider, records witnesses and the implication audit. Throws
// NotProjective when M_A has no dual basis and InternalInconsistency when a
// witness fails its verifier or a proven implication is violated.
AnalysisReport analyze(const Bimodule& m, std::uint64_t seed, const AnalysisOptions& opts = {});

// Re-verifies a witness of the given flag for M from its matrices alone.
bool check_witness(const LiftSetting& ls, FlagId id, const Witness& w);

}  // namespace coringlab
