#include "coringlab/structure.hpp"

#include <algorithm>

#include "coringlab/error.hpp"

namespace coringlab {

namespace {

void require_consistent(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what);
}

// Rows (b . x - x . b) for every basis b of the common algebra.
Mat commutators(const Bimodule& m) {
  std::vector<Mat> blocks;
  for (std::size_t b = 0; b < m.left_algebra()->dim(); ++b) blocks.push_back(m.left_action(b) - m.right_action(b));
  return Mat::vstack(m.field(), m.dim(), blocks);
}

Mat column_matrix(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  return Mat::from_columns(f, rows, cols);
}

std::vector<Vec> columns_of(const Mat& m) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

Mat single_column(const Vec& v) { return Mat::from_columns(v.field(), v.size(), {v}); }

bool is_iso(const BimoduleMap& f) {
  return f.matrix.rows() == f.target.dim() && f.matrix.cols() == f.source.dim() && is_bimodule_map(f) &&
         inverse(f.matrix).has_value();
}

struct EvaluationSystem {
  Dual left_dual;
  std::shared_ptr<const TensorSpace> space;
  Mat evaluation;
};

EvaluationSystem evaluation_system(const Bimodule& m) {
  Dual ld = left_dual(m);
  auto space = std::make_shared<const TensorSpace>(m, ld.module);
  Mat eval(m.field(), m.left_algebra()->dim(), space->dim());
  for (std::size_t q = 0; q < space->dim(); ++q)
    eval.set_column(q, ld.map(space->section_right(q)) * space->section_left(q));
  return EvaluationSystem{std::move(ld), std::move(space), std::move(eval)};
}

bool is_separability_element(const EvaluationSystem& sys, const Vec& x) {
  if (x.size() != sys.space->dim()) return false;
  return (commutators(sys.space->module()) * x).is_zero() &&
         sys.evaluation * x == sys.space->module().left_algebra()->unit();
}

Bimodule s_as_bb(const AlgebraMap& f) { return Bimodule::regular(f.target).restrict_left(f).restrict_right(f); }

bool is_normalized_split(const AlgebraMap& f, const Mat& s) {
  if (s.rows() != f.source->dim() || s.cols() != f.target->dim()) return false;
  return is_bimodule_map({s_as_bb(f), Bimodule::regular(f.source), s}) && s * f.target->unit() == f.source->unit();
}

// S as a one-sided B-module together with its dual on that side.
struct OneSided {
  Bimodule module;
  bool left;
};

OneSided one_sided(const AlgebraMap& f, Side side) {
  Bimodule reg = Bimodule::regular(f.target);
  if (side == Side::Left) return {reg.restrict_left(f).forget_right(), true};
  return {reg.restrict_right(f).forget_left(), false};
}

// Elements m_k and functionals phi_k with sum phi_k(m_k) = 1.
std::optional<std::pair<std::vector<Vec>, std::vector<Vec>>> generator_pair(const Dual& d, const AlgebraPtr& codomain) {
  const Field& f = d.source.field();
  std::size_t n = d.module.dim(), dm = d.source.dim();
  std::vector<Mat> maps;
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < n; ++t) {
    maps.push_back(d.map(Vec::unit(f, n, t)));
    for (std::size_t i = 0; i < dm; ++i) cols.push_back(maps.back().column(i));
  }
  auto c = solve_linear(column_matrix(f, codomain->dim(), cols), codomain->unit());
  if (!c) return std::nullopt;
  std::vector<Vec> elements, functionals;
  for (std::size_t i = 0; i < dm; ++i) {
    Vec phi(f, n);
    for (std::size_t t = 0; t < n; ++t) phi.set(t, c->at(t * dm + i));
    if (phi.is_zero()) continue;
    elements.push_back(d.source.basis(i));
    functionals.push_back(std::move(phi));
  }
  return std::make_pair(std::move(elements), std::move(functionals));
}

bool generator_pair_holds(const Dual& d, const AlgebraPtr& codomain, const std::vector<Vec>& elements,
                          const std::vector<Vec>& functionals) {
  if (elements.size() != functionals.size()) return false;
  Vec acc = codomain->zero();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].size() != d.source.dim() || functionals[k].size() != d.module.dim()) return false;
    acc += d.map(functionals[k]) * elements[k];
  }
  return acc == codomain->unit();
}

Bimodule williard_target(const Bimodule& m) {
  Endomorphisms endo = endomorphism_algebra(m);
  return left_dual(endo.module).module.restrict_right(endo.from_left);
}

Truth from_iso(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Found:
      return Truth::True;
    case IsoVerdict::ProvenAbsent:
      return Truth::False;
    case IsoVerdict::Inconclusive:
      break;
  }
  return Truth::Inconclusive;
}

}  // namespace

std::optional<Separability> is_separable_bimodule(const Bimodule& m) {
  const Field& f = m.field();
  const AlgebraPtr& b = m.left_algebra();
  EvaluationSystem sys = evaluation_system(m);
  const Bimodule& t = sys.space->module();
  std::size_t d = sys.space->dim();
  Mat lhs = Mat::vstack(f, d, {commutators(t), sys.evaluation});
  Vec rhs = Vec::concat(f, {Vec(f, b->dim() * d), b->unit()});
  auto x = solve_linear(lhs, rhs);
  if (!x) return std::nullopt;
  Mat nu(f, d, b->dim());
  for (std::size_t i = 0; i < b->dim(); ++i) nu.set_column(i, t.left_action(i) * *x);
  BimoduleMap map{Bimodule::regular(b), t, nu};
  require_consistent(is_bimodule_map(map) && (sys.evaluation * nu).is_identity(),
                     "separability splitting fails verification");
  return Separability{std::move(sys.left_dual), std::move(sys.space), std::move(sys.evaluation), std::move(*x),
                      std::move(map)};
}

FrobeniusBimodule is_frobenius_bimodule(const Bimodule& m, std::uint64_t seed) {
  if (!dual_basis(m)) return {Truth::False, std::nullopt, "M_A is not finitely generated projective"};
  if (!left_dual_basis(m)) return {Truth::False, std::nullopt, "_B M is not finitely generated projective"};
  IsoSearch iso = random_bimodule_iso(right_dual(m).module, left_dual(m).module, IsoSearchOptions{seed});
  return {from_iso(iso.verdict), iso.iso, "isomorphism M* = *M (" + iso.method + ")"};
}

std::optional<BimoduleMap> split_extension_check(const AlgebraMap& f) {
  const AlgebraPtr& b = f.source;
  const AlgebraPtr& s = f.target;
  HomSpace hom = hom_space(s_as_bb(f), Bimodule::regular(b));
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < hom.dim(); ++j) cols.push_back(hom.map(j).matrix * s->unit());
  auto t = solve_linear(column_matrix(b->field(), b->dim(), cols), b->unit());
  if (!t) return std::nullopt;
  BimoduleMap out{hom.source, hom.target, hom.matrix(*t)};
  require_consistent(is_normalized_split(f, out.matrix), "split extension map fails verification");
  return out;
}

FrobeniusExtension frobenius_extension_check(const AlgebraMap& f, std::uint64_t seed) {
  Bimodule reg = Bimodule::regular(f.target);
  Bimodule ssb = reg.restrict_right(f);
  if (!dual_basis(ssb)) return {Truth::False, std::nullopt, "S_B is not finitely generated projective"};
  IsoSearch iso = random_bimodule_iso(right_dual(ssb).module, reg.restrict_left(f), IsoSearchOptions{seed});
  return {from_iso(iso.verdict), iso.iso, "isomorphism Hom_B(S, B) = S (" + iso.method + ")"};
}

std::pair<bool, bool> cosplit_equivalence(const Bimodule& m) {
  ComatrixCoring c = comatrix_coring(m);
  bool sep = is_separable_bimodule(c.basis.dual.module).has_value();
  bool cos = is_cosplit(c.coring).has_value();
  require_consistent(sep == cos, "separability of M* and cosplitness of the comatrix coring disagree");
  return {sep, cos};
}

Vec LiftSetting::s_element(const Vec& m, const Vec& phi) const {
  return s_iso.forward * s_iso.tensor.pure(m, phi);
}

LiftSetting lift_setting(const Bimodule& m) {
  ComatrixCoring c = comatrix_coring(m);
  SIso s = canonical_s_iso(m);
  SweedlerCoring sw = sweedler_coring(s.endo.from_left);
  return LiftSetting{std::move(c), std::move(s), std::move(sw)};
}

BimoduleMap split_from_separability(const LiftSetting& ls, const Separability& sep) {
  const TensorSpace& t = *sep.space;
  const Endomorphisms& endo = ls.s_iso.endo;
  const AlgebraMap& f = ls.b_to_s();
  const Field& fld = t.field();
  std::size_t dm = t.left_factor().dim(), ds = f.target->dim(), db = f.source->dim();
  Vec x = t.section(sep.element);
  std::vector<Mat> psi;
  for (const auto& g : t.generators()) psi.push_back(sep.left_dual.map(g));
  Mat s(fld, db, ds);
  for (std::size_t u = 0; u < ds; ++u) {
    Mat fu = endo.map(Vec::unit(fld, ds, u));
    Vec acc(fld, db);
    for (std::size_t k = 0; k < psi.size(); ++k) acc += psi[k] * (fu * x.slice(k * dm, dm));
    s.set_column(u, acc);
  }
  require_consistent(is_normalized_split(f, s), "map built from the separability element is not a splitting");
  return BimoduleMap{s_as_bb(f), Bimodule::regular(f.source), std::move(s)};
}

namespace {

// sum_{i,k} (e_i (x) y_k) (x) (g_k (x) e_i*) for an element sum_k y_k (x) g_k
// of M* (x)_B M.
Vec lift_element(const LiftSetting& ls, const Vec& e) {
  const TensorSpace& space = *ls.comatrix.space;
  const TensorSpace& sw = *ls.sweedler.space;
  const DualBasis& db = ls.s_iso.basis;
  std::size_t dmd = space.left_factor().dim();
  Vec sec = space.section(e);
  Vec out(space.field(), sw.dim());
  for (std::size_t k = 0; k < space.generator_count(); ++k) {
    Vec y = sec.slice(k * dmd, dmd);
    if (y.is_zero()) continue;
    const Vec& g = space.generators()[k];
    for (std::size_t i = 0; i < db.size(); ++i)
      out += sw.pure(ls.s_element(db.elements[i], y), ls.s_element(g, db.functionals[i]));
  }
  return out;
}

}  // namespace

Vec lift_cosplit(const LiftSetting& ls, const Vec& e) {
  cosplit_section(ls.comatrix.coring, e);
  Vec out = lift_element(ls, e);
  try {
    cosplit_section(ls.sweedler.coring, out);
  } catch (const InvalidInput&) {
    throw InternalInconsistency("lifted element is not a cosplit element of the Sweedler coring");
  }
  return out;
}

Cointegral cointegral_from_split(const LiftSetting& ls, const BimoduleMap& s) {
  if (!is_normalized_split(ls.b_to_s(), s.matrix))
    throw InvalidInput("not a normalized (B,B)-bimodule map S -> B");
  const Coring& c = ls.comatrix.coring;
  const TensorSpace& space = *ls.comatrix.space;
  const TensorSpace& cc = c.cc();
  const Dual& rd = ls.comatrix.basis.dual;
  const Bimodule& m = ls.comatrix.m;
  const Field& f = c.field();
  std::size_t d = c.dim(), da = c.base()->dim();
  // table[p][p'] = gamma(c_p (x) c_p') on pure representatives
  std::vector<std::vector<Vec>> table(d);
  for (std::size_t p = 0; p < d; ++p) {
    Mat phi = rd.map(space.section_left(p));
    const Vec& g = space.section_right(p);
    for (std::size_t pp = 0; pp < d; ++pp) {
      Vec b = s.matrix * ls.s_element(g, space.section_left(pp));
      table[p].push_back(phi * m.act_left(b, space.section_right(pp)));
    }
  }
  Mat gamma(f, da, cc.dim());
  for (std::size_t q = 0; q < cc.dim(); ++q) {
    std::size_t x = cc.left_index_of(q);
    const Vec& gen = cc.section_right(q);
    Vec acc(f, da);
    for (std::size_t pp = 0; pp < d; ++pp)
      if (!gen.at(pp).is_zero()) acc.axpy(gen.at(pp), table[x][pp]);
    gamma.set_column(q, acc);
  }
  require_consistent(verify_cointegral(c, Cointegral{gamma}), "cointegral built from a splitting fails verification");
  return Cointegral{std::move(gamma)};
}

Cointegral cointegral_from_separability(const LiftSetting& ls, const Separability& sep) {
  return cointegral_from_split(ls, split_from_separability(ls, sep));
}

namespace {

Mat lift_gamma(const LiftSetting& ls, const Mat& gamma) {
  const TensorSpace& space = *ls.comatrix.space;
  const TensorSpace& cc = ls.comatrix.coring.cc();
  const Endomorphisms& endo = ls.s_iso.endo;
  const DualBasis& db = ls.s_iso.basis;
  const Bimodule& m = ls.comatrix.m;
  const Algebra& s = *ls.s_alg();
  const Field& f = space.field();
  std::size_t ds = s.dim(), dm = m.dim(), n = db.size();

  std::vector<Mat> smap;
  for (std::size_t u = 0; u < ds; ++u) smap.push_back(endo.map(Vec::unit(f, ds, u)));
  // fl[l] column i = m_i (x) e_l* in S
  std::vector<Mat> fl;
  for (std::size_t l = 0; l < n; ++l) {
    Mat x(f, ds, dm);
    for (std::size_t i = 0; i < dm; ++i) x.set_column(i, ls.s_element(m.basis(i), db.functionals[l]));
    fl.push_back(std::move(x));
  }
  // w[(u*ds + v)*ds + w] = gamma~(u (x) v (x) w) on basis elements of S
  std::vector<Vec> w(ds * ds * ds, Vec(f, ds));
  for (std::size_t v = 0; v < ds; ++v)
    for (std::size_t ww = 0; ww < ds; ++ww) {
      std::vector<std::vector<Vec>> h(n, std::vector<Vec>(n));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          Vec acc(f, cc.dim());
          Vec right_end = smap[ww] * db.elements[l];
          for (std::size_t k = 0; k < n; ++k)
            acc += cc.pure(space.pure(db.functionals[j], smap[v] * db.elements[k]),
                           space.pure(db.functionals[k], right_end));
          h[j][l] = gamma * acc;
        }
      for (std::size_t u = 0; u < ds; ++u) {
        Vec acc(f, ds);
        for (std::size_t j = 0; j < n; ++j) {
          Vec x = smap[u] * db.elements[j];
          for (std::size_t l = 0; l < n; ++l)
            if (!h[j][l].is_zero()) acc += fl[l] * m.act_right(x, h[j][l]);
        }
        w[(u * ds + v) * ds + ww] = std::move(acc);
      }
    }

  const TensorSpace& sw = *ls.sweedler.space;
  const TensorSpace& swcc = ls.sweedler.coring.cc();
  std::size_t d = sw.dim();
  // table[x][p] = gamma~(a_x (x) b_x a_p (x) b_p) for carrier basis x, p
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (std::size_t x = 0; x < d; ++x) {
    std::size_t ax = sw.left_index_of(x);
    const Vec& bx = sw.section_right(x);
    for (std::size_t p = 0; p < d; ++p) {
      Vec y = s.multiply(bx, sw.section_left(p));
      const Vec& z = sw.section_right(p);
      Vec acc(f, ds);
      for (std::size_t v = 0; v < ds; ++v) {
        Scalar yv = y.at(v);
        if (yv.is_zero()) continue;
        for (std::size_t ww = 0; ww < ds; ++ww) {
          Scalar zw = z.at(ww);
          if (zw.is_zero()) continue;
          acc.axpy(yv * zw, w[(ax * ds + v) * ds + ww]);
        }
      }
      table[x][p] = std::move(acc);
    }
  }
  Mat out(f, ds, swcc.dim());
  for (std::size_t q = 0; q < swcc.dim(); ++q) {
    std::size_t x = swcc.left_index_of(q);
    const Vec& gen = swcc.section_right(q);
    Vec acc(f, ds);
    for (std::size_t p = 0; p < d; ++p)
      if (!gen.at(p).is_zero()) acc.axpy(gen.at(p), table[x][p]);
    out.set_column(q, acc);
  }
  return out;
}

}  // namespace

Mat lift_precointegral(const LiftSetting& ls, const Mat& gamma) {
  if (!verify_precointegral(ls.comatrix.coring, gamma))
    throw InvalidInput("not a pre-cointegral of the comatrix coring");
  Mat out = lift_gamma(ls, gamma);
  require_consistent(verify_precointegral(ls.sweedler.coring, out), "lifted pre-cointegral fails verification");
  return out;
}

Cointegral lift_cointegral(const LiftSetting& ls, const Cointegral& gamma) {
  if (!verify_cointegral(ls.comatrix.coring, gamma)) throw InvalidInput("not a cointegral of the comatrix coring");
  Mat out = lift_gamma(ls, gamma.gamma);
  require_consistent(verify_cointegral(ls.sweedler.coring, Cointegral{out}), "lifted cointegral fails verification");
  return Cointegral{std::move(out)};
}

FrobeniusSystem lift_frobenius_system(const LiftSetting& ls, const FrobeniusSystem& fs) {
  if (!verify_frobenius_system(ls.comatrix.coring, fs))
    throw InvalidInput("not a Frobenius system of the comatrix coring");
  FrobeniusSystem out{lift_gamma(ls, fs.gamma), lift_element(ls, fs.e)};
  require_consistent(verify_frobenius_system(ls.sweedler.coring, out), "lifted Frobenius system fails verification");
  return out;
}

Iota iota_from_frobenius(const ComatrixCoring& c, const BimoduleMap& theta) {
  const Bimodule& m = c.m;
  const Dual& rd = c.basis.dual;
  Dual ld = left_dual(m);
  if (theta.matrix.rows() != ld.module.dim() || theta.matrix.cols() != rd.module.dim() ||
      !is_iso({rd.module, ld.module, theta.matrix}))
    throw InvalidInput("theta is not an (A,B)-bimodule isomorphism M* -> *M");
  const TensorSpace& space = *c.space;
  const Field& f = m.field();
  Endomorphisms endo = left_endomorphism_algebra(m);
  std::size_t d = space.dim(), dm = m.dim();
  std::vector<Mat> maps;
  Mat iota(f, endo.algebra->dim(), d);
  for (std::size_t q = 0; q < d; ++q) {
    Mat psi = ld.map(theta.matrix * space.section_left(q));
    const Vec& g = space.section_right(q);
    Mat x(f, dm, dm);
    for (std::size_t j = 0; j < dm; ++j) x.set_column(j, m.act_left(psi.column(j), g));
    iota.set_column(q, endo.coordinates(x));
    maps.push_back(std::move(x));
  }
  require_consistent(iota.rows() == d && inverse(iota).has_value(), "iota is not bijective");
  const Bimodule& carrier = c.coring.carrier();
  for (std::size_t a = 0; a < m.right_algebra()->dim(); ++a) {
    Mat lhs = iota * carrier.left_action(a);
    for (std::size_t q = 0; q < d; ++q)
      require_consistent(lhs.column(q) == endo.coordinates(maps[q] * m.right_action(a)),
                         "iota is not left A-linear at basis element " + std::to_string(q));
  }
  Mat id = Mat::identity(f, space.left_factor().dim());
  for (std::size_t r = 0; r < endo.algebra->dim(); ++r) {
    Mat rm = endo.map(Vec::unit(f, endo.algebra->dim(), r));
    Mat lhs = iota * tensor_maps(space, space, id, rm);
    for (std::size_t q = 0; q < d; ++q)
      require_consistent(lhs.column(q) == endo.coordinates(rm * maps[q]),
                         "iota is not right linear at basis element " + std::to_string(q));
  }
  return Iota{std::move(endo), std::move(iota)};
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

struct FlatWitness {
  DualBasis basis;
  std::vector<Vec> generator_elements;
  std::vector<Vec> generator_functionals;
};

std::optional<FlatWitness> flat_witness(const AlgebraMap& f, Side side) {
  OneSided os = one_sided(f, side);
  auto db = os.left ? left_dual_basis(os.module) : dual_basis(os.module);
  if (!db) return std::nullopt;
  auto gp = generator_pair(db->dual, f.source);
  if (!gp) return std::nullopt;
  return FlatWitness{std::move(*db), std::move(gp->first), std::move(gp->second)};
}

}  // namespace

bool faithfully_flat_check(const AlgebraMap& f, Side side) { return flat_witness(f, side).has_value(); }

WilliardCheck williard_check(const Bimodule& m, std::uint64_t seed) {
  WilliardCheck out;
  Dual rd = right_dual(m);
  if (auto gp = generator_pair(rd, m.right_algebra())) {
    out.verdict = Truth::True;
    out.method = "M_A is a generator";
    out.generator_elements = std::move(gp->first);
    out.generator_functionals = std::move(gp->second);
    return out;
  }
  IsoSearch iso = random_bimodule_iso(rd.module, williard_target(m), IsoSearchOptions{seed});
  out.verdict = from_iso(iso.verdict);
  out.method = "isomorphism Hom_A(M, A) = Hom_S(M, S) (" + iso.method + ")";
  out.iso = std::move(iso.iso);
  return out;
}

namespace {

constexpr std::array<const char*, kFlagCount> kFlagNames = {
    "m_separable",      "mstar_separable",   "m_frobenius",         "comatrix_cosplit",
    "comatrix_coseparable", "comatrix_frobenius", "extension_split",  "extension_frobenius",
    "sweedler_cosplit", "sweedler_coseparable", "sweedler_frobenius", "b_s_faithfully_flat",
    "williard"};

}  // namespace

std::string flag_name(FlagId id) { return kFlagNames[static_cast<std::size_t>(id)]; }

std::optional<FlagId> flag_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (name == kFlagNames[i]) return static_cast<FlagId>(i);
  return std::nullopt;
}

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Holds:
      return "holds";
    case AuditStatus::Vacuous:
      return "vacuous";
    case AuditStatus::Excluded:
      return "excluded";
    case AuditStatus::Violated:
      return "violated";
  }
  return "?";
}

bool AnalysisReport::audit_clean() const {
  return std::none_of(audit.begin(), audit.end(), [](const AuditEntry& e) { return e.status == AuditStatus::Violated; });
}

namespace {

const Mat* entry(const Witness& w, const std::string& key) {
  auto it = w.data.find(key);
  return it == w.data.end() ? nullptr : &it->second;
}

std::optional<Vec> vector_entry(const Witness& w, const std::string& key) {
  const Mat* m = entry(w, key);
  if (!m || m->cols() != 1) return std::nullopt;
  return m->column(0);
}

bool check_cosplit(const Coring& c, const Witness& w) {
  auto e = vector_entry(w, "e");
  if (!e || e->size() != c.dim()) return false;
  try {
    cosplit_section(c, *e);
  } catch (const InvalidInput&) {
    return false;
  }
  return true;
}

bool check_cointegral(const Coring& c, const Witness& w) {
  const Mat* g = entry(w, "gamma");
  return g && g->rows() == c.base()->dim() && g->cols() == c.cc().dim() && verify_cointegral(c, Cointegral{*g});
}

bool check_frobenius(const Coring& c, const Witness& w) {
  const Mat* g = entry(w, "gamma");
  auto e = vector_entry(w, "e");
  if (!g || !e || g->rows() != c.base()->dim() || g->cols() != c.cc().dim()) return false;
  return verify_frobenius_system(c, FrobeniusSystem{*g, *e});
}

bool check_separable(const Bimodule& m, const Witness& w) {
  auto x = vector_entry(w, "element");
  return x && is_separability_element(evaluation_system(m), *x);
}

bool check_generator_pair(const Dual& d, const AlgebraPtr& codomain, const Witness& w) {
  const Mat* el = entry(w, "generator_elements");
  const Mat* fn = entry(w, "generator_functionals");
  return el && fn && generator_pair_holds(d, codomain, columns_of(*el), columns_of(*fn));
}

}  // namespace

bool check_witness(const LiftSetting& ls, FlagId id, const Witness& w) {
  const Bimodule& m = ls.comatrix.m;
  const AlgebraMap& f = ls.b_to_s();
  switch (id) {
    case FlagId::MSeparable:
      return check_separable(m, w);
    case FlagId::MStarSeparable:
      return check_separable(ls.comatrix.basis.dual.module, w);
    case FlagId::MFrobenius: {
      const Mat* t = entry(w, "theta");
      if (!t || !left_dual_basis(m)) return false;
      Bimodule ld = left_dual(m).module;
      const Bimodule& rd = ls.comatrix.basis.dual.module;
      return t->rows() == ld.dim() && t->cols() == rd.dim() && is_iso({rd, ld, *t});
    }
    case FlagId::ComatrixCosplit:
      return check_cosplit(ls.comatrix.coring, w);
    case FlagId::ComatrixCoseparable:
      return check_cointegral(ls.comatrix.coring, w);
    case FlagId::ComatrixFrobenius:
      return check_frobenius(ls.comatrix.coring, w);
    case FlagId::ExtensionSplit: {
      const Mat* s = entry(w, "s");
      return s && is_normalized_split(f, *s);
    }
    case FlagId::ExtensionFrobenius: {
      const Mat* iso = entry(w, "iso");
      Bimodule reg = Bimodule::regular(f.target);
      Bimodule ssb = reg.restrict_right(f);
      if (!iso || !dual_basis(ssb)) return false;
      Bimodule src = right_dual(ssb).module, dst = reg.restrict_left(f);
      return iso->rows() == dst.dim() && iso->cols() == src.dim() && is_iso({src, dst, *iso});
    }
    case FlagId::SweedlerCosplit:
      return check_cosplit(ls.sweedler.coring, w);
    case FlagId::SweedlerCoseparable:
      return check_cointegral(ls.sweedler.coring, w);
    case FlagId::SweedlerFrobenius:
      return check_frobenius(ls.sweedler.coring, w);
    case FlagId::FaithfullyFlat: {
      if (w.kind != "left" && w.kind != "right") return false;
      OneSided os = one_sided(f, w.kind == "left" ? Side::Left : Side::Right);
      const Mat* el = entry(w, "elements");
      const Mat* fn = entry(w, "functionals");
      if (!el || !fn) return false;
      DualBasis db{os.left ? left_dual(os.module) : right_dual(os.module), columns_of(*el), columns_of(*fn)};
      for (std::size_t i = 0; i < db.size(); ++i)
        if (db.elements[i].size() != os.module.dim() || db.functionals[i].size() != db.dual.module.dim()) return false;
      return verify_dual_basis(db) && check_generator_pair(db.dual, f.source, w);
    }
    case FlagId::Williard: {
      const Dual& rd = ls.comatrix.basis.dual;
      if (w.kind == "generator") return check_generator_pair(rd, m.right_algebra(), w);
      const Mat* iso = entry(w, "iso");
      if (w.kind != "isomorphism" || !iso) return false;
      Bimodule dst = williard_target(m);
      return iso->rows() == dst.dim() && iso->cols() == rd.module.dim() && is_iso({rd.module, dst, *iso});
    }
  }
  return false;
}

namespace {

Witness witness(std::string kind, std::map<std::string, Mat> data) { return Witness{std::move(kind), std::move(data)}; }

Flag truth_flag(bool value, std::string method, std::optional<Witness> w = std::nullopt) {
  return Flag{value ? Truth::True : Truth::False, std::move(method), value ? std::move(w) : std::nullopt};
}

struct Edge {
  std::vector<std::string> hypotheses;
  std::string conclusion;
  std::string tag;
};

const std::vector<Edge>& edges() {
  static const std::vector<Edge> e = {
      {{"mstar_separable"}, "comatrix_cosplit", "separable dual gives a cosplit comatrix coring"},
      {{"comatrix_cosplit"}, "mstar_separable", "cosplit comatrix coring gives a separable dual"},
      {{"comatrix_cosplit"}, "sweedler_cosplit", "cosplit element lifts to the Sweedler coring"},
      {{"m_separable"}, "extension_split", "separable bimodule gives a split extension"},
      {{"extension_split"}, "m_separable", "split extension gives a separable bimodule"},
      {{"m_separable"}, "comatrix_coseparable", "separable bimodule gives a coseparable comatrix coring"},
      {{"comatrix_coseparable"}, "sweedler_coseparable", "cointegral lifts to the Sweedler coring"},
      {{"extension_split"}, "sweedler_coseparable", "split extension gives a coseparable Sweedler coring"},
      {{"b_s_faithfully_flat", "sweedler_coseparable"}, "m_separable",
       "faithfully flat converse for coseparable Sweedler corings"},
      {{"m_frobenius"}, "comatrix_frobenius", "Frobenius bimodule gives a Frobenius comatrix coring"},
      {{"comatrix_frobenius"}, "sweedler_frobenius", "Frobenius system lifts to the Sweedler coring"},
      {{"m_frobenius"}, "extension_frobenius", "endomorphism ring theorem"},
      {{"extension_frobenius"}, "sweedler_frobenius", "Frobenius extension gives a Frobenius Sweedler coring"},
      {{"b_s_faithfully_flat", "sweedler_frobenius"}, "extension_frobenius",
       "faithfully flat converse for Frobenius Sweedler corings"},
      {{"m_left_projective", "williard", "extension_frobenius"}, "m_frobenius",
       "converse of the endomorphism ring theorem"},
      {{"m_left_projective", "b_s_faithfully_flat", "williard", "sweedler_frobenius"}, "m_frobenius",
       "faithfully flat converse for Frobenius bimodules"},
  };
  return e;
}

Truth lookup(const AnalysisReport& r, const std::string& name) {
  if (auto id = flag_from_name(name)) return r.flag(*id).value;
  return r.conditions.at(name);
}

AuditStatus audit_status(const AnalysisReport& r, const Edge& e) {
  bool excluded = false;
  for (const auto& h : e.hypotheses) {
    Truth t = lookup(r, h);
    if (t == Truth::False) return AuditStatus::Vacuous;
    if (t == Truth::Inconclusive) excluded = true;
  }
  Truth c = lookup(r, e.conclusion);
  if (excluded || c == Truth::Inconclusive) return AuditStatus::Excluded;
  return c == Truth::True ? AuditStatus::Holds : AuditStatus::Violated;
}

bool within(const Coring& c, const SearchLimits& limits) {
  return c.cc().dim() * c.base()->dim() <= limits.max_unknowns;
}

std::string dims(const Mat& m) { return std::to_string(m.rows()) + " x " + std::to_string(m.cols()); }

}  // namespace

AnalysisReport analyze(const Bimodule& m, std::uint64_t seed, const AnalysisOptions& opts) {
  LiftSetting ls = lift_setting(m);
  const Field& f = m.field();
  const Coring& cm = ls.comatrix.coring;
  const Coring& sw = ls.sweedler.coring;
  AnalysisReport r;
  r.subject = m;
  r.seed = seed;

  auto sep = is_separable_bimodule(m);
  r.flag(FlagId::MSeparable) = truth_flag(sep.has_value(), "splitting of the evaluation map",
                                          sep ? std::optional(witness("separability element",
                                                                      {{"element", single_column(sep->element)}}))
                                              : std::nullopt);
  auto sep_dual = is_separable_bimodule(ls.comatrix.basis.dual.module);
  r.flag(FlagId::MStarSeparable) =
      truth_flag(sep_dual.has_value(), "splitting of the evaluation map",
                 sep_dual ? std::optional(witness("separability element", {{"element", single_column(sep_dual->element)}}))
                          : std::nullopt);

  r.conditions["m_left_projective"] = left_dual_basis(m) ? Truth::True : Truth::False;
  FrobeniusBimodule fb = is_frobenius_bimodule(m, seed);
  r.flag(FlagId::MFrobenius) = Flag{fb.verdict, fb.method, std::nullopt};
  if (fb.theta) r.flag(FlagId::MFrobenius).witness = witness("isomorphism", {{"theta", fb.theta->matrix}});

  auto e_cm = is_cosplit(cm);
  r.flag(FlagId::ComatrixCosplit) = truth_flag(e_cm.has_value(), "central element with counit 1",
                                               e_cm ? std::optional(witness("cosplit element", {{"e", single_column(*e_cm)}}))
                                                    : std::nullopt);
  CointegralSearch g_cm = find_cointegral(cm, opts.limits);
  r.flag(FlagId::ComatrixCoseparable) = Flag{g_cm.verdict, g_cm.method, std::nullopt};
  if (g_cm.cointegral) r.flag(FlagId::ComatrixCoseparable).witness = witness("cointegral", {{"gamma", g_cm.cointegral->gamma}});
  FrobeniusSearch fs_cm = find_frobenius_system(cm, seed, opts.limits);
  r.flag(FlagId::ComatrixFrobenius) = Flag{fs_cm.verdict, fs_cm.method, std::nullopt};
  if (fs_cm.system)
    r.flag(FlagId::ComatrixFrobenius).witness =
        witness("Frobenius system", {{"gamma", fs_cm.system->gamma}, {"e", single_column(fs_cm.system->e)}});

  const AlgebraMap& b_to_s = ls.b_to_s();
  auto split = split_extension_check(b_to_s);
  r.flag(FlagId::ExtensionSplit) = truth_flag(split.has_value(), "normalized bimodule map S -> B",
                                              split ? std::optional(witness("splitting", {{"s", split->matrix}})) : std::nullopt);
  FrobeniusExtension fe = frobenius_extension_check(b_to_s, seed);
  r.flag(FlagId::ExtensionFrobenius) = Flag{fe.verdict, fe.method, std::nullopt};
  if (fe.iso) r.flag(FlagId::ExtensionFrobenius).witness = witness("isomorphism", {{"iso", fe.iso->matrix}});

  auto e_sw = is_cosplit(sw);
  r.flag(FlagId::SweedlerCosplit) = truth_flag(e_sw.has_value(), "central element with counit 1",
                                               e_sw ? std::optional(witness("cosplit element", {{"e", single_column(*e_sw)}}))
                                                    : std::nullopt);

  std::optional<Cointegral> lifted_cointegral;
  if (g_cm.cointegral) {
    lifted_cointegral = lift_cointegral(ls, *g_cm.cointegral);
    r.constructions.push_back({"lifted cointegral on S (x)_B S", true, dims(lifted_cointegral->gamma)});
  }
  Flag& sw_cosep = r.flag(FlagId::SweedlerCoseparable);
  if (within(sw, opts.limits)) {
    CointegralSearch g = find_cointegral(sw, opts.limits);
    sw_cosep = Flag{g.verdict, g.method, std::nullopt};
    if (g.cointegral) sw_cosep.witness = witness("cointegral", {{"gamma", g.cointegral->gamma}});
  } else if (lifted_cointegral) {
    sw_cosep = Flag{Truth::True, "lifted from the comatrix cointegral",
                    witness("cointegral", {{"gamma", lifted_cointegral->gamma}})};
  } else {
    sw_cosep = Flag{Truth::Inconclusive, "linear system exceeds size limit", std::nullopt};
  }

  std::optional<FrobeniusSystem> lifted_system;
  if (fs_cm.system) {
    lifted_system = lift_frobenius_system(ls, *fs_cm.system);
    r.constructions.push_back({"lifted Frobenius system on S (x)_B S", true, dims(lifted_system->gamma)});
  }
  Flag& sw_frob = r.flag(FlagId::SweedlerFrobenius);
  if (within(sw, opts.limits)) {
    FrobeniusSearch s = find_frobenius_system(sw, seed, opts.limits);
    sw_frob = Flag{s.verdict, s.method, std::nullopt};
    if (s.system)
      sw_frob.witness = witness("Frobenius system", {{"gamma", s.system->gamma}, {"e", single_column(s.system->e)}});
  } else if (lifted_system) {
    sw_frob = Flag{Truth::True, "lifted from the comatrix Frobenius system",
                   witness("Frobenius system", {{"gamma", lifted_system->gamma}, {"e", single_column(lifted_system->e)}})};
  } else {
    sw_frob = Flag{Truth::Inconclusive, "linear system exceeds size limit", std::nullopt};
  }

  std::optional<FlatWitness> flat;
  Side flat_side = Side::Left;
  for (Side side : {Side::Left, Side::Right}) {
    flat = flat_witness(b_to_s, side);
    if (flat) {
      flat_side = side;
      break;
    }
  }
  r.flag(FlagId::FaithfullyFlat) = truth_flag(flat.has_value(), "projective generator over B");
  if (flat) {
    r.flag(FlagId::FaithfullyFlat).method = to_string(flat_side) + " B-module S is a projective generator";
    r.flag(FlagId::FaithfullyFlat).witness =
        witness(to_string(flat_side), {{"elements", column_matrix(f, flat->basis.module().dim(), flat->basis.elements)},
                                       {"functionals", column_matrix(f, flat->basis.dual.module.dim(), flat->basis.functionals)},
                                       {"generator_elements", column_matrix(f, flat->basis.module().dim(), flat->generator_elements)},
                                       {"generator_functionals",
                                        column_matrix(f, flat->basis.dual.module.dim(), flat->generator_functionals)}});
  }

  WilliardCheck wc = williard_check(m, seed);
  r.flag(FlagId::Williard) = Flag{wc.verdict, wc.method, std::nullopt};
  if (wc.verdict == Truth::True) {
    if (wc.iso)
      r.flag(FlagId::Williard).witness = witness("isomorphism", {{"iso", wc.iso->matrix}});
    else
      r.flag(FlagId::Williard).witness =
          witness("generator", {{"generator_elements", column_matrix(f, m.dim(), wc.generator_elements)},
                                {"generator_functionals",
                                 column_matrix(f, ls.comatrix.basis.dual.module.dim(), wc.generator_functionals)}});
  }

  if (sep) {
    BimoduleMap s = split_from_separability(ls, *sep);
    r.constructions.push_back({"splitting of B -> S from the separability element", true, dims(s.matrix)});
    Cointegral g = cointegral_from_split(ls, s);
    r.constructions.push_back({"comatrix cointegral from the splitting", true, dims(g.gamma)});
  }
  if (e_cm) {
    Vec e = lift_cosplit(ls, *e_cm);
    r.constructions.push_back({"lifted cosplit element of S (x)_B S", true, std::to_string(e.size()) + " coordinates"});
  }
  if (fb.theta) {
    Iota iota = iota_from_frobenius(ls.comatrix, *fb.theta);
    r.constructions.push_back({"isomorphism of the comatrix coring with End(_B M)", true, dims(iota.matrix)});
  }

  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const Flag& fl = r.flags[i];
    if (fl.value != Truth::True) continue;
    require_consistent(fl.witness && check_witness(ls, static_cast<FlagId>(i), *fl.witness),
                       "witness for " + flag_name(static_cast<FlagId>(i)) + " fails verification");
  }

  std::string violated;
  for (const auto& e : edges()) {
    AuditEntry a{e.hypotheses, e.conclusion, e.tag, audit_status(r, e)};
    if (a.status == AuditStatus::Violated) violated += (violated.empty() ? "" : "; ") + e.tag;
    r.audit.push_back(std::move(a));
  }
  require_consistent(violated.empty(), "violated implications: " + violated);
  return r;
}

}  // namespace coringlab
