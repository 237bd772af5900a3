#include "coringlab/coring.hpp"

#include <random>

#include "coringlab/error.hpp"

namespace coringlab {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::False:
      return "false";
    case Truth::True:
      return "true";
    case Truth::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::size_t first_bad_column(const Mat& x, const Mat& y) {
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (x.column(j) != y.column(j)) return j;
  return x.cols();
}

void require_equal(const Mat& x, const Mat& y, const std::string& what) {
  if (x == y) return;
  throw AxiomViolation(what + " fails at basis element " + std::to_string(first_bad_column(x, y)));
}

// (- (x) y) for every slot y_{k,k'} of the section of Delta(g_k).
std::vector<std::vector<Mat>> generator_coproduct_right_fixed(const Coring& c) {
  const TensorSpace& cc = c.cc();
  std::size_t r = cc.generator_count(), d = c.dim();
  std::vector<std::vector<Mat>> out(r);
  for (std::size_t k = 0; k < r; ++k) {
    Vec sec = cc.section(c.coproduct() * cc.generators()[k]);
    for (std::size_t kk = 0; kk < r; ++kk) out[k].push_back(cc.right_fixed(sec.slice(kk * d, d)));
  }
  return out;
}

std::vector<Mat> slot_blocks(const Coring& c) {
  Mat sec = c.coproduct_sections();
  std::size_t d = c.dim();
  std::vector<Mat> out;
  for (std::size_t k = 0; k < c.cc().generator_count(); ++k) out.push_back(sec.block(k * d, 0, d, d));
  return out;
}

Mat stacked_commutators(const Bimodule& m) {
  std::vector<Mat> blocks;
  for (std::size_t a = 0; a < m.left_algebra()->dim(); ++a)
    blocks.push_back(m.left_action(a) - m.right_action(a));
  return Mat::vstack(m.field(), m.dim(), blocks);
}

}  // namespace

Coring Coring::create(const Bimodule& carrier, Mat coproduct, Mat counit, std::string name) {
  return create(std::make_shared<const TensorSpace>(carrier, carrier), std::move(coproduct), std::move(counit),
                std::move(name));
}

Coring Coring::create(std::shared_ptr<const TensorSpace> cc, Mat coproduct, Mat counit, std::string name) {
  const Bimodule& c = cc->left_factor();
  if (!c.same_structure(cc->right_factor()))
    throw InvalidInput("coring: tensor square must be built from the carrier");
  require_same_algebra(c.left_algebra(), c.right_algebra(), "coring: carrier sides");
  const Algebra& a = *c.left_algebra();
  const Field& f = c.field();
  std::size_t d = c.dim(), da = a.dim(), q = cc->dim();
  if (coproduct.rows() != q || coproduct.cols() != d)
    throw DimensionMismatch("coproduct must be " + std::to_string(q) + "x" + std::to_string(d));
  if (counit.rows() != da || counit.cols() != d)
    throw DimensionMismatch("counit must be " + std::to_string(da) + "x" + std::to_string(d));
  const Bimodule& ccm = cc->module();
  for (std::size_t i = 0; i < da; ++i) {
    require_equal(coproduct * c.left_action(i), ccm.left_action(i) * coproduct, "coproduct left linearity");
    require_equal(coproduct * c.right_action(i), ccm.right_action(i) * coproduct, "coproduct right linearity");
    require_equal(counit * c.left_action(i), a.left_mult(i) * counit, "counit left linearity");
    require_equal(counit * c.right_action(i), a.right_mult(i) * counit, "counit right linearity");
  }

  Coring out;
  out.cc_ = std::move(cc);
  out.coproduct_ = std::move(coproduct);
  out.counit_ = std::move(counit);
  out.name_ = std::move(name);
  const TensorSpace& t = *out.cc_;

  Mat el(f, d, q), er(f, d, q);
  for (std::size_t j = 0; j < q; ++j) {
    Vec ei = c.basis(t.left_index_of(j));
    const Vec& gk = t.section_right(j);
    el.set_column(j, c.left_act(out.counit_ * ei) * gk);
    er.set_column(j, c.right_act(out.counit_ * gk) * ei);
  }
  Mat id = Mat::identity(f, d);
  require_equal(el * out.coproduct_, id, "left counit law");
  require_equal(er * out.coproduct_, id, "right counit law");

  TensorSpace ccc(ccm, c, TensorOptions{false});
  std::size_t r = t.generator_count();
  if (ccc.generator_count() != r) throw InternalInconsistency("coring: generator choice is not stable");
  std::vector<Mat> x = slot_blocks(out);
  auto yrf = generator_coproduct_right_fixed(out);
  std::vector<Mat> lhs, rhs(r, Mat(f, q, d));
  for (std::size_t k = 0; k < r; ++k) lhs.push_back(out.coproduct_ * x[k]);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t kk = 0; kk < r; ++kk) rhs[kk] += yrf[k][kk] * x[k];
  Mat l = ccc.project_columns(Mat::vstack(f, d, lhs));
  Mat rr = ccc.project_columns(Mat::vstack(f, d, rhs));
  require_equal(l, rr, "coassociativity");
  return out;
}

Mat Coring::coproduct_sections() const {
  const TensorSpace& t = *cc_;
  Mat out(field(), t.ambient_dim(), dim());
  for (std::size_t j = 0; j < t.dim(); ++j) out.set_row(t.slot_of(j) * dim() + t.left_index_of(j), coproduct_.row(j));
  return out;
}

bool is_coring_morphism(const CoringMorphism& f) {
  const Coring& c = f.source;
  const Coring& d = f.target;
  if (!same_algebra(c.base(), d.base())) return false;
  if (f.matrix.rows() != d.dim() || f.matrix.cols() != c.dim()) return false;
  if (!is_bimodule_map({c.carrier(), d.carrier(), f.matrix})) return false;
  if (d.counit() * f.matrix != c.counit()) return false;
  return tensor_maps(c.cc(), d.cc(), f.matrix, f.matrix) * c.coproduct() == d.coproduct() * f.matrix;
}

Coring trivial_coring(const AlgebraPtr& a) {
  Bimodule c = Bimodule::regular(a);
  auto cc = std::make_shared<const TensorSpace>(c, c);
  Mat delta(a->field(), cc->dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) delta.set_column(i, cc->pure(a->basis(i), a->unit()));
  return Coring::create(cc, std::move(delta), Mat::identity(a->field(), a->dim()), a->name());
}

SweedlerCoring sweedler_coring(const AlgebraMap& f) {
  if (!check_algebra_map(f)) throw InvalidInput("sweedler_coring: not an algebra map");
  const AlgebraPtr& a = f.target;
  Bimodule reg = Bimodule::regular(a);
  auto space = std::make_shared<const TensorSpace>(reg.restrict_right(f), reg.restrict_left(f));
  const Bimodule& c = space->module();
  auto cc = std::make_shared<const TensorSpace>(c, c);
  std::size_t d = space->dim();
  Mat delta(a->field(), cc->dim(), d), eps(a->field(), a->dim(), d);
  Vec one = a->unit();
  for (std::size_t q = 0; q < d; ++q) {
    Vec x = space->section_left(q);
    const Vec& h = space->section_right(q);
    delta.set_column(q, cc->pure(space->pure(x, one), space->pure(one, h)));
    eps.set_column(q, a->multiply(x, h));
  }
  std::string nm = a->name() + " (x)_" + f.source->name() + " " + a->name();
  Coring cor = Coring::create(cc, std::move(delta), std::move(eps), nm);
  return SweedlerCoring{f, std::move(space), std::move(cor)};
}

namespace {

// c -> sum c_(1) phi(c_(2)) for every basis functional phi of the left dual.
std::vector<Mat> dual_actions(const Coring& c, const Dual& dual) {
  const TensorSpace& t = c.cc();
  const Bimodule& carrier = c.carrier();
  std::size_t d = c.dim(), r = t.generator_count();
  Mat sec = c.coproduct_sections();
  std::vector<Mat> out;
  for (std::size_t j = 0; j < dual.module.dim(); ++j) {
    Mat phi = dual.map(Vec::unit(c.field(), dual.module.dim(), j));
    std::vector<Mat> w;
    for (std::size_t k = 0; k < r; ++k) w.push_back(carrier.right_act(phi * t.generators()[k]));
    out.push_back(Mat::hstack(c.field(), d, w) * sec);
  }
  return out;
}

}  // namespace

DualRing left_dual_ring(const Coring& c) {
  Dual dual = left_dual(c.carrier());
  std::size_t n = dual.module.dim();
  std::vector<Mat> acts = dual_actions(c, dual);
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < n; ++i) maps.push_back(dual.map(Vec::unit(c.field(), n, i)));
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = dual.coordinates(maps[i] * acts[j]);
  Vec unit = dual.coordinates(c.counit());
  std::string nm = c.name().empty() ? "*C" : "*(" + c.name() + ")";
  return DualRing{Algebra::create(c.field(), std::move(prod), std::move(unit), nm), std::move(dual)};
}

Kernel invariants(const Coring& c) { return kernel(stacked_commutators(c.carrier())); }

std::optional<Vec> is_cosplit(const Coring& c) {
  const Field& f = c.field();
  std::size_t da = c.base()->dim();
  Mat sys = Mat::vstack(f, c.dim(), {stacked_commutators(c.carrier()), c.counit()});
  Vec rhs = Vec::concat(f, {Vec(f, da * c.dim()), c.base()->unit()});
  return solve_linear(sys, rhs);
}

BimoduleMap cosplit_section(const Coring& c, const Vec& e) {
  const AlgebraPtr& a = c.base();
  Mat m(c.field(), c.dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) m.set_column(i, c.carrier().left_action(i) * e);
  BimoduleMap s{Bimodule::regular(a), c.carrier(), std::move(m)};
  if (!is_bimodule_map(s) || c.counit() * s.matrix != Mat::identity(c.field(), a->dim()))
    throw InvalidInput("element does not give a bimodule section of the counit");
  return s;
}

CointegralChecker::CointegralChecker(const Coring& c) : c_(c), r_(c.cc().generator_count()) {
  const TensorSpace& t = c.cc();
  blocks_ = slot_blocks(c);
  y_right_fixed_ = generator_coproduct_right_fixed(c);
  const Bimodule& carrier = c.carrier();
  std::size_t da = c.base()->dim();
  for (std::size_t k = 0; k < r_; ++k) {
    const Vec& g = t.generators()[k];
    gen_right_fixed_.push_back(t.right_fixed(g));
    Mat lam(c.field(), c.dim(), da);
    for (std::size_t a = 0; a < da; ++a) lam.set_column(a, carrier.left_action(a) * g);
    gen_left_actions_.push_back(std::move(lam));
  }
}

Mat CointegralChecker::defect(const Mat& gamma) const {
  const TensorSpace& t = c_.cc();
  const Bimodule& carrier = c_.carrier();
  const Field& f = c_.field();
  std::size_t d = c_.dim();
  std::vector<Mat> diff;
  for (std::size_t k = 0; k < r_; ++k) {
    Mat sk = gamma * gen_right_fixed_[k];  // x -> gamma(x (x) g_k)
    Mat dk(f, d, d);
    for (std::size_t kk = 0; kk < r_; ++kk) {
      dk += carrier.right_act(sk * t.generators()[kk]) * blocks_[kk];
      dk -= gen_left_actions_[kk] * (gamma * y_right_fixed_[k][kk]);
    }
    diff.push_back(std::move(dk));
  }
  Mat out(f, d, t.dim());
  for (std::size_t q = 0; q < t.dim(); ++q) out.set_column(q, diff[t.slot_of(q)].column(t.left_index_of(q)));
  return out;
}

bool CointegralChecker::is_bimodule_map(const Mat& gamma) const {
  const Algebra& a = *c_.base();
  if (gamma.rows() != a.dim() || gamma.cols() != c_.cc().dim()) return false;
  const Bimodule& ccm = c_.cc().module();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (gamma * ccm.left_action(i) != a.left_mult(i) * gamma) return false;
    if (gamma * ccm.right_action(i) != a.right_mult(i) * gamma) return false;
  }
  return true;
}

bool CointegralChecker::is_precointegral(const Mat& gamma) const {
  return is_bimodule_map(gamma) && defect(gamma).is_zero();
}

bool CointegralChecker::is_cointegral(const Mat& gamma) const {
  return is_precointegral(gamma) && gamma * c_.coproduct() == c_.counit();
}

Mat CointegralChecker::right_pairing(const Mat& gamma, const Vec& e) const { return gamma * c_.cc().right_fixed(e); }

Mat CointegralChecker::left_pairing(const Mat& gamma, const Vec& e) const { return gamma * c_.cc().left_fixed(e); }

bool CointegralChecker::is_frobenius_system(const FrobeniusSystem& fs) const {
  if (fs.e.size() != c_.dim()) return false;
  if (!(stacked_commutators(c_.carrier()) * fs.e).is_zero()) return false;
  if (!is_precointegral(fs.gamma)) return false;
  return right_pairing(fs.gamma, fs.e) == c_.counit() && left_pairing(fs.gamma, fs.e) == c_.counit();
}

bool verify_cointegral(const Coring& c, const Cointegral& g) { return CointegralChecker(c).is_cointegral(g.gamma); }

bool verify_precointegral(const Coring& c, const Mat& gamma) { return CointegralChecker(c).is_precointegral(gamma); }

bool verify_frobenius_system(const Coring& c, const FrobeniusSystem& fs) {
  return CointegralChecker(c).is_frobenius_system(fs);
}

namespace {

std::optional<std::vector<Mat>> precointegrals(const CointegralChecker& chk, const SearchLimits& limits) {
  const Coring& c = chk.coring();
  std::size_t da = c.base()->dim(), q = c.cc().dim();
  if (q * da > limits.max_unknowns) return std::nullopt;
  HomSpace hom = hom_space(c.cc().module(), Bimodule::regular(c.base()));
  std::size_t h = hom.dim();
  std::vector<Mat> maps;
  for (std::size_t j = 0; j < h; ++j) maps.push_back(hom.map(j).matrix);
  std::vector<Vec> cols;
  for (const auto& g : maps) cols.push_back(chk.defect(g).flatten());
  Mat sys = Mat::from_columns(c.field(), c.dim() * q, cols);
  std::vector<Mat> out;
  for (const auto& t : kernel_basis(sys)) out.push_back(combine(t, maps, da, q));
  return out;
}

}  // namespace

std::optional<std::vector<Mat>> precointegral_basis(const Coring& c, const SearchLimits& limits) {
  return precointegrals(CointegralChecker(c), limits);
}

CointegralSearch find_cointegral(const Coring& c, const SearchLimits& limits) {
  CointegralChecker chk(c);
  CointegralSearch out;
  auto basis = precointegrals(chk, limits);
  if (!basis) {
    out.method = "linear system exceeds size limit";
    return out;
  }
  out.method = "linear system";
  const Field& f = c.field();
  std::vector<Vec> cols;
  for (const auto& g : *basis) cols.push_back((g * c.coproduct()).flatten());
  auto t = solve_linear(Mat::from_columns(f, c.base()->dim() * c.dim(), cols), c.counit().flatten());
  if (!t) {
    out.verdict = Truth::False;
    return out;
  }
  Mat gamma = combine(*t, *basis, c.base()->dim(), c.cc().dim());
  if (!chk.is_cointegral(gamma)) throw InternalInconsistency("solved cointegral fails verification");
  out.verdict = Truth::True;
  out.cointegral = Cointegral{std::move(gamma)};
  return out;
}

namespace {

FrobeniusSearch iso_criterion(const CointegralChecker& chk, std::uint64_t seed) {
  const Coring& c = chk.coring();
  const Field& f = c.field();
  FrobeniusSearch out;
  DualRing ring = left_dual_ring(c);
  const Dual& dual = ring.functionals;
  std::size_t n = dual.module.dim();
  AlgebraPtr r = opposite(ring.algebra);
  std::vector<Mat> c_right = dual_actions(c, dual);
  Bimodule c_mod = Bimodule::create(c.base(), r, c.dim(), c.carrier().left_actions(), c_right);
  std::vector<Mat> lefts, rights;
  for (std::size_t a = 0; a < c.base()->dim(); ++a) {
    Mat m(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
      m.set_column(j, dual.coordinates(dual.map(Vec::unit(f, n, j)) * c.carrier().right_action(a)));
    lefts.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < n; ++j) rights.push_back(ring.algebra->left_mult(j));
  Bimodule r_mod = Bimodule::create(c.base(), r, n, std::move(lefts), std::move(rights));
  IsoSearch iso = random_bimodule_iso(c_mod, r_mod, IsoSearchOptions{seed});
  out.method = "isomorphism with the opposite dual ring (" + iso.method + ")";
  if (iso.verdict == IsoVerdict::ProvenAbsent) {
    out.verdict = Truth::False;
    return out;
  }
  if (iso.verdict != IsoVerdict::Found) return out;
  const Mat& theta = iso.iso->matrix;
  auto inv = inverse(theta);
  if (!inv) throw InternalInconsistency("isomorphism search returned a singular map");
  const TensorSpace& t = c.cc();
  Mat gamma(f, c.base()->dim(), t.dim());
  for (std::size_t q = 0; q < t.dim(); ++q) {
    Mat phi = dual.map(theta * t.section_right(q));
    gamma.set_column(q, phi.column(t.left_index_of(q)));
  }
  FrobeniusSystem fs{std::move(gamma), *inv * dual.coordinates(c.counit())};
  if (!chk.is_frobenius_system(fs)) throw InternalInconsistency("system derived from the isomorphism fails verification");
  out.verdict = Truth::True;
  out.system = std::move(fs);
  return out;
}

}  // namespace

FrobeniusSearch frobenius_by_isomorphism(const Coring& c, std::uint64_t seed) {
  return iso_criterion(CointegralChecker(c), seed);
}

FrobeniusSearch find_frobenius_system(const Coring& c, std::uint64_t seed, const SearchLimits& limits) {
  CointegralChecker chk(c);
  const Field& f = c.field();
  std::size_t da = c.base()->dim(), d = c.dim();
  auto basis = precointegrals(chk, limits);
  if (basis) {
    Kernel inv = invariants(c);
    std::size_t z = inv.dim(), h = basis->size();
    // gamma_j(x (x) z_l) and gamma_j(z_l (x) x), flattened
    std::vector<std::vector<Vec>> rp(h), lp(h);
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t l = 0; l < z; ++l) {
        rp[j].push_back(chk.right_pairing((*basis)[j], inv.basis[l]).flatten());
        lp[j].push_back(chk.left_pairing((*basis)[j], inv.basis[l]).flatten());
      }
    Vec rhs = Vec::concat(f, {c.counit().flatten(), c.counit().flatten()});
    auto attempt = [&](const Vec& coords) -> std::optional<FrobeniusSystem> {
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < h; ++j) {
        Vec rc(f, da * d), lc(f, da * d);
        for (std::size_t l = 0; l < z; ++l) {
          if (coords.at(l).is_zero()) continue;
          rc.axpy(coords.at(l), rp[j][l]);
          lc.axpy(coords.at(l), lp[j][l]);
        }
        cols.push_back(Vec::concat(f, {rc, lc}));
      }
      auto t = solve_linear(Mat::from_columns(f, 2 * da * d, cols), rhs);
      if (!t) return std::nullopt;
      FrobeniusSystem fs{combine(*t, *basis, da, c.cc().dim()), inv.combine(coords)};
      if (!chk.is_frobenius_system(fs)) throw InternalInconsistency("solved Frobenius system fails verification");
      return fs;
    };
    if (h > 0 && z > 0 && !f.is_rational()) {
      std::uint64_t p = f.characteristic(), total = 1;
      bool within = true;
      for (std::size_t i = 0; i < z && within; ++i) {
        total *= p;
        if (total > limits.enumeration_budget) within = false;
      }
      if (within) {
        std::vector<std::uint32_t> digits(z, 0);
        for (std::uint64_t count = 1; count < total; ++count) {
          for (std::size_t i = 0; i < z; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
          }
          Vec coords(f, z);
          coords.raw<std::uint32_t>() = digits;
          if (auto fs = attempt(coords)) return FrobeniusSearch{Truth::True, std::move(fs), "enumeration of invariants"};
        }
        return FrobeniusSearch{Truth::False, std::nullopt, "enumeration of invariants"};
      }
    }
    if (h == 0 || z == 0) return FrobeniusSearch{Truth::False, std::nullopt, "no pre-cointegrals or no invariants"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < limits.random_candidates; ++i)
      if (auto fs = attempt(random_vec(f, z, rng))) return FrobeniusSearch{Truth::True, std::move(fs), "random invariant"};
  }
  return iso_criterion(chk, seed);
}

}  // namespace coringlab
