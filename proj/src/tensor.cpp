#include "coringlab/tensor.hpp"

#include <map>
#include <random>

namespace coringlab {

namespace {

constexpr std::size_t kDenseProjectionLimit = std::size_t{1} << 22;

}  // namespace

TensorSpace::TensorSpace(const Bimodule& m, const Bimodule& n, TensorOptions opts)
    : m_(m), n_(n), rel_(m.field(), 0) {
  require_same_algebra(m.right_algebra(), n.left_algebra(), "tensor_over: middle algebra");
  const Field& f = m.field();
  const Algebra& a = *m.right_algebra();
  std::size_t da = a.dim(), dm = m.dim();
  LeftPresentation pres = left_presentation(n);
  gens_ = std::move(pres.generators);
  expr_ = std::move(pres.expression);
  std::size_t r = gens_.size();
  rel_ = RowReducer(f, r * dm);
  for (const auto& kappa : pres.relations) {
    std::vector<Mat> blocks;
    for (std::size_t k = 0; k < r; ++k) blocks.push_back(m.right_act(kappa.slice(k * da, da)));
    for (std::size_t i = 0; i < dm; ++i) {
      Vec amb(f, r * dm);
      for (std::size_t k = 0; k < r; ++k) amb.set_slice(k * dm, blocks[k].column(i));
      rel_.insert(amb);
    }
  }
  free_ = rel_.free_columns();
  if (rel_.rank() > 0 && free_.size() * r * dm <= kDenseProjectionLimit) dense_projection_ = presentation().projection;

  if (!opts.induce_actions) return;
  std::size_t q = dim();
  std::vector<Mat> lefts;
  for (const auto& lx : m.left_actions()) {
    Mat amb(f, r * dm, q);
    for (std::size_t c = 0; c < q; ++c) {
      Vec v(f, r * dm);
      v.set_slice(slot_of(c) * dm, lx.column(left_index_of(c)));
      amb.set_column(c, v);
    }
    lefts.push_back(project_columns(amb));
  }
  std::vector<Mat> rights(n.right_algebra()->dim(), Mat(f, q, q));
  std::map<std::size_t, std::vector<std::size_t>> by_left;
  for (std::size_t c = 0; c < q; ++c) by_left[left_index_of(c)].push_back(c);
  for (const auto& [i, cols] : by_left) {
    Mat lf = left_fixed(m.basis(i));
    for (std::size_t y = 0; y < rights.size(); ++y)
      for (std::size_t c : cols) rights[y].set_column(c, lf * (n.right_action(y) * section_right(c)));
  }
  std::string nm;
  if (!m.name().empty() && !n.name().empty()) nm = m.name() + " (x) " + n.name();
  module_ = Bimodule::unchecked(m.left_algebra(), n.right_algebra(), q, std::move(lefts), std::move(rights), nm);
}

const Bimodule& TensorSpace::module() const {
  if (!module_.valid()) throw InvalidInput("tensor space was built without induced actions");
  return module_;
}

std::vector<Vec> TensorSpace::express(const Vec& n) const {
  std::size_t da = m_.right_algebra()->dim();
  Vec alpha = expr_ * n;
  std::vector<Vec> out;
  for (std::size_t k = 0; k < gens_.size(); ++k) out.push_back(alpha.slice(k * da, da));
  return out;
}

Vec TensorSpace::ambient_pure(const Vec& m, const Vec& n) const {
  const Field& f = field();
  std::size_t da = m_.right_algebra()->dim(), dm = m_.dim();
  std::vector<Vec> acted;
  for (std::size_t a = 0; a < da; ++a) acted.push_back(m_.right_action(a) * m);
  Vec alpha = expr_ * n;
  Vec amb(f, ambient_dim());
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    Vec slot(f, dm);
    for (std::size_t a = 0; a < da; ++a) slot.axpy(alpha.at(k * da + a), acted[a]);
    amb.set_slice(k * dm, slot);
  }
  return amb;
}

Mat TensorSpace::left_fixed(const Vec& m) const {
  const Field& f = field();
  std::size_t da = m_.right_algebra()->dim(), dm = m_.dim();
  std::vector<Vec> acted;
  for (std::size_t a = 0; a < da; ++a) acted.push_back(m_.right_action(a) * m);
  Mat acts = Mat::from_columns(f, dm, acted);  // dm x da
  Mat amb(f, ambient_dim(), n_.dim());
  for (std::size_t k = 0; k < gens_.size(); ++k)
    amb.set_block(k * dm, 0, acts * expr_.block(k * da, 0, da, n_.dim()));
  return project_columns(amb);
}

Mat TensorSpace::right_fixed(const Vec& n) const {
  std::size_t dm = m_.dim();
  auto alpha = express(n);
  Mat amb(field(), ambient_dim(), dm);
  for (std::size_t k = 0; k < gens_.size(); ++k) amb.set_block(k * dm, 0, m_.right_act(alpha[k]));
  return project_columns(amb);
}

Vec TensorSpace::project(const Vec& ambient) const {
  if (ambient.size() != ambient_dim()) throw DimensionMismatch("ambient tensor vector has wrong length");
  if (rel_.rank() == 0) return ambient;
  if (dense_projection_) return *dense_projection_ * ambient;
  return rel_.quotient_coordinates(ambient);
}

Mat TensorSpace::project_columns(const Mat& ambient) const {
  if (ambient.rows() != ambient_dim()) throw DimensionMismatch("ambient tensor matrix has wrong height");
  if (rel_.rank() == 0) return ambient;
  if (dense_projection_) return *dense_projection_ * ambient;
  Mat out(field(), dim(), ambient.cols());
  for (std::size_t j = 0; j < ambient.cols(); ++j) out.set_column(j, rel_.quotient_coordinates(ambient.column(j)));
  return out;
}

Vec TensorSpace::section(const Vec& q) const {
  if (q.size() != dim()) throw DimensionMismatch("tensor coordinates have wrong length");
  Vec amb(field(), ambient_dim());
  for (std::size_t c = 0; c < free_.size(); ++c) amb.set(free_[c], q.at(c));
  return amb;
}

QuotientPresentation TensorSpace::presentation() const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rel_.rank(); ++r) rows.push_back(rel_.row(r));
  return quotient_by(field(), ambient_dim(), rows);
}

Mat tensor_maps(const TensorSpace& src, const TensorSpace& dst, const Mat& f, const Mat& g) {
  if (f.cols() != src.left_factor().dim() || f.rows() != dst.left_factor().dim() ||
      g.cols() != src.right_factor().dim() || g.rows() != dst.right_factor().dim())
    throw DimensionMismatch("tensor_maps: factor maps have wrong shape");
  Mat out(src.field(), dst.dim(), src.dim());
  std::map<std::size_t, std::vector<std::size_t>> by_left;
  for (std::size_t c = 0; c < src.dim(); ++c) by_left[src.left_index_of(c)].push_back(c);
  for (const auto& [i, cols] : by_left) {
    Mat lf = dst.left_fixed(f.column(i));
    for (std::size_t c : cols) out.set_column(c, lf * (g * src.section_right(c)));
  }
  return out;
}

Mat tensor_map_from_values(const TensorSpace& t, std::size_t rows, const std::vector<std::vector<Vec>>& values) {
  const Field& f = t.field();
  const Bimodule& m = t.left_factor();
  const Bimodule& n = t.right_factor();
  if (values.size() != m.dim()) throw DimensionMismatch("value table needs one row per basis element of the left factor");
  std::vector<Vec> pures, vals;
  for (std::size_t x = 0; x < m.dim(); ++x) {
    if (values[x].size() != n.dim())
      throw DimensionMismatch("value table needs one entry per basis element of the right factor");
    for (std::size_t y = 0; y < n.dim(); ++y) {
      if (values[x][y].size() != rows) throw DimensionMismatch("value has the wrong length");
      pures.push_back(t.pure(m.basis(x), n.basis(y)));
      vals.push_back(values[x][y]);
    }
  }
  Mat p = Mat::from_columns(f, t.dim(), pures);
  Mat v = Mat::from_columns(f, rows, vals);
  auto g = solve_linear(p.transpose(), v.transpose());
  if (!g) throw InvalidInput("values on pure tensors are not balanced");
  return g->transpose();
}

SIso canonical_s_iso(const Bimodule& m) {
  Endomorphisms endo = endomorphism_algebra(m);
  auto db = dual_basis(endo.module);
  if (!db) throw NotProjective("canonical_s_iso: M is not finitely generated projective over A");
  const Bimodule& sm = endo.module;
  const Dual& dual = db->dual;
  TensorSpace t(sm, dual.module);
  const Field& f = m.field();
  std::size_t ds = endo.algebra->dim();
  Mat fwd(f, ds, t.dim());
  for (std::size_t q = 0; q < t.dim(); ++q) {
    Vec e = t.section_left(q);
    Mat phi = dual.map(t.section_right(q));
    // x -> e . phi(x): column x is right_act(phi(x)) e
    Mat endo_map(f, sm.dim(), sm.dim());
    for (std::size_t x = 0; x < sm.dim(); ++x) endo_map.set_column(x, sm.act_right(e, phi.column(x)));
    fwd.set_column(q, endo.coordinates(endo_map));
  }
  Mat bwd(f, t.dim(), ds);
  for (std::size_t s = 0; s < ds; ++s) {
    Mat sm_map = endo.map(Vec::unit(f, ds, s));
    Vec acc(f, t.dim());
    for (std::size_t i = 0; i < db->size(); ++i) acc += t.pure(sm_map * db->elements[i], db->functionals[i]);
    bwd.set_column(s, acc);
  }
  if (!(fwd * bwd).is_identity() || !(bwd * fwd).is_identity())
    throw InternalInconsistency("canonical M (x) M* -> S maps are not mutually inverse");
  return SIso{std::move(endo), std::move(*db), std::move(t), std::move(fwd), std::move(bwd)};
}

bool check_s_iso_product_rules(const SIso& iso) {
  const TensorSpace& t = iso.tensor;
  const Bimodule& m = t.left_factor();
  const Bimodule& md = t.right_factor();
  const Dual& dual = iso.basis.dual;
  const Algebra& s = *iso.endo.algebra;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < md.dim(); ++j) {
      Vec mi = m.basis(i), phj = md.basis(j);
      Vec x = t.pure(mi, phj);
      for (std::size_t a = 0; a < s.dim(); ++a) {
        // s (m (x) phi) = s(m) (x) phi and (m (x) phi) s = m (x) phi s
        if (t.module().left_action(a) * x != t.pure(m.left_action(a) * mi, phj)) return false;
        if (t.module().right_action(a) * x != t.pure(mi, md.right_action(a) * phj)) return false;
      }
      for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t l = 0; l < md.dim(); ++l) {
          Vec mk = m.basis(k), phl = md.basis(l);
          Vec prod = iso.backward * s.multiply(iso.forward * x, iso.forward * t.pure(mk, phl));
          Vec val = dual.evaluate(phj, mk);  // phi(m') in A
          Vec lhs = t.pure(m.act_right(mi, val), phl);
          Vec rhs = t.pure(mi, md.act_left(val, phl));
          if (prod != lhs || prod != rhs) return false;
        }
    }
  return true;
}

}  // namespace coringlab
