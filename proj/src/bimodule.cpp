#include "coringlab/bimodule.hpp"

#include <random>

namespace coringlab {

namespace {

constexpr std::uint64_t kGeneratorSeed = 0x636f72696e67;
constexpr std::size_t kRandomCandidates = 8;

std::string idx(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// First basis index where two matrices differ in a column.
std::size_t first_bad_column(const Mat& x, const Mat& y) {
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (x.column(j) != y.column(j)) return j;
  return x.cols();
}

// Vectorization helpers for row-major flattened r x c matrices F.
Mat vec_right_mult(std::size_t r, const Mat& x) {  // F -> F x
  return Mat::kron(Mat::identity(x.field(), r), x.transpose());
}
Mat vec_left_mult(const Mat& y, std::size_t c) {  // F -> y F
  return Mat::kron(y, Mat::identity(y.field(), c));
}

}  // namespace

Bimodule Bimodule::create(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                          std::vector<Mat> right_action, std::string name) {
  Bimodule m = unchecked(std::move(left), std::move(right), dim, std::move(left_action), std::move(right_action),
                         std::move(name));
  m.validate();
  return m;
}

Bimodule Bimodule::unchecked(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                             std::vector<Mat> right_action, std::string name) {
  require_same_field(left->field(), right->field());
  if (left_action.size() != left->dim()) throw DimensionMismatch("left action count differs from algebra dimension");
  if (right_action.size() != right->dim())
    throw DimensionMismatch("right action count differs from algebra dimension");
  for (const auto* acts : {&left_action, &right_action})
    for (const auto& a : *acts) {
      require_same_field(left->field(), a.field());
      if (a.rows() != dim || a.cols() != dim) throw DimensionMismatch("action matrix has wrong shape");
    }
  Bimodule m;
  m.d_ = std::make_shared<const Data>(
      Data{std::move(left), std::move(right), dim, std::move(left_action), std::move(right_action), std::move(name)});
  return m;
}

Bimodule Bimodule::regular(const AlgebraPtr& a) {
  return unchecked(a, a, a->dim(), a->left_mults(), a->right_mults(), a->name());
}

Mat Bimodule::left_act(const Vec& b) const { return combine(b, d_->left_action, dim(), dim()); }

Mat Bimodule::right_act(const Vec& a) const { return combine(a, d_->right_action, dim(), dim()); }

void Bimodule::validate() const {
  const Algebra& b = *left_algebra();
  const Algebra& a = *right_algebra();
  const std::string who = name().empty() ? "bimodule" : "bimodule '" + name() + "'";
  Mat id = Mat::identity(field(), dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Mat lhs = left_act(b.product(i, j));
      Mat rhs = left_action(i) * left_action(j);
      if (lhs != rhs)
        throw AxiomViolation(who + ": left action not associative at (b,b',m) = " +
                             idx(i, j, first_bad_column(lhs, rhs)));
    }
  if (auto j = first_bad_column(left_act(b.unit()), id); j < dim())
    throw AxiomViolation(who + ": left unit does not act as identity on basis element " + std::to_string(j));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = right_act(a.product(i, j));
      Mat rhs = right_action(j) * right_action(i);
      if (lhs != rhs)
        throw AxiomViolation(who + ": right action not associative at (m,a,a') = " +
                             idx(first_bad_column(lhs, rhs), i, j));
    }
  if (auto j = first_bad_column(right_act(a.unit()), id); j < dim())
    throw AxiomViolation(who + ": right unit does not act as identity on basis element " + std::to_string(j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = left_action(i) * right_action(j);
      Mat rhs = right_action(j) * left_action(i);
      if (lhs != rhs)
        throw AxiomViolation(who + ": actions do not commute at (b,m,a) = " + idx(i, first_bad_column(lhs, rhs), j));
    }
}

Bimodule Bimodule::renamed(std::string name) const {
  return unchecked(left_algebra(), right_algebra(), dim(), left_actions(), right_actions(), std::move(name));
}

Bimodule Bimodule::restrict_left(const AlgebraMap& f) const {
  require_same_algebra(f.target, left_algebra(), "restrict_left");
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < f.source->dim(); ++i) acts.push_back(left_act(f.matrix.column(i)));
  return unchecked(f.source, right_algebra(), dim(), std::move(acts), right_actions(), name());
}

Bimodule Bimodule::restrict_right(const AlgebraMap& f) const {
  require_same_algebra(f.target, right_algebra(), "restrict_right");
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < f.source->dim(); ++i) acts.push_back(right_act(f.matrix.column(i)));
  return unchecked(left_algebra(), f.source, dim(), left_actions(), std::move(acts), name());
}

Bimodule Bimodule::forget_left() const { return restrict_left(unit_map(left_algebra())); }

Bimodule Bimodule::forget_right() const { return restrict_right(unit_map(right_algebra())); }

bool Bimodule::same_structure(const Bimodule& o) const {
  return dim() == o.dim() && same_algebra(left_algebra(), o.left_algebra()) &&
         same_algebra(right_algebra(), o.right_algebra()) && left_actions() == o.left_actions() &&
         right_actions() == o.right_actions();
}

void require_same_sides(const Bimodule& m, const Bimodule& n, const std::string& context) {
  require_same_algebra(m.left_algebra(), n.left_algebra(), context + " (left side)");
  require_same_algebra(m.right_algebra(), n.right_algebra(), context + " (right side)");
}

bool is_bimodule_map(const BimoduleMap& f) {
  if (!same_algebra(f.source.left_algebra(), f.target.left_algebra()) ||
      !same_algebra(f.source.right_algebra(), f.target.right_algebra()))
    return false;
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim()) return false;
  for (std::size_t b = 0; b < f.source.left_algebra()->dim(); ++b)
    if (f.matrix * f.source.left_action(b) != f.target.left_action(b) * f.matrix) return false;
  for (std::size_t a = 0; a < f.source.right_algebra()->dim(); ++a)
    if (f.matrix * f.source.right_action(a) != f.target.right_action(a) * f.matrix) return false;
  return true;
}

LeftPresentation left_presentation(const Bimodule& m) {
  const Field& f = m.field();
  const Algebra& b = *m.left_algebra();
  std::size_t db = b.dim(), dm = m.dim();
  LeftPresentation out;
  RowReducer span(f, dm);
  auto gain = [&](const Vec& v) {
    RowReducer local(f, dm);
    std::size_t g = 0;
    for (std::size_t i = 0; i < db; ++i)
      if (local.insert(span.reduce(m.left_action(i) * v))) ++g;
    return g;
  };
  std::vector<Vec> randoms;
  std::mt19937_64 rng(kGeneratorSeed);
  if (dm > 1)
    for (std::size_t t = 0; t < kRandomCandidates; ++t) randoms.push_back(random_vec(f, dm, rng));
  while (span.rank() < dm) {
    std::size_t best_gain = 0;
    Vec best(f, dm);
    auto consider = [&](const Vec& v) {
      std::size_t g = gain(v);
      if (g > best_gain) {
        best_gain = g;
        best = v;
      }
      return g == db;
    };
    bool full = false;
    for (std::size_t i = 0; i < dm && !full; ++i)
      if (!span.contains(Vec::unit(f, dm, i))) full = consider(Vec::unit(f, dm, i));
    for (std::size_t t = 0; t < randoms.size() && !full; ++t) full = consider(randoms[t]);
    if (best_gain == 0) throw InternalInconsistency("generator search stalled");
    for (std::size_t i = 0; i < db; ++i) span.insert(m.left_action(i) * best);
    out.generators.push_back(best);
  }
  std::size_t r = out.generators.size();
  Mat g(f, dm, r * db);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < db; ++i) g.set_column(k * db + i, m.left_action(i) * out.generators[k]);
  auto x = solve_linear(g, Mat::identity(f, dm));
  if (!x) throw InternalInconsistency("generators do not generate the module");
  out.expression = std::move(*x);
  out.relations = kernel_basis(g);
  return out;
}

namespace {

// Reduced echelon basis of a span, with pivots as coordinate columns.
Kernel echelon_span(const Field& f, std::size_t dim, const std::vector<Vec>& vs) {
  RowReducer red(f, dim);
  for (const auto& v : vs) red.insert(v);
  Kernel k;
  for (std::size_t r = 0; r < red.rank(); ++r) k.basis.push_back(red.row(r));
  k.coordinate_columns = red.pivots();
  return k;
}

// Flattened n.dim x m.dim matrices of the left linear maps m -> n, and of the
// bilinear ones when right_linear is set. A map is fixed by the images v_k of
// the left generators of m; they must respect the relations and, for
// bilinearity, satisfy f(g_k a) = v_k a.
Kernel linear_maps(const Bimodule& m, const Bimodule& n, bool right_linear) {
  const Field& f = m.field();
  const Algebra& b = *m.left_algebra();
  std::size_t db = b.dim(), dm = m.dim(), dn = n.dim();
  LeftPresentation pres = left_presentation(m);
  std::size_t r = pres.generators.size();
  std::size_t unknowns = r * dn;
  std::vector<Mat> rows;
  for (const auto& kappa : pres.relations) {
    Mat eq(f, dn, unknowns);
    for (std::size_t k = 0; k < r; ++k) eq.set_block(0, k * dn, n.left_act(kappa.slice(k * db, db)));
    rows.push_back(std::move(eq));
  }
  if (right_linear) {
    for (std::size_t a = 0; a < m.right_algebra()->dim(); ++a)
      for (std::size_t k = 0; k < r; ++k) {
        Vec w = pres.expression * (m.right_action(a) * pres.generators[k]);
        Mat eq(f, dn, unknowns);
        for (std::size_t kk = 0; kk < r; ++kk) eq.set_block(0, kk * dn, n.left_act(w.slice(kk * db, db)));
        Mat blk = eq.block(0, k * dn, dn, dn);
        blk -= n.right_action(a);
        eq.set_block(0, k * dn, blk);
        rows.push_back(std::move(eq));
      }
  }
  std::vector<Vec> sols = rows.empty() ? kernel_basis(Mat(f, 0, unknowns))
                                       : kernel_basis(Mat::vstack(f, unknowns, rows));
  std::vector<Vec> maps;
  for (const auto& v : sols) {
    Mat lam(f, dn, r * db);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < db; ++i) lam.set_column(k * db + i, n.left_action(i) * v.slice(k * dn, dn));
    maps.push_back((lam * pres.expression).flatten());
  }
  return echelon_span(f, dn * dm, maps);
}

}  // namespace

std::size_t Dual::codomain_dim() const {
  return right ? source.right_algebra()->dim() : source.left_algebra()->dim();
}

Mat Dual::map(const Vec& coords) const {
  std::size_t r = codomain_dim(), c = source.dim();
  if (space.dim() == 0) return Mat(source.field(), r, c);
  return Mat::reshape(space.combine(coords), r, c);
}

Vec Dual::coordinates(const Mat& functional) const { return space.coordinates(functional.flatten()); }

namespace {

Dual finish_dual(const Bimodule& m, bool right, Kernel space, const AlgebraPtr& codomain) {
  const Field& f = m.field();
  Dual d;
  d.source = m;
  d.right = right;
  d.space = std::move(space);
  std::size_t n = d.space.dim();
  const AlgebraPtr& a = m.right_algebra();
  const AlgebraPtr& b = m.left_algebra();
  std::vector<Mat> maps;
  for (std::size_t j = 0; j < n; ++j) maps.push_back(Mat::reshape(d.space.basis[j], codomain->dim(), m.dim()));
  auto action = [&](auto&& op) {
    Mat out(f, n, n);
    for (std::size_t j = 0; j < n; ++j) out.set_column(j, d.coordinates(op(maps[j])));
    return out;
  };
  std::vector<Mat> lefts, rights;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (right)
      lefts.push_back(action([&](const Mat& F) { return a->left_mult(i) * F; }));
    else
      lefts.push_back(action([&](const Mat& F) { return F * m.right_action(i); }));
  }
  for (std::size_t i = 0; i < b->dim(); ++i) {
    if (right)
      rights.push_back(action([&](const Mat& F) { return F * m.left_action(i); }));
    else
      rights.push_back(action([&](const Mat& F) { return b->right_mult(i) * F; }));
  }
  std::string nm = m.name().empty() ? "" : (right ? m.name() + "*" : "*" + m.name());
  d.module = Bimodule::unchecked(a, b, n, std::move(lefts), std::move(rights), nm);
  return d;
}

}  // namespace

Dual right_dual(const Bimodule& m) {
  const AlgebraPtr& a = m.right_algebra();
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a->dim(); ++i)
    blocks.push_back(vec_right_mult(a->dim(), m.right_action(i)) - vec_left_mult(a->right_mult(i), m.dim()));
  Kernel k = kernel(Mat::vstack(m.field(), a->dim() * m.dim(), blocks));
  return finish_dual(m, true, std::move(k), a);
}

Dual left_dual(const Bimodule& m) {
  const AlgebraPtr& b = m.left_algebra();
  return finish_dual(m, false, linear_maps(m, Bimodule::regular(b).forget_right(), false), b);
}

bool verify_dual_basis(const DualBasis& db) {
  const Bimodule& m = db.module();
  if (db.elements.size() != db.functionals.size()) return false;
  Mat sum(m.field(), m.dim(), m.dim());
  for (std::size_t i = 0; i < db.elements.size(); ++i) {
    Mat phi = db.dual.map(db.functionals[i]);
    // column x of the term is e_i phi_i(x) (right) or phi_i(x) e_i (left)
    for (std::size_t x = 0; x < m.dim(); ++x) {
      Vec val = phi.column(x);
      Vec term = db.dual.right ? m.act_right(db.elements[i], val) : m.act_left(val, db.elements[i]);
      Vec col = sum.column(x);
      col += term;
      sum.set_column(x, col);
    }
  }
  return sum.is_identity();
}

namespace {

std::optional<DualBasis> solve_dual_basis(const Dual& dual, const std::vector<Vec>& elements) {
  const Bimodule& m = dual.source;
  const Field& f = m.field();
  std::size_t d = dual.module.dim(), n = m.dim(), ne = elements.size();
  // unknown t[i][j]: phi_i = sum_j t[i][j] psi_j; equations indexed by (x, coordinate)
  Mat sys(f, n * n, ne * d);
  for (std::size_t j = 0; j < d; ++j) {
    Mat psi = dual.map(Vec::unit(f, d, j));
    for (std::size_t x = 0; x < n; ++x) {
      Vec val = psi.column(x);
      Mat act = dual.right ? m.right_act(val) : m.left_act(val);
      for (std::size_t i = 0; i < ne; ++i) {
        Vec term = act * elements[i];
        for (std::size_t c = 0; c < n; ++c) sys.set(x * n + c, i * d + j, term.at(c));
      }
    }
  }
  Vec rhs = Mat::identity(f, n).flatten();  // entry (x, c) = delta_{xc}
  auto t = solve_linear(sys, rhs);
  if (!t) return std::nullopt;
  DualBasis db;
  db.dual = dual;
  db.elements = elements;
  for (std::size_t i = 0; i < ne; ++i) db.functionals.push_back(t->slice(i * d, d));
  if (!verify_dual_basis(db)) throw InternalInconsistency("solved dual basis fails its identity");
  return db;
}

std::vector<Vec> field_basis(const Bimodule& m) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < m.dim(); ++i) out.push_back(m.basis(i));
  return out;
}

}  // namespace

std::optional<DualBasis> dual_basis(const Bimodule& m) { return solve_dual_basis(right_dual(m), field_basis(m)); }

std::optional<DualBasis> left_dual_basis(const Bimodule& m) {
  return solve_dual_basis(left_dual(m), field_basis(m));
}

std::optional<DualBasis> dual_basis_for(const Bimodule& m, const std::vector<Vec>& elements) {
  return solve_dual_basis(right_dual(m), elements);
}

DualBasis make_dual_basis(const Bimodule& m, std::vector<Vec> elements, std::vector<Vec> functionals) {
  DualBasis db;
  db.dual = right_dual(m);
  db.elements = std::move(elements);
  db.functionals = std::move(functionals);
  for (const auto& phi : db.functionals)
    if (phi.size() != db.dual.module.dim()) throw InvalidInput("dual basis functional has wrong length");
  if (!verify_dual_basis(db)) throw InvalidInput("pairs do not satisfy x = sum_i e_i phi_i(x)");
  return db;
}

Mat Endomorphisms::map(const Vec& coords) const {
  std::size_t n = module.dim();
  if (space.dim() == 0) return Mat(module.field(), n, n);
  return Mat::reshape(space.combine(coords), n, n);
}

Vec Endomorphisms::coordinates(const Mat& endo) const { return space.coordinates(endo.flatten()); }

namespace {

Endomorphisms build_endomorphisms(const Bimodule& m, bool right_linear) {
  const Field& f = m.field();
  std::size_t n = m.dim();
  const std::vector<Mat>& commuting = right_linear ? m.right_actions() : m.left_actions();
  std::vector<Mat> blocks;
  for (const auto& r : commuting) blocks.push_back(vec_right_mult(n, r) - vec_left_mult(r, n));
  Endomorphisms e;
  e.space = kernel(blocks.empty() ? Mat(f, 0, n * n) : Mat::vstack(f, n * n, blocks));
  std::size_t d = e.space.dim();
  std::vector<Mat> maps;
  for (std::size_t j = 0; j < d; ++j) maps.push_back(Mat::reshape(e.space.basis[j], n, n));
  std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      prod[i][j] = e.space.coordinates((right_linear ? maps[i] * maps[j] : maps[j] * maps[i]).flatten());
  Vec unit = e.space.coordinates(Mat::identity(f, n).flatten());
  std::string nm = right_linear ? "End_A(" + m.name() + ")" : "End_B(" + m.name() + ")";
  e.algebra = Algebra::create(f, std::move(prod), std::move(unit), nm);
  const AlgebraPtr& from = right_linear ? m.left_algebra() : m.right_algebra();
  Mat fm(f, d, from->dim());
  for (std::size_t i = 0; i < from->dim(); ++i)
    fm.set_column(i, e.space.coordinates((right_linear ? m.left_action(i) : m.right_action(i)).flatten()));
  e.from_left = AlgebraMap{from, e.algebra, fm};
  if (right_linear)
    e.module = Bimodule::unchecked(e.algebra, m.right_algebra(), n, maps, m.right_actions(), m.name());
  else
    e.module = Bimodule::unchecked(m.left_algebra(), e.algebra, n, m.left_actions(), maps, m.name());
  return e;
}

}  // namespace

Endomorphisms endomorphism_algebra(const Bimodule& m) { return build_endomorphisms(m, true); }

Endomorphisms left_endomorphism_algebra(const Bimodule& m) { return build_endomorphisms(m, false); }

BimoduleMap HomSpace::map(std::size_t i) const {
  return {source, target, Mat::reshape(space.basis.at(i), target.dim(), source.dim())};
}

Mat HomSpace::matrix(const Vec& coords) const {
  if (space.dim() == 0) return Mat(source.field(), target.dim(), source.dim());
  return Mat::reshape(space.combine(coords), target.dim(), source.dim());
}

std::vector<BimoduleMap> HomSpace::basis() const {
  std::vector<BimoduleMap> out;
  for (std::size_t i = 0; i < space.dim(); ++i) out.push_back(map(i));
  return out;
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n) {
  require_same_sides(m, n, "hom_bimodule");
  return HomSpace{m, n, linear_maps(m, n, true)};
}

std::vector<BimoduleMap> hom_bimodule(const Bimodule& m, const Bimodule& n) { return hom_space(m, n).basis(); }

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Found:
      return "found";
    case IsoVerdict::ProvenAbsent:
      return "proven-absent";
    case IsoVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IsoSearch random_bimodule_iso(const Bimodule& m, const Bimodule& n, const IsoSearchOptions& opts) {
  require_same_sides(m, n, "random_bimodule_iso");
  const Field& f = m.field();
  IsoSearch out;
  if (m.dim() != n.dim()) {
    out.verdict = IsoVerdict::ProvenAbsent;
    out.method = "dimension";
    return out;
  }
  std::size_t d = m.dim();
  Mat id = Mat::identity(f, d);
  if (is_bimodule_map({m, n, id})) {
    out.verdict = IsoVerdict::Found;
    out.iso = BimoduleMap{m, n, id};
    out.method = "identity";
    return out;
  }
  HomSpace hom = hom_space(m, n);
  std::size_t h = hom.dim();
  if (h == 0) {
    out.verdict = d == 0 ? IsoVerdict::Found : IsoVerdict::ProvenAbsent;
    if (d == 0) out.iso = BimoduleMap{m, n, Mat(f, 0, 0)};
    out.method = "empty hom space";
    return out;
  }
  auto accept = [&](const Vec& coords, const char* method) {
    Mat cand = hom.matrix(coords);
    if (rank(cand) != d) return false;
    out.verdict = IsoVerdict::Found;
    out.iso = BimoduleMap{m, n, cand};
    out.method = method;
    return true;
  };
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.attempts; ++t) {
    if (accept(random_vec(f, h, rng), "random")) return out;
  }
  if (!f.is_rational()) {
    std::uint64_t p = f.characteristic(), total = 1;
    bool within = true;
    for (std::size_t i = 0; i < h && within; ++i) {
      total *= p;
      if (total > opts.enumeration_budget) within = false;
    }
    if (within) {
      std::vector<std::uint32_t> digits(h, 0);
      for (std::uint64_t count = 1; count < total; ++count) {
        for (std::size_t i = 0; i < h; ++i) {
          if (++digits[i] < p) break;
          digits[i] = 0;
        }
        Vec coords(f, h);
        coords.raw<std::uint32_t>() = digits;
        if (accept(coords, "exhaustive")) return out;
      }
      out.verdict = IsoVerdict::ProvenAbsent;
      out.method = "exhaustive";
      return out;
    }
  }
  out.verdict = IsoVerdict::Inconclusive;
  out.method = f.is_rational() ? "random (inconclusive over Q)" : "random (enumeration budget exceeded)";
  return out;
}

}  // namespace coringlab
