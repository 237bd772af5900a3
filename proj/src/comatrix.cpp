#include "coringlab/comatrix.hpp"

#include "coringlab/error.hpp"

namespace coringlab {

namespace {

Mat comatrix_coproduct(const TensorSpace& space, const TensorSpace& cc, const DualBasis& db) {
  Mat delta(space.field(), cc.dim(), space.dim());
  for (std::size_t q = 0; q < space.dim(); ++q) {
    Vec phi = space.section_left(q);
    const Vec& m = space.section_right(q);
    Vec col(space.field(), cc.dim());
    for (std::size_t i = 0; i < db.size(); ++i)
      col += cc.pure(space.pure(phi, db.elements[i]), space.pure(db.functionals[i], m));
    delta.set_column(q, col);
  }
  return delta;
}

Mat evaluation(const TensorSpace& space, const Dual& dual) {
  Mat eps(space.field(), dual.codomain_dim(), space.dim());
  for (std::size_t q = 0; q < space.dim(); ++q)
    eps.set_column(q, dual.evaluate(space.section_left(q), space.section_right(q)));
  return eps;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw AxiomViolation(what);
}

void require_consistent(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what);
}

}  // namespace

ComatrixCoring comatrix_coring(const Bimodule& m) {
  auto db = dual_basis(m);
  if (!db) throw NotProjective("comatrix_coring: " + m.name() + " is not finitely generated projective over A");
  return comatrix_coring(m, *db);
}

ComatrixCoring comatrix_coring(const Bimodule& m, const DualBasis& basis) {
  if (!basis.module().same_structure(m) || !verify_dual_basis(basis))
    throw InvalidInput("comatrix_coring: not a dual basis of " + m.name());
  auto space = std::make_shared<const TensorSpace>(basis.dual.module, m);
  const Bimodule& c = space->module();
  auto cc = std::make_shared<const TensorSpace>(c, c);
  Mat delta = comatrix_coproduct(*space, *cc, basis);
  Mat eps = evaluation(*space, basis.dual);
  std::string nm = m.name().empty() ? "" : m.name() + "* (x) " + m.name();
  Coring cor = Coring::create(cc, std::move(delta), std::move(eps), nm);
  return ComatrixCoring{m, basis, std::move(space), std::move(cor)};
}

bool coproduct_basis_independence(const Bimodule& m, const DualBasis& alternative) {
  if (!verify_dual_basis(alternative)) throw InvalidInput("alternative pairs are not a dual basis");
  ComatrixCoring std_c = comatrix_coring(m);
  Mat alt = comatrix_coproduct(*std_c.space, std_c.coring.cc(), alternative);
  return alt == std_c.coring.coproduct();
}

void validate_context(const CoringContext& ctx) {
  const Field& f = ctx.n.field();
  const TensorSpace& nm = *ctx.nm;
  const TensorSpace& mn = *ctx.mn;
  const AlgebraPtr& a = ctx.a_alg();
  const AlgebraPtr& b = ctx.b_alg();
  require(is_bimodule_map({nm.module(), Bimodule::regular(a), ctx.sigma}), "sigma is not an (A,A)-bimodule map");
  require(is_bimodule_map({Bimodule::regular(b), mn.module(), ctx.tau}), "tau is not a (B,B)-bimodule map");
  Vec e = mn.section(ctx.tau * b->unit());
  std::size_t dm = ctx.m.dim(), r = mn.generator_count();
  for (std::size_t j = 0; j < ctx.n.dim(); ++j) {
    Vec x = ctx.n.basis(j);
    Vec acc(f, ctx.n.dim());
    for (std::size_t k = 0; k < r; ++k)
      acc += ctx.n.left_act(ctx.sigma * nm.pure(x, e.slice(k * dm, dm))) * mn.generators()[k];
    require(acc == x, "first context triangle fails at basis element " + std::to_string(j) + " of N");
  }
  for (std::size_t j = 0; j < dm; ++j) {
    Vec x = ctx.m.basis(j);
    Vec acc(f, dm);
    for (std::size_t k = 0; k < r; ++k)
      acc += ctx.m.right_act(ctx.sigma * nm.pure(mn.generators()[k], x)) * e.slice(k * dm, dm);
    require(acc == x, "second context triangle fails at basis element " + std::to_string(j) + " of M");
  }
}

CoringContext make_context(const Bimodule& n, const Bimodule& m, Mat sigma, Mat tau) {
  require_same_algebra(n.left_algebra(), m.right_algebra(), "context: algebra A");
  require_same_algebra(n.right_algebra(), m.left_algebra(), "context: algebra B");
  CoringContext ctx{n, m, std::make_shared<const TensorSpace>(n, m), std::make_shared<const TensorSpace>(m, n),
                    std::move(sigma), std::move(tau)};
  if (ctx.sigma.rows() != ctx.a_alg()->dim() || ctx.sigma.cols() != ctx.nm->dim())
    throw DimensionMismatch("sigma must be dim A x dim(N (x)_B M)");
  if (ctx.tau.rows() != ctx.mn->dim() || ctx.tau.cols() != ctx.b_alg()->dim())
    throw DimensionMismatch("tau must be dim(M (x)_A N) x dim B");
  validate_context(ctx);
  return ctx;
}

MoritaData make_morita(const Bimodule& n, const Bimodule& m, Mat sigma, Mat tau_tilde) {
  require_same_algebra(n.left_algebra(), m.right_algebra(), "morita: algebra A");
  require_same_algebra(n.right_algebra(), m.left_algebra(), "morita: algebra B");
  MoritaData md{n, m, std::make_shared<const TensorSpace>(n, m), std::make_shared<const TensorSpace>(m, n),
                std::move(sigma), std::move(tau_tilde)};
  const AlgebraPtr& a = n.left_algebra();
  const AlgebraPtr& b = m.left_algebra();
  if (md.sigma.rows() != a->dim() || md.sigma.cols() != md.nm->dim())
    throw DimensionMismatch("sigma must be dim A x dim(N (x)_B M)");
  if (md.tau_tilde.rows() != b->dim() || md.tau_tilde.cols() != md.mn->dim())
    throw DimensionMismatch("tau_tilde must be dim B x dim(M (x)_A N)");
  require(is_bimodule_map({md.nm->module(), Bimodule::regular(a), md.sigma}), "sigma is not an (A,A)-bimodule map");
  require(is_bimodule_map({md.mn->module(), Bimodule::regular(b), md.tau_tilde}),
          "tau_tilde is not a (B,B)-bimodule map");
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Vec s = md.sigma * md.nm->pure(n.basis(i), m.basis(j));
      Mat sl = n.left_act(s);
      for (std::size_t l = 0; l < n.dim(); ++l) {
        Vec t = md.tau_tilde * md.mn->pure(m.basis(j), n.basis(l));
        require(sl * n.basis(l) == n.right_act(t) * n.basis(i),
                "sigma(n (x) m) n' = n tau(m (x) n') fails at (" + std::to_string(i) + "," + std::to_string(j) +
                    "," + std::to_string(l) + ")");
      }
    }
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Vec t = md.tau_tilde * md.mn->pure(m.basis(i), n.basis(j));
      Mat tl = m.left_act(t);
      for (std::size_t l = 0; l < m.dim(); ++l) {
        Vec s = md.sigma * md.nm->pure(n.basis(j), m.basis(l));
        require(tl * m.basis(l) == m.right_act(s) * m.basis(i),
                "tau(m (x) n) m' = m sigma(n (x) m') fails at (" + std::to_string(i) + "," + std::to_string(j) +
                    "," + std::to_string(l) + ")");
      }
    }
  return md;
}

CoringContext context_from_bimodule(const Bimodule& m) {
  auto db = dual_basis(m);
  if (!db) throw NotProjective("context_from_bimodule: " + m.name() + " is not finitely generated projective over A");
  const Bimodule& n = db->dual.module;
  auto nm = std::make_shared<const TensorSpace>(n, m);
  auto mn = std::make_shared<const TensorSpace>(m, n);
  Mat sigma = evaluation(*nm, db->dual);
  const AlgebraPtr& b = m.left_algebra();
  Mat tau(m.field(), mn->dim(), b->dim());
  for (std::size_t x = 0; x < b->dim(); ++x) {
    Vec col(m.field(), mn->dim());
    for (std::size_t i = 0; i < db->size(); ++i) col += mn->pure(m.left_action(x) * db->elements[i], db->functionals[i]);
    tau.set_column(x, col);
  }
  CoringContext ctx{n, m, std::move(nm), std::move(mn), std::move(sigma), std::move(tau)};
  validate_context(ctx);
  return ctx;
}

std::optional<CoringContext> context_from_morita(const MoritaData& md) {
  const AlgebraPtr& b = md.m.left_algebra();
  if (rank(md.tau_tilde) < b->dim()) return std::nullopt;
  auto inv = inverse(md.tau_tilde);
  require_consistent(inv.has_value(), "surjective tau_tilde is not bijective");
  CoringContext ctx{md.n, md.m, md.nm, md.mn, md.sigma, std::move(*inv)};
  validate_context(ctx);
  return ctx;
}

ContextDualBasis context_dual_basis(const CoringContext& ctx) {
  const TensorSpace& nm = *ctx.nm;
  const TensorSpace& mn = *ctx.mn;
  const Field& f = ctx.n.field();
  std::size_t dm = ctx.m.dim(), dn = ctx.n.dim(), r = mn.generator_count();
  Dual dual = right_dual(ctx.m);
  Vec e = mn.section(ctx.tau * ctx.b_alg()->unit());
  auto functional_of = [&](const Vec& x) {
    Mat phi(f, ctx.a_alg()->dim(), dm);
    for (std::size_t j = 0; j < dm; ++j) phi.set_column(j, ctx.sigma * nm.pure(x, ctx.m.basis(j)));
    return dual.coordinates(phi);
  };
  std::vector<Vec> elements, functionals;
  for (std::size_t k = 0; k < r; ++k) {
    elements.push_back(e.slice(k * dm, dm));
    functionals.push_back(functional_of(mn.generators()[k]));
  }
  ContextDualBasis out{make_dual_basis(ctx.m, std::move(elements), std::move(functionals)),
                       BimoduleMap{ctx.n, dual.module, Mat(f, dual.module.dim(), dn)},
                       BimoduleMap{dual.module, ctx.n, Mat(f, dn, dual.module.dim())}};
  for (std::size_t j = 0; j < dn; ++j) out.chi.matrix.set_column(j, functional_of(ctx.n.basis(j)));
  for (std::size_t j = 0; j < dual.module.dim(); ++j) {
    Mat phi = dual.map(Vec::unit(f, dual.module.dim(), j));
    Vec acc(f, dn);
    for (std::size_t k = 0; k < r; ++k) acc += ctx.n.left_act(phi * e.slice(k * dm, dm)) * mn.generators()[k];
    out.chi_inv.matrix.set_column(j, acc);
  }
  require_consistent(is_bimodule_map(out.chi), "chi is not an (A,B)-bimodule map");
  require_consistent(is_bimodule_map(out.chi_inv), "chi inverse is not an (A,B)-bimodule map");
  require_consistent((out.chi.matrix * out.chi_inv.matrix).is_identity() &&
                         (out.chi_inv.matrix * out.chi.matrix).is_identity(),
                     "chi and its inverse do not compose to identities");
  return out;
}

Coring context_coring(const CoringContext& ctx) {
  const TensorSpace& nm = *ctx.nm;
  const TensorSpace& mn = *ctx.mn;
  const Bimodule& c = nm.module();
  auto cc = std::make_shared<const TensorSpace>(c, c);
  std::size_t dm = ctx.m.dim(), r = mn.generator_count();
  Vec e = mn.section(ctx.tau * ctx.b_alg()->unit());
  Mat delta(c.field(), cc->dim(), nm.dim());
  for (std::size_t q = 0; q < nm.dim(); ++q) {
    Vec x = nm.section_left(q);
    const Vec& y = nm.section_right(q);
    Vec col(c.field(), cc->dim());
    for (std::size_t k = 0; k < r; ++k) col += cc->pure(nm.pure(x, e.slice(k * dm, dm)), nm.pure(mn.generators()[k], y));
    delta.set_column(q, col);
  }
  std::string name = ctx.n.name().empty() || ctx.m.name().empty() ? "" : ctx.n.name() + " (x) " + ctx.m.name();
  return Coring::create(cc, std::move(delta), ctx.sigma, name);
}

ContextIso context_iso(const CoringContext& ctx) {
  ContextDualBasis cdb = context_dual_basis(ctx);
  Coring cc = context_coring(ctx);
  ComatrixCoring cm = comatrix_coring(ctx.m);
  const Field& f = ctx.n.field();
  if (!cm.basis.dual.module.same_structure(cdb.chi.target))
    throw InternalInconsistency("context_iso: dual module presentations differ");
  Mat id = Mat::identity(f, ctx.m.dim());
  Mat fwd = tensor_maps(*ctx.nm, *cm.space, cdb.chi.matrix, id);
  Mat bwd = tensor_maps(*cm.space, *ctx.nm, cdb.chi_inv.matrix, id);
  ContextIso out{cc, cm, CoringMorphism{cc, cm.coring, fwd}, CoringMorphism{cm.coring, cc, bwd}};
  require_consistent(is_coring_morphism(out.forward), "chi (x) M is not a coring morphism");
  require_consistent(is_coring_morphism(out.backward), "inverse of chi (x) M is not a coring morphism");
  require_consistent((fwd * bwd).is_identity() && (bwd * fwd).is_identity(),
                     "context isomorphism does not compose to identities");
  return out;
}

AntiIso left_dual_anti_iso(const Bimodule& m) {
  ComatrixCoring cm = comatrix_coring(m);
  DualRing ring = left_dual_ring(cm.coring);
  Endomorphisms endo = left_endomorphism_algebra(m);
  const Field& f = m.field();
  const DualBasis& db = cm.basis;
  std::size_t n = ring.algebra->dim(), dm = m.dim();
  require_consistent(endo.algebra->dim() == n, "left dual ring and endomorphism ring differ in dimension");
  std::vector<Mat> maps;
  Mat xi(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat phi = ring.functionals.map(ring.algebra->basis(j));
    Mat x(f, dm, dm);
    for (std::size_t c = 0; c < dm; ++c) {
      Vec acc(f, dm);
      for (std::size_t i = 0; i < db.size(); ++i)
        acc += m.right_act(phi * cm.space->pure(db.functionals[i], m.basis(c))) * db.elements[i];
      x.set_column(c, acc);
    }
    xi.set_column(j, endo.coordinates(x));
    require_consistent(endo.map(xi.column(j)) == x, "xi(phi) is not left B-linear");
    maps.push_back(std::move(x));
  }
  auto inv = inverse(xi);
  require_consistent(inv.has_value(), "xi is not bijective");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat lhs = endo.map(xi * ring.algebra->product(i, j));
      require_consistent(lhs == maps[i] * maps[j],
                         "xi(phi phi') differs from xi(phi) o xi(phi') at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      require_consistent(xi * ring.algebra->product(i, j) == endo.algebra->multiply(endo.coordinates(maps[j]),
                                                                                    endo.coordinates(maps[i])),
                         "xi is not anti-multiplicative into the endomorphism ring");
    }
  require_consistent(endo.map(xi * ring.algebra->unit()).is_identity(), "xi does not preserve the unit");
  return AntiIso{std::move(ring), std::move(endo), std::move(xi), std::move(*inv)};
}

SweedlerComatrixIso sweedler_comatrix_iso(const AlgebraMap& f) {
  SweedlerCoring sw = sweedler_coring(f);
  const AlgebraPtr& a = f.target;
  Bimodule m = Bimodule::regular(a).restrict_left(f).renamed(a->name());
  ComatrixCoring cm = comatrix_coring(m);
  const Field& k = a->field();
  const Dual& dual = cm.basis.dual;
  std::size_t da = a->dim(), nd = dual.module.dim();
  Mat left(k, nd, da), eval_one(k, da, nd);
  for (std::size_t i = 0; i < da; ++i) left.set_column(i, dual.coordinates(a->left_mult(i)));
  for (std::size_t j = 0; j < nd; ++j) eval_one.set_column(j, dual.map(Vec::unit(k, nd, j)) * a->unit());
  Mat id = Mat::identity(k, da);
  Mat fwd = tensor_maps(*sw.space, *cm.space, left, id);
  Mat bwd = tensor_maps(*cm.space, *sw.space, eval_one, id);
  SweedlerComatrixIso out{sw, cm, CoringMorphism{sw.coring, cm.coring, fwd}, CoringMorphism{cm.coring, sw.coring, bwd}};
  require_consistent(is_coring_morphism(out.forward), "Sweedler to comatrix map is not a coring morphism");
  require_consistent(is_coring_morphism(out.backward), "comatrix to Sweedler map is not a coring morphism");
  require_consistent((fwd * bwd).is_identity() && (bwd * fwd).is_identity(),
                     "Sweedler and comatrix maps do not compose to identities");
  return out;
}

}  // namespace coringlab
