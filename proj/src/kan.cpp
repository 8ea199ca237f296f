#include "qlab/kan.hpp"

namespace qlab {

Presheaf phi_star(const QDistributor& phi, const Presheaf& lam) {
  return presheaf_from_dist(compose_dist(to_dist(phi.target, lam), phi));
}

Presheaf phi_lowstar(const QDistributor& phi, const Presheaf& mu) {
  return presheaf_from_dist(dist_left_implication(to_dist(phi.source, mu), phi));
}

FixedPointLattice kan_lattice(const QDistributor& phi, long long cap) {
  PresheafCategory pb = enumerate_presheaves(phi.target, cap);
  std::vector<int> op(pb.objs.size());
  for (std::size_t i = 0; i < pb.objs.size(); ++i) {
    int j = pb.index_of(phi_lowstar(phi, phi_star(phi, pb.objs[i])));
    if (j < 0) throw std::logic_error("kan_lattice: closure image escaped the enumeration");
    op[i] = j;
  }
  QClosureSpace space{phi.target, std::move(pb), std::move(op)};
  Report r = validate_closure_space(space);
  if (!r.ok()) throw std::logic_error("kan_lattice: operator is not a closure:\n" + r.to_string());

  FixedPointLattice out;
  out.kind = "kan";
  out.phi = phi;
  out.base = phi.target;
  std::vector<int> closed = closed_indices(space);
  for (int i : closed) out.extents.push_back(space.pa.objs[i]);
  out.cat = full_subcategory(space.pa.cat, closed);
  for (std::size_t k = 0; k < out.extents.size(); ++k)
    out.cat.objects[k] = "c" + std::to_string(k);
  return out;
}

Report why_kan_check(const QFunctor& f, long long cap) {
  Report r;
  FunctorReport fr = validate_functor(f);
  if (!fr.is_functor) {
    r.add("why_kan.functor", "invalid functor", true);
    return r;
  }
  const QCategory& a = f.source;
  const QCategory& b = f.target;
  QDistributor gr = graph(f);
  QDistributor co = cograph(f);
  PresheafCategory pa = enumerate_presheaves(a, cap);
  PresheafCategory pb = enumerate_presheaves(b, cap);

  for (std::size_t i = 0; i < pb.objs.size(); ++i) {
    const Presheaf& lam = pb.objs[i];
    Presheaf via_low = phi_lowstar(co, lam);      // (F^♮)_*(λ)
    Presheaf via_back = transport_backward(f, lam);  // F←(λ)
    Presheaf via_star = phi_star(gr, lam);        // (F_♮)*(λ)
    if (!(via_low == via_back))
      r.add("why_kan.cograph_lowstar", "p" + std::to_string(i));
    if (!(via_star == via_back))
      r.add("why_kan.graph_star", "p" + std::to_string(i));
  }

  // (F^♮)* ⊣ (F^♮)_* : hom equality PB((F^♮)*μ, λ) = PA(μ, (F^♮)_*λ)
  for (const Presheaf& mu : pa.objs)
    for (const Presheaf& lam : pb.objs) {
      Elem lhs = hom_pa(b, phi_star(co, mu), lam);
      Elem rhs = hom_pa(a, mu, phi_lowstar(co, lam));
      if (lhs != rhs) r.add("why_kan.left_adjunction", "hom mismatch");
    }
  // (F_♮)* ⊣ (F_♮)_* : hom equality PA((F_♮)*λ, μ) = PB(λ, (F_♮)_*μ)
  for (const Presheaf& lam : pb.objs)
    for (const Presheaf& mu : pa.objs) {
      Elem lhs = hom_pa(a, phi_star(gr, lam), mu);
      Elem rhs = hom_pa(b, lam, phi_lowstar(gr, mu));
      if (lhs != rhs) r.add("why_kan.right_adjunction", "hom mismatch");
    }
  return r;
}

KanExtensionResult pointwise_kan_extension(const QFunctor& f, const QFunctor& g, int c,
                                           long long cap) {
  if (!same_category(f.source, g.source))
    throw std::invalid_argument("pointwise_kan_extension: F and G must share their source");
  if (c < 0 || c >= g.target.size())
    throw std::invalid_argument("pointwise_kan_extension: unknown object");
  (void)cap;
  const QCategory& b = f.target;
  Presheaf weight = dist_column(graph(g), c);       // G_♮(-,c) ∈ PA
  Presheaf nu = phi_star(cograph(f), weight);       // (F^♮)*(G_♮(-,c)) ∈ PB
  QDistributor ext = dist_left_implication(identity_dist(b), to_dist(b, nu));  // B↙ν
  KanExtensionResult out{copresheaf_from_dist(ext), std::nullopt};
  for (int y = 0; y < b.size(); ++y)
    if (co_yoneda(b, y) == out.extension) {
      out.representative = y;
      break;
    }
  return out;
}

GirardContext make_girard_context(QuantaloidPtr q) {
  if (!q->dualizing)
    throw std::invalid_argument("make_girard_context: quantaloid carries no dualizing family");
  return make_girard_context(q, *q->dualizing);
}

GirardContext make_girard_context(QuantaloidPtr q, DualizingFamily family) {
  Report r = validate_dualizing_family(*q, family);
  if (!r.ok())
    throw std::invalid_argument("make_girard_context: family is not cyclic dualizing:\n" +
                                r.to_string());
  return GirardContext{std::move(q), std::move(family)};
}

Elem neg_elem(const GirardContext& ctx, int a, int b, Elem f) {
  return ctx.q->limp(a, b, a, ctx.family.d[a], f);
}

QDistributor neg_category(const GirardContext& ctx, const QCategory& a) {
  QDistributor out{a, a, {}};
  out.m.assign(a.size(), std::vector<Elem>(a.size()));
  for (int y = 0; y < a.size(); ++y)
    for (int x = 0; x < a.size(); ++x)
      out.m[y][x] = neg_elem(ctx, a.types[x], a.types[y], a.at(x, y));
  return out;
}

QDistributor neg_dist(const GirardContext& ctx, const QDistributor& phi) {
  QDistributor out{phi.target, phi.source, {}};
  out.m.assign(phi.target.size(), std::vector<Elem>(phi.source.size()));
  for (int y = 0; y < phi.target.size(); ++y)
    for (int x = 0; x < phi.source.size(); ++x)
      out.m[y][x] = neg_elem(ctx, phi.source.types[x], phi.target.types[y], phi.at(x, y));
  // both defining formulas agree with the entrywise negation
  QDistributor via_left = dist_left_implication(neg_category(ctx, phi.source), phi);
  QDistributor via_right = dist_right_implication(phi, neg_category(ctx, phi.target));
  if (!dist_eq(out, via_left) || !dist_eq(out, via_right))
    throw std::logic_error("neg_dist: defining formulas disagree");
  return out;
}

CoPresheaf neg_presheaf(const GirardContext& ctx, const QCategory& a, const Presheaf& mu) {
  CoPresheaf out{mu.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x)
    out.values[x] = neg_elem(ctx, a.types[x], mu.type_obj, mu.values[x]);
  return out;
}

Presheaf neg_copresheaf(const GirardContext& ctx, const QCategory& a, const CoPresheaf& lam) {
  Presheaf out{lam.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x)
    out.values[x] = neg_elem(ctx, lam.type_obj, a.types[x], lam.values[x]);
  return out;
}

Report girard_kan_identity_check(const GirardContext& ctx, const QDistributor& phi, long long cap) {
  Report r;
  const QCategory& a = phi.source;
  const QCategory& b = phi.target;
  QDistributor nphi = neg_dist(ctx, phi);
  if (!dist_eq(neg_dist(ctx, nphi), phi)) r.add("girard.involution", "¬¬φ != φ");

  PresheafCategory pb = enumerate_presheaves(b, cap);
  for (std::size_t i = 0; i < pb.objs.size(); ++i) {
    // φ*(λ) = ¬((¬φ)↑(λ))
    Presheaf lhs = phi_star(phi, pb.objs[i]);
    Presheaf rhs = neg_copresheaf(ctx, a, phi_up(nphi, pb.objs[i]));
    if (!(lhs == rhs)) r.add("girard.star", "p" + std::to_string(i));
  }
  PresheafCategory pa = enumerate_presheaves(a, cap);
  for (std::size_t i = 0; i < pa.objs.size(); ++i) {
    // φ_*(μ) = (¬φ)↓(¬μ)
    Presheaf lhs = phi_lowstar(phi, pa.objs[i]);
    Presheaf rhs = phi_down(nphi, neg_presheaf(ctx, a, pa.objs[i]));
    if (!(lhs == rhs)) r.add("girard.lowstar", "p" + std::to_string(i));
  }

  // V = U∘¬ : the Kan closure of φ is the Isbell closure of ¬φ on PB
  for (std::size_t i = 0; i < pb.objs.size(); ++i) {
    Presheaf kan = phi_lowstar(phi, phi_star(phi, pb.objs[i]));
    Presheaf isbell = phi_down(nphi, phi_up(nphi, pb.objs[i]));
    if (!(kan == isbell)) r.add("girard.v_u_neg", "p" + std::to_string(i));
  }

  // K(¬ζ_C) = C(PA) for C = φ↓∘φ↑
  IsbellClosure cls = isbell_closure(phi, cap);
  QDistributor nzeta = neg_dist(ctx, zeta(cls.space));
  FixedPointLattice k = kan_lattice(nzeta, cap);
  std::vector<int> closed = closed_indices(cls.space);
  if (static_cast<int>(k.extents.size()) != static_cast<int>(closed.size()))
    r.add("girard.k_neg_zeta", "fixed point counts differ");
  else
    for (std::size_t i = 0; i < closed.size(); ++i)
      if (!(k.extents[i] == cls.space.pa.objs[closed[i]]))
        r.add("girard.k_neg_zeta", "c" + std::to_string(i));
  return r;
}

}  // namespace qlab
