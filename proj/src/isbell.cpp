#include "qlab/isbell.hpp"

namespace qlab {

CoPresheaf phi_up(const QDistributor& phi, const Presheaf& mu) {
  return copresheaf_from_dist(dist_left_implication(phi, to_dist(phi.source, mu)));
}

Presheaf phi_down(const QDistributor& phi, const CoPresheaf& lam) {
  return presheaf_from_dist(dist_right_implication(to_dist(phi.target, lam), phi));
}

IsbellClosure isbell_closure(const QDistributor& phi, long long cap) {
  IsbellClosure out;
  PresheafCategory pa = enumerate_presheaves(phi.source, cap);
  std::vector<int> op(pa.objs.size());
  for (std::size_t i = 0; i < pa.objs.size(); ++i) {
    int j = pa.index_of(phi_down(phi, phi_up(phi, pa.objs[i])));
    if (j < 0) throw std::logic_error("isbell_closure: closure image escaped the enumeration");
    op[i] = j;
  }
  out.space = QClosureSpace{phi.source, std::move(pa), std::move(op)};
  Report r = validate_closure_space(out.space);
  if (!r.ok()) throw std::logic_error("isbell_closure: operator is not a closure:\n" + r.to_string());

  out.pdb = enumerate_copresheaves(phi.target, cap);
  out.interior_op.resize(out.pdb.objs.size());
  for (std::size_t i = 0; i < out.pdb.objs.size(); ++i)
    out.interior_op[i] = out.pdb.index_of(phi_up(phi, phi_down(phi, out.pdb.objs[i])));
  return out;
}

FixedPointLattice concept_lattice(const QDistributor& phi, long long cap) {
  IsbellClosure cls = isbell_closure(phi, cap);
  FixedPointLattice out;
  out.kind = "concepts";
  out.phi = phi;
  out.base = phi.source;
  std::vector<int> closed = closed_indices(cls.space);
  for (int i : closed) {
    out.extents.push_back(cls.space.pa.objs[i]);
    out.intents.push_back(phi_up(phi, cls.space.pa.objs[i]));
  }
  out.cat = full_subcategory(cls.space.pa.cat, closed);
  for (std::size_t k = 0; k < out.extents.size(); ++k)
    out.cat.objects[k] = "c" + std::to_string(k);
  return out;
}

QFunctor infomorphism_to_continuous(const Infomorphism& info, long long cap) {
  if (!is_infomorphism(info.F, info.G, info.phi, info.psi))
    throw std::invalid_argument("infomorphism_to_continuous: not an infomorphism");
  QClosureSpace src = isbell_closure(info.phi, cap).space;
  QClosureSpace dst = isbell_closure(info.psi, cap).space;
  if (!is_continuous(info.F, src, dst))
    throw std::logic_error("infomorphism_to_continuous: continuity failed");
  return info.F;
}

QDistributor zeta(const QClosureSpace& space) {
  std::vector<int> closed = closed_indices(space);
  QCategory x = full_subcategory(space.pa.cat, closed);
  QDistributor out{space.base, x, {}};
  out.m.assign(space.base.size(), std::vector<Elem>(closed.size()));
  for (int a = 0; a < space.base.size(); ++a)
    for (std::size_t k = 0; k < closed.size(); ++k)
      out.m[a][k] = space.pa.objs[closed[k]].values[a];
  return out;
}

SpsReport is_state_property_system(const QDistributor& phi, long long cap) {
  const QCategory& b = phi.target;
  CompletenessReport comp = is_complete(b, cap);
  if (!comp.complete)
    throw std::invalid_argument("is_state_property_system: target is not complete");
  if (!underlying_preorder(b).skeletal)
    throw std::invalid_argument("is_state_property_system: target is not skeletal");
  SpsReport out;
  CoPresheafCategory pdb = enumerate_copresheaves(b, cap);
  for (const CoPresheaf& lam : pdb.objs) {
    auto y = inf_search(b, lam);
    if (!y) throw std::logic_error("is_state_property_system: missing infimum in a complete category");
    if (!(phi_down(phi, lam) == dist_column(phi, *y))) {
      out.failing_condition = "phi(-,inf λ) = λ↘phi at p" + std::to_string(pdb.index_of(lam));
      return out;
    }
  }
  for (int y = 0; y < b.size(); ++y)
    for (int yp = 0; yp < b.size(); ++yp)
      if (b.at(y, yp) != hom_pa(phi.source, dist_column(phi, y), dist_column(phi, yp))) {
        out.failing_condition =
            "B(y,y') = phi(-,y')↙phi(-,y) at (" + b.objects[y] + "," + b.objects[yp] + ")";
        return out;
      }
  out.ok = true;
  return out;
}

SpsUnit sps_unit(const QDistributor& phi, long long cap) {
  SpsReport sps = is_state_property_system(phi, cap);
  if (!sps.ok)
    throw std::invalid_argument("sps_unit: not a state property system (" + sps.failing_condition +
                                ")");
  IsbellClosure cls = isbell_closure(phi, cap);
  std::vector<int> closed = closed_indices(cls.space);
  QCategory m = full_subcategory(cls.space.pa.cat, closed);
  auto pos = [&](int i) {
    for (std::size_t k = 0; k < closed.size(); ++k)
      if (closed[k] == i) return static_cast<int>(k);
    return -1;
  };
  SpsUnit out{QFunctor{phi.target, m, {}}, false};
  out.column_map.map.resize(phi.target.size());
  for (int y = 0; y < phi.target.size(); ++y) {
    int idx = cls.space.pa.index_of(dist_column(phi, y));
    int sub = pos(idx);
    if (sub < 0) throw std::logic_error("sps_unit: a column is not closed");
    out.column_map.map[y] = sub;
  }
  FunctorReport fr = validate_functor(out.column_map);
  bool bijective = true;
  std::vector<bool> hit(closed.size(), false);
  for (int v : out.column_map.map) {
    if (hit[v]) bijective = false;
    hit[v] = true;
  }
  for (bool h : hit) bijective = bijective && h;
  out.is_isomorphism = fr.is_fully_faithful && bijective;
  return out;
}

DensePair dense_pair_reconstruction(const QDistributor& phi, long long cap) {
  DensePair out;
  out.lattice = concept_lattice(phi, cap);
  auto extent_index = [&](const Presheaf& e) {
    for (std::size_t k = 0; k < out.lattice.extents.size(); ++k)
      if (out.lattice.extents[k] == e) return static_cast<int>(k);
    return -1;
  };
  out.F = QFunctor{phi.source, out.lattice.cat, {}};
  out.F.map.resize(phi.source.size());
  for (int a = 0; a < phi.source.size(); ++a) {
    int k = extent_index(phi_down(phi, dist_row(phi, a)));
    if (k < 0) throw std::logic_error("dense_pair_reconstruction: Fa escaped the lattice");
    out.F.map[a] = k;
  }
  out.G = QFunctor{phi.target, out.lattice.cat, {}};
  out.G.map.resize(phi.target.size());
  for (int b = 0; b < phi.target.size(); ++b) {
    int k = extent_index(dist_column(phi, b));
    if (k < 0) throw std::logic_error("dense_pair_reconstruction: Gb escaped the lattice");
    out.G.map[b] = k;
  }
  return out;
}

CertifyResult certify_dense_pair(const QDistributor& phi, const QFunctor& f, const QFunctor& g,
                                 long long cap) {
  if (!same_category(f.target, g.target))
    throw std::invalid_argument("certify_dense_pair: F and G must share their target");
  if (!same_category(f.source, phi.source) || !same_category(g.source, phi.target))
    throw std::invalid_argument("certify_dense_pair: boundaries do not match the distributor");
  const QCategory& x = f.target;
  if (!underlying_preorder(x).skeletal)
    throw std::invalid_argument("certify_dense_pair: X is not skeletal");
  if (!is_complete(x, cap).complete)
    throw std::invalid_argument("certify_dense_pair: X is not complete");

  CertifyResult out;
  DensityReport sup_d = sup_density(f, cap);
  if (!sup_d.dense) {
    for (int y = 0; y < x.size(); ++y)
      if (!sup_d.witness[y]) {
        out.counterexample = "F is not sup-dense: " + x.objects[y] + " is not a weighted supremum";
        return out;
      }
  }
  DensityReport inf_d = inf_density(g, cap);
  if (!inf_d.dense) {
    for (int y = 0; y < x.size(); ++y)
      if (!inf_d.witness[y]) {
        out.counterexample = "G is not inf-dense: " + x.objects[y] + " is not a weighted infimum";
        return out;
      }
  }
  for (int a = 0; a < phi.source.size(); ++a)
    for (int b = 0; b < phi.target.size(); ++b)
      if (x.at(f.map[a], g.map[b]) != phi.at(a, b)) {
        out.counterexample = "X(F-,G-) != phi at (" + phi.source.objects[a] + "," +
                             phi.target.objects[b] + ")";
        return out;
      }

  FixedPointLattice m = concept_lattice(phi, cap);
  QFunctor h{x, m.cat, std::vector<int>(x.size(), -1)};
  for (int xi = 0; xi < x.size(); ++xi) {
    Presheaf extent{x.types[xi], std::vector<Elem>(phi.source.size())};
    for (int a = 0; a < phi.source.size(); ++a) extent.values[a] = x.at(f.map[a], xi);
    for (std::size_t k = 0; k < m.extents.size(); ++k)
      if (m.extents[k] == extent) h.map[xi] = static_cast<int>(k);
    if (h.map[xi] < 0) {
      out.counterexample = "H(" + x.objects[xi] + ") is not a concept";
      return out;
    }
  }
  FunctorReport fr = validate_functor(h);
  std::vector<bool> hit(m.extents.size(), false);
  bool bijective = true;
  for (int v : h.map) {
    if (hit[v]) bijective = false;
    hit[v] = true;
  }
  for (bool b : hit) bijective = bijective && b;
  if (!fr.is_fully_faithful || !bijective) {
    out.counterexample = "induced H is not an isomorphism";
    return out;
  }
  out.ok = true;
  out.iso = h;
  return out;
}

}  // namespace qlab
