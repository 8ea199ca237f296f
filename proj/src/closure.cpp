#include "qlab/closure.hpp"

namespace qlab {

EndoReport classify_endo(const QFunctor& f) {
  EndoReport out;
  if (!same_category(f.source, f.target)) {
    out.report.add("endo.boundary", "source and target differ", true);
    return out;
  }
  FunctorReport fr = validate_functor(f);
  out.report.merge(fr.report);
  if (!fr.is_functor) return out;
  out.is_endofunctor = true;
  QFunctor id = identity_functor(f.source);
  QFunctor ff = compose_functors(f, f);
  bool idempotent = functor_iso(ff, f);
  out.is_closure = idempotent && functor_leq(id, f);
  out.is_interior = idempotent && functor_leq(f, id);
  return out;
}

ClosureSystem fixed_points(const QFunctor& f) {
  EndoReport cls = classify_endo(f);
  if (!cls.is_closure && !cls.is_interior)
    throw std::invalid_argument("fixed_points: not a closure or interior operator:\n" +
                                cls.report.to_string());
  const QCategory& a = f.source;
  PreorderInfo ord = underlying_preorder(a);
  auto iso = [&](int x, int y) { return ord.leq[x][y] && ord.leq[y][x]; };
  std::vector<bool> in(a.size(), false);
  for (int x = 0; x < a.size(); ++x)
    if (iso(f.map[x], x)) in[x] = true;
  // saturate under ≅ of the ambient category
  for (int x = 0; x < a.size(); ++x)
    if (!in[x])
      for (int m = 0; m < a.size(); ++m)
        if (in[m] && iso(x, m)) {
          in[x] = true;
          break;
        }
  ClosureSystem out;
  out.ambient = a;
  for (int x = 0; x < a.size(); ++x)
    if (in[x]) out.members.push_back(x);
  out.sub = full_subcategory(a, out.members);
  std::vector<int> incl(out.members.begin(), out.members.end());
  out.inclusion = QFunctor{out.sub, a, incl};
  std::vector<int> core(a.size());
  for (int x = 0; x < a.size(); ++x) {
    int fx = f.map[x];
    int idx = -1;
    for (std::size_t k = 0; k < out.members.size(); ++k)
      if (out.members[k] == fx) idx = static_cast<int>(k);
    if (idx < 0)  // Fx is isomorphic to a member; pick one
      for (std::size_t k = 0; k < out.members.size(); ++k)
        if (iso(out.members[k], fx)) idx = static_cast<int>(k);
    core[x] = idx;
  }
  out.corestriction = QFunctor{a, out.sub, core};
  out.closure_side = cls.is_closure;
  return out;
}

std::optional<QFunctor> inclusion_left_adjoint(const QCategory& ambient,
                                               const std::vector<int>& members) {
  QCategory sub = full_subcategory(ambient, members);
  QFunctor incl{sub, ambient, members};
  for (const QFunctor& g : enumerate_functors(ambient, sub))
    if (is_functor_adjunction(g, incl)) return g;
  return std::nullopt;
}

bool is_closure_system(const QCategory& ambient, const std::vector<int>& members) {
  PreorderInfo ord = underlying_preorder(ambient);
  std::vector<bool> in(ambient.size(), false);
  for (int m : members) in[m] = true;
  for (int m : members)
    for (int x = 0; x < ambient.size(); ++x)
      if (!in[x] && ord.leq[x][m] && ord.leq[m][x]) return false;  // not iso-closed
  return inclusion_left_adjoint(ambient, members).has_value();
}

Report validate_closure_space(const QClosureSpace& space) {
  Report r;
  if (space.op.size() != space.pa.objs.size()) {
    r.add("closure.map", "index map not total over the enumeration", true);
    return r;
  }
  for (int i : space.op)
    if (i < 0 || i >= static_cast<int>(space.pa.objs.size())) {
      r.add("closure.map", "index out of range", true);
      return r;
    }
  EndoReport cls = classify_endo(QFunctor{space.pa.cat, space.pa.cat, space.op});
  r.merge(cls.report);
  if (cls.is_endofunctor && !cls.is_closure) r.add("closure.operator", "not a closure operator");
  return r;
}

QClosureSpace make_closure_space(const QCategory& a, std::vector<int> op, long long cap) {
  QClosureSpace space{a, enumerate_presheaves(a, cap), std::move(op)};
  Report r = validate_closure_space(space);
  if (!r.ok()) throw std::invalid_argument("make_closure_space:\n" + r.to_string());
  return space;
}

QClosureSpace identity_space(const QCategory& a, long long cap) {
  QClosureSpace space{a, enumerate_presheaves(a, cap), {}};
  space.op.resize(space.pa.objs.size());
  for (std::size_t i = 0; i < space.op.size(); ++i) space.op[i] = static_cast<int>(i);
  return space;
}

QClosureSpace canonical_closure(const QCategory& a, long long cap) {
  QClosureSpace space{a, enumerate_presheaves(a, cap), {}};
  space.op.resize(space.pa.objs.size());
  for (std::size_t i = 0; i < space.pa.objs.size(); ++i) {
    auto s = sup_search(a, space.pa.objs[i]);
    if (!s) throw std::invalid_argument("canonical_closure: base category is not complete");
    space.op[i] = space.pa.index_of(yoneda(a, *s));
  }
  return space;
}

QFunctor closure_endofunctor(const QClosureSpace& space) {
  return QFunctor{space.pa.cat, space.pa.cat, space.op};
}

std::vector<int> closed_indices(const QClosureSpace& space) {
  std::vector<int> out;
  for (std::size_t i = 0; i < space.op.size(); ++i)
    if (space.op[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

QCategory closed_subcategory(const QClosureSpace& space) {
  return full_subcategory(space.pa.cat, closed_indices(space));
}

bool is_continuous(const QFunctor& f, const QClosureSpace& c, const QClosureSpace& d) {
  if (!same_category(f.source, c.base) || !same_category(f.target, d.base))
    throw std::invalid_argument("is_continuous: boundary mismatch");
  for (std::size_t i = 0; i < c.pa.objs.size(); ++i) {
    Presheaf lhs = transport_forward(f, c.pa.objs[c.op[i]]);
    int fwd = d.pa.index_of(transport_forward(f, c.pa.objs[i]));
    Presheaf rhs = d.pa.objs[d.op[fwd]];
    if (!presheaf_leq(f.target, lhs, rhs)) return false;
  }
  return true;
}

std::pair<QFunctor, QFunctor> triangle_functors(const QFunctor& f, const QClosureSpace& c,
                                                const QClosureSpace& d) {
  if (!is_continuous(f, c, d)) throw std::invalid_argument("triangle_functors: not continuous");
  std::vector<int> c_closed = closed_indices(c);
  std::vector<int> d_closed = closed_indices(d);
  QCategory xc = full_subcategory(c.pa.cat, c_closed);
  QCategory xd = full_subcategory(d.pa.cat, d_closed);
  auto pos = [](const std::vector<int>& v, int x) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] == x) return static_cast<int>(k);
    return -1;
  };
  QFunctor fwd{xc, xd, {}};
  fwd.map.resize(c_closed.size());
  for (std::size_t k = 0; k < c_closed.size(); ++k) {
    int img = d.pa.index_of(transport_forward(f, c.pa.objs[c_closed[k]]));
    fwd.map[k] = pos(d_closed, d.op[img]);
  }
  QFunctor bwd{xd, xc, {}};
  bwd.map.resize(d_closed.size());
  for (std::size_t k = 0; k < d_closed.size(); ++k) {
    int img = c.pa.index_of(transport_backward(f, d.pa.objs[d_closed[k]]));
    bwd.map[k] = pos(c_closed, img);  // closed already, by continuity
  }
  return {fwd, bwd};
}

QFunctor eta_unit(const QClosureSpace& space) {
  std::vector<int> closed = closed_indices(space);
  QCategory x = full_subcategory(space.pa.cat, closed);
  auto pos = [&](int i) {
    for (std::size_t k = 0; k < closed.size(); ++k)
      if (closed[k] == i) return static_cast<int>(k);
    return -1;
  };
  QFunctor eta{space.base, x, {}};
  eta.map.resize(space.base.size());
  for (int a = 0; a < space.base.size(); ++a)
    eta.map[a] = pos(space.op[space.pa.index_of(yoneda(space.base, a))]);
  return eta;
}

QFunctor universal_extension(const QFunctor& f, const QClosureSpace& c, long long cap) {
  const QCategory& b = f.target;
  QClosureSpace cb = canonical_closure(b, cap);
  if (!is_continuous(f, c, cb))
    throw std::invalid_argument("universal_extension: F is not continuous into (B, C_B)");
  if (!underlying_preorder(b).skeletal)
    throw std::invalid_argument("universal_extension: target is not skeletal");
  std::vector<int> closed = closed_indices(c);
  QCategory x = full_subcategory(c.pa.cat, closed);
  QFunctor ext{x, b, {}};
  ext.map.resize(closed.size());
  for (std::size_t k = 0; k < closed.size(); ++k) {
    auto s = sup_search(b, transport_forward(f, c.pa.objs[closed[k]]));
    if (!s) throw std::invalid_argument("universal_extension: target is not complete");
    ext.map[k] = *s;
  }
  return ext;
}

}  // namespace qlab
