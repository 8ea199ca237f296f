#include "qlab/presheaf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qlab {

Report validate_presheaf(const QCategory& a, const Presheaf& p) {
  Report r;
  const Quantaloid& q = *a.q;
  if (p.type_obj < 0 || p.type_obj >= q.size()) {
    r.add("presheaf.type", "unknown type object", true);
    return r;
  }
  if (static_cast<int>(p.values.size()) != a.size()) {
    r.add("presheaf.values", "value map not total", true);
    return r;
  }
  for (int x = 0; x < a.size(); ++x)
    if (p.values[x] < 0 || p.values[x] >= q.hom(a.types[x], p.type_obj).size()) {
      r.add("presheaf.values", a.objects[x] + " outside carrier", true);
      return r;
    }
  for (int x = 0; x < a.size(); ++x)
    for (int xp = 0; xp < a.size(); ++xp) {
      Elem lhs = q.compose(a.types[x], a.types[xp], p.type_obj, p.values[xp], a.at(x, xp));
      if (!q.leq(a.types[x], p.type_obj, lhs, p.values[x]))
        r.add("presheaf.action", "(" + a.objects[x] + "," + a.objects[xp] + ")");
    }
  return r;
}

Report validate_copresheaf(const QCategory& a, const CoPresheaf& p) {
  Report r;
  const Quantaloid& q = *a.q;
  if (p.type_obj < 0 || p.type_obj >= q.size()) {
    r.add("copresheaf.type", "unknown type object", true);
    return r;
  }
  if (static_cast<int>(p.values.size()) != a.size()) {
    r.add("copresheaf.values", "value map not total", true);
    return r;
  }
  for (int x = 0; x < a.size(); ++x)
    if (p.values[x] < 0 || p.values[x] >= q.hom(p.type_obj, a.types[x]).size()) {
      r.add("copresheaf.values", a.objects[x] + " outside carrier", true);
      return r;
    }
  for (int x = 0; x < a.size(); ++x)
    for (int xp = 0; xp < a.size(); ++xp) {
      Elem lhs = q.compose(p.type_obj, a.types[x], a.types[xp], a.at(x, xp), p.values[x]);
      if (!q.leq(p.type_obj, a.types[xp], lhs, p.values[xp]))
        r.add("copresheaf.action", "(" + a.objects[x] + "," + a.objects[xp] + ")");
    }
  return r;
}

QDistributor to_dist(const QCategory& a, const Presheaf& p) {
  QDistributor d{a, star_category(a.q, p.type_obj), {}};
  d.m.assign(a.size(), std::vector<Elem>(1));
  for (int x = 0; x < a.size(); ++x) d.m[x][0] = p.values[x];
  return d;
}

QDistributor to_dist(const QCategory& a, const CoPresheaf& p) {
  QDistributor d{star_category(a.q, p.type_obj), a, {}};
  d.m.assign(1, std::vector<Elem>(a.size()));
  for (int x = 0; x < a.size(); ++x) d.m[0][x] = p.values[x];
  return d;
}

Presheaf presheaf_from_dist(const QDistributor& d) {
  if (d.target.size() != 1) throw std::invalid_argument("presheaf_from_dist: target is not a star");
  Presheaf p{d.target.types[0], {}};
  p.values.resize(d.source.size());
  for (int x = 0; x < d.source.size(); ++x) p.values[x] = d.at(x, 0);
  return p;
}

CoPresheaf copresheaf_from_dist(const QDistributor& d) {
  if (d.source.size() != 1) throw std::invalid_argument("copresheaf_from_dist: source is not a star");
  CoPresheaf p{d.source.types[0], {}};
  p.values.resize(d.target.size());
  for (int y = 0; y < d.target.size(); ++y) p.values[y] = d.at(0, y);
  return p;
}

Presheaf dist_column(const QDistributor& phi, int y) {
  Presheaf p{phi.target.types[y], {}};
  p.values.resize(phi.source.size());
  for (int x = 0; x < phi.source.size(); ++x) p.values[x] = phi.at(x, y);
  return p;
}

CoPresheaf dist_row(const QDistributor& phi, int x) {
  CoPresheaf p{phi.source.types[x], {}};
  p.values.resize(phi.target.size());
  for (int y = 0; y < phi.target.size(); ++y) p.values[y] = phi.at(x, y);
  return p;
}

Presheaf yoneda(const QCategory& a, int obj) {
  if (obj < 0 || obj >= a.size()) throw std::invalid_argument("yoneda: unknown object");
  Presheaf p{a.types[obj], {}};
  p.values.resize(a.size());
  for (int x = 0; x < a.size(); ++x) p.values[x] = a.at(x, obj);
  return p;
}

CoPresheaf co_yoneda(const QCategory& a, int obj) {
  if (obj < 0 || obj >= a.size()) throw std::invalid_argument("co_yoneda: unknown object");
  CoPresheaf p{a.types[obj], {}};
  p.values.resize(a.size());
  for (int x = 0; x < a.size(); ++x) p.values[x] = a.at(obj, x);
  return p;
}

Elem hom_pa(const QCategory& a, const Presheaf& mu, const Presheaf& lam) {
  const Quantaloid& q = *a.q;
  const HomLattice& h = q.hom(mu.type_obj, lam.type_obj);
  Elem acc = h.top;
  for (int x = 0; x < a.size(); ++x)
    acc = h.meet(acc, q.limp(a.types[x], mu.type_obj, lam.type_obj, lam.values[x], mu.values[x]));
  return acc;
}

Elem hom_pda(const QCategory& a, const CoPresheaf& mu, const CoPresheaf& lam) {
  const Quantaloid& q = *a.q;
  const HomLattice& h = q.hom(mu.type_obj, lam.type_obj);
  Elem acc = h.top;
  for (int z = 0; z < a.size(); ++z)
    acc = h.meet(acc, q.rimp(lam.type_obj, a.types[z], mu.type_obj, lam.values[z], mu.values[z]));
  return acc;
}

bool presheaf_leq(const QCategory& a, const Presheaf& x, const Presheaf& y) {
  if (x.type_obj != y.type_obj) throw std::invalid_argument("presheaf_leq: type mismatch");
  for (int i = 0; i < a.size(); ++i)
    if (!a.q->leq(a.types[i], x.type_obj, x.values[i], y.values[i])) return false;
  return true;
}

bool copresheaf_leq(const QCategory& a, const CoPresheaf& x, const CoPresheaf& y) {
  if (x.type_obj != y.type_obj) throw std::invalid_argument("copresheaf_leq: type mismatch");
  for (int i = 0; i < a.size(); ++i)
    if (!a.q->leq(x.type_obj, a.types[i], x.values[i], y.values[i])) return false;
  return true;
}

long long presheaf_count_estimate(const QCategory& a, bool covariant) {
  const Quantaloid& q = *a.q;
  long long total = 0;
  for (int t = 0; t < q.size(); ++t) {
    long long maps = 1;
    for (int x = 0; x < a.size(); ++x) {
      int c = covariant ? q.hom(t, a.types[x]).size() : q.hom(a.types[x], t).size();
      maps *= c;
      if (maps > (1LL << 40)) return 1LL << 40;  // saturate; only compared against caps
    }
    total += maps;
    if (total > (1LL << 40)) return 1LL << 40;
  }
  return total;
}

namespace {

// Type objects in id order; within one type, value vectors in lexicographic
// order with the first object most significant.
std::vector<int> type_objects_by_id(const Quantaloid& q) {
  std::vector<int> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return q.objects[i] < q.objects[j]; });
  return order;
}

template <class P, class Valid>
std::vector<P> enumerate_value_maps(const QCategory& a, bool covariant, long long cap, Valid valid) {
  const Quantaloid& q = *a.q;
  long long estimate = presheaf_count_estimate(a, covariant);
  if (estimate > cap) throw CapExceeded(estimate);
  std::vector<P> out;
  for (int t : type_objects_by_id(q)) {
    std::vector<int> sizes(a.size());
    for (int x = 0; x < a.size(); ++x)
      sizes[x] = covariant ? q.hom(t, a.types[x]).size() : q.hom(a.types[x], t).size();
    P p;
    p.type_obj = t;
    p.values.assign(a.size(), 0);
    for (;;) {
      if (valid(p)) out.push_back(p);
      int i = a.size() - 1;
      while (i >= 0 && ++p.values[i] == sizes[i]) p.values[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

QCategory presheaf_cat_skeleton(const QCategory& base, int count) {
  QCategory cat;
  cat.q = base.q;
  cat.objects.resize(count);
  cat.types.resize(count);
  cat.hom.assign(count, std::vector<Elem>(count));
  for (int i = 0; i < count; ++i) cat.objects[i] = "p" + std::to_string(i);
  return cat;
}

// Materializing the hom table is quadratic in the object count; refuse before
// allocating something unusable.
constexpr long long kHomTableLimit = 25'000'000;

}  // namespace

int PresheafCategory::index_of(const Presheaf& p) const {
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    if (objs[i] == p) return i;
  return -1;
}

int CoPresheafCategory::index_of(const CoPresheaf& p) const {
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    if (objs[i] == p) return i;
  return -1;
}

PresheafCategory enumerate_presheaves(const QCategory& a, long long cap) {
  PresheafCategory out;
  out.base = a;
  out.objs = enumerate_value_maps<Presheaf>(
      a, false, cap, [&](const Presheaf& p) { return validate_presheaf(a, p).ok(); });
  const int n = static_cast<int>(out.objs.size());
  if (static_cast<long long>(n) * n > kHomTableLimit)
    throw CapExceeded(n, "presheaf category with " + std::to_string(n) +
                             " objects is too large to materialize");
  out.cat = presheaf_cat_skeleton(a, n);
  for (int i = 0; i < n; ++i) out.cat.types[i] = out.objs[i].type_obj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.cat.hom[i][j] = hom_pa(a, out.objs[i], out.objs[j]);
  return out;
}

CoPresheafCategory enumerate_copresheaves(const QCategory& a, long long cap) {
  CoPresheafCategory out;
  out.base = a;
  out.objs = enumerate_value_maps<CoPresheaf>(
      a, true, cap, [&](const CoPresheaf& p) { return validate_copresheaf(a, p).ok(); });
  const int n = static_cast<int>(out.objs.size());
  if (static_cast<long long>(n) * n > kHomTableLimit)
    throw CapExceeded(n, "copresheaf category with " + std::to_string(n) +
                             " objects is too large to materialize");
  out.cat = presheaf_cat_skeleton(a, n);
  for (int i = 0; i < n; ++i) out.cat.types[i] = out.objs[i].type_obj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.cat.hom[i][j] = hom_pda(a, out.objs[i], out.objs[j]);
  return out;
}

QFunctor yoneda_functor(const PresheafCategory& pa) {
  QFunctor f{pa.base, pa.cat, {}};
  f.map.resize(pa.base.size());
  for (int x = 0; x < pa.base.size(); ++x) f.map[x] = pa.index_of(yoneda(pa.base, x));
  return f;
}

QFunctor co_yoneda_functor(const CoPresheafCategory& pda) {
  QFunctor f{pda.base, pda.cat, {}};
  f.map.resize(pda.base.size());
  for (int x = 0; x < pda.base.size(); ++x) f.map[x] = pda.index_of(co_yoneda(pda.base, x));
  return f;
}

Presheaf transport_forward(const QFunctor& f, const Presheaf& mu) {
  return presheaf_from_dist(compose_dist(to_dist(f.source, mu), cograph(f)));
}

Presheaf transport_backward(const QFunctor& f, const Presheaf& lam) {
  return presheaf_from_dist(compose_dist(to_dist(f.target, lam), graph(f)));
}

CoPresheaf transport_forward_co(const QFunctor& f, const CoPresheaf& mu) {
  return copresheaf_from_dist(compose_dist(graph(f), to_dist(f.source, mu)));
}

CoPresheaf transport_backward_co(const QFunctor& f, const CoPresheaf& lam) {
  return copresheaf_from_dist(compose_dist(cograph(f), to_dist(f.target, lam)));
}

QFunctor transport_functor(const QFunctor& f, Direction dir, const PresheafCategory& pa,
                           const PresheafCategory& pb) {
  QFunctor out{dir == Direction::forward ? pa.cat : pb.cat,
               dir == Direction::forward ? pb.cat : pa.cat,
               {}};
  if (dir == Direction::forward) {
    out.map.resize(pa.objs.size());
    for (std::size_t i = 0; i < pa.objs.size(); ++i)
      out.map[i] = pb.index_of(transport_forward(f, pa.objs[i]));
  } else {
    out.map.resize(pb.objs.size());
    for (std::size_t i = 0; i < pb.objs.size(); ++i)
      out.map[i] = pa.index_of(transport_backward(f, pb.objs[i]));
  }
  return out;
}

QFunctor transport_functor_co(const QFunctor& f, Direction dir, const CoPresheafCategory& pda,
                              const CoPresheafCategory& pdb) {
  QFunctor out{dir == Direction::forward ? pda.cat : pdb.cat,
               dir == Direction::forward ? pdb.cat : pda.cat,
               {}};
  if (dir == Direction::forward) {
    out.map.resize(pda.objs.size());
    for (std::size_t i = 0; i < pda.objs.size(); ++i)
      out.map[i] = pdb.index_of(transport_forward_co(f, pda.objs[i]));
  } else {
    out.map.resize(pdb.objs.size());
    for (std::size_t i = 0; i < pdb.objs.size(); ++i)
      out.map[i] = pda.index_of(transport_backward_co(f, pdb.objs[i]));
  }
  return out;
}

Presheaf sup_formula_pa(const PresheafCategory& pa, const Presheaf& big_phi) {
  // sup Φ = ⋁_{μ} Φ(μ)∘μ
  const QCategory& a = pa.base;
  const Quantaloid& q = *a.q;
  Presheaf out{big_phi.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x) {
    const HomLattice& h = q.hom(a.types[x], big_phi.type_obj);
    Elem acc = h.bottom;
    for (std::size_t i = 0; i < pa.objs.size(); ++i) {
      const Presheaf& mu = pa.objs[i];
      acc = h.join(acc, q.compose(a.types[x], mu.type_obj, big_phi.type_obj, big_phi.values[i],
                                  mu.values[x]));
    }
    out.values[x] = acc;
  }
  return out;
}

Presheaf inf_formula_pa(const PresheafCategory& pa, const CoPresheaf& big_psi) {
  // inf Ψ = ⋀_{μ} Ψ(μ)↘μ
  const QCategory& a = pa.base;
  const Quantaloid& q = *a.q;
  Presheaf out{big_psi.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x) {
    const HomLattice& h = q.hom(a.types[x], big_psi.type_obj);
    Elem acc = h.top;
    for (std::size_t i = 0; i < pa.objs.size(); ++i) {
      const Presheaf& mu = pa.objs[i];
      acc = h.meet(acc, q.rimp(big_psi.type_obj, mu.type_obj, a.types[x], big_psi.values[i],
                               mu.values[x]));
    }
    out.values[x] = acc;
  }
  return out;
}

CoPresheaf sup_formula_pda(const CoPresheafCategory& pda, const Presheaf& big_phi) {
  // sup Φ = (Y†)^♮ ↙ Φ, pointwise ⋀_{λ} λ(a)↙Φ(λ)
  const QCategory& a = pda.base;
  const Quantaloid& q = *a.q;
  CoPresheaf out{big_phi.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x) {
    const HomLattice& h = q.hom(big_phi.type_obj, a.types[x]);
    Elem acc = h.top;
    for (std::size_t i = 0; i < pda.objs.size(); ++i) {
      const CoPresheaf& lam = pda.objs[i];
      acc = h.meet(acc, q.limp(lam.type_obj, big_phi.type_obj, a.types[x], lam.values[x],
                               big_phi.values[i]));
    }
    out.values[x] = acc;
  }
  return out;
}

CoPresheaf inf_formula_pda(const CoPresheafCategory& pda, const CoPresheaf& big_psi) {
  // inf Ψ = (Y†)^♮ ∘ Ψ, pointwise ⋁_{λ} λ(a)∘Ψ(λ)
  const QCategory& a = pda.base;
  const Quantaloid& q = *a.q;
  CoPresheaf out{big_psi.type_obj, std::vector<Elem>(a.size())};
  for (int x = 0; x < a.size(); ++x) {
    const HomLattice& h = q.hom(big_psi.type_obj, a.types[x]);
    Elem acc = h.bottom;
    for (std::size_t i = 0; i < pda.objs.size(); ++i) {
      const CoPresheaf& lam = pda.objs[i];
      acc = h.join(acc, q.compose(big_psi.type_obj, lam.type_obj, a.types[x], lam.values[x],
                                  big_psi.values[i]));
    }
    out.values[x] = acc;
  }
  return out;
}

bool is_sup_of(const QCategory& a, int obj, const Presheaf& mu) {
  if (a.types[obj] != mu.type_obj) return false;
  const Quantaloid& q = *a.q;
  for (int z = 0; z < a.size(); ++z) {
    const HomLattice& h = q.hom(mu.type_obj, a.types[z]);
    Elem acc = h.top;
    for (int x = 0; x < a.size(); ++x)
      acc = h.meet(acc, q.limp(a.types[x], mu.type_obj, a.types[z], a.at(x, z), mu.values[x]));
    if (a.at(obj, z) != acc) return false;
  }
  return true;
}

bool is_inf_of(const QCategory& a, int obj, const CoPresheaf& lam) {
  if (a.types[obj] != lam.type_obj) return false;
  const Quantaloid& q = *a.q;
  for (int x = 0; x < a.size(); ++x) {
    const HomLattice& h = q.hom(a.types[x], lam.type_obj);
    Elem acc = h.top;
    for (int z = 0; z < a.size(); ++z)
      acc = h.meet(acc, q.rimp(lam.type_obj, a.types[z], a.types[x], lam.values[z], a.at(x, z)));
    if (a.at(x, obj) != acc) return false;
  }
  return true;
}

std::optional<int> sup_search(const QCategory& a, const Presheaf& mu) {
  for (int obj = 0; obj < a.size(); ++obj)
    if (is_sup_of(a, obj, mu)) return obj;
  return std::nullopt;
}

std::optional<int> inf_search(const QCategory& a, const CoPresheaf& lam) {
  for (int obj = 0; obj < a.size(); ++obj)
    if (is_inf_of(a, obj, lam)) return obj;
  return std::nullopt;
}

bool is_tensor_of(const QCategory& a, int obj, const QArrow& f, int x) {
  if (f.src != a.types[x]) throw std::invalid_argument("is_tensor_of: arrow must start at tx");
  if (a.types[obj] != f.dst) return false;
  const Quantaloid& q = *a.q;
  for (int z = 0; z < a.size(); ++z)
    if (a.at(obj, z) != q.limp(a.types[x], f.dst, a.types[z], a.at(x, z), f.value)) return false;
  return true;
}

bool is_cotensor_of(const QCategory& a, int obj, const QArrow& f, int x) {
  if (f.dst != a.types[x]) throw std::invalid_argument("is_cotensor_of: arrow must end at tx");
  if (a.types[obj] != f.src) return false;
  const Quantaloid& q = *a.q;
  for (int y = 0; y < a.size(); ++y)
    if (a.at(y, obj) != q.rimp(f.src, a.types[x], a.types[y], f.value, a.at(y, x))) return false;
  return true;
}

std::optional<int> tensor_search(const QCategory& a, const QArrow& f, int x) {
  for (int obj = 0; obj < a.size(); ++obj)
    if (is_tensor_of(a, obj, f, x)) return obj;
  return std::nullopt;
}

std::optional<int> cotensor_search(const QCategory& a, const QArrow& f, int x) {
  for (int obj = 0; obj < a.size(); ++obj)
    if (is_cotensor_of(a, obj, f, x)) return obj;
  return std::nullopt;
}

std::optional<int> weighted_colim(const QFunctor& f, const Presheaf& mu) {
  const QCategory& b = f.target;
  const Quantaloid& q = *b.q;
  for (int c = 0; c < b.size(); ++c) {
    if (b.types[c] != mu.type_obj) continue;
    bool good = true;
    for (int z = 0; z < b.size() && good; ++z) {
      const HomLattice& h = q.hom(mu.type_obj, b.types[z]);
      Elem acc = h.top;
      for (int x = 0; x < f.source.size(); ++x)
        acc = h.meet(acc, q.limp(f.source.types[x], mu.type_obj, b.types[z],
                                 b.at(f.map[x], z), mu.values[x]));
      good = b.at(c, z) == acc;
    }
    if (good) return c;
  }
  return std::nullopt;
}

std::optional<int> weighted_lim(const QFunctor& f, const CoPresheaf& lam) {
  const QCategory& b = f.target;
  const Quantaloid& q = *b.q;
  for (int c = 0; c < b.size(); ++c) {
    if (b.types[c] != lam.type_obj) continue;
    bool good = true;
    for (int y = 0; y < b.size() && good; ++y) {
      const HomLattice& h = q.hom(b.types[y], lam.type_obj);
      Elem acc = h.top;
      for (int x = 0; x < f.source.size(); ++x)
        acc = h.meet(acc, q.rimp(lam.type_obj, f.source.types[x], b.types[y], lam.values[x],
                                 b.at(y, f.map[x])));
      good = b.at(y, c) == acc;
    }
    if (good) return c;
  }
  return std::nullopt;
}

namespace {

// Join of a subset of same-type objects in the underlying preorder, if any.
std::optional<int> preorder_join(const QCategory& a, const PreorderInfo& ord,
                                 const std::vector<int>& subset, int type_obj) {
  for (int z = 0; z < a.size(); ++z) {
    if (a.types[z] != type_obj) continue;
    bool ub = true;
    for (int s : subset)
      if (!ord.leq[s][z]) {
        ub = false;
        break;
      }
    if (!ub) continue;
    bool least = true;
    for (int u = 0; u < a.size() && least; ++u) {
      if (a.types[u] != type_obj) continue;
      bool also_ub = true;
      for (int s : subset)
        if (!ord.leq[s][u]) {
          also_ub = false;
          break;
        }
      if (also_ub && !ord.leq[z][u]) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

}  // namespace

CompletenessReport is_complete(const QCategory& a, long long cap) {
  CompletenessReport out;
  PresheafCategory pa = enumerate_presheaves(a, cap);
  out.sup_of.resize(pa.objs.size());
  out.complete = true;
  for (std::size_t i = 0; i < pa.objs.size(); ++i) {
    out.sup_of[i] = sup_search(a, pa.objs[i]);
    if (!out.sup_of[i]) out.complete = false;
  }
  const Quantaloid& q = *a.q;
  PreorderInfo ord = underlying_preorder(a);

  // tensored + cotensored + order-complete, for the equivalence check
  bool tensored = true, cotensored = true, order_complete = true;
  for (int x = 0; x < a.size(); ++x)
    for (int t = 0; t < q.size(); ++t) {
      for (Elem v = 0; v < q.hom(a.types[x], t).size(); ++v)
        if (!tensor_search(a, QArrow{a.types[x], t, v}, x)) tensored = false;
      for (Elem v = 0; v < q.hom(t, a.types[x]).size(); ++v)
        if (!cotensor_search(a, QArrow{t, a.types[x], v}, x)) cotensored = false;
    }
  for (int t = 0; t < q.size(); ++t) {
    std::vector<int> of_type;
    for (int x = 0; x < a.size(); ++x)
      if (a.types[x] == t) of_type.push_back(x);
    if (of_type.size() > 20) continue;  // subsets sweep would be astronomical
    for (unsigned mask = 0; mask < (1u << of_type.size()); ++mask) {
      std::vector<int> subset;
      for (std::size_t k = 0; k < of_type.size(); ++k)
        if (mask & (1u << k)) subset.push_back(of_type[k]);
      if (!preorder_join(a, ord, subset, t)) {
        order_complete = false;
        break;
      }
    }
  }
  bool by_characterization = tensored && cotensored && order_complete;
  if (by_characterization != out.complete)
    out.cross_checks.add("complete.characterization",
                         std::string("tensored+cotensored+order-complete = ") +
                             (by_characterization ? "true" : "false") + " but sup witness scan = " +
                             (out.complete ? "true" : "false"));

  if (out.complete) {
    // sup μ = ⋁_a (μ(a) ⊗ a), joins taken in the underlying preorder
    for (std::size_t i = 0; i < pa.objs.size(); ++i) {
      const Presheaf& mu = pa.objs[i];
      std::vector<int> tensors;
      bool all_present = true;
      for (int x = 0; x < a.size(); ++x) {
        auto t = tensor_search(a, QArrow{a.types[x], mu.type_obj, mu.values[x]}, x);
        if (!t) {
          all_present = false;
          break;
        }
        tensors.push_back(*t);
      }
      if (!all_present) {
        out.cross_checks.add("complete.sup_formula", "missing tensor for p" + std::to_string(i));
        continue;
      }
      auto join = preorder_join(a, ord, tensors, mu.type_obj);
      if (!join || !is_sup_of(a, *join, mu))
        out.cross_checks.add("complete.sup_formula", "p" + std::to_string(i));
    }
  }
  return out;
}

DensityReport sup_density(const QFunctor& f, long long cap) {
  DensityReport out;
  PresheafCategory pa = enumerate_presheaves(f.source, cap);
  out.dense = true;
  out.witness.resize(f.target.size());
  for (int y = 0; y < f.target.size(); ++y) {
    for (std::size_t i = 0; i < pa.objs.size(); ++i)
      if (is_sup_of(f.target, y, transport_forward(f, pa.objs[i]))) {
        out.witness[y] = static_cast<int>(i);
        break;
      }
    if (!out.witness[y]) out.dense = false;
  }
  return out;
}

DensityReport inf_density(const QFunctor& f, long long cap) {
  DensityReport out;
  CoPresheafCategory pda = enumerate_copresheaves(f.source, cap);
  out.dense = true;
  out.witness.resize(f.target.size());
  for (int y = 0; y < f.target.size(); ++y) {
    for (std::size_t i = 0; i < pda.objs.size(); ++i)
      if (is_inf_of(f.target, y, transport_forward_co(f, pda.objs[i]))) {
        out.witness[y] = static_cast<int>(i);
        break;
      }
    if (!out.witness[y]) out.dense = false;
  }
  return out;
}

namespace {

bool extend_iso(const QCategory& a, const QCategory& b, std::vector<int>& map,
                std::vector<bool>& used, int x) {
  if (x == a.size()) return true;
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || a.types[x] != b.types[y]) continue;
    bool consistent = true;
    for (int prev = 0; prev < x && consistent; ++prev)
      consistent = a.at(prev, x) == b.at(map[prev], y) && a.at(x, prev) == b.at(y, map[prev]);
    if (consistent && a.at(x, x) == b.at(y, y)) {
      map[x] = y;
      used[y] = true;
      if (extend_iso(a, b, map, used, x + 1)) return true;
      used[y] = false;
    }
  }
  return false;
}

}  // namespace

std::optional<QFunctor> find_isomorphism(const QCategory& a, const QCategory& b) {
  if (a.size() != b.size() || !same_quantaloid(*a.q, *b.q)) return std::nullopt;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (!extend_iso(a, b, map, used, 0)) return std::nullopt;
  return QFunctor{a, b, map};
}

}  // namespace qlab
