#include "qlab/qdist.hpp"

namespace qlab {

namespace {

void require_boundaries(const QCategory& x, const QCategory& y, const char* who) {
  if (!same_category(x, y)) throw std::invalid_argument(std::string(who) + ": boundary mismatch");
}

}  // namespace

bool dist_eq(const QDistributor& a, const QDistributor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.m == b.m;
}

bool dist_leq(const QDistributor& a, const QDistributor& b) {
  require_boundaries(a.source, b.source, "dist_leq");
  require_boundaries(a.target, b.target, "dist_leq");
  const Quantaloid& q = *a.source.q;
  for (int x = 0; x < a.source.size(); ++x)
    for (int y = 0; y < a.target.size(); ++y)
      if (!q.leq(a.source.types[x], a.target.types[y], a.at(x, y), b.at(x, y))) return false;
  return true;
}

Report validate_distributor(const QDistributor& phi) {
  Report r;
  const QCategory& a = phi.source;
  const QCategory& b = phi.target;
  const Quantaloid& q = *a.q;
  if (static_cast<int>(phi.m.size()) != a.size()) {
    r.add("distributor.matrix", "matrix not total", true);
    return r;
  }
  for (int x = 0; x < a.size(); ++x) {
    if (static_cast<int>(phi.m[x].size()) != b.size()) {
      r.add("distributor.matrix", "row " + a.objects[x] + " not total", true);
      return r;
    }
    for (int y = 0; y < b.size(); ++y)
      if (phi.m[x][y] < 0 || phi.m[x][y] >= q.hom(a.types[x], b.types[y]).size()) {
        r.add("distributor.matrix", "entry (" + a.objects[x] + "," + b.objects[y] + ") outside carrier",
              true);
        return r;
      }
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      for (int yp = 0; yp < b.size(); ++yp) {
        Elem lhs = q.compose(a.types[x], b.types[yp], b.types[y], b.at(yp, y), phi.at(x, yp));
        if (!q.leq(a.types[x], b.types[y], lhs, phi.at(x, y)))
          r.add("distributor.target_action",
                "(" + a.objects[x] + "," + b.objects[yp] + "," + b.objects[y] + ")");
      }
  for (int x = 0; x < a.size(); ++x)
    for (int xp = 0; xp < a.size(); ++xp)
      for (int y = 0; y < b.size(); ++y) {
        Elem lhs = q.compose(a.types[x], a.types[xp], b.types[y], phi.at(xp, y), a.at(x, xp));
        if (!q.leq(a.types[x], b.types[y], lhs, phi.at(x, y)))
          r.add("distributor.source_action",
                "(" + a.objects[x] + "," + a.objects[xp] + "," + b.objects[y] + ")");
      }
  return r;
}

QDistributor identity_dist(const QCategory& a) { return QDistributor{a, a, a.hom}; }

QDistributor bottom_dist(const QCategory& a, const QCategory& b) {
  QDistributor d{a, b, {}};
  d.m.assign(a.size(), std::vector<Elem>(b.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      d.m[x][y] = a.q->hom(a.types[x], b.types[y]).bottom;
  return d;
}

QDistributor compose_dist(const QDistributor& psi, const QDistributor& phi) {
  require_boundaries(phi.target, psi.source, "compose_dist");
  const QCategory& a = phi.source;
  const QCategory& b = phi.target;
  const QCategory& c = psi.target;
  const Quantaloid& q = *a.q;
  QDistributor out{a, c, {}};
  out.m.assign(a.size(), std::vector<Elem>(c.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int z = 0; z < c.size(); ++z) {
      const HomLattice& h = q.hom(a.types[x], c.types[z]);
      Elem acc = h.bottom;
      for (int y = 0; y < b.size(); ++y)
        acc = h.join(acc, q.compose(a.types[x], b.types[y], c.types[z], psi.at(y, z), phi.at(x, y)));
      out.m[x][z] = acc;
    }
  return out;
}

QDistributor dist_left_implication(const QDistributor& eta, const QDistributor& phi) {
  require_boundaries(eta.source, phi.source, "dist_left_implication");
  const QCategory& a = phi.source;
  const QCategory& b = phi.target;
  const QCategory& c = eta.target;
  const Quantaloid& q = *a.q;
  QDistributor out{b, c, {}};
  out.m.assign(b.size(), std::vector<Elem>(c.size()));
  for (int y = 0; y < b.size(); ++y)
    for (int z = 0; z < c.size(); ++z) {
      const HomLattice& h = q.hom(b.types[y], c.types[z]);
      Elem acc = h.top;
      for (int x = 0; x < a.size(); ++x)
        acc = h.meet(acc, q.limp(a.types[x], b.types[y], c.types[z], eta.at(x, z), phi.at(x, y)));
      out.m[y][z] = acc;
    }
  return out;
}

QDistributor dist_right_implication(const QDistributor& psi, const QDistributor& eta) {
  require_boundaries(psi.target, eta.target, "dist_right_implication");
  const QCategory& a = eta.source;
  const QCategory& b = psi.source;
  const QCategory& c = psi.target;
  const Quantaloid& q = *a.q;
  QDistributor out{a, b, {}};
  out.m.assign(a.size(), std::vector<Elem>(b.size()));
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      const HomLattice& h = q.hom(a.types[x], b.types[y]);
      Elem acc = h.top;
      for (int z = 0; z < c.size(); ++z)
        acc = h.meet(acc, q.rimp(b.types[y], c.types[z], a.types[x], psi.at(y, z), eta.at(x, z)));
      out.m[x][y] = acc;
    }
  return out;
}

QDistributor dist_join(const QDistributor& a, const QDistributor& b) {
  require_boundaries(a.source, b.source, "dist_join");
  require_boundaries(a.target, b.target, "dist_join");
  QDistributor out = a;
  for (int x = 0; x < a.source.size(); ++x)
    for (int y = 0; y < a.target.size(); ++y)
      out.m[x][y] = a.source.q->hom(a.source.types[x], a.target.types[y]).join(a.at(x, y), b.at(x, y));
  return out;
}

QDistributor dist_meet(const QDistributor& a, const QDistributor& b) {
  require_boundaries(a.source, b.source, "dist_meet");
  require_boundaries(a.target, b.target, "dist_meet");
  QDistributor out = a;
  for (int x = 0; x < a.source.size(); ++x)
    for (int y = 0; y < a.target.size(); ++y)
      out.m[x][y] = a.source.q->hom(a.source.types[x], a.target.types[y]).meet(a.at(x, y), b.at(x, y));
  return out;
}

QDistributor graph(const QFunctor& f) {
  FunctorReport fr = validate_functor(f);
  if (!fr.is_functor) throw std::invalid_argument("graph: invalid functor");
  QDistributor out{f.source, f.target, {}};
  out.m.assign(f.source.size(), std::vector<Elem>(f.target.size()));
  for (int x = 0; x < f.source.size(); ++x)
    for (int y = 0; y < f.target.size(); ++y) out.m[x][y] = f.target.at(f.map[x], y);
  return out;
}

QDistributor cograph(const QFunctor& f) {
  FunctorReport fr = validate_functor(f);
  if (!fr.is_functor) throw std::invalid_argument("cograph: invalid functor");
  QDistributor out{f.target, f.source, {}};
  out.m.assign(f.target.size(), std::vector<Elem>(f.source.size()));
  for (int y = 0; y < f.target.size(); ++y)
    for (int x = 0; x < f.source.size(); ++x) out.m[y][x] = f.target.at(y, f.map[x]);
  return out;
}

bool is_dist_adjunction(const QDistributor& phi, const QDistributor& psi) {
  require_boundaries(phi.source, psi.target, "is_dist_adjunction");
  require_boundaries(phi.target, psi.source, "is_dist_adjunction");
  return dist_leq(identity_dist(phi.source), compose_dist(psi, phi)) &&
         dist_leq(compose_dist(phi, psi), identity_dist(phi.target));
}

bool is_infomorphism(const QFunctor& F, const QFunctor& G, const QDistributor& phi,
                     const QDistributor& psi) {
  require_boundaries(F.source, phi.source, "is_infomorphism");
  require_boundaries(F.target, psi.source, "is_infomorphism");
  require_boundaries(G.source, psi.target, "is_infomorphism");
  require_boundaries(G.target, phi.target, "is_infomorphism");
  // pointwise form of G^♮∘φ = ψ∘F_♮
  for (int x = 0; x < phi.source.size(); ++x)
    for (int yp = 0; yp < psi.target.size(); ++yp)
      if (phi.at(x, G.map[yp]) != psi.at(F.map[x], yp)) return false;
  return true;
}

Infomorphism identity_infomorphism(const QDistributor& phi) {
  return Infomorphism{identity_functor(phi.source), identity_functor(phi.target), phi, phi};
}

Infomorphism compose_infomorphisms(const Infomorphism& second, const Infomorphism& first) {
  if (!dist_eq(first.psi, second.phi))
    throw std::invalid_argument("compose_infomorphisms: middle distributor mismatch");
  return Infomorphism{compose_functors(second.F, first.F), compose_functors(first.G, second.G),
                      first.phi, second.psi};
}

std::vector<QDistributor> enumerate_distributors(const QCategory& a, const QCategory& b,
                                                 long long cap) {
  const Quantaloid& q = *a.q;
  long long total = 1;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      total *= q.hom(a.types[x], b.types[y]).size();
      if (total > cap) throw std::runtime_error("enumerate_distributors: search space exceeds cap");
    }
  std::vector<QDistributor> out;
  QDistributor d = bottom_dist(a, b);
  const int cells = a.size() * b.size();
  std::vector<Elem> flat(cells, 0);
  for (;;) {
    for (int i = 0; i < cells; ++i) d.m[i / std::max(b.size(), 1)][i % std::max(b.size(), 1)] = flat[i];
    if (validate_distributor(d).ok()) out.push_back(d);
    int i = 0;
    while (i < cells) {
      int x = i / b.size(), y = i % b.size();
      if (++flat[i] < q.hom(a.types[x], b.types[y]).size()) break;
      flat[i++] = 0;
    }
    if (i == cells) break;
  }
  return out;
}

}  // namespace qlab
