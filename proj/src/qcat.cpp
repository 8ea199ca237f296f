#include "qlab/qcat.hpp"

namespace qlab {

bool same_category(const QCategory& a, const QCategory& b) {
  return same_quantaloid(*a.q, *b.q) && a.objects == b.objects && a.types == b.types &&
         a.hom == b.hom;
}

Report validate_category(const QCategory& a) {
  Report r;
  const Quantaloid& q = *a.q;
  const int n = a.size();
  if (static_cast<int>(a.types.size()) != n) {
    r.add("category.types", "type map not total", true);
    return r;
  }
  for (int x = 0; x < n; ++x)
    if (a.types[x] < 0 || a.types[x] >= q.size()) {
      r.add("category.types", a.objects[x] + " has unknown type", true);
      return r;
    }
  if (static_cast<int>(a.hom.size()) != n) {
    r.add("category.hom", "hom matrix not total", true);
    return r;
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(a.hom[x].size()) != n) {
      r.add("category.hom", "hom row " + a.objects[x] + " not total", true);
      return r;
    }
    for (int y = 0; y < n; ++y)
      if (a.hom[x][y] < 0 || a.hom[x][y] >= q.hom(a.types[x], a.types[y]).size()) {
        r.add("category.hom", "entry (" + a.objects[x] + "," + a.objects[y] + ") outside carrier", true);
        return r;
      }
  }
  for (int x = 0; x < n; ++x) {
    int t = a.types[x];
    if (!q.leq(t, t, q.unit(t), a.at(x, x)))
      r.add("category.unit", a.objects[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Elem comp = q.compose(a.types[x], a.types[y], a.types[z], a.at(y, z), a.at(x, y));
        if (!q.leq(a.types[x], a.types[z], comp, a.at(x, z)))
          r.add("category.compose", "(" + a.objects[x] + "," + a.objects[y] + "," + a.objects[z] + ")");
      }
  return r;
}

PreorderInfo underlying_preorder(const QCategory& a) {
  const Quantaloid& q = *a.q;
  const int n = a.size();
  PreorderInfo info;
  info.leq.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      info.leq[x][y] = a.types[x] == a.types[y] &&
                       q.leq(a.types[x], a.types[x], q.unit(a.types[x]), a.at(x, y));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (info.leq[x][y] && info.leq[y][x]) {
        info.iso_pairs.emplace_back(x, y);
        info.skeletal = false;
      }
  return info;
}

FunctorReport validate_functor(const QFunctor& f) {
  FunctorReport out;
  const QCategory& a = f.source;
  const QCategory& b = f.target;
  if (static_cast<int>(f.map.size()) != a.size()) {
    out.report.add("functor.map", "object map not total", true);
    return out;
  }
  for (int x = 0; x < a.size(); ++x)
    if (f.map[x] < 0 || f.map[x] >= b.size()) {
      out.report.add("functor.map", a.objects[x] + " maps outside the target", true);
      return out;
    }
  out.is_functor = true;
  out.is_fully_faithful = true;
  for (int x = 0; x < a.size(); ++x)
    if (a.types[x] != b.types[f.map[x]]) {
      out.report.add("functor.type_preserving", a.objects[x]);
      out.is_functor = false;
    }
  if (!out.is_functor) {
    out.is_fully_faithful = false;
    return out;
  }
  const Quantaloid& q = *a.q;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      Elem lhs = a.at(x, y);
      Elem rhs = b.at(f.map[x], f.map[y]);
      if (!q.leq(a.types[x], a.types[y], lhs, rhs)) {
        out.report.add("functor.hom_expanding", "(" + a.objects[x] + "," + a.objects[y] + ")");
        out.is_functor = false;
      }
      if (lhs != rhs) out.is_fully_faithful = false;
    }
  if (!out.is_functor) out.is_fully_faithful = false;
  return out;
}

bool functor_leq(const QFunctor& f, const QFunctor& g) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw std::invalid_argument("functor_leq: signature mismatch");
  PreorderInfo ord = underlying_preorder(f.target);
  for (int x = 0; x < f.source.size(); ++x)
    if (!ord.leq[f.map[x]][g.map[x]]) return false;
  return true;
}

bool functor_iso(const QFunctor& f, const QFunctor& g) {
  return functor_leq(f, g) && functor_leq(g, f);
}

QFunctor identity_functor(const QCategory& a) {
  QFunctor f{a, a, {}};
  f.map.resize(a.size());
  for (int x = 0; x < a.size(); ++x) f.map[x] = x;
  return f;
}

QFunctor compose_functors(const QFunctor& g, const QFunctor& f) {
  if (!same_category(f.target, g.source))
    throw std::invalid_argument("compose_functors: boundary mismatch");
  QFunctor out{f.source, g.target, {}};
  out.map.resize(f.source.size());
  for (int x = 0; x < f.source.size(); ++x) out.map[x] = g.map[f.map[x]];
  return out;
}

bool is_functor_adjunction(const QFunctor& f, const QFunctor& g) {
  if (!same_category(f.source, g.target) || !same_category(f.target, g.source))
    throw std::invalid_argument("is_functor_adjunction: signature mismatch");
  return functor_leq(identity_functor(f.source), compose_functors(g, f)) &&
         functor_leq(compose_functors(f, g), identity_functor(f.target));
}

QCategory discrete_category(QuantaloidPtr q, const QTypedSet& base) {
  QCategory a;
  a.q = std::move(q);
  a.objects = base.elems;
  a.types = base.types;
  const int n = a.size();
  a.hom.assign(n, std::vector<Elem>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      a.hom[x][y] = (x == y) ? a.q->unit(a.types[x])
                             : a.q->hom(a.types[x], a.types[y]).bottom;
  return a;
}

QCategory star_category(QuantaloidPtr q, int type_obj) {
  if (type_obj < 0 || type_obj >= q->size())
    throw std::invalid_argument("star_category: unknown object");
  QCategory a;
  a.objects = {"*"};
  a.types = {type_obj};
  a.hom = {{q->unit(type_obj)}};
  a.q = std::move(q);
  return a;
}

QCategory full_subcategory(const QCategory& a, const std::vector<int>& members) {
  QCategory out;
  out.q = a.q;
  for (int m : members) {
    out.objects.push_back(a.objects[m]);
    out.types.push_back(a.types[m]);
  }
  const int n = static_cast<int>(members.size());
  out.hom.assign(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.hom[i][j] = a.at(members[i], members[j]);
  return out;
}

std::vector<QFunctor> enumerate_functors(const QCategory& a, const QCategory& b, long long cap) {
  std::vector<QFunctor> out;
  if (a.size() == 0) {
    out.push_back(QFunctor{a, b, {}});
    return out;
  }
  long long total = 1;
  for (int x = 0; x < a.size(); ++x) {
    total *= b.size();
    if (total > cap) throw std::runtime_error("enumerate_functors: search space exceeds cap");
  }
  std::vector<int> map(a.size(), 0);
  if (b.size() == 0) return out;  // no maps from a nonempty source
  for (;;) {
    QFunctor f{a, b, map};
    if (validate_functor(f).is_functor) out.push_back(std::move(f));
    int i = 0;
    while (i < a.size() && ++map[i] == b.size()) map[i++] = 0;
    if (i == a.size()) break;
  }
  return out;
}

std::optional<QFunctor> find_right_adjoint(const QFunctor& f) {
  for (QFunctor& g : enumerate_functors(f.target, f.source))
    if (is_functor_adjunction(f, g)) return g;
  return std::nullopt;
}

std::optional<QFunctor> find_left_adjoint(const QFunctor& g) {
  for (QFunctor& f : enumerate_functors(g.target, g.source))
    if (is_functor_adjunction(f, g)) return f;
  return std::nullopt;
}

}  // namespace qlab
