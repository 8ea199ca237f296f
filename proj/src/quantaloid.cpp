#include "qlab/quantaloid.hpp"

#include <algorithm>
#include <set>

namespace qlab {

namespace {

std::string elem_name(const HomLattice& h, Elem e) {
  if (e >= 0 && e < h.size()) return h.carrier[e];
  return "#" + std::to_string(e);
}

std::string hom_name(const Quantaloid& q, int a, int b) {
  return "hom(" + q.objects[a] + "," + q.objects[b] + ")";
}

}  // namespace

HomLattice lattice_from_order(std::vector<std::string> carrier,
                              std::vector<std::vector<bool>> order) {
  const int n = static_cast<int>(carrier.size());
  if (n == 0) throw std::runtime_error("empty carrier: a complete lattice has at least one element");
  HomLattice h;
  h.carrier = std::move(carrier);
  h.order = std::move(order);
  h.joins.assign(n, std::vector<Elem>(n, 0));
  h.meets.assign(n, std::vector<Elem>(n, 0));
  auto lub = [&](Elem a, Elem b) -> Elem {
    Elem best = -1;
    for (Elem u = 0; u < n; ++u) {
      if (!h.order[a][u] || !h.order[b][u]) continue;
      if (best == -1 || h.order[u][best]) best = u;
    }
    if (best == -1) throw std::runtime_error("no upper bound for {" + h.carrier[a] + "," + h.carrier[b] + "}");
    for (Elem u = 0; u < n; ++u)
      if (h.order[a][u] && h.order[b][u] && !h.order[best][u])
        throw std::runtime_error("no least upper bound for {" + h.carrier[a] + "," + h.carrier[b] + "}");
    return best;
  };
  auto glb = [&](Elem a, Elem b) -> Elem {
    Elem best = -1;
    for (Elem u = 0; u < n; ++u) {
      if (!h.order[u][a] || !h.order[u][b]) continue;
      if (best == -1 || h.order[best][u]) best = u;
    }
    if (best == -1) throw std::runtime_error("no lower bound for {" + h.carrier[a] + "," + h.carrier[b] + "}");
    for (Elem u = 0; u < n; ++u)
      if (h.order[u][a] && h.order[u][b] && !h.order[u][best])
        throw std::runtime_error("no greatest lower bound for {" + h.carrier[a] + "," + h.carrier[b] + "}");
    return best;
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      h.joins[a][b] = lub(a, b);
      h.meets[a][b] = glb(a, b);
    }
  h.top = 0;
  h.bottom = 0;
  for (Elem e = 1; e < n; ++e) {
    h.top = h.joins[h.top][e];
    h.bottom = h.meets[h.bottom][e];
  }
  return h;
}

Elem Quantaloid::limp(int a, int b, int x, Elem g, Elem f) const {
  // join over the filtered carrier of hom(b,x)
  const HomLattice& bx = hom(b, x);
  Elem acc = bx.bottom;
  for (Elem h = 0; h < bx.size(); ++h)
    if (leq(a, x, compose(a, b, x, h, f), g)) acc = bx.join(acc, h);
  return acc;
}

Elem Quantaloid::rimp(int a, int b, int x, Elem f, Elem g) const {
  const HomLattice& xa = hom(x, a);
  Elem acc = xa.bottom;
  for (Elem h = 0; h < xa.size(); ++h)
    if (leq(x, b, compose(x, a, b, f, h), g)) acc = xa.join(acc, h);
  return acc;
}

bool same_quantaloid(const Quantaloid& p, const Quantaloid& q) {
  if (&p == &q) return true;
  if (p.objects != q.objects || p.units != q.units) return false;
  if (p.homs.size() != q.homs.size() || p.comp != q.comp) return false;
  for (std::size_t i = 0; i < p.homs.size(); ++i) {
    const HomLattice& x = p.homs[i];
    const HomLattice& y = q.homs[i];
    if (x.carrier != y.carrier || x.order != y.order || x.joins != y.joins ||
        x.meets != y.meets || x.top != y.top || x.bottom != y.bottom)
      return false;
  }
  return true;
}

namespace {

// Structural pass: every table total over the declared carriers.
Report check_structure(const Quantaloid& q) {
  Report r;
  const int n = q.size();
  std::set<std::string> ids(q.objects.begin(), q.objects.end());
  if (static_cast<int>(ids.size()) != n)
    r.add("objects.distinct", "duplicate object identifier", true);
  if (static_cast<int>(q.homs.size()) != n * n) {
    r.add("homs.shape", "expected " + std::to_string(n * n) + " hom-lattices", true);
    return r;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      const int m = h.size();
      const std::string where = hom_name(q, a, b);
      if (m == 0) {
        r.add("carrier.nonempty", where, true);
        continue;
      }
      std::set<std::string> elems(h.carrier.begin(), h.carrier.end());
      if (static_cast<int>(elems.size()) != m)
        r.add("carrier.distinct", where, true);
      auto square = [&](const auto& t, const std::string& name) {
        if (static_cast<int>(t.size()) != m) {
          r.add(name + ".shape", where, true);
          return false;
        }
        for (const auto& row : t)
          if (static_cast<int>(row.size()) != m) {
            r.add(name + ".shape", where, true);
            return false;
          }
        return true;
      };
      bool shapes = square(h.order, "leq") & square(h.joins, "joins") & square(h.meets, "meets");
      if (!shapes) continue;
      for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) {
          if (h.joins[i][j] < 0 || h.joins[i][j] >= m)
            r.add("joins.range", where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ")", true);
          if (h.meets[i][j] < 0 || h.meets[i][j] >= m)
            r.add("meets.range", where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ")", true);
        }
      if (h.top < 0 || h.top >= m) r.add("top.range", where, true);
      if (h.bottom < 0 || h.bottom >= m) r.add("bottom.range", where, true);
    }
  if (static_cast<int>(q.comp.size()) != n * n * n) {
    r.add("compose.shape", "expected " + std::to_string(n * n * n) + " tables", true);
    return r;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& t = q.comp[(a * n + b) * n + c];
        const std::string where = q.objects[a] + "->" + q.objects[b] + "->" + q.objects[c];
        if (static_cast<int>(t.size()) != q.hom(b, c).size()) {
          r.add("compose.shape", where, true);
          continue;
        }
        for (const auto& row : t) {
          if (static_cast<int>(row.size()) != q.hom(a, b).size()) {
            r.add("compose.shape", where, true);
            break;
          }
          for (Elem e : row)
            if (e < 0 || e >= q.hom(a, c).size()) {
              r.add("compose.range", where, true);
              break;
            }
        }
      }
  if (static_cast<int>(q.units.size()) != n)
    r.add("units.shape", "expected one unit per object", true);
  else
    for (int a = 0; a < n; ++a)
      if (q.units[a] < 0 || q.units[a] >= q.hom(a, a).size())
        r.add("units.range", q.objects[a], true);
  return r;
}

void check_lattice_laws(const Quantaloid& q, int a, int b, Report& r) {
  const HomLattice& h = q.hom(a, b);
  const int m = h.size();
  const std::string where = hom_name(q, a, b);
  for (Elem i = 0; i < m; ++i)
    if (!h.order[i][i]) r.add("order.reflexive", where + " at " + elem_name(h, i));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      if (i != j && h.order[i][j] && h.order[j][i])
        r.add("order.antisymmetric", where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ")");
      for (Elem k = 0; k < m; ++k)
        if (h.order[i][j] && h.order[j][k] && !h.order[i][k])
          r.add("order.transitive",
                where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + "," + elem_name(h, k) + ")");
    }
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem s = h.joins[i][j];
      if (!h.order[i][s] || !h.order[j][s])
        r.add("join.upper_bound", where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ")");
      const Elem t = h.meets[i][j];
      if (!h.order[t][i] || !h.order[t][j])
        r.add("meet.lower_bound", where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ")");
      for (Elem u = 0; u < m; ++u) {
        if (h.order[i][u] && h.order[j][u] && !h.order[s][u])
          r.add("join.least",
                where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ") witness " + elem_name(h, u));
        if (h.order[u][i] && h.order[u][j] && !h.order[u][t])
          r.add("meet.greatest",
                where + " at (" + elem_name(h, i) + "," + elem_name(h, j) + ") witness " + elem_name(h, u));
      }
    }
  for (Elem e = 0; e < m; ++e) {
    if (!h.order[h.bottom][e]) r.add("bottom.least", where + " at " + elem_name(h, e));
    if (!h.order[e][h.top]) r.add("top.greatest", where + " at " + elem_name(h, e));
  }
}

// Join preservation in both variables.  Exhaustive over all subsets when the
// carrier is small enough for a bitmask sweep, binary + empty joins otherwise
// (which already imply the general case for finite lattices).
void check_join_preservation(const Quantaloid& q, int a, int b, int c, Report& r) {
  const HomLattice& ab = q.hom(a, b);
  const HomLattice& bc = q.hom(b, c);
  const HomLattice& ac = q.hom(a, c);
  const std::string where = q.objects[a] + "->" + q.objects[b] + "->" + q.objects[c];
  auto sweep = [&](const HomLattice& varying, auto apply, const char* side) {
    const int m = varying.size();
    const int fixed_count = (side[0] == 'l') ? bc.size() : ab.size();
    for (Elem g = 0; g < fixed_count; ++g) {
      if (m <= 14) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          Elem join_in = varying.bottom;
          Elem join_out = ac.bottom;
          for (Elem f = 0; f < m; ++f)
            if (mask & (1u << f)) {
              join_in = varying.join(join_in, f);
              join_out = ac.join(join_out, apply(g, f));
            }
          if (apply(g, join_in) != join_out)
            r.add(std::string("compose.join_preservation.") + side,
                  where + " fixed " + std::to_string(g) + " mask " + std::to_string(mask));
        }
      } else {
        Elem bot_out = apply(g, varying.bottom);
        if (bot_out != ac.bottom)
          r.add(std::string("compose.join_preservation.") + side, where + " empty join");
        for (Elem f1 = 0; f1 < m; ++f1)
          for (Elem f2 = 0; f2 < m; ++f2)
            if (apply(g, varying.join(f1, f2)) != ac.join(apply(g, f1), apply(g, f2)))
              r.add(std::string("compose.join_preservation.") + side,
                    where + " binary (" + std::to_string(f1) + "," + std::to_string(f2) + ")");
      }
    }
  };
  sweep(ab, [&](Elem g, Elem f) { return q.compose(a, b, c, g, f); }, "left");
  sweep(bc, [&](Elem f, Elem g) { return q.compose(a, b, c, g, f); }, "right");
}

}  // namespace

Report validate_quantaloid(const Quantaloid& q) {
  Report r = check_structure(q);
  if (!r.ok()) return r;
  const int n = q.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) check_lattice_laws(q, a, b, r);
  if (!r.ok()) return r;  // lattice laws are assumed by the rest
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& ab = q.hom(a, b);
      for (Elem f = 0; f < ab.size(); ++f) {
        if (q.compose(a, a, b, f, q.unit(a)) != f)
          r.add("unit.right", hom_name(q, a, b) + " f=" + elem_name(ab, f));
        if (q.compose(a, b, b, q.unit(b), f) != f)
          r.add("unit.left", hom_name(q, a, b) + " f=" + elem_name(ab, f));
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        check_join_preservation(q, a, b, c, r);
        for (int d = 0; d < n; ++d)
          for (Elem f = 0; f < q.hom(a, b).size(); ++f)
            for (Elem g = 0; g < q.hom(b, c).size(); ++g)
              for (Elem h = 0; h < q.hom(c, d).size(); ++h) {
                Elem lhs = q.compose(a, b, d, q.compose(b, c, d, h, g), f);
                Elem rhs = q.compose(a, c, d, h, q.compose(a, b, c, g, f));
                if (lhs != rhs)
                  r.add("compose.assoc",
                        q.objects[a] + "->" + q.objects[b] + "->" + q.objects[c] + "->" + q.objects[d] +
                            " (f=" + elem_name(q.hom(a, b), f) + ",g=" + elem_name(q.hom(b, c), g) +
                            ",h=" + elem_name(q.hom(c, d), h) + ")");
              }
      }
  return r;
}

QArrow left_implication(const Quantaloid& q, const QArrow& g, const QArrow& f) {
  if (g.src != f.src) throw std::invalid_argument("left_implication: source mismatch");
  return QArrow{f.dst, g.dst, q.limp(f.src, f.dst, g.dst, g.value, f.value)};
}

QArrow right_implication(const Quantaloid& q, const QArrow& f, const QArrow& g) {
  if (f.dst != g.dst) throw std::invalid_argument("right_implication: target mismatch");
  return QArrow{g.src, f.src, q.rimp(f.src, f.dst, g.src, f.value, g.value)};
}

bool is_arrow_adjunction(const Quantaloid& q, const QArrow& f, const QArrow& g) {
  if (f.dst != g.src || f.src != g.dst) throw std::invalid_argument("is_arrow_adjunction: type mismatch");
  const int a = f.src, b = f.dst;
  return q.leq(a, a, q.unit(a), q.compose(a, b, a, g.value, f.value)) &&
         q.leq(b, b, q.compose(b, a, b, f.value, g.value), q.unit(b));
}

Report validate_dualizing_family(const Quantaloid& q, const DualizingFamily& fam) {
  Report r;
  const int n = q.size();
  if (static_cast<int>(fam.d.size()) != n) {
    r.add("dualizing.shape", "expected one element per object", true);
    return r;
  }
  for (int a = 0; a < n; ++a)
    if (fam.d[a] < 0 || fam.d[a] >= q.hom(a, a).size()) {
      r.add("dualizing.range", q.objects[a], true);
      return r;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& ab = q.hom(a, b);
      for (Elem f = 0; f < ab.size(); ++f) {
        Elem da_f = q.limp(a, b, a, fam.d[a], f);   // d_a ↙ f : b -> a
        Elem f_db = q.rimp(a, b, b, f, fam.d[b]);   // f ↘ d_b : b -> a
        if (da_f != f_db)
          r.add("dualizing.cyclic", hom_name(q, a, b) + " f=" + elem_name(ab, f));
        if (q.rimp(b, a, a, da_f, fam.d[a]) != f)
          r.add("dualizing.left", hom_name(q, a, b) + " f=" + elem_name(ab, f));
        if (q.limp(b, a, b, fam.d[b], f_db) != f)
          r.add("dualizing.right", hom_name(q, a, b) + " f=" + elem_name(ab, f));
      }
    }
  return r;
}

QArrow negation(const Quantaloid& q, const DualizingFamily& fam, const QArrow& f) {
  Report fr = validate_dualizing_family(q, fam);
  if (!fr.ok()) throw std::invalid_argument("negation: invalid dualizing family:\n" + fr.to_string());
  return QArrow{f.dst, f.src, q.limp(f.src, f.dst, f.src, fam.d[f.src], f.value)};
}

namespace {

Quantaloid one_object_quantale(std::vector<std::string> carrier,
                               std::vector<std::vector<bool>> order,
                               std::vector<std::vector<Elem>> table, Elem unit, Elem d) {
  Quantaloid q;
  q.objects = {"*"};
  q.homs = {lattice_from_order(std::move(carrier), std::move(order))};
  q.comp = {std::move(table)};
  q.units = {unit};
  q.dualizing = DualizingFamily{{d}};
  return q;
}

}  // namespace

Quantaloid builtin_boolean() {
  return one_object_quantale({"0", "1"}, {{true, true}, {false, true}},
                             {{0, 0}, {0, 1}}, 1, 0);
}

Quantaloid builtin_lukasiewicz(int n) {
  if (n < 2) throw std::invalid_argument("lukasiewicz: n must be >= 2");
  std::vector<std::string> carrier(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      carrier[i] = "0";
    else if (i == n - 1)
      carrier[i] = "1";
    else
      carrier[i] = std::to_string(i) + "/" + std::to_string(n - 1);
  }
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) order[i][j] = i <= j;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) table[g][f] = std::max(0, g + f - (n - 1));
  return one_object_quantale(std::move(carrier), std::move(order), std::move(table), n - 1, 0);
}

Quantaloid builtin_rel_like(int k) {
  if (k < 1) throw std::invalid_argument("rel_like: k must be >= 1");
  if (k > 26) throw std::invalid_argument("rel_like: k must be <= 26");
  Quantaloid q;
  for (int i = 0; i < k; ++i) q.objects.push_back(std::string(1, static_cast<char>('A' + i)));
  HomLattice two = lattice_from_order({"0", "1"}, {{true, true}, {false, true}});
  q.homs.assign(k * k, two);
  q.comp.assign(k * k * k, {{0, 0}, {0, 1}});
  q.units.assign(k, 1);
  DualizingFamily fam;
  fam.d.assign(k, 0);
  q.dualizing = fam;
  return q;
}

QuantaloidPtr builtin_quantaloid(const std::string& spec) {
  auto paren = spec.find('(');
  std::string name = spec.substr(0, paren);
  int param = 0;
  if (paren != std::string::npos) {
    auto close = spec.find(')', paren);
    if (close == std::string::npos) throw std::invalid_argument("builtin_quantaloid: missing ')'");
    param = std::stoi(spec.substr(paren + 1, close - paren - 1));
  }
  if (name == "boolean") return std::make_shared<Quantaloid>(builtin_boolean());
  if (name == "lukasiewicz") return std::make_shared<Quantaloid>(builtin_lukasiewicz(param));
  if (name == "rel_like") return std::make_shared<Quantaloid>(builtin_rel_like(param));
  throw std::invalid_argument("builtin_quantaloid: unknown name " + name);
}

}  // namespace qlab
