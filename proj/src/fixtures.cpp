#include "qlab/fixtures.hpp"

namespace qlab::fixtures {

QCategory discrete(QuantaloidPtr q, const std::vector<std::string>& names,
                   const std::string& type_id) {
  QTypedSet base;
  base.elems = names;
  int t = type_id.empty() ? 0 : q->obj(type_id);
  if (t < 0) throw std::invalid_argument("discrete: unknown type " + type_id);
  base.types.assign(names.size(), t);
  return discrete_category(std::move(q), base);
}

Ctx ctx() {
  Ctx out;
  out.q2 = std::make_shared<Quantaloid>(builtin_boolean());
  out.A = discrete(out.q2, {"x1", "x2"});
  out.B = discrete(out.q2, {"y1", "y2"});
  out.phi = bottom_dist(out.A, out.B);
  out.phi.m[0][0] = 1;  // (x1,y1)
  out.phi.m[0][1] = 1;  // (x1,y2)
  out.phi.m[1][1] = 1;  // (x2,y2)
  return out;
}

namespace {

QCategory poset(QuantaloidPtr q2, const std::vector<std::string>& names,
                const std::vector<std::pair<int, int>>& covers) {
  QCategory a = discrete(std::move(q2), names);
  for (auto [lo, hi] : covers) a.hom[lo][hi] = 1;
  // reflexive-transitive closure
  const int n = a.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.hom[i][k] == 1 && a.hom[k][j] == 1) a.hom[i][j] = 1;
  return a;
}

}  // namespace

QCategory poset_antichain(QuantaloidPtr q2) {
  return poset(std::move(q2), {"a", "b", "c", "d"}, {});
}

QCategory poset_fence(QuantaloidPtr q2) {
  return poset(std::move(q2), {"a", "b", "c", "d"}, {{0, 1}, {2, 1}, {2, 3}});
}

QCategory poset_diamond_minus_top(QuantaloidPtr q2) {
  return poset(std::move(q2), {"o", "a", "b", "c"}, {{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace qlab::fixtures
