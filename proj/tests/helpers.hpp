#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qlab/fixtures.hpp"
#include "qlab/presheaf.hpp"

namespace qlab::testing {

// Category from (id, type) pairs and sparse hom entries by element id;
// omitted entries default to bottom, diagonals to the unit.
inline QCategory make_category(QuantaloidPtr q,
                               const std::vector<std::pair<std::string, std::string>>& objects,
                               const std::vector<std::tuple<std::string, std::string, std::string>>&
                                   homs = {}) {
  QTypedSet base;
  for (const auto& [id, type] : objects) {
    base.elems.push_back(id);
    base.types.push_back(q->obj(type));
  }
  QCategory a = discrete_category(q, base);
  for (const auto& [x, y, v] : homs) {
    int xi = a.find(x), yi = a.find(y);
    a.hom[xi][yi] = q->hom(a.types[xi], a.types[yi]).find(v);
  }
  return a;
}

inline QDistributor make_dist(const QCategory& a, const QCategory& b,
                              const std::vector<std::tuple<std::string, std::string, std::string>>&
                                  entries) {
  QDistributor d = bottom_dist(a, b);
  for (const auto& [x, y, v] : entries) {
    int xi = a.find(x), yi = b.find(y);
    d.m[xi][yi] = a.q->hom(a.types[xi], b.types[yi]).find(v);
  }
  return d;
}

// Boolean presheaf from a subset of object names.
inline Presheaf subset_presheaf(const QCategory& a, const std::vector<std::string>& members,
                                int type_obj = 0) {
  Presheaf p{type_obj, std::vector<Elem>(a.size(), 0)};
  for (const auto& id : members) p.values[a.find(id)] = 1;
  return p;
}

inline CoPresheaf subset_copresheaf(const QCategory& a, const std::vector<std::string>& members,
                                    int type_obj = 0) {
  CoPresheaf p{type_obj, std::vector<Elem>(a.size(), 0)};
  for (const auto& id : members) p.values[a.find(id)] = 1;
  return p;
}

inline std::vector<std::string> presheaf_members(const QCategory& a, const Presheaf& p) {
  std::vector<std::string> out;
  for (int x = 0; x < a.size(); ++x)
    if (p.values[x] == 1) out.push_back(a.objects[x]);
  return out;
}

inline QFunctor make_functor(const QCategory& a, const QCategory& b,
                             const std::map<std::string, std::string>& map) {
  QFunctor f{a, b, std::vector<int>(a.size(), -1)};
  for (const auto& [x, y] : map) f.map[a.find(x)] = b.find(y);
  return f;
}

}  // namespace qlab::testing
