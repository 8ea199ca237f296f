#pragma once

#include <optional>
#include <utility>

#include "qlab/quantaloid.hpp"

namespace qlab {

struct QTypedSet {
  std::vector<std::string> elems;
  std::vector<int> types;  // quantaloid object index per element
};

// A Q-typed object set with a hom matrix.  hom[x][y] lives in Q(tx,ty).
struct QCategory {
  QuantaloidPtr q;
  std::vector<std::string> objects;
  std::vector<int> types;
  std::vector<std::vector<Elem>> hom;

  int size() const { return static_cast<int>(objects.size()); }
  int find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
      if (objects[i] == id) return i;
    return -1;
  }
  Elem at(int x, int y) const { return hom[x][y]; }
  int type_of(int x) const { return types[x]; }
};

bool same_category(const QCategory& a, const QCategory& b);

struct PreorderInfo {
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> iso_pairs;  // (i, j) with i < j and i ≅ j
  bool skeletal = true;
};

// A type-preserving, hom-expanding object map.
struct QFunctor {
  QCategory source;
  QCategory target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

struct FunctorReport {
  Report report;
  bool is_functor = false;
  bool is_fully_faithful = false;
};

Report validate_category(const QCategory& a);
PreorderInfo underlying_preorder(const QCategory& a);

FunctorReport validate_functor(const QFunctor& f);
bool functor_leq(const QFunctor& f, const QFunctor& g);
bool functor_iso(const QFunctor& f, const QFunctor& g);
QFunctor identity_functor(const QCategory& a);
QFunctor compose_functors(const QFunctor& g, const QFunctor& f);  // g ∘ f
bool is_functor_adjunction(const QFunctor& f, const QFunctor& g);

QCategory discrete_category(QuantaloidPtr q, const QTypedSet& base);
QCategory star_category(QuantaloidPtr q, int type_obj);
QCategory full_subcategory(const QCategory& a, const std::vector<int>& members);

// All type-preserving hom-expanding maps A -> B.  Throws if the search space
// exceeds the cap.
std::vector<QFunctor> enumerate_functors(const QCategory& a, const QCategory& b,
                                         long long cap = 1'000'000);
std::optional<QFunctor> find_right_adjoint(const QFunctor& f);
std::optional<QFunctor> find_left_adjoint(const QFunctor& g);

}  // namespace qlab
