#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/report.hpp"

namespace qlab {

// Index into a hom-lattice carrier.  Elements are compared by index; carriers
// must not contain duplicate identifiers.
using Elem = int;

// A finite complete lattice given by explicit tables.
struct HomLattice {
  std::vector<std::string> carrier;       // element ids, declared order
  std::vector<std::vector<bool>> order;   // order[i][j] <=> i <= j
  std::vector<std::vector<Elem>> joins;   // joins[i][j]
  std::vector<std::vector<Elem>> meets;
  Elem top = 0;
  Elem bottom = 0;

  int size() const { return static_cast<int>(carrier.size()); }
  bool leq(Elem a, Elem b) const { return order[a][b]; }
  Elem join(Elem a, Elem b) const { return joins[a][b]; }
  Elem meet(Elem a, Elem b) const { return meets[a][b]; }

  // Finiteness makes the lattice complete: fold the binary tables.
  Elem join_all(const std::vector<Elem>& es) const {
    Elem acc = bottom;
    for (Elem e : es) acc = joins[acc][e];
    return acc;
  }
  Elem meet_all(const std::vector<Elem>& es) const {
    Elem acc = top;
    for (Elem e : es) acc = meets[acc][e];
    return acc;
  }

  int find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
      if (carrier[i] == id) return i;
    return -1;
  }
};

// Builds the join/meet/top/bottom tables from an order relation.
// Throws std::runtime_error if the relation is not a lattice order.
HomLattice lattice_from_order(std::vector<std::string> carrier,
                              std::vector<std::vector<bool>> order);

struct QArrow {
  int src = 0;
  int dst = 0;
  Elem value = 0;
  bool operator==(const QArrow&) const = default;
};

// d_A in Q(A,A) per object, candidate for a cyclic dualizing family.
struct DualizingFamily {
  std::vector<Elem> d;
  bool operator==(const DualizingFamily&) const = default;
};

// A finite quantaloid: hom-lattices indexed by object pairs, composition
// tables, and units.  Immutable after validation; all operations are pure.
struct Quantaloid {
  std::vector<std::string> objects;
  std::vector<HomLattice> homs;                      // [a*n + b]
  std::vector<std::vector<std::vector<Elem>>> comp;  // [(a*n+b)*n+c][g][f]
  std::vector<Elem> units;                           // [a] in hom(a,a)
  std::optional<DualizingFamily> dualizing;

  int size() const { return static_cast<int>(objects.size()); }
  int obj(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
      if (objects[i] == id) return i;
    return -1;
  }
  const HomLattice& hom(int a, int b) const { return homs[a * size() + b]; }

  // g ∘ f with f: a -> b, g: b -> c.
  Elem compose(int a, int b, int c, Elem g, Elem f) const {
    return comp[(a * size() + b) * size() + c][g][f];
  }
  bool leq(int a, int b, Elem x, Elem y) const { return hom(a, b).leq(x, y); }
  Elem unit(int a) const { return units[a]; }

  // g ↙ f for g: a -> x, f: a -> b; the largest h: b -> x with h∘f <= g.
  Elem limp(int a, int b, int x, Elem g, Elem f) const;
  // f ↘ g for f: a -> b, g: x -> b; the largest h: x -> a with f∘h <= g.
  Elem rimp(int a, int b, int x, Elem f, Elem g) const;
};

using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

bool same_quantaloid(const Quantaloid& p, const Quantaloid& q);

// Lists every violated axiom instance with a witness tuple; empty iff q is a
// quantaloid.  Malformed tables are reported as structural errors and
// suppress the law checks that would read out of range.
Report validate_quantaloid(const Quantaloid& q);

// Arrow-level operations.  Throw std::invalid_argument on type mismatch.
QArrow left_implication(const Quantaloid& q, const QArrow& g, const QArrow& f);
QArrow right_implication(const Quantaloid& q, const QArrow& f, const QArrow& g);
bool is_arrow_adjunction(const Quantaloid& q, const QArrow& f, const QArrow& g);

Report validate_dualizing_family(const Quantaloid& q, const DualizingFamily& fam);

// ¬f = d_src ↙ f = f ↘ d_dst.  Requires a valid family.
QArrow negation(const Quantaloid& q, const DualizingFamily& fam, const QArrow& f);

// Fixture factories.  Each carries its standard dualizing family.
Quantaloid builtin_boolean();
Quantaloid builtin_lukasiewicz(int n);  // carrier {0, 1/(n-1), ..., 1}; n >= 2
Quantaloid builtin_rel_like(int k);     // k objects, every hom {0,1}
QuantaloidPtr builtin_quantaloid(const std::string& spec);  // "boolean" | "lukasiewicz(n)" | "rel_like(k)"

}  // namespace qlab
