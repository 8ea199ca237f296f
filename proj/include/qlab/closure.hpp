#pragma once

#include "qlab/presheaf.hpp"

namespace qlab {

struct EndoReport {
  Report report;
  bool is_endofunctor = false;
  bool is_closure = false;   // 1 <= F and F² ≅ F
  bool is_interior = false;  // F <= 1 and F² ≅ F
};

// Classification of an endo object map; both flags are reported (the identity
// is closure and interior at once).
EndoReport classify_endo(const QFunctor& f);

// Isomorphism-closed fixed objects of a closure or interior operator, as a
// full subcategory with the witnessing adjoint of the inclusion.
struct ClosureSystem {
  QCategory ambient;
  std::vector<int> members;  // ambient indices, canonical order
  QCategory sub;
  QFunctor inclusion;      // sub -> ambient
  QFunctor corestriction;  // ambient -> sub
  bool closure_side = true;  // corestriction ⊣ inclusion; flipped for interior
};

ClosureSystem fixed_points(const QFunctor& f);

std::optional<QFunctor> inclusion_left_adjoint(const QCategory& ambient,
                                               const std::vector<int>& members);
bool is_closure_system(const QCategory& ambient, const std::vector<int>& members);

// A category together with a closure operator on its enumerated presheaf
// category, stored as a dense index map in canonical enumeration order.
struct QClosureSpace {
  QCategory base;
  PresheafCategory pa;
  std::vector<int> op;
};

Report validate_closure_space(const QClosureSpace& space);
QClosureSpace make_closure_space(const QCategory& a, std::vector<int> op,
                                 long long cap = kDefaultCap);
QClosureSpace identity_space(const QCategory& a, long long cap = kDefaultCap);
// C_A = Y ∘ sup on PA; requires a complete base.
QClosureSpace canonical_closure(const QCategory& a, long long cap = kDefaultCap);

QFunctor closure_endofunctor(const QClosureSpace& space);
std::vector<int> closed_indices(const QClosureSpace& space);
QCategory closed_subcategory(const QClosureSpace& space);

// F→ ∘ C <= D ∘ F→ pointwise.
bool is_continuous(const QFunctor& f, const QClosureSpace& c, const QClosureSpace& d);

// F▷ = D∘F→ and F◁ = F← between the fixed-point categories; F▷ ⊣ F◁.
std::pair<QFunctor, QFunctor> triangle_functors(const QFunctor& f, const QClosureSpace& c,
                                                const QClosureSpace& d);

// η = C ∘ Y : A -> fixed_points(C).
QFunctor eta_unit(const QClosureSpace& space);

// F̄ = sup_B ∘ F→ : fixed_points(C) -> B for continuous F into a complete
// skeletal B carrying its canonical closure.
QFunctor universal_extension(const QFunctor& f, const QClosureSpace& c,
                             long long cap = kDefaultCap);

}  // namespace qlab
