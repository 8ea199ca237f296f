#pragma once

#include "qlab/closure.hpp"

namespace qlab {

// φ↑(μ) = φ↙μ : PA -> P†B and φ↓(λ) = λ↘φ : P†B -> PA.
CoPresheaf phi_up(const QDistributor& phi, const Presheaf& mu);
Presheaf phi_down(const QDistributor& phi, const CoPresheaf& lam);

// The closure operator φ↓∘φ↑ on PA packaged as a closure space, plus the
// interior operator φ↑∘φ↓ on the enumerated P†B.
struct IsbellClosure {
  QClosureSpace space;
  CoPresheafCategory pdb;
  std::vector<int> interior_op;
};
IsbellClosure isbell_closure(const QDistributor& phi, long long cap = kDefaultCap);

struct ConceptPair {
  Presheaf extent;
  CoPresheaf intent;
};

// Fixed-point lattice of a distributor; M(φ) keeps (extent, intent) pairs,
// K(φ) reuses the shape with intents omitted.
struct FixedPointLattice {
  std::string kind;  // "concepts" | "kan"
  QDistributor phi;
  QCategory base;                  // carrier of the fixed presheaves
  std::vector<Presheaf> extents;   // canonical enumeration order
  std::vector<CoPresheaf> intents; // parallel to extents; empty for "kan"
  QCategory cat;                   // objects c0, c1, ...
};

FixedPointLattice concept_lattice(const QDistributor& phi, long long cap = kDefaultCap);

// U on morphisms: an infomorphism (F,G): φ -> ψ yields a continuous
// F: (A, φ↓φ↑) -> (A', ψ↓ψ↑).
QFunctor infomorphism_to_continuous(const Infomorphism& info, long long cap = kDefaultCap);

// ζ_C : A ⇸ C(PA) with ζ_C(x,μ) = μ(x).
QDistributor zeta(const QClosureSpace& space);

struct SpsReport {
  bool ok = false;
  std::string failing_condition;
};
// B = phi.target must be complete and skeletal (throws otherwise).
SpsReport is_state_property_system(const QDistributor& phi, long long cap = kDefaultCap);

struct SpsUnit {
  QFunctor column_map;  // B -> fixed points of φ↓φ↑, y ↦ φ(-,y)
  bool is_isomorphism = false;
};
SpsUnit sps_unit(const QDistributor& phi, long long cap = kDefaultCap);

struct DensePair {
  QFunctor F;  // A -> M
  QFunctor G;  // B -> M
  FixedPointLattice lattice;
};
DensePair dense_pair_reconstruction(const QDistributor& phi, long long cap = kDefaultCap);

struct CertifyResult {
  bool ok = false;
  std::string counterexample;
  std::optional<QFunctor> iso;  // H : X -> M_phi
};
// Checks that F is sup-dense, G is inf-dense and X(F-,G-) = φ; on success
// returns the induced isomorphism onto the concept lattice.
CertifyResult certify_dense_pair(const QDistributor& phi, const QFunctor& f, const QFunctor& g,
                                 long long cap = kDefaultCap);

}  // namespace qlab
