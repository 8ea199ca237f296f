#pragma once

#include "qlab/isbell.hpp"

namespace qlab {

// φ*(λ) = λ∘φ : PB -> PA and φ_*(μ) = μ↙φ : PA -> PB.
Presheaf phi_star(const QDistributor& phi, const Presheaf& lam);
Presheaf phi_lowstar(const QDistributor& phi, const Presheaf& mu);

// Fixed points of φ_*∘φ* on PB.
FixedPointLattice kan_lattice(const QDistributor& phi, long long cap = kDefaultCap);

// (F^♮)_* = F← = (F_♮)* pointwise on PB, plus both adjunctions, as hom-set
// equalities over the enumerated presheaf categories.
Report why_kan_check(const QFunctor& f, long long cap = kDefaultCap);

struct KanExtensionResult {
  CoPresheaf extension;            // ⟨F,G⟩(c) as a covariant presheaf on B
  std::optional<int> representative;  // object b with B(b,-) equal to it
};
KanExtensionResult pointwise_kan_extension(const QFunctor& f, const QFunctor& g, int c,
                                           long long cap = kDefaultCap);

// Girard base: a quantaloid with a validated cyclic dualizing family.
struct GirardContext {
  QuantaloidPtr q;
  DualizingFamily family;
};
GirardContext make_girard_context(QuantaloidPtr q);  // uses q->dualizing
GirardContext make_girard_context(QuantaloidPtr q, DualizingFamily family);

Elem neg_elem(const GirardContext& ctx, int a, int b, Elem f);  // ¬ : Q(a,b) -> Q(b,a)
QDistributor neg_category(const GirardContext& ctx, const QCategory& a);   // ¬A : A ⇸ A
QDistributor neg_dist(const GirardContext& ctx, const QDistributor& phi);  // ¬φ : B ⇸ A
CoPresheaf neg_presheaf(const GirardContext& ctx, const QCategory& a, const Presheaf& mu);
Presheaf neg_copresheaf(const GirardContext& ctx, const QCategory& a, const CoPresheaf& lam);

// φ* = ¬∘(¬φ)↑ and φ_* = (¬φ)↓∘¬ pointwise; V = U∘¬ on the closure operator;
// K(¬ζ_C) = C(PA) for C = φ↓∘φ↑.
Report girard_kan_identity_check(const GirardContext& ctx, const QDistributor& phi,
                                 long long cap = kDefaultCap);

}  // namespace qlab
