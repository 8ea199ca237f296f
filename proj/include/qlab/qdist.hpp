#pragma once

#include "qlab/qcat.hpp"

namespace qlab {

// A bimodule matrix m[x][y] in Q(tx,ty) between Q-categories.
struct QDistributor {
  QCategory source;  // A
  QCategory target;  // B
  std::vector<std::vector<Elem>> m;

  Elem at(int x, int y) const { return m[x][y]; }
};

bool dist_eq(const QDistributor& a, const QDistributor& b);
// Local (pointwise) order of Q-Dist.
bool dist_leq(const QDistributor& a, const QDistributor& b);

Report validate_distributor(const QDistributor& phi);

QDistributor identity_dist(const QCategory& a);
QDistributor bottom_dist(const QCategory& a, const QCategory& b);
QDistributor compose_dist(const QDistributor& psi, const QDistributor& phi);  // ψ ∘ φ

// η ↙ φ : B ⇸ C for φ: A ⇸ B, η: A ⇸ C.
QDistributor dist_left_implication(const QDistributor& eta, const QDistributor& phi);
// ψ ↘ η : A ⇸ B for ψ: B ⇸ C, η: A ⇸ C.
QDistributor dist_right_implication(const QDistributor& psi, const QDistributor& eta);

QDistributor dist_join(const QDistributor& a, const QDistributor& b);
QDistributor dist_meet(const QDistributor& a, const QDistributor& b);

QDistributor graph(const QFunctor& f);    // F_♮(x,y) = B(Fx,y) : A ⇸ B
QDistributor cograph(const QFunctor& f);  // F^♮(y,x) = B(y,Fx) : B ⇸ A

// φ ⊣ ψ in Q-Dist: A <= ψ∘φ and φ∘ψ <= B.
bool is_dist_adjunction(const QDistributor& phi, const QDistributor& psi);

struct Infomorphism {
  QFunctor F;         // A -> A'
  QFunctor G;         // B' -> B
  QDistributor phi;   // A ⇸ B
  QDistributor psi;   // A' ⇸ B'
};

bool is_infomorphism(const QFunctor& F, const QFunctor& G, const QDistributor& phi,
                     const QDistributor& psi);
Infomorphism identity_infomorphism(const QDistributor& phi);
Infomorphism compose_infomorphisms(const Infomorphism& second, const Infomorphism& first);

// Every valid distributor matrix A ⇸ B.  Throws when the space exceeds cap.
std::vector<QDistributor> enumerate_distributors(const QCategory& a, const QCategory& b,
                                                 long long cap = 1'000'000);

}  // namespace qlab
