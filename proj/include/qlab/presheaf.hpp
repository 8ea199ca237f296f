#pragma once

#include "qlab/qdist.hpp"

namespace qlab {

inline constexpr long long kDefaultCap = 20000;

struct CapExceeded : std::runtime_error {
  long long estimate;
  explicit CapExceeded(long long est)
      : std::runtime_error("presheaf enumeration estimate " + std::to_string(est) +
                           " exceeds the configured cap"),
        estimate(est) {}
  CapExceeded(long long est, const std::string& what) : std::runtime_error(what), estimate(est) {}
};

// A contravariant presheaf on A: values[x] in Q(tx, type_obj).
struct Presheaf {
  int type_obj = 0;
  std::vector<Elem> values;
  bool operator==(const Presheaf&) const = default;
};

// A covariant presheaf on A: values[x] in Q(type_obj, tx).
struct CoPresheaf {
  int type_obj = 0;
  std::vector<Elem> values;
  bool operator==(const CoPresheaf&) const = default;
};

Report validate_presheaf(const QCategory& a, const Presheaf& p);
Report validate_copresheaf(const QCategory& a, const CoPresheaf& p);

QDistributor to_dist(const QCategory& a, const Presheaf& p);    // A ⇸ *_X
QDistributor to_dist(const QCategory& a, const CoPresheaf& p);  // *_X ⇸ A
Presheaf presheaf_from_dist(const QDistributor& d);
CoPresheaf copresheaf_from_dist(const QDistributor& d);

Presheaf dist_column(const QDistributor& phi, int y);  // φ(-,y), an object of PA
CoPresheaf dist_row(const QDistributor& phi, int x);   // φ(x,-), an object of P†B

Presheaf yoneda(const QCategory& a, int obj);      // x ↦ A(x,obj)
CoPresheaf co_yoneda(const QCategory& a, int obj); // x ↦ A(obj,x)

// Hom arrows of the presheaf categories: PA(μ,λ) = λ↙μ and P†A(μ,λ) = λ↘μ.
Elem hom_pa(const QCategory& a, const Presheaf& mu, const Presheaf& lam);
Elem hom_pda(const QCategory& a, const CoPresheaf& mu, const CoPresheaf& lam);

// Local (pointwise) order in Q-Dist; both arguments must share their type.
bool presheaf_leq(const QCategory& a, const Presheaf& x, const Presheaf& y);
bool copresheaf_leq(const QCategory& a, const CoPresheaf& x, const CoPresheaf& y);

long long presheaf_count_estimate(const QCategory& a, bool covariant);

// Enumerated presheaf category.  Objects are interned in canonical order:
// lexicographic in (type object id, value vector); `cat` names them p0, p1, ...
struct PresheafCategory {
  QCategory base;
  std::vector<Presheaf> objs;
  QCategory cat;
  int index_of(const Presheaf& p) const;
};

struct CoPresheafCategory {
  QCategory base;
  std::vector<CoPresheaf> objs;
  QCategory cat;
  int index_of(const CoPresheaf& p) const;
};

PresheafCategory enumerate_presheaves(const QCategory& a, long long cap = kDefaultCap);
CoPresheafCategory enumerate_copresheaves(const QCategory& a, long long cap = kDefaultCap);

QFunctor yoneda_functor(const PresheafCategory& pa);        // A -> PA
QFunctor co_yoneda_functor(const CoPresheafCategory& pda);  // A -> P†A

// Transported presheaves along F: A -> B.
Presheaf transport_forward(const QFunctor& f, const Presheaf& mu);        // F→ μ = μ∘F^♮
Presheaf transport_backward(const QFunctor& f, const Presheaf& lam);      // F← λ = λ∘F_♮
CoPresheaf transport_forward_co(const QFunctor& f, const CoPresheaf& mu); // F⇒ μ = F_♮∘μ
CoPresheaf transport_backward_co(const QFunctor& f, const CoPresheaf& lam);  // F⇐ λ = F^♮∘λ

enum class Variance { contravariant, covariant };
enum class Direction { forward, backward };

// The transported object map as a functor between enumerated categories.
QFunctor transport_functor(const QFunctor& f, Direction dir, const PresheafCategory& pa,
                           const PresheafCategory& pb);
QFunctor transport_functor_co(const QFunctor& f, Direction dir, const CoPresheafCategory& pda,
                              const CoPresheafCategory& pdb);

// Suprema and infima of weights valued in a presheaf category, by formula.
Presheaf sup_formula_pa(const PresheafCategory& pa, const Presheaf& big_phi);
Presheaf inf_formula_pa(const PresheafCategory& pa, const CoPresheaf& big_psi);
CoPresheaf sup_formula_pda(const CoPresheafCategory& pda, const Presheaf& big_phi);
CoPresheaf inf_formula_pda(const CoPresheafCategory& pda, const CoPresheaf& big_psi);

// Defining equations for bounds; the generic witness scans return the first
// witness in canonical object order, or absent.
bool is_sup_of(const QCategory& a, int obj, const Presheaf& mu);
bool is_inf_of(const QCategory& a, int obj, const CoPresheaf& lam);
std::optional<int> sup_search(const QCategory& a, const Presheaf& mu);
std::optional<int> inf_search(const QCategory& a, const CoPresheaf& lam);

// f⊗x for f in P(tx) (an arrow tx -> X) and f↣x for f in P†(tx) (X -> tx).
bool is_tensor_of(const QCategory& a, int obj, const QArrow& f, int x);
bool is_cotensor_of(const QCategory& a, int obj, const QArrow& f, int x);
std::optional<int> tensor_search(const QCategory& a, const QArrow& f, int x);
std::optional<int> cotensor_search(const QCategory& a, const QArrow& f, int x);

std::optional<int> weighted_colim(const QFunctor& f, const Presheaf& mu);
std::optional<int> weighted_lim(const QFunctor& f, const CoPresheaf& lam);

struct CompletenessReport {
  bool complete = false;
  std::vector<std::optional<int>> sup_of;  // indexed like enumerate_presheaves(a)
  Report cross_checks;                     // sup formula + tensor/order characterization
};
CompletenessReport is_complete(const QCategory& a, long long cap = kDefaultCap);

struct DensityReport {
  bool dense = false;
  std::vector<std::optional<int>> witness;  // per target object, index into PA (resp. P†A)
};
DensityReport sup_density(const QFunctor& f, long long cap = kDefaultCap);
DensityReport inf_density(const QFunctor& f, long long cap = kDefaultCap);

// Bijective fully faithful type-preserving map, if one exists.
std::optional<QFunctor> find_isomorphism(const QCategory& a, const QCategory& b);

}  // namespace qlab
