#pragma once

#include "qlab/io.hpp"

namespace qlab {

struct SuiteResult {
  std::string suite;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // skips, enumeration bounds
  bool cap_exceeded = false;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const Workspace& ws, const std::string& suite);
std::vector<SuiteResult> run_suites(const Workspace& ws, const std::string& suite_or_all);

namespace checks {

// Residuation adjointness over all element triples of every hom triple.
std::vector<Violation> residuation_adjointness(const Quantaloid& q);

// The three identity groups of a Girard quantaloid, exhaustively.
std::vector<Violation> girard_identity_groups(const Quantaloid& q, const DualizingFamily& fam);

// Q-Dist quantaloid laws over every distributor between the given categories;
// enumeration per pair is bounded by matrix_cap.  With exhaustive_joins the
// join-preservation sweep runs over all subsets of each small hom-set instead
// of binary + empty joins.
std::vector<Violation> qdist_laws(const std::vector<QCategory>& cats, long long matrix_cap,
                                  bool exhaustive_joins = false);

// P†B(φ↑μ, λ) = PA(μ, φ↓λ) for all μ, λ.
std::vector<Violation> isbell_adjunction_law(const QDistributor& phi, long long cap);

// PA(φ*λ, μ) = PB(λ, φ_*μ) for all λ, μ.
std::vector<Violation> kan_adjunction_law(const QDistributor& phi, long long cap);

// φ* = ¬∘(¬φ)↑ and φ_* = (¬φ)↓∘¬ pointwise.
std::vector<Violation> girard_bridge(const GirardContext& ctx, const QDistributor& phi,
                                     long long cap);

}  // namespace checks

}  // namespace qlab
