#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qlab/fixtures.hpp"

using namespace qlab;
using namespace qlab::testing;

namespace {

QuantaloidPtr l3() { return std::make_shared<Quantaloid>(builtin_lukasiewicz(3)); }

}  // namespace

TEST_CASE("distributor validation") {
  auto ctx = fixtures::ctx();
  CHECK(validate_distributor(ctx.phi).ok());
  CHECK(validate_distributor(identity_dist(ctx.A)).ok());

  // x <= x' but phi(x',y) = 1, phi(x,y) = 0 breaks the source action
  auto chain = make_category(ctx.q2, {{"x", "*"}, {"xp", "*"}}, {{"x", "xp", "1"}});
  auto star = star_category(ctx.q2, 0);
  QDistributor bad = make_dist(chain, star, {{"xp", "*", "1"}});
  Report r = validate_distributor(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.items()[0].law == "distributor.source_action");
}

TEST_CASE("composition") {
  auto ctx = fixtures::ctx();
  auto star = star_category(ctx.q2, 0);
  QDistributor psi = make_dist(ctx.B, star, {{"y1", "*", "1"}});
  QDistributor comp = compose_dist(psi, ctx.phi);
  CHECK(presheaf_from_dist(comp) == subset_presheaf(ctx.A, {"x1"}));

  CHECK(dist_eq(compose_dist(psi, identity_dist(ctx.B)), psi));
  CHECK(dist_eq(compose_dist(ctx.phi, identity_dist(ctx.A)), ctx.phi));
  CHECK(dist_eq(compose_dist(identity_dist(ctx.B), ctx.phi), ctx.phi));

  auto empty = fixtures::discrete(ctx.q2, {});
  QDistributor into_empty = bottom_dist(ctx.A, empty);
  QDistributor from_empty = bottom_dist(empty, ctx.B);
  CHECK(dist_eq(compose_dist(from_empty, into_empty), bottom_dist(ctx.A, ctx.B)));
}

TEST_CASE("implication unit laws") {
  auto ctx = fixtures::ctx();
  CHECK(dist_eq(dist_left_implication(ctx.phi, identity_dist(ctx.A)), ctx.phi));
  CHECK(dist_eq(dist_right_implication(identity_dist(ctx.B), ctx.phi), ctx.phi));
}

TEST_CASE("implications over an empty boundary are constant top") {
  auto q2 = fixtures::ctx().q2;
  auto empty = fixtures::discrete(q2, {});
  auto b = fixtures::discrete(q2, {"y1"});
  auto c = fixtures::discrete(q2, {"z1"});
  QDistributor phi = bottom_dist(empty, b);
  QDistributor eta = bottom_dist(empty, c);
  QDistributor li = dist_left_implication(eta, phi);
  CHECK(li.at(0, 0) == 1);
  QDistributor psi = bottom_dist(b, empty);
  QDistributor eta2 = bottom_dist(c, empty);
  QDistributor ri = dist_right_implication(psi, eta2);
  CHECK(ri.at(0, 0) == 1);
}

TEST_CASE("left implication of a representable picks out a row") {
  auto ctx = fixtures::ctx();
  QDistributor y_x1 = to_dist(ctx.A, yoneda(ctx.A, 0));
  QDistributor li = dist_left_implication(ctx.phi, y_x1);
  CHECK(copresheaf_from_dist(li) == dist_row(ctx.phi, 0));  // = {y1,y2}
  CHECK(copresheaf_from_dist(li) == subset_copresheaf(ctx.B, {"y1", "y2"}));
}

TEST_CASE("implications agree with the brute-force residuation oracle") {
  auto ctx = fixtures::ctx();
  auto check_pair = [](const QCategory& a, const QCategory& b, const QCategory& c) {
    for (const QDistributor& phi : enumerate_distributors(a, b))
      for (const QDistributor& eta : enumerate_distributors(a, c)) {
        QDistributor fast = dist_left_implication(eta, phi);
        CHECK(dist_eq(fast, oracles::brute_left_implication(eta, phi)));
      }
    for (const QDistributor& psi : enumerate_distributors(b, c))
      for (const QDistributor& eta : enumerate_distributors(a, c)) {
        QDistributor fast = dist_right_implication(psi, eta);
        CHECK(dist_eq(fast, oracles::brute_right_implication(psi, eta)));
      }
  };
  auto star = star_category(ctx.q2, 0);
  check_pair(ctx.A, ctx.B, star);
  auto l3_one = fixtures::discrete(l3(), {"a"});
  check_pair(l3_one, l3_one, l3_one);
}

TEST_CASE("Q-Dist is a quantaloid at desk scale") {
  auto ctx = fixtures::ctx();
  std::vector<QCategory> cats = {fixtures::discrete(ctx.q2, {"u"}), ctx.A};
  for (const auto& a : cats)
    for (const auto& b : cats) {
      auto phis = enumerate_distributors(a, b);
      // units
      for (const auto& phi : phis) {
        CHECK(dist_eq(compose_dist(phi, identity_dist(a)), phi));
        CHECK(dist_eq(compose_dist(identity_dist(b), phi), phi));
      }
      for (const auto& c : cats) {
        auto psis = enumerate_distributors(b, c);
        // residuation adjointness
        for (const auto& phi : phis)
          for (const auto& eta : enumerate_distributors(a, c)) {
            QDistributor li = dist_left_implication(eta, phi);
            for (const auto& xi : psis)
              CHECK(dist_leq(compose_dist(xi, phi), eta) == dist_leq(xi, li));
          }
        // join preservation in both variables
        for (const auto& phi : phis)
          for (const auto& phi2 : phis)
            for (const auto& psi : psis) {
              CHECK(dist_eq(compose_dist(psi, dist_join(phi, phi2)),
                            dist_join(compose_dist(psi, phi), compose_dist(psi, phi2))));
              CHECK(dist_eq(compose_dist(psi, bottom_dist(a, b)), bottom_dist(a, c)));
            }
        // associativity
        for (const auto& d : cats)
          for (const auto& phi : phis)
            for (const auto& psi : psis)
              for (const auto& eta : enumerate_distributors(c, d))
                CHECK(dist_eq(compose_dist(eta, compose_dist(psi, phi)),
                              compose_dist(compose_dist(eta, psi), phi)));
      }
    }
}

TEST_CASE("graph and cograph") {
  auto ctx = fixtures::ctx();
  QFunctor id = identity_functor(ctx.A);
  CHECK(dist_eq(graph(id), identity_dist(ctx.A)));
  CHECK(dist_eq(cograph(id), identity_dist(ctx.A)));

  auto star = star_category(ctx.q2, 0);
  QFunctor pick{star, ctx.B, {0}};  // * ↦ y1
  QDistributor g = graph(pick);
  CHECK(copresheaf_from_dist(g) == subset_copresheaf(ctx.B, {"y1"}));

  CHECK(is_dist_adjunction(graph(pick), cograph(pick)));
}

TEST_CASE("fully faithful and essentially surjective functors") {
  auto ctx = fixtures::ctx();
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  CHECK(validate_functor(incl).is_fully_faithful);
  CHECK(dist_eq(compose_dist(cograph(incl), graph(incl)), identity_dist(sub)));

  // an essentially surjective functor: the identity
  CHECK(dist_eq(compose_dist(graph(identity_functor(ctx.A)), cograph(identity_functor(ctx.A))),
                identity_dist(ctx.A)));
}

TEST_CASE("distributor adjunction examples") {
  auto ctx = fixtures::ctx();
  QDistributor transpose{ctx.B, ctx.A, {}};
  transpose.m.assign(2, std::vector<Elem>(2));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) transpose.m[y][x] = ctx.phi.at(x, y);
  CHECK_FALSE(is_dist_adjunction(ctx.phi, transpose));
  CHECK(is_dist_adjunction(identity_dist(ctx.A), identity_dist(ctx.A)));
}

TEST_CASE("functor adjunction is equivalent to the four graph conditions") {
  auto q2 = fixtures::ctx().q2;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const QCategory& a : oracles::all_boolean_categories(q2, n))
        for (const QCategory& b : oracles::all_boolean_categories(q2, m))
          for (const QFunctor& f : enumerate_functors(a, b))
            for (const QFunctor& g : enumerate_functors(b, a)) {
              bool adj = is_functor_adjunction(f, g);
              CHECK(adj == dist_eq(graph(f), cograph(g)));
              CHECK(adj == is_dist_adjunction(graph(g), graph(f)));
              CHECK(adj == is_dist_adjunction(cograph(g), cograph(f)));
            }
}

TEST_CASE("identity groups for distributor adjunctions found by search") {
  auto ctx = fixtures::ctx();
  auto star = star_category(ctx.q2, 0);
  std::vector<QCategory> cats = {star, ctx.A};
  for (const auto& a : cats)
    for (const auto& b : cats)
      for (const QDistributor& f : enumerate_distributors(a, b))
        for (const QDistributor& g : enumerate_distributors(b, a)) {
          if (!is_dist_adjunction(f, g)) continue;
          for (const auto& x : cats) {
            for (const QDistributor& h : enumerate_distributors(b, x))
              CHECK(dist_eq(compose_dist(h, f), dist_left_implication(h, g)));
            for (const QDistributor& h : enumerate_distributors(x, b))
              CHECK(dist_eq(compose_dist(g, h), dist_right_implication(f, h)));
            // (h∘f)↘h' = h↘(g∘h') with h: x ⇸ a, h': x' ⇸ b
            for (const QDistributor& h : enumerate_distributors(x, a))
              for (const QDistributor& hp : enumerate_distributors(star, b))
                CHECK(dist_eq(dist_right_implication(compose_dist(f, h), hp),
                              dist_right_implication(h, compose_dist(g, hp))));
          }
        }
}

TEST_CASE("infomorphisms") {
  auto ctx = fixtures::ctx();
  QFunctor ida = identity_functor(ctx.A);
  QFunctor idb = identity_functor(ctx.B);
  CHECK(is_infomorphism(ida, idb, ctx.phi, ctx.phi));

  // restriction of the context to {x1} against the inclusion
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  QDistributor restricted{sub, ctx.B, {ctx.phi.m[0]}};
  CHECK(is_infomorphism(incl, idb, restricted, ctx.phi));

  // adjunctions F ⊣ G are exactly infomorphisms between identity distributors
  auto q2 = ctx.q2;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const QCategory& a : oracles::all_boolean_categories(q2, n))
        for (const QCategory& b : oracles::all_boolean_categories(q2, m))
          for (const QFunctor& f : enumerate_functors(a, b))
            for (const QFunctor& g : enumerate_functors(b, a))
              CHECK(is_functor_adjunction(f, g) ==
                    is_infomorphism(f, g, identity_dist(a), identity_dist(b)));
}

TEST_CASE("infomorphism composition") {
  auto ctx = fixtures::ctx();
  Infomorphism id_info = identity_infomorphism(ctx.phi);
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  QDistributor restricted{sub, ctx.B, {ctx.phi.m[0]}};
  Infomorphism i{incl, identity_functor(ctx.B), restricted, ctx.phi};
  REQUIRE(is_infomorphism(i.F, i.G, i.phi, i.psi));

  Infomorphism left = compose_infomorphisms(id_info, i);
  CHECK(is_infomorphism(left.F, left.G, left.phi, left.psi));
  CHECK(left.F.map == i.F.map);
  CHECK(left.G.map == i.G.map);

  Infomorphism sub_id = identity_infomorphism(restricted);
  Infomorphism right = compose_infomorphisms(i, sub_id);
  CHECK(right.F.map == i.F.map);

  // associativity on a composable triple
  Infomorphism assoc1 = compose_infomorphisms(id_info, compose_infomorphisms(i, sub_id));
  Infomorphism assoc2 = compose_infomorphisms(compose_infomorphisms(id_info, i), sub_id);
  CHECK(assoc1.F.map == assoc2.F.map);
  CHECK(assoc1.G.map == assoc2.G.map);
}

TEST_CASE("row and column extraction commutes with composition and implications") {
  auto ctx = fixtures::ctx();
  auto star = star_category(ctx.q2, 0);
  for (const QDistributor& phi : enumerate_distributors(ctx.A, ctx.B))
    for (const QDistributor& psi : enumerate_distributors(ctx.B, star)) {
      QDistributor comp = compose_dist(psi, phi);
      for (int x = 0; x < ctx.A.size(); ++x) {
        // (ψ∘φ)(x,-) = ψ∘φ(x,-)
        CHECK(dist_row(comp, x) ==
              copresheaf_from_dist(compose_dist(psi, to_dist(ctx.B, dist_row(phi, x)))));
        for (int z = 0; z < star.size(); ++z) {
          // (ψ∘φ)(x,z) = ψ(-,z)∘φ(x,-)
          QDistributor entry = compose_dist(to_dist(ctx.B, dist_column(psi, z)),
                                            to_dist(ctx.B, dist_row(phi, x)));
          CHECK(comp.at(x, z) == entry.at(0, 0));
        }
      }
      for (const QDistributor& eta : enumerate_distributors(ctx.A, star)) {
        QDistributor li = dist_left_implication(eta, phi);
        for (int y = 0; y < ctx.B.size(); ++y)
          CHECK(dist_row(li, y) ==
                copresheaf_from_dist(dist_left_implication(eta, to_dist(ctx.A, dist_column(phi, y)))));
      }
      // (ψ↘η)(x,y) = ψ(y,-)↘η(x,-)
      for (const QDistributor& eta : enumerate_distributors(ctx.A, star)) {
        QDistributor ri = dist_right_implication(psi, eta);
        for (int x = 0; x < ctx.A.size(); ++x)
          for (int y = 0; y < ctx.B.size(); ++y) {
            QDistributor cell = dist_right_implication(to_dist(star, dist_row(psi, y)),
                                                       to_dist(star, dist_row(eta, x)));
            CHECK(ri.at(x, y) == cell.at(0, 0));
          }
      }
    }
}
