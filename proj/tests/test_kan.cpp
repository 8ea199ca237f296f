#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qlab/kan.hpp"

using namespace qlab;
using namespace qlab::testing;

namespace {

QuantaloidPtr l3() { return std::make_shared<Quantaloid>(builtin_lukasiewicz(3)); }

}  // namespace

TEST_CASE("phi_star on CTX") {
  auto ctx = fixtures::ctx();
  CHECK(phi_star(ctx.phi, subset_presheaf(ctx.B, {"y1"})) == subset_presheaf(ctx.A, {"x1"}));
  for (int y = 0; y < ctx.B.size(); ++y)
    CHECK(phi_star(ctx.phi, yoneda(ctx.B, y)) == dist_column(ctx.phi, y));  // ⌞φ*∘Y⌟ = φ
  PresheafCategory pa = enumerate_presheaves(ctx.A);
  for (const Presheaf& mu : pa.objs) CHECK(phi_star(identity_dist(ctx.A), mu) == mu);
}

TEST_CASE("phi_lowstar on CTX") {
  auto ctx = fixtures::ctx();
  CHECK(phi_lowstar(ctx.phi, subset_presheaf(ctx.A, {"x1"})) == subset_presheaf(ctx.B, {"y1"}));
  CHECK(phi_lowstar(ctx.phi, subset_presheaf(ctx.A, {"x1", "x2"})) ==
        subset_presheaf(ctx.B, {"y1", "y2"}));
  PresheafCategory pa = enumerate_presheaves(ctx.A);
  for (const Presheaf& mu : pa.objs) CHECK(phi_lowstar(identity_dist(ctx.A), mu) == mu);
}

TEST_CASE("Kan adjunction law, exhaustively") {
  auto ctx = fixtures::ctx();
  PresheafCategory pa = enumerate_presheaves(ctx.A);
  PresheafCategory pb = enumerate_presheaves(ctx.B);
  for (const QDistributor& phi : enumerate_distributors(ctx.A, ctx.B))
    for (const Presheaf& lam : pb.objs)
      for (const Presheaf& mu : pa.objs)
        CHECK(hom_pa(ctx.A, phi_star(phi, lam), mu) == hom_pa(ctx.B, lam, phi_lowstar(phi, mu)));

  auto a1 = fixtures::discrete(l3(), {"a"});
  auto b1 = fixtures::discrete(a1.q, {"b"});
  PresheafCategory pl_a = enumerate_presheaves(a1);
  PresheafCategory pl_b = enumerate_presheaves(b1);
  for (const QDistributor& phi : enumerate_distributors(a1, b1))
    for (const Presheaf& lam : pl_b.objs)
      for (const Presheaf& mu : pl_a.objs)
        CHECK(hom_pa(a1, phi_star(phi, lam), mu) == hom_pa(b1, lam, phi_lowstar(phi, mu)));
}

TEST_CASE("kan lattice of CTX") {
  auto ctx = fixtures::ctx();
  FixedPointLattice k = kan_lattice(ctx.phi);
  CHECK(k.kind == "kan");
  CHECK(k.intents.empty());
  REQUIRE(k.extents.size() == 3);
  CHECK(k.extents[0] == subset_presheaf(ctx.B, {}));
  CHECK(k.extents[1] == subset_presheaf(ctx.B, {"y1"}));
  CHECK(k.extents[2] == subset_presheaf(ctx.B, {"y1", "y2"}));
  CHECK(is_complete(k.cat).complete);
}

TEST_CASE("kan lattice degenerate cases") {
  auto ctx = fixtures::ctx();
  // K(F^♮) = PA for a fully faithful F
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  FixedPointLattice k = kan_lattice(cograph(incl));
  PresheafCategory psub = enumerate_presheaves(sub);
  REQUIRE(k.extents.size() == psub.objs.size());
  for (std::size_t i = 0; i < k.extents.size(); ++i) CHECK(k.extents[i] == psub.objs[i]);

  // the identity distributor fixes everything
  FixedPointLattice all = kan_lattice(identity_dist(ctx.B));
  CHECK(all.extents.size() == enumerate_presheaves(ctx.B).objs.size());
}

TEST_CASE("why-Kan: the three functors coincide and are adjoint") {
  auto ctx = fixtures::ctx();
  CHECK(why_kan_check(identity_functor(ctx.A)).ok());

  auto star = star_category(ctx.q2, 0);
  QFunctor pick{star, ctx.B, {0}};
  CHECK(why_kan_check(pick).ok());
  // all three send λ to (* ↦ λ(y1))
  PresheafCategory pb = enumerate_presheaves(ctx.B);
  for (const Presheaf& lam : pb.objs) {
    Presheaf expect{lam.type_obj, {lam.values[0]}};
    CHECK(phi_lowstar(cograph(pick), lam) == expect);
    CHECK(transport_backward(pick, lam) == expect);
    CHECK(phi_star(graph(pick), lam) == expect);
  }

  auto chain = make_category(ctx.q2, {{"b", "*"}, {"t", "*"}}, {{"b", "t", "1"}});
  for (const QFunctor& f : enumerate_functors(ctx.A, chain)) CHECK(why_kan_check(f).ok());
}

TEST_CASE("fully faithful extension corollary") {
  auto ctx = fixtures::ctx();
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  QDistributor gr = graph(incl);
  QDistributor co = cograph(incl);
  PresheafCategory psub = enumerate_presheaves(sub);
  for (const Presheaf& mu : psub.objs) {
    // (F^♮)*(μ)∘F_♮ = μ and (F_♮)_*(μ)∘F_♮ = μ
    CHECK(presheaf_from_dist(compose_dist(to_dist(ctx.A, phi_star(co, mu)), gr)) == mu);
    CHECK(presheaf_from_dist(compose_dist(to_dist(ctx.A, phi_lowstar(gr, mu)), gr)) == mu);
  }
}

TEST_CASE("pointwise Kan extensions") {
  auto ctx = fixtures::ctx();
  QFunctor id = identity_functor(ctx.A);
  for (int c = 0; c < ctx.A.size(); ++c) {
    KanExtensionResult r = pointwise_kan_extension(id, id, c);
    CHECK(r.extension == co_yoneda(ctx.A, c));
    CHECK(r.representative == c);
  }

  auto star = star_category(ctx.q2, 0);
  QFunctor pick{star, ctx.B, {0}};   // * ↦ y1
  QFunctor id_star = identity_functor(star);
  KanExtensionResult r = pointwise_kan_extension(pick, id_star, 0);
  CHECK(r.extension == co_yoneda(ctx.B, 0));  // B(y1,-)
  CHECK(r.representative == 0);

  // no representing object: weight lands on an unrelated attribute
  QFunctor other{star, ctx.B, {1}};  // G: * ↦ y2, extend along F: * ↦ y1... swap roles
  KanExtensionResult none = pointwise_kan_extension(pick, other, 0);
  CHECK_FALSE(none.representative.has_value());
  CHECK(none.extension == subset_copresheaf(ctx.B, {"y1", "y2"}));  // B↙⊥ = ⊤
}

TEST_CASE("negation of distributors") {
  // L3: the half-constant matrix negates to its half-constant transpose
  auto a = fixtures::discrete(l3(), {"a1", "a2"});
  auto b = fixtures::discrete(a.q, {"b1"});
  GirardContext ctx3 = make_girard_context(a.q);
  QDistributor half = bottom_dist(a, b);
  half.m[0][0] = half.m[1][0] = 1;
  QDistributor nhalf = neg_dist(ctx3, half);
  CHECK(nhalf.m == std::vector<std::vector<Elem>>{{1, 1}});

  // ¬(identity) = ¬A entrywise
  CHECK(dist_eq(neg_dist(ctx3, identity_dist(a)), neg_category(ctx3, a)));

  // boolean CTX: complemented transpose
  auto ctx = fixtures::ctx();
  GirardContext ctx2 = make_girard_context(ctx.q2);
  QDistributor nphi = neg_dist(ctx2, ctx.phi);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(nphi.at(y, x) == 1 - ctx.phi.at(x, y));
}

TEST_CASE("girard identities") {
  auto ctx = fixtures::ctx();
  GirardContext g2 = make_girard_context(ctx.q2);
  CHECK(girard_kan_identity_check(g2, ctx.phi).ok());
  CHECK(girard_kan_identity_check(g2, identity_dist(ctx.A)).ok());

  // the explicit instance: φ*({y1}) = ¬((¬φ)↑({y1})) = {x1}
  QDistributor nphi = neg_dist(g2, ctx.phi);
  Presheaf via_neg =
      neg_copresheaf(g2, ctx.A, phi_up(nphi, subset_presheaf(ctx.B, {"y1"})));
  CHECK(via_neg == subset_presheaf(ctx.A, {"x1"}));

  // exhaustive over one-object L3 contexts
  auto a1 = fixtures::discrete(l3(), {"a"});
  auto b1 = fixtures::discrete(a1.q, {"b"});
  GirardContext g3 = make_girard_context(a1.q);
  for (const QDistributor& phi : enumerate_distributors(a1, b1))
    CHECK(girard_kan_identity_check(g3, phi).ok());
}

TEST_CASE("non-Girard family is rejected") {
  auto q = std::make_shared<Quantaloid>(builtin_lukasiewicz(3));
  CHECK_THROWS_AS(make_girard_context(q, DualizingFamily{{2}}), std::invalid_argument);
}

TEST_CASE("left adjoint distributors are exactly the doubly-adjoint inverse images") {
  auto ctx = fixtures::ctx();
  auto star = star_category(ctx.q2, 0);
  for (const QCategory& a : {star, ctx.A})
    for (const QCategory& b : {star, ctx.B}) {
      PresheafCategory pa = enumerate_presheaves(a);
      PresheafCategory pb = enumerate_presheaves(b);
      auto star_functor = [&](const QDistributor& phi) {
        // φ: A ⇸ B induces φ*: PB -> PA
        QFunctor f{pb.cat, pa.cat, {}};
        f.map.resize(pb.objs.size());
        for (std::size_t i = 0; i < pb.objs.size(); ++i)
          f.map[i] = pa.index_of(phi_star(phi, pb.objs[i]));
        return f;
      };
      auto costar_functor = [&](const QDistributor& psi) {
        // ψ: B ⇸ A induces ψ*: PA -> PB
        QFunctor f{pa.cat, pb.cat, {}};
        f.map.resize(pa.objs.size());
        for (std::size_t i = 0; i < pa.objs.size(); ++i)
          f.map[i] = pb.index_of(phi_star(psi, pa.objs[i]));
        return f;
      };
      for (const QDistributor& phi : enumerate_distributors(a, b))
        for (const QDistributor& psi : enumerate_distributors(b, a))
          CHECK(is_dist_adjunction(phi, psi) ==
                is_functor_adjunction(costar_functor(psi), star_functor(phi)));
    }
}

TEST_CASE("distributors biject with left adjoints PB -> PA, order-preserving") {
  auto ctx = fixtures::ctx();
  auto star = star_category(ctx.q2, 0);
  for (const QCategory& a : {star, ctx.A})
    for (const QCategory& b : {star, ctx.B}) {
      PresheafCategory pa = enumerate_presheaves(a);
      PresheafCategory pb = enumerate_presheaves(b);
      auto as_functor = [&](const QDistributor& phi) {
        QFunctor f{pb.cat, pa.cat, {}};
        f.map.resize(pb.objs.size());
        for (std::size_t i = 0; i < pb.objs.size(); ++i)
          f.map[i] = pa.index_of(phi_star(phi, pb.objs[i]));
        return f;
      };
      std::vector<QDistributor> dists = enumerate_distributors(a, b);
      std::set<std::vector<int>> image;
      for (const QDistributor& phi : dists) {
        QFunctor f = as_functor(phi);
        CHECK(validate_functor(f).is_functor);
        CHECK(find_right_adjoint(f).has_value());
        image.insert(f.map);
        // inverse: ⌞G∘Y_B⌟(x,y) = G(Y_B y)(x)
        QDistributor back{a, b, {}};
        back.m.assign(a.size(), std::vector<Elem>(b.size()));
        for (int y = 0; y < b.size(); ++y) {
          const Presheaf& img = pa.objs[f.map[pb.index_of(yoneda(b, y))]];
          for (int x = 0; x < a.size(); ++x) back.m[x][y] = img.values[x];
        }
        CHECK(dist_eq(back, phi));
      }
      CHECK(image.size() == dists.size());
      int left_adjoints = 0;
      for (const QFunctor& f : enumerate_functors(pb.cat, pa.cat))
        if (find_right_adjoint(f).has_value()) ++left_adjoints;
      CHECK(left_adjoints == static_cast<int>(dists.size()));
      for (const QDistributor& p1 : dists)
        for (const QDistributor& p2 : dists)
          if (dist_leq(p1, p2)) CHECK(functor_leq(as_functor(p1), as_functor(p2)));
    }
}

TEST_CASE("K is functorial: infomorphisms give continuous maps on the Kan side") {
  auto ctx = fixtures::ctx();
  auto sub = full_subcategory(ctx.A, {0});
  QFunctor incl{sub, ctx.A, {0}};
  QDistributor restricted{sub, ctx.B, {ctx.phi.m[0]}};
  Infomorphism info{incl, identity_functor(ctx.B), restricted, ctx.phi};
  REQUIRE(is_infomorphism(info.F, info.G, info.phi, info.psi));

  // G: (B', ψ_*ψ*) -> (B, φ_*φ*) continuous, with φ = restricted, ψ = ctx.phi
  PresheafCategory pb = enumerate_presheaves(ctx.B);
  auto kan_op = [&](const QDistributor& phi) {
    std::vector<int> op(pb.objs.size());
    for (std::size_t i = 0; i < pb.objs.size(); ++i)
      op[i] = pb.index_of(phi_lowstar(phi, phi_star(phi, pb.objs[i])));
    return op;
  };
  QClosureSpace space_psi = make_closure_space(ctx.B, kan_op(ctx.phi));
  QClosureSpace space_phi = make_closure_space(ctx.B, kan_op(restricted));
  CHECK(is_continuous(info.G, space_psi, space_phi));
}

TEST_CASE("the negation family is cyclic dualizing in Q-Dist") {
  auto ctx = fixtures::ctx();
  GirardContext g2 = make_girard_context(ctx.q2);
  auto star = star_category(ctx.q2, 0);
  for (const QCategory& a : {star, ctx.A})
    for (const QCategory& b : {star, ctx.B}) {
      QDistributor na = neg_category(g2, a);
      QDistributor nb = neg_category(g2, b);
      for (const QDistributor& f : enumerate_distributors(a, b)) {
        QDistributor lhs = dist_left_implication(na, f);   // ¬A ↙ f
        QDistributor rhs = dist_right_implication(f, nb);  // f ↘ ¬B
        CHECK(dist_eq(lhs, rhs));                          // cyclic
        CHECK(dist_eq(dist_right_implication(lhs, na), f));  // dualizing, left
        CHECK(dist_eq(dist_left_implication(nb, rhs), f));   // dualizing, right
      }
    }
}
