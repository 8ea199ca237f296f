#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/quantaloid.hpp"

using namespace qlab;

namespace {

// Independent Lukasiewicz model on indices 0..n-1: a*b = max(0, a+b-(n-1)),
// residuum a -> b = min(n-1, n-1-a+b).  Used as the oracle for the
// table-driven implications.
int luk_mul(int n, int a, int b) { return std::max(0, a + b - (n - 1)); }
int luk_res(int n, int a, int b) { return std::min(n - 1, n - 1 - a + b); }

}  // namespace

TEST_CASE("builtin quantaloids validate clean") {
  CHECK(validate_quantaloid(builtin_boolean()).ok());
  CHECK(validate_quantaloid(builtin_lukasiewicz(3)).ok());
  CHECK(validate_quantaloid(builtin_lukasiewicz(4)).ok());
  CHECK(validate_quantaloid(builtin_rel_like(2)).ok());
}

TEST_CASE("builtin dualizing families validate clean") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(3), builtin_lukasiewicz(4), builtin_rel_like(2)}) {
    REQUIRE(q.dualizing.has_value());
    CHECK(validate_dualizing_family(q, *q.dualizing).ok());
  }
}

TEST_CASE("broken compose table yields a unit-law violation with witness") {
  Quantaloid q = builtin_boolean();
  q.comp[0][1][1] = 0;  // 1∘1 redefined to 0
  Report r = validate_quantaloid(q);
  CHECK_FALSE(r.ok());
  bool unit_hit = false;
  for (const auto& v : r.items())
    if (v.law.rfind("unit.", 0) == 0 && v.witness.find("f=1") != std::string::npos) unit_hit = true;
  CHECK(unit_hit);
}

TEST_CASE("malformed tables are structural, not axiom failures") {
  Quantaloid q = builtin_boolean();
  q.units = {5};  // outside the carrier
  Report r = validate_quantaloid(q);
  REQUIRE_FALSE(r.ok());
  for (const auto& v : r.items()) CHECK(v.structural);
}

TEST_CASE("lukasiewicz parameter below 2 is rejected") {
  CHECK_THROWS_AS(builtin_lukasiewicz(1), std::invalid_argument);
}

TEST_CASE("implications on the boolean quantale") {
  Quantaloid q = builtin_boolean();
  // every h satisfies h∘0 = 0 <= 1
  CHECK(left_implication(q, {0, 0, 1}, {0, 0, 0}).value == 1);
  // top satisfies 1∘1 <= 1
  CHECK(right_implication(q, {0, 0, 1}, {0, 0, 1}).value == 1);
}

TEST_CASE("implications on L3 match the residuum oracle") {
  Quantaloid q = builtin_lukasiewicz(3);
  const int half = 1;
  CHECK(left_implication(q, {0, 0, 0}, {0, 0, half}).value == half);
  CHECK(right_implication(q, {0, 0, half}, {0, 0, 0}).value == half);
  for (int n : {2, 3, 4, 5}) {
    Quantaloid luk = builtin_lukasiewicz(n);
    for (Elem g = 0; g < n; ++g)
      for (Elem f = 0; f < n; ++f) {
        CHECK(luk.compose(0, 0, 0, g, f) == luk_mul(n, g, f));
        CHECK(luk.limp(0, 0, 0, g, f) == luk_res(n, f, g));
        CHECK(luk.rimp(0, 0, 0, f, g) == luk_res(n, f, g));
      }
  }
}

TEST_CASE("implication against the unit is the identity") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(4), builtin_rel_like(2)}) {
    for (int a = 0; a < q.size(); ++a)
      for (int x = 0; x < q.size(); ++x)
        for (Elem g = 0; g < q.hom(a, x).size(); ++g) {
          CHECK(q.limp(a, a, x, g, q.unit(a)) == g);
          CHECK(q.rimp(x, x, a, q.unit(x), g) == g);
        }
  }
}

TEST_CASE("residuation adjointness holds exhaustively") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(3), builtin_lukasiewicz(4), builtin_rel_like(2)}) {
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        for (int x = 0; x < q.size(); ++x)
          for (Elem f = 0; f < q.hom(a, b).size(); ++f) {
            for (Elem g = 0; g < q.hom(a, x).size(); ++g) {
              Elem imp = q.limp(a, b, x, g, f);
              for (Elem h = 0; h < q.hom(b, x).size(); ++h)
                CHECK(q.leq(a, x, q.compose(a, b, x, h, f), g) == q.leq(b, x, h, imp));
            }
            for (Elem g = 0; g < q.hom(x, b).size(); ++g) {
              Elem imp = q.rimp(a, b, x, f, g);
              for (Elem h = 0; h < q.hom(x, a).size(); ++h)
                CHECK(q.leq(x, b, q.compose(x, a, b, f, h), g) == q.leq(x, a, h, imp));
            }
          }
  }
}

TEST_CASE("arrow adjunctions") {
  Quantaloid q2 = builtin_boolean();
  CHECK(is_arrow_adjunction(q2, {0, 0, 1}, {0, 0, 1}));
  CHECK_FALSE(is_arrow_adjunction(q2, {0, 0, 0}, {0, 0, 1}));
  Quantaloid l3 = builtin_lukasiewicz(3);
  CHECK(is_arrow_adjunction(l3, {0, 0, 2}, {0, 0, 2}));
}

TEST_CASE("adjoint-arrow identities for every adjunction found by search") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(3), builtin_rel_like(2)}) {
    int pairs = 0;
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        for (Elem f = 0; f < q.hom(a, b).size(); ++f)
          for (Elem g = 0; g < q.hom(b, a).size(); ++g) {
            if (!is_arrow_adjunction(q, {a, b, f}, {b, a, g})) continue;
            ++pairs;
            for (int x = 0; x < q.size(); ++x) {
              // (1) h∘f = h↙g and g∘h = f↘h
              for (Elem h = 0; h < q.hom(b, x).size(); ++h)
                CHECK(q.compose(a, b, x, h, f) == q.limp(b, a, x, h, g));
              for (Elem h = 0; h < q.hom(x, b).size(); ++h)
                CHECK(q.compose(x, b, a, g, h) == q.rimp(x, b, a, f, h));
              for (int y = 0; y < q.size(); ++y) {
                // (2) (f∘h)↘h' = h↘(g∘h')
                for (Elem h = 0; h < q.hom(x, a).size(); ++h)
                  for (Elem hp = 0; hp < q.hom(y, b).size(); ++hp)
                    CHECK(q.rimp(x, b, y, q.compose(x, a, b, f, h), hp) ==
                          q.rimp(x, a, y, h, q.compose(y, b, a, g, hp)));
                // (2') (h'∘f)↙h = h'↙(h∘g)
                for (Elem hp = 0; hp < q.hom(b, y).size(); ++hp)
                  for (Elem h = 0; h < q.hom(a, x).size(); ++h)
                    CHECK(q.limp(a, y, x, q.compose(a, b, y, hp, f), h) ==
                          q.limp(b, y, x, hp, q.compose(b, a, x, h, g)));
                // (3) (h↘h')∘f = h↘(h'∘f) with h: y->x, h': b->x
                for (Elem h = 0; h < q.hom(y, x).size(); ++h)
                  for (Elem hp = 0; hp < q.hom(b, x).size(); ++hp)
                    CHECK(q.compose(a, b, y, q.rimp(y, x, b, h, hp), f) ==
                          q.rimp(y, x, a, h, q.compose(a, b, x, hp, f)));
                // (3') g∘(h'↙h) = (g∘h')↙h with h': x->b, h: x->y
                for (Elem hp = 0; hp < q.hom(x, b).size(); ++hp)
                  for (Elem h = 0; h < q.hom(x, y).size(); ++h)
                    CHECK(q.compose(y, b, a, g, q.limp(x, b, y, hp, h)) ==
                          q.limp(x, a, y, q.compose(x, b, a, g, hp), h));
                // (4) g∘(h↘h') = (h∘f)↘h' with h: b->x, h': y->x
                for (Elem h = 0; h < q.hom(b, x).size(); ++h)
                  for (Elem hp = 0; hp < q.hom(y, x).size(); ++hp)
                    CHECK(q.compose(y, b, a, g, q.rimp(b, x, y, h, hp)) ==
                          q.rimp(a, x, y, q.compose(a, b, x, h, f), hp));
                // (4') (h'↙h)∘f = h'↙(g∘h) with h': x->y, h: x->b
                for (Elem hp = 0; hp < q.hom(x, y).size(); ++hp)
                  for (Elem h = 0; h < q.hom(x, b).size(); ++h)
                    CHECK(q.compose(a, b, y, q.limp(x, y, b, hp, h), f) ==
                          q.limp(x, y, a, hp, q.compose(x, b, a, g, h)));
              }
            }
          }
    CHECK(pairs > 0);
  }
}

TEST_CASE("negation on L3 with d = 0") {
  Quantaloid q = builtin_lukasiewicz(3);
  DualizingFamily d0{{0}};
  CHECK(negation(q, d0, {0, 0, 1}).value == 1);  // ¬(1/2) = 1/2
  CHECK(negation(q, d0, {0, 0, 0}).value == 2);  // ¬0 = 1
}

TEST_CASE("negation is an antitone involution on Girard builtins") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(4), builtin_rel_like(2)}) {
    const DualizingFamily& d = *q.dualizing;
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        for (Elem f = 0; f < q.hom(a, b).size(); ++f) {
          QArrow nf = negation(q, d, {a, b, f});
          CHECK(negation(q, d, nf).value == f);
          for (Elem g = 0; g < q.hom(a, b).size(); ++g)
            if (q.leq(a, b, f, g))
              CHECK(q.leq(b, a, negation(q, d, {a, b, g}).value, nf.value));
        }
  }
}

TEST_CASE("d = 1 on L3 is cyclic but not dualizing, witness f = 1/2") {
  Quantaloid q = builtin_lukasiewicz(3);
  DualizingFamily d1{{2}};
  Report r = validate_dualizing_family(q, d1);
  CHECK_FALSE(r.ok());
  bool cyclic_fails = false, dualizing_fails_at_half = false;
  for (const auto& v : r.items()) {
    if (v.law == "dualizing.cyclic") cyclic_fails = true;
    if (v.law.rfind("dualizing.", 0) == 0 && v.witness.find("f=1/2") != std::string::npos)
      dualizing_fails_at_half = true;
  }
  CHECK_FALSE(cyclic_fails);
  CHECK(dualizing_fails_at_half);
}

TEST_CASE("Girard identity groups hold exhaustively on builtins") {
  for (auto q : {builtin_boolean(), builtin_lukasiewicz(3), builtin_rel_like(2)}) {
    const std::vector<Elem>& d = q.dualizing->d;
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b)
        for (int c = 0; c < q.size(); ++c)
          for (Elem f = 0; f < q.hom(a, b).size(); ++f)
            for (Elem g = 0; g < q.hom(b, c).size(); ++g) {
              // (1) g∘f = d_c↙(f↘(g↘d_c)) = ((d_a↙f)↙g)↘d_a
              Elem gf = q.compose(a, b, c, g, f);
              Elem via_right = q.limp(c, a, c, d[c], q.rimp(a, b, c, f, q.rimp(b, c, c, g, d[c])));
              Elem via_left = q.rimp(c, a, a, q.limp(b, c, a, q.limp(a, b, a, d[a], f), g), d[a]);
              CHECK(gf == via_right);
              CHECK(gf == via_left);
              for (Elem h = 0; h < q.hom(a, c).size(); ++h) {
                // (2) (h↙f)↘d_c = f∘(h↘d_c) and d_a↙(g↘h) = (d_a↙h)∘g
                CHECK(q.rimp(b, c, c, q.limp(a, b, c, h, f), d[c]) ==
                      q.compose(c, a, b, f, q.rimp(a, c, c, h, d[c])));
                CHECK(q.limp(a, b, a, d[a], q.rimp(b, c, a, g, h)) ==
                      q.compose(b, c, a, q.limp(a, c, a, d[a], h), g));
                // (3) (d_b↙g)↘f = g↙(f↘d_b)
                CHECK(q.rimp(c, b, a, q.limp(b, c, b, d[b], g), f) ==
                      q.limp(b, c, a, g, q.rimp(a, b, b, f, d[b])));
              }
            }
  }
}
