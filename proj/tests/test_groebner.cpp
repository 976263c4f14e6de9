#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace mica;
using namespace mica_test;

namespace {

IdealGens ideal_of(const ContextPtr& ctx,
                   const std::vector<std::string>& gens,
                   MonomialOrder order = MonomialOrder::GrevLex,
                   Field field = Field::rationals()) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(P(g, ctx, order, field));
  return IdealGens(ctx, field, std::move(polys));
}

}  // namespace

TEST_CASE("multivariate division") {
  auto ctx = ctx_xy();
  auto order = MonomialOrder::Lex;
  std::vector<Polynomial> G{P("x*y - 1", ctx, order), P("y^2 - 1", ctx, order)};
  // hand division oracle value
  CHECK(reduce(P("x^2*y + x*y^2 + y^2", ctx, order), G, order) ==
        P("x + y + 1", ctx, order));
  CHECK(reduce(P("0", ctx, order), G, order).is_zero());
  CHECK(reduce(G[0], {&G[0], 1}, order).is_zero());
  // no term of a normal form is divisible by a basis lead
  auto nf = reduce(P("x^3*y^2 - x", ctx, order), G, order);
  for (const auto& t : nf.terms()) {
    for (const auto& g : G) {
      CHECK(!divides(g.leading_monomial(), t.mono));
    }
  }
}

TEST_CASE("s-polynomials") {
  auto ctx = ctx_xy();
  auto order = MonomialOrder::Lex;
  CHECK(s_polynomial(P("x^2 - y", ctx, order), P("x*y - 1", ctx, order),
                     order) == P("x - y^2", ctx, order));
  auto f = P("x^2 - y", ctx, order);
  CHECK(s_polynomial(f, f, order).is_zero());
  // coprime leading terms: the s-polynomial reduces to zero
  std::vector<Polynomial> G{P("x^2 - 1", ctx, order), P("y^2 - 1", ctx, order)};
  auto s = s_polynomial(G[0], G[1], order);
  CHECK(s == P("x^2 - y^2", ctx, order));
  CHECK(reduce(s, G, order).is_zero());
  CHECK_THROWS_AS(
      s_polynomial(P("0", ctx, order), P("x", ctx, order), order), InputError);
}

TEST_CASE("buchberger on hand examples") {
  auto ctx = ctx_xy();
  auto order = MonomialOrder::Lex;
  auto gb = buchberger(ideal_of(ctx, {"x*y - 1", "y^2 - 1"}, order), order);
  REQUIRE(gb.gens.size() == 2);
  CHECK(gb.gens[0] == P("x - y", ctx, order));
  CHECK(gb.gens[1] == P("y^2 - 1", ctx, order));
  CHECK(gb.reduced);

  auto single = buchberger(ideal_of(ctx, {"x"}, order), order);
  REQUIRE(single.gens.size() == 1);
  CHECK(single.gens[0] == P("x", ctx, order));
}

TEST_CASE("counterexample ideal: grevlex initial ideal") {
  auto ctx = ctx7();
  auto gb = buchberger(
      ideal_of(ctx, {"x*z - a^2", "y*z - b^2", "z^2 - t*z - c^2"}),
      MonomialOrder::GrevLex);
  auto J = initial_ideal(gb);
  // the published list plus y*a^2, which the published list omits
  CHECK(J == MI({"z^2", "y*z", "x*z", "z*b^2", "z*a^2", "y*a^2", "y*t*b^2",
                 "x*t*b^2", "x*t*a^2"},
                ctx));
}

TEST_CASE("initial ideal basics") {
  auto ctx = ctx_xy();
  auto order = MonomialOrder::Lex;
  auto gb = buchberger(ideal_of(ctx, {"x*y - 1", "y^2 - 1"}, order), order);
  CHECK(initial_ideal(gb) == MI({"x", "y^2"}, ctx));
  // GB of a monomial ideal is the ideal itself
  auto mono = buchberger(ideal_of(ctx, {"x^2", "x*y"}, order), order);
  CHECK(initial_ideal(mono) == MI({"x^2", "x*y"}, ctx));
}

TEST_CASE("membership") {
  auto ctx = ctx_xy();
  auto order = MonomialOrder::Lex;
  auto gb = buchberger(ideal_of(ctx, {"x*y - 1", "y^2 - 1"}, order), order);
  CHECK(membership(P("x - y", ctx, order), gb));
  CHECK(membership(P("0", ctx, order), gb));
  auto principal = buchberger(ideal_of(ctx, {"x"}, order), order);
  CHECK(!membership(P("1", ctx, order), principal));
}

TEST_CASE("linear coordinate changes") {
  auto ctx = ctx7();
  Field q = Field::rationals();
  auto id = LinearChange::identity(q, 7);
  auto f = P("t*z - c^2", ctx);
  CHECK(id.apply(f) == f);
  CHECK(id.lower_triangular());

  // t -> z - t sends tz - c^2 to z^2 - tz - c^2
  std::vector<std::vector<Scalar>> m(
      7, std::vector<Scalar>(7, Scalar::zero(q)));
  for (std::size_t i = 0; i < 7; ++i) m[i][i] = Scalar::one(q);
  std::size_t tpos = *ctx->index_of("t"), zpos = *ctx->index_of("z");
  m[tpos][tpos] = -Scalar::one(q);
  m[tpos][zpos] = Scalar::one(q);
  LinearChange subst(q, m);
  CHECK(subst.apply(f) == P("z^2 - t*z - c^2", ctx));
  CHECK(subst.lower_triangular());  // z ranks above t, so (t,z) sits below
                                    // the diagonal: a Borel-subgroup change

  // permutation swapping x and y maps (x) to (y)
  auto cxy = ctx_xy();
  std::vector<std::vector<Scalar>> perm{
      {Scalar::zero(q), Scalar::one(q)}, {Scalar::one(q), Scalar::zero(q)}};
  CHECK(LinearChange(q, perm).apply(P("x", cxy)) == P("y", cxy));

  // singular matrices are rejected at construction
  std::vector<std::vector<Scalar>> sing{
      {Scalar::one(q), Scalar::one(q)}, {Scalar::one(q), Scalar::one(q)}};
  CHECK_THROWS_AS(LinearChange(q, sing), InputError);
}

TEST_CASE("apply respects composition on random triples") {
  std::mt19937_64 rng(31);
  auto ctx = make_context({"x1", "x2", "x3"});
  Field q = Field::rationals();
  for (int i = 0; i < 25; ++i) {
    auto g = LinearChange::random(q, 3, rng, 5);
    auto h = LinearChange::random(q, 3, rng, 5);
    auto f = random_polynomial(rng, ctx, q, MonomialOrder::GrevLex, 3, 3, 4);
    CHECK(g.compose(h).apply(f) == g.apply(h.apply(f)));
  }
}

TEST_CASE("gin basics") {
  auto ctx = ctx_xy();
  Field q = Field::rationals();
  // gin of (x2) is (x1): the generic image has a nonzero x1 coefficient
  auto g1 = gin(ideal_of(ctx, {"y"}), MonomialOrder::GrevLex, 3, 3);
  CHECK(g1 == MI({"x"}, ctx));
  // gin of a principal homogeneous (f) of degree d is (x1^d)
  auto g2 = gin(ideal_of(ctx, {"x^3 - x*y^2 + y^3"}), MonomialOrder::GrevLex,
                5, 3);
  CHECK(g2 == MI({"x^3"}, ctx));
  // fixed seed and trials: deterministic
  auto a = gin(ideal_of(ctx, {"y"}), MonomialOrder::Lex, 17, 2);
  auto b = gin(ideal_of(ctx, {"y"}), MonomialOrder::Lex, 17, 2);
  CHECK(a == b);
  CHECK_THROWS_AS(gin(ideal_of(ctx, {"y"}), MonomialOrder::Lex, 0, 1),
                  InputError);
}

TEST_CASE("borel-fixed monomial ideals are stable under lower-triangular changes") {
  std::mt19937_64 rng(41);
  auto ctx = make_context({"x1", "x2", "x3"});
  Field q = Field::rationals();
  std::vector<MonomialIdeal> fixtures{
      MI({"x1"}, ctx), MI({"x1^2", "x1*x2", "x2^2"}, ctx),
      MI({"x1", "x2^3"}, ctx)};
  for (const auto& I : fixtures) {
    REQUIRE(is_borel_fixed(I).fixed);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
      gens.push_back(Polynomial::monomial(ctx, Scalar::one(q), g,
                                          MonomialOrder::GrevLex));
    }
    IdealGens ideal(ctx, q, gens);
    for (int trial = 0; trial < 10; ++trial) {
      // unit diagonal, small entries below it
      std::vector<std::vector<Scalar>> m(
          3, std::vector<Scalar>(3, Scalar::zero(q)));
      std::uniform_int_distribution<long> small(-3, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        m[i][i] = Scalar::one(q);
        for (std::size_t j = 0; j < i; ++j) {
          m[i][j] = Scalar::from_int(q, small(rng));
        }
      }
      LinearChange g(q, m);
      auto in = initial_ideal(
          buchberger(g.apply(ideal), MonomialOrder::GrevLex));
      CHECK(in == I);
    }
  }
}

TEST_CASE("buchberger correctness on random small instances") {
  std::mt19937_64 rng(2024);
  Field fp = Field::prime(32003);
  auto ctx = make_context({"x1", "x2", "x3"});
  auto order = MonomialOrder::GrevLex;
  int tested = 0;
  while (tested < 60) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> ngens(1, 3);
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) {
      auto f = random_polynomial(rng, ctx, fp, order, 3, 3, 20);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    ++tested;
    IdealGens I(ctx, fp, gens);
    auto gb = buchberger(I, order);
    // every S-pair reduces to zero
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
        CHECK(reduce(s_polynomial(gb.gens[i], gb.gens[j], order), gb.gens,
                     order)
                  .is_zero());
      }
    }
    // input leads are in the initial ideal
    auto in = initial_ideal(gb);
    for (const auto& f : gens) {
      CHECK(in.contains(f.with_order(order).leading_monomial()));
    }
    // random combinations of the generators are members
    for (int k = 0; k < 3; ++k) {
      Polynomial combo = Polynomial::zero(ctx, fp, order);
      for (const auto& g : gens) {
        combo = combo + g * random_polynomial(rng, ctx, fp, order, 2, 2, 20);
      }
      CHECK(membership(combo, gb));
    }
    // canonicality: generator permutation does not change the reduced GB
    std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
    auto gb2 = buchberger(IdealGens(ctx, fp, shuffled), order);
    REQUIRE(gb.gens.size() == gb2.gens.size());
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
      CHECK(gb.gens[i] == gb2.gens[i]);
    }
  }
}

TEST_CASE("resource caps raise distinct errors") {
  auto ctx = make_context({"x", "y", "z"});
  auto I = ideal_of(ctx, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"});
  BuchbergerLimits tight;
  tight.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::GrevLex, tight), ResourceError);
  BuchbergerLimits degree;
  degree.max_degree = 1;
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::GrevLex, degree), ResourceError);
  // unlimited default succeeds
  CHECK(!buchberger(I, MonomialOrder::GrevLex).gens.empty());
}

TEST_CASE("homogeneous flag") {
  auto ctx = ctx_xy();
  CHECK(ideal_of(ctx, {"x^2 - y^2", "x*y"}).homogeneous());
  CHECK(!ideal_of(ctx, {"x^2 - y"}).homogeneous());
}
