#include "doctest.h"
#include "helpers.hpp"
#include "rht/catalog.hpp"
#include "rht/errors.hpp"
#include "rht/model.hpp"

namespace {

using namespace rht;
using rht_test::rand_poly;

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("construction rejects broken differentials") {
    auto alg = Algebra::make({{"x", 2}, {"y", 3}, {"w", 4}}, 10);
    Polynomial x = Polynomial::generator(*alg, *alg->find("x"));
    Polynomial y = Polynomial::generator(*alg, *alg->find("y"));
    Polynomial zero;

    SUBCASE("degree-inhomogeneous differential") {
      // d(y) must live in degree 4
      CHECK_THROWS_WITH_AS(Model::make("m", alg, {zero, x, zero}),
                           "model m: d(y) is not homogeneous of degree 4", InputError);
    }
    SUBCASE("d squared nonzero") {
      // d(w) = x*y with d(y) = x^2 gives d(d(w)) = x^3
      CHECK_THROWS_WITH_AS(Model::make("m", alg, {zero, x * x, x * y}),
                           "model m: d(d(w)) = x^3, not zero", InputError);
    }
    SUBCASE("wrong image count") {
      CHECK_THROWS_AS(Model::make("m", alg, {zero, zero}), InputError);
    }
    SUBCASE("valid differential is accepted and minimal") {
      ModelPtr m = Model::make("m", alg, {zero, x * x, zero});
      CHECK(m->is_minimal());
      CHECK(m->warnings().empty());
      CHECK(m->d_of(1) == x * x);
    }
  }

  TEST_CASE("a linear term clears minimality but does not reject") {
    auto alg = Algebra::make({{"x", 2}, {"v", 4}, {"y", 3}}, 10);
    Polynomial x = Polynomial::generator(*alg, 0), v = Polynomial::generator(*alg, 1);
    ModelPtr m = Model::make("m", alg, {Polynomial(), Polynomial(), x * x + v});
    CHECK(!m->is_minimal());
    REQUIRE(m->warnings().size() == 1);
    CHECK(m->warnings()[0] == "d(y) has a linear term; the model is not minimal");
  }

  TEST_CASE("d extends its generator images as an odd derivation") {
    Catalog cat;
    std::mt19937 rng(rht_test::kSeed);
    for (const auto& name : {"su3_t", "q3", "a5"}) {
      ModelPtr m = cat.model(name);
      for (int trial = 0; trial < 20; ++trial) {
        int da = 2 + trial % 4, db = 2 + (trial * 3) % 4;
        Polynomial a = rand_poly(rng, m->alg(), da), b = rand_poly(rng, m->alg(), db);
        Polynomial sign_term = (da % 2 != 0) ? -(a * m->d(b)) : a * m->d(b);
        CHECK(m->d(a * b) == m->d(a) * b + sign_term);
        CHECK(m->d(m->d(a + b)).is_zero());
      }
    }
  }

  TEST_CASE("cocycle detection follows d") {
    Catalog cat;
    ModelPtr q3 = cat.model("q3");
    Polynomial a = Polynomial::generator(q3->alg(), *q3->alg().find("a"));
    Polynomial b = Polynomial::generator(q3->alg(), *q3->alg().find("b"));
    Polynomial p = Polynomial::generator(q3->alg(), *q3->alg().find("p"));
    CHECK(q3->is_cocycle(a));
    CHECK(q3->is_cocycle(a * b));
    CHECK(!q3->is_cocycle(p));
    CHECK(q3->is_cocycle(q3->d(p)));
  }

  TEST_CASE("generator queries are degree-accurate") {
    Catalog cat;
    ModelPtr a5 = cat.model("a5");
    CHECK(a5->gens_in_degree(2).size() == 2);
    CHECK(a5->gens_in_degree(3).size() == 3);
    CHECK(a5->gens_in_degree(4).size() == 1);
    CHECK(a5->gens_in_degree(6).size() == 2);
    CHECK(a5->gens_in_degree(7).empty());
    CHECK(a5->max_gen_degree() == 6);
    CHECK(a5->partial());
    ModelPtr s4 = cat.model("s4");
    CHECK(s4->max_gen_degree() == 7);
    CHECK(!s4->partial());
  }

  TEST_CASE("format predicates: zero differential and purity") {
    Catalog cat;
    CHECK(cat.model("s3")->has_zero_differential());
    CHECK(!cat.model("s4")->has_zero_differential());
    for (const auto& name : {"s2", "s4", "cp2", "cp3", "kq2", "su3_t", "q3"})
      CHECK(cat.model(name)->is_pure_format());
    CHECK(cat.model("s3")->is_pure_format());  // no even part at all
    CHECK(!cat.model("a5")->is_pure_format()); // v4 is even with d(v4) != 0
  }

  TEST_CASE("tensor models multiply like products of spaces") {
    Catalog cat;
    ModelPtr prod = tensor_model(*cat.model("kq2"), *cat.model("s4"), "kq2*s4");
    CHECK(prod->alg().size() == cat.model("kq2")->alg().size() + cat.model("s4")->alg().size());
    CHECK(prod->bound() == std::min(cat.model("kq2")->bound(), cat.model("s4")->bound()));
    // differentials restrict to the factors
    for (std::uint32_t i = 0; i < prod->alg().size(); ++i) CHECK(prod->d(prod->d_of(i)).is_zero());
    ModelPtr sq = tensor_model(*cat.model("s2"), *cat.model("s2"), "s2*s2");
    // name collisions get suffixed, both factors keep their differentials
    CHECK(sq->alg().size() == 4);
    CHECK(sq->alg().find("x").has_value());
    for (std::uint32_t i = 0; i < sq->alg().size(); ++i)
      if (sq->alg().gen(i).degree == 3) CHECK(!sq->d_of(i).is_zero());
    // cat0 adds when both factors carry one
    REQUIRE(sq->cat0().has_value());
    CHECK(*sq->cat0() == 2);
    CHECK(!tensor_model(*cat.model("s2"), *cat.model("kq2"), "m")->cat0().has_value());
  }
}
