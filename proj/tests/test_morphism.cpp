#include "doctest.h"
#include "helpers.hpp"
#include "rht/catalog.hpp"
#include "rht/errors.hpp"
#include "rht/morphism.hpp"

namespace {

using namespace rht;
using rht_test::rand_poly;

Polynomial gen_poly(const Model& m, const std::string& name) {
  return Polynomial::generator(m.alg(), *m.alg().find(name));
}

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("make enforces the chain-map identity, make_unchecked does not") {
    Catalog cat;
    ModelPtr s2 = cat.model("s2"), s4 = cat.model("s4");
    Polynomial x2 = gen_poly(*s2, "x");
    // x:4 -> x^2, y:7 -> 0 preserves degrees but f(d y) = f(x^2) = x^4 != 0 = d(f y)
    std::vector<Polynomial> bad = {x2 * x2, Polynomial::zero(s2->alg())};
    CHECK_THROWS_AS(ModelMap::make("bad", s4, s2, bad), InputError);
    MapPtr loaded = ModelMap::make_unchecked("bad", s4, s2, bad);
    auto report = loaded->check_dg();
    CHECK(!report.ok);
    CHECK(report.degree_errors.empty());
    REQUIRE(report.residuals.size() == 1);
    CHECK(report.residuals[0].first == 1);  // y is the offender
    CHECK(report.residuals[0].second == (x2 * x2) * (x2 * x2));

    // y:7 -> x^2 lands in degree 4: flagged as a degree error, not a residual
    std::vector<Polynomial> degree_bad = {x2 * x2, x2 * x2};
    auto dg = ModelMap::make_unchecked("m", s4, s2, degree_bad)->check_dg();
    CHECK(!dg.degree_errors.empty());
  }

  TEST_CASE("catalog maps all satisfy check_dg") {
    Catalog cat;
    for (const auto& name : cat.map_names()) {
      MapPtr f = cat.map(name);
      auto report = f->check_dg();
      CHECK(report.ok);
      CHECK(report.degree_errors.empty());
      CHECK(report.residuals.empty());
    }
  }

  TEST_CASE("apply is a ring homomorphism commuting with d") {
    Catalog cat;
    std::mt19937 rng(rht_test::kSeed);
    for (const auto& name : {"hopf_composite", "a5_quotient", "s3_incl", "bottom_cell"}) {
      MapPtr f = cat.map(name);
      for (int trial = 0; trial < 15; ++trial) {
        int da = 2 + trial % 3, db = 2 + (trial * 5) % 3;
        Polynomial a = rand_poly(rng, f->source()->alg(), da);
        Polynomial b = rand_poly(rng, f->source()->alg(), db);
        CHECK(f->apply(a * b) == f->apply(a) * f->apply(b));
        CHECK(f->apply(a + b) == f->apply(a) + f->apply(b));
        CHECK(f->apply(f->source()->d(a)) == f->target()->d(f->apply(a)));
      }
    }
  }

  TEST_CASE("identity and composition") {
    Catalog cat;
    MapPtr hopf = cat.map("hopf_composite");  // s4 -> s3xs4
    MapPtr incl = cat.map("s3_incl");         // s3xs4 -> s3
    MapPtr id_s4 = ModelMap::identity(cat.model("s4"));

    MapPtr c = compose(*incl, *hopf);  // s4 -> s3
    CHECK(c->source() == cat.model("s4"));
    CHECK(c->target() == cat.model("s3"));
    // x -> 0, y -> incl(a*b) = e * 0 = 0
    CHECK(c->image_of(0).is_zero());
    CHECK(c->image_of(1).is_zero());

    MapPtr same = compose(*hopf, *id_s4);
    for (std::uint32_t i = 0; i < 2; ++i) CHECK(same->image_of(i) == hopf->image_of(i));

    CHECK_THROWS_AS(compose(*hopf, *incl), InputError);  // endpoints do not line up
  }

  TEST_CASE("induced_Q reads off linear parts per degree") {
    Catalog cat;
    MapPtr bottom = cat.map("bottom_cell");  // kq2 -> s2, u -> x
    QMatrix q2 = induced_Q(*bottom, 2);
    REQUIRE(q2.rows() == 1);
    REQUIRE(q2.cols() == 1);
    CHECK(q2.at(0, 0) == rat(1));

    MapPtr hopf = cat.map("hopf_composite");  // s4 -> s3xs4, x -> 0, y -> a*b
    CHECK(induced_Q(*hopf, 4).is_zero());
    CHECK(induced_Q(*hopf, 7).is_zero());  // a*b has no linear part

    MapPtr id4 = ModelMap::identity(cat.model("s4"));
    CHECK(induced_Q(*id4, 4) == QMatrix::identity(1));
    CHECK(induced_Q(*id4, 7) == QMatrix::identity(1));
  }

  TEST_CASE("induced_H is functorial under composition") {
    Catalog cat;
    MapPtr hopf = cat.map("hopf_composite");  // M(s3xs4) would be source of space map
    MapPtr incl = cat.map("s3_incl");
    MapPtr c = compose(*incl, *hopf);
    Cohomology c_s4(cat.model("s4")), c_prod(cat.model("s3xs4")), c_s3(cat.model("s3"));
    for (int n = 1; n <= 7; ++n) {
      QMatrix lhs = induced_H(*c, c_s4, c_s3, n);
      QMatrix step1 = induced_H(*hopf, c_s4, c_prod, n);
      QMatrix step2 = induced_H(*incl, c_prod, c_s3, n);
      CHECK(lhs == step2 * step1);
    }
  }

  TEST_CASE("induced_H hand pins") {
    Catalog cat;
    Cohomology c_s4(cat.model("s4")), c_prod(cat.model("s3xs4"));
    MapPtr hopf = cat.map("hopf_composite");
    // H^7(s4) = 0 and H^4 -> H^4 sends [x] to 0, but H^7 receives [a*b] from nothing:
    QMatrix h4 = induced_H(*hopf, c_s4, c_prod, 4);
    REQUIRE(h4.cols() == 1);
    CHECK(h4.is_zero());

    Cohomology c_a5(cat.model("a5")), c_s5(cat.model("s5"));
    QMatrix h5 = induced_H(*cat.map("a5_quotient"), c_s5, c_a5, 5);
    REQUIRE(h5.cols() == 1);
    CHECK(rank(h5) == 1);  // the quotient map is onto the degree-5 class
  }

  TEST_CASE("spherical_matrix composes the linear part with representatives") {
    Catalog cat;
    Cohomology c_s4(cat.model("s4"));
    MapPtr hopf = cat.map("hopf_composite");
    for (int n = 1; n <= 7; ++n) CHECK(spherical_matrix(*hopf, c_s4, n).is_zero());

    MapPtr id4 = ModelMap::identity(cat.model("s4"));
    CHECK(!spherical_matrix(*id4, c_s4, 4).is_zero());

    Cohomology c_s5(cat.model("s5"));
    MapPtr quot = cat.map("a5_quotient");
    // the image e -> u1*w2 - u2*w1 is decomposable: spherical classes die
    CHECK(spherical_matrix(*quot, c_s5, 5).is_zero());
  }

  TEST_CASE("shape mismatches are refused at load time") {
    Catalog cat;
    ModelPtr s2 = cat.model("s2"), s4 = cat.model("s4");
    CHECK_THROWS_AS(ModelMap::make_unchecked("m", s4, s2, {Polynomial::zero(s2->alg())}),
                    InputError);
    // image attached to the wrong algebra
    CHECK_THROWS_AS(
        ModelMap::make_unchecked("m", s4, s2, {gen_poly(*s4, "x"), Polynomial::zero(s2->alg())}),
        InputError);
  }
}
