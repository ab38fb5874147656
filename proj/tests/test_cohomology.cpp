#include "doctest.h"
#include "helpers.hpp"
#include "rht/catalog.hpp"
#include "rht/cohomology.hpp"
#include "rht/errors.hpp"

namespace {

using namespace rht;
using rht_test::rand_poly;

std::vector<int> betti_vector(Cohomology& coh) {
  return coh.betti_through(coh.model().bound());
}

Polynomial gen_poly(const Model& m, const std::string& name) {
  return Polynomial::generator(m.alg(), *m.alg().find(name));
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("spheres have two Betti numbers") {
    for (int n : {3, 5, 7, 9}) {
      Cohomology coh(sphere(n));
      for (int i = 0; i <= coh.model().bound(); ++i)
        CHECK(coh.betti(i) == ((i == 0 || i == n) ? 1 : 0));
    }
    for (int n : {2, 4, 6}) {
      Cohomology coh(sphere(n));
      for (int i = 0; i <= coh.model().bound(); ++i)
        CHECK(coh.betti(i) == ((i == 0 || i == n) ? 1 : 0));
    }
  }

  TEST_CASE("truncated polynomial algebras realize Q[x]/(x^{k+1})") {
    for (int n : {1, 2}) {
      for (int k : {1, 2, 3}) {
        Cohomology coh(truncated(n, k, 2 * n * (k + 2)));
        for (int i = 0; i <= coh.model().bound(); ++i) {
          bool in_truncation = i % (2 * n) == 0 && i <= 2 * n * k;
          CHECK(coh.betti(i) == (in_truncation ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("an even Eilenberg-MacLane model has polynomial cohomology") {
    Cohomology coh(kq(2, 10));
    for (int i = 0; i <= 10; ++i) CHECK(coh.betti(i) == (i % 2 == 0 ? 1 : 0));
  }

  TEST_CASE("hand-checked Betti tables") {
    Catalog cat;
    Cohomology su3(cat.model("su3_t"));
    CHECK(su3.betti_through(6) == std::vector<int>{1, 0, 2, 0, 2, 0, 1});
    for (int i = 7; i <= 10; ++i) CHECK(su3.betti(i) == 0);

    Cohomology q3(cat.model("q3"));
    CHECK(q3.betti_through(7) == std::vector<int>{1, 0, 3, 0, 3, 0, 1, 0});

    Cohomology prod(cat.model("s3xs4"));
    CHECK(prod.betti_through(8) == std::vector<int>{1, 0, 0, 1, 1, 0, 0, 1, 0});

    CHECK(q3.betti(-1) == 0);
  }

  TEST_CASE("tensor models satisfy the Kunneth convolution") {
    Catalog cat;
    auto convolve = [](Cohomology& a, Cohomology& b, int n) {
      int total = 0;
      for (int i = 0; i <= n; ++i) total += a.betti(i) * b.betti(n - i);
      return total;
    };
    struct Pair { const char* left; const char* right; };
    for (auto [l, r] : {Pair{"kq2", "s4"}, Pair{"s3", "s4"}, Pair{"s2", "q3"}}) {
      Cohomology ca(cat.model(l)), cb(cat.model(r));
      ModelPtr t = tensor_model(*cat.model(l), *cat.model(r), "t");
      Cohomology ct(t);
      for (int n = 0; n <= t->bound(); ++n) CHECK(ct.betti(n) == convolve(ca, cb, n));
    }
    // the pre-tensored catalog entry agrees with the construction
    Cohomology fixed(cat.model("kq2_x_s4"));
    Cohomology built(tensor_model(*cat.model("kq2"), *cat.model("s4"), "t"));
    CHECK(betti_vector(fixed) == betti_vector(built));
  }

  TEST_CASE("representatives are independent cocycles spanning the classes") {
    Catalog cat;
    for (const auto& name : {"su3_t", "q3", "s3xs4", "a5"}) {
      ModelPtr m = cat.model(name);
      Cohomology coh(m);
      for (int n = 1; n <= m->bound(); ++n) {
        auto reps = coh.representatives(n);
        CHECK(reps.size() == static_cast<std::size_t>(coh.betti(n)));
        for (std::size_t j = 0; j < reps.size(); ++j) {
          CHECK(m->is_cocycle(reps[j]));
          CHECK(!coh.is_coboundary(reps[j]));
          QVector e = coh.class_coords(reps[j]);
          for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] == (i == j ? rat(1) : rat(0)));
        }
      }
    }
  }

  TEST_CASE("coboundaries vanish in cohomology and admit primitives") {
    Catalog cat;
    std::mt19937 rng(rht_test::kSeed);
    for (const auto& name : {"su3_t", "q3"}) {
      ModelPtr m = cat.model(name);
      Cohomology coh(m);
      for (int trial = 0; trial < 25; ++trial) {
        Polynomial u = rand_poly(rng, m->alg(), 2 + trial % 5);
        Polynomial du = m->d(u);
        CHECK(coh.is_coboundary(du));
        if (!du.is_zero()) CHECK(is_zero_vector(coh.class_coords(du)));
        auto back = coh.primitive(du);
        REQUIRE(back.has_value());
        CHECK(m->d(*back) == du);
      }
      // a nonzero class has no primitive
      CHECK(!coh.primitive(coh.representatives(2)[0]).has_value());
    }
  }

  TEST_CASE("class_coords rejects junk") {
    Catalog cat;
    ModelPtr q3 = cat.model("q3");
    Cohomology coh(q3);
    CHECK_THROWS_AS(coh.class_coords(gen_poly(*q3, "p")), InputError);  // not a cocycle
    Polynomial mixed = gen_poly(*q3, "a") + gen_poly(*q3, "a") * gen_poly(*q3, "b");
    CHECK_THROWS_AS(coh.class_coords(mixed), InputError);  // inhomogeneous
  }

  TEST_CASE("decomposable subspaces") {
    Catalog cat;
    Cohomology su3(cat.model("su3_t"));
    // every positive class of the flag quotient above degree 2 is a product
    CHECK(su3.decomposables_in(4).size() == 2);
    CHECK(su3.decomposables_in(6).size() == 1);
    CHECK(su3.decomposables_in(2).empty());
    ModelPtr su3m = cat.model("su3_t");
    Polynomial x1 = gen_poly(*su3m, "x1"), x2 = gen_poly(*su3m, "x2");
    CHECK(su3.class_in_decomposables(x1 * x2));
    CHECK(!su3.class_in_decomposables(x1));

    Cohomology q3(cat.model("q3"));
    CHECK(q3.decomposables_in(2).empty());
    CHECK(q3.decomposables_in(4).size() == 3);
  }

  TEST_CASE("cup lengths") {
    Catalog cat;
    Cohomology s2(cat.model("s2"));
    CHECK(s2.cup_length(12) == 1);
    Cohomology cp3(cat.model("cp3"));
    CHECK(cp3.cup_length(12) == 3);
    Cohomology kq2(cat.model("kq2"));
    CHECK(kq2.cup_length(12) == 6);
    CHECK(kq2.cup_length(5) == 2);
    Cohomology su3(cat.model("su3_t"));
    CHECK(su3.cup_length(10) == 3);
    Cohomology q3(cat.model("q3"));
    CHECK(q3.cup_length(10) == 3);
  }

  TEST_CASE("linear parts cut out the spherical subspace") {
    Catalog cat;
    Cohomology su3(cat.model("su3_t"));
    QMatrix z2 = su3.zeta_matrix(2);
    CHECK(z2.rows() == 2);  // V^2 = span{x1, x2}
    CHECK(z2.cols() == 2);
    CHECK(su3.spherical_dim(2) == 2);
    CHECK(su3.spherical_dim(4) == 0);
    CHECK(su3.spherical_dim(6) == 0);

    Cohomology prod(cat.model("s3xs4"));
    CHECK(prod.spherical_dim(3) == 1);
    CHECK(prod.spherical_dim(4) == 1);
    CHECK(prod.spherical_dim(7) == 0);  // the top class a*b is decomposable

    Cohomology q3(cat.model("q3"));
    CHECK(q3.spherical_dim(2) == 3);
    CHECK(q3.spherical_dim(4) == 0);
  }

  TEST_CASE("invariant bundles: Euler characteristic and F0 certificates") {
    Catalog cat;

    Cohomology su3(cat.model("su3_t"));
    ModelInvariants i1 = invariants(su3);
    CHECK(i1.formal_dim == 6);
    CHECK(i1.finite == Verdict::yes);
    CHECK(i1.euler == 6);
    CHECK(i1.f0 == Verdict::yes);
    CHECK(i1.cup_length == 3);

    Cohomology q3(cat.model("q3"));
    ModelInvariants i2 = invariants(q3);
    CHECK(i2.formal_dim == 6);
    CHECK(i2.euler == 8);
    CHECK(i2.f0 == Verdict::yes);

    Cohomology s3(cat.model("s3"));
    ModelInvariants i3 = invariants(s3);
    CHECK(i3.euler == 0);
    CHECK(i3.f0 == Verdict::no);

    // a closed even generator certifies the cohomology infinite
    Cohomology kq2(cat.model("kq2"));
    ModelInvariants i4 = invariants(kq2);
    CHECK(i4.finite == Verdict::no);
    CHECK(!i4.euler.has_value());
    CHECK(i4.f0 == Verdict::no);

    Cohomology prod(cat.model("s3xs4"));
    ModelInvariants i5 = invariants(prod);
    CHECK(i5.formal_dim == 7);
    CHECK(i5.euler == 0);
    CHECK(i5.f0 == Verdict::no);
  }

  TEST_CASE("requests beyond the bound refuse instead of guessing") {
    Catalog cat;
    Cohomology coh(cat.model("su3_t"));
    CHECK(coh.betti(10) == 0);
    CHECK_THROWS_AS(coh.betti(11), RangeError);
    CHECK_THROWS_AS(coh.representatives(11), RangeError);
    // primitives work one degree past the bound and no further
    ModelPtr m = cat.model("su3_t");
    std::mt19937 rng(rht_test::kSeed);
    Polynomial top = rand_poly(rng, m->alg(), 10);
    CHECK_NOTHROW(coh.primitive(m->d(top)));
  }
}
