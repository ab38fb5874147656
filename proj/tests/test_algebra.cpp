#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "rht/algebra.hpp"
#include "rht/errors.hpp"

namespace {

using namespace rht;
using rht_test::rand_poly, rht_test::rand_nonzero_poly, rht_test::rand_rat;

AlgebraPtr mixed_algebra() {
  // two even, three odd generators; enough to exercise every sign rule
  return Algebra::make({{"a", 2}, {"b", 3}, {"c", 3}, {"e", 4}, {"f", 5}}, 14);
}

/* Independent count of the monomial basis: multiply the generating functions
 * 1/(1-q^d) (even) and 1+q^d (odd) as integer series truncated at `bound`. */
std::vector<long> series_counts(const Algebra& alg, int bound) {
  std::vector<long> acc(bound + 1, 0);
  acc[0] = 1;
  for (const auto& g : alg.generators()) {
    std::vector<long> next(bound + 1, 0);
    if (g.degree % 2 == 0) {
      for (int n = 0; n <= bound; ++n)
        for (int e = 0; n + e * g.degree <= bound; ++e) next[n + e * g.degree] += acc[n];
    } else {
      for (int n = 0; n <= bound; ++n) {
        next[n] += acc[n];
        if (n + g.degree <= bound) next[n + g.degree] += acc[n];
      }
    }
    acc = next;
  }
  return acc;
}

/* Sign of sorting a word into canonical order, tracked one transposition at a
 * time; zero when an odd generator repeats. */
int bubble_sign(const Algebra& alg, std::vector<std::uint32_t> word) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      auto key = [&](std::uint32_t g) {
        return std::pair<int, std::uint32_t>(alg.gen(g).degree, g);
      };
      if (key(word[j]) > key(word[j + 1])) {
        if (alg.gen(word[j]).degree % 2 != 0 && alg.gen(word[j + 1]).degree % 2 != 0) sign = -sign;
        std::swap(word[j], word[j + 1]);
      }
    }
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1] && alg.gen(word[i]).degree % 2 != 0) return 0;
  return sign;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("basis sizes match the generating-function count") {
    auto check_counts = [](const AlgebraPtr& alg) {
      auto expect = series_counts(*alg, alg->bound());
      for (int n = 0; n <= alg->bound(); ++n)
        CHECK(basis(*alg, n).size() == static_cast<std::size_t>(expect[n]));
    };
    check_counts(mixed_algebra());
    check_counts(Algebra::make({{"x", 2}, {"y", 2}, {"z", 7}}, 16));
    check_counts(Algebra::make({{"u", 3}, {"v", 3}, {"w", 3}}, 9));
  }

  TEST_CASE("basis monomials are distinct, sorted, and of the right degree") {
    auto alg = mixed_algebra();
    for (int n = 0; n <= alg->bound(); ++n) {
      auto bs = basis(*alg, n);
      for (std::size_t i = 0; i < bs.size(); ++i) {
        CHECK(bs[i].degree() == n);
        if (i + 1 < bs.size()) CHECK(bs[i] < bs[i + 1]);
      }
    }
  }

  TEST_CASE("products commute up to the Koszul sign") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed);
    for (int trial = 0; trial < 60; ++trial) {
      int da = 2 + trial % 5, db = 2 + (trial * 3) % 5;
      Polynomial a = rand_poly(rng, *alg, da), b = rand_poly(rng, *alg, db);
      Polynomial ab = a * b, ba = b * a;
      if (da % 2 != 0 && db % 2 != 0)
        CHECK(ab == -ba);
      else
        CHECK(ab == ba);
    }
  }

  TEST_CASE("multiplication is associative and distributes over addition") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 1);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial a = rand_poly(rng, *alg, 2 + trial % 4);
      Polynomial b = rand_poly(rng, *alg, 3);
      Polynomial c = rand_poly(rng, *alg, 2 + (trial + 1) % 4);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c.scaled(0)) == a * b);  // scaling by zero annihilates
      CHECK(a * (b - b) == Polynomial());
    }
    Polynomial a = rand_nonzero_poly(rng, *alg, 2), b = rand_nonzero_poly(rng, *alg, 3),
               c = rand_nonzero_poly(rng, *alg, 3);
    CHECK(a * (b + c) == a * b + a * c);
  }

  TEST_CASE("odd generators square to zero, even ones do not") {
    auto alg = mixed_algebra();
    Polynomial b = Polynomial::generator(*alg, *alg->find("b"));
    Polynomial a = Polynomial::generator(*alg, *alg->find("a"));
    CHECK((b * b).is_zero());
    CHECK(!(a * a).is_zero());
    CHECK(b.pow(2).is_zero());
    CHECK(a.pow(3).degree() == 6);
  }

  TEST_CASE("normalize_word reproduces the transposition parity") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 2);
    std::uniform_int_distribution<std::uint32_t> pick_gen(0, std::uint32_t(alg->size() - 1));
    std::uniform_int_distribution<int> pick_len(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint32_t> word(pick_len(rng));
      for (auto& g : word) g = pick_gen(rng);
      SignedMonomial sm = normalize_word(*alg, word);
      int expect = bubble_sign(*alg, word);
      CHECK(sm.sign == expect);
      if (expect != 0) {
        // the normalized monomial multiplies back out to the same word
        Polynomial prod = Polynomial::constant(*alg, 1);
        for (auto g : word) prod = prod * Polynomial::generator(*alg, g);
        CHECK(prod == Polynomial::monomial(*alg, sm.mono, rat(expect)));
      }
    }
  }

  TEST_CASE("degree is additive on products") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 3);
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial a = rand_nonzero_poly(rng, *alg, 2 + trial % 4);
      Polynomial b = rand_nonzero_poly(rng, *alg, 2 + (trial * 5) % 4);
      Polynomial ab = a * b;
      if (!ab.is_zero()) CHECK(*ab.degree() == *a.degree() + *b.degree());
    }
    CHECK(!Polynomial().degree().has_value());
    Polynomial mixed = Polynomial::generator(*alg, 0) + Polynomial::constant(*alg, 1);
    CHECK(!mixed.degree().has_value());
    CHECK(mixed.max_degree() == 2);
    CHECK(mixed.is_homogeneous(2) == false);
  }

  TEST_CASE("linear and rest parts partition a polynomial") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 4);
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial p = rand_poly(rng, *alg, 2 + trial % 6) + rand_poly(rng, *alg, 4);
      Polynomial lin = p.linear_part(), rest = p.rest_part();
      CHECK(lin + rest == p);
      for (const auto& [m, c] : lin.terms()) CHECK(m.word_length() == 1);
      for (const auto& [m, c] : rest.terms()) CHECK(m.word_length() != 1);
    }
  }

  TEST_CASE("coordinates invert the basis expansion") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 5);
    for (int n = 2; n <= alg->bound(); ++n) {
      auto bs = basis(*alg, n);
      Polynomial p = rand_poly(rng, *alg, n, 5);
      QVector v = coordinates(*alg, p, bs);
      Polynomial back;
      for (std::size_t j = 0; j < bs.size(); ++j)
        back = back + Polynomial::monomial(*alg, bs[j], v[j]);
      CHECK(back == p);
    }
  }

  TEST_CASE("derivations satisfy the signed Leibniz rule") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 6);
    for (bool theta_odd : {true, false}) {
      int shift = theta_odd ? 1 : 2;
      std::vector<Polynomial> images;
      for (std::uint32_t g = 0; g < alg->size(); ++g)
        images.push_back(rand_poly(rng, *alg, alg->gen(g).degree + shift));
      auto theta = [&](const Polynomial& p) {
        return apply_derivation(p, images, theta_odd, alg->id());
      };
      for (int trial = 0; trial < 30; ++trial) {
        int da = 2 + trial % 4;
        Polynomial a = rand_poly(rng, *alg, da), b = rand_poly(rng, *alg, 3);
        Polynomial lhs = theta(a * b);
        Polynomial sign_term = (theta_odd && da % 2 != 0) ? -(a * theta(b)) : a * theta(b);
        CHECK(lhs == theta(a) * b + sign_term);
      }
      // constants die under every derivation
      CHECK(theta(Polynomial::constant(*alg, rat(7, 3))).is_zero());
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    auto alg = mixed_algebra();
    std::mt19937 rng(rht_test::kSeed + 7);
    std::vector<Polynomial> images;
    for (std::uint32_t g = 0; g < alg->size(); ++g)
      images.push_back(rand_poly(rng, *alg, alg->gen(g).degree));
    auto phi = [&](const Polynomial& p) { return substitute(p, images, alg->id()); };
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial a = rand_poly(rng, *alg, 2 + trial % 4), b = rand_poly(rng, *alg, 3);
      CHECK(phi(a * b) == phi(a) * phi(b));
      CHECK(phi(a + b) == phi(a) + phi(b));
    }
    CHECK(phi(Polynomial::constant(*alg, rat(5))) == Polynomial::constant(*alg, rat(5)));
  }

  TEST_CASE("generator degrees below 2 are refused outside plumbing") {
    CHECK_THROWS_AS(Algebra::make({{"t", 0}}, 4), InputError);
    CHECK_THROWS_AS(Algebra::make({{"t", 1}}, 4), InputError);
    CHECK_NOTHROW(Algebra::make_any({{"t", 0}, {"dt", 1}}, 4));
    CHECK_THROWS_AS(Algebra::make({{"x", 2}, {"x", 4}}, 6), InputError);
  }

  TEST_CASE("basis past the bound is an error, not a guess") {
    auto alg = Algebra::make({{"x", 2}}, 6);
    CHECK(basis(*alg, 6).size() == 1);
    CHECK_THROWS_AS(basis(*alg, 7), RangeError);
  }
}
