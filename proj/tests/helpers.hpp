#pragma once

#include <random>
#include <vector>

#include "rht/algebra.hpp"
#include "rht/model.hpp"

namespace rht_test {

using namespace rht;

constexpr std::uint32_t kSeed = 0x5eed;

inline Rational rand_rat(std::mt19937& rng, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  return rat(num(rng), den(rng));
}

inline Rational rand_nonzero_rat(std::mt19937& rng, int lo = -4, int hi = 4) {
  Rational r;
  do {
    r = rand_rat(rng, lo, hi);
  } while (r == 0);
  return r;
}

/* Random homogeneous polynomial of the given degree (possibly zero when the
 * coefficients cancel; never inhomogeneous). */
inline Polynomial rand_poly(std::mt19937& rng, const Algebra& alg, int degree, int terms = 3) {
  Polynomial p = Polynomial::zero(alg);
  std::vector<Monomial> monos = basis(alg, degree);
  if (monos.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (int i = 0; i < terms; ++i)
    p = p + Polynomial::monomial(alg, monos[pick(rng)], rand_rat(rng));
  return p;
}

inline Polynomial rand_nonzero_poly(std::mt19937& rng, const Algebra& alg, int degree,
                                    int terms = 3) {
  Polynomial p;
  do {
    p = rand_poly(rng, alg, degree, terms);
  } while (p.is_zero());
  return p;
}

}  // namespace rht_test
