#ifndef RHT_ALGEBRA_HPP
#define RHT_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rht/linalg.hpp"
#include "rht/rational.hpp"

namespace rht {

struct Generator {
  std::string name;
  int degree = 0;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/* Free graded-commutative algebra over Q on an ordered list of generators.
 * Canonical generator order is (degree, declaration index); monomials keep
 * their factors sorted that way. `bound` is the degree through which the
 * generator list is complete — enumeration past it refuses. */
class Algebra {
public:
  /* Generators must have degree >= 2 (simply connected models). */
  static AlgebraPtr make(std::vector<Generator> gens, int bound);

  /* Plumbing entry point that admits degrees 0 and 1; used for cylinder
   * algebras (t, dt) and nowhere else. */
  static AlgebraPtr make_any(std::vector<Generator> gens, int bound);

  std::uint64_t id() const { return id_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& gen(std::uint32_t i) const { return gens_[i]; }
  bool is_odd(std::uint32_t i) const { return gens_[i].degree % 2 != 0; }
  int bound() const { return bound_; }
  std::optional<std::uint32_t> find(const std::string& name) const;
  const std::vector<Generator>& generators() const { return gens_; }

  /* Generator indices sorted by (degree, index). */
  const std::vector<std::uint32_t>& canonical_order() const { return canon_; }

  bool same_generators(const Algebra& other) const;

private:
  Algebra(std::vector<Generator> gens, int bound, bool allow_low);

  std::uint64_t id_;
  std::vector<Generator> gens_;
  std::vector<std::uint32_t> canon_;
  int bound_;
};

/* One factor g^e of a monomial. Degree is cached so monomial arithmetic never
 * needs the ambient algebra. Odd generators always have e = 1. */
struct Factor {
  std::uint32_t gen = 0;
  int degree = 0;
  std::uint32_t exp = 1;

  bool odd() const { return degree % 2 != 0; }
  auto key() const { return std::pair<int, std::uint32_t>(degree, gen); }
  bool operator==(const Factor&) const = default;
};

class Monomial {
public:
  Monomial() = default;  // the unit monomial
  static Monomial unit() { return Monomial(); }
  static Monomial single(std::uint32_t gen, int degree, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  std::uint32_t word_length() const;
  bool contains(std::uint32_t gen) const;

  /* Graded order: total degree, then the factor sequence. */
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  /* Internal: factors must already be canonically sorted and valid. */
  static Monomial from_sorted(std::vector<Factor> factors);

private:
  std::vector<Factor> factors_;
};

/* sign * monomial; sign 0 encodes the zero product (odd generator squared). */
struct SignedMonomial {
  int sign = 0;
  Monomial mono;
};

/* Koszul product of canonical monomials. */
SignedMonomial mono_mul(const Monomial& a, const Monomial& b);

/* Canonical form of an arbitrary word of generators (repetitions allowed),
 * with the sign produced by sorting odd factors past each other. */
SignedMonomial normalize_word(const Algebra& alg, const std::vector<std::uint32_t>& word);

class Polynomial {
public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;  // zero, attachable to any algebra
  static Polynomial zero(const Algebra& alg);
  static Polynomial constant(const Algebra& alg, const Rational& c);
  static Polynomial generator(const Algebra& alg, std::uint32_t gen);
  static Polynomial monomial(const Algebra& alg, const Monomial& m, const Rational& c);

  std::uint64_t algebra_id() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /* Homogeneous degree; nullopt for 0 and for inhomogeneous sums. */
  std::optional<int> degree() const;
  bool is_homogeneous(int n) const;
  int max_degree() const;  // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;
  bool operator==(const Polynomial& other) const;

  void add_term(const Monomial& m, const Rational& c);

  /* Word-length-1 part (the image of V). */
  Polynomial linear_part() const;
  /* Everything else: word length 0 or >= 2. The two parts sum back to *this. */
  Polynomial rest_part() const;

  /* Same terms re-attached to another algebra whose generator table extends
   * this one with identical indices/degrees; callers guarantee that. */
  Polynomial retagged(std::uint64_t alg_id) const;

private:
  std::uint64_t alg_ = 0;
  Terms terms_;

  void meld(std::uint64_t other);
};

/* All monomials of total degree n, sorted. Requires n <= alg.bound() (the
 * generator list is only complete through the bound) and no generator of
 * degree < 1 (cylinder algebras enumerate through their own helper). */
std::vector<Monomial> basis(const Algebra& alg, int n);

/* Coordinates of a homogeneous polynomial over basis(alg, n). */
QVector coordinates(const Algebra& alg, const Polynomial& p, const std::vector<Monomial>& basis_monos);

/* theta extended as a derivation of the given parity over a polynomial:
 * theta(uv) = theta(u) v + (-1)^{|theta||u|} u theta(v). `images[g]` is
 * theta(g); every generator needs an entry (zero polynomials allowed). */
Polynomial apply_derivation(const Polynomial& p, const std::vector<Polynomial>& images,
                            bool theta_odd, std::uint64_t target_alg_id);

/* Algebra morphism application: generators replaced by their images, products
 * multiplied out in the target. Images must be homogeneous of the same degree
 * as their generator for signs to be meaningful; validation is the caller's. */
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      std::uint64_t target_alg_id);

std::string to_string(const Algebra& alg, const Monomial& m);
std::string to_string(const Algebra& alg, const Polynomial& p);

}  // namespace rht

#endif
