#ifndef RHT_HOMOTOPY_HPP
#define RHT_HOMOTOPY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rht/cohomology.hpp"
#include "rht/model.hpp"
#include "rht/morphism.hpp"

namespace rht {

/* target ⊗ Λ(t, dt) with |t| = 0, d(t) = dt. The base generators keep their
 * indices; t and dt are appended, so base polynomials transfer by retagging.
 * Canonical monomials look like t^k · dt^δ · (base part), which makes the
 * fiber integral and the t-potential below sign-free. */
class Cylinder {
public:
  explicit Cylinder(ModelPtr base);

  const Model& base() const { return *base_; }
  const Algebra& alg() const { return *alg_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t dt() const { return dt_; }

  Polynomial include(const Polynomial& base_poly) const;  // M -> M ⊗ Λ(t,dt)
  Polynomial d(const Polynomial& p) const;
  Polynomial eval(const Polynomial& p, const Rational& t_value) const;  // dt -> 0

  /* ∫: t^k dt · m -> m / (k+1); terms without dt integrate to zero. */
  Polynomial integrate(const Polynomial& p) const;

  /* P: t^k dt · m -> t^{k+1}/(k+1) · m, dropping dt-free terms. For a closed
   * z with z|_{t=0} = 0 this is a genuine primitive: d(P z) = z. */
  Polynomial t_potential(const Polynomial& p) const;

  int max_t_exponent(const Polynomial& p) const;

private:
  ModelPtr base_;
  AlgebraPtr alg_;
  std::uint32_t t_, dt_;
  std::vector<Polynomial> d_images_;
};

/* A homotopy H : source -> cyl(target); H|_{t=0} and H|_{t=1} are its ends. */
class Homotopy {
public:
  Homotopy(std::string name, ModelPtr source, Cylinder cylinder,
           std::vector<Polynomial> images);

  const std::string& name() const { return name_; }
  const ModelPtr& source() const { return source_; }
  const Cylinder& cylinder() const { return cyl_; }
  const Polynomial& image_of(std::uint32_t gen) const { return images_[gen]; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  Polynomial end(const Rational& t_value, std::uint32_t gen) const;

private:
  std::string name_;
  ModelPtr source_;
  Cylinder cyl_;
  std::vector<Polynomial> images_;
};

struct HomotopyCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/* Confirms d∘H = H∘d and that the ends agree with f and g. Independent of how
 * the homotopy was produced. */
HomotopyCheck verify_homotopy(const Homotopy& H, const ModelMap& f, const ModelMap& g);

struct HomotopyDecision {
  enum class Status { homotopic, not_homotopic, inconclusive };
  Status status = Status::inconclusive;
  std::optional<Homotopy> witness;  // set when homotopic
  std::string detail;               // grounds for the verdict

  /* not_homotopic evidence: either a degree where the induced cohomology maps
   * differ, or a generator whose obstruction cocycle has nonzero class and is
   * independent of the choices made below it. */
  std::optional<int> h_degree;
  std::optional<std::string> obstruction_gen;
  Polynomial obstruction_rep;
  QVector obstruction_class;
};

/* Decides f ≃ g for dg morphisms with the same source and target.
 *
 *   homotopic      — constructed witness, re-verified before returning.
 *   not_homotopic  — sound certificate (see HomotopyDecision).
 *   inconclusive   — a greedy obstruction whose class could still depend on
 *                    primitive choices made at lower generators (the search
 *                    over those choices is not implemented), or a t-degree
 *                    cap set low enough to cut the construction off.
 *
 * The construction handles one generator v at a time in degree order:
 * with K = H(d v), the class of o = g(v) - f(v) - ∫K vanishes iff H extends
 * over v, and d(u) = o yields the extension
 *   H(v) = f(v)⊗1 + P(K - f(dv)⊗1) + t·o + dt·u.  */
HomotopyDecision decide_homotopic(const ModelMap& f, const ModelMap& g,
                                  Cohomology& source_coh, Cohomology& target_coh,
                                  std::optional<int> t_cap = std::nullopt);

}  // namespace rht

#endif
