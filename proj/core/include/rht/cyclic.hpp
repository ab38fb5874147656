#ifndef RHT_CYCLIC_HPP
#define RHT_CYCLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "rht/cohomology.hpp"
#include "rht/homotopy.hpp"
#include "rht/model.hpp"
#include "rht/morphism.hpp"

namespace rht {

/* ---------------- Gottlieb ranks ---------------- */

struct GottliebResult {
  int degree = 0;
  enum class Kind { computed, zero_by_parity, not_computed } kind = Kind::not_computed;
  int rank = 0;
  bool range_limited = false;  // partial generator list: rank only covers known generators
  std::vector<std::string> notes;
};

/* Rank of the degree-n Gottlieb group of the space the model describes: the
 * image of the kernel of [d, -] on degree -n derivations under evaluation
 * against the degree-n generators. Odd n is computed outright; even n is zero
 * whenever a category bound exists and is not computed otherwise. */
GottliebResult gottlieb_rank(const Model& m, int n,
                             std::optional<int> cat0_override = std::nullopt);

/* ---------------- power witnesses ---------------- */

struct PowerWitness {
  std::uint32_t even_gen = 0;
  std::uint32_t k = 0;   // d(eta) = x^k + remainder
  Polynomial eta;
  Polynomial remainder;  // every monomial contains a generator of lower degree than x
};

struct PowerSearch {
  std::optional<PowerWitness> witness;
  bool range_exhausted = false;  // some candidate power was cut off by the bound
  std::vector<std::string> notes;
};

/* Smallest k in [2, k_max] such that x^k is d of something modulo the ideal
 * of generators of degree below |x|. */
PowerSearch find_power_witness(const Model& m, std::uint32_t even_gen, int k_max = 6);

/* Closed-formula homotopy on Λ(x, y; d y = x^{k+1}): whenever the target
 * carries b_k with d(b_k) = (k+1)·a, the map x -> a, y -> b deforms to
 * x -> 0, y -> b - b_k·a^k/(k+1) through
 *   Ψ(x) = a·(1-t) + b_k·dt/(k+1)
 *   Ψ(y) = b - b_k·a^k/(k+1) + b_k·a^k·(1-t)^{k+1}/(k+1).
 * Inputs are validated for the degree and differential relations; the result
 * is a plain homotopy for verify_homotopy, not pre-verified. */
Homotopy power_contraction(const ModelPtr& trunc_source, const ModelPtr& target,
                           const Polynomial& a, const Polynomial& b, const Polynomial& b_k);

/* ---------------- odd-generator elimination ---------------- */

struct KillOddResult {
  enum class Status { ok, obstructed, refused } status = Status::refused;
  std::optional<Homotopy> homotopy;  // from f to its even truncation, verified
  MapPtr even_truncation;            // odd generators sent to zero
  std::optional<std::string> obstruction_gen;
  Polynomial obstruction_rep;        // non-bounding odd cocycle in the target
  std::string reason;
};

/* For f whose source has zero differential: hands back a verified homotopy
 * from f to the map that kills every odd generator, built from primitives of
 * the odd images (Φ(b) = f(b)(1-t) - η dt with dη = f(b)). Obstructed when
 * some odd image has nonzero class. */
KillOddResult kill_odd(const ModelMap& f, Cohomology& target_coh);

/* ---------------- odd-ideal image check ---------------- */

struct OddIdealCheck {
  bool ok = false;
  bool range_limited = false;
  struct Entry {
    std::string gen;
    std::uint32_t k = 0;
    Polynomial identity_residual;  // g(x^k + R) - d(g(eta)); zero for dg morphisms
    Polynomial even_part;          // part of g(x) inside the target's even subalgebra
    bool pass = false;
  };
  std::vector<Entry> entries;
  std::vector<std::string> notes;
};

/* For every even source generator x (in degree order), finds a power witness
 * and checks that g(x) has no component in the subalgebra generated by the
 * target's even generators. Works on unchecked morphism data and reports the
 * dg residual localized at the witness as a certificate. */
OddIdealCheck check_odd_ideal_image(const ModelMap& g, int k_max = 6);

/* ---------------- null-homotopy pipeline ---------------- */

struct NullhomotopyOutcome {
  enum class Status { nullhomotopic, refused, inconclusive } status = Status::refused;
  std::optional<Homotopy> witness;  // f ≃ 0, verified
  std::string reason;
  std::vector<std::string> log;
};

/* Null-homotopy via an intermediate zero-differential model: given
 * f = ftilde ∘ g (checked; when the factorization only holds up to homotopy
 * the pipeline falls back to the direct decision), with the target's odd
 * cohomology vanishing through the bound, ftilde is homotoped to its even
 * truncation and the even images of g are certified to vanish, making the
 * composite homotopy end at the zero map. */
NullhomotopyOutcome nullhomotopy_pipeline(const ModelMap& f, const ModelMap& ftilde,
                                          const ModelMap& g, Cohomology& source_coh,
                                          Cohomology& target_coh, int k_max = 6);

/* ---------------- affiliated witnesses ---------------- */

/* Witness format for cyclicness of the map the model morphism describes:
 * F into target ⊗ source with F followed by (source-part projection)
 * homotopic to the identity and F followed by (target-part projection)
 * homotopic to f itself. */
struct AffiliatedWitness {
  MapPtr F;
  ModelPtr tensor;                          // target ⊗ source of f
  std::uint32_t split = 0;                  // tensor generators < split come from the target
};

struct WitnessCheck {
  bool ok = false;
  std::vector<std::string> notes;
};

MapPtr project_to_left(const AffiliatedWitness& w, ModelPtr left);    // right gens -> 0
MapPtr project_to_right(const AffiliatedWitness& w, ModelPtr right);  // left gens -> 0

WitnessCheck check_affiliated(const AffiliatedWitness& w, const ModelMap& f,
                              Cohomology& source_coh, Cohomology& target_coh);

/* Pushes a witness for f along theta : target(f) -> target(theta), giving a
 * witness for theta ∘ f; verified before it is returned. */
AffiliatedWitness witness_transport(const AffiliatedWitness& w, const ModelMap& f,
                                    const ModelMap& theta, Cohomology& source_coh,
                                    Cohomology& theta_target_coh);

/* ---------------- necessary-condition battery ---------------- */

struct BatteryCondition {
  std::string name;
  enum class Outcome { pass, fail, not_applicable, split_required } outcome =
      Outcome::not_applicable;
  std::string detail;
};

struct BatteryReport {
  bool not_cyclic = false;  // some applicable condition provably fails
  std::vector<BatteryCondition> conditions;
  std::vector<std::string> notes;
};

/* Necessary conditions for f (as a map of spaces, source model = the target
 * space) to be cyclic. Conditions that need a category bound use the source
 * model's cat0 attribute or the override. A nonzero composite of the linear
 * part with the spherical classes only *fails* the battery when the Euler
 * characteristic is certified nonzero; otherwise it asks for a splitting
 * investigation instead. */
BatteryReport cyclic_battery(const ModelMap& f, Cohomology& source_coh,
                             Cohomology& target_coh,
                             std::optional<int> cat0_override = std::nullopt);

/* ---------------- splitting check ---------------- */

struct SplitOutcome {
  bool split = false;
  std::string detail;
  ModelPtr rebased;  // the model rewritten with the cocycle as a generator (on success)
};

/* Sufficient check that a homogeneous cocycle u with a linear part splits off
 * a free factor (exterior for odd u, polynomial for even u): rewrite the model
 * with u as a generator and look for it in the differentials. Failure here
 * does not rule a splitting out. */
SplitOutcome split_check(const ModelPtr& m, const Polynomial& u);

/* ---------------- classification ---------------- */

struct CyclicClassification {
  enum class Kind { truncated_type, pure_even_two_type } kind = Kind::truncated_type;
  int dimension = 0;
  std::vector<MapPtr> representatives;      // classes of a basis, pairwise non-homotopic
  std::vector<AffiliatedWitness> witnesses; // one verified witness per representative
  std::vector<std::string> notes;
};

/* Classifies cyclic maps into the space of x_coh's model, with a_coh's model
 * as the mapping space source. Supported shapes: Λ(x, y; dy = x^{k+1}) with
 * unit coefficient, and pure models whose even generators all sit in degree 2
 * with finite even cohomology. Anything else is a typed refusal. */
CyclicClassification classify_cyclic(Cohomology& x_coh, Cohomology& a_coh);

}  // namespace rht

#endif
