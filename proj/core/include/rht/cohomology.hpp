#ifndef RHT_COHOMOLOGY_HPP
#define RHT_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rht/linalg.hpp"
#include "rht/model.hpp"

namespace rht {

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

/* Everything computed for one degree. Coordinate vectors live over `monos`.
 * `reps` extends the coboundary basis to a basis of the cocycles, so its size
 * is the Betti number. */
struct DegreeData {
  int degree = 0;
  std::vector<Monomial> monos;
  std::vector<QVector> cocycles;
  std::vector<QVector> coboundaries;
  std::vector<QVector> reps;
};

/* Cohomology of a model, degree by degree, with all results exact and valid
 * through the model's bound. Caches per-degree data. */
class Cohomology {
public:
  explicit Cohomology(ModelPtr m);

  const Model& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }

  const DegreeData& degree_data(int n);  // requires n <= bound
  int betti(int n);                      // 0 for n < 0; requires n <= bound
  std::vector<int> betti_through(int n);

  std::vector<Polynomial> representatives(int n);

  /* Coordinates of the class of a cocycle over representatives(n). Throws
   * InputError when p is not a homogeneous cocycle. */
  QVector class_coords(const Polynomial& p);
  bool is_coboundary(const Polynomial& p);

  /* A u with d(u) = p, when one exists. Works for deg(p) <= bound + 1. */
  std::optional<Polynomial> primitive(const Polynomial& p);

  /* Span of products of two positive-degree classes inside H^n, as class
   * coordinates over representatives(n), reduced to an independent set. */
  std::vector<QVector> decomposables_in(int n);
  bool class_in_decomposables(const Polynomial& p);

  /* Longest product of positive-degree classes that is nonzero in some degree
   * <= through_degree. */
  int cup_length(int through_degree);

  /* Matrix of the linear-part map H^n -> V^n: column j is the linear part of
   * representatives(n)[j] in generator coordinates. Needs a minimal model. */
  QMatrix zeta_matrix(int n);
  int spherical_dim(int n);  // rank of zeta_matrix(n)

private:
  ModelPtr model_;
  std::map<int, DegreeData> cache_;
};

struct ModelInvariants {
  std::vector<int> betti;          // degrees 0..bound
  std::optional<int> formal_dim;   // pure models: sum of odd degrees minus sum of (even-1)
  Verdict finite = Verdict::unknown;
  std::optional<long> euler;       // present only with a finiteness certificate
  Verdict f0 = Verdict::unknown;   // finite, positive Euler characteristic, even cohomology
  int cup_length = 0;
  std::vector<int> spherical;      // dim of the spherical subspace per degree; empty if not minimal
  std::vector<std::string> notes;  // which certificates applied / why a verdict is unknown
};

ModelInvariants invariants(Cohomology& coh);

}  // namespace rht

#endif
