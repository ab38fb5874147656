#ifndef RHT_MORPHISM_HPP
#define RHT_MORPHISM_HPP

#include <string>
#include <utility>
#include <vector>

#include "rht/cohomology.hpp"
#include "rht/model.hpp"

namespace rht {

class ModelMap;
using MapPtr = std::shared_ptr<const ModelMap>;

/* Morphism of models f : source -> target (generators of the source algebra
 * get images in the target algebra). For maps of spaces this runs contra to
 * the spaces: a map A -> X of spaces induces M(X) -> M(A). */
class ModelMap {
public:
  /* Shape checks only (counts, algebra tags); dg-compatibility and degree
   * preservation are reported by check_dg instead of enforced, so invalid
   * morphism data can be loaded and examined. */
  static MapPtr make_unchecked(std::string name, ModelPtr source, ModelPtr target,
                               std::vector<Polynomial> images);
  /* Also requires degree preservation and f(d v) = d(f v) for every v. */
  static MapPtr make(std::string name, ModelPtr source, ModelPtr target,
                     std::vector<Polynomial> images);

  static MapPtr identity(ModelPtr m);

  const std::string& name() const { return name_; }
  const ModelPtr& source() const { return source_; }
  const ModelPtr& target() const { return target_; }
  const Polynomial& image_of(std::uint32_t gen) const { return images_[gen]; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;

  struct DgReport {
    bool ok = true;
    std::vector<std::string> degree_errors;
    /* generator index -> f(d v) - d(f v) for the generators where it is nonzero */
    std::vector<std::pair<std::uint32_t, Polynomial>> residuals;
  };
  DgReport check_dg() const;

  bool images_are_cocycles() const;

private:
  ModelMap(std::string name, ModelPtr source, ModelPtr target, std::vector<Polynomial> images);

  std::string name_;
  ModelPtr source_;
  ModelPtr target_;
  std::vector<Polynomial> images_;
};

/* g after f: (compose(g, f))(v) = g(f(v)). Requires f.target == g.source. */
MapPtr compose(const ModelMap& g, const ModelMap& f);

/* Linear part on generators of degree n: a matrix from the source's degree-n
 * generator coordinates to the target's. */
QMatrix induced_Q(const ModelMap& f, int n);

/* Induced map H^n(source) -> H^n(target), columns indexed by the source
 * representatives. The cohomology arguments must cache the matching models. */
QMatrix induced_H(const ModelMap& f, Cohomology& source_coh, Cohomology& target_coh, int n);

/* Composite of induced_Q with the source's linear-part map: columns are the
 * images in V_target^n of the spherical classes of the source. The map kills
 * all degree-n spherical classes iff this matrix is zero. */
QMatrix spherical_matrix(const ModelMap& f, Cohomology& source_coh, int n);

}  // namespace rht

#endif
