#ifndef RHT_MODEL_HPP
#define RHT_MODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rht/algebra.hpp"

namespace rht {

class Model;
using ModelPtr = std::shared_ptr<const Model>;

struct ModelAttrs {
  std::optional<int> cat0;  // user-supplied upper bound for rational category
  std::optional<int> top;   // claimed formal dimension, when known
  bool partial = false;     // generator list known to be incomplete past the bound
};

/* A free commutative dg algebra (ΛV, d) with d of degree +1 and d∘d = 0,
 * generators in degree >= 2, complete through alg->bound(). Construction
 * rejects degree-inhomogeneous differentials and d² != 0 outright; a linear
 * term in some differential only clears the minimality flag, since most of
 * the toolkit still works on such models. */
class Model {
public:
  static ModelPtr make(std::string name, AlgebraPtr alg, std::vector<Polynomial> d_images,
                       ModelAttrs attrs = {});

  const std::string& name() const { return name_; }
  const Algebra& alg() const { return *alg_; }
  const AlgebraPtr& alg_ptr() const { return alg_; }
  int bound() const { return alg_->bound(); }
  std::optional<int> cat0() const { return attrs_.cat0; }
  std::optional<int> top() const { return attrs_.top; }
  bool partial() const { return attrs_.partial; }
  bool is_minimal() const { return minimal_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const Polynomial& d_of(std::uint32_t gen) const { return d_images_[gen]; }
  const std::vector<Polynomial>& d_images() const { return d_images_; }
  Polynomial d(const Polynomial& p) const;
  bool is_cocycle(const Polynomial& p) const { return d(p).is_zero(); }

  std::vector<std::uint32_t> gens_in_degree(int n) const;
  int max_gen_degree() const;

  bool has_zero_differential() const;  // every d(g) = 0
  /* Pure: even generators are closed and odd differentials land in the
   * subalgebra generated by the even part. */
  bool is_pure_format() const;

private:
  Model(std::string name, AlgebraPtr alg, std::vector<Polynomial> d_images, ModelAttrs attrs);

  std::string name_;
  AlgebraPtr alg_;
  std::vector<Polynomial> d_images_;
  ModelAttrs attrs_;
  bool minimal_ = true;
  std::vector<std::string> warnings_;
};

/* Product model: left's generators first, then right's (renamed on collision).
 * The bound is the smaller of the two; cat0 and top add when both sides have
 * them. */
ModelPtr tensor_model(const Model& left, const Model& right, std::string name);

}  // namespace rht

#endif
