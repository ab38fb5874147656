#include "rht/model.hpp"

#include <algorithm>

#include "rht/errors.hpp"

namespace rht {

Model::Model(std::string name, AlgebraPtr alg, std::vector<Polynomial> d_images, ModelAttrs attrs)
    : name_(std::move(name)), alg_(std::move(alg)), d_images_(std::move(d_images)), attrs_(attrs) {}

ModelPtr Model::make(std::string name, AlgebraPtr alg, std::vector<Polynomial> d_images,
                     ModelAttrs attrs) {
  if (!alg) throw InputError("model needs an algebra");
  if (d_images.size() != alg->size())
    throw InputError("model " + name + ": expected " + std::to_string(alg->size()) +
                     " differentials, got " + std::to_string(d_images.size()));
  for (std::uint32_t i = 0; i < alg->size(); ++i) {
    const auto& dg = d_images[i];
    if (dg.algebra_id() != 0 && dg.algebra_id() != alg->id())
      throw InputError("model " + name + ": d(" + alg->gen(i).name +
                       ") lives in a different algebra");
    if (!dg.is_zero() && !dg.is_homogeneous(alg->gen(i).degree + 1))
      throw InputError("model " + name + ": d(" + alg->gen(i).name +
                       ") is not homogeneous of degree " + std::to_string(alg->gen(i).degree + 1));
  }
  if (attrs.cat0 && *attrs.cat0 < 0) throw InputError("cat0 must be nonnegative");
  if (attrs.top && *attrs.top < 0) throw InputError("top must be nonnegative");
  bool minimal = true;
  std::vector<std::string> warnings;
  for (std::uint32_t i = 0; i < alg->size(); ++i) {
    Polynomial dd = apply_derivation(d_images[i], d_images, /*theta_odd=*/true, alg->id());
    if (!dd.is_zero())
      throw InputError("model " + name + ": d(d(" + alg->gen(i).name + ")) = " +
                       to_string(*alg, dd) + ", not zero");
    if (!d_images[i].linear_part().is_zero()) {
      minimal = false;
      warnings.push_back("d(" + alg->gen(i).name + ") has a linear term; the model is not minimal");
    }
  }
  auto* raw = new Model(std::move(name), std::move(alg), std::move(d_images), attrs);
  raw->minimal_ = minimal;
  raw->warnings_ = std::move(warnings);
  return ModelPtr(raw);
}

Polynomial Model::d(const Polynomial& p) const {
  return apply_derivation(p, d_images_, /*theta_odd=*/true, alg_->id());
}

std::vector<std::uint32_t> Model::gens_in_degree(int n) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < alg_->size(); ++i)
    if (alg_->gen(i).degree == n) out.push_back(i);
  return out;
}

int Model::max_gen_degree() const {
  int d = 0;
  for (const auto& g : alg_->generators()) d = std::max(d, g.degree);
  return d;
}

bool Model::has_zero_differential() const {
  for (const auto& dg : d_images_)
    if (!dg.is_zero()) return false;
  return true;
}

bool Model::is_pure_format() const {
  for (std::uint32_t i = 0; i < alg_->size(); ++i) {
    if (!alg_->is_odd(i)) {
      if (!d_images_[i].is_zero()) return false;
    } else {
      for (const auto& [mono, c] : d_images_[i].terms())
        for (const auto& f : mono.factors())
          if (f.odd()) return false;
    }
  }
  return true;
}

ModelPtr tensor_model(const Model& left, const Model& right, std::string name) {
  std::vector<Generator> gens = left.alg().generators();
  for (const auto& g : right.alg().generators()) {
    std::string n = g.name;
    while (std::any_of(gens.begin(), gens.end(),
                       [&](const Generator& h) { return h.name == n; }))
      n += "'";
    gens.push_back({n, g.degree});
  }
  int bound = std::min(left.bound(), right.bound());
  AlgebraPtr alg = Algebra::make(std::move(gens), bound);
  std::uint32_t offset = static_cast<std::uint32_t>(left.alg().size());
  std::vector<Polynomial> d_images;
  for (std::uint32_t i = 0; i < offset; ++i)
    d_images.push_back(left.d_of(i).retagged(alg->id()));
  std::vector<Polynomial> shift;
  for (std::uint32_t j = 0; j < right.alg().size(); ++j)
    shift.push_back(Polynomial::generator(*alg, offset + j));
  for (std::uint32_t j = 0; j < right.alg().size(); ++j)
    d_images.push_back(substitute(right.d_of(j), shift, alg->id()));
  ModelAttrs attrs;
  if (left.cat0() && right.cat0()) attrs.cat0 = *left.cat0() + *right.cat0();
  if (left.top() && right.top()) attrs.top = *left.top() + *right.top();
  attrs.partial = left.partial() || right.partial();
  return Model::make(std::move(name), std::move(alg), std::move(d_images), attrs);
}

}  // namespace rht
