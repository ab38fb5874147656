#include "rht/morphism.hpp"

#include "rht/errors.hpp"

namespace rht {

ModelMap::ModelMap(std::string name, ModelPtr source, ModelPtr target,
                   std::vector<Polynomial> images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {}

MapPtr ModelMap::make_unchecked(std::string name, ModelPtr source, ModelPtr target,
                                std::vector<Polynomial> images) {
  if (!source || !target) throw InputError("map " + name + ": missing source or target model");
  if (images.size() != source->alg().size())
    throw InputError("map " + name + ": expected " + std::to_string(source->alg().size()) +
                     " generator images, got " + std::to_string(images.size()));
  for (const auto& img : images)
    if (img.algebra_id() != 0 && img.algebra_id() != target->alg().id())
      throw InputError("map " + name + ": an image lives outside the target algebra");
  return MapPtr(new ModelMap(std::move(name), std::move(source), std::move(target),
                             std::move(images)));
}

MapPtr ModelMap::make(std::string name, ModelPtr source, ModelPtr target,
                      std::vector<Polynomial> images) {
  MapPtr f = make_unchecked(std::move(name), std::move(source), std::move(target),
                            std::move(images));
  auto report = f->check_dg();
  if (!report.ok) {
    std::string msg = "map " + f->name() + " is not a dg morphism:";
    for (const auto& e : report.degree_errors) msg += "\n  " + e;
    for (const auto& [g, r] : report.residuals)
      msg += "\n  f(d " + f->source()->alg().gen(g).name + ") - d(f " +
             f->source()->alg().gen(g).name + ") = " + to_string(f->target()->alg(), r);
    throw InputError(msg);
  }
  return f;
}

MapPtr ModelMap::identity(ModelPtr m) {
  if (!m) throw InputError("identity needs a model");
  std::vector<Polynomial> images;
  for (std::uint32_t i = 0; i < m->alg().size(); ++i)
    images.push_back(Polynomial::generator(m->alg(), i));
  return make_unchecked("id_" + m->name(), m, m, std::move(images));
}

Polynomial ModelMap::apply(const Polynomial& p) const {
  if (p.algebra_id() != 0 && p.algebra_id() != source_->alg().id())
    throw InputError("map " + name_ + " applied to a polynomial from another algebra");
  return substitute(p, images_, target_->alg().id());
}

ModelMap::DgReport ModelMap::check_dg() const {
  DgReport rep;
  const Algebra& S = source_->alg();
  for (std::uint32_t i = 0; i < S.size(); ++i) {
    const Polynomial& img = images_[i];
    if (!img.is_zero() && !img.is_homogeneous(S.gen(i).degree)) {
      rep.ok = false;
      rep.degree_errors.push_back("image of " + S.gen(i).name +
                                  " is not homogeneous of degree " +
                                  std::to_string(S.gen(i).degree));
    }
  }
  if (!rep.degree_errors.empty()) return rep;  // residual degrees would be garbage
  for (std::uint32_t i = 0; i < S.size(); ++i) {
    Polynomial r = apply(source_->d_of(i)) - target_->d(images_[i]);
    if (!r.is_zero()) {
      rep.ok = false;
      rep.residuals.emplace_back(i, std::move(r));
    }
  }
  return rep;
}

bool ModelMap::images_are_cocycles() const {
  for (const auto& img : images_)
    if (!target_->d(img).is_zero()) return false;
  return true;
}

MapPtr compose(const ModelMap& g, const ModelMap& f) {
  if (f.target()->alg().id() != g.source()->alg().id())
    throw InputError("compose: " + g.name() + " does not start where " + f.name() + " ends");
  std::vector<Polynomial> images;
  for (std::uint32_t i = 0; i < f.source()->alg().size(); ++i)
    images.push_back(g.apply(f.image_of(i)));
  return ModelMap::make_unchecked(g.name() + "." + f.name(), f.source(), g.target(),
                                  std::move(images));
}

QMatrix induced_Q(const ModelMap& f, int n) {
  auto src_gens = f.source()->gens_in_degree(n);
  auto tgt_gens = f.target()->gens_in_degree(n);
  QMatrix Q(tgt_gens.size(), src_gens.size());
  for (std::size_t j = 0; j < src_gens.size(); ++j) {
    Polynomial lin = f.image_of(src_gens[j]).linear_part();
    for (std::size_t i = 0; i < tgt_gens.size(); ++i)
      Q.at(i, j) = lin.coefficient(Monomial::single(tgt_gens[i], n));
  }
  return Q;
}

QMatrix induced_H(const ModelMap& f, Cohomology& source_coh, Cohomology& target_coh, int n) {
  if (source_coh.model_ptr()->alg().id() != f.source()->alg().id() ||
      target_coh.model_ptr()->alg().id() != f.target()->alg().id())
    throw InputError("induced_H: cohomology caches do not match the map " + f.name());
  auto reps = source_coh.representatives(n);
  int tb = target_coh.betti(n);
  QMatrix M(static_cast<std::size_t>(tb), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    Polynomial img = f.apply(reps[j]);
    if (img.is_zero()) continue;
    QVector col = target_coh.class_coords(img);
    for (std::size_t i = 0; i < col.size(); ++i) M.at(i, j) = col[i];
  }
  return M;
}

QMatrix spherical_matrix(const ModelMap& f, Cohomology& source_coh, int n) {
  if (source_coh.model_ptr()->alg().id() != f.source()->alg().id())
    throw InputError("spherical_matrix: cohomology cache does not match the map " + f.name());
  return induced_Q(f, n) * source_coh.zeta_matrix(n);
}

}  // namespace rht
