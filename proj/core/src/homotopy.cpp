#include "rht/homotopy.hpp"

#include "rht/errors.hpp"

namespace rht {

Cylinder::Cylinder(ModelPtr base) : base_(std::move(base)) {
  if (!base_) throw InputError("cylinder needs a base model");
  std::vector<Generator> gens = base_->alg().generators();
  std::string tn = "t", dtn = "dt";
  while (base_->alg().find(tn)) tn += "_";
  while (base_->alg().find(dtn)) dtn += "_";
  gens.push_back({tn, 0});
  gens.push_back({dtn, 1});
  alg_ = Algebra::make_any(std::move(gens), base_->alg().bound());
  t_ = static_cast<std::uint32_t>(base_->alg().size());
  dt_ = t_ + 1;
  d_images_.reserve(alg_->size());
  for (std::uint32_t i = 0; i < base_->alg().size(); ++i)
    d_images_.push_back(base_->d_of(i).retagged(alg_->id()));
  d_images_.push_back(Polynomial::generator(*alg_, dt_));
  d_images_.push_back(Polynomial::zero(*alg_));
}

Polynomial Cylinder::include(const Polynomial& base_poly) const {
  if (base_poly.algebra_id() != 0 && base_poly.algebra_id() != base_->alg().id())
    throw InputError("cylinder inclusion applied to a foreign polynomial");
  return base_poly.retagged(alg_->id());
}

Polynomial Cylinder::d(const Polynomial& p) const {
  return apply_derivation(p, d_images_, /*theta_odd=*/true, alg_->id());
}

Polynomial Cylinder::eval(const Polynomial& p, const Rational& t_value) const {
  std::vector<Polynomial> imgs;
  imgs.reserve(alg_->size());
  for (std::uint32_t i = 0; i < base_->alg().size(); ++i)
    imgs.push_back(Polynomial::generator(base_->alg(), i));
  imgs.push_back(Polynomial::constant(base_->alg(), t_value));
  imgs.push_back(Polynomial::zero(base_->alg()));
  return substitute(p, imgs, base_->alg().id());
}

Polynomial Cylinder::integrate(const Polynomial& p) const {
  Polynomial out = Polynomial::zero(base_->alg());
  for (const auto& [mono, coeff] : p.terms()) {
    long k = 0;
    bool has_dt = false;
    std::vector<Factor> rest;
    for (const auto& f : mono.factors()) {
      if (f.gen == t_)
        k = f.exp;
      else if (f.gen == dt_)
        has_dt = true;
      else
        rest.push_back(f);
    }
    if (!has_dt) continue;
    out.add_term(Monomial::from_sorted(std::move(rest)), coeff / Rational(k + 1));
  }
  return out;
}

Polynomial Cylinder::t_potential(const Polynomial& p) const {
  Polynomial out = Polynomial::zero(*alg_);
  for (const auto& [mono, coeff] : p.terms()) {
    long k = 0;
    bool has_dt = false;
    std::vector<Factor> rest;
    for (const auto& f : mono.factors()) {
      if (f.gen == t_)
        k = f.exp;
      else if (f.gen == dt_)
        has_dt = true;
      else
        rest.push_back(f);
    }
    if (!has_dt) continue;
    std::vector<Factor> fs;
    fs.push_back(Factor{t_, 0, static_cast<std::uint32_t>(k + 1)});
    fs.insert(fs.end(), rest.begin(), rest.end());
    out.add_term(Monomial::from_sorted(std::move(fs)), coeff / Rational(k + 1));
  }
  return out;
}

int Cylinder::max_t_exponent(const Polynomial& p) const {
  int m = 0;
  for (const auto& [mono, c] : p.terms())
    for (const auto& f : mono.factors())
      if (f.gen == t_) m = std::max(m, static_cast<int>(f.exp));
  return m;
}

Homotopy::Homotopy(std::string name, ModelPtr source, Cylinder cylinder,
                   std::vector<Polynomial> images)
    : name_(std::move(name)), source_(std::move(source)), cyl_(std::move(cylinder)),
      images_(std::move(images)) {
  if (!source_) throw InputError("homotopy needs a source model");
  if (images_.size() != source_->alg().size())
    throw InputError("homotopy " + name_ + ": expected " +
                     std::to_string(source_->alg().size()) + " images, got " +
                     std::to_string(images_.size()));
  for (const auto& img : images_)
    if (img.algebra_id() != 0 && img.algebra_id() != cyl_.alg().id())
      throw InputError("homotopy " + name_ + ": an image lives outside the cylinder");
}

Polynomial Homotopy::apply(const Polynomial& p) const {
  if (p.algebra_id() != 0 && p.algebra_id() != source_->alg().id())
    throw InputError("homotopy " + name_ + " applied to a foreign polynomial");
  return substitute(p, images_, cyl_.alg().id());
}

Polynomial Homotopy::end(const Rational& t_value, std::uint32_t gen) const {
  return cyl_.eval(images_[gen], t_value);
}

HomotopyCheck verify_homotopy(const Homotopy& H, const ModelMap& f, const ModelMap& g) {
  HomotopyCheck out;
  auto fail = [&](const std::string& s) {
    out.ok = false;
    out.failures.push_back(s);
  };
  const Model& S = *H.source();
  if (f.source()->alg().id() != S.alg().id() || g.source()->alg().id() != S.alg().id())
    fail("the maps do not share the homotopy's source model");
  if (f.target()->alg().id() != H.cylinder().base().alg().id() ||
      g.target()->alg().id() != H.cylinder().base().alg().id())
    fail("the maps do not land in the cylinder's base model");
  if (!out.ok) return out;
  const Algebra& B = H.cylinder().base().alg();
  for (std::uint32_t i = 0; i < S.alg().size(); ++i) {
    const std::string& gn = S.alg().gen(i).name;
    Polynomial r = H.cylinder().d(H.image_of(i)) - H.apply(S.d_of(i));
    if (!r.is_zero())
      fail("dH - Hd nonzero at " + gn + ": " + to_string(H.cylinder().alg(), r));
    Polynomial e0 = H.end(Rational(0), i) - f.image_of(i);
    if (!e0.is_zero()) fail("end at t=0 differs from " + f.name() + " at " + gn + ": " +
                            to_string(B, e0));
    Polynomial e1 = H.end(Rational(1), i) - g.image_of(i);
    if (!e1.is_zero()) fail("end at t=1 differs from " + g.name() + " at " + gn + ": " +
                            to_string(B, e1));
  }
  return out;
}

HomotopyDecision decide_homotopic(const ModelMap& f, const ModelMap& g,
                                  Cohomology& source_coh, Cohomology& target_coh,
                                  std::optional<int> t_cap) {
  if (f.source()->alg().id() != g.source()->alg().id() ||
      f.target()->alg().id() != g.target()->alg().id())
    throw InputError("decide_homotopic: maps do not share source and target");
  if (source_coh.model_ptr()->alg().id() != f.source()->alg().id() ||
      target_coh.model_ptr()->alg().id() != f.target()->alg().id())
    throw InputError("decide_homotopic: cohomology caches do not match the maps");
  if (!f.check_dg().ok || !g.check_dg().ok)
    throw InputError("decide_homotopic needs dg morphisms; run map checks first");

  HomotopyDecision dec;
  Cylinder cyl(f.target());
  const Algebra& S = f.source()->alg();

  bool equal = true;
  for (std::uint32_t i = 0; i < S.size() && equal; ++i)
    if (!(f.image_of(i) == g.image_of(i))) equal = false;
  if (equal) {
    std::vector<Polynomial> imgs;
    for (std::uint32_t i = 0; i < S.size(); ++i) imgs.push_back(cyl.include(f.image_of(i)));
    Homotopy W(f.name() + "~" + g.name(), f.source(), std::move(cyl), std::move(imgs));
    auto chk = verify_homotopy(W, f, g);
    if (!chk.ok) throw Error("constant homotopy failed verification: " + chk.failures.front());
    dec.status = HomotopyDecision::Status::homotopic;
    dec.witness = std::move(W);
    dec.detail = "the maps are equal";
    return dec;
  }

  for (int n = 0; n <= std::min(f.source()->bound(), f.target()->bound()); ++n) {
    QMatrix hf = induced_H(f, source_coh, target_coh, n);
    QMatrix hg = induced_H(g, source_coh, target_coh, n);
    if (!(hf == hg)) {
      dec.status = HomotopyDecision::Status::not_homotopic;
      dec.h_degree = n;
      dec.detail = "induced maps on degree-" + std::to_string(n) + " cohomology differ";
      return dec;
    }
  }

  /* Build H generator by generator, in degree order; d(v) only involves
   * generators of lower degree, which are already done. */
  std::vector<Polynomial> Himg(S.size());
  for (auto v : S.canonical_order()) {
    const Polynomial& dsv = f.source()->d_of(v);
    Polynomial K = substitute(dsv, Himg, cyl.alg().id());
    Polynomial o = g.image_of(v) - f.image_of(v) - cyl.integrate(K);
    if (!f.target()->d(o).is_zero())
      throw Error("homotopy obstruction failed to be closed at " + S.gen(v).name);
    auto u = target_coh.primitive(o);
    if (!u) {
      dec.obstruction_gen = S.gen(v).name;
      dec.obstruction_rep = o;
      dec.obstruction_class = target_coh.class_coords(o);
      bool rigid = true;
      for (const auto& [m, c] : dsv.terms())
        for (const auto& fac : m.factors())
          if (!f.source()->d_of(fac.gen).is_zero() || !Himg[fac.gen].is_zero()) rigid = false;
      if (rigid) {
        dec.status = HomotopyDecision::Status::not_homotopic;
        dec.detail = "obstruction at " + S.gen(v).name + " has nonzero class " +
                     to_string(f.target()->alg(), o) +
                     "; every generator feeding d(" + S.gen(v).name +
                     ") is closed with zero homotopy image, so the class is independent of "
                     "lower choices";
      } else {
        dec.status = HomotopyDecision::Status::inconclusive;
        dec.detail = "obstruction at " + S.gen(v).name + " with class " +
                     to_string(f.target()->alg(), o) +
                     " relative to the constructed partial homotopy; it may depend on "
                     "primitive choices at lower generators, and that search is not implemented";
      }
      return dec;
    }
    Polynomial z2 = K - cyl.include(f.apply(dsv));
    Polynomial Hv = cyl.include(f.image_of(v)) + cyl.t_potential(z2) +
                    Polynomial::generator(cyl.alg(), cyl.t()) * cyl.include(o) +
                    Polynomial::generator(cyl.alg(), cyl.dt()) * cyl.include(*u);
    if (t_cap && cyl.max_t_exponent(Hv) > *t_cap) {
      dec.status = HomotopyDecision::Status::inconclusive;
      dec.detail = "the construction needs t-degree " +
                   std::to_string(cyl.max_t_exponent(Hv)) + " at " + S.gen(v).name +
                   ", above the requested cap " + std::to_string(*t_cap);
      return dec;
    }
    Himg[v] = std::move(Hv);
  }
  Homotopy W(f.name() + "~" + g.name(), f.source(), cyl, std::move(Himg));
  auto chk = verify_homotopy(W, f, g);
  if (!chk.ok)
    throw Error("constructed homotopy failed verification: " + chk.failures.front());
  dec.status = HomotopyDecision::Status::homotopic;
  dec.witness = std::move(W);
  dec.detail = "homotopy constructed and verified";
  return dec;
}

}  // namespace rht
