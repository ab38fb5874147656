#include "rht/cyclic.hpp"

#include <algorithm>
#include <map>

#include "rht/errors.hpp"

namespace rht {

/* ================= Gottlieb ranks ================= */

GottliebResult gottlieb_rank(const Model& m, int n, std::optional<int> cat0_override) {
  if (n < 1) throw InputError("Gottlieb rank needs a positive degree");
  GottliebResult out;
  out.degree = n;
  out.range_limited = m.partial();
  if (out.range_limited)
    out.notes.push_back("partial generator list: the rank only covers known generators");
  std::optional<int> cat = cat0_override ? cat0_override : m.cat0();
  if (n % 2 == 0) {
    if (cat) {
      out.kind = GottliebResult::Kind::zero_by_parity;
      out.rank = 0;
      out.notes.push_back("even-degree Gottlieb groups vanish rationally under a finite "
                          "category bound (here " + std::to_string(*cat) + ")");
    } else {
      out.kind = GottliebResult::Kind::not_computed;
      out.notes.push_back("even degree and no category bound: not computed");
    }
    return out;
  }

  const Algebra& A = m.alg();
  struct Var {
    std::uint32_t gen;
    Monomial mono;
  };
  std::vector<Var> vars;
  std::vector<std::size_t> functional;  // vars reading off the unit coefficient in degree n
  for (std::uint32_t g = 0; g < A.size(); ++g) {
    int k = A.gen(g).degree - n;
    if (k < 0) continue;
    for (const auto& mono : basis(A, k)) {
      if (k == 0) functional.push_back(vars.size());
      vars.push_back({g, mono});
    }
  }
  if (vars.empty() || functional.empty()) {
    out.kind = GottliebResult::Kind::computed;
    out.rank = 0;
    return out;
  }

  /* E_v(g) = theta_v(d g) + d(theta_v(g)); a derivation is a cycle iff the
   * linear combination of these vanishes for every generator. */
  std::vector<QVector> rows;
  for (std::uint32_t g = 0; g < A.size(); ++g) {
    std::vector<Polynomial> eqs(vars.size());
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      std::vector<Polynomial> imgs(A.size());
      imgs[vars[v].gen] = Polynomial::monomial(A, vars[v].mono, Rational(1));
      Polynomial e = apply_derivation(m.d_of(g), imgs, /*theta_odd=*/true, A.id());
      if (vars[v].gen == g) e = e + m.d(Polynomial::monomial(A, vars[v].mono, Rational(1)));
      for (const auto& [mono, c] : e.terms()) row_of.try_emplace(mono, row_of.size());
      eqs[v] = std::move(e);
    }
    if (row_of.empty()) continue;
    std::size_t base = rows.size();
    rows.resize(base + row_of.size(), QVector(vars.size(), Rational(0)));
    for (std::size_t v = 0; v < vars.size(); ++v)
      for (const auto& [mono, c] : eqs[v].terms()) rows[base + row_of[mono]][v] = c;
  }
  QMatrix M = rows.empty() ? QMatrix(0, vars.size()) : QMatrix::from_rows(rows);
  std::vector<QVector> cycles = kernel_basis(M);
  std::vector<QVector> projected;
  for (const auto& c : cycles) {
    QVector p(functional.size());
    for (std::size_t i = 0; i < functional.size(); ++i) p[i] = c[functional[i]];
    projected.push_back(std::move(p));
  }
  out.kind = GottliebResult::Kind::computed;
  out.rank = projected.empty() ? 0 : static_cast<int>(rank(QMatrix::from_rows(projected)));
  return out;
}

/* ================= power witnesses ================= */

PowerSearch find_power_witness(const Model& m, std::uint32_t even_gen, int k_max) {
  const Algebra& A = m.alg();
  if (even_gen >= A.size()) throw InputError("unknown generator index");
  if (A.is_odd(even_gen)) throw InputError("power witnesses are for even generators");
  PowerSearch out;
  int deg = A.gen(even_gen).degree;
  for (int k = 2; k <= k_max; ++k) {
    int eta_deg = deg * k - 1;
    if (eta_deg > m.bound()) {
      out.range_exhausted = true;
      out.notes.push_back("power " + std::to_string(k) + " of " + A.gen(even_gen).name +
                          " needs degree " + std::to_string(eta_deg) + ", past the bound");
      break;
    }
    auto monos = basis(A, eta_deg);
    std::vector<Polynomial> images;
    images.reserve(monos.size());
    for (const auto& mo : monos)
      images.push_back(m.d(Polynomial::monomial(A, mo, Rational(1))));
    /* keep only the rows that survive killing the ideal of lower generators */
    auto survives = [&](const Monomial& mo) {
      for (const auto& f : mo.factors())
        if (f.degree < deg) return false;
      return true;
    };
    std::map<Monomial, std::size_t> row_of;
    Monomial xk = Monomial::single(even_gen, deg, static_cast<std::uint32_t>(k));
    row_of.try_emplace(xk, 0);
    for (const auto& img : images)
      for (const auto& [mo, c] : img.terms())
        if (survives(mo)) row_of.try_emplace(mo, row_of.size());
    QMatrix D(row_of.size(), monos.size());
    for (std::size_t cidx = 0; cidx < images.size(); ++cidx)
      for (const auto& [mo, c] : images[cidx].terms())
        if (survives(mo)) D.at(row_of[mo], cidx) = c;
    QVector b(row_of.size(), Rational(0));
    b[0] = 1;
    auto x = solve(D, b);
    if (!x) continue;
    PowerWitness w;
    w.even_gen = even_gen;
    w.k = static_cast<std::uint32_t>(k);
    w.eta = Polynomial::zero(A);
    for (std::size_t c = 0; c < monos.size(); ++c)
      if ((*x)[c] != 0) w.eta.add_term(monos[c], (*x)[c]);
    w.remainder = m.d(w.eta) - Polynomial::monomial(A, xk, Rational(1));
    for (const auto& [mo, c] : w.remainder.terms())
      if (survives(mo)) throw Error("power witness remainder escaped the lower ideal");
    out.witness = std::move(w);
    return out;
  }
  if (!out.range_exhausted)
    out.notes.push_back("no power of " + A.gen(even_gen).name + " up to " +
                        std::to_string(k_max) + " is exact modulo lower generators");
  return out;
}

Homotopy power_contraction(const ModelPtr& trunc_source, const ModelPtr& target,
                           const Polynomial& a, const Polynomial& b, const Polynomial& b_k) {
  if (!trunc_source || !target) throw InputError("power contraction needs both models");
  const Algebra& S = trunc_source->alg();
  if (S.size() != 2 || S.is_odd(0) || !S.is_odd(1) || !trunc_source->d_of(0).is_zero())
    throw InputError("the source must be Λ(x, y) with x even and closed");
  int xd = S.gen(0).degree, yd = S.gen(1).degree;
  if ((yd + 1) % xd != 0) throw InputError("generator degrees do not fit d y = x^{k+1}");
  std::uint32_t kp1 = static_cast<std::uint32_t>((yd + 1) / xd);
  Monomial xk = Monomial::single(0, xd, kp1);
  if (kp1 < 2 || trunc_source->d_of(1).term_count() != 1 ||
      trunc_source->d_of(1).coefficient(xk) != 1)
    throw InputError("the source differential must be d y = x^{k+1} with coefficient 1");
  if (!a.is_homogeneous(xd) || !target->is_cocycle(a))
    throw InputError("a must be a degree-" + std::to_string(xd) + " cocycle");
  if (!b.is_homogeneous(yd) || !(target->d(b) == a.pow(kp1)))
    throw InputError("b must satisfy d b = a^{k+1}");
  if (!b_k.is_homogeneous(xd - 1) || !(target->d(b_k) == a.scaled(Rational(kp1))))
    throw InputError("b_k must satisfy d b_k = (k+1) a");

  Cylinder cyl(target);
  Rational B = Rational(1) / Rational(kp1);
  Polynomial one_minus_t =
      Polynomial::constant(cyl.alg(), Rational(1)) - Polynomial::generator(cyl.alg(), cyl.t());
  Polynomial dt_p = Polynomial::generator(cyl.alg(), cyl.dt());
  Polynomial psi_x = cyl.include(a) * one_minus_t + (cyl.include(b_k) * dt_p).scaled(B);
  Polynomial bak = cyl.include(b_k * a.pow(kp1 - 1));
  Polynomial psi_y =
      cyl.include(b) - bak.scaled(B) + (bak * one_minus_t.pow(kp1)).scaled(B);
  return Homotopy("power_contraction", trunc_source, std::move(cyl), {psi_x, psi_y});
}

/* ================= odd-generator elimination ================= */

KillOddResult kill_odd(const ModelMap& f, Cohomology& target_coh) {
  KillOddResult out;
  if (target_coh.model_ptr()->alg().id() != f.target()->alg().id())
    throw InputError("kill_odd: cohomology cache does not match the map's target");
  if (!f.source()->has_zero_differential()) {
    out.reason = "the source of " + f.name() + " must have zero differential";
    return out;
  }
  if (!f.check_dg().ok) {
    out.reason = f.name() + " is not a dg morphism";
    return out;
  }
  const Algebra& S = f.source()->alg();
  Cylinder cyl(f.target());
  Polynomial one_minus_t =
      Polynomial::constant(cyl.alg(), Rational(1)) - Polynomial::generator(cyl.alg(), cyl.t());
  std::vector<Polynomial> phi(S.size());
  std::vector<Polynomial> trunc(S.size());
  for (std::uint32_t g = 0; g < S.size(); ++g) {
    if (!S.is_odd(g)) {
      phi[g] = cyl.include(f.image_of(g));
      trunc[g] = f.image_of(g);
      continue;
    }
    const Polynomial& fb = f.image_of(g);
    auto eta = target_coh.primitive(fb);
    if (!eta) {
      out.status = KillOddResult::Status::obstructed;
      out.obstruction_gen = S.gen(g).name;
      out.obstruction_rep = fb;
      out.reason = "image of " + S.gen(g).name + " is a non-bounding odd cocycle: " +
                   to_string(f.target()->alg(), fb);
      return out;
    }
    phi[g] = cyl.include(fb) * one_minus_t -
             Polynomial::generator(cyl.alg(), cyl.dt()) * cyl.include(*eta);
    trunc[g] = Polynomial::zero(f.target()->alg());
  }
  MapPtr truncated = ModelMap::make(f.name() + "_even", f.source(), f.target(), trunc);
  Homotopy H(f.name() + "_kill_odd", f.source(), std::move(cyl), std::move(phi));
  auto chk = verify_homotopy(H, f, *truncated);
  if (!chk.ok)
    throw Error("odd-elimination homotopy failed verification: " + chk.failures.front());
  out.status = KillOddResult::Status::ok;
  out.homotopy = std::move(H);
  out.even_truncation = std::move(truncated);
  out.reason = "verified";
  return out;
}

/* ================= odd-ideal image check ================= */

namespace {

Polynomial even_subalgebra_part(const Polynomial& p) {
  Polynomial out = p.scaled(Rational(0));
  for (const auto& [mono, c] : p.terms()) {
    bool all_even = true;
    for (const auto& f : mono.factors())
      if (f.odd()) all_even = false;
    if (all_even) out.add_term(mono, c);
  }
  return out;
}

}  // namespace

OddIdealCheck check_odd_ideal_image(const ModelMap& g, int k_max) {
  OddIdealCheck out;
  out.ok = true;
  const Model& S = *g.source();
  for (auto gen : S.alg().canonical_order()) {
    if (S.alg().is_odd(gen)) continue;
    auto ps = find_power_witness(S, gen, k_max);
    if (!ps.witness) {
      out.ok = false;
      out.range_limited = out.range_limited || ps.range_exhausted;
      for (auto& n : ps.notes) out.notes.push_back(n);
      continue;
    }
    OddIdealCheck::Entry e;
    e.gen = S.alg().gen(gen).name;
    e.k = ps.witness->k;
    Polynomial d_eta = S.d(ps.witness->eta);
    e.identity_residual = g.apply(d_eta) - g.target()->d(g.apply(ps.witness->eta));
    e.even_part = even_subalgebra_part(g.apply(Polynomial::generator(S.alg(), gen)));
    e.pass = e.even_part.is_zero();
    if (!e.pass) out.ok = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

/* ================= null-homotopy pipeline ================= */

NullhomotopyOutcome nullhomotopy_pipeline(const ModelMap& f, const ModelMap& ftilde,
                                          const ModelMap& g, Cohomology& source_coh,
                                          Cohomology& target_coh, int k_max) {
  NullhomotopyOutcome out;
  if (g.source()->alg().id() != f.source()->alg().id() ||
      ftilde.target()->alg().id() != f.target()->alg().id() ||
      g.target()->alg().id() != ftilde.source()->alg().id())
    throw InputError("pipeline: the factorization maps do not line up with " + f.name());
  if (!f.check_dg().ok || !g.check_dg().ok || !ftilde.check_dg().ok) {
    out.reason = "all three maps must be dg morphisms";
    return out;
  }
  if (!ftilde.source()->has_zero_differential()) {
    out.reason = "the intermediate model " + ftilde.source()->name() +
                 " must have zero differential";
    return out;
  }
  for (int n = 1; n <= f.target()->bound(); n += 2)
    if (target_coh.betti(n) != 0) {
      out.reason = "H^" + std::to_string(n) + " of " + f.target()->name() +
                   " is nonzero in an odd degree";
      return out;
    }
  out.log.push_back("odd cohomology of " + f.target()->name() + " vanishes through degree " +
                    std::to_string(f.target()->bound()));

  KillOddResult ko = kill_odd(ftilde, target_coh);
  if (ko.status != KillOddResult::Status::ok) {
    out.reason = "odd elimination failed: " + ko.reason;
    return out;
  }
  out.log.push_back("homotoped " + ftilde.name() + " to its even truncation");

  OddIdealCheck oc = check_odd_ideal_image(g, k_max);
  for (const auto& e : oc.entries)
    if (!e.pass) {
      out.reason = "the image of " + e.gen + " under " + g.name() +
                   " has a component in the even subalgebra: " +
                   to_string(g.target()->alg(), e.even_part);
      return out;
    }
  if (!oc.ok) {
    out.status = NullhomotopyOutcome::Status::inconclusive;
    out.reason = "missing power witnesses: " +
                 (oc.notes.empty() ? std::string("(no details)") : oc.notes.front());
    return out;
  }
  out.log.push_back("even generator images under " + g.name() +
                    " lie in the odd ideal (odd images do automatically)");

  MapPtr composite = compose(ftilde, g);
  bool exact = true;
  for (std::uint32_t i = 0; i < f.source()->alg().size() && exact; ++i)
    if (!(composite->image_of(i) == f.image_of(i))) exact = false;

  std::vector<Polynomial> zeros(f.source()->alg().size());
  MapPtr zero_map = ModelMap::make("zero", f.source(), f.target(), zeros);

  if (exact) {
    out.log.push_back("the factorization is exact: " + f.name() + " = " + ftilde.name() +
                      " after " + g.name());
    const Homotopy& phi = *ko.homotopy;
    std::vector<Polynomial> imgs;
    for (std::uint32_t i = 0; i < f.source()->alg().size(); ++i)
      imgs.push_back(substitute(g.image_of(i), phi.images(), phi.cylinder().alg().id()));
    Homotopy W("null_" + f.name(), f.source(), phi.cylinder(), std::move(imgs));
    auto chk = verify_homotopy(W, f, *zero_map);
    if (!chk.ok)
      throw Error("composite null homotopy failed verification: " + chk.failures.front());
    out.status = NullhomotopyOutcome::Status::nullhomotopic;
    out.witness = std::move(W);
    out.reason = "verified null homotopy through the factorization";
    return out;
  }

  out.log.push_back("the factorization is not exact; deciding directly against the zero map");
  HomotopyDecision dec = decide_homotopic(f, *zero_map, source_coh, target_coh);
  switch (dec.status) {
    case HomotopyDecision::Status::homotopic:
      out.status = NullhomotopyOutcome::Status::nullhomotopic;
      out.witness = std::move(dec.witness);
      out.reason = "verified null homotopy (direct construction)";
      break;
    case HomotopyDecision::Status::not_homotopic:
      out.status = NullhomotopyOutcome::Status::refused;
      out.reason = "provably not null homotopic: " + dec.detail;
      break;
    default:
      out.status = NullhomotopyOutcome::Status::inconclusive;
      out.reason = dec.detail;
      break;
  }
  return out;
}

/* ================= affiliated witnesses ================= */

MapPtr project_to_left(const AffiliatedWitness& w, ModelPtr left) {
  const Algebra& T = w.tensor->alg();
  if (!left || left->alg().size() != w.split)
    throw InputError("projection target does not match the tensor's left factor");
  std::vector<Polynomial> imgs(T.size());
  for (std::uint32_t i = 0; i < w.split; ++i) imgs[i] = Polynomial::generator(left->alg(), i);
  for (std::uint32_t i = w.split; i < T.size(); ++i) imgs[i] = Polynomial::zero(left->alg());
  return ModelMap::make("onto_" + left->name(), w.tensor, left, std::move(imgs));
}

MapPtr project_to_right(const AffiliatedWitness& w, ModelPtr right) {
  const Algebra& T = w.tensor->alg();
  if (!right || right->alg().size() != T.size() - w.split)
    throw InputError("projection target does not match the tensor's right factor");
  std::vector<Polynomial> imgs(T.size());
  for (std::uint32_t i = 0; i < w.split; ++i) imgs[i] = Polynomial::zero(right->alg());
  for (std::uint32_t i = w.split; i < T.size(); ++i)
    imgs[i] = Polynomial::generator(right->alg(), i - w.split);
  return ModelMap::make("onto_" + right->name(), w.tensor, right, std::move(imgs));
}

namespace {

bool maps_equal(const ModelMap& a, const ModelMap& b) {
  if (a.source()->alg().id() != b.source()->alg().id() ||
      a.target()->alg().id() != b.target()->alg().id())
    return false;
  for (std::uint32_t i = 0; i < a.source()->alg().size(); ++i)
    if (!(a.image_of(i) == b.image_of(i))) return false;
  return true;
}

}  // namespace

WitnessCheck check_affiliated(const AffiliatedWitness& w, const ModelMap& f,
                              Cohomology& source_coh, Cohomology& target_coh) {
  WitnessCheck out;
  if (!w.F || !w.tensor) throw InputError("empty witness");
  const Algebra& T = w.tensor->alg();
  const Algebra& A = f.target()->alg();
  const Algebra& X = f.source()->alg();
  if (w.split != A.size() || T.size() != A.size() + X.size()) {
    out.notes.push_back("tensor shape does not match target ⊗ source of " + f.name());
    return out;
  }
  for (std::uint32_t i = 0; i < w.split; ++i)
    if (T.gen(i).degree != A.gen(i).degree) {
      out.notes.push_back("tensor left factor degrees disagree with " + f.target()->name());
      return out;
    }
  for (std::uint32_t i = w.split; i < T.size(); ++i)
    if (T.gen(i).degree != X.gen(i - w.split).degree) {
      out.notes.push_back("tensor right factor degrees disagree with " + f.source()->name());
      return out;
    }
  if (w.F->source()->alg().id() != X.id() || w.F->target()->alg().id() != T.id()) {
    out.notes.push_back("witness map does not go from the source model into the tensor");
    return out;
  }
  if (!w.F->check_dg().ok) {
    out.notes.push_back("witness map is not a dg morphism");
    return out;
  }

  MapPtr to_x = compose(*project_to_right(w, f.source()), *w.F);
  MapPtr idx = ModelMap::identity(f.source());
  if (maps_equal(*to_x, *idx)) {
    out.notes.push_back("restriction to the source factor is the identity on the nose");
  } else {
    HomotopyDecision d = decide_homotopic(*to_x, *idx, source_coh, source_coh);
    if (d.status != HomotopyDecision::Status::homotopic) {
      out.notes.push_back("restriction to the source factor is not homotopic to the identity: " +
                          d.detail);
      return out;
    }
    out.notes.push_back("restriction to the source factor homotopic to the identity (witness "
                        "constructed)");
  }

  MapPtr to_a = compose(*project_to_left(w, f.target()), *w.F);
  if (maps_equal(*to_a, f)) {
    out.notes.push_back("restriction to the target factor equals " + f.name() + " on the nose");
  } else {
    HomotopyDecision d = decide_homotopic(*to_a, f, source_coh, target_coh);
    if (d.status != HomotopyDecision::Status::homotopic) {
      out.notes.push_back("restriction to the target factor is not homotopic to " + f.name() +
                          ": " + d.detail);
      return out;
    }
    out.notes.push_back("restriction to the target factor homotopic to " + f.name() +
                        " (witness constructed)");
  }
  out.ok = true;
  return out;
}

AffiliatedWitness witness_transport(const AffiliatedWitness& w, const ModelMap& f,
                                    const ModelMap& theta, Cohomology& source_coh,
                                    Cohomology& theta_target_coh) {
  if (theta.source()->alg().id() != f.target()->alg().id())
    throw InputError("witness transport needs theta to start at the target of " + f.name());
  ModelPtr tensor_b = tensor_model(*theta.target(), *f.source(),
                                   theta.target()->name() + "_x_" + f.source()->name());
  std::uint32_t split_b = static_cast<std::uint32_t>(theta.target()->alg().size());
  const Algebra& T = w.tensor->alg();
  std::vector<Polynomial> imgs(T.size());
  for (std::uint32_t i = 0; i < w.split; ++i)
    imgs[i] = theta.image_of(i).retagged(tensor_b->alg().id());
  for (std::uint32_t i = w.split; i < T.size(); ++i)
    imgs[i] = Polynomial::generator(tensor_b->alg(), split_b + (i - w.split));
  MapPtr theta_tensor = ModelMap::make(theta.name() + "_x_id", w.tensor, tensor_b,
                                       std::move(imgs));
  AffiliatedWitness out;
  out.F = compose(*theta_tensor, *w.F);
  out.tensor = tensor_b;
  out.split = split_b;
  MapPtr pushed = compose(theta, f);
  WitnessCheck chk = check_affiliated(out, *pushed, source_coh, theta_target_coh);
  if (!chk.ok)
    throw Error("transported witness failed verification: " +
                (chk.notes.empty() ? std::string("(no details)") : chk.notes.back()));
  return out;
}

/* ================= necessary-condition battery ================= */

BatteryReport cyclic_battery(const ModelMap& f, Cohomology& source_coh,
                             Cohomology& target_coh, std::optional<int> cat0_override) {
  if (!f.check_dg().ok) throw InputError("the battery needs a dg morphism");
  BatteryReport rep;
  const Model& X = *f.source();
  const Model& Amod = *f.target();
  std::optional<int> cat = cat0_override ? cat0_override : X.cat0();
  int max_deg = X.max_gen_degree();
  int shared_bound = std::min(X.bound(), Amod.bound());
  if (X.partial())
    rep.notes.push_back("the target space's generator list is partial: every verdict is "
                        "within the listed range only");

  auto add = [&](std::string name, BatteryCondition::Outcome o, std::string detail) {
    rep.conditions.push_back({std::move(name), o, std::move(detail)});
    if (o == BatteryCondition::Outcome::fail) rep.not_cyclic = true;
  };
  using O = BatteryCondition::Outcome;

  /* 1: a finite category bound kills even Gottlieb groups, so a cyclic map has
   * no even-degree linear part. */
  if (!cat) {
    add("even-linear-vanishing", O::not_applicable, "needs a category bound");
  } else {
    int bad = 0;
    for (int n = 2; n <= max_deg; n += 2)
      if (rank(induced_Q(f, n)) > 0 && bad == 0) bad = n;
    add("even-linear-vanishing", bad ? O::fail : O::pass,
        bad ? "linear part is nonzero in even degree " + std::to_string(bad)
            : "linear part vanishes in all even degrees");
  }

  /* 2: the total linear rank of a cyclic map is at most the category. */
  if (!cat) {
    add("total-linear-rank-bound", O::not_applicable, "needs a category bound");
  } else {
    int total = 0;
    for (int n = 2; n <= max_deg; ++n) total += static_cast<int>(rank(induced_Q(f, n)));
    add("total-linear-rank-bound", total > *cat ? O::fail : O::pass,
        "total linear rank " + std::to_string(total) + (total > *cat ? " exceeds " : " <= ") +
            "category bound " + std::to_string(*cat));
  }

  /* 3: in each odd degree the linear rank is bounded by the Gottlieb rank of
   * the target space. */
  if (X.partial()) {
    add("odd-gottlieb-rank-bound", O::not_applicable,
        "partial generator list: Gottlieb ranks are not certified");
  } else {
    std::string bad;
    for (int n = 3; n <= max_deg; n += 2) {
      if (X.gens_in_degree(n).empty()) continue;
      int q = static_cast<int>(rank(induced_Q(f, n)));
      if (q == 0) continue;
      GottliebResult gr = gottlieb_rank(X, n, cat0_override);
      if (gr.kind == GottliebResult::Kind::computed && q > gr.rank) {
        bad = "degree " + std::to_string(n) + ": linear rank " + std::to_string(q) +
              " exceeds Gottlieb rank " + std::to_string(gr.rank);
        break;
      }
    }
    add("odd-gottlieb-rank-bound", bad.empty() ? O::pass : O::fail,
        bad.empty() ? "linear ranks within Gottlieb ranks in all odd degrees" : bad);
  }

  /* 4: cyclic maps kill Whitehead products, so the linear part lands in the
   * spherical subspace of the mapping space's generators. */
  if (!Amod.is_minimal()) {
    add("whitehead-kernel-vanishing", O::not_applicable,
        "the source space's model is not minimal, so its spherical subspace is undefined");
  } else {
    std::string bad;
    for (int n = 2; n <= max_deg && bad.empty(); ++n) {
      if (X.gens_in_degree(n).empty() || Amod.gens_in_degree(n).empty()) continue;
      QMatrix Q = induced_Q(f, n);
      if (Q.is_zero()) continue;
      QMatrix Z = target_coh.zeta_matrix(n);
      std::vector<QVector> span;
      for (std::size_t j = 0; j < Z.cols(); ++j) span.push_back(Z.column(j));
      for (std::size_t j = 0; j < Q.cols(); ++j)
        if (!member(span, Q.column(j))) {
          bad = "degree " + std::to_string(n) +
                ": the linear image leaves the spherical subspace";
          break;
        }
    }
    add("whitehead-kernel-vanishing", bad.empty() ? O::pass : O::fail,
        bad.empty() ? "linear images stay inside spherical subspaces" : bad);
  }

  /* 5: with a finite category bound, even-degree classes pull back to
   * products of positive classes. */
  if (!cat) {
    add("even-class-decomposability", O::not_applicable, "needs a category bound");
  } else {
    std::string bad;
    for (int n = 2; n <= shared_bound && bad.empty(); n += 2) {
      if (source_coh.betti(n) == 0) continue;
      QMatrix M = induced_H(f, source_coh, target_coh, n);
      if (M.is_zero()) continue;
      auto dec = target_coh.decomposables_in(n);
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!member(dec, M.column(j))) {
          bad = "degree " + std::to_string(n) +
                ": a pulled-back class is not a product of positive classes";
          break;
        }
    }
    add("even-class-decomposability", bad.empty() ? O::pass : O::fail,
        bad.empty() ? "even-degree images are decomposable" : bad);
  }

  /* 6: nonzero Euler characteristic kills every Gottlieb group, so a cyclic
   * map composes to zero with the spherical classes. Without that certificate
   * a nonzero composite calls for a splitting investigation, not a verdict. */
  if (!X.is_minimal()) {
    add("euler-spherical-vanishing", O::not_applicable,
        "the target space's model is not minimal");
  } else {
    ModelInvariants inv = invariants(source_coh);
    int bad_deg = 0;
    for (int n = 2; n <= shared_bound && bad_deg == 0; ++n) {
      if (X.gens_in_degree(n).empty()) continue;
      if (!spherical_matrix(f, source_coh, n).is_zero()) bad_deg = n;
    }
    if (bad_deg == 0) {
      add("euler-spherical-vanishing", O::pass,
          "the composite with the spherical classes vanishes in all degrees");
    } else if (inv.euler && *inv.euler != 0) {
      add("euler-spherical-vanishing", O::fail,
          "Euler characteristic " + std::to_string(*inv.euler) +
              " is nonzero but the spherical composite is nonzero in degree " +
              std::to_string(bad_deg));
    } else {
      add("euler-spherical-vanishing", O::split_required,
          "spherical composite nonzero in degree " + std::to_string(bad_deg) +
              " and the Euler characteristic is " +
              (inv.euler ? "zero" : "not certified") +
              ": check whether the target space splits off a sphere there");
    }
  }
  return rep;
}

/* ================= splitting check ================= */

SplitOutcome split_check(const ModelPtr& m, const Polynomial& u) {
  SplitOutcome out;
  if (!m) throw InputError("splitting check needs a model");
  const Algebra& A = m->alg();
  if (u.algebra_id() != 0 && u.algebra_id() != A.id())
    throw InputError("the candidate cocycle lives in a different algebra");
  auto deg = u.degree();
  if (!deg) throw InputError("the candidate must be a nonzero homogeneous cocycle");
  if (!m->is_cocycle(u)) throw InputError("the candidate is not a cocycle");
  Polynomial lin = u.linear_part();
  if (lin.is_zero())
    throw InputError("the candidate has no linear part, so it cannot replace a generator");

  std::uint32_t pivot = 0;
  Rational up(0);
  bool found = false;
  for (auto g : A.canonical_order()) {
    if (A.gen(g).degree != *deg) continue;
    Rational c = lin.coefficient(Monomial::single(g, *deg));
    if (c != 0) {
      pivot = g;
      up = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error("nonzero linear part without a pivot generator");

  std::vector<Generator> gens = A.generators();
  std::string wname = gens[pivot].name + "_new";
  while (std::any_of(gens.begin(), gens.end(),
                     [&](const Generator& h) { return h.name == wname; }))
    wname += "'";
  gens[pivot].name = wname;
  AlgebraPtr A2 = Algebra::make(std::move(gens), A.bound());

  /* rewrite: the pivot becomes (w - rest)/u_p; nothing else moves. Higher
   * words of u have factors of lower degree, so they never mention the pivot
   * and the substitution closes in one step. */
  std::vector<Polynomial> psi(A.size());
  for (std::uint32_t i = 0; i < A.size(); ++i)
    if (i != pivot) psi[i] = Polynomial::generator(*A2, i);
  Polynomial rest = u - Polynomial::monomial(A, Monomial::single(pivot, *deg), up);
  if (rest.linear_part().coefficient(Monomial::single(pivot, *deg)) != 0 ||
      [&] {
        for (const auto& [mo, c] : rest.terms())
          if (mo.contains(pivot)) return true;
        return false;
      }())
    throw Error("pivot reappears in the remainder of the candidate");
  psi[pivot] = Polynomial::zero(*A2);
  Polynomial mapped_rest = substitute(rest, psi, A2->id());
  psi[pivot] = (Polynomial::generator(*A2, pivot) - mapped_rest).scaled(Rational(1) / up);

  std::vector<Polynomial> d2(A.size());
  for (std::uint32_t i = 0; i < A.size(); ++i)
    d2[i] = i == pivot ? Polynomial::zero(*A2) : substitute(m->d_of(i), psi, A2->id());
  ModelAttrs attrs;
  attrs.cat0 = m->cat0();
  attrs.top = m->top();
  attrs.partial = m->partial();
  out.rebased = Model::make(m->name() + "_rebased", A2, std::move(d2), attrs);

  bool mentioned = false;
  for (std::uint32_t i = 0; i < A.size() && !mentioned; ++i) {
    if (i == pivot) continue;
    for (const auto& [mo, c] : out.rebased->d_of(i).terms())
      if (mo.contains(pivot)) {
        mentioned = true;
        break;
      }
  }
  out.split = !mentioned;
  out.detail = out.split
                   ? "the cocycle generates a free factor: no differential mentions " + wname
                   : "differentials still mention " + wname +
                         " after rebasing; this check cannot split it off";
  return out;
}

/* ================= classification ================= */

CyclicClassification classify_cyclic(Cohomology& x_coh, Cohomology& a_coh) {
  const ModelPtr& X = x_coh.model_ptr();
  const ModelPtr& A = a_coh.model_ptr();
  const Algebra& XA = X->alg();

  auto rep_name = [&](std::size_t i) {
    return X->name() + "_to_" + A->name() + "_rep" + std::to_string(i);
  };

  auto make_witness = [&](const MapPtr& rep, const ModelPtr& tensor,
                          const std::vector<Polynomial>& f_images) {
    AffiliatedWitness w;
    w.tensor = tensor;
    w.split = static_cast<std::uint32_t>(A->alg().size());
    w.F = ModelMap::make("wit_" + rep->name(), X, w.tensor, f_images);
    WitnessCheck chk = check_affiliated(w, *rep, x_coh, a_coh);
    if (!chk.ok)
      throw Error("classification witness failed verification: " +
                  (chk.notes.empty() ? std::string("(no details)") : chk.notes.back()));
    return w;
  };

  /* class (i): Λ(x, y; dy = x^{k+1}), coefficient exactly one. */
  if (XA.size() == 2 && !XA.is_odd(0) && XA.is_odd(1) && X->d_of(0).is_zero()) {
    int xd = XA.gen(0).degree, yd = XA.gen(1).degree;
    if ((yd + 1) % xd == 0) {
      std::uint32_t kp1 = static_cast<std::uint32_t>((yd + 1) / xd);
      Monomial xk = Monomial::single(0, xd, kp1);
      const Polynomial& dy = X->d_of(1);
      if (kp1 >= 2 && dy.term_count() == 1 && dy.coefficient(xk) == 1) {
        CyclicClassification out;
        out.kind = CyclicClassification::Kind::truncated_type;
        out.dimension = a_coh.betti(yd);
        out.notes.push_back("classes of cyclic maps correspond to H^" + std::to_string(yd) +
                            " of " + A->name() + " (dimension " +
                            std::to_string(out.dimension) + ")");
        auto reps = a_coh.representatives(yd);
        for (std::size_t i = 0; i < reps.size(); ++i) {
          std::vector<Polynomial> imgs = {Polynomial::zero(A->alg()), reps[i]};
          MapPtr r = ModelMap::make(rep_name(i), X, A, imgs);
          std::uint32_t split = static_cast<std::uint32_t>(A->alg().size());
          ModelPtr T = tensor_model(*A, *X, A->name() + "_x_" + X->name());
          std::vector<Polynomial> fi = {
              Polynomial::generator(T->alg(), split + 0),
              Polynomial::generator(T->alg(), split + 1) + reps[i].retagged(T->alg().id())};
          out.witnesses.push_back(make_witness(r, T, fi));
          out.representatives.push_back(std::move(r));
        }
        /* distinctness: every pair, and every representative against zero */
        std::vector<MapPtr> all = out.representatives;
        std::vector<Polynomial> zimgs(XA.size());
        zimgs[0] = Polynomial::zero(A->alg());
        zimgs[1] = Polynomial::zero(A->alg());
        all.push_back(ModelMap::make("zero", X, A, zimgs));
        for (std::size_t i = 0; i < all.size(); ++i)
          for (std::size_t j = i + 1; j < all.size(); ++j) {
            HomotopyDecision d = decide_homotopic(*all[i], *all[j], x_coh, a_coh);
            if (d.status != HomotopyDecision::Status::not_homotopic)
              throw Error("representatives " + all[i]->name() + " and " + all[j]->name() +
                          " were not certified distinct");
          }
        if (out.dimension > 0)
          out.notes.push_back("basis representatives pairwise non-homotopic (and nontrivial), "
                              "certified by rigid obstructions");
        return out;
      }
    }
  }

  /* class (ii): pure, even generators all in degree 2, certified finite even
   * cohomology. */
  bool evens_deg2 = true;
  for (std::uint32_t i = 0; i < XA.size(); ++i)
    if (!XA.is_odd(i) && XA.gen(i).degree != 2) evens_deg2 = false;
  if (X->is_pure_format() && evens_deg2 && XA.size() > 0) {
    ModelInvariants inv = invariants(x_coh);
    if (inv.f0 != Verdict::yes)
      throw InputError("classification of maps into " + X->name() +
                       " needs certified finite, evenly-graded cohomology; got finite=" +
                       to_string(inv.finite) + ", f0=" + to_string(inv.f0));
    CyclicClassification out;
    out.kind = CyclicClassification::Kind::pure_even_two_type;
    std::vector<std::uint32_t> odds;
    for (std::uint32_t i = 0; i < XA.size(); ++i)
      if (XA.is_odd(i)) odds.push_back(i);
    int dim = 0;
    for (auto y : odds) dim += a_coh.betti(XA.gen(y).degree);
    out.dimension = dim;
    out.notes.push_back("classes of cyclic maps correspond to the direct sum of H^{|y|} of " +
                        A->name() + " over the odd generators y (dimension " +
                        std::to_string(dim) + ")");
    std::size_t idx = 0;
    for (auto y : odds) {
      for (const auto& beta : a_coh.representatives(XA.gen(y).degree)) {
        std::vector<Polynomial> imgs(XA.size(), Polynomial::zero(A->alg()));
        imgs[y] = beta;
        MapPtr r = ModelMap::make(rep_name(idx++), X, A, imgs);
        std::uint32_t split = static_cast<std::uint32_t>(A->alg().size());
        ModelPtr T = tensor_model(*A, *X, A->name() + "_x_" + X->name());
        std::vector<Polynomial> fi(XA.size());
        for (std::uint32_t i = 0; i < XA.size(); ++i)
          fi[i] = Polynomial::generator(T->alg(), split + i);
        fi[y] = fi[y] + beta.retagged(T->alg().id());
        out.witnesses.push_back(make_witness(r, T, fi));
        out.representatives.push_back(std::move(r));
      }
    }
    std::vector<MapPtr> all = out.representatives;
    all.push_back(ModelMap::make("zero", X, A,
                                 std::vector<Polynomial>(XA.size(), Polynomial::zero(A->alg()))));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        HomotopyDecision d = decide_homotopic(*all[i], *all[j], x_coh, a_coh);
        if (d.status != HomotopyDecision::Status::not_homotopic)
          throw Error("representatives " + all[i]->name() + " and " + all[j]->name() +
                      " were not certified distinct");
      }
    if (out.dimension > 0)
      out.notes.push_back("basis representatives pairwise non-homotopic (and nontrivial), "
                          "certified by rigid obstructions");
    return out;
  }

  throw InputError("classification supports Λ(x, y; d y = x^{k+1}) with unit coefficient and "
                   "pure models whose even part sits in degree 2; " + X->name() +
                   " matches neither shape");
}

}  // namespace rht
