#include "rht/cohomology.hpp"

#include <algorithm>

#include "rht/errors.hpp"

namespace rht {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

Cohomology::Cohomology(ModelPtr m) : model_(std::move(m)) {
  if (!model_) throw InputError("cohomology needs a model");
}

const DegreeData& Cohomology::degree_data(int n) {
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  if (n > model_->bound())
    throw RangeError("cohomology in degree " + std::to_string(n) +
                     " exceeds the model bound " + std::to_string(model_->bound()));
  DegreeData dd;
  dd.degree = n;
  if (n >= 0) {
    const Algebra& A = model_->alg();
    dd.monos = basis(A, n);
    /* d into degree n+1 may land past the bound; coordinates there use only
     * the monomials that actually appear, so no basis(n+1) is needed. */
    std::vector<Polynomial> images;
    images.reserve(dd.monos.size());
    for (const auto& m : dd.monos)
      images.push_back(model_->d(Polynomial::monomial(A, m, Rational(1))));
    std::map<Monomial, std::size_t> target_rows;
    for (const auto& img : images)
      for (const auto& [mm, c] : img.terms()) target_rows.try_emplace(mm, target_rows.size());
    QMatrix D(target_rows.size(), dd.monos.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& [mm, coeff] : images[c].terms()) D.at(target_rows[mm], c) = coeff;
    dd.cocycles = kernel_basis(D);
    if (n >= 1) {
      std::vector<QVector> img_cols;
      for (const auto& m : basis(A, n - 1)) {
        Polynomial p = model_->d(Polynomial::monomial(A, m, Rational(1)));
        if (!p.is_zero()) img_cols.push_back(coordinates(A, p, dd.monos));
      }
      for (auto idx : independent_subset(img_cols)) dd.coboundaries.push_back(img_cols[idx]);
    }
    std::vector<QVector> span = dd.coboundaries;
    for (const auto& kv : dd.cocycles)
      if (!member(span, kv)) {
        span.push_back(kv);
        dd.reps.push_back(kv);
      }
  }
  return cache_.emplace(n, std::move(dd)).first->second;
}

int Cohomology::betti(int n) {
  if (n < 0) return 0;
  return static_cast<int>(degree_data(n).reps.size());
}

std::vector<int> Cohomology::betti_through(int n) {
  std::vector<int> out;
  for (int i = 0; i <= n; ++i) out.push_back(betti(i));
  return out;
}

std::vector<Polynomial> Cohomology::representatives(int n) {
  const DegreeData& dd = degree_data(n);
  const Algebra& A = model_->alg();
  std::vector<Polynomial> out;
  for (const auto& v : dd.reps) {
    Polynomial p = Polynomial::zero(A);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) p.add_term(dd.monos[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

QVector Cohomology::class_coords(const Polynomial& p) {
  auto deg = p.degree();
  if (!deg) throw InputError("class coordinates need a nonzero homogeneous polynomial");
  Polynomial dp = model_->d(p);
  if (!dp.is_zero())
    throw InputError("not a cocycle: d gives " + to_string(model_->alg(), dp));
  const DegreeData& dd = degree_data(*deg);
  QVector v = coordinates(model_->alg(), p, dd.monos);
  std::vector<QVector> full = dd.coboundaries;
  full.insert(full.end(), dd.reps.begin(), dd.reps.end());
  auto coords = coordinates_in(full, v);
  if (!coords) throw Error("cocycle fell outside the kernel span");  // unreachable
  return QVector(coords->end() - static_cast<std::ptrdiff_t>(dd.reps.size()), coords->end());
}

bool Cohomology::is_coboundary(const Polynomial& p) {
  if (p.is_zero()) return true;
  return is_zero_vector(class_coords(p));
}

std::optional<Polynomial> Cohomology::primitive(const Polynomial& p) {
  const Algebra& A = model_->alg();
  if (p.is_zero()) return Polynomial::zero(A);
  auto deg = p.degree();
  if (!deg) throw InputError("primitive needs a homogeneous polynomial");
  int n = *deg - 1;
  if (n < 0) return std::nullopt;
  if (n > model_->bound())
    throw RangeError("primitive would live in degree " + std::to_string(n) +
                     ", past the model bound");
  auto monos = basis(A, n);
  std::vector<Polynomial> images;
  images.reserve(monos.size());
  for (const auto& m : monos) images.push_back(model_->d(Polynomial::monomial(A, m, Rational(1))));
  std::map<Monomial, std::size_t> rows;
  for (const auto& img : images)
    for (const auto& [mm, c] : img.terms()) rows.try_emplace(mm, rows.size());
  for (const auto& [mm, c] : p.terms()) rows.try_emplace(mm, rows.size());
  QMatrix D(rows.size(), monos.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [mm, coeff] : images[c].terms()) D.at(rows[mm], c) = coeff;
  QVector b(rows.size(), Rational(0));
  for (const auto& [mm, coeff] : p.terms()) b[rows[mm]] = coeff;
  auto x = solve(D, b);
  if (!x) return std::nullopt;
  Polynomial u = Polynomial::zero(A);
  for (std::size_t c = 0; c < monos.size(); ++c)
    if ((*x)[c] != 0) u.add_term(monos[c], (*x)[c]);
  return u;
}

std::vector<QVector> Cohomology::decomposables_in(int n) {
  degree_data(n);
  std::vector<QVector> prods;
  for (int a = 2; a <= n - a; ++a) {
    auto left = representatives(a);
    auto right = representatives(n - a);
    for (const auto& r1 : left)
      for (const auto& r2 : right) {
        Polynomial q = r1 * r2;
        if (!q.is_zero()) prods.push_back(class_coords(q));
      }
  }
  std::vector<QVector> out;
  for (auto idx : independent_subset(prods)) out.push_back(prods[idx]);
  return out;
}

bool Cohomology::class_in_decomposables(const Polynomial& p) {
  auto deg = p.degree();
  if (!deg) throw InputError("decomposability test needs a nonzero homogeneous cocycle");
  return member(decomposables_in(*deg), class_coords(p));
}

int Cohomology::cup_length(int through_degree) {
  int through = std::min(through_degree, model_->bound());
  std::map<int, std::vector<Polynomial>> level;
  for (int d = 1; d <= through; ++d) {
    auto reps = representatives(d);
    if (!reps.empty()) level[d] = std::move(reps);
  }
  if (level.empty()) return 0;
  int len = 1;
  while (true) {
    std::map<int, std::vector<Polynomial>> next;
    std::map<int, std::vector<QVector>> seen;
    for (const auto& [dp, polys] : level)
      for (const auto& p : polys)
        for (int dr = 2; dp + dr <= through; ++dr)
          for (const auto& r : representatives(dr)) {
            Polynomial q = p * r;
            if (q.is_zero()) continue;
            QVector cc = class_coords(q);
            if (is_zero_vector(cc)) continue;
            auto& bucket = seen[dp + dr];
            if (member(bucket, cc)) continue;
            bucket.push_back(cc);
            next[dp + dr].push_back(q);
          }
    if (next.empty()) return len;
    level = std::move(next);
    ++len;
  }
}

QMatrix Cohomology::zeta_matrix(int n) {
  if (!model_->is_minimal())
    throw InputError("the linear-part map is only defined for minimal models");
  auto gens = model_->gens_in_degree(n);
  auto reps = representatives(n);
  QMatrix Z(gens.size(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    Polynomial lin = reps[j].linear_part();
    for (std::size_t i = 0; i < gens.size(); ++i)
      Z.at(i, j) = lin.coefficient(Monomial::single(gens[i], n));
  }
  return Z;
}

int Cohomology::spherical_dim(int n) { return static_cast<int>(rank(zeta_matrix(n))); }

ModelInvariants invariants(Cohomology& coh) {
  const Model& M = coh.model();
  int B = M.bound();
  ModelInvariants inv;
  inv.betti = coh.betti_through(B);

  bool pure = M.is_pure_format();
  if (pure) {
    long fd = 0;
    for (const auto& g : M.alg().generators())
      fd += g.degree % 2 != 0 ? g.degree : -(g.degree - 1);
    if (fd < 0) fd = 0;
    inv.formal_dim = static_cast<int>(fd);
  }

  bool has_even = false;
  for (const auto& g : M.alg().generators())
    if (g.degree % 2 == 0) has_even = true;

  if (M.has_zero_differential() && has_even) {
    inv.finite = Verdict::no;
    inv.notes.push_back("a closed even generator carries a free polynomial algebra");
  } else if (pure && inv.formal_dim && *inv.formal_dim <= B) {
    bool vanish = true;
    int first_bad = -1;
    for (int i = *inv.formal_dim + 1; i <= B; ++i)
      if (inv.betti[static_cast<std::size_t>(i)] != 0) {
        vanish = false;
        first_bad = i;
        break;
      }
    if (vanish) {
      inv.finite = Verdict::yes;
      long e = 0;
      for (int i = 0; i <= *inv.formal_dim; ++i)
        e += (i % 2 == 0 ? 1 : -1) * inv.betti[static_cast<std::size_t>(i)];
      inv.euler = e;
      inv.notes.push_back("finite: pure model with formal dimension " +
                          std::to_string(*inv.formal_dim) +
                          " and verified vanishing up to the bound");
    } else {
      inv.notes.push_back("pure formal dimension " + std::to_string(*inv.formal_dim) +
                          " contradicted by nonzero cohomology in degree " +
                          std::to_string(first_bad));
    }
  } else {
    inv.notes.push_back("no finiteness certificate within the bound");
  }

  if (inv.finite == Verdict::yes) {
    bool odd_h = false;
    for (int i = 1; i <= *inv.formal_dim; i += 2)
      if (inv.betti[static_cast<std::size_t>(i)] != 0) odd_h = true;
    inv.f0 = (!odd_h && inv.euler && *inv.euler > 0) ? Verdict::yes : Verdict::no;
  } else if (inv.finite == Verdict::no) {
    inv.f0 = Verdict::no;
  }

  int through = inv.finite == Verdict::yes ? std::min(B, *inv.formal_dim) : B;
  inv.cup_length = coh.cup_length(through);

  if (M.is_minimal()) {
    for (int i = 0; i <= B; ++i) inv.spherical.push_back(coh.spherical_dim(i));
  } else {
    inv.notes.push_back("spherical dimensions skipped: model is not minimal");
  }
  return inv;
}

}  // namespace rht
