#include "rht/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>

#include "rht/errors.hpp"

namespace rht {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

}  // namespace

Algebra::Algebra(std::vector<Generator> gens, int bound, bool allow_low)
    : id_(next_algebra_id++), gens_(std::move(gens)), bound_(bound) {
  if (bound_ < 0) throw InputError("exactness bound must be nonnegative");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!valid_name(g.name)) throw InputError("bad generator name: '" + g.name + "'");
    if (!seen.insert(g.name).second) throw InputError("duplicate generator name: " + g.name);
    int min_deg = allow_low ? 0 : 2;
    if (g.degree < min_deg)
      throw InputError("generator " + g.name + " has degree " + std::to_string(g.degree) +
                       (allow_low ? "; must be >= 0" : "; simply connected models need degree >= 2"));
  }
  canon_.resize(gens_.size());
  for (std::uint32_t i = 0; i < gens_.size(); ++i) canon_[i] = i;
  std::stable_sort(canon_.begin(), canon_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::pair(gens_[a].degree, a) < std::pair(gens_[b].degree, b);
  });
}

AlgebraPtr Algebra::make(std::vector<Generator> gens, int bound) {
  return AlgebraPtr(new Algebra(std::move(gens), bound, false));
}

AlgebraPtr Algebra::make_any(std::vector<Generator> gens, int bound) {
  return AlgebraPtr(new Algebra(std::move(gens), bound, true));
}

std::optional<std::uint32_t> Algebra::find(const std::string& name) const {
  for (std::uint32_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

bool Algebra::same_generators(const Algebra& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree)
      return false;
  return true;
}

Monomial Monomial::single(std::uint32_t gen, int degree, std::uint32_t exp) {
  if (exp == 0) return Monomial();
  if (degree % 2 != 0 && exp > 1) throw InputError("odd generator raised past exponent 1");
  Monomial m;
  m.factors_.push_back(Factor{gen, degree, exp});
  return m;
}

Monomial Monomial::from_sorted(std::vector<Factor> factors) {
  Monomial m;
  m.factors_ = std::move(factors);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.degree * static_cast<int>(f.exp);
  return d;
}

std::uint32_t Monomial::word_length() const {
  std::uint32_t n = 0;
  for (const auto& f : factors_) n += f.exp;
  return n;
}

bool Monomial::contains(std::uint32_t gen) const {
  for (const auto& f : factors_)
    if (f.gen == gen) return true;
  return false;
}

bool Monomial::operator<(const Monomial& other) const {
  int da = degree(), db = other.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(
      factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
      [](const Factor& a, const Factor& b) {
        return std::tuple(a.degree, a.gen, a.exp) < std::tuple(b.degree, b.gen, b.exp);
      });
}

SignedMonomial mono_mul(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Factor> out;
  out.reserve(fa.size() + fb.size());
  int sign = 1;
  int odd_left = 0;  // odd factors of `a` not yet emitted
  for (const auto& f : fa)
    if (f.odd()) ++odd_left;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    bool take_a;
    if (i >= fa.size())
      take_a = false;
    else if (j >= fb.size())
      take_a = true;
    else if (fa[i].key() < fb[j].key())
      take_a = true;
    else if (fb[j].key() < fa[i].key())
      take_a = false;
    else {
      if (fa[i].odd()) return {0, Monomial()};  // odd square
      Factor merged = fa[i];
      merged.exp += fb[j].exp;
      out.push_back(merged);
      ++i, ++j;
      continue;
    }
    if (take_a) {
      if (fa[i].odd()) --odd_left;
      out.push_back(fa[i++]);
    } else {
      /* a factor of b hops over everything of `a` still pending */
      if (fb[j].odd() && odd_left % 2 != 0) sign = -sign;
      out.push_back(fb[j++]);
    }
  }
  return {sign, Monomial::from_sorted(std::move(out))};
}

SignedMonomial normalize_word(const Algebra& alg, const std::vector<std::uint32_t>& word) {
  std::vector<Factor> fs;
  fs.reserve(word.size());
  for (auto g : word) {
    if (g >= alg.size()) throw InputError("unknown generator index in word");
    fs.push_back(Factor{g, alg.gen(g).degree, 1});
  }
  int sign = 1;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[i].gen == fs[j].gen && fs[i].odd()) return {0, Monomial()};
      if (fs[j].key() < fs[i].key() && fs[i].odd() && fs[j].odd()) sign = -sign;
    }
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.key() < b.key(); });
  std::vector<Factor> merged;
  for (const auto& f : fs) {
    if (!merged.empty() && merged.back().gen == f.gen)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  return {sign, Monomial::from_sorted(std::move(merged))};
}

Polynomial Polynomial::zero(const Algebra& alg) {
  Polynomial p;
  p.alg_ = alg.id();
  return p;
}

Polynomial Polynomial::constant(const Algebra& alg, const Rational& c) {
  Polynomial p = zero(alg);
  p.add_term(Monomial::unit(), c);
  return p;
}

Polynomial Polynomial::generator(const Algebra& alg, std::uint32_t gen) {
  if (gen >= alg.size()) throw InputError("unknown generator index");
  Polynomial p = zero(alg);
  p.add_term(Monomial::single(gen, alg.gen(gen).degree), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Algebra& alg, const Monomial& m, const Rational& c) {
  Polynomial p = zero(alg);
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Polynomial::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = m.degree();
    if (!d)
      d = dm;
    else if (*d != dm)
      return std::nullopt;
  }
  return d;
}

bool Polynomial::is_homogeneous(int n) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != n) return false;
  return true;
}

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::meld(std::uint64_t other) {
  if (other == 0) return;
  if (alg_ == 0) {
    alg_ = other;
    return;
  }
  if (alg_ != other) throw InputError("mixed algebras in polynomial arithmetic");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out.meld(other.alg_);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  out.alg_ = alg_;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  out.alg_ = alg_;
  out.meld(other.alg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      SignedMonomial sm = mono_mul(ma, mb);
      if (sm.sign != 0) out.add_term(sm.mono, ca * cb * sm.sign);
    }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial out;
  out.alg_ = alg_;
  out.add_term(Monomial::unit(), Rational(1));
  for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  if (alg_ != 0 && other.alg_ != 0 && alg_ != other.alg_) return false;
  return terms_ == other.terms_;
}

Polynomial Polynomial::linear_part() const {
  Polynomial out;
  out.alg_ = alg_;
  for (const auto& [m, c] : terms_)
    if (m.word_length() == 1) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::rest_part() const {
  Polynomial out;
  out.alg_ = alg_;
  for (const auto& [m, c] : terms_)
    if (m.word_length() != 1) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::retagged(std::uint64_t alg_id) const {
  Polynomial out = *this;
  out.alg_ = alg_id;
  return out;
}

namespace {

void enumerate_basis(const Algebra& alg, std::size_t k, int remaining, std::vector<Factor>& acc,
                     std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_sorted(acc));
    return;
  }
  if (k == alg.canonical_order().size()) return;
  std::uint32_t g = alg.canonical_order()[k];
  int d = alg.gen(g).degree;
  enumerate_basis(alg, k + 1, remaining, acc, out);
  std::uint32_t max_e = alg.is_odd(g) ? 1u : static_cast<std::uint32_t>(remaining / d);
  for (std::uint32_t e = 1; e <= max_e && d * static_cast<int>(e) <= remaining; ++e) {
    acc.push_back(Factor{g, d, e});
    enumerate_basis(alg, k + 1, remaining - d * static_cast<int>(e), acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> basis(const Algebra& alg, int n) {
  if (n < 0) return {};
  if (n == 0) return {Monomial::unit()};
  if (n > alg.bound())
    throw RangeError("basis in degree " + std::to_string(n) + " exceeds exactness bound " +
                     std::to_string(alg.bound()));
  for (std::uint32_t i = 0; i < alg.size(); ++i)
    if (alg.gen(i).degree < 1)
      throw InputError("degree enumeration over an algebra with a degree-0 generator");
  std::vector<Monomial> out;
  std::vector<Factor> acc;
  enumerate_basis(alg, 0, n, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

QVector coordinates(const Algebra& alg, const Polynomial& p, const std::vector<Monomial>& basis_monos) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis_monos.size(); ++i) index[basis_monos[i]] = i;
  if (p.algebra_id() != 0 && p.algebra_id() != alg.id())
    throw InputError("polynomial belongs to a different algebra");
  QVector v(basis_monos.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw InputError("degree-" + std::to_string(m.degree()) +
                       " term outside the provided basis");
    v[it->second] = c;
  }
  return v;
}

Polynomial apply_derivation(const Polynomial& p, const std::vector<Polynomial>& images,
                            bool theta_odd, std::uint64_t target_alg_id) {
  Polynomial out;
  out = out.retagged(target_alg_id);
  for (const auto& [mono, coeff] : p.terms()) {
    const auto& fs = mono.factors();
    int prefix_deg = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Factor& f = fs[i];
      if (f.gen >= images.size()) throw InputError("derivation image missing for a generator");
      const Polynomial& th = images[f.gen];
      if (!th.is_zero()) {
        int sign = (theta_odd && prefix_deg % 2 != 0) ? -1 : 1;
        std::vector<Factor> prefix(fs.begin(), fs.begin() + i);
        std::vector<Factor> rest;
        if (f.exp > 1) rest.push_back(Factor{f.gen, f.degree, f.exp - 1});
        rest.insert(rest.end(), fs.begin() + i + 1, fs.end());
        Polynomial pre;
        pre = pre.retagged(target_alg_id);
        pre.add_term(Monomial::from_sorted(std::move(prefix)),
                     coeff * sign * static_cast<long>(f.exp));
        Polynomial post;
        post = post.retagged(target_alg_id);
        post.add_term(Monomial::from_sorted(std::move(rest)), Rational(1));
        out = out + pre * th * post;
      }
      prefix_deg += f.degree * static_cast<int>(f.exp);
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      std::uint64_t target_alg_id) {
  Polynomial out;
  out = out.retagged(target_alg_id);
  for (const auto& [mono, coeff] : p.terms()) {
    Polynomial acc;
    acc = acc.retagged(target_alg_id);
    acc.add_term(Monomial::unit(), coeff);
    for (const auto& f : mono.factors()) {
      if (f.gen >= images.size()) throw InputError("substitution image missing for a generator");
      acc = acc * images[f.gen].pow(f.exp);
    }
    out = out + acc;
  }
  return out;
}

std::string to_string(const Algebra& alg, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += "*";
    s += alg.gen(f.gen).name;
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

std::string to_string(const Algebra& alg, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (m.is_unit())
      s += to_string(a);
    else if (a == 1)
      s += to_string(alg, m);
    else
      s += to_string(a) + "*" + to_string(alg, m);
  }
  return s;
}

}  // namespace rht
