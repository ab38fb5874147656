#include "rht/catalog.hpp"

#include <algorithm>

#include "rht/errors.hpp"
#include "rht/parser.hpp"

namespace rht {

namespace {

struct NamedText {
  const char* name;
  const char* text;
};

const NamedText kModelTexts[] = {
    {"s2", R"(model s2 {
  gen x : 2 ;
  gen y : 3 ;
  d y = x^2 ;
  bound 12 ;
  cat0 1 ;
  top 2 ;
}
)"},
    {"s3", R"(model s3 {
  gen e : 3 ;
  bound 12 ;
  cat0 1 ;
  top 3 ;
}
)"},
    {"s4", R"(model s4 {
  gen x : 4 ;
  gen y : 7 ;
  d y = x^2 ;
  bound 12 ;
  cat0 1 ;
  top 4 ;
}
)"},
    {"s5", R"(model s5 {
  gen e : 5 ;
  bound 12 ;
  cat0 1 ;
  top 5 ;
}
)"},
    {"s7", R"(model s7 {
  gen e : 7 ;
  bound 12 ;
  cat0 1 ;
  top 7 ;
}
)"},
    {"cp2", R"(model cp2 {
  gen x : 2 ;
  gen y : 5 ;
  d y = x^3 ;
  bound 12 ;
  cat0 2 ;
  top 4 ;
}
)"},
    {"cp3", R"(model cp3 {
  gen x : 2 ;
  gen y : 7 ;
  d y = x^4 ;
  bound 12 ;
  cat0 3 ;
  top 6 ;
}
)"},
    {"kq2", R"(model kq2 {
  gen u : 2 ;
  bound 12 ;
}
)"},
    {"su3_t", R"(# SU(3)/T: the maximal-torus quotient, pure with degree-2 even part
model su3_t {
  gen x1 : 2 ;
  gen x2 : 2 ;
  gen y3 : 3 ;
  gen y5 : 5 ;
  d y3 = x1^2 + x1*x2 + x2^2 ;
  d y5 = x1^2*x2 + x1*x2^2 ;
  bound 10 ;
  cat0 3 ;
  top 6 ;
}
)"},
    {"s3xs4", R"(model s3xs4 {
  gen a : 3 ;
  gen b : 4 ;
  gen c : 7 ;
  d c = b^2 ;
  bound 12 ;
  cat0 2 ;
  top 7 ;
}
)"},
    {"q3", R"(# (S^2)^3: three even classes, each squared to zero
model q3 {
  gen a : 2 ;
  gen b : 2 ;
  gen c : 2 ;
  gen p : 3 ;
  gen q : 3 ;
  gen r : 3 ;
  d p = a^2 ;
  d q = b^2 ;
  d r = c^2 ;
  bound 10 ;
  cat0 3 ;
  top 6 ;
}
)"},
    {"a5", R"(# five-stage front of a model with a surviving Whitehead-twisted class in H^5;
# the generator list past degree 6 is intentionally open
model a5 {
  gen u1 : 2 ;
  gen u2 : 2 ;
  gen w1 : 3 ;
  gen w2 : 3 ;
  gen w3 : 3 ;
  gen v4 : 4 ;
  gen v5 : 5 ;
  gen v6a : 6 ;
  gen v6b : 6 ;
  d w1 = u1^2 ;
  d w2 = u1*u2 ;
  d w3 = u2^2 ;
  d v4 = u1*w3 - u2*w2 ;
  d v5 = u2*v4 - w2*w3 ;
  d v6a = w2*v4 - u1*v5 ;
  d v6b = w3*v4 - u2*v5 ;
  bound 6 ;
  partial ;
}
)"},
    {"kq2_x_s4", R"(# product of kq2 with s4
model kq2_x_s4 {
  gen u : 2 ;
  gen x : 4 ;
  gen y : 7 ;
  d y = x^2 ;
  bound 12 ;
}
)"},
};

const NamedText kMapTexts[] = {
    {"hopf_composite", R"(# collapse s3xs4 onto s4's cofiber direction: degree-7 class times the product
map hopf_composite : s4 -> s3xs4 {
  x -> 0 ;
  y -> a*b ;
}
)"},
    {"bottom_cell", R"(map bottom_cell : kq2 -> s2 {
  u -> x ;
}
)"},
    {"a5_quotient", R"(# pinch onto the degree-5 survivor
map a5_quotient : s5 -> a5 {
  e -> u1*w2 - u2*w1 ;
}
)"},
    {"identity_s4", R"(map identity_s4 : s4 -> s4 {
  x -> x ;
  y -> y ;
}
)"},
    {"s2_self", R"(map s2_self : s2 -> s2 {
  x -> x ;
  y -> y ;
}
)"},
    {"s3_incl", R"(map s3_incl : s3xs4 -> s3 {
  a -> e ;
  b -> 0 ;
  c -> 0 ;
}
)"},
};

std::vector<long> betti_row(std::initializer_list<long> front, std::size_t len) {
  std::vector<long> out(front);
  out.resize(len, 0);
  return out;
}

std::map<std::string, ModelManifest> build_model_manifests() {
  std::map<std::string, ModelManifest> m;
  m["s2"] = {"s2", betti_row({1, 0, 1}, 13), 2, 1, {{2, 1}}, {{"x", "0"}, {"y", "x^2"}}};
  m["s3"] = {"s3", betti_row({1, 0, 0, 1}, 13), 0, 1, {{3, 1}}, {{"e", "0"}}};
  m["s4"] = {"s4", betti_row({1, 0, 0, 0, 1}, 13), 2, 1, {{4, 1}}, {{"x", "0"}, {"y", "x^2"}}};
  m["s5"] = {"s5", betti_row({1, 0, 0, 0, 0, 1}, 13), 0, 1, {{5, 1}}, {{"e", "0"}}};
  m["s7"] = {"s7", betti_row({1, 0, 0, 0, 0, 0, 0, 1}, 13), 0, 1, {{7, 1}}, {{"e", "0"}}};
  m["cp2"] = {"cp2", betti_row({1, 0, 1, 0, 1}, 13), 3, 2, {{2, 1}},
              {{"x", "0"}, {"y", "x^3"}}};
  m["cp3"] = {"cp3", betti_row({1, 0, 1, 0, 1, 0, 1}, 13), 4, 3, {{2, 1}},
              {{"x", "0"}, {"y", "x^4"}}};
  m["kq2"] = {"kq2", {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, std::nullopt, 6, {{2, 1}},
              {{"u", "0"}}};
  m["su3_t"] = {"su3_t",
                {1, 0, 2, 0, 2, 0, 1, 0, 0, 0, 0},
                6,
                3,
                {{2, 2}},
                {{"x1", "0"},
                 {"x2", "0"},
                 {"y3", "x1^2 + x1*x2 + x2^2"},
                 {"y5", "x1^2*x2 + x1*x2^2"}}};
  m["s3xs4"] = {"s3xs4", betti_row({1, 0, 0, 1, 1, 0, 0, 1}, 13), 0, 2, {{3, 1}, {4, 1}},
                {{"a", "0"}, {"b", "0"}, {"c", "b^2"}}};
  m["q3"] = {"q3",
             {1, 0, 3, 0, 3, 0, 1, 0, 0, 0, 0},
             8,
             3,
             {{2, 3}},
             {{"a", "0"},
              {"b", "0"},
              {"c", "0"},
              {"p", "a^2"},
              {"q", "b^2"},
              {"r", "c^2"}}};
  m["a5"] = {"a5",
             {1, 0, 2, 0, 0, 1, 0},
             std::nullopt,
             1,
             {{2, 2}},
             {{"u1", "0"},
              {"u2", "0"},
              {"w1", "u1^2"},
              {"w2", "u1*u2"},
              {"w3", "u2^2"},
              {"v4", "u1*w3 - u2*w2"},
              {"v5", "u2*v4 - w2*w3"},
              {"v6a", "w2*v4 - u1*v5"},
              {"v6b", "w3*v4 - u2*v5"}}};
  m["kq2_x_s4"] = {"kq2_x_s4",
                   {1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2},
                   std::nullopt,
                   6,
                   {{2, 1}, {4, 1}},
                   {{"u", "0"}, {"x", "0"}, {"y", "x^2"}}};
  return m;
}

std::map<std::string, MapManifest> build_map_manifests() {
  std::map<std::string, MapManifest> m;
  m["hopf_composite"] = {"hopf_composite", "s4", "s3xs4", {{"x", "0"}, {"y", "a*b"}}};
  m["bottom_cell"] = {"bottom_cell", "kq2", "s2", {{"u", "x"}}};
  m["a5_quotient"] = {"a5_quotient", "s5", "a5", {{"e", "u1*w2 - u2*w1"}}};
  m["identity_s4"] = {"identity_s4", "s4", "s4", {{"x", "x"}, {"y", "y"}}};
  m["s2_self"] = {"s2_self", "s2", "s2", {{"x", "x"}, {"y", "y"}}};
  m["s3_incl"] = {"s3_incl", "s3xs4", "s3", {{"a", "e"}, {"b", "0"}, {"c", "0"}}};
  return m;
}

}  // namespace

Catalog::Catalog() {
  for (const auto& [name, text] : kModelTexts) {
    models_[name] = parse_model(text);
    model_names_.push_back(name);
  }
  ModelResolver resolve = [this](const std::string& n) -> ModelPtr {
    auto it = models_.find(n);
    return it == models_.end() ? nullptr : it->second;
  };
  for (const auto& [name, text] : kMapTexts) {
    maps_[name] = parse_map(text, resolve);
    map_names_.push_back(name);
  }
  model_manifests_ = build_model_manifests();
  map_manifests_ = build_map_manifests();
}

ModelPtr Catalog::model(const std::string& name) const {
  auto it = models_.find(name);
  if (it == models_.end()) throw InputError("no catalog model named '" + name + "'");
  return it->second;
}

MapPtr Catalog::map(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw InputError("no catalog map named '" + name + "'");
  return it->second;
}

const ModelManifest& Catalog::model_manifest(const std::string& name) const {
  auto it = model_manifests_.find(name);
  if (it == model_manifests_.end())
    throw InputError("no manifest for catalog model '" + name + "'");
  return it->second;
}

const MapManifest& Catalog::map_manifest(const std::string& name) const {
  auto it = map_manifests_.find(name);
  if (it == map_manifests_.end()) throw InputError("no manifest for catalog map '" + name + "'");
  return it->second;
}

const std::string& Catalog::model_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> t;
    for (const auto& [n, s] : kModelTexts) t[n] = s;
    return t;
  }();
  auto it = texts.find(name);
  if (it == texts.end()) throw InputError("no catalog model named '" + name + "'");
  return it->second;
}

const std::string& Catalog::map_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> t;
    for (const auto& [n, s] : kMapTexts) t[n] = s;
    return t;
  }();
  auto it = texts.find(name);
  if (it == texts.end()) throw InputError("no catalog map named '" + name + "'");
  return it->second;
}

ModelPtr sphere(int n, int bound) {
  if (n < 2) throw InputError("sphere models need degree >= 2");
  if (n % 2 != 0) {
    if (bound == 0) bound = std::max(12, n + 1);
    AlgebraPtr alg = Algebra::make({{"e", n}}, bound);
    ModelAttrs attrs;
    attrs.cat0 = 1;
    attrs.top = n;
    return Model::make("s" + std::to_string(n), alg, {Polynomial::zero(*alg)}, attrs);
  }
  ModelPtr m = truncated(n / 2, 1, bound);
  /* same data, conventional name */
  ModelAttrs attrs;
  attrs.cat0 = m->cat0();
  attrs.top = m->top();
  return Model::make("s" + std::to_string(n), m->alg_ptr(), m->d_images(), attrs);
}

ModelPtr truncated(int n, int k, int bound) {
  if (n < 1 || k < 1) throw InputError("truncated models need n >= 1, k >= 1");
  int xd = 2 * n, yd = 2 * n * (k + 1) - 1;
  if (bound == 0) bound = std::max(12, yd + 1);
  if (bound < yd) throw InputError("bound below the top generator degree");
  AlgebraPtr alg = Algebra::make({{"x", xd}, {"y", yd}}, bound);
  Polynomial dy = Polynomial::monomial(
      *alg, Monomial::single(0, xd, static_cast<std::uint32_t>(k + 1)), Rational(1));
  ModelAttrs attrs;
  attrs.cat0 = k;
  attrs.top = 2 * n * k;
  return Model::make("trunc_" + std::to_string(n) + "_" + std::to_string(k), alg,
                     {Polynomial::zero(*alg), dy}, attrs);
}

ModelPtr kq(int n, int bound) {
  if (n < 2) throw InputError("Eilenberg-MacLane models need degree >= 2");
  if (bound == 0) bound = std::max(12, 3 * n);
  if (n % 2 != 0) {
    AlgebraPtr alg = Algebra::make({{"e", n}}, bound);
    ModelAttrs attrs;
    attrs.cat0 = 1;
    attrs.top = n;
    return Model::make("kq" + std::to_string(n), alg, {Polynomial::zero(*alg)}, attrs);
  }
  AlgebraPtr alg = Algebra::make({{"u", n}}, bound);
  return Model::make("kq" + std::to_string(n), alg, {Polynomial::zero(*alg)});
}

}  // namespace rht
