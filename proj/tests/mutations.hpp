#pragma once

/* Mutation engine for the fixture catalog. Each mutation rewrites one pinned
 * model or map into a nearby variant; the staged checker replays the full
 * validation chain and reports which layer notices:
 *
 *   construction  — the text no longer parses into a valid model/map
 *   minimality    — the model builds but stops being minimal
 *   pinned-text   — a pinned differential or image no longer matches
 *   invariants    — recomputed Betti/Euler/cup/spherical disagree
 *   dg            — a map stops commuting with the differentials
 *
 * Catching silent corruption (a scaled differential leaves all Betti numbers
 * alone) is exactly what the pinned texts are for, so the checker tries the
 * cheap textual pins before recomputing cohomology. */

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rht/catalog.hpp"
#include "rht/cohomology.hpp"
#include "rht/parser.hpp"

namespace rht_test {

using namespace rht;

struct ModelPieces {
  std::string name;
  std::vector<Generator> gens;
  std::vector<std::string> d_texts;  // aligned with gens
  int bound = 0;
  std::optional<int> cat0, top;
  bool partial = false;

  static ModelPieces from_catalog(const Catalog& cat, const std::string& model_name) {
    ModelPtr m = cat.model(model_name);
    ModelPieces p;
    p.name = model_name;
    p.gens = m->alg().generators();
    for (std::uint32_t i = 0; i < m->alg().size(); ++i)
      p.d_texts.push_back(to_string(m->alg(), m->d_of(i)));
    p.bound = m->bound();
    p.cat0 = m->cat0();
    p.top = m->top();
    p.partial = m->partial();
    return p;
  }

  std::string text() const {
    std::ostringstream os;
    os << "model " << name << " {\n";
    for (const auto& g : gens) os << "  gen " << g.name << " : " << g.degree << " ;\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (d_texts[i] != "0") os << "  d " << gens[i].name << " = " << d_texts[i] << " ;\n";
    os << "  bound " << bound << " ;\n";
    if (cat0) os << "  cat0 " << *cat0 << " ;\n";
    if (top) os << "  top " << *top << " ;\n";
    if (partial) os << "  partial ;\n";
    os << "}\n";
    return os.str();
  }
};

struct MapPieces {
  std::string name, source, target;
  std::vector<std::string> gen_names;
  std::vector<std::string> images;  // aligned with gen_names

  static MapPieces from_catalog(const Catalog& cat, const std::string& map_name) {
    MapPtr f = cat.map(map_name);
    MapPieces p;
    p.name = map_name;
    p.source = f->source()->name();
    p.target = f->target()->name();
    for (std::uint32_t i = 0; i < f->source()->alg().size(); ++i) {
      p.gen_names.push_back(f->source()->alg().gen(i).name);
      p.images.push_back(to_string(f->target()->alg(), f->image_of(i)));
    }
    return p;
  }

  std::string text() const {
    std::ostringstream os;
    os << "map " << name << " : " << source << " -> " << target << " {\n";
    for (std::size_t i = 0; i < gen_names.size(); ++i)
      os << "  " << gen_names[i] << " -> " << images[i] << " ;\n";
    os << "}\n";
    return os.str();
  }
};

struct Mutation {
  std::string label;
  bool is_map = false;
  std::string fixture;
  std::string text;
};

struct StageResult {
  bool caught = false;
  std::string stage;
};

inline StageResult check_model_mutation(const Catalog& cat, const std::string& name,
                                        const std::string& text) {
  ModelPtr m;
  try {
    m = parse_model(text);
  } catch (const Error&) {
    return {true, "construction"};
  }
  if (!m->is_minimal() || !m->warnings().empty()) return {true, "minimality"};

  const ModelManifest& mm = cat.model_manifest(name);
  if (m->alg().size() != mm.differentials.size()) return {true, "pinned-text"};
  for (const auto& [gen, dtext] : mm.differentials) {
    auto idx = m->alg().find(gen);
    if (!idx) return {true, "pinned-text"};
    Polynomial pinned;
    try {
      pinned = parse_polynomial(m->alg(), dtext);
    } catch (const Error&) {
      return {true, "pinned-text"};  // pinned text no longer parses over the mutated algebra
    }
    if (!(pinned == m->d_of(*idx))) return {true, "pinned-text"};
  }

  Cohomology coh(m);
  std::vector<long> betti;
  for (int n = 0; n <= m->bound(); ++n) betti.push_back(coh.betti(n));
  if (betti != mm.betti) return {true, "invariants"};
  if (invariants(coh).euler != mm.euler) return {true, "invariants"};
  if (coh.cup_length(m->bound()) != mm.cup_length) return {true, "invariants"};
  std::map<int, int> sph;
  for (int n = 1; n <= m->bound(); ++n)
    if (int s = coh.spherical_dim(n); s != 0) sph[n] = s;
  if (sph != mm.spherical) return {true, "invariants"};
  return {false, ""};
}

inline StageResult check_map_mutation(const Catalog& cat, const std::string& name,
                                      const std::string& text) {
  MapPtr f;
  try {
    f = parse_map(text, [&](const std::string& n) {
      return cat.has_model(n) ? cat.model(n) : nullptr;
    });
  } catch (const Error&) {
    return {true, "construction"};
  }
  if (!f->check_dg().ok) return {true, "dg"};
  const MapManifest& mm = cat.map_manifest(name);
  if (f->source()->name() != mm.source || f->target()->name() != mm.target)
    return {true, "pinned-text"};
  for (const auto& [gen, itext] : mm.images) {
    auto idx = f->source()->alg().find(gen);
    if (!idx) return {true, "pinned-text"};
    if (!(parse_polynomial(f->target()->alg(), itext) == f->image_of(*idx)))
      return {true, "pinned-text"};
  }
  return {false, ""};
}

inline StageResult check_mutation(const Catalog& cat, const Mutation& mu) {
  return mu.is_map ? check_map_mutation(cat, mu.fixture, mu.text)
                   : check_model_mutation(cat, mu.fixture, mu.text);
}

/* ---- the standard batch ---- */

namespace detail {

inline Polynomial parse_d(const Catalog& cat, const std::string& model, std::uint32_t gen) {
  ModelPtr m = cat.model(model);
  return m->d_of(gen);
}

struct Site {
  std::string model;
  std::uint32_t gen = 0;
};

/* (model, generator) pairs with nonzero differential. */
inline std::vector<Site> differential_sites(const Catalog& cat) {
  std::vector<Site> out;
  for (const auto& name : cat.model_names()) {
    ModelPtr m = cat.model(name);
    for (std::uint32_t i = 0; i < m->alg().size(); ++i)
      if (!m->d_of(i).is_zero()) out.push_back({name, i});
  }
  return out;
}

inline std::vector<Site> all_sites(const Catalog& cat) {
  std::vector<Site> out;
  for (const auto& name : cat.model_names()) {
    ModelPtr m = cat.model(name);
    for (std::uint32_t i = 0; i < m->alg().size(); ++i) out.push_back({name, i});
  }
  return out;
}

template <typename T>
inline std::vector<T> take(std::vector<T> pool, std::size_t n, std::mt19937& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(n, pool.size()));
  return pool;
}

}  // namespace detail

/* Fifty deterministic mutations spanning every detection stage. */
inline std::vector<Mutation> standard_mutations(const Catalog& cat, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Mutation> out;

  auto model_mutation = [&](const std::string& label, const ModelPieces& p) {
    out.push_back({label, false, p.name, p.text()});
  };
  auto map_mutation = [&](const std::string& label, const MapPieces& p) {
    out.push_back({label, true, p.name, p.text()});
  };

  // 1. scale a whole differential (cohomology type unchanged, text pins differ)
  for (const auto& site : detail::take(detail::differential_sites(cat), 8, rng)) {
    ModelPieces p = ModelPieces::from_catalog(cat, site.model);
    ModelPtr m = cat.model(site.model);
    p.d_texts[site.gen] = to_string(m->alg(), m->d_of(site.gen).scaled(2));
    model_mutation("scale d(" + p.gens[site.gen].name + ") of " + site.model, p);
  }

  // 2. flip the sign of one term
  for (const auto& site : detail::take(detail::differential_sites(cat), 6, rng)) {
    ModelPieces p = ModelPieces::from_catalog(cat, site.model);
    ModelPtr m = cat.model(site.model);
    Polynomial d = m->d_of(site.gen);
    std::uniform_int_distribution<std::size_t> pick(0, d.term_count() - 1);
    auto it = d.terms().begin();
    std::advance(it, pick(rng));
    Polynomial flipped = d - Polynomial::monomial(m->alg(), it->first, it->second + it->second);
    p.d_texts[site.gen] = to_string(m->alg(), flipped);
    model_mutation("flip a term of d(" + p.gens[site.gen].name + ") in " + site.model, p);
  }

  // 3. drop one term
  for (const auto& site : detail::take(detail::differential_sites(cat), 6, rng)) {
    ModelPieces p = ModelPieces::from_catalog(cat, site.model);
    ModelPtr m = cat.model(site.model);
    Polynomial d = m->d_of(site.gen);
    std::uniform_int_distribution<std::size_t> pick(0, d.term_count() - 1);
    auto it = d.terms().begin();
    std::advance(it, pick(rng));
    Polynomial dropped = d - Polynomial::monomial(m->alg(), it->first, it->second);
    p.d_texts[site.gen] = to_string(m->alg(), dropped);
    model_mutation("drop a term of d(" + p.gens[site.gen].name + ") in " + site.model, p);
  }

  // 4. swap two same-degree differentials
  {
    std::vector<std::pair<detail::Site, detail::Site>> pairs;
    for (const auto& name : cat.model_names()) {
      ModelPtr m = cat.model(name);
      for (std::uint32_t i = 0; i < m->alg().size(); ++i)
        for (std::uint32_t j = i + 1; j < m->alg().size(); ++j)
          if (m->alg().gen(i).degree == m->alg().gen(j).degree && !m->d_of(i).is_zero() &&
              !m->d_of(j).is_zero() && !(m->d_of(i) == m->d_of(j)))
            pairs.push_back({{name, i}, {name, j}});
    }
    for (const auto& pr : detail::take(pairs, 4, rng)) {
      ModelPieces p = ModelPieces::from_catalog(cat, pr.first.model);
      std::swap(p.d_texts[pr.first.gen], p.d_texts[pr.second.gen]);
      model_mutation("swap d(" + p.gens[pr.first.gen].name + ") and d(" +
                         p.gens[pr.second.gen].name + ") in " + pr.first.model,
                     p);
    }
  }

  // 5. bump a generator degree
  for (const auto& site : detail::take(detail::all_sites(cat), 6, rng)) {
    ModelPieces p = ModelPieces::from_catalog(cat, site.model);
    p.gens[site.gen].degree += 1;
    model_mutation("bump the degree of " + p.gens[site.gen].name + " in " + site.model, p);
  }

  // 6. move the bound
  {
    std::vector<std::string> names = detail::take(cat.model_names(), 4, rng);
    for (std::size_t i = 0; i < names.size(); ++i) {
      ModelPieces p = ModelPieces::from_catalog(cat, names[i]);
      p.bound += (i % 2 == 0) ? 2 : -2;
      model_mutation("move the bound of " + names[i], p);
    }
  }

  // 7. append a contractible-looking generator that makes a differential linear
  {
    const std::pair<const char*, const char*> spots[] = {
        {"s4", "y"}, {"s3xs4", "c"}, {"cp2", "y"}};
    for (const auto& [model, gen] : spots) {
      ModelPieces p = ModelPieces::from_catalog(cat, model);
      ModelPtr m = cat.model(model);
      std::uint32_t idx = *m->alg().find(gen);
      int d_degree = *m->d_of(idx).degree();
      p.gens.push_back({"zz", d_degree});
      p.d_texts.push_back("0");
      p.d_texts[idx] += " + zz";
      model_mutation(std::string("append a linear term to d(") + gen + ") of " + model, p);
    }
  }

  // 8. zero a differential out
  {
    const std::pair<const char*, const char*> spots[] = {{"s4", "y"}, {"cp2", "y"}, {"q3", "p"}};
    for (const auto& [model, gen] : spots) {
      ModelPieces p = ModelPieces::from_catalog(cat, model);
      p.d_texts[*cat.model(model)->alg().find(gen)] = "0";
      model_mutation(std::string("zero out d(") + gen + ") of " + model, p);
    }
  }

  // 9. scale a map image (often still a dg morphism)
  {
    const std::pair<const char*, const char*> spots[] = {
        {"hopf_composite", "y"}, {"bottom_cell", "u"}, {"a5_quotient", "e"}, {"s3_incl", "a"}};
    for (const auto& [map, gen] : spots) {
      MapPieces p = MapPieces::from_catalog(cat, map);
      MapPtr f = cat.map(map);
      std::uint32_t idx = *f->source()->alg().find(gen);
      p.images[idx] = to_string(f->target()->alg(), f->image_of(idx).scaled(2));
      map_mutation(std::string("scale the image of ") + gen + " under " + map, p);
    }
  }

  // 10. drop a term from a map image
  {
    const std::pair<const char*, const char*> spots[] = {
        {"a5_quotient", "e"}, {"hopf_composite", "y"}, {"s3_incl", "a"}};
    for (const auto& [map, gen] : spots) {
      MapPieces p = MapPieces::from_catalog(cat, map);
      MapPtr f = cat.map(map);
      std::uint32_t idx = *f->source()->alg().find(gen);
      Polynomial img = f->image_of(idx);
      auto it = img.terms().begin();
      Polynomial dropped = img - Polynomial::monomial(f->target()->alg(), it->first, it->second);
      p.images[idx] = to_string(f->target()->alg(), dropped);
      map_mutation(std::string("drop a term from the image of ") + gen + " under " + map, p);
    }
  }

  // 11. swap two images
  {
    const std::pair<const char*, const char*> spots[] = {
        {"identity_s4", "x"}, {"s2_self", "x"}, {"hopf_composite", "x"}};
    for (const auto& [map, gen] : spots) {
      MapPieces p = MapPieces::from_catalog(cat, map);
      std::swap(p.images[0], p.images[1]);
      map_mutation(std::string("swap the images of ") + map, p);
      (void)gen;
    }
  }

  return out;
}

}  // namespace rht_test
