#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rht/model.hpp"
#include "rht/morphism.hpp"

namespace rht {

/* Independently pinned facts about a catalog model. Tests recompute each
 * entry from scratch; the differential texts give a direct integrity check
 * that survives mutations invisible to the derived quantities (e.g. scaling
 * a differential, which leaves cohomology untouched). */
struct ModelManifest {
  std::string model;
  std::vector<long> betti;  // degrees 0 .. bound
  std::optional<long> euler;
  int cup_length = 0;
  std::map<int, int> spherical;  // degree -> spherical dimension, nonzero entries only
  std::map<std::string, std::string> differentials;  // generator -> pinned source text
};

struct MapManifest {
  std::string map;
  std::string source, target;  // model names
  std::map<std::string, std::string> images;  // generator -> pinned source text
};

/* Built-in fixture models and maps. Everything is parsed from the same text
 * that ships under fixtures/, so a catalog entry and its file cannot drift
 * apart silently; `model_text`/`map_text` expose that text. All instances in
 * one Catalog share algebras, so maps between them compose and compare. */
class Catalog {
public:
  Catalog();

  const std::vector<std::string>& model_names() const { return model_names_; }
  const std::vector<std::string>& map_names() const { return map_names_; }
  bool has_model(const std::string& name) const { return models_.count(name) != 0; }
  bool has_map(const std::string& name) const { return maps_.count(name) != 0; }

  ModelPtr model(const std::string& name) const;  // InputError when unknown
  MapPtr map(const std::string& name) const;
  const ModelManifest& model_manifest(const std::string& name) const;
  const MapManifest& map_manifest(const std::string& name) const;

  static const std::string& model_text(const std::string& name);
  static const std::string& map_text(const std::string& name);

private:
  std::map<std::string, ModelPtr> models_;
  std::map<std::string, MapPtr> maps_;
  std::map<std::string, ModelManifest> model_manifests_;
  std::map<std::string, MapManifest> map_manifests_;
  std::vector<std::string> model_names_;
  std::vector<std::string> map_names_;
};

/* Parameterized families, built programmatically. */

/* Λ(e_n) for odd n; Λ(x_n, y_{2n-1}; d y = x²) for even n. */
ModelPtr sphere(int n, int bound = 0);

/* Λ(x_{2n}, y_{2n(k+1)-1}; d y = x^{k+1}): truncated polynomial cohomology
 * Q[x]/(x^{k+1}), category k. */
ModelPtr truncated(int n, int k, int bound = 0);

/* Rational Eilenberg–MacLane space: Λ(x_n) with zero differential for even n
 * (polynomial cohomology, no category bound), Λ(e_n) for odd n. */
ModelPtr kq(int n, int bound = 0);

}  // namespace rht
