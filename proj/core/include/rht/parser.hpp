#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rht/homotopy.hpp"
#include "rht/model.hpp"
#include "rht/morphism.hpp"

namespace rht {

/* Text formats.
 *
 *   model S4 {
 *     gen x : 4 ;
 *     gen y : 7 ;
 *     d y = x^2 ;          # omitted differentials default to zero
 *     bound 20 ;           # defaults to the largest generator degree
 *     cat0 1 ;
 *     top 4 ;
 *   }
 *
 *   map f : S4 -> P { x -> 0 ; y -> a*b }
 *   modelmap f from S4 to P { ... }       # equivalent spelling
 *
 *   homotopy H : S4 -> P { x -> a*(term with t, dt) ; ... }
 *
 * Polynomials are sums of terms; a term is a rational coefficient, a
 * monomial, or coeff * monomial; a factor is a generator name with an
 * optional ^exponent. '#' starts a comment running to the end of the line.
 * Homotopy entries may use t and dt, which name the interval coordinates of
 * the cylinder over the map's target; a target generator already called t or
 * dt keeps its name and the interval coordinate is renamed (t_, dt_).
 */

using ModelResolver = std::function<ModelPtr(const std::string&)>;

struct ParsedDocument {
  std::vector<ModelPtr> models;
  std::vector<MapPtr> maps;
  std::vector<Homotopy> homotopies;

  ModelPtr model(const std::string& name) const;  // InputError when absent
  MapPtr map(const std::string& name) const;
};

/* Parse a whole file: any number of model, map, and homotopy blocks. Map and
 * homotopy endpoints resolve first against models defined earlier in the same
 * document, then through `resolve` (for named catalogs). */
ParsedDocument parse_document(const std::string& text, const ModelResolver& resolve = {});

ModelPtr parse_model(const std::string& text);  // exactly one model block
MapPtr parse_map(const std::string& text, const ModelResolver& resolve);

/* One polynomial over an existing algebra; generator names resolve in `alg`. */
Polynomial parse_polynomial(const Algebra& alg, const std::string& text);

std::string write_model(const Model& m);
std::string write_map(const ModelMap& f);

}  // namespace rht
