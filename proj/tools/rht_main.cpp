#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rht/catalog.hpp"
#include "rht/cyclic.hpp"
#include "rht/parser.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rht;

namespace {

/* Name resolution: documents loaded with --input win over the built-in
 * catalog, later documents over earlier ones. Map endpoints in documents
 * resolve through the same chain, so a loaded map between catalog models
 * shares their algebra instances and composes with catalog maps. */
struct Workspace {
  Catalog catalog;
  std::vector<std::pair<std::string, ParsedDocument>> docs;

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ModelResolver resolve = [this](const std::string& name) { return lookup_model(name); };
    docs.emplace_back(path, parse_document(buf.str(), resolve));
  }

  ModelPtr lookup_model(const std::string& name) const {
    for (auto it = docs.rbegin(); it != docs.rend(); ++it)
      for (const auto& m : it->second.models)
        if (m->name() == name) return m;
    if (catalog.has_model(name)) return catalog.model(name);
    return nullptr;
  }

  ModelPtr model(const std::string& name) const {
    if (auto m = lookup_model(name)) return m;
    throw InputError("unknown model '" + name + "' (rht list shows what is available)");
  }

  MapPtr map(const std::string& name) const {
    for (auto it = docs.rbegin(); it != docs.rend(); ++it)
      for (const auto& f : it->second.maps)
        if (f->name() == name) return f;
    if (catalog.has_map(name)) return catalog.map(name);
    throw InputError("unknown map '" + name + "' (rht list shows what is available)");
  }
};

json coords_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json images_json(const Algebra& source_alg, const Algebra& value_alg,
                 const std::vector<Polynomial>& images) {
  json a = json::array();
  for (std::uint32_t i = 0; i < source_alg.size(); ++i)
    a.push_back({{"generator", source_alg.gen(i).name},
                 {"value", to_string(value_alg, images[i])}});
  return a;
}

void print_images(std::ostream& os, const std::string& indent, const Algebra& source_alg,
                  const Algebra& value_alg, const std::vector<Polynomial>& images) {
  for (std::uint32_t i = 0; i < source_alg.size(); ++i)
    os << indent << source_alg.gen(i).name << " -> " << to_string(value_alg, images[i]) << "\n";
}

struct Report {
  std::string command;
  bool as_json = false;
  json j;
  std::ostringstream human;

  explicit Report(std::string cmd, bool as_json_)
      : command(std::move(cmd)), as_json(as_json_) {
    j["schema"] = "rht-report/1";
    j["command"] = command;
  }

  int finish(int rc) {
    if (as_json) {
      j["exit"] = rc;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << human.str();
    }
    return rc;
  }
};

/* ---------------- check ---------------- */

int cmd_check(Workspace& ws, bool as_json) {
  if (ws.docs.empty()) throw InputError("check needs at least one --input document");
  Report out("check", as_json);
  bool all_ok = true;
  json files = json::array();
  for (auto& [path, doc] : ws.docs) {
    out.human << path << "\n";
    json jmodels = json::array(), jmaps = json::array(), jhs = json::array();
    for (const auto& m : doc.models) {
      jmodels.push_back({{"name", m->name()},
                         {"bound", m->bound()},
                         {"minimal", m->is_minimal()},
                         {"warnings", m->warnings()}});
      out.human << "  model " << m->name() << ": ok (bound " << m->bound()
                << (m->is_minimal() ? ", minimal)" : ", NOT minimal)") << "\n";
      for (const auto& w : m->warnings()) out.human << "    warning: " << w << "\n";
    }
    for (const auto& f : doc.maps) {
      auto rep = f->check_dg();
      all_ok = all_ok && rep.ok;
      json jres = json::array();
      for (const auto& [g, r] : rep.residuals)
        jres.push_back({{"generator", f->source()->alg().gen(g).name},
                        {"value", to_string(f->target()->alg(), r)}});
      jmaps.push_back({{"name", f->name()},
                       {"ok", rep.ok},
                       {"degree_errors", rep.degree_errors},
                       {"residuals", jres}});
      out.human << "  map " << f->name() << ": " << (rep.ok ? "ok" : "NOT a dg morphism") << "\n";
      for (const auto& e : rep.degree_errors) out.human << "    " << e << "\n";
      for (const auto& [g, r] : rep.residuals)
        out.human << "    d-residual at " << f->source()->alg().gen(g).name << ": "
                  << to_string(f->target()->alg(), r) << "\n";
    }
    for (const auto& H : doc.homotopies) {
      // the parsed ends are maps in their own right; verifying against them
      // checks exactly that H is a chain map
      std::vector<Polynomial> e0, e1;
      for (std::uint32_t i = 0; i < H.source()->alg().size(); ++i) {
        e0.push_back(H.end(Rational(0), i));
        e1.push_back(H.end(Rational(1), i));
      }
      auto base = std::make_shared<Model>(H.cylinder().base());
      auto f0 = ModelMap::make_unchecked(H.name() + "|0", H.source(), base, e0);
      auto f1 = ModelMap::make_unchecked(H.name() + "|1", H.source(), base, e1);
      auto chk = verify_homotopy(H, *f0, *f1);
      all_ok = all_ok && chk.ok;
      jhs.push_back({{"name", H.name()}, {"ok", chk.ok}, {"failures", chk.failures}});
      out.human << "  homotopy " << H.name() << ": "
                << (chk.ok ? "ok" : "NOT a chain map") << "\n";
      for (const auto& msg : chk.failures) out.human << "    " << msg << "\n";
    }
    files.push_back({{"path", path}, {"models", jmodels}, {"maps", jmaps}, {"homotopies", jhs}});
  }
  out.j["ok"] = all_ok;
  out.j["files"] = files;
  out.human << (all_ok ? "all blocks check out\n" : "some blocks failed\n");
  return out.finish(all_ok ? 0 : 1);
}

/* ---------------- cohomology / invariants ---------------- */

int cmd_cohomology(Workspace& ws, bool as_json, const std::string& name, int max_degree) {
  ModelPtr m = ws.model(name);
  Cohomology coh(m);
  int hi = max_degree < 0 ? m->bound() : max_degree;
  Report out("cohomology", as_json);
  out.j["model"] = name;
  out.j["bound"] = m->bound();
  out.j["max_degree"] = hi;
  json betti = json::array(), reps = json::array();
  out.human << "H^n(" << name << ") for n = 0.." << hi << "\n";
  for (int n = 0; n <= hi; ++n) {
    int b = coh.betti(n);
    betti.push_back(b);
    if (b == 0) continue;
    json cls = json::array();
    out.human << "  n=" << n << "  betti " << b << "  reps: ";
    bool first = true;
    for (const auto& p : coh.representatives(n)) {
      cls.push_back(to_string(m->alg(), p));
      out.human << (first ? "" : ",  ") << to_string(m->alg(), p);
      first = false;
    }
    out.human << "\n";
    reps.push_back({{"degree", n}, {"classes", cls}});
  }
  out.j["betti"] = betti;
  out.j["representatives"] = reps;
  return out.finish(0);
}

int cmd_invariants(Workspace& ws, bool as_json, const std::string& name) {
  ModelPtr m = ws.model(name);
  Cohomology coh(m);
  ModelInvariants inv = invariants(coh);
  Report out("invariants", as_json);
  out.j["model"] = name;
  out.j["betti"] = inv.betti;
  out.j["formal_dimension"] = inv.formal_dim ? json(*inv.formal_dim) : json(nullptr);
  out.j["finite"] = to_string(inv.finite);
  out.j["euler"] = inv.euler ? json(*inv.euler) : json(nullptr);
  out.j["f0"] = to_string(inv.f0);
  out.j["cup_length"] = inv.cup_length;
  out.j["spherical"] = inv.spherical;
  out.j["notes"] = inv.notes;

  out.human << "model " << name << " (bound " << m->bound() << ")\n  betti:";
  for (int b : inv.betti) out.human << " " << b;
  out.human << "\n";
  if (inv.formal_dim) out.human << "  formal dimension: " << *inv.formal_dim << "\n";
  out.human << "  finite: " << to_string(inv.finite) << "\n";
  if (inv.euler) out.human << "  euler characteristic: " << *inv.euler << "\n";
  out.human << "  F0 (finite, chi > 0, even): " << to_string(inv.f0) << "\n";
  out.human << "  cup length: " << inv.cup_length << "\n";
  if (!inv.spherical.empty()) {
    out.human << "  spherical dims:";
    for (std::size_t n = 0; n < inv.spherical.size(); ++n)
      if (inv.spherical[n] != 0) out.human << " " << n << ":" << inv.spherical[n];
    out.human << "\n";
  }
  for (const auto& note : inv.notes) out.human << "  note: " << note << "\n";
  return out.finish(0);
}

/* ---------------- gottlieb ---------------- */

int cmd_gottlieb(Workspace& ws, bool as_json, const std::string& name, int degree, int cat0) {
  ModelPtr m = ws.model(name);
  std::optional<int> over = cat0 < 0 ? std::nullopt : std::optional<int>(cat0);
  GottliebResult r = gottlieb_rank(*m, degree, over);
  Report out("gottlieb", as_json);
  const char* kind = r.kind == GottliebResult::Kind::computed        ? "computed"
                     : r.kind == GottliebResult::Kind::zero_by_parity ? "zero-by-parity"
                                                                      : "not-computed";
  out.j["model"] = name;
  out.j["degree"] = degree;
  out.j["kind"] = kind;
  out.j["rank"] = r.rank;
  out.j["range_limited"] = r.range_limited;
  out.j["notes"] = r.notes;
  out.human << "Gottlieb rank of " << name << " in degree " << degree << ": ";
  if (r.kind == GottliebResult::Kind::not_computed)
    out.human << "not computed\n";
  else
    out.human << r.rank << (r.kind == GottliebResult::Kind::zero_by_parity ? " (by parity)" : "")
              << (r.range_limited ? " (partial generator list; lower bound only)" : "") << "\n";
  for (const auto& note : r.notes) out.human << "  note: " << note << "\n";
  return out.finish(r.kind == GottliebResult::Kind::not_computed ? 3 : 0);
}

/* ---------------- map-check ---------------- */

int cmd_map_check(Workspace& ws, bool as_json, const std::string& name) {
  MapPtr f = ws.map(name);
  auto rep = f->check_dg();
  Report out("map-check", as_json);
  out.j["map"] = name;
  out.j["source"] = f->source()->name();
  out.j["target"] = f->target()->name();
  out.j["ok"] = rep.ok;
  out.j["degree_errors"] = rep.degree_errors;
  json jres = json::array();
  for (const auto& [g, r] : rep.residuals)
    jres.push_back({{"generator", f->source()->alg().gen(g).name},
                    {"value", to_string(f->target()->alg(), r)}});
  out.j["residuals"] = jres;
  out.j["images"] = images_json(f->source()->alg(), f->target()->alg(), f->images());

  out.human << "map " << name << " : " << f->source()->name() << " -> " << f->target()->name()
            << "\n";
  print_images(out.human, "  ", f->source()->alg(), f->target()->alg(), f->images());
  out.human << (rep.ok ? "dg morphism: yes\n" : "dg morphism: NO\n");
  for (const auto& e : rep.degree_errors) out.human << "  " << e << "\n";
  for (const auto& [g, r] : rep.residuals)
    out.human << "  d-residual at " << f->source()->alg().gen(g).name << ": "
              << to_string(f->target()->alg(), r) << "\n";
  return out.finish(rep.ok ? 0 : 1);
}

/* ---------------- homotopic ---------------- */

int cmd_homotopic(Workspace& ws, bool as_json, const std::string& fname,
                  const std::string& gname, int t_cap) {
  MapPtr f = ws.map(fname), g = ws.map(gname);
  Cohomology src(f->source()), tgt(f->target());
  std::optional<int> cap = t_cap < 0 ? std::nullopt : std::optional<int>(t_cap);
  HomotopyDecision d = decide_homotopic(*f, *g, src, tgt, cap);
  Report out("homotopic", as_json);
  const char* status = d.status == HomotopyDecision::Status::homotopic      ? "homotopic"
                       : d.status == HomotopyDecision::Status::not_homotopic ? "not-homotopic"
                                                                             : "inconclusive";
  out.j["f"] = fname;
  out.j["g"] = gname;
  out.j["status"] = status;
  out.j["detail"] = d.detail;
  out.human << fname << " vs " << gname << ": " << status << "\n  " << d.detail << "\n";
  if (d.witness) {
    const auto& W = *d.witness;
    out.j["witness"] = {{"cylinder_over", f->target()->name()},
                        {"images", images_json(f->source()->alg(), W.cylinder().alg(),
                                               W.images())}};
    out.human << "  homotopy through the cylinder over " << f->target()->name() << ":\n";
    print_images(out.human, "    H ", f->source()->alg(), W.cylinder().alg(), W.images());
  }
  if (d.h_degree) {
    out.j["h_degree"] = *d.h_degree;
    out.human << "  induced maps on H^" << *d.h_degree << " differ\n";
  }
  if (d.obstruction_gen) {
    out.j["obstruction"] = {{"generator", *d.obstruction_gen},
                            {"representative", to_string(f->target()->alg(), d.obstruction_rep)},
                            {"class", coords_json(d.obstruction_class)}};
    out.human << "  obstruction at " << *d.obstruction_gen << ": ["
              << to_string(f->target()->alg(), d.obstruction_rep) << "]\n";
  }
  return out.finish(d.status == HomotopyDecision::Status::inconclusive ? 3 : 0);
}

/* ---------------- battery ---------------- */

int cmd_battery(Workspace& ws, bool as_json, const std::string& name, int cat0) {
  MapPtr f = ws.map(name);
  Cohomology src(f->source()), tgt(f->target());
  std::optional<int> over = cat0 < 0 ? std::nullopt : std::optional<int>(cat0);
  BatteryReport rep = cyclic_battery(*f, src, tgt, over);
  Report out("battery", as_json);
  out.j["map"] = name;
  out.j["not_cyclic"] = rep.not_cyclic;
  out.j["notes"] = rep.notes;
  json jc = json::array();
  out.human << "cyclicness battery for " << name << " (model map " << f->source()->name()
            << " -> " << f->target()->name() << ")\n";
  for (const auto& c : rep.conditions) {
    const char* o = c.outcome == BatteryCondition::Outcome::pass             ? "pass"
                    : c.outcome == BatteryCondition::Outcome::fail            ? "fail"
                    : c.outcome == BatteryCondition::Outcome::not_applicable ? "not-applicable"
                                                                             : "split-required";
    jc.push_back({{"name", c.name}, {"outcome", o}, {"detail", c.detail}});
    out.human << "  [" << o << "] " << c.name;
    if (!c.detail.empty()) out.human << " — " << c.detail;
    out.human << "\n";
  }
  out.j["conditions"] = jc;
  for (const auto& note : rep.notes) out.human << "  note: " << note << "\n";
  out.human << (rep.not_cyclic ? "verdict: NOT cyclic\n"
                               : "verdict: no obstruction found (necessary conditions only)\n");
  return out.finish(rep.not_cyclic ? 1 : 0);
}

/* ---------------- classify ---------------- */

int cmd_classify(Workspace& ws, bool as_json, const std::string& source,
                 const std::string& target) {
  ModelPtr A = ws.model(source), X = ws.model(target);
  Cohomology a_coh(A), x_coh(X);
  CyclicClassification cls = classify_cyclic(x_coh, a_coh);
  Report out("classify", as_json);
  const char* kind = cls.kind == CyclicClassification::Kind::truncated_type
                         ? "truncated-type"
                         : "pure-even-two-type";
  out.j["source"] = source;
  out.j["target"] = target;
  out.j["kind"] = kind;
  out.j["dimension"] = cls.dimension;
  out.j["notes"] = cls.notes;
  out.human << "cyclic maps " << source << " -> " << target << " (" << kind << ")\n";
  out.human << "  vector space dimension: " << cls.dimension << "\n";
  json jreps = json::array(), jwits = json::array();
  for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
    const auto& r = *cls.representatives[i];
    jreps.push_back({{"name", r.name()},
                     {"images", images_json(r.source()->alg(), r.target()->alg(), r.images())}});
    out.human << "  representative " << i << " (" << r.name() << "):\n";
    print_images(out.human, "    ", r.source()->alg(), r.target()->alg(), r.images());
  }
  for (const auto& w : cls.witnesses) {
    jwits.push_back({{"map", w.F->name()}, {"tensor", w.tensor->name()}});
    out.human << "  affiliated witness " << w.F->name() << " into " << w.tensor->name() << "\n";
  }
  out.j["representatives"] = jreps;
  out.j["witnesses"] = jwits;
  for (const auto& note : cls.notes) out.human << "  note: " << note << "\n";
  return out.finish(0);
}

/* ---------------- nullhomotopy ---------------- */

int cmd_nullhomotopy(Workspace& ws, bool as_json, const std::string& fname,
                     const std::string& ftname, const std::string& gname, int k_max) {
  MapPtr f = ws.map(fname), ft = ws.map(ftname), g = ws.map(gname);
  Cohomology src(f->source()), tgt(f->target());
  NullhomotopyOutcome o = nullhomotopy_pipeline(*f, *ft, *g, src, tgt, k_max);
  Report out("nullhomotopy", as_json);
  const char* status = o.status == NullhomotopyOutcome::Status::nullhomotopic ? "nullhomotopic"
                       : o.status == NullhomotopyOutcome::Status::refused      ? "refused"
                                                                               : "inconclusive";
  out.j["f"] = fname;
  out.j["ftilde"] = ftname;
  out.j["g"] = gname;
  out.j["status"] = status;
  out.j["reason"] = o.reason;
  out.j["log"] = o.log;
  out.human << fname << " through " << g->target()->name() << ": " << status << "\n  " << o.reason
            << "\n";
  for (const auto& l : o.log) out.human << "  log: " << l << "\n";
  if (o.witness) {
    const auto& W = *o.witness;
    out.j["witness"] = {{"cylinder_over", f->target()->name()},
                        {"images", images_json(f->source()->alg(), W.cylinder().alg(),
                                               W.images())}};
    out.human << "  null homotopy:\n";
    print_images(out.human, "    H ", f->source()->alg(), W.cylinder().alg(), W.images());
  }
  int rc = o.status == NullhomotopyOutcome::Status::nullhomotopic ? 0
           : o.status == NullhomotopyOutcome::Status::refused      ? 1
                                                                   : 3;
  return out.finish(rc);
}

/* ---------------- list ---------------- */

int cmd_list(Workspace& ws, bool as_json) {
  Report out("list", as_json);
  json jm = json::array(), jf = json::array();
  auto add_model = [&](const ModelPtr& m, const std::string& origin) {
    jm.push_back({{"name", m->name()},
                  {"generators", m->alg().size()},
                  {"bound", m->bound()},
                  {"origin", origin}});
    out.human << "  " << m->name() << " (" << m->alg().size() << " generators, bound "
              << m->bound() << ")" << (origin == "catalog" ? "" : "  [" + origin + "]") << "\n";
  };
  auto add_map = [&](const MapPtr& f, const std::string& origin) {
    jf.push_back({{"name", f->name()},
                  {"source", f->source()->name()},
                  {"target", f->target()->name()},
                  {"origin", origin}});
    out.human << "  " << f->name() << " : " << f->source()->name() << " -> "
              << f->target()->name() << (origin == "catalog" ? "" : "  [" + origin + "]") << "\n";
  };
  out.human << "models\n";
  for (const auto& name : ws.catalog.model_names()) add_model(ws.catalog.model(name), "catalog");
  for (const auto& [path, doc] : ws.docs)
    for (const auto& m : doc.models) add_model(m, path);
  out.human << "maps\n";
  for (const auto& name : ws.catalog.map_names()) add_map(ws.catalog.map(name), "catalog");
  for (const auto& [path, doc] : ws.docs)
    for (const auto& f : doc.maps) add_map(f, path);
  out.j["models"] = jm;
  out.j["maps"] = jf;
  return out.finish(0);
}

/* ---------------- fixtures ---------------- */

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json manifest_to_json(const ModelManifest& mm) {
  json jd = json::object(), sph = json::object();
  for (const auto& [g, text] : mm.differentials) jd[g] = text;
  for (const auto& [n, dim] : mm.spherical) sph[std::to_string(n)] = dim;
  return {{"betti", mm.betti},
          {"euler", mm.euler ? json(*mm.euler) : json(nullptr)},
          {"cup_length", mm.cup_length},
          {"spherical", sph},
          {"differentials", jd}};
}

json manifest_to_json(const MapManifest& mm) {
  json ji = json::object();
  for (const auto& [g, text] : mm.images) ji[g] = text;
  return {{"source", mm.source}, {"target", mm.target}, {"images", ji}};
}

int cmd_fixtures_write(const Catalog& cat, bool as_json, const std::string& dir) {
  fs::create_directories(fs::path(dir) / "models");
  fs::create_directories(fs::path(dir) / "maps");
  auto put = [](const fs::path& p, const std::string& text) {
    std::ofstream outf(p);
    if (!outf) throw InputError("cannot write " + p.string());
    outf << text;
    if (text.empty() || text.back() != '\n') outf << "\n";
  };
  json manifests = {{"schema", "rht-fixtures/1"},
                    {"models", json::object()},
                    {"maps", json::object()}};
  for (const auto& name : cat.model_names()) {
    put(fs::path(dir) / "models" / (name + ".rht"), Catalog::model_text(name));
    manifests["models"][name] = manifest_to_json(cat.model_manifest(name));
  }
  for (const auto& name : cat.map_names()) {
    put(fs::path(dir) / "maps" / (name + ".rht"), Catalog::map_text(name));
    manifests["maps"][name] = manifest_to_json(cat.map_manifest(name));
  }
  put(fs::path(dir) / "manifests.json", manifests.dump(2));
  Report out("fixtures", as_json);
  out.j["mode"] = "write";
  out.j["directory"] = dir;
  out.j["models"] = cat.model_names().size();
  out.j["maps"] = cat.map_names().size();
  out.human << "wrote " << cat.model_names().size() << " models, " << cat.map_names().size()
            << " maps, and manifests.json under " << dir << "\n";
  return out.finish(0);
}

struct Issue {
  std::string fixture;
  std::string kind;  // io | parse | mismatch
  std::string message;
};

/* Structural comparison: names, degrees, attributes, and differentials as
 * polynomials (so formatting differences do not count, coefficient changes
 * do). `candidate` was parsed from a file, `pinned` is the embedded model. */
void compare_models(const Model& candidate, const Model& pinned, const std::string& fixture,
                    std::vector<Issue>& issues) {
  auto bad = [&](const std::string& msg) { issues.push_back({fixture, "mismatch", msg}); };
  if (candidate.alg().size() != pinned.alg().size()) {
    bad("generator count differs");
    return;
  }
  for (std::uint32_t i = 0; i < pinned.alg().size(); ++i) {
    if (candidate.alg().gen(i).name != pinned.alg().gen(i).name ||
        candidate.alg().gen(i).degree != pinned.alg().gen(i).degree) {
      bad("generator " + std::to_string(i) + " differs");
      return;
    }
  }
  if (candidate.bound() != pinned.bound()) bad("bound differs");
  if (candidate.cat0() != pinned.cat0()) bad("cat0 differs");
  if (candidate.top() != pinned.top()) bad("top differs");
  if (candidate.partial() != pinned.partial()) bad("partial flag differs");
  for (std::uint32_t i = 0; i < pinned.alg().size(); ++i) {
    // re-read the candidate's differential over the pinned algebra: the
    // generator lists agree, so the text is portable
    Polynomial carried =
        parse_polynomial(pinned.alg(), to_string(candidate.alg(), candidate.d_of(i)));
    if (!(carried == pinned.d_of(i)))
      bad("d(" + pinned.alg().gen(i).name + ") differs");
  }
}

void check_model_fixture(const Catalog& cat, const std::string& name, const fs::path& dir,
                         const json& manifests, std::vector<Issue>& issues) {
  fs::path file = dir / "models" / (name + ".rht");
  ModelPtr parsed;
  try {
    parsed = parse_model(slurp(file));
  } catch (const ParseError& e) {
    issues.push_back({name, "parse", e.what()});
    return;
  } catch (const Error& e) {
    issues.push_back({name, "io", e.what()});
    return;
  }
  ModelPtr pinned = cat.model(name);
  compare_models(*parsed, *pinned, name, issues);

  const ModelManifest& mm = cat.model_manifest(name);
  if (!manifests["models"].contains(name)) {
    issues.push_back({name, "mismatch", "missing from manifests.json"});
    return;
  }
  if (manifests["models"][name] != manifest_to_json(mm))
    issues.push_back({name, "mismatch", "manifests.json entry differs from the built-in pin"});

  // recompute every pinned quantity from the file copy
  Cohomology coh(parsed);
  std::vector<long> betti;
  for (int n = 0; n <= parsed->bound(); ++n) betti.push_back(coh.betti(n));
  if (betti != mm.betti) issues.push_back({name, "mismatch", "recomputed betti differ"});
  ModelInvariants inv = invariants(coh);
  std::optional<long> euler =
      inv.euler ? std::optional<long>(*inv.euler) : std::nullopt;
  if (euler != mm.euler) issues.push_back({name, "mismatch", "recomputed euler differs"});
  if (coh.cup_length(parsed->bound()) != mm.cup_length)
    issues.push_back({name, "mismatch", "recomputed cup length differs"});
  std::map<int, int> sph;
  if (parsed->is_minimal())
    for (int n = 1; n <= parsed->bound(); ++n)
      if (int s = coh.spherical_dim(n); s != 0) sph[n] = s;
  if (sph != mm.spherical) issues.push_back({name, "mismatch", "recomputed spherical dims differ"});
  for (const auto& [gen, text] : mm.differentials) {
    auto idx = parsed->alg().find(gen);
    if (!idx) {
      issues.push_back({name, "mismatch", "manifest names unknown generator " + gen});
      continue;
    }
    if (!(parse_polynomial(parsed->alg(), text) == parsed->d_of(*idx)))
      issues.push_back({name, "mismatch", "pinned differential of " + gen + " differs"});
  }
}

void check_map_fixture(const Catalog& cat, const std::string& name, const fs::path& dir,
                       const json& manifests, std::vector<Issue>& issues) {
  fs::path file = dir / "maps" / (name + ".rht");
  MapPtr parsed;
  try {
    parsed = parse_map(slurp(file), [&](const std::string& m) {
      return cat.has_model(m) ? cat.model(m) : nullptr;
    });
  } catch (const ParseError& e) {
    issues.push_back({name, "parse", e.what()});
    return;
  } catch (const Error& e) {
    issues.push_back({name, "io", e.what()});
    return;
  }
  MapPtr pinned = cat.map(name);
  if (parsed->source() != pinned->source() || parsed->target() != pinned->target()) {
    issues.push_back({name, "mismatch", "endpoints differ"});
    return;
  }
  for (std::uint32_t i = 0; i < parsed->source()->alg().size(); ++i)
    if (!(parsed->image_of(i) == pinned->image_of(i)))
      issues.push_back(
          {name, "mismatch", "image of " + parsed->source()->alg().gen(i).name + " differs"});
  if (!parsed->check_dg().ok)
    issues.push_back({name, "mismatch", "file copy is not a dg morphism"});

  const MapManifest& mm = cat.map_manifest(name);
  if (!manifests["maps"].contains(name)) {
    issues.push_back({name, "mismatch", "missing from manifests.json"});
    return;
  }
  if (manifests["maps"][name] != manifest_to_json(mm))
    issues.push_back({name, "mismatch", "manifests.json entry differs from the built-in pin"});
  if (mm.source != parsed->source()->name() || mm.target != parsed->target()->name())
    issues.push_back({name, "mismatch", "manifest endpoints differ"});
  for (const auto& [gen, text] : mm.images) {
    auto idx = parsed->source()->alg().find(gen);
    if (!idx) {
      issues.push_back({name, "mismatch", "manifest names unknown generator " + gen});
      continue;
    }
    if (!(parse_polynomial(parsed->target()->alg(), text) == parsed->image_of(*idx)))
      issues.push_back({name, "mismatch", "pinned image of " + gen + " differs"});
  }
}

int cmd_fixtures_selftest(const Catalog& cat, bool as_json, const std::string& dir) {
  std::vector<Issue> issues;
  json manifests;
  try {
    manifests = json::parse(slurp(fs::path(dir) / "manifests.json"));
  } catch (const json::exception& e) {
    issues.push_back({"manifests.json", "parse", e.what()});
  } catch (const Error& e) {
    issues.push_back({"manifests.json", "io", e.what()});
  }
  if (issues.empty() && (manifests.value("schema", "") != "rht-fixtures/1" ||
                         !manifests.contains("models") || !manifests.contains("maps")))
    issues.push_back({"manifests.json", "mismatch", "unexpected schema tag or layout"});
  if (issues.empty()) {
    for (const auto& name : cat.model_names())
      check_model_fixture(cat, name, dir, manifests, issues);
    for (const auto& name : cat.map_names())
      check_map_fixture(cat, name, dir, manifests, issues);
    // nothing extra should hide in the manifest
    for (const auto& item : manifests["models"].items())
      if (!cat.has_model(item.key()))
        issues.push_back({item.key(), "mismatch", "manifests.json lists an unknown model"});
    for (const auto& item : manifests["maps"].items())
      if (!cat.has_map(item.key()))
        issues.push_back({item.key(), "mismatch", "manifests.json lists an unknown map"});
  }

  Report out("fixtures", as_json);
  out.j["mode"] = "selftest";
  out.j["directory"] = dir;
  out.j["checked"] = cat.model_names().size() + cat.map_names().size();
  out.j["ok"] = issues.empty();
  json ji = json::array();
  bool hard = false;
  for (const auto& issue : issues) {
    ji.push_back({{"fixture", issue.fixture}, {"kind", issue.kind}, {"message", issue.message}});
    hard = hard || issue.kind != "mismatch";
    out.human << "  " << issue.kind << " " << issue.fixture << ": " << issue.message << "\n";
  }
  out.j["issues"] = ji;
  out.human << (issues.empty()
                    ? "fixtures match the built-in catalog (structure, manifests, recomputed invariants)\n"
                    : "fixture problems found\n");
  return out.finish(issues.empty() ? 0 : hard ? 2 : 1);
}

int emit_error(const std::string& cmd, bool as_json, const std::string& kind,
               const std::string& msg) {
  if (as_json) {
    json j = {{"schema", "rht-report/1"},
              {"command", cmd.empty() ? "?" : cmd},
              {"error", {{"kind", kind}, {"message", msg}}}};
    int rc = kind == "range" ? 3 : 2;
    j["exit"] = rc;
    std::cout << j.dump(2) << "\n";
    return rc;
  }
  std::cerr << "error: " << msg << "\n";
  return kind == "range" ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Sullivan-model calculator for rational homotopy invariants"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string format = "human";
  app.add_option("--input", inputs, "load models/maps from a .rht document (repeatable)")
      ->check(CLI::ExistingFile);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "structured"}));

  std::optional<Workspace> ws;
  auto workspace = [&]() -> Workspace& {
    if (!ws) {
      ws.emplace();
      for (const auto& p : inputs) ws->load(p);
    }
    return *ws;
  };
  auto as_json = [&]() { return format != "human"; };

  int rc = 0;
  std::string active;
  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* c_check = sub("check", "validate every block of the loaded documents");
  c_check->callback([&] { active = "check"; rc = cmd_check(workspace(), as_json()); });

  std::string coh_model;
  int coh_max = -1;
  CLI::App* c_coh = sub("cohomology", "Betti numbers and representatives, degree by degree");
  c_coh->add_option("--model", coh_model, "model name")->required();
  c_coh->add_option("--max-degree", coh_max, "highest degree to print (default: the bound)");
  c_coh->callback(
      [&] { active = "cohomology"; rc = cmd_cohomology(workspace(), as_json(), coh_model, coh_max); });

  std::string inv_model;
  CLI::App* c_inv = sub("invariants", "Euler characteristic, cup length, spherical classes, ...");
  c_inv->add_option("--model", inv_model, "model name")->required();
  c_inv->callback([&] { active = "invariants"; rc = cmd_invariants(workspace(), as_json(), inv_model); });

  std::string got_model;
  int got_degree = 0, got_cat0 = -1;
  CLI::App* c_got = sub("gottlieb", "rank of the degree-n Gottlieb group");
  c_got->add_option("--model", got_model, "model name")->required();
  c_got->add_option("--degree", got_degree, "homotopy degree n")->required();
  c_got->add_option("--cat0", got_cat0, "category bound override");
  c_got->callback([&] {
    active = "gottlieb";
    rc = cmd_gottlieb(workspace(), as_json(), got_model, got_degree, got_cat0);
  });

  std::string mc_map;
  CLI::App* c_mc = sub("map-check", "degree and dg verification for one map");
  c_mc->add_option("--map", mc_map, "map name")->required();
  c_mc->callback([&] { active = "map-check"; rc = cmd_map_check(workspace(), as_json(), mc_map); });

  std::string ho_f, ho_g;
  int ho_cap = -1;
  CLI::App* c_ho = sub("homotopic", "decide whether two maps are homotopic");
  c_ho->add_option("--f", ho_f, "first map")->required();
  c_ho->add_option("--g", ho_g, "second map")->required();
  c_ho->add_option("--t-cap", ho_cap, "cap on the cylinder t-degree");
  c_ho->callback(
      [&] { active = "homotopic"; rc = cmd_homotopic(workspace(), as_json(), ho_f, ho_g, ho_cap); });

  std::string bat_map;
  int bat_cat0 = -1;
  CLI::App* c_bat = sub("battery", "necessary conditions for a map to be cyclic");
  c_bat->add_option("--map", bat_map, "map name")->required();
  c_bat->add_option("--cat0", bat_cat0, "category bound override for the target space");
  c_bat->callback(
      [&] { active = "battery"; rc = cmd_battery(workspace(), as_json(), bat_map, bat_cat0); });

  std::string cls_src, cls_tgt;
  CLI::App* c_cls = sub("classify", "classify cyclic maps source -> target up to homotopy");
  c_cls->add_option("--source", cls_src, "source space model (the mapping space domain)")
      ->required();
  c_cls->add_option("--target", cls_tgt, "target space model")->required();
  c_cls->callback(
      [&] { active = "classify"; rc = cmd_classify(workspace(), as_json(), cls_src, cls_tgt); });

  std::string nh_f, nh_ft, nh_g;
  int nh_kmax = 6;
  CLI::App* c_nh = sub("nullhomotopy", "null-homotopy through a zero-differential intermediate");
  c_nh->add_option("--f", nh_f, "the map to null-homotope")->required();
  c_nh->add_option("--ftilde", nh_ft, "second factor (intermediate -> target of f)")->required();
  c_nh->add_option("--g", nh_g, "first factor (source of f -> intermediate)")->required();
  c_nh->add_option("--k-max", nh_kmax, "largest power tried for power witnesses");
  c_nh->callback([&] {
    active = "nullhomotopy";
    rc = cmd_nullhomotopy(workspace(), as_json(), nh_f, nh_ft, nh_g, nh_kmax);
  });

  CLI::App* c_list = sub("list", "list the models and maps that names resolve to");
  c_list->callback([&] { active = "list"; rc = cmd_list(workspace(), as_json()); });

  bool fx_selftest = false, fx_write = false;
  std::string fx_dir;
  CLI::App* c_fx = sub("fixtures", "write or verify the on-disk fixture set");
  c_fx->add_flag("--selftest", fx_selftest, "parse the fixture files and re-derive the manifests");
  c_fx->add_flag("--write", fx_write, "emit the fixture files from the built-in catalog");
  c_fx->add_option("--dir", fx_dir, "fixture directory (default: $RHT_FIXTURES or fixtures/v1)");
  c_fx->callback([&] {
    active = "fixtures";
    if (fx_dir.empty()) {
      const char* env = std::getenv("RHT_FIXTURES");
      fx_dir = env && *env ? env : "fixtures/v1";
    }
    if (fx_selftest == fx_write)
      throw InputError("fixtures: pass exactly one of --selftest and --write");
    Catalog cat;
    rc = fx_write ? cmd_fixtures_write(cat, as_json(), fx_dir)
                  : cmd_fixtures_selftest(cat, as_json(), fx_dir);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    return emit_error(active, format != "human", "parse", e.what());
  } catch (const RangeError& e) {
    return emit_error(active, format != "human", "range", e.what());
  } catch (const InputError& e) {
    return emit_error(active, format != "human", "input", e.what());
  } catch (const Error& e) {
    return emit_error(active, format != "human", "internal", e.what());
  }
  return rc;
}
