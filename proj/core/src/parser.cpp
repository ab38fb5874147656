#include "rht/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "rht/errors.hpp"

namespace rht {

namespace {

struct Token {
  enum class Kind { ident, number, sym, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      t.kind = Token::Kind::ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::number;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Token::Kind::sym;
      t.text = "->";
      advance(2);
    } else if (std::string("{}:;=^*+-/,").find(c) != std::string::npos) {
      t.kind = Token::Kind::sym;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
public:
  Parser(std::string text, const ModelResolver& resolve)
      : toks_(tokenize(text)), resolve_(resolve) {}

  ParsedDocument document() {
    ParsedDocument doc;
    while (!at_end()) {
      if (at_ident("model")) {
        doc.models.push_back(model_block());
      } else if (at_ident("map") || at_ident("modelmap")) {
        doc.maps.push_back(map_block(doc));
      } else if (at_ident("homotopy")) {
        doc.homotopies.push_back(homotopy_block(doc));
      } else {
        fail("expected 'model', 'map', 'modelmap', or 'homotopy'");
      }
    }
    return doc;
  }

  Polynomial bare_polynomial(const Algebra& alg) {
    Polynomial p = polynomial(alg);
    if (!at_end()) fail("trailing input after the polynomial");
    return p;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ModelResolver resolve_;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t j = pos_ + ahead;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::Kind::end) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Kind::sym && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Token::Kind::ident && peek().text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    ++pos_;
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Token::Kind::ident) fail("expected " + what);
    return next().text;
  }
  int integer(const std::string& what) {
    if (peek().kind != Token::Kind::number) fail("expected " + what);
    return std::stoi(next().text);
  }
  /* entries are ';'-separated; a trailing separator before '}' is fine */
  void entry_end() {
    if (at_sym(";")) {
      ++pos_;
      return;
    }
    if (at_sym("}")) return;
    fail("expected ';' or '}'");
  }

  Rational coefficient_token() {
    const Token& first = peek();
    std::string num = next().text;
    if (at_sym("/")) {
      ++pos_;
      if (peek().kind != Token::Kind::number) fail("expected a denominator");
      num += "/" + next().text;
    }
    try {
      return parse_rational(num);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(e.what(), first.line, first.col);
    }
  }

  /* factor ('*' factor)*, names resolved in alg */
  void monomial_word(const Algebra& alg, std::vector<std::uint32_t>& word) {
    while (true) {
      const Token& t = peek();
      std::string name = ident("a generator name");
      auto g = alg.find(name);
      if (!g) throw ParseError("unknown generator '" + name + "'", t.line, t.col);
      std::uint32_t e = 1;
      if (at_sym("^")) {
        ++pos_;
        int v = integer("an exponent");
        if (v < 1) fail("exponent must be positive");
        e = static_cast<std::uint32_t>(v);
      }
      for (std::uint32_t j = 0; j < e; ++j) word.push_back(*g);
      if (!at_sym("*")) return;
      ++pos_;
    }
  }

  Polynomial polynomial(const Algebra& alg) {
    Polynomial acc = Polynomial::zero(alg);
    bool first = true;
    while (true) {
      Rational sign(1);
      if (at_sym("-")) {
        sign = -1;
        ++pos_;
      } else if (at_sym("+")) {
        if (first) fail("a polynomial cannot start with '+'");
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Rational coeff(1);
      bool have_word = true;
      if (peek().kind == Token::Kind::number) {
        coeff = coefficient_token();
        have_word = false;
        if (at_sym("*")) {
          ++pos_;
          have_word = true;
        }
      }
      if (have_word) {
        std::vector<std::uint32_t> word;
        monomial_word(alg, word);
        SignedMonomial sm = normalize_word(alg, word);
        if (sm.sign != 0) acc.add_term(sm.mono, coeff * sign * sm.sign);
      } else if (coeff != 0) {
        acc.add_term(Monomial::unit(), coeff * sign);
      }
      first = false;
    }
  }

  ModelPtr model_block() {
    ++pos_;  // 'model'
    std::string name = ident("a model name");
    expect_sym("{");
    std::vector<Generator> gens;
    struct DEntry {
      std::string gen;
      int line, col;
      std::size_t tok;  // where the polynomial starts
    };
    std::vector<DEntry> dents;
    std::optional<int> bound;
    ModelAttrs attrs;
    while (!at_sym("}")) {
      if (at_ident("gen")) {
        ++pos_;
        std::string g = ident("a generator name");
        expect_sym(":");
        gens.push_back({g, integer("a degree")});
      } else if (at_ident("d")) {
        ++pos_;
        const Token& t = peek();
        std::string g = ident("a generator name");
        expect_sym("=");
        dents.push_back({g, t.line, t.col, pos_});
        /* skip the polynomial for now; generators may be declared later */
        while (!at_sym(";") && !at_sym("}") && !at_end()) ++pos_;
      } else if (at_ident("bound")) {
        const Token& t = peek();
        ++pos_;
        if (bound) throw ParseError("duplicate 'bound'", t.line, t.col);
        bound = integer("a bound");
      } else if (at_ident("cat0")) {
        const Token& t = peek();
        ++pos_;
        if (attrs.cat0) throw ParseError("duplicate 'cat0'", t.line, t.col);
        attrs.cat0 = integer("a category bound");
      } else if (at_ident("top")) {
        const Token& t = peek();
        ++pos_;
        if (attrs.top) throw ParseError("duplicate 'top'", t.line, t.col);
        attrs.top = integer("a top degree");
      } else if (at_ident("partial")) {
        ++pos_;
        attrs.partial = true;
      } else {
        fail("expected 'gen', 'd', 'bound', 'cat0', 'top', or 'partial'");
      }
      entry_end();
    }
    expect_sym("}");

    int max_deg = 0;
    for (const auto& g : gens) max_deg = std::max(max_deg, g.degree);
    AlgebraPtr alg = Algebra::make(gens, bound.value_or(max_deg));
    std::vector<Polynomial> d_images(alg->size(), Polynomial::zero(*alg));
    std::vector<bool> seen(alg->size(), false);
    std::size_t after = pos_;
    for (const auto& e : dents) {
      auto g = alg->find(e.gen);
      if (!g) throw ParseError("unknown generator '" + e.gen + "'", e.line, e.col);
      if (seen[*g])
        throw ParseError("duplicate differential for '" + e.gen + "'", e.line, e.col);
      seen[*g] = true;
      pos_ = e.tok;
      d_images[*g] = polynomial(*alg);
    }
    pos_ = after;
    return Model::make(std::move(name), std::move(alg), std::move(d_images), attrs);
  }

  ModelPtr resolve_model(const ParsedDocument& doc, const std::string& name, const Token& at) {
    for (const auto& m : doc.models)
      if (m->name() == name) return m;
    if (resolve_)
      if (ModelPtr m = resolve_(name)) return m;
    throw ParseError("unknown model '" + name + "'", at.line, at.col);
  }

  /* 'map f : A -> B { ... }' or 'modelmap f from A to B { ... }' */
  std::pair<ModelPtr, ModelPtr> endpoints(const ParsedDocument& doc) {
    ModelPtr src, tgt;
    if (at_sym(":")) {
      ++pos_;
      const Token& t1 = peek();
      src = resolve_model(doc, ident("a model name"), t1);
      expect_sym("->");
      const Token& t2 = peek();
      tgt = resolve_model(doc, ident("a model name"), t2);
    } else if (at_ident("from")) {
      ++pos_;
      const Token& t1 = peek();
      src = resolve_model(doc, ident("a model name"), t1);
      if (!at_ident("to")) fail("expected 'to'");
      ++pos_;
      const Token& t2 = peek();
      tgt = resolve_model(doc, ident("a model name"), t2);
    } else {
      fail("expected ':' or 'from'");
    }
    return {src, tgt};
  }

  MapPtr map_block(const ParsedDocument& doc) {
    ++pos_;  // 'map' / 'modelmap'
    std::string name = ident("a map name");
    auto [src, tgt] = endpoints(doc);
    expect_sym("{");
    std::vector<Polynomial> images(src->alg().size(), Polynomial::zero(tgt->alg()));
    std::vector<bool> seen(src->alg().size(), false);
    while (!at_sym("}")) {
      const Token& t = peek();
      std::string g = ident("a generator name");
      auto idx = src->alg().find(g);
      if (!idx) throw ParseError("unknown generator '" + g + "'", t.line, t.col);
      if (seen[*idx]) throw ParseError("duplicate image for '" + g + "'", t.line, t.col);
      seen[*idx] = true;
      expect_sym("->");
      images[*idx] = polynomial(tgt->alg());
      entry_end();
    }
    expect_sym("}");
    /* unchecked on purpose: broken morphism data stays loadable so the dg
     * check can report on it */
    return ModelMap::make_unchecked(std::move(name), src, tgt, std::move(images));
  }

  Homotopy homotopy_block(const ParsedDocument& doc) {
    ++pos_;  // 'homotopy'
    std::string name = ident("a homotopy name");
    auto [src, tgt] = endpoints(doc);
    Cylinder cyl(tgt);
    expect_sym("{");
    std::vector<Polynomial> images(src->alg().size(), Polynomial::zero(cyl.alg()));
    std::vector<bool> seen(src->alg().size(), false);
    while (!at_sym("}")) {
      const Token& t = peek();
      std::string g = ident("a generator name");
      auto idx = src->alg().find(g);
      if (!idx) throw ParseError("unknown generator '" + g + "'", t.line, t.col);
      if (seen[*idx]) throw ParseError("duplicate image for '" + g + "'", t.line, t.col);
      seen[*idx] = true;
      expect_sym("->");
      images[*idx] = polynomial(cyl.alg());
      entry_end();
    }
    expect_sym("}");
    return Homotopy(std::move(name), src, std::move(cyl), std::move(images));
  }
};

}  // namespace

ModelPtr ParsedDocument::model(const std::string& name) const {
  for (const auto& m : models)
    if (m->name() == name) return m;
  throw InputError("no model named '" + name + "' in the document");
}

MapPtr ParsedDocument::map(const std::string& name) const {
  for (const auto& f : maps)
    if (f->name() == name) return f;
  throw InputError("no map named '" + name + "' in the document");
}

ParsedDocument parse_document(const std::string& text, const ModelResolver& resolve) {
  return Parser(text, resolve).document();
}

ModelPtr parse_model(const std::string& text) {
  ParsedDocument doc = parse_document(text);
  if (doc.models.size() != 1 || !doc.maps.empty() || !doc.homotopies.empty())
    throw InputError("expected exactly one model block");
  return doc.models.front();
}

MapPtr parse_map(const std::string& text, const ModelResolver& resolve) {
  ParsedDocument doc = parse_document(text, resolve);
  if (doc.maps.size() != 1) throw InputError("expected exactly one map block");
  return doc.maps.front();
}

Polynomial parse_polynomial(const Algebra& alg, const std::string& text) {
  return Parser(text, {}).bare_polynomial(alg);
}

std::string write_model(const Model& m) {
  std::ostringstream out;
  out << "model " << m.name() << " {\n";
  for (std::uint32_t i = 0; i < m.alg().size(); ++i)
    out << "  gen " << m.alg().gen(i).name << " : " << m.alg().gen(i).degree << " ;\n";
  for (std::uint32_t i = 0; i < m.alg().size(); ++i)
    out << "  d " << m.alg().gen(i).name << " = " << to_string(m.alg(), m.d_of(i)) << " ;\n";
  out << "  bound " << m.bound() << " ;\n";
  if (m.cat0()) out << "  cat0 " << *m.cat0() << " ;\n";
  if (m.top()) out << "  top " << *m.top() << " ;\n";
  if (m.partial()) out << "  partial ;\n";
  out << "}\n";
  return out.str();
}

std::string write_map(const ModelMap& f) {
  std::ostringstream out;
  out << "map " << f.name() << " : " << f.source()->name() << " -> " << f.target()->name()
      << " {\n";
  for (std::uint32_t i = 0; i < f.source()->alg().size(); ++i)
    out << "  " << f.source()->alg().gen(i).name << " -> "
        << to_string(f.target()->alg(), f.image_of(i)) << " ;\n";
  out << "}\n";
  return out.str();
}

}  // namespace rht
