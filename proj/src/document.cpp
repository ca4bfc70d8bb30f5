#include "germinv/document.hpp"

#include <cctype>

#include "germinv/parser.hpp"

namespace germinv {

namespace {

constexpr const char* kReserved[] = {"t", "s"};

bool is_reserved(const std::string& name) {
  for (const char* r : kReserved)
    if (name == r) return true;
  return false;
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        get();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  bool try_char(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    get();
    return true;
  }

  void expect(char c, const std::string& context) {
    skip_ws();
    if (eof() || peek() != c)
      throw ParseError("expected '" + std::string(1, c) + "' " + context, line, col);
    get();
  }

  std::string ident(const std::string& what) {
    skip_ws();
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek()))))
      throw ParseError("expected " + what, line, col);
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      out += get();
    return out;
  }

  long integer(const std::string& what) {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected " + what, line, col);
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (get() - '0');
    return v;
  }

  struct Slice {
    std::string text;
    int line, col;
  };

  // Raw text up to (not consuming) one of the stop characters at paren
  // depth 0. Comments inside are blanked so positions stay verbatim.
  Slice until(const std::string& stops) {
    skip_ws();
    Slice s{"", line, col};
    int depth = 0;
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') {
          get();
          s.text += ' ';
        }
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) {
          if (stops.find(')') != std::string::npos) break;
          throw ParseError("unbalanced ')'", line, col);
        }
        --depth;
      }
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      s.text += get();
    }
    if (eof()) throw ParseError("unterminated statement; expected ';'", line, col);
    return s;
  }
};

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Rational parse_rational_slice(const Cursor::Slice& s, const std::string& what) {
  std::string t = trimmed(s.text);
  try {
    return Rational::from_string(t);
  } catch (const MathError&) {
    throw ParseError("invalid " + what + " '" + t + "'", s.line, s.col);
  }
}

class DocParser {
 public:
  explicit DocParser(const std::string& text) : cur_{text} {}

  Document run() {
    doc_.arc_ring = make_ring({"s"});
    for (;;) {
      cur_.skip_ws();
      if (cur_.eof()) break;
      int kw_line = cur_.line, kw_col = cur_.col;
      std::string kw = cur_.ident("a statement keyword");
      if (kw == "ring")
        stmt_ring(kw_line, kw_col);
      else if (kw == "param")
        stmt_param();
      else if (kw == "weights")
        stmt_weights(kw_line, kw_col);
      else if (kw == "poly")
        stmt_poly();
      else if (kw == "vfield")
        stmt_vfield();
      else if (kw == "variety")
        stmt_variety();
      else if (kw == "deform")
        stmt_deform();
      else if (kw == "arc")
        stmt_arc();
      else if (kw == "samples")
        stmt_samples();
      else
        throw ParseError("unknown statement '" + kw + "'", kw_line, kw_col);
    }
    return std::move(doc_);
  }

 private:
  Cursor cur_;
  Document doc_;
  std::set<std::string> names_;

  void require_ring(const std::string& context) {
    if (!doc_.ring)
      throw ParseError("'" + context + "' needs a ring declaration first",
                       cur_.line, cur_.col);
  }

  std::string declare(const std::string& what) {
    int l = cur_.line, c = cur_.col;
    std::string name = cur_.ident(what + " name");
    if (is_reserved(name))
      throw ParseError("'" + name + "' is a reserved name", l, c);
    if (names_.count(name))
      throw ParseError("duplicate name '" + name + "'", l, c);
    names_.insert(name);
    return name;
  }

  Polynomial parse_expr_slice(const Cursor::Slice& s, const RingPtr& ring) {
    return parse_expression(s.text, ring, doc_.params, doc_.deferred_params,
                            s.line, s.col);
  }

  // Parses an expression that may reference a deferred parameter; in that
  // case records the object as unavailable and returns nullopt.
  std::optional<Polynomial> parse_maybe_deferred(const Cursor::Slice& s,
                                                 const RingPtr& ring,
                                                 const std::string& name) {
    try {
      return parse_expr_slice(s, ring);
    } catch (const MathError& e) {
      doc_.unavailable[name] = e.what();
      return std::nullopt;
    }
  }

  void stmt_ring(int l, int c) {
    if (doc_.ring) throw ParseError("duplicate ring declaration", l, c);
    std::vector<std::string> vars;
    do {
      vars.push_back(declare("variable"));
    } while (cur_.try_char(','));
    cur_.expect(';', "after ring declaration");
    doc_.ring = make_ring(vars);
    vars.push_back("t");
    doc_.xt_ring = make_ring(vars);
  }

  void stmt_param() {
    std::string name = declare("parameter");
    if (cur_.try_char('=')) {
      auto s = cur_.until(";");
      doc_.params[name] = parse_rational_slice(s, "parameter value");
    } else {
      doc_.deferred_params.insert(name);
    }
    cur_.expect(';', "after parameter");
  }

  void stmt_weights(int l, int c) {
    require_ring("weights");
    if (doc_.weights) throw ParseError("duplicate weights declaration", l, c);
    WeightSystem w;
    do {
      int wl = cur_.line, wc = cur_.col;
      long v = cur_.integer("a positive weight");
      if (v < 1) throw ParseError("weights must be at least 1", wl, wc);
      w.weights.push_back(v);
    } while (cur_.try_char(','));
    cur_.expect(';', "after weights");
    if (w.weights.size() != doc_.ring->nvars())
      throw ParseError("expected one weight per ring variable", l, c);
    doc_.weights = w;
  }

  void stmt_poly() {
    require_ring("poly");
    std::string name = declare("polynomial");
    cur_.expect('=', "after polynomial name");
    auto s = cur_.until(";");
    cur_.expect(';', "after polynomial");
    if (auto p = parse_maybe_deferred(s, doc_.ring, name))
      doc_.polys.emplace(name, std::move(*p));
  }

  void stmt_vfield() {
    require_ring("vfield");
    std::string name = declare("vector field");
    cur_.expect('=', "after vector field name");
    cur_.expect('(', "before vector field components");
    VectorField vf;
    bool deferred = false;
    do {
      auto s = cur_.until(",)");
      if (auto p = parse_maybe_deferred(s, doc_.ring, name))
        vf.components.push_back(std::move(*p));
      else
        deferred = true;
    } while (cur_.try_char(','));
    cur_.expect(')', "after vector field components");
    cur_.expect(';', "after vector field");
    if (deferred) return;
    if (vf.components.size() != doc_.ring->nvars())
      throw ParseError("vector field needs one component per ring variable",
                       cur_.line, cur_.col);
    doc_.vfields.emplace(name, std::move(vf));
  }

  std::string resolved_reference(const std::string& what,
                                 const std::map<std::string, Polynomial>& pool_a,
                                 const std::map<std::string, VectorField>* pool_b) {
    int l = cur_.line, c = cur_.col;
    std::string name = cur_.ident(what + " name");
    bool known = pool_a.count(name) || doc_.unavailable.count(name) ||
                 (pool_b && pool_b->count(name));
    if (!known)
      throw ParseError("unresolved reference '" + name + "'", l, c);
    return name;
  }

  void stmt_variety() {
    require_ring("variety");
    std::string name = declare("variety");
    cur_.expect('=', "after variety name");
    DocVariety v;
    if (cur_.try_char('(')) {
      do {
        v.equations.push_back(resolved_reference("equation", doc_.polys, nullptr));
      } while (cur_.try_char(','));
      cur_.expect(')', "after equation list");
    } else {
      v.equations.push_back(resolved_reference("equation", doc_.polys, nullptr));
    }
    std::string kw = cur_.ident("'with'");
    if (kw != "with")
      throw ParseError("expected 'with' between equations and vector fields",
                       cur_.line, cur_.col);
    do {
      v.fields.push_back(resolved_reference("vector field", {}, &doc_.vfields));
    } while (cur_.try_char(','));
    cur_.expect(';', "after variety");
    doc_.varieties.emplace(name, std::move(v));
  }

  void stmt_deform() {
    require_ring("deform");
    std::string name = declare("deformation");
    cur_.expect('=', "after deformation name");
    auto s = cur_.until(";");
    cur_.expect(';', "after deformation");
    if (auto p = parse_maybe_deferred(s, doc_.xt_ring, name)) {
      make_deformation(*p);  // invariant check: F(0, t) = 0
      doc_.deforms.emplace(name, std::move(*p));
    }
  }

  void stmt_arc() {
    require_ring("arc");
    std::string name = declare("arc");
    cur_.expect('=', "after arc name");
    cur_.expect('(', "before arc components");
    DocArc arc;
    bool deferred = false;
    do {
      auto s = cur_.until(",)");
      if (auto p = parse_maybe_deferred(s, doc_.arc_ring, name))
        arc.components.push_back(std::move(*p));
      else
        deferred = true;
    } while (cur_.try_char(','));
    cur_.expect(')', "after arc components");
    cur_.skip_ws();
    if (!cur_.eof() && std::isalpha(static_cast<unsigned char>(cur_.peek()))) {
      int l = cur_.line, c = cur_.col;
      std::string kw = cur_.ident("'trunc'");
      if (kw != "trunc") throw ParseError("expected 'trunc' or ';'", l, c);
      long v = cur_.integer("a truncation bound");
      if (v < 1) throw ParseError("truncation bound must be at least 1", l, c);
      arc.trunc = v;
    }
    cur_.expect(';', "after arc");
    if (deferred) return;
    for (const auto& comp : arc.components)
      if (!comp.constant_term().is_zero())
        throw MathError("arc component has a constant term; arcs pass through the origin");
    doc_.arc_order.push_back(name);
    doc_.arcs.emplace(name, std::move(arc));
  }

  void stmt_samples() {
    std::string name = declare("sample set");
    cur_.expect('=', "after sample set name");
    std::vector<Rational> vals;
    do {
      auto s = cur_.until(",;");
      vals.push_back(parse_rational_slice(s, "sample value"));
    } while (cur_.try_char(','));
    cur_.expect(';', "after sample set");
    doc_.sampleset_order.push_back(name);
    doc_.samplesets.emplace(name, make_sample_set(std::move(vals)));
  }
};

[[noreturn]] void fail_lookup(const Document& d, const std::string& name,
                              const std::string& wanted) {
  auto it = d.unavailable.find(name);
  if (it != d.unavailable.end()) throw MathError(it->second);
  bool exists = d.polys.count(name) || d.vfields.count(name) ||
                d.varieties.count(name) || d.deforms.count(name) ||
                d.arcs.count(name) || d.samplesets.count(name);
  if (exists)
    throw UsageError("'" + name + "' is not " + wanted);
  throw UsageError("unknown name '" + name + "'");
}

}  // namespace

Document parse_document(const std::string& text) {
  return DocParser(text).run();
}

const Polynomial& doc_poly(const Document& d, const std::string& name) {
  auto it = d.polys.find(name);
  if (it == d.polys.end()) fail_lookup(d, name, "a polynomial");
  return it->second;
}

VectorField doc_vfield(const Document& d, const std::string& name) {
  auto it = d.vfields.find(name);
  if (it == d.vfields.end()) fail_lookup(d, name, "a vector field");
  return it->second;
}

VarietyGerm doc_variety(const Document& d, const std::string& name) {
  auto it = d.varieties.find(name);
  if (it == d.varieties.end()) fail_lookup(d, name, "a variety");
  VarietyGerm v;
  for (const auto& eq : it->second.equations) v.equations.push_back(doc_poly(d, eq));
  for (const auto& f : it->second.fields) v.theta.push_back(doc_vfield(d, f));
  return v;
}

Deformation doc_deformation(const Document& d, const std::string& name) {
  auto it = d.deforms.find(name);
  if (it == d.deforms.end()) fail_lookup(d, name, "a deformation");
  return make_deformation(it->second);
}

Arc doc_arc(const Document& d, const std::string& name, long default_trunc) {
  auto it = d.arcs.find(name);
  if (it == d.arcs.end()) fail_lookup(d, name, "an arc");
  long trunc = it->second.trunc.value_or(default_trunc);
  std::vector<TruncatedSeries> parts;
  parts.reserve(it->second.components.size());
  for (const auto& comp : it->second.components)
    parts.push_back(TruncatedSeries::from_polynomial(comp, trunc));
  return make_arc(std::move(parts));
}

SampleSet doc_samples(const Document& d, const std::string& name) {
  auto it = d.samplesets.find(name);
  if (it == d.samplesets.end()) fail_lookup(d, name, "a sample set");
  return it->second;
}

}  // namespace germinv
