#include "silting/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace silting {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  int col() const { return static_cast<int>(pos) + 1; }
  bool eol() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, static_cast<int>(pos) + 1);
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      std::size_t after = pos + w.size();
      if (after >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[after])) ||
                                 s[after] == '_' || s[after] == '-')) {
        pos = after;
        return true;
      }
    }
    return false;
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '-' || s[pos] == '.'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                              ((s[pos] == '-' || s[pos] == '+') && pos + 1 < s.size() &&
                               std::isdigit(static_cast<unsigned char>(s[pos + 1]))));
  }
};

std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    out.emplace_back(n, line);
  }
  return out;
}

// a path written name(*name)* or e<vertex>; returns the path
Path parse_path(Cursor& c, const Quiver& q) {
  std::string first = c.token();
  if (!first.empty() && first[0] == 'e' && q.arrow_index(first) < 0) {
    int v = q.vertex_index(first.substr(1));
    if (v < 0) c.fail("unknown vertex in trivial path: " + first);
    return Path{v, {}};
  }
  Path p;
  int a = q.arrow_index(first);
  if (a < 0) c.fail("unknown arrow: " + first);
  p.source = q.arrows[static_cast<std::size_t>(a)].src;
  p.word.push_back(a);
  while (c.eat('*')) {
    std::string nm = c.token();
    int b = q.arrow_index(nm);
    if (b < 0) c.fail("unknown arrow: " + nm);
    p.word.push_back(b);
  }
  if (!p.composable_in(q)) c.fail("path arrows do not compose");
  return p;
}

// <coef>? path (+ <coef>? path)*  with optional leading sign per term
LinComb parse_lincomb(Cursor& c, const Quiver& q) {
  LinComb comb;
  bool first = true;
  while (true) {
    Fp coef(1);
    if (!first) {
      if (c.eat('+')) {
      } else if (c.eat('-')) {
        coef = Fp(-1);
      } else {
        break;
      }
    } else if (c.eat('-')) {
      coef = Fp(-1);
    }
    if (c.at_digit()) coef = coef * Fp(c.integer());
    c.eat('*');  // allow 2*a*b as well as 2 a*b
    Path p = parse_path(c, q);
    comb.emplace_back(coef, p);
    first = false;
    if (c.eol()) break;
  }
  return comb;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedAlgebra parse_algebra_text(const std::string& text) {
  ParsedAlgebra out;
  Quiver q;
  struct PendingRelation {
    int line;
    std::string rest;
  };
  std::vector<PendingRelation> pending;
  bool have_vertices = false;
  for (auto& [n, raw] : logical_lines(text)) {
    Cursor c{raw, n};
    if (c.eol()) continue;
    if (c.eat_word("field")) {
      long long p = c.integer();
      if (p < 2 || !is_prime(static_cast<std::uint32_t>(p)))
        c.fail("field modulus must be a prime");
      out.field = static_cast<std::uint32_t>(p);
      if (out.field != Fp::modulus())
        Fp::set_modulus(out.field);
    } else if (c.eat_word("vertices")) {
      while (!c.eol()) q.vertex_names.push_back(c.token());
      have_vertices = true;
    } else if (c.eat_word("arrow")) {
      std::string name = c.token();
      c.expect(':');
      std::string src = c.token();
      c.expect('-');
      c.expect('>');
      std::string tgt = c.token();
      int s = q.vertex_index(src), t = q.vertex_index(tgt);
      if (s < 0) c.fail("unknown vertex: " + src);
      if (t < 0) c.fail("unknown vertex: " + tgt);
      q.arrows.push_back({name, s, t});
    } else if (c.eat_word("relation")) {
      c.skip_ws();
      pending.push_back({n, raw.substr(c.pos)});
      c.pos = raw.size();  // consumed later by the lincomb parser
    } else {
      c.fail("unknown directive");
    }
    if (!c.eol() && !raw.empty()) {
      // trailing garbage after a directive
      Cursor t{raw, n};
      t.pos = c.pos;
      if (!t.eol()) t.fail("trailing input after directive");
    }
  }
  if (!have_vertices)
    throw ParseError("missing vertices directive", 1, 1);
  std::vector<LinComb> rels;
  for (const auto& pr : pending) {
    Cursor c{pr.rest, pr.line};
    LinComb comb = parse_lincomb(c, q);
    for (const auto& [coef, p] : comb)
      if (p.length() < 2)
        c.fail("relation terms must be paths of length at least 2");
    rels.push_back(comb);
  }
  out.algebra = BoundQuiverAlgebra::build(q, rels);
  return out;
}

ParsedAlgebra parse_algebra_file(const std::string& path) {
  return parse_algebra_text(read_file(path));
}

ParsedModule parse_module_text(const std::string& text,
                               const AlgebraResolver& resolve) {
  ParsedModule out;
  std::vector<std::pair<int, int>> dim_decl;  // vertex, dim
  struct MapDecl {
    int line;
    std::string arrow;
    std::vector<std::vector<long long>> rows;
  };
  std::vector<MapDecl> maps;
  for (auto& [n, raw] : logical_lines(text)) {
    Cursor c{raw, n};
    if (c.eol()) continue;
    if (c.eat_word("module")) {
      out.name = c.token();
      if (!c.eat_word("over")) c.fail("expected 'over'");
      out.algebra_name = c.token();
      out.rep.alg = resolve(out.algebra_name);
      if (!out.rep.alg) c.fail("unknown algebra: " + out.algebra_name);
    } else if (c.eat_word("dims")) {
      if (!out.rep.alg) c.fail("dims before module header");
      while (!c.eol()) {
        std::string v = c.token();
        c.expect(':');
        long long d = c.integer();
        int vi = out.rep.alg->quiver().vertex_index(v);
        if (vi < 0) c.fail("unknown vertex: " + v);
        if (d < 0) c.fail("negative dimension");
        dim_decl.emplace_back(vi, static_cast<int>(d));
      }
    } else if (c.eat_word("map")) {
      if (!out.rep.alg) c.fail("map before module header");
      MapDecl md;
      md.line = n;
      md.arrow = c.token();
      c.expect('=');
      c.expect('[');
      if (!c.eat(']')) {
        do {
          c.expect('[');
          std::vector<long long> row;
          if (!c.eat(']')) {
            do {
              row.push_back(c.integer());
            } while (c.eat(','));
            c.expect(']');
          }
          md.rows.push_back(row);
        } while (c.eat(','));
        c.expect(']');
      }
      maps.push_back(std::move(md));
    } else {
      c.fail("unknown directive");
    }
  }
  if (!out.rep.alg) throw ParseError("missing module header", 1, 1);
  const Quiver& q = out.rep.alg->quiver();
  out.rep.dims.assign(static_cast<std::size_t>(q.num_vertices()), 0);
  for (auto [v, d] : dim_decl) out.rep.dims[static_cast<std::size_t>(v)] = d;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    out.rep.maps.emplace_back(
        Mat::Zero(out.rep.dims[static_cast<std::size_t>(ar.tgt)],
                  out.rep.dims[static_cast<std::size_t>(ar.src)]));
  }
  for (const auto& md : maps) {
    int a = q.arrow_index(md.arrow);
    if (a < 0) throw ParseError("unknown arrow: " + md.arrow, md.line, 1);
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    Index rows = out.rep.dims[static_cast<std::size_t>(ar.tgt)];
    Index cols = out.rep.dims[static_cast<std::size_t>(ar.src)];
    if (static_cast<Index>(md.rows.size()) != rows)
      throw ParseError("map " + md.arrow + " has wrong row count", md.line, 1);
    Mat m = Mat::Zero(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      if (static_cast<Index>(md.rows[static_cast<std::size_t>(i)].size()) !=
          cols)
        throw ParseError("map " + md.arrow + " has wrong column count",
                         md.line, 1);
      for (Index j = 0; j < cols; ++j)
        m(i, j) = Fp(md.rows[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(j)]);
    }
    out.rep.maps[static_cast<std::size_t>(a)] = m;
  }
  out.rep.validate();
  return out;
}

ParsedModule parse_module_file(const std::string& path,
                               const AlgebraResolver& resolve) {
  return parse_module_text(read_file(path), resolve);
}

ParsedComplex parse_complex_text(const std::string& text,
                                 const AlgebraResolver& resolve) {
  ParsedComplex out;
  std::vector<int> deg_m1, deg_0;
  struct Entry {
    int line;
    std::string text;
  };
  std::vector<std::vector<Entry>> entries;
  AlgebraPtr alg;
  for (auto& [n, raw] : logical_lines(text)) {
    Cursor c{raw, n};
    if (c.eol()) continue;
    if (c.eat_word("complex")) {
      out.name = c.token();
      if (!c.eat_word("over")) c.fail("expected 'over'");
      out.algebra_name = c.token();
      alg = resolve(out.algebra_name);
      if (!alg) c.fail("unknown algebra: " + out.algebra_name);
    } else if (c.eat_word("deg")) {
      if (!alg) c.fail("deg before complex header");
      long long d = c.integer();
      c.expect(':');
      std::vector<int>* side = nullptr;
      if (d == -1)
        side = &deg_m1;
      else if (d == 0)
        side = &deg_0;
      else
        c.fail("degree must be -1 or 0");
      if (!c.eol()) {
        if (c.peek() == '0') {
          c.eat('0');
        } else {
          do {
            if (!c.eat_word("P")) c.fail("expected P(<vertex>)");
            c.expect('(');
            std::string v = c.token();
            c.expect(')');
            int vi = alg->quiver().vertex_index(v);
            if (vi < 0) c.fail("unknown vertex: " + v);
            side->push_back(vi);
          } while (c.eat('+'));
        }
      }
    } else if (c.eat_word("d")) {
      if (!alg) c.fail("differential before complex header");
      c.expect('=');
      c.expect('[');
      if (!c.eat(']')) {
        do {
          c.expect('[');
          std::vector<Entry> row;
          if (!c.eat(']')) {
            do {
              c.skip_ws();
              std::size_t start = c.pos;
              int depth = 0;
              while (c.pos < raw.size()) {
                char ch = raw[c.pos];
                if (ch == ',' && depth == 0) break;
                if (ch == ']' && depth == 0) break;
                if (ch == '[') ++depth;
                if (ch == ']') --depth;
                ++c.pos;
              }
              row.push_back({n, raw.substr(start, c.pos - start)});
            } while (c.eat(','));
            c.expect(']');
          }
          entries.push_back(std::move(row));
        } while (c.eat(','));
        c.expect(']');
      }
    } else {
      c.fail("unknown directive");
    }
  }
  if (!alg) throw ParseError("missing complex header", 1, 1);
  out.complex.d.alg = alg;
  out.complex.d.dom = deg_m1;
  out.complex.d.cod = deg_0;
  Vec zero = Vec::Zero(alg->dim());
  out.complex.d.entry.assign(deg_0.size(),
                             std::vector<Vec>(deg_m1.size(), zero));
  if (!entries.empty()) {
    if (entries.size() != deg_0.size())
      throw ParseError("differential row count differs from deg 0 summands",
                       1, 1);
    for (std::size_t r = 0; r < entries.size(); ++r) {
      if (entries[r].size() != deg_m1.size())
        throw ParseError("differential column count differs from deg -1",
                         entries[r].empty() ? 1 : entries[r][0].line, 1);
      for (std::size_t cc = 0; cc < entries[r].size(); ++cc) {
        const Entry& e = entries[r][cc];
        Cursor c{e.text, e.line};
        if (c.eol()) continue;
        if (c.peek() == '0') {
          c.eat('0');
          if (!c.eol()) c.fail("unexpected input after 0 entry");
          continue;
        }
        LinComb comb = parse_lincomb(c, alg->quiver());
        // each term must be a path from cod[r] to dom[cc]
        for (const auto& [coef, p] : comb) {
          if (p.source != deg_0[r] ||
              Path(p).target(alg->quiver()) != deg_m1[cc])
            c.fail("entry path must run from the degree-0 vertex to the "
                   "degree--1 vertex");
        }
        out.complex.d.entry[r][cc] = alg->lincomb_vector(comb);
      }
    }
  }
  // sanity: the differential must be a chain map of projectives
  Representation dom = out.complex.d.dom_rep();
  Representation cod = out.complex.d.cod_rep();
  ModuleMap f = out.complex.d.to_module_map();
  if (!is_module_map(dom, cod, f))
    throw ParseError("differential entries are inconsistent", 1, 1);
  return out;
}

ParsedComplex parse_complex_file(const std::string& path,
                                 const AlgebraResolver& resolve) {
  return parse_complex_text(read_file(path), resolve);
}

}  // namespace silting
