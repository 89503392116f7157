#include "nilpot/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nilpot/errors.hpp"

namespace nilpot {

VertexId Quiver::add_vertex(std::string name) {
  if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  const VertexId id = vertex_names_.size();
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (arrow_index_.count(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
  if (source >= num_vertices() || target >= num_vertices())
    throw std::invalid_argument("arrow '" + name + "' uses an undeclared vertex");
  const ArrowId id = arrows_.size();
  arrow_index_.emplace(name, id);
  arrows_.push_back({std::move(name), source, target});
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

Quiver Quiver::opposite() const {
  Quiver op;
  for (const auto& name : vertex_names_) op.add_vertex(name);
  for (const auto& a : arrows_) op.add_arrow(a.name, a.target, a.source);
  return op;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.start >= q.num_vertices()) return false;
  VertexId at = p.start;
  for (ArrowId a : p.arrows) {
    if (a >= q.num_arrows() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

Path compose(const Quiver& q, const Path& first, const Path& then) {
  if (first.end(q) != then.start) throw std::invalid_argument("paths do not compose");
  Path p = first;
  p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
  return p;
}

Path reversed(const Quiver& q, const Path& p) {
  Path r;
  r.start = p.end(q);
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  return r;
}

std::string to_traversal(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

std::string to_right_to_left(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.start);
  std::string s;
  for (std::size_t i = p.arrows.size(); i-- > 0;) {
    s += q.arrow(p.arrows[i]).name;
    if (i) s += ' ';
  }
  return s;
}

AlgebraPresentation AlgebraPresentation::opposite() const {
  AlgebraPresentation op;
  op.quiver = quiver.opposite();
  for (const auto& r : relations) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coefficient, reversed(quiver, t.path)});
    op.relations.push_back(std::move(rr));
  }
  return op;
}

// ---------------------------------------------------------------------------
// DSL parser

namespace {

bool is_name_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

class LineParser {
 public:
  LineParser(const AlgebraPresentation& pres, std::string_view line, std::size_t lineno)
      : pres_(pres), line_(line), lineno_(lineno) {}

  std::vector<Token> words() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line_.size()) {
      if (std::isspace(static_cast<unsigned char>(line_[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line_.size() && !std::isspace(static_cast<unsigned char>(line_[j]))) ++j;
      out.push_back({std::string(line_.substr(i, j - i)), i + 1});
      i = j;
    }
    return out;
  }

  Relation relation(std::size_t from) {
    pos_ = from;
    std::map<Path, Rational> merged;
    std::vector<Path> order;
    std::size_t first_col = 0;
    skip_ws();
    if (at_end()) fail("empty relation");
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      const std::size_t term_col = pos_ + 1;
      if (first) first_col = term_col;
      Rational coef = sign;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= number();
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
        }
      }
      Path p = path();
      if (coef.is_zero()) fail("zero coefficient", term_col);
      if (!merged.count(p)) order.push_back(p);
      merged[p] += coef;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    Relation r;
    for (const auto& p : order)
      if (!merged[p].is_zero()) r.terms.push_back({merged[p], p});
    if (r.terms.empty()) fail("relation cancels to zero", first_col);
    const auto& q = pres_.quiver;
    for (const auto& t : r.terms)
      if (t.path.start != r.terms.front().path.start || t.path.end(q) != r.terms.front().path.end(q))
        fail("non-parallel relation terms", first_col);
    return r;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t col = 0) const {
    throw ParseError(lineno_, col ? col : pos_ + 1, what);
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Rational number() {
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_begin = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_begin == pos_) fail("expected denominator");
    }
    try {
      Rational r = Rational::parse(line_.substr(begin, pos_ - begin));
      return r;
    } catch (const std::exception& e) {
      fail(std::string("bad coefficient: ") + e.what(), begin + 1);
    }
  }

  std::string name() {
    const std::size_t begin = pos_;
    while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected an arrow name");
    return std::string(line_.substr(begin, pos_ - begin));
  }

  Path path() {
    const auto& q = pres_.quiver;
    Path p;
    bool have_start = false;
    while (true) {
      skip_ws();
      const std::size_t col = pos_ + 1;
      const std::string n = name();
      auto a = q.find_arrow(n);
      if (!a) fail("unknown arrow '" + n + "'", col);
      if (!have_start) {
        p.start = q.arrow(*a).source;
        have_start = true;
      } else if (q.arrow(p.arrows.back()).target != q.arrow(*a).source) {
        fail("arrow '" + n + "' does not compose with the preceding arrow", col);
      }
      p.arrows.push_back(*a);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return p;
  }

  const AlgebraPresentation& pres_;
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPresentation parse_presentation(std::string_view text) {
  AlgebraPresentation pres;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    ++lineno;
    start = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser lp(pres, line, lineno);
    auto words = lp.words();
    if (words.empty()) continue;
    const std::string& kw = words[0].text;
    if (kw == "vertex") {
      if (words.size() < 2) throw ParseError(lineno, words[0].column, "vertex needs at least one name");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (pres.quiver.find_vertex(words[i].text))
          throw ParseError(lineno, words[i].column, "duplicate vertex '" + words[i].text + "'");
        pres.quiver.add_vertex(words[i].text);
      }
    } else if (kw == "arrow") {
      if (words.size() != 4) throw ParseError(lineno, words[0].column, "expected: arrow <name> <source> <target>");
      const auto& n = words[1];
      if (!std::all_of(n.text.begin(), n.text.end(), [](char c) { return is_name_char(static_cast<unsigned char>(c)); }) ||
          std::isdigit(static_cast<unsigned char>(n.text[0])))
        throw ParseError(lineno, n.column, "invalid arrow name '" + n.text + "'");
      if (pres.quiver.find_arrow(n.text)) throw ParseError(lineno, n.column, "duplicate arrow '" + n.text + "'");
      auto s = pres.quiver.find_vertex(words[2].text);
      if (!s) throw ParseError(lineno, words[2].column, "unknown vertex '" + words[2].text + "'");
      auto t = pres.quiver.find_vertex(words[3].text);
      if (!t) throw ParseError(lineno, words[3].column, "unknown vertex '" + words[3].text + "'");
      pres.quiver.add_arrow(n.text, *s, *t);
    } else if (kw == "relation") {
      pres.relations.push_back(lp.relation(words[0].column - 1 + kw.size()));
    } else {
      throw ParseError(lineno, words[0].column, "unknown keyword '" + kw + "'");
    }
    if (nl == text.size()) break;
  }
  return pres;
}

AlgebraPresentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const AlgebraPresentation& pres) {
  const auto& q = pres.quiver;
  std::ostringstream out;
  if (q.num_vertices()) {
    out << "vertex";
    for (VertexId v = 0; v < q.num_vertices(); ++v) out << ' ' << q.vertex_name(v);
    out << '\n';
  }
  for (const auto& a : q.arrows())
    out << "arrow " << a.name << ' ' << q.vertex_name(a.source) << ' ' << q.vertex_name(a.target) << '\n';
  for (const auto& r : pres.relations) {
    out << "relation";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      Rational c = r.terms[i].coefficient;
      if (i == 0) {
        out << ' ';
        if (c < Rational(0)) {
          out << '-';
          c = -c;
        }
      } else {
        out << (c < Rational(0) ? " - " : " + ");
        if (c < Rational(0)) c = -c;
      }
      if (!c.is_one()) out << c.to_short_string() << '*';
      out << to_traversal(q, r.terms[i].path);
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Combinatorial classifications

SinksAndSources sinks_and_sources(const Quiver& q) {
  SinksAndSources s;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    const bool sink = q.arrows_from(v).empty();
    const bool source = q.arrows_to(v).empty();
    if (sink) s.sinks.insert(v);
    if (source) s.sources.insert(v);
    if (!sink && !source) s.inner.insert(v);
  }
  return s;
}

std::set<VertexId> zero_relation_vertices(const AlgebraPresentation& pres) {
  std::set<VertexId> out;
  for (const auto& r : pres.relations) {
    if (!r.is_zero_relation()) continue;
    const auto& arrows = r.terms.front().path.arrows;
    for (std::size_t i = 1; i < arrows.size(); ++i) out.insert(pres.quiver.arrow(arrows[i]).source);
  }
  return out;
}

namespace {

std::optional<ToupieShape> toupie_quiver(const Quiver& q) {
  const auto n = q.num_vertices();
  if (n < 2) return std::nullopt;
  std::optional<VertexId> source, sink;
  for (VertexId v = 0; v < n; ++v) {
    const auto in = q.arrows_to(v).size();
    const auto out = q.arrows_from(v).size();
    if (in == 0 && out == 0) return std::nullopt;
    if (in == 0) {
      if (source) return std::nullopt;
      source = v;
    } else if (out == 0) {
      if (sink) return std::nullopt;
      sink = v;
    } else if (in != 1 || out != 1) {
      return std::nullopt;
    }
  }
  if (!source || !sink) return std::nullopt;
  ToupieShape shape;
  shape.source = *source;
  shape.sink = *sink;
  std::vector<bool> seen(n, false);
  seen[*source] = seen[*sink] = true;
  for (ArrowId first : q.arrows_from(*source)) {
    ToupieBranch b;
    ArrowId a = first;
    while (true) {
      b.arrows.push_back(a);
      const VertexId t = q.arrow(a).target;
      if (t == *sink) break;
      if (seen[t]) return std::nullopt;
      seen[t] = true;
      b.interior.push_back(t);
      a = q.arrows_from(t).front();
    }
    shape.branches.push_back(std::move(b));
  }
  if (shape.branches.size() < 2) return std::nullopt;  // linear quivers are excluded
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return std::nullopt;
  return shape;
}

std::optional<ToupieRelationPattern> toupie_pattern(const AlgebraPresentation& pres, const ToupieShape& shape) {
  if (shape.branches.size() != 3 || pres.relations.size() != 2) return std::nullopt;
  const Relation* zero = nullptr;
  const Relation* comm = nullptr;
  for (const auto& r : pres.relations) {
    if (r.is_zero_relation())
      zero = zero ? nullptr : &r;
    else if (r.terms.size() == 2)
      comm = &r;
  }
  if (!zero || !comm) return std::nullopt;

  ToupieRelationPattern pat;
  const auto& zarrows = zero->terms.front().path.arrows;
  bool found = false;
  for (std::size_t b = 0; b < 3 && !found; ++b) {
    const auto& arrows = shape.branches[b].arrows;
    auto it = std::search(arrows.begin(), arrows.end(), zarrows.begin(), zarrows.end());
    if (it == arrows.end()) continue;
    pat.zero_branch = b;
    pat.j = static_cast<std::size_t>(it - arrows.begin()) + 1;
    pat.t = zarrows.size() - 1;
    found = true;
  }
  if (!found) return std::nullopt;

  std::size_t k = 0;
  for (std::size_t b = 0; b < 3; ++b)
    if (b != pat.zero_branch) pat.commuting_branches[k++] = b;
  const auto& b0 = shape.branches[pat.commuting_branches[0]].arrows;
  const auto& b1 = shape.branches[pat.commuting_branches[1]].arrows;
  const auto& t0 = comm->terms[0];
  const auto& t1 = comm->terms[1];
  const bool direct = t0.path.arrows == b0 && t1.path.arrows == b1;
  const bool swapped = t0.path.arrows == b1 && t1.path.arrows == b0;
  if (!direct && !swapped) return std::nullopt;
  if (!(t0.coefficient + t1.coefficient).is_zero()) return std::nullopt;
  if (swapped) std::swap(pat.commuting_branches[0], pat.commuting_branches[1]);

  pat.n1 = shape.branches[pat.commuting_branches[0]].interior.size();
  pat.n2 = shape.branches[pat.commuting_branches[1]].interior.size();
  pat.n3 = shape.branches[pat.zero_branch].interior.size();
  return pat;
}

}  // namespace

Classification classify(const AlgebraPresentation& pres) {
  Classification c;
  c.is_monomial = std::all_of(pres.relations.begin(), pres.relations.end(),
                              [](const Relation& r) { return r.is_zero_relation(); });
  c.toupie = toupie_quiver(pres.quiver);
  if (c.toupie) c.toupie->pattern = toupie_pattern(pres, *c.toupie);
  return c;
}

}  // namespace nilpot
