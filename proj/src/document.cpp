#include "goodpair/document.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace goodpair {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Vertex Document::find(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? kNoVertex : static_cast<Vertex>(it - names.begin());
}

std::string Document::arc_name(const Arc& a) const { return names[a.tail] + " " + names[a.head]; }

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  for (int number = 1; std::getline(in, text); ++number) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string t; ss >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

bool valid_name(const std::string& s) { return s != "{" && s != "}" && s.find_first_of("{}") == std::string::npos; }

// Vertices and arcs of one scope (the flat document, the quotient, or a part).
struct Block {
  std::vector<std::string> names;
  std::vector<int> name_lines;
  std::vector<std::pair<std::string, std::string>> arcs;
  std::vector<int> arc_lines;
  int line = 0;
};

void read_entry(const Line& l, Block& b) {
  const auto& t = l.tokens;
  if (t[0] == "vertices") {
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!valid_name(t[i])) throw ParseError(l.number, "invalid vertex name '" + t[i] + "'");
      b.names.push_back(t[i]);
      b.name_lines.push_back(l.number);
    }
  } else if (t[0] == "arc") {
    if (t.size() != 3) throw ParseError(l.number, "arc needs exactly two vertices");
    b.arcs.push_back({t[1], t[2]});
    b.arc_lines.push_back(l.number);
  } else {
    throw ParseError(l.number, "unexpected '" + t[0] + "'");
  }
}

Digraph build(const Block& b, const std::map<std::string, Vertex>& index, const char* what) {
  Digraph g(static_cast<int>(b.names.size()));
  for (std::size_t i = 0; i < b.arcs.size(); ++i) {
    auto [x, y] = b.arcs[i];
    auto ix = index.find(x), iy = index.find(y);
    if (ix == index.end()) throw ParseError(b.arc_lines[i], std::string("unknown ") + what + " '" + x + "'");
    if (iy == index.end()) throw ParseError(b.arc_lines[i], std::string("unknown ") + what + " '" + y + "'");
    if (x == y) throw ParseError(b.arc_lines[i], "loop at '" + x + "'");
    if (!g.add_arc(ix->second, iy->second)) throw ParseError(b.arc_lines[i], "repeated arc " + x + " " + y);
  }
  return g;
}

std::map<std::string, Vertex> index_of(const std::vector<std::string>& names, const std::vector<int>& lines,
                                       const char* what) {
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<Vertex>(i)).second)
      throw ParseError(lines[i], std::string("repeated ") + what + " '" + names[i] + "'");
  return index;
}

}  // namespace

Document parse_document(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  Block flat;
  std::optional<Block> quotient;
  std::vector<std::pair<std::string, Block>> parts;
  std::optional<std::pair<std::string, std::string>> roots;
  int roots_line = 0;
  Block* open = nullptr;
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t.size() == 1 && t[0] == "}") {
      if (!open) throw ParseError(l.number, "unmatched '}'");
      open = nullptr;
      continue;
    }
    if (t.back() == "{") {
      if (open) throw ParseError(l.number, "nested block");
      if (t.size() == 2 && t[0] == "quotient") {
        if (quotient) throw ParseError(l.number, "second quotient block");
        quotient = Block{};
        quotient->line = l.number;
        open = &*quotient;
      } else if (t.size() == 3 && t[0] == "part") {
        parts.push_back({t[1], Block{}});
        parts.back().second.line = l.number;
        open = &parts.back().second;
      } else {
        throw ParseError(l.number, "expected 'quotient {' or 'part <name> {'");
      }
      continue;
    }
    if (open) {
      read_entry(l, *open);
    } else if (t[0] == "roots") {
      if (t.size() != 3) throw ParseError(l.number, "roots needs exactly two vertices");
      if (roots) throw ParseError(l.number, "second roots line");
      roots = std::make_pair(t[1], t[2]);
      roots_line = l.number;
    } else {
      read_entry(l, flat);
    }
  }
  if (open) throw ParseError(open->line, "unterminated block");

  Document d;
  if (!quotient && parts.empty()) {
    d.composition = Composition{build(flat, index_of(flat.names, flat.name_lines, "vertex"), "vertex"),
                                std::vector<Digraph>(flat.names.size(), Digraph(1))};
    d.names = flat.names;
  } else {
    if (!flat.names.empty() || !flat.arcs.empty())
      throw ParseError(flat.name_lines.empty() ? flat.arc_lines.front() : flat.name_lines.front(),
                       "a composition document declares vertices and arcs inside blocks only");
    if (!quotient) throw ParseError(parts.front().second.line, "composition document without a quotient block");
    auto qindex = index_of(quotient->names, quotient->name_lines, "part");
    d.composition.quotient = build(*quotient, qindex, "part");
    d.part_names = quotient->names;
    d.composition.parts.resize(d.part_names.size());
    std::vector<bool> seen(d.part_names.size(), false);
    for (const auto& [name, block] : parts) {
      auto it = qindex.find(name);
      if (it == qindex.end()) throw ParseError(block.line, "part '" + name + "' is not a quotient vertex");
      if (seen[it->second]) throw ParseError(block.line, "repeated part '" + name + "'");
      if (block.names.empty()) throw ParseError(block.line, "part '" + name + "' has no vertices");
      seen[it->second] = true;
      d.composition.parts[it->second] = build(block, index_of(block.names, block.name_lines, "vertex"), "vertex");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw ParseError(quotient->line, "no part block for '" + d.part_names[i] + "'");
    std::vector<int> name_lines;
    for (const std::string& p : d.part_names) {
      const Block& b = std::find_if(parts.begin(), parts.end(), [&](const auto& e) { return e.first == p; })->second;
      d.names.insert(d.names.end(), b.names.begin(), b.names.end());
      name_lines.insert(name_lines.end(), b.name_lines.begin(), b.name_lines.end());
    }
    index_of(d.names, name_lines, "vertex");
  }
  if (roots) {
    d.u = d.find(roots->first);
    d.v = d.find(roots->second);
    if (*d.u == kNoVertex) throw ParseError(roots_line, "unknown vertex '" + roots->first + "'");
    if (*d.v == kNoVertex) throw ParseError(roots_line, "unknown vertex '" + roots->second + "'");
  }
  return d;
}

Document parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

namespace {

void emit_block(std::ostringstream& out, const std::string& indent, const std::vector<std::string>& names,
                const Digraph& g) {
  out << indent << "vertices";
  for (const std::string& s : names) out << ' ' << s;
  out << '\n';
  for (const Arc& a : g.arcs()) out << indent << "arc " << names[a.tail] << ' ' << names[a.head] << '\n';
}

}  // namespace

std::string emit_document(const Document& d) {
  std::ostringstream out;
  if (d.flat()) {
    emit_block(out, "", d.names, d.composition.quotient);
  } else {
    out << "quotient {\n";
    emit_block(out, "  ", d.part_names, d.composition.quotient);
    out << "}\n";
    for (int i = 0; i < d.composition.part_count(); ++i) {
      out << "part " << d.part_names[i] << " {\n";
      std::vector<std::string> local;
      for (Vertex x : d.composition.part_vertices(i)) local.push_back(d.names[x]);
      emit_block(out, "  ", local, d.composition.parts[i]);
      out << "}\n";
    }
  }
  if (d.u && d.v) out << "roots " << d.names[*d.u] << ' ' << d.names[*d.v] << '\n';
  return out.str();
}

Document numbered_document(const Composition& c, bool flat, std::optional<Vertex> u, std::optional<Vertex> v) {
  if (flat) return flat_document(c.flatten(), u, v);
  Document d;
  d.composition = c;
  for (int i = 0; i < c.order(); ++i) d.names.push_back(std::to_string(i));
  for (int i = 0; i < c.part_count(); ++i) d.part_names.push_back("P" + std::to_string(i));
  d.u = u;
  d.v = v;
  return d;
}

Document flat_document(const Digraph& g, std::optional<Vertex> u, std::optional<Vertex> v) {
  Document d;
  d.composition = Composition{g, std::vector<Digraph>(g.order(), Digraph(1))};
  for (int i = 0; i < g.order(); ++i) d.names.push_back(std::to_string(i));
  d.u = u;
  d.v = v;
  return d;
}

std::string emit_pair(const Document& d, const BranchingPair& p) {
  std::ostringstream out;
  out << "out-branching " << d.names[p.out.root] << '\n';
  for (const Arc& a : p.out.arcs()) out << "arc " << d.arc_name(a) << '\n';
  out << "in-branching " << d.names[p.in.root] << '\n';
  for (const Arc& a : p.in.arcs()) out << "arc " << d.arc_name(a) << '\n';
  return out.str();
}

PairDocument parse_pair(std::istream& in, const Document& d) {
  std::vector<Line> lines = tokenize(in);
  const int n = d.composition.order();
  std::optional<Vertex> roots[2];
  std::vector<Arc> arcs[2];
  int section = -1;
  auto vertex = [&](const Line& l, const std::string& name) {
    Vertex x = d.find(name);
    if (x == kNoVertex) throw ParseError(l.number, "unknown vertex '" + name + "'");
    return x;
  };
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "out-branching" || t[0] == "in-branching") {
      int s = t[0] == "out-branching" ? 0 : 1;
      if (t.size() != 2) throw ParseError(l.number, t[0] + " needs exactly one root");
      if (roots[s]) throw ParseError(l.number, "second " + t[0]);
      roots[s] = vertex(l, t[1]);
      section = s;
    } else if (t[0] == "arc") {
      if (section < 0) throw ParseError(l.number, "arc before any branching header");
      if (t.size() != 3) throw ParseError(l.number, "arc needs exactly two vertices");
      arcs[section].push_back({vertex(l, t[1]), vertex(l, t[2])});
    } else {
      section = -1;
    }
  }
  if (!roots[0]) throw ParseError(0, "missing out-branching");
  if (!roots[1]) throw ParseError(0, "missing in-branching");
  PairDocument r;
  r.u = *roots[0];
  r.v = *roots[1];
  r.pair.out = Branching::from_arcs(Orientation::Out, r.u, n, arcs[0]);
  r.pair.in = Branching::from_arcs(Orientation::In, r.v, n, arcs[1]);
  return r;
}

PairDocument parse_pair(const std::string& text, const Document& d) {
  std::istringstream in(text);
  return parse_pair(in, d);
}

bool operator==(const Document& a, const Document& b) {
  return a.composition.quotient == b.composition.quotient && a.composition.parts == b.composition.parts &&
         a.names == b.names && a.part_names == b.part_names && a.u == b.u && a.v == b.v;
}

}  // namespace goodpair
