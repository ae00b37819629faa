#include "embedwalk/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "embedwalk/errors.hpp"

namespace ew {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int to_int(const Token& t, int line) {
  int v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || p != end) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

}  // namespace

RotationSystem parse_rotation_system(std::istream& in) {
  std::string raw;
  int lineno = 0, n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> twists;
  std::map<Vertex, std::vector<Vertex>> orders;
  std::map<Vertex, int> order_line;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    if (kw == "vertices") {
      if (n >= 0) throw ParseError(lineno, tok[0].column, "duplicate 'vertices' line");
      if (tok.size() != 2) throw ParseError(lineno, tok[0].column, "expected 'vertices <n>'");
      n = to_int(tok[1], lineno);
      if (n < 1) throw ParseError(lineno, tok[1].column, "vertex count must be positive");
      continue;
    }
    if (n < 0) throw ParseError(lineno, tok[0].column, "first statement must be 'vertices <n>'");
    if (kw == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, tok[0].column, "expected 'edge <u> <v> <twist>'");
      const int u = to_int(tok[1], lineno), v = to_int(tok[2], lineno), t = to_int(tok[3], lineno);
      if (u < 0 || u >= n) throw ParseError(lineno, tok[1].column, "vertex out of range");
      if (v < 0 || v >= n) throw ParseError(lineno, tok[2].column, "vertex out of range");
      if (t != 0 && t != 1) throw ParseError(lineno, tok[3].column, "twist must be 0 or 1");
      edges.emplace_back(u, v);
      twists.push_back(t);
    } else if (kw == "rotation") {
      if (tok.size() < 2 || tok[1].text.back() != ':')
        throw ParseError(lineno, tok.size() < 2 ? tok[0].column : tok[1].column, "expected 'rotation <x>: <v1> ... <vd>'");
      Token head{tok[1].text.substr(0, tok[1].text.size() - 1), tok[1].column};
      const int x = to_int(head, lineno);
      if (x < 0 || x >= n) throw ParseError(lineno, head.column, "vertex out of range");
      if (orders.count(x)) throw ParseError(lineno, tok[0].column, "duplicate rotation for vertex " + head.text);
      std::vector<Vertex> ord;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const int v = to_int(tok[i], lineno);
        if (v < 0 || v >= n) throw ParseError(lineno, tok[i].column, "vertex out of range");
        ord.push_back(v);
      }
      orders[x] = std::move(ord);
      order_line[x] = lineno;
    } else {
      throw ParseError(lineno, tok[0].column, "unknown statement '" + kw + "'");
    }
  }
  if (n < 0) throw ParseError(lineno + 1, 1, "missing 'vertices <n>'");
  for (Vertex x = 0; x < n; ++x)
    if (!orders.count(x)) throw InvariantError("rotation per vertex", "no rotation line for vertex " + std::to_string(x));
  std::vector<std::vector<Vertex>> ord(n);
  for (auto& [x, o] : orders) ord[x] = o;
  SymmetricDigraph g(n, std::move(edges));
  return RotationSystem::from_neighbor_orders(std::move(g), ord, std::move(twists));
}

RotationSystem parse_rotation_system(const std::string& text) {
  std::istringstream in(text);
  return parse_rotation_system(in);
}

RotationSystem read_rotation_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return parse_rotation_system(in);
}

std::string write_rotation_system(const RotationSystem& rs) {
  const auto& g = rs.graph();
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (int k = 0; k < g.edge_count(); ++k)
    out << "edge " << g.edge(k).first << " " << g.edge(k).second << " " << rs.edge_twist(k) << "\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    out << "rotation " << x << ":";
    for (Vertex v : rs.neighbor_order(x)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

cplx parse_complex(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError(0, 0, "not a number: '" + s + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

std::string format_complex(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

}  // namespace ew
