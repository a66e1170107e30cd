#include "dmt/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

// Splits into (line number, tokens) records, dropping comments and blanks.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(std::move(w));
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  const auto records = tokenize(text);
  std::set<std::string> labels;
  for (const auto& [number, tokens] : records) {
    std::set<std::string> seen;
    for (const auto& t : tokens)
      if (!seen.insert(t).second)
        throw ParseError(number, "vertex " + t + " repeated in one simplex");
    labels.insert(tokens.begin(), tokens.end());
  }
  std::vector<std::string> table(labels.begin(), labels.end());
  std::map<std::string, Vertex> id;
  for (std::size_t i = 0; i < table.size(); ++i) id[table[i]] = static_cast<Vertex>(i);
  std::vector<Simplex> faces;
  for (const auto& [number, tokens] : records) {
    std::vector<Vertex> v;
    for (const auto& t : tokens) v.push_back(id.at(t));
    faces.push_back(Simplex(std::move(v)));
  }
  return closure(faces, std::move(table));
}

Multigraph parse_multigraph(std::string_view text) {
  const auto records = tokenize(text);
  std::set<std::string> vertex_labels;
  std::map<std::string, std::pair<std::string, std::string>> edges;
  for (const auto& [number, tokens] : records) {
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) throw ParseError(number, "expected: vertex <v>");
      vertex_labels.insert(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError(number, "expected: edge <id> <u> <v>");
      if (tokens[2] == tokens[3]) throw ParseError(number, "loop at " + tokens[2]);
      if (!edges.emplace(tokens[1], std::pair{tokens[2], tokens[3]}).second)
        throw ParseError(number, "duplicate edge id " + tokens[1]);
      vertex_labels.insert(tokens[2]);
      vertex_labels.insert(tokens[3]);
    } else {
      throw ParseError(number, "unknown record " + tokens[0]);
    }
  }
  std::vector<std::string> vl(vertex_labels.begin(), vertex_labels.end());
  std::map<std::string, Vertex> id;
  for (std::size_t i = 0; i < vl.size(); ++i) id[vl[i]] = static_cast<Vertex>(i);
  std::vector<std::string> el;
  std::vector<std::pair<Vertex, Vertex>> boundary;
  for (const auto& [name, ends] : edges) {
    el.push_back(name);
    boundary.emplace_back(id.at(ends.first), id.at(ends.second));
  }
  return Multigraph(std::move(vl), std::move(el), std::move(boundary));
}

std::string serialize_complex(const SimplicialComplex& k) {
  std::vector<std::vector<std::string>> lines;
  for (const auto& f : k.facets()) {
    std::vector<std::string> labels;
    for (Vertex v : f) labels.push_back(k.label(v));
    std::sort(labels.begin(), labels.end());
    lines.push_back(std::move(labels));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += join(l, ' ') + '\n';
  return out;
}

std::string serialize_multigraph(const Multigraph& g) {
  std::vector<std::string> isolated;
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v)
    if (g.incident(v).empty()) isolated.push_back(g.vertex_label(v));
  std::sort(isolated.begin(), isolated.end());
  std::vector<std::vector<std::string>> edges;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    auto [u, v] = g.boundary(e);
    auto a = g.vertex_label(u), b = g.vertex_label(v);
    if (b < a) std::swap(a, b);
    edges.push_back({g.edge_label(e), a, b});
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const auto& v : isolated) out += "vertex " + v + '\n';
  for (const auto& e : edges) out += "edge " + join(e, ' ') + '\n';
  return out;
}

std::string serialize_pair_table(const MorseComplex& m) {
  const auto names = m.pair_labels();
  const auto& h = m.hasse();
  std::string out;
  for (std::size_t i = 0; i < m.num_pairs(); ++i) {
    const auto& p = m.pair(i);
    out += "# " + names[i] + ' ' + std::to_string(p.index) + ' ' + h.describe(p.source) +
           " -> " + h.describe(p.target) + '\n';
  }
  return out;
}

std::string serialize_morse(const MorseComplex& m) {
  const auto names = m.pair_labels();
  std::string out = serialize_pair_table(m);
  for (const auto& f : m.facets()) {
    std::vector<std::string> labels;
    for (Vertex v : f) labels.push_back(names[v]);
    out += join(labels, ' ') + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dmt
