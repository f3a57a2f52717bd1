#include <fstream>
#include <sstream>

#include "raagham/errors.hpp"
#include "raagham/graph.hpp"

namespace raagham::graphs {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct GraphText {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> maps;
};

GraphText read_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GraphText out;
  std::size_t declared = 0;
  bool have_header = false, have_names = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_header) {
      if (tok[0] != "vertices" || tok.size() != 2) {
        throw InputError(where + "expected `vertices <n>`");
      }
      try {
        declared = std::stoul(tok[1]);
      } catch (const std::exception&) {
        throw InputError(where + "bad vertex count '" + tok[1] + "'");
      }
      have_header = true;
      if (declared == 0) have_names = true;
      continue;
    }
    if (!have_names) {
      if (tok.size() != declared) {
        throw InputError(where + "expected " + std::to_string(declared) + " vertex names, got " +
                         std::to_string(tok.size()));
      }
      out.names = tok;
      have_names = true;
      continue;
    }
    if (tok[0] == "edge" && tok.size() == 3) {
      out.edges.emplace_back(tok[1], tok[2]);
    } else if (tok[0] == "map" && tok.size() == 3) {
      out.maps.emplace_back(tok[1], tok[2]);
    } else {
      throw InputError(where + "expected `edge <u> <v>` or `map <x> <y>`");
    }
  }
  if (!have_header) throw InputError("missing `vertices <n>` header");
  if (!have_names) throw InputError("missing vertex name line");
  return out;
}

}  // namespace

SimplicialGraph parse_graph(std::string_view text) {
  auto t = read_text(text);
  if (!t.maps.empty()) throw InputError("unexpected `map` line in graph file");
  return SimplicialGraph::from_names(std::move(t.names), t.edges);
}

std::string format_graph(const SimplicialGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out << (i ? " " : "") << g.name(vid(i));
  }
  out << "\n";
  for (auto [u, v] : g.edges()) out << "edge " << g.name(u) << " " << g.name(v) << "\n";
  return out.str();
}

SimplicialGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

GraphMorphism parse_morphism(std::string_view text, const SimplicialGraph& target) {
  auto t = read_text(text);
  GraphMorphism m;
  m.source = SimplicialGraph::from_names(t.names, t.edges);
  m.target = target;
  std::vector<bool> seen(m.source.vertex_count(), false);
  m.vertex_map.assign(m.source.vertex_count(), VertexId{});
  for (const auto& [x, y] : t.maps) {
    const VertexId vx = m.source.at(x);
    if (seen[vx.value]) throw InputError("vertex '" + x + "' mapped twice");
    seen[vx.value] = true;
    m.vertex_map[vx.value] = target.at(y);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw InputError("no `map` line for vertex '" + m.source.names()[i] + "'");
  }
  return m;
}

std::string format_morphism(const GraphMorphism& m) {
  std::string out = format_graph(m.source);
  for (std::size_t i = 0; i < m.vertex_map.size(); ++i) {
    out += "map " + m.source.name(vid(i)) + " " + m.target.name(m.vertex_map[i]) + "\n";
  }
  return out;
}

}  // namespace raagham::graphs
