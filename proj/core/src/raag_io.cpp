#include <sstream>

#include "raagham/errors.hpp"
#include "raagham/raag.hpp"

namespace raagham::raag {

namespace {

Letter parse_letter(const SimplicialGraph& g, const std::string& tok) {
  std::string name = tok;
  int exponent = 1;
  if (auto caret = tok.find('^'); caret != std::string::npos) {
    name = tok.substr(0, caret);
    const std::string e = tok.substr(caret + 1);
    if (e == "-1") {
      exponent = -1;
    } else if (e != "1" && e != "+1") {
      throw InputError("bad exponent in letter '" + tok + "'");
    }
  }
  const auto v = g.find(name);
  if (!v) throw InputError("unknown generator '" + name + "'");
  return {*v, exponent};
}

}  // namespace

Word parse_word(const SimplicialGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) w.push_back(parse_letter(g, tok));
  }
  return w;
}

std::string format_word(const SimplicialGraph& g, const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += g.name(l.vertex);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

Homomorphism parse_homomorphism(std::string_view text, const SimplicialGraph& source,
                                const SimplicialGraph& target) {
  Homomorphism h{source, target, std::vector<Word>(source.vertex_count())};
  std::vector<bool> seen(source.vertex_count(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw, name, assign;
    if (!(ls >> kw)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (kw != "image" || !(ls >> name >> assign) || assign != ":=") {
      throw InputError(where + "expected `image <v> := <word>`");
    }
    const auto v = source.find(name);
    if (!v) throw InputError(where + "unknown source generator '" + name + "'");
    if (seen[v->value]) throw InputError(where + "generator '" + name + "' given twice");
    seen[v->value] = true;
    std::string rest;
    std::getline(ls, rest);
    h.images[v->value] = parse_word(target, rest);
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw InputError("missing image for generator '" + source.names()[v] + "'");
  }
  return h;
}

std::string format_homomorphism(const Homomorphism& h) {
  std::string out;
  for (std::size_t v = 0; v < h.images.size(); ++v) {
    out += "image " + h.source.names()[v] + " := " + format_word(h.target, h.images[v]) + "\n";
  }
  return out;
}

}  // namespace raagham::raag
