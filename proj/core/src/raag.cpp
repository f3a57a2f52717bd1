#include "raagham/raag.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "raagham/errors.hpp"
#include "raagham/rng.hpp"

namespace raagham::raag {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate(const SimplicialGraph& g, const Word& w) {
  for (const Letter& l : w) {
    if (l.vertex.value >= g.vertex_count() || (l.exponent != 1 && l.exponent != -1)) {
      throw InputError("word letter does not belong to the Artin graph");
    }
  }
}

std::size_t inversion_count(const SimplicialGraph& g, const Word& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].vertex > w[i + 1].vertex && !g.adjacent(w[i].vertex, w[i + 1].vertex)) ++n;
  }
  return n;
}

NormalForm normal_form(const SimplicialGraph& g, const Word& w) {
  validate(g, w);
  Word reduced;
  reduced.reserve(w.size());
  for (const Letter& x : w) {
    bool cancelled = false;
    for (std::size_t j = reduced.size(); j-- > 0;) {
      const Letter y = reduced[j];
      if (y.vertex == x.vertex) {
        if (y.exponent != x.exponent) {
          reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (g.adjacent(x.vertex, y.vertex)) break;
    }
    if (!cancelled) reduced.push_back(x);
  }

  // Lexicographically least linearization: a letter is available when every
  // earlier remaining letter commutes with it.
  const std::size_t n = reduced.size();
  std::vector<bool> used(n, false);
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) {
        if (!used[j] && !commute(g, reduced[j].vertex, reduced[i].vertex)) available = false;
      }
      if (available && (best == n || reduced[i] < reduced[best])) best = i;
    }
    used[best] = true;
    out.push_back(reduced[best]);
  }
  return {std::move(out), true};
}

namespace {

using Code = std::u16string;

Code encode(const Word& w) {
  Code c;
  c.reserve(w.size());
  for (const Letter& l : w) c.push_back(static_cast<char16_t>(l.key()));
  return c;
}

Word decode(const Code& c) {
  Word w;
  w.reserve(c.size());
  for (char16_t k : c) w.push_back({graphs::vid(k / 2), (k & 1) ? -1 : 1});
  return w;
}

// One round: explore the shuffle class of `start`. Returns the position of a
// cancelling pair in some member (written to `cancel_word`) or the
// shortlex-least member.
bool closure_round(const SimplicialGraph& g, const Code& start, std::size_t cap, Code& result) {
  std::unordered_set<Code> seen{start};
  std::deque<Code> queue{start};
  Code best = start;
  while (!queue.empty()) {
    Code cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const char16_t a = cur[i], b = cur[i + 1];
      if ((a ^ b) == 1) {
        cur.erase(i, 2);
        result = std::move(cur);
        return true;
      }
    }
    if (cur < best) best = cur;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const char16_t a = cur[i], b = cur[i + 1];
      if (!commute(g, graphs::vid(a / 2), graphs::vid(b / 2))) continue;
      Code next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw ResourceCapError("shuffle closure exceeded " + std::to_string(cap) + " words");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  result = std::move(best);
  return false;
}

}  // namespace

Word normal_form_closure(const SimplicialGraph& g, const Word& w, std::size_t cap) {
  validate(g, w);
  Code cur = encode(w);
  Code next;
  while (closure_round(g, cur, cap, next)) cur = std::move(next);
  return decode(next);
}

bool oracle_equal(const SimplicialGraph& g, const Word& w1, const Word& w2, std::size_t cap) {
  return normal_form_closure(g, concat(w1, inverse(w2)), cap).empty();
}

std::size_t geodesic_length(const SimplicialGraph& g, const Word& w) {
  return normal_form(g, w).word.size();
}

Word hom_apply(const Homomorphism& h, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (l.vertex.value >= h.images.size()) {
      throw InputError("word is not over the homomorphism source graph");
    }
    const Word& img = h.images[l.vertex.value];
    if (l.exponent > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!(inner.target == outer.source)) throw InputError("homomorphisms are not composable");
  Homomorphism h{inner.source, outer.target, {}};
  for (const Word& img : inner.images) h.images.push_back(hom_apply(outer, img));
  return h;
}

std::optional<SimplicialGraph::Edge> check_well_defined(const Homomorphism& h) {
  const std::size_t n = h.source.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (h.source.adjacent(graphs::vid(u), graphs::vid(v))) continue;
      const Word& a = h.images[u];
      const Word& b = h.images[v];
      if (!oracle_equal(h.target, concat(a, b), concat(b, a))) {
        return SimplicialGraph::Edge{graphs::vid(u), graphs::vid(v)};
      }
    }
  }
  return std::nullopt;
}

Homomorphism hom_diagonal(const SimplicialGraph& g) {
  Homomorphism h{g, graphs::double_graph(g), {}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    h.images.push_back({{graphs::double_plus(graphs::vid(v)), 1},
                        {graphs::double_minus(graphs::vid(v)), 1}});
  }
  return h;
}

Homomorphism hom_retraction(const SimplicialGraph& g) {
  Homomorphism h{graphs::double_graph(g), g, {}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    h.images.push_back({gen(v)});
    h.images.push_back({});
  }
  return h;
}

Homomorphism hom_pullback(const GraphMorphism& p) {
  if (!graphs::is_orbicover(p)) throw InputError("pullback requires an orbi-cover");
  Homomorphism h{p.target, p.source, std::vector<Word>(p.target.vertex_count())};
  for (std::size_t x = 0; x < p.source.vertex_count(); ++x) {
    h.images[p.vertex_map[x].value].push_back(gen(x));
  }
  return h;
}

bool check_no_cancellation(const Homomorphism& h, const Word& w) {
  std::size_t total = 0;
  for (const Letter& l : w) {
    const std::size_t len = h.images.at(l.vertex.value).size();
    if (len == 0) return false;  // a collapsed letter is a cancellation
    total += len;
  }
  return geodesic_length(h.target, hom_apply(h, w)) == total;
}

Word random_word(std::mt19937_64& rng, std::size_t n_vertices, std::size_t length,
                 const std::vector<VertexId>& alphabet) {
  Word w;
  if (n_vertices == 0 && alphabet.empty()) return w;
  const std::size_t m = alphabet.empty() ? n_vertices : alphabet.size();
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t k = uniform_index(rng, 2 * m);
    const VertexId v = alphabet.empty() ? graphs::vid(k / 2) : alphabet[k / 2];
    w.push_back({v, (k & 1) ? -1 : 1});
  }
  return w;
}

}  // namespace raagham::raag
