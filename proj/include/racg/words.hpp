// Copyright 2026 the racg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// The word problem in a right-angled Coxeter group W over a defining graph:
// generators are graph vertices, every generator is an involution, and two
// generators commute exactly when they span an edge. A word is reduced when
// no sequence of adjacent commuting transpositions makes an equal pair
// adjacent; the canonical form is the lexicographically least reduced word
// (in document vertex order) reachable by such transpositions.

#ifndef RACG_WORDS_HPP
#define RACG_WORDS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/error.hpp"
#include "racg/graph.hpp"

namespace racg {

using Word = std::vector<uint16_t>;  // generator indices into the graph's vertex list

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (uint16_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// Reduction and canonical form
// ---------------------------------------------------------------------------

/// Appends one letter to a reduced word, keeping it reduced: the letter
/// cancels against an earlier equal letter iff everything between commutes
/// with it.
inline void reduced_append(const SimplicialGraph& g, Word& out, uint16_t x) {
  for (size_t j = out.size(); j-- > 0;) {
    if (out[j] == x) {
      out.erase(out.begin() + static_cast<ptrdiff_t>(j));
      return;
    }
    if (!g.adjacent(out[j], x)) break;
  }
  out.push_back(x);
}

inline Word reduce_word(const SimplicialGraph& g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (uint16_t x : w) reduced_append(g, out, x);
  return out;
}

/// Lexicographically least linearization of a reduced word: repeatedly pull
/// out the least letter that commutes with everything before it.
inline Word canonicalize_reduced(const SimplicialGraph& g, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    size_t best = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
      bool movable = true;
      for (size_t j = 0; j < i; ++j)
        if (!g.adjacent(w[j], w[i])) {
          movable = false;
          break;
        }
      if (movable && (best == w.size() || w[i] < w[best])) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<ptrdiff_t>(best));
  }
  return out;
}

inline Word normal_form_word(const SimplicialGraph& g, const Word& w) {
  return canonicalize_reduced(g, reduce_word(g, w));
}

/// An element of the group as a canonical reduced word over its graph.
struct GroupElement {
  const SimplicialGraph* graph = nullptr;
  Word word;

  bool is_identity() const { return word.empty(); }
  size_t length() const { return word.size(); }
  bool operator==(const GroupElement& o) const {
    return word == o.word && (graph == o.graph || (graph && o.graph && *graph == *o.graph));
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

inline GroupElement normal_form(const SimplicialGraph& g, const Word& letters) {
  for (uint16_t x : letters)
    require(x < g.n(), ErrorKind::InvalidInput, "generator index out of range",
            {{"index", x}, {"n", g.n()}});
  return GroupElement{&g, normal_form_word(g, letters)};
}

inline GroupElement identity_element(const SimplicialGraph& g) { return GroupElement{&g, {}}; }

inline void check_same_graph(const GroupElement& a, const GroupElement& b) {
  require(a.graph && b.graph && (a.graph == b.graph || *a.graph == *b.graph),
          ErrorKind::InvalidInput, "elements live over different graphs");
}

inline GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_graph(a, b);
  Word prod = a.word;
  for (uint16_t x : b.word) reduced_append(*a.graph, prod, x);
  return GroupElement{a.graph, canonicalize_reduced(*a.graph, std::move(prod))};
}

inline GroupElement multiply_gen(const GroupElement& a, uint16_t gen) {
  Word prod = a.word;
  reduced_append(*a.graph, prod, gen);
  return GroupElement{a.graph, canonicalize_reduced(*a.graph, std::move(prod))};
}

inline bool elements_equal(const GroupElement& a, const GroupElement& b) {
  check_same_graph(a, b);
  return a.word == b.word;
}

// ---------------------------------------------------------------------------
// Word text form: whitespace-separated vertex names, "e" for the identity.
// ---------------------------------------------------------------------------

inline Word parse_word(const SimplicialGraph& g, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" && !g.index_of("e")) continue;
    w.push_back(static_cast<uint16_t>(g.index_of_checked(tok)));
  }
  return w;
}

inline std::string word_to_string(const SimplicialGraph& g, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faithful linear oracle: the geometric representation. The bilinear form
// has B(v,v)=1, B(u,v)=0 on edges (commuting pairs) and -1 otherwise; the
// generator matrix for v maps x to x - 2B(v,x)v, which is integral here.
// Entry arithmetic is exact int64 with overflow detection.
// ---------------------------------------------------------------------------

struct ReflectionMatrix {
  uint32_t n = 0;
  std::vector<int64_t> a;  // row-major

  int64_t& at(uint32_t i, uint32_t j) { return a[size_t(i) * n + j]; }
  int64_t at(uint32_t i, uint32_t j) const { return a[size_t(i) * n + j]; }
  bool operator==(const ReflectionMatrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const ReflectionMatrix& o) const { return !(*this == o); }

  static ReflectionMatrix identity(uint32_t n) {
    ReflectionMatrix m{n, std::vector<int64_t>(size_t(n) * n, 0)};
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline ReflectionMatrix generator_matrix(const SimplicialGraph& g, uint16_t v) {
  auto m = ReflectionMatrix::identity(g.n());
  for (uint32_t j = 0; j < g.n(); ++j) {
    if (j == v)
      m.at(v, j) = -1;
    else
      m.at(v, j) = g.adjacent(v, static_cast<uint32_t>(j)) ? 0 : 2;
  }
  return m;
}

inline int64_t checked_mul_add(int64_t acc, int64_t x, int64_t y) {
  int64_t prod = 0;
  require(!__builtin_mul_overflow(x, y, &prod), ErrorKind::Budget,
          "reflection matrix entry overflow");
  int64_t sum = 0;
  require(!__builtin_add_overflow(acc, prod, &sum), ErrorKind::Budget,
          "reflection matrix entry overflow");
  return sum;
}

inline ReflectionMatrix matrix_multiply(const ReflectionMatrix& x, const ReflectionMatrix& y) {
  ReflectionMatrix out{x.n, std::vector<int64_t>(size_t(x.n) * x.n, 0)};
  for (uint32_t i = 0; i < x.n; ++i)
    for (uint32_t k = 0; k < x.n; ++k) {
      int64_t xv = x.at(i, k);
      if (xv == 0) continue;
      for (uint32_t j = 0; j < x.n; ++j)
        out.at(i, j) = checked_mul_add(out.at(i, j), xv, y.at(k, j));
    }
  return out;
}

inline ReflectionMatrix reflection_matrix(const SimplicialGraph& g, const Word& w) {
  auto m = ReflectionMatrix::identity(g.n());
  for (uint16_t v : w) m = matrix_multiply(m, generator_matrix(g, v));
  return m;
}

inline ReflectionMatrix reflection_matrix(const GroupElement& e) {
  return reflection_matrix(*e.graph, e.word);
}

// ---------------------------------------------------------------------------
// Clique retraction machinery
// ---------------------------------------------------------------------------

/// A proper clique K inside the defining graph, with its induced subgraph
/// (elements of W_K live over that subgraph).
struct CliqueSelection {
  const SimplicialGraph* graph = nullptr;
  std::vector<uint32_t> members;  // ascending document order
  SimplicialGraph subgraph;

  uint32_t k() const { return static_cast<uint32_t>(members.size()); }
  bool contains(uint32_t v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
};

inline CliqueSelection make_clique(const SimplicialGraph& g,
                                   const std::vector<std::string>& member_names) {
  CliqueSelection sel;
  sel.graph = &g;
  for (const auto& nm : member_names) sel.members.push_back(g.index_of_checked(nm));
  std::sort(sel.members.begin(), sel.members.end());
  require(!sel.members.empty(), ErrorKind::InvalidInput, "clique selection is empty");
  require(std::adjacent_find(sel.members.begin(), sel.members.end()) == sel.members.end(),
          ErrorKind::InvalidInput, "clique selection has repeated members");
  require(sel.members.size() < g.n(), ErrorKind::InvalidInput,
          "clique must be a proper subset of the vertex set");
  for (size_t i = 0; i < sel.members.size(); ++i)
    for (size_t j = i + 1; j < sel.members.size(); ++j)
      require(g.adjacent(sel.members[i], sel.members[j]), ErrorKind::InvalidInput,
              "selected vertices are not pairwise adjacent",
              {{"pair", {g.name(sel.members[i]), g.name(sel.members[j])}}});
  sel.subgraph = g.induced(sel.members);
  return sel;
}

struct EpsilonVector {
  std::vector<uint8_t> bits;  // indexed by clique member order

  bool operator==(const EpsilonVector& o) const { return bits == o.bits; }
};

inline EpsilonVector epsilon_from_mask(uint32_t mask, uint32_t k) {
  EpsilonVector e;
  for (uint32_t i = 0; i < k; ++i) e.bits.push_back((mask >> i) & 1u);
  return e;
}

/// g(eps) = v1^{e1} ... vk^{ek} over the ambient graph.
inline GroupElement g_of_epsilon(const CliqueSelection& sel, const EpsilonVector& eps) {
  require(eps.bits.size() == sel.members.size(), ErrorKind::InvalidInput,
          "epsilon length does not match the clique");
  Word w;
  for (size_t i = 0; i < eps.bits.size(); ++i)
    if (eps.bits[i]) w.push_back(static_cast<uint16_t>(sel.members[i]));
  return normal_form(*sel.graph, w);
}

/// phi: W_Gamma -> W_K. Deletes non-clique letters; W_K is an elementary
/// abelian 2-group, so the image is the sorted product of clique members
/// with odd multiplicity, as an element over the clique subgraph.
inline GroupElement retraction_phi(const CliqueSelection& sel, const GroupElement& e) {
  check_same_graph(e, GroupElement{sel.graph, {}});
  std::vector<uint32_t> parity(sel.members.size(), 0);
  for (uint16_t x : e.word) {
    auto it = std::lower_bound(sel.members.begin(), sel.members.end(), uint32_t(x));
    if (it != sel.members.end() && *it == x) parity[size_t(it - sel.members.begin())] ^= 1u;
  }
  Word w;
  for (size_t i = 0; i < parity.size(); ++i)
    if (parity[i]) w.push_back(static_cast<uint16_t>(i));
  return GroupElement{&sel.subgraph, w};
}

// ---------------------------------------------------------------------------
// Ball enumeration: all canonical words of length <= radius, ordered by
// (length, lexicographic on generator indices).
// ---------------------------------------------------------------------------

inline std::vector<Word> enumerate_ball(const SimplicialGraph& g, int radius,
                                        size_t budget = 2'000'000) {
  std::vector<Word> all{Word{}};
  std::unordered_map<Word, uint32_t, WordHash> seen;
  seen.emplace(Word{}, 0);
  size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    size_t layer_end = all.size();
    std::vector<Word> next;
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (uint16_t v = 0; v < g.n(); ++v) {
        Word w = all[i];
        reduced_append(g, w, v);
        if (w.size() != all[i].size() + 1) continue;
        w = canonicalize_reduced(g, std::move(w));
        if (seen.emplace(w, 1).second) next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end());
    require(all.size() + next.size() <= budget, ErrorKind::Budget,
            "ball enumeration budget exceeded",
            {{"radius_reached", r - 1}, {"budget", budget}});
    layer_begin = layer_end;
    for (auto& w : next) all.push_back(std::move(w));
  }
  return all;
}

}  // namespace racg

#endif  // RACG_WORDS_HPP
