#pragma once

#include <cstdint>
#include <vector>

#include "pathuniq/core.hpp"
#include "pathuniq/exact.hpp"
#include "pathuniq/io.hpp"

namespace pathuniq {

// Path-unique subgraph of B_{q,d} that keeps the edges (x_1,...,x_{d+1}) with
// x_1 <= x_2, except for the nondecreasing chains confined to {0,...,q-2}.
inline bool construction1_member(const GraphSpec& spec, const Word& w) {
  if (w[0] > w[1]) return false;
  bool chain = true;
  for (std::uint32_t i = 0; i + 1 < w.size() && chain; ++i)
    if (w[i] > w[i + 1]) chain = false;
  if (chain && w.back() <= spec.q - 2) return false;
  return true;
}

inline EdgeSet construction1(const GraphSpec& spec) {
  EdgeSet g(spec);
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e)
    if (construction1_member(spec, edge_word(spec, e))) g.insert(e);
  return g;
}

// |construction1| = ((q+1)/2q) q^(d+1) - C(d+q-1, d+1)
inline BigInt construction1_count(const GraphSpec& spec) {
  BigInt qd = big_pow(spec.q, spec.d);
  return qd * (spec.q + 1) / 2 - binomial(BigInt(spec.d) + spec.q - 1, BigInt(spec.d) + 1);
}

// Five mutually exclusive edge families over B_{q,2}; the labels match the
// drawing colors used throughout.
enum class EdgeColor : std::uint8_t { Blue, Red, Black, Green, Purple };

inline const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::Blue: return "blue";
    case EdgeColor::Red: return "red";
    case EdgeColor::Black: return "black";
    case EdgeColor::Green: return "green";
    case EdgeColor::Purple: return "purple";
  }
  return "?";
}

enum class BlockPart : std::uint8_t { Top, Bottom };

// Vertices (x1,x2) of B_{q,2} group into blocks by min(x1,x2); the top part
// of a block holds its x1 > x2 vertices.
inline std::uint32_t block_of(const GraphSpec& spec, VertexIndex v) {
  if (spec.d != 2) throw SpecError("block structure is defined over B_{q,2} only");
  Word w = vertex_word(spec, v);
  return w[0] < w[1] ? w[0] : w[1];
}

inline BlockPart part_of(const GraphSpec& spec, VertexIndex v) {
  if (spec.d != 2) throw SpecError("block structure is defined over B_{q,2} only");
  Word w = vertex_word(spec, v);
  return w[0] > w[1] ? BlockPart::Top : BlockPart::Bottom;
}

struct Construction2Graph {
  EdgeSet edges;
  std::vector<std::uint8_t> color;  // per edge index; 0 = absent, else 1 + EdgeColor

  explicit Construction2Graph(GraphSpec spec)
      : edges(spec), color(spec.edge_count(), 0) {}

  EdgeColor edge_color(EdgeIndex e) const {
    if (e >= color.size() || color[e] == 0) throw std::out_of_range("not a member edge");
    return static_cast<EdgeColor>(color[e] - 1);
  }
};

inline Construction2Graph construction2(std::uint32_t q) {
  GraphSpec spec(q, 2);
  Construction2Graph g(spec);
  Word w(3);
  for (Symbol x1 = 0; x1 < q; ++x1)
    for (Symbol x2 = 0; x2 < q; ++x2)
      for (Symbol x3 = 0; x3 < q; ++x3) {
        bool member = true;
        EdgeColor c{};
        if (x1 == x2 && x2 == x3)
          c = EdgeColor::Blue;
        else if (x1 == x2 && x1 > 0 && x2 < x3)
          c = EdgeColor::Red;
        else if (x1 > x2 && x2 <= x3)
          c = EdgeColor::Black;
        else if (x1 == 0 && 0 < x2 && x2 <= x3)
          c = EdgeColor::Green;
        else if (x1 == q - 1 && x1 > x2 && x2 > x3 && x3 > 0)
          c = EdgeColor::Purple;
        else
          member = false;
        if (member) {
          w[0] = x1;
          w[1] = x2;
          w[2] = x3;
          EdgeIndex e = edge_index(spec, w);
          g.edges.insert(e);
          g.color[e] = static_cast<std::uint8_t>(c) + 1;
        }
      }
  return g;
}

// |construction2| = q^3/3 + 3q^2/2 - 23q/6 + 4, exactly.
inline BigInt construction2_count(std::uint32_t q) {
  BigInt Q = q;
  return (2 * Q * Q * Q + 9 * Q * Q - 23 * Q + 24) / 6;
}

// Sign of |construction2(q)| - |construction1(q, d=2)|: the d=2 construction
// never loses, and wins strictly from q = 3 on.
inline int compare_lower_bounds(std::uint32_t q) {
  BigInt diff = construction2_count(q) - construction1_count(GraphSpec(q, 2));
  return diff > 0 ? 1 : diff < 0 ? -1 : 0;
}

inline DotOptions construction2_dot_options(const Construction2Graph& g) {
  DotOptions opt;
  const GraphSpec& spec = g.edges.spec();
  g.edges.for_each([&](EdgeIndex e) { opt.edge_color[e] = color_name(g.edge_color(e)); });
  for (VertexIndex v = 0; v < spec.vertex_count(); ++v)
    opt.vertex_group[v] = {block_of(spec, v), part_of(spec, v) == BlockPart::Top};
  return opt;
}

}  // namespace pathuniq
