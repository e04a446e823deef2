#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathuniq/core.hpp"

namespace pathuniq {

// --- plain-text edge list -------------------------------------------------
//
//   q=<q> d=<d>
//   <x1> <x2> ... <x_{d+1}>     one edge word per line, sorted by index
//
// A header-only file denotes the empty subgraph.

inline std::string to_edge_list(const EdgeSet& g) {
  std::ostringstream out;
  out << "q=" << g.spec().q << " d=" << g.spec().d << "\n";
  g.for_each([&](EdgeIndex e) {
    Word w = edge_word(g.spec(), e);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << w[i];
    }
    out << "\n";
  });
  return out.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + tok + "'");
  }
}

}  // namespace detail

inline EdgeSet parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;

  // header
  std::uint64_t q = 0, d = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    if (toks.size() != 2 || toks[0].rfind("q=", 0) != 0 || toks[1].rfind("d=", 0) != 0)
      throw ParseError(lineno, "expected header 'q=<q> d=<d>'");
    q = detail::parse_uint(toks[0].substr(2), lineno);
    d = detail::parse_uint(toks[1].substr(2), lineno);
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(lineno + 1, "missing header 'q=<q> d=<d>'");
  if (q < 2 || q > 0xffffffffull || d < 1 || d > 0xffffffffull)
    throw ParseError(lineno, "invalid graph parameters");

  GraphSpec spec(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(d));
  EdgeSet g(spec);
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    if (toks.size() != spec.d + 1)
      throw ParseError(lineno, "expected " + std::to_string(spec.d + 1) + " symbols, got " +
                                   std::to_string(toks.size()));
    Word w(spec.d + 1);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      std::uint64_t s = detail::parse_uint(toks[i], lineno);
      if (s >= spec.q)
        throw ParseError(lineno, "symbol " + toks[i] + " outside alphabet of size " +
                                     std::to_string(spec.q));
      w[i] = static_cast<Symbol>(s);
    }
    if (!g.insert(edge_index(spec, w))) throw ParseError(lineno, "duplicate edge");
  }
  return g;
}

// --- JSON records -----------------------------------------------------------

inline nlohmann::json edge_set_to_json(const EdgeSet& g) {
  nlohmann::json j;
  j["q"] = g.spec().q;
  j["d"] = g.spec().d;
  j["edges"] = g.indices();
  return j;
}

inline EdgeSet edge_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("d") || !j.contains("edges"))
    throw SpecError("edge-set record needs fields q, d, edges");
  if (!j["q"].is_number_unsigned() || !j["d"].is_number_unsigned() || !j["edges"].is_array())
    throw SpecError("malformed edge-set record");
  GraphSpec spec(j["q"].get<std::uint32_t>(), j["d"].get<std::uint32_t>());
  EdgeSet g(spec);
  for (const auto& e : j["edges"]) {
    if (!e.is_number_unsigned()) throw SpecError("edge indices must be non-negative integers");
    std::uint64_t idx = e.get<std::uint64_t>();
    if (idx >= spec.edge_count()) throw SpecError("edge index out of range");
    if (!g.insert(idx)) throw SpecError("duplicate edge index");
  }
  return g;
}

// --- DOT --------------------------------------------------------------------

struct DotOptions {
  // edge index -> color name; edges without an entry are drawn plain
  std::map<EdgeIndex, std::string> edge_color;
  // vertex index -> (block, top?) grouping; empty means no grouping
  std::map<VertexIndex, std::pair<std::uint32_t, bool>> vertex_group;
};

inline std::string dot_word_label(std::uint32_t q, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (q > 10 && i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::string to_dot(const EdgeSet& g, const DotOptions& opt = {}) {
  const GraphSpec& spec = g.spec();
  std::ostringstream out;
  out << "digraph debruijn {\n";
  out << "  node [shape=circle];\n";
  if (opt.vertex_group.empty()) {
    for (VertexIndex v = 0; v < spec.vertex_count(); ++v)
      out << "  v" << v << " [label=\"" << dot_word_label(spec.q, vertex_word(spec, v))
          << "\"];\n";
  } else {
    std::map<std::uint32_t, std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>>> blocks;
    for (VertexIndex v = 0; v < spec.vertex_count(); ++v) {
      auto it = opt.vertex_group.find(v);
      if (it == opt.vertex_group.end()) continue;
      auto& [top, bottom] = blocks[it->second.first];
      (it->second.second ? top : bottom).push_back(v);
    }
    for (const auto& [block, parts] : blocks) {
      out << "  subgraph cluster_block_" << block << " {\n";
      out << "    label=\"block " << block << "\";\n";
      for (int part = 0; part < 2; ++part) {
        const auto& vs = part == 0 ? parts.first : parts.second;
        if (vs.empty()) continue;
        out << "    { rank=same;";
        for (VertexIndex v : vs) out << " v" << v << ";";
        out << " }\n";
      }
      for (const auto& vs : {parts.first, parts.second})
        for (VertexIndex v : vs)
          out << "    v" << v << " [label=\"" << dot_word_label(spec.q, vertex_word(spec, v))
              << "\"];\n";
      out << "  }\n";
    }
  }
  g.for_each([&](EdgeIndex e) {
    auto [u, v] = edge_endpoints(spec, e);
    out << "  v" << u << " -> v" << v;
    auto it = opt.edge_color.find(e);
    if (it != opt.edge_color.end()) out << " [color=" << it->second << "]";
    out << ";\n";
  });
  out << "}\n";
  return out.str();
}

}  // namespace pathuniq
