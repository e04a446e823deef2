#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pathuniq/core.hpp"
#include "pathuniq/path_unique.hpp"
#include "pathuniq/rng.hpp"

namespace pathuniq {

enum class SearchMethod : std::uint8_t { Exhaustive, Anneal };

inline const char* method_name(SearchMethod m) {
  return m == SearchMethod::Exhaustive ? "exhaustive" : "anneal";
}

struct AnnealConfig {
  std::uint64_t seed = 1;
  std::uint64_t iterations = 100000;  // per chain
  double initial_temperature = 2.0;
  double cooling_rate = 0.9995;
  std::uint32_t restarts = 8;

  void validate() const {
    if (iterations == 0) throw SpecError("iterations must be positive");
    if (!(initial_temperature > 0)) throw SpecError("initial temperature must be positive");
    if (!(cooling_rate > 0) || !(cooling_rate < 1))
      throw SpecError("cooling rate must lie in (0,1)");
    if (restarts == 0) throw SpecError("restarts must be positive");
  }
};

struct ExhaustiveOptions {
  std::uint64_t budget = 0;  // node-expansion cap; 0 = unlimited
  bool symmetry_reduction = false;
};

struct SearchOutcome {
  GraphSpec spec;
  SearchMethod method;
  std::uint64_t best_count = 0;
  EdgeSet witness;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;  // proposals (anneal) / node expansions (exhaustive)
  bool exact = false;
  std::string rng;
  std::optional<AnnealConfig> config;
};

// Subgraph induced by a vertex order: keep edge (u,v) iff rank[u] <= rank[v].
// Loops always survive; everything else points "up" the order.
inline EdgeSet triangle_graph(const GraphSpec& spec, std::span<const std::uint32_t> rank_of) {
  std::uint64_t n = spec.vertex_count();
  if (rank_of.size() != n) throw SpecError("rank array must cover every vertex");
  std::vector<bool> seen(n, false);
  for (std::uint32_t r : rank_of) {
    if (r >= n || seen[r]) throw SpecError("rank array is not a permutation");
    seen[r] = true;
  }
  EdgeSet g(spec);
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e) {
    auto [u, v] = edge_endpoints(spec, e);
    if (rank_of[u] <= rank_of[v]) g.insert(e);
  }
  return g;
}

namespace detail {

inline void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) {
  bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline EdgeSet edge_set_from_bits(const GraphSpec& spec, const std::vector<std::uint64_t>& bits) {
  EdgeSet g(spec);
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e)
    if ((bits[e >> 6] >> (e & 63)) & 1) g.insert(e);
  return g;
}

struct ChainResult {
  bool found = false;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> bits;
};

}  // namespace detail

// Depth-first include/exclude search over all subgraphs. Pruning is twofold:
// path uniqueness is hereditary, so a branch dies the moment its included set
// loses it, and a branch whose included+remaining total cannot beat the
// incumbent is skipped. Loops are branched on last; they constrain walks the
// most, so deciding the free edges first finds large incumbents early.
inline SearchOutcome exhaustive_gamma(const GraphSpec& spec, const ExhaustiveOptions& opt = {}) {
  std::uint64_t m = spec.edge_count();
  std::uint64_t n = spec.vertex_count();
  std::vector<EdgeIndex> order;
  order.reserve(m);
  for (EdgeIndex e = 0; e < m; ++e)
    if (e / spec.q != e % n) order.push_back(e);
  for (EdgeIndex e = 0; e < m; ++e)
    if (e / spec.q == e % n) order.push_back(e);

  // Optional symmetry reduction: alphabet permutations act on B_{q,d} as
  // automorphisms, so every optimum can be relabeled to make its first
  // included edge (in branching order) minimal within its orbit.
  std::vector<char> first_ok(m, 1);
  if (opt.symmetry_reduction) {
    if (spec.q > 8) throw GuardError("symmetry reduction supports q <= 8");
    std::vector<std::uint32_t> pos_of(m);
    for (std::uint64_t i = 0; i < m; ++i) pos_of[order[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> perm(spec.q);
    for (std::uint32_t i = 0; i < spec.q; ++i) perm[i] = i;
    std::vector<std::uint32_t> min_pos(m);
    for (std::uint64_t e = 0; e < m; ++e) min_pos[e] = pos_of[e];
    do {
      for (EdgeIndex e = 0; e < m; ++e) {
        Word w = edge_word(spec, e);
        for (auto& s : w) s = perm[s];
        std::uint32_t p = pos_of[edge_index(spec, w)];
        if (p < min_pos[e]) min_pos[e] = p;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (EdgeIndex e = 0; e < m; ++e) first_ok[e] = min_pos[e] == pos_of[e];
  }

  PathUniqueChecker checker(spec);
  std::vector<std::uint64_t> bits((m + 63) / 64, 0);
  std::uint64_t best = 0;
  std::vector<std::uint64_t> best_bits = bits;
  std::uint64_t nodes = 0;
  bool aborted = false;

  auto dfs = [&](auto&& self, std::uint64_t pos, std::uint64_t cnt) -> void {
    if (aborted) return;
    ++nodes;
    if (opt.budget && nodes > opt.budget) {
      aborted = true;
      return;
    }
    if (cnt > best) {
      best = cnt;
      best_bits = bits;
    }
    if (pos == m || cnt + (m - pos) <= best) return;
    EdgeIndex e = order[pos];
    if (cnt > 0 || first_ok[e]) {
      detail::set_bit(bits, e);
      if (checker.is_path_unique(bits)) self(self, pos + 1, cnt + 1);
      detail::clear_bit(bits, e);
    }
    self(self, pos + 1, cnt);
  };
  dfs(dfs, 0, 0);

  SearchOutcome out{spec,
                    SearchMethod::Exhaustive,
                    best,
                    detail::edge_set_from_bits(spec, best_bits),
                    0,
                    nodes,
                    !aborted,
                    "none",
                    std::nullopt};
  return out;
}

namespace detail {

inline ChainResult anneal_chain(const GraphSpec& spec, const AnnealConfig& cfg,
                                std::uint32_t chain) {
  Xoshiro256ss rng = Xoshiro256ss::for_chain(cfg.seed, chain);
  std::uint32_t n = static_cast<std::uint32_t>(spec.vertex_count());
  std::uint64_t m = spec.edge_count();
  std::uint32_t q = spec.q;

  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t i = 0; i < n; ++i) rank[i] = i;
  for (std::uint32_t i = n - 1; i > 0; --i) {
    std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(i + 1));
    std::swap(rank[i], rank[j]);
  }

  std::vector<std::uint32_t> tails(m), heads(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    tails[e] = static_cast<std::uint32_t>(e / q);
    heads[e] = static_cast<std::uint32_t>(e % n);
  }

  PathUniqueChecker checker(spec);
  std::vector<std::uint64_t> bits((m + 63) / 64, 0);
  auto rebuild = [&]() -> std::uint64_t {
    std::fill(bits.begin(), bits.end(), 0);
    std::uint64_t cnt = 0;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (rank[tails[e]] <= rank[heads[e]]) {
        set_bit(bits, e);
        ++cnt;
      }
    }
    return cnt;
  };

  ChainResult res;
  std::uint64_t count = rebuild();
  bool cur_valid = checker.is_path_unique(bits);
  std::uint64_t cur_count = count;
  if (cur_valid) {
    res.found = true;
    res.count = cur_count;
    res.bits = bits;
  }

  double temp = cfg.initial_temperature;
  for (std::uint64_t it = 0; it < cfg.iterations; ++it) {
    std::uint32_t i = static_cast<std::uint32_t>(rng.next_below(n));
    std::uint32_t j = static_cast<std::uint32_t>(rng.next_below(n - 1));
    if (j >= i) ++j;
    std::swap(rank[i], rank[j]);
    std::uint64_t new_count = rebuild();
    bool valid = checker.is_path_unique(bits);
    bool accept = false;
    if (valid) {
      if (!cur_valid || new_count >= cur_count)
        accept = true;
      else
        accept = rng.next_unit() <
                 std::exp((static_cast<double>(new_count) - static_cast<double>(cur_count)) / temp);
    }
    if (accept) {
      cur_valid = true;
      cur_count = new_count;
      if (!res.found || cur_count > res.count) {
        res.found = true;
        res.count = cur_count;
        res.bits = bits;
      }
    } else {
      std::swap(rank[i], rank[j]);
    }
    temp *= cfg.cooling_rate;
  }
  if (!res.found) res.bits.assign((m + 63) / 64, 0);
  return res;
}

}  // namespace detail

// Simulated annealing over vertex orders. Candidates are the triangle graphs
// of the current order; proposals swap two ranks. Only path-unique candidates
// are ever accepted: improvements (and sideways moves) unconditionally,
// degradations with probability exp(-delta/T) under geometric cooling.
// Restart chains are independent and may run concurrently; the merge is
// deterministic (max count, ties to the lexicographically smallest witness).
inline SearchOutcome anneal_gamma(const GraphSpec& spec, const AnnealConfig& cfg = {}) {
  cfg.validate();
  std::vector<detail::ChainResult> results(cfg.restarts);
  std::uint32_t hw = std::max(1u, std::thread::hardware_concurrency());
  for (std::uint32_t start = 0; start < cfg.restarts; start += hw) {
    std::uint32_t stop = std::min(cfg.restarts, start + hw);
    std::vector<std::future<detail::ChainResult>> batch;
    batch.reserve(stop - start);
    for (std::uint32_t c = start; c < stop; ++c)
      batch.push_back(std::async(std::launch::async,
                                 [&spec, &cfg, c] { return detail::anneal_chain(spec, cfg, c); }));
    for (std::uint32_t c = start; c < stop; ++c) results[c] = batch[c - start].get();
  }

  EdgeSet witness(spec);
  std::uint64_t best_count = 0;
  bool found = false;
  std::vector<EdgeIndex> best_indices;
  for (const auto& r : results) {
    if (!r.found) continue;
    EdgeSet cand = detail::edge_set_from_bits(spec, r.bits);
    std::vector<EdgeIndex> idx = cand.indices();
    if (!found || r.count > best_count || (r.count == best_count && idx < best_indices)) {
      found = true;
      best_count = r.count;
      best_indices = std::move(idx);
      witness = std::move(cand);
    }
  }
  SearchOutcome out{spec,
                    SearchMethod::Anneal,
                    best_count,
                    std::move(witness),
                    cfg.seed,
                    cfg.iterations * cfg.restarts,
                    false,
                    kRngAlgorithm,
                    cfg};
  return out;
}

// Re-checks what an outcome claims: witness lives in the right graph, its
// size matches best_count, and it is path unique.
inline bool verify_outcome(const SearchOutcome& out) {
  if (!(out.witness.spec() == out.spec)) return false;
  if (out.witness.size() != out.best_count) return false;
  return is_path_unique(out.witness).is_path_unique;
}

inline nlohmann::json outcome_to_json(const SearchOutcome& out) {
  nlohmann::json j;
  j["q"] = out.spec.q;
  j["d"] = out.spec.d;
  j["method"] = method_name(out.method);
  j["best_count"] = out.best_count;
  j["exact"] = out.exact;
  j["seed"] = out.seed;
  j["iterations"] = out.iterations;
  j["rng"] = out.rng;
  j["witness"] = out.witness.indices();
  if (out.config) {
    nlohmann::json c;
    c["seed"] = out.config->seed;
    c["iterations"] = out.config->iterations;
    c["initial_temperature"] = out.config->initial_temperature;
    c["cooling_rate"] = out.config->cooling_rate;
    c["restarts"] = out.config->restarts;
    j["config"] = c;
  } else {
    j["config"] = nullptr;
  }
  return j;
}

}  // namespace pathuniq
