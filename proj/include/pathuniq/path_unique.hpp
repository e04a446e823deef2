#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathuniq/core.hpp"
#include "pathuniq/matrix.hpp"

namespace pathuniq {

// A subgraph is path unique when for every vertex pair and every length there
// is at most one walk of that length between the pair.
struct PathUniqVerdict {
  bool is_path_unique = false;
  // Two distinct words of equal length witnessing a violation: every
  // (d+1)-window of each is a member edge, and the words share their first d
  // and last d symbols. Present iff the verdict is negative.
  std::optional<std::pair<Word, Word>> witness;
};

// All walk pairs of length k correspond to paths of length k in the product
// graph on vertex pairs (u,u'), with an arc (u,u') -> (v,v') whenever both
// (u,v) and (u',v') are member edges. Path uniqueness fails exactly when some
// off-diagonal pair is reachable from the diagonal and can reach the diagonal.
//
// Reusable decision workspace for subgraphs of one fixed B_{q,d}; membership
// is handed in as a bitset over edge indices so search loops can avoid
// rebuilding EdgeSet objects.
class PathUniqueChecker {
 public:
  explicit PathUniqueChecker(GraphSpec spec) : spec_(spec) {
    std::uint64_t n64 = spec.vertex_count();
    std::uint64_t nn64 = n64 * n64;
    if (spec.q > 64 || nn64 > (std::uint64_t{1} << 26))
      throw GuardError("pair graph too large for the path-uniqueness checker");
    q_ = spec.q;
    n_ = static_cast<std::uint32_t>(n64);
    nq_ = n_ / q_;  // q^(d-1)
    nw_ = (n_ + 63) / 64;
    succ_base_.resize(n_);
    for (std::uint32_t u = 0; u < n_; ++u) succ_base_[u] = (u % nq_) * q_;
    out_mask_.resize(n_);
    in_mask_.resize(n_);
    nbr_bits_.assign(static_cast<std::size_t>(n_) * nw_, 0);
    std::size_t nn = static_cast<std::size_t>(n_) * n_;
    stamp_f_.assign(nn, 0);
    stamp_b_.assign(nn, 0);
    queue_.resize(nn);
  }

  const GraphSpec& spec() const { return spec_; }

  // True iff the subgraph given by `member` (bit e set = edge e present) is
  // path unique. Stages: a cheap two-walk scan catches most failures, the
  // product-graph double BFS decides the rest.
  bool is_path_unique(std::span<const std::uint64_t> member) {
    build_masks(member);
    if (has_double_two_walk()) return false;
    return product_scan();
  }

 private:
  static bool test_bit(std::span<const std::uint64_t> bits, std::uint64_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
  }

  void build_masks(std::span<const std::uint64_t> member) {
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint64_t base = static_cast<std::uint64_t>(u) * q_;
      std::uint64_t m = 0;
      for (std::uint32_t a = 0; a < q_; ++a)
        if (test_bit(member, base + a)) m |= std::uint64_t{1} << a;
      out_mask_[u] = m;
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::uint64_t m = 0;
      for (std::uint32_t b = 0; b < q_; ++b)
        if (test_bit(member, static_cast<std::uint64_t>(b) * n_ + v)) m |= std::uint64_t{1} << b;
      in_mask_[v] = m;
    }
  }

  // Detects a vertex pair joined by two distinct walks of length 2.
  bool has_double_two_walk() {
    std::memset(nbr_bits_.data(), 0, nbr_bits_.size() * sizeof(std::uint64_t));
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint64_t m = out_mask_[u];
      while (m) {
        std::uint32_t a = static_cast<std::uint32_t>(__builtin_ctzll(m));
        m &= m - 1;
        std::uint32_t v = succ_base_[u] + a;
        nbr_bits_[static_cast<std::size_t>(u) * nw_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
      }
    }
    acc_.assign(nw_, 0);
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint64_t m = out_mask_[u];
      if (!m || (m & (m - 1)) == 0) continue;  // fewer than two out-edges
      std::fill(acc_.begin(), acc_.end(), 0);
      while (m) {
        std::uint32_t a = static_cast<std::uint32_t>(__builtin_ctzll(m));
        m &= m - 1;
        std::uint32_t w = succ_base_[u] + a;
        const std::uint64_t* row = &nbr_bits_[static_cast<std::size_t>(w) * nw_];
        for (std::uint32_t i = 0; i < nw_; ++i) {
          if (acc_[i] & row[i]) return true;
          acc_[i] |= row[i];
        }
      }
    }
    return false;
  }

  bool product_scan() {
    ++epoch_;
    std::uint32_t epoch = epoch_;
    std::size_t qt = 0;
    // forward sweep from the diagonal
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint32_t s = u * n_ + u;
      stamp_f_[s] = epoch;
      queue_[qt++] = s;
    }
    for (std::size_t qh = 0; qh < qt; ++qh) {
      std::uint32_t s = queue_[qh];
      std::uint32_t u = s / n_, u2 = s % n_;
      std::uint64_t ma = out_mask_[u];
      while (ma) {
        std::uint32_t a = static_cast<std::uint32_t>(__builtin_ctzll(ma));
        ma &= ma - 1;
        std::uint32_t base = (succ_base_[u] + a) * n_ + succ_base_[u2];
        std::uint64_t mb = out_mask_[u2];
        while (mb) {
          std::uint32_t b = static_cast<std::uint32_t>(__builtin_ctzll(mb));
          mb &= mb - 1;
          std::uint32_t t = base + b;
          if (stamp_f_[t] != epoch) {
            stamp_f_[t] = epoch;
            queue_[qt++] = t;
          }
        }
      }
    }
    // backward sweep from the diagonal; stop at the first off-diagonal state
    // that the forward sweep also reached
    qt = 0;
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint32_t s = u * n_ + u;
      stamp_b_[s] = epoch;
      queue_[qt++] = s;
    }
    for (std::size_t qh = 0; qh < qt; ++qh) {
      std::uint32_t s = queue_[qh];
      std::uint32_t v = s / n_, v2 = s % n_;
      std::uint64_t ma = in_mask_[v];
      std::uint32_t pv = v / q_, pv2 = v2 / q_;
      while (ma) {
        std::uint32_t a = static_cast<std::uint32_t>(__builtin_ctzll(ma));
        ma &= ma - 1;
        std::uint32_t u = a * nq_ + pv;
        std::uint64_t mb = in_mask_[v2];
        while (mb) {
          std::uint32_t b = static_cast<std::uint32_t>(__builtin_ctzll(mb));
          mb &= mb - 1;
          std::uint32_t u2 = b * nq_ + pv2;
          std::uint32_t t = u * n_ + u2;
          if (stamp_b_[t] != epoch) {
            if (u != u2 && stamp_f_[t] == epoch) return false;
            stamp_b_[t] = epoch;
            queue_[qt++] = t;
          }
        }
      }
    }
    return true;
  }

  GraphSpec spec_;
  std::uint32_t q_ = 0, n_ = 0, nq_ = 0, nw_ = 0;
  std::vector<std::uint32_t> succ_base_;
  std::vector<std::uint64_t> out_mask_, in_mask_;
  std::vector<std::uint64_t> nbr_bits_, acc_;
  std::vector<std::uint32_t> stamp_f_, stamp_b_, queue_;
  std::uint32_t epoch_ = 0;
};

// Every length-k walk pair lives in the product graph, so a violation of
// minimal length k decomposes as (shortest product path diagonal -> p) +
// (shortest product path p -> diagonal) for some off-diagonal p. The minimum
// of that sum over p, with ties broken toward the smallest state index, pins
// the reported witness.
inline PathUniqVerdict is_path_unique(const EdgeSet& g) {
  PathUniqueChecker chk(g.spec());
  if (chk.is_path_unique(g.blocks())) return {true, std::nullopt};

  const GraphSpec& spec = g.spec();
  const std::uint32_t q = spec.q;
  const std::uint32_t n = static_cast<std::uint32_t>(spec.vertex_count());
  const std::uint32_t nq = n / q;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  auto member = g.blocks();
  auto test = [&](std::uint64_t i) { return (member[i >> 6] >> (i & 63)) & 1; };

  std::vector<std::int32_t> dist_f(nn, -1), dist_b(nn, -1);
  std::vector<std::uint32_t> par_f(nn, 0), nxt_b(nn, 0), queue(nn);

  std::size_t qt = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t s = u * n + u;
    dist_f[s] = 0;
    queue[qt++] = s;
  }
  for (std::size_t qh = 0; qh < qt; ++qh) {
    std::uint32_t s = queue[qh];
    std::uint32_t u = s / n, u2 = s % n;
    for (std::uint32_t a = 0; a < q; ++a) {
      if (!test(static_cast<std::uint64_t>(u) * q + a)) continue;
      std::uint32_t v = (u % nq) * q + a;
      for (std::uint32_t b = 0; b < q; ++b) {
        if (!test(static_cast<std::uint64_t>(u2) * q + b)) continue;
        std::uint32_t t = v * n + (u2 % nq) * q + b;
        if (dist_f[t] < 0) {
          dist_f[t] = dist_f[s] + 1;
          par_f[t] = s;
          queue[qt++] = t;
        }
      }
    }
  }

  qt = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t s = u * n + u;
    dist_b[s] = 0;
    queue[qt++] = s;
  }
  for (std::size_t qh = 0; qh < qt; ++qh) {
    std::uint32_t s = queue[qh];
    std::uint32_t v = s / n, v2 = s % n;
    for (std::uint32_t a = 0; a < q; ++a) {
      if (!test(static_cast<std::uint64_t>(a) * n + v)) continue;
      std::uint32_t u = a * nq + v / q;
      for (std::uint32_t b = 0; b < q; ++b) {
        if (!test(static_cast<std::uint64_t>(b) * n + v2)) continue;
        std::uint32_t t = u * n + b * nq + v2 / q;
        if (dist_b[t] < 0) {
          dist_b[t] = dist_b[s] + 1;
          nxt_b[t] = s;
          queue[qt++] = t;
        }
      }
    }
  }

  std::int64_t best_len = -1;
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < nn; ++s) {
    if (s / n == s % n) continue;
    if (dist_f[s] < 0 || dist_b[s] < 0) continue;
    std::int64_t len = std::int64_t{dist_f[s]} + dist_b[s];
    if (best_len < 0 || len < best_len) {
      best_len = len;
      best = static_cast<std::uint32_t>(s);
    }
  }
  // The checker said "not path unique", so a witness state must exist.
  if (best_len < 0) throw std::logic_error("witness extraction disagrees with checker");

  std::vector<std::uint32_t> states;
  for (std::uint32_t s = best;; s = par_f[s]) {
    states.push_back(s);
    if (dist_f[s] == 0) break;
  }
  std::reverse(states.begin(), states.end());
  for (std::uint32_t s = best; dist_b[s] != 0;) {
    s = nxt_b[s];
    states.push_back(s);
  }

  Word w1 = vertex_word(spec, states[0] / n);
  Word w2 = vertex_word(spec, states[0] % n);
  for (std::size_t i = 1; i < states.size(); ++i) {
    w1.push_back((states[i] / n) % q);
    w2.push_back((states[i] % n) % q);
  }
  if (w2 < w1) std::swap(w1, w2);
  return {false, std::make_pair(std::move(w1), std::move(w2))};
}

inline CountMatrix count_walks(const EdgeSet& g, std::uint64_t k, std::uint64_t cap = 2) {
  if (k == 0) throw SpecError("walk length must be at least 1");
  return power(adjacency_matrix(g, cap), k);
}

// Horizon for the matrix-power uniqueness check: a violating walk pair of
// minimal length is a product-graph path that repeats no state except
// possibly its endpoints, so its length never exceeds the number of product
// states, q^(2d).
inline std::uint64_t max_power_bound(const GraphSpec& spec) {
  return checked_pow(spec.q, 2 * spec.d);
}

// Independent slow check: all saturated powers A^k, k <= horizon, must stay
// {0,1}-valued. Cross-validates the product-graph scan.
inline bool is_path_unique_by_powers(const EdgeSet& g, std::uint64_t horizon = 0) {
  if (horizon == 0) horizon = max_power_bound(g.spec());
  CountMatrix a = adjacency_matrix(g, 2);
  CountMatrix acc = a;
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    if (!acc.all_entries_at_most(1)) return false;
    if (acc.all_zero()) return true;
    if (k < horizon) acc = multiply(acc, a);
  }
  return true;
}

}  // namespace pathuniq
