#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pathuniq/bounds.hpp"
#include "pathuniq/core.hpp"

namespace pathuniq {

// A set of distinct q-ary label words of common length m, kept sorted; the
// 1-based position of a label in this order is its rank.
struct LabelSet {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::vector<Word> labels;

  static LabelSet from_words(std::uint32_t q, std::uint32_t m, std::vector<Word> words) {
    if (q < 2) throw SpecError("alphabet size q must be at least 2");
    if (m < 1) throw SpecError("label length m must be at least 1");
    for (const Word& w : words) {
      if (w.size() != m) throw SpecError("label word of wrong length");
      for (Symbol s : w)
        if (s >= q) throw SpecError("label symbol outside alphabet");
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
      throw SpecError("duplicate label word");
    return {q, m, std::move(words)};
  }

  std::size_t size() const { return labels.size(); }
};

// Labels are the non-edges: the complement of a subgraph of B_{q,d} is a
// label set of length d+1, and vice versa. The two maps are inverse.
inline LabelSet label_set_from_subgraph(const EdgeSet& g) {
  const GraphSpec& spec = g.spec();
  std::vector<Word> words;
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e)
    if (!g.contains(e)) words.push_back(edge_word(spec, e));
  LabelSet out;
  out.q = spec.q;
  out.m = spec.d + 1;
  out.labels = std::move(words);  // already sorted: index order is lex order
  return out;
}

inline EdgeSet subgraph_from_label_set(const LabelSet& a) {
  if (a.m < 2) throw SpecError("need label length m >= 2 to form a subgraph");
  GraphSpec spec(a.q, a.m - 1);
  EdgeSet g = build_full_graph(spec);
  for (const Word& w : a.labels) g.erase(edge_index(spec, w));
  return g;
}

// c_i is the rank of the length-m window starting at position i when that
// window is a label, and 0 otherwise; the last m-1 positions, where no full
// window fits, are always 0. Positions are 1-based in the write-up and
// 0-based here.
inline std::vector<std::uint32_t> label_sequence(std::uint32_t q, const Word& x,
                                                 const LabelSet& a) {
  if (q != a.q) throw SpecError("alphabet mismatch between word and label set");
  for (Symbol s : x)
    if (s >= q) throw SpecError("word symbol outside alphabet");
  std::vector<std::uint64_t> codes(a.labels.size());
  for (std::size_t i = 0; i < a.labels.size(); ++i) codes[i] = encode_word(q, a.labels[i]);
  std::vector<std::uint32_t> c(x.size(), 0);
  if (x.size() < a.m) return c;
  std::uint64_t win = 0;
  std::uint64_t mod = checked_pow(q, a.m - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    win = (win % mod) * q + x[i];
    if (i + 1 >= a.m) {
      auto it = std::lower_bound(codes.begin(), codes.end(), win);
      if (it != codes.end() && *it == win)
        c[i + 1 - a.m] = static_cast<std::uint32_t>(it - codes.begin()) + 1;
    }
  }
  return c;
}

// Number of distinct labeling sequences over all q^n inputs of length n.
// Exhaustive by design; the guard keeps the state space honest.
inline std::uint64_t count_distinct_labelings(std::uint32_t q, std::uint32_t n,
                                              const LabelSet& a,
                                              std::uint64_t guard = kDefaultEnumGuard) {
  if (n < 1) throw SpecError("word length n must be at least 1");
  std::uint64_t space = checked_pow(q, n);
  if (space > guard) throw GuardError("labeling enumeration exceeds the guard");

  std::uint64_t out_alphabet = a.size() + 1;
  bool packable = true;
  std::uint64_t pack_cap = 1;
  for (std::uint32_t i = 0; i < n && packable; ++i) {
    if (pack_cap > (std::uint64_t{1} << 62) / out_alphabet) packable = false;
    pack_cap *= out_alphabet;
  }

  Word x(n, 0);
  std::uint64_t count = 0;
  if (packable) {
    std::vector<std::uint64_t> seen;
    seen.reserve(space);
    for (std::uint64_t w = 0; w < space; ++w) {
      std::uint64_t rest = w;
      for (std::uint32_t i = 0; i < n; ++i) {
        x[n - 1 - i] = static_cast<Symbol>(rest % q);
        rest /= q;
      }
      std::uint64_t packed = 0;
      for (std::uint32_t v : label_sequence(q, x, a)) packed = packed * out_alphabet + v;
      seen.push_back(packed);
    }
    std::sort(seen.begin(), seen.end());
    count = std::unique(seen.begin(), seen.end()) - seen.begin();
  } else {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t w = 0; w < space; ++w) {
      std::uint64_t rest = w;
      for (std::uint32_t i = 0; i < n; ++i) {
        x[n - 1 - i] = static_cast<Symbol>(rest % q);
        rest /= q;
      }
      seen.insert(label_sequence(q, x, a));
    }
    count = seen.size();
  }
  return count;
}

struct RatePoint {
  std::uint32_t n = 0;
  std::uint64_t distinct = 0;
  double rate = 0.0;  // log2(distinct) / n
};

// Empirical information rate of the labeling channel for n = m..n_max.
inline std::vector<RatePoint> empirical_rate(std::uint32_t q, std::uint32_t n_max,
                                             const LabelSet& a,
                                             std::uint64_t guard = kDefaultEnumGuard) {
  if (n_max < a.m) throw SpecError("n_max must be at least the label length");
  std::vector<RatePoint> out;
  for (std::uint32_t n = a.m; n <= n_max; ++n) {
    std::uint64_t c = count_distinct_labelings(q, n, a, guard);
    out.push_back({n, c, std::log2(static_cast<double>(c)) / n});
  }
  return out;
}

}  // namespace pathuniq
