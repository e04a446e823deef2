#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathuniq/constructions.hpp"
#include "pathuniq/core.hpp"
#include "pathuniq/exact.hpp"

namespace pathuniq {

inline constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t{1} << 26;

// Largest path-unique subgraph of B_{q,1}: (q+1)^2/4 edges for odd q,
// q(q+2)/4 for even q. The argument may itself be a power q^d, hence BigInt.
inline BigInt gamma_q1(const BigInt& q) {
  if (q < 1) throw SpecError("gamma(q,1) needs q >= 1");
  if (q % 2 == 1) return (q + 1) * (q + 1) / 4;
  return q * (q + 2) / 4;
}

// Number of length-(d+k) words over q symbols that contain a fixed
// non-self-overlapping pattern of length d+1, by inclusion-exclusion over the
// number of disjoint placements:
//   eta(q,d,k) = sum_{i>=1} (-1)^(i+1) q^(d+k-i(d+1)) C(k-(i-1)d, i)
inline BigInt eta_closed_form(std::uint32_t q, std::uint32_t d, std::uint32_t k) {
  if (k < 1) throw SpecError("eta needs k >= 1");
  BigInt total = 0;
  std::uint64_t dk = std::uint64_t{d} + k;
  for (std::uint64_t i = 1; i * (d + 1) <= dk; ++i) {
    BigInt term = big_pow(q, dk - i * (d + 1)) *
                  binomial(BigInt(k) - BigInt(i - 1) * d, BigInt(i));
    if (i % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Brute-force count of length-(d+k) words containing `pattern` (length d+1)
// as a contiguous subword. Deliberately naive; this is the oracle the closed
// form is tested against.
inline std::uint64_t eta_oracle(std::uint32_t q, std::uint32_t d, std::uint32_t k,
                                const Word& pattern, std::uint64_t guard = kDefaultEnumGuard) {
  if (pattern.size() != d + 1) throw SpecError("pattern must have length d+1");
  for (Symbol s : pattern)
    if (s >= q) throw SpecError("pattern symbol outside alphabet");
  std::uint32_t len = d + k;
  std::uint64_t space = checked_pow(q, len);
  if (space > guard) throw GuardError("word enumeration exceeds the guard");
  std::vector<Symbol> w(len, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t it = 0;; ++it) {
    for (std::uint32_t start = 0; start + d + 1 <= len; ++start) {
      bool match = true;
      for (std::uint32_t j = 0; j <= d && match; ++j)
        if (w[start + j] != pattern[j]) match = false;
      if (match) {
        ++hits;
        break;
      }
    }
    // odometer increment
    std::uint32_t pos = len;
    while (pos > 0) {
      --pos;
      if (++w[pos] < q) break;
      w[pos] = 0;
      if (pos == 0) return hits;
    }
    if (it + 1 == space) return hits;
  }
}

inline std::uint64_t eta_oracle_max(std::uint32_t q, std::uint32_t d, std::uint32_t k,
                                    std::uint64_t guard = kDefaultEnumGuard) {
  GraphSpec spec(q, d);
  std::uint64_t best = 0;
  for (EdgeIndex p = 0; p < spec.edge_count(); ++p) {
    std::uint64_t v = eta_oracle(q, d, k, edge_word(spec, p), guard);
    if (v > best) best = v;
  }
  return best;
}

// gamma(q,d) <= q^(d+1) - (q^(d+k) - gamma(q^d, 1)) / eta(q,d,k), any k >= 1.
inline BigRat upper_bound_theorem5_exact(std::uint32_t q, std::uint32_t d, std::uint32_t k) {
  BigInt qd1 = big_pow(q, std::uint64_t{d} + 1);
  BigInt qdk = big_pow(q, std::uint64_t{d} + k);
  BigInt eta = eta_closed_form(q, d, k);
  return BigRat(qd1) - BigRat(qdk - gamma_q1(big_pow(q, d)), eta);
}

inline BigInt upper_bound_theorem5(std::uint32_t q, std::uint32_t d, std::uint32_t k) {
  return floor_rat(upper_bound_theorem5_exact(q, d, k));
}

struct BestUpperBound {
  BigInt value;   // floor of the best exact bound
  std::uint32_t k;  // walk length attaining it (smallest on ties)
  BigRat exact;   // the unfloored rational minimum
};

// Minimizes the exact rational bound over k = 1..2(d+1) and floors once at
// the end. The window suffices: past it the subtracted term only shrinks.
inline BestUpperBound upper_bound_best(std::uint32_t q, std::uint32_t d) {
  std::optional<BestUpperBound> best;
  for (std::uint32_t k = 1; k <= 2 * (d + 1); ++k) {
    BigRat v = upper_bound_theorem5_exact(q, d, k);
    if (!best || v < best->exact) best = BestUpperBound{floor_rat(v), k, v};
  }
  return *best;
}

struct Corollary3Bounds {
  BigRat at_k_d;    // bound evaluated at k = d
  BigRat at_k_d1;   // bound evaluated at k = d+1
  BigRat asymptotic_cap;  // lim gamma/q^(d+1) <= min(1 - 1/(d+1), 1 - 3/(4d))
};

// The two closed forms evaluate the counting upper bound at k = d and
// k = d+1 (each exact under one parity of q^d), kept as reference output.
inline Corollary3Bounds corollary3_expressions(std::uint32_t q, std::uint32_t d) {
  BigInt qd1 = big_pow(q, std::uint64_t{d} + 1);
  BigInt qd = big_pow(q, d);
  BigRat a = BigRat(qd1) * (BigRat(1) - BigRat(3, 4 * std::uint64_t{d}) +
                            BigRat(BigInt(1), BigInt(2) * d * qd));
  std::uint64_t d1 = std::uint64_t{d} + 1;
  BigRat b = BigRat(qd1) *
             (BigRat(1) - BigRat(1, d1) + BigRat(BigInt(1), BigInt(4) * q * d1) +
              BigRat(BigInt(1), BigInt(2) * d1 * qd1) +
              BigRat(BigInt(1), BigInt(4) * d1 * (qd1 * qd1 / q)));
  BigRat cap1 = BigRat(1) - BigRat(1, d1);
  BigRat cap2 = BigRat(1) - BigRat(3, 4 * std::uint64_t{d});
  return {a, b, cap1 < cap2 ? cap1 : cap2};
}

// Construction-1 density limits: (q+1)/2q for fixed q, 1/2 - 1/(d+1)! for
// fixed d.
inline BigRat corollary2_fixed_q_limit(std::uint32_t q) {
  return BigRat(std::uint64_t{q} + 1, 2 * std::uint64_t{q});
}

inline BigRat corollary2_fixed_d_limit(std::uint32_t d) {
  BigInt fact = 1;
  for (std::uint32_t i = 2; i <= d + 1; ++i) fact *= i;
  return BigRat(1, 2) - BigRat(BigInt(1), fact);
}

// Fewest labels of length m = d+1 that make every long-enough q-ary word
// recoverable from its labeling: s(q, d+1) = q^(d+1) - gamma(q,d).
inline BigInt s_from_gamma(std::uint32_t q, std::uint32_t d, const BigInt& gamma_value) {
  BigInt qd1 = big_pow(q, std::uint64_t{d} + 1);
  if (gamma_value < 0 || gamma_value > qd1) throw SpecError("gamma value out of range");
  return qd1 - gamma_value;
}

// m = 1 is exact: q-1 labels suffice and are necessary.
inline std::uint64_t s_q1(std::uint32_t q) {
  if (q < 2) throw SpecError("alphabet size q must be at least 2");
  return q - 1;
}

struct BoundsReport {
  GraphSpec spec;
  BigInt lb_construction1;
  std::optional<BigInt> lb_construction2;  // d == 2 only
  BigInt ub_theorem5;
  std::uint32_t ub_k_used = 0;
  std::optional<std::uint64_t> lb_search;  // filled by callers that ran one
};

inline BoundsReport make_bounds_report(const GraphSpec& spec) {
  BoundsReport r{spec, construction1_count(spec), std::nullopt, 0, 0, std::nullopt};
  if (spec.d == 2) r.lb_construction2 = construction2_count(spec.q);
  BestUpperBound ub = upper_bound_best(spec.q, spec.d);
  r.ub_theorem5 = ub.value;
  r.ub_k_used = ub.k;
  return r;
}

inline std::string bounds_csv_header() { return "q,d,lb_comp,lb_thm3,lb_thm4,ub_thm5"; }

inline std::string bounds_csv_row(const BoundsReport& r) {
  std::string row = std::to_string(r.spec.q) + "," + std::to_string(r.spec.d) + ",";
  row += r.lb_search ? std::to_string(*r.lb_search) : "-";
  row += "," + r.lb_construction1.str() + ",";
  row += r.lb_construction2 ? r.lb_construction2->str() : "-";
  row += "," + r.ub_theorem5.str();
  return row;
}

inline nlohmann::json bounds_to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["q"] = r.spec.q;
  j["d"] = r.spec.d;
  j["lb_construction1"] = r.lb_construction1.str();
  if (r.lb_construction2)
    j["lb_construction2"] = r.lb_construction2->str();
  else
    j["lb_construction2"] = nullptr;
  j["ub_theorem5"] = r.ub_theorem5.str();
  j["ub_k"] = r.ub_k_used;
  if (r.lb_search)
    j["lb_search"] = *r.lb_search;
  else
    j["lb_search"] = nullptr;
  return j;
}

// The (q,d) pairs of the reference comparison table.
inline std::vector<GraphSpec> table_rows() {
  std::vector<GraphSpec> rows;
  for (std::uint32_t d = 2; d <= 9; ++d) rows.emplace_back(2, d);
  for (std::uint32_t d = 2; d <= 6; ++d) rows.emplace_back(3, d);
  for (std::uint32_t d = 2; d <= 5; ++d) rows.emplace_back(4, d);
  for (std::uint32_t d = 2; d <= 3; ++d) rows.emplace_back(5, d);
  return rows;
}

}  // namespace pathuniq
