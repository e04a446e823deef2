#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pathuniq/core.hpp"

namespace pathuniq {

// Square matrix of walk counts with entries saturated at a cap. The default
// cap of 2 keeps the {0, 1, >=2} distinction, which is all the uniqueness
// checks need; pass kNoCap for exact counts (small exponents only).
class CountMatrix {
 public:
  static constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

  CountMatrix(std::size_t n, std::uint64_t cap = 2) : n_(n), cap_(cap), a_(n * n, 0) {
    if (cap == 0) throw SpecError("saturation cap must be positive");
  }

  std::size_t size() const { return n_; }
  std::uint64_t cap() const { return cap_; }

  std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * n_ + j] = v > cap_ ? cap_ : v; }

  bool all_entries_at_most(std::uint64_t v) const {
    for (std::uint64_t x : a_)
      if (x > v) return false;
    return true;
  }

  bool all_zero() const {
    for (std::uint64_t x : a_)
      if (x) return false;
    return true;
  }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t n_;
  std::uint64_t cap_;
  std::vector<std::uint64_t> a_;

  friend CountMatrix multiply(const CountMatrix& x, const CountMatrix& y);
};

inline CountMatrix adjacency_matrix(const EdgeSet& g, std::uint64_t cap = 2) {
  std::size_t n = static_cast<std::size_t>(g.spec().vertex_count());
  CountMatrix a(n, cap);
  g.for_each([&](EdgeIndex e) {
    auto [u, v] = edge_endpoints(g.spec(), e);
    a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1);
  });
  return a;
}

// Saturating product. Capping intermediate sums at the cap loses nothing:
// min(cap, sum of capped products) equals min(cap, exact sum) whenever the
// inputs are themselves capped exact counts, so powers stay faithful.
inline CountMatrix multiply(const CountMatrix& x, const CountMatrix& y) {
  if (x.size() != y.size() || x.cap() != y.cap())
    throw SpecError("matrix dimension/cap mismatch");
  std::size_t n = x.size();
  std::uint64_t cap = x.cap();
  CountMatrix r(n, cap);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t xik = x.a_[i * n + k];
      if (!xik) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t yv = y.a_[k * n + j];
        if (!yv) continue;
        std::uint64_t& rij = r.a_[i * n + j];
        if (cap != CountMatrix::kNoCap) {
          std::uint64_t add = xik > cap / yv ? cap : xik * yv;
          rij = rij >= cap - add ? cap : rij + add;
        } else {
          rij += xik * yv;
        }
      }
    }
  }
  return r;
}

inline CountMatrix power(const CountMatrix& a, std::uint64_t k) {
  if (k == 0) throw SpecError("matrix power requires k >= 1");
  CountMatrix base = a;
  CountMatrix result = a;
  --k;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

}  // namespace pathuniq
