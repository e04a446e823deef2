#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathuniq {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;  // q-ary word, most significant symbol first
using VertexIndex = std::uint64_t;
using EdgeIndex = std::uint64_t;

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Ceiling for q^(d+1); indices stay well clear of uint64 overflow.
inline constexpr std::uint64_t kMaxIndexSpace = std::uint64_t{1} << 62;

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxIndexSpace / base)
      throw SpecError("q^" + std::to_string(exp) + " exceeds the supported index range");
    r *= base;
  }
  return r;
}

// The de Bruijn graph B_{q,d}: vertices are q-ary words of length d, edges are
// q-ary words of length d+1. An edge (x_1,...,x_{d+1}) runs from its length-d
// prefix to its length-d suffix.
struct GraphSpec {
  std::uint32_t q = 0;
  std::uint32_t d = 0;

  GraphSpec(std::uint32_t q_, std::uint32_t d_) : q(q_), d(d_) {
    if (q < 2) throw SpecError("alphabet size q must be at least 2");
    if (d < 1) throw SpecError("dimension d must be at least 1");
    checked_pow(q, d + 1);  // rejects specs whose edge indices overflow
  }

  std::uint64_t vertex_count() const { return checked_pow(q, d); }
  std::uint64_t edge_count() const { return checked_pow(q, d + 1); }

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

// Words encode to integers most-significant-symbol first, so lexicographic
// order on words coincides with integer order on indices.
inline std::uint64_t encode_word(std::uint32_t q, const Word& w) {
  std::uint64_t v = 0;
  for (Symbol s : w) {
    if (s >= q) throw SpecError("symbol " + std::to_string(s) + " out of alphabet");
    v = v * q + s;
  }
  return v;
}

inline Word decode_word(std::uint32_t q, std::uint32_t length, std::uint64_t index) {
  Word w(length);
  for (std::uint32_t i = 0; i < length; ++i) {
    w[length - 1 - i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return w;
}

inline EdgeIndex edge_index(const GraphSpec& spec, const Word& edge_word) {
  if (edge_word.size() != spec.d + 1) throw SpecError("edge word must have length d+1");
  return encode_word(spec.q, edge_word);
}

inline Word edge_word(const GraphSpec& spec, EdgeIndex e) {
  if (e >= spec.edge_count()) throw std::out_of_range("edge index out of range");
  return decode_word(spec.q, spec.d + 1, e);
}

inline Word vertex_word(const GraphSpec& spec, VertexIndex v) {
  if (v >= spec.vertex_count()) throw std::out_of_range("vertex index out of range");
  return decode_word(spec.q, spec.d, v);
}

// (prefix, suffix) of the edge word, as vertex indices.
inline std::pair<VertexIndex, VertexIndex> edge_endpoints(const GraphSpec& spec, EdgeIndex e) {
  std::uint64_t n = spec.vertex_count();
  if (e >= spec.edge_count()) throw std::out_of_range("edge index out of range");
  return {e / spec.q, e % n};
}

// A subgraph of B_{q,d}, stored as a bitset over edge indices.
class EdgeSet {
 public:
  explicit EdgeSet(GraphSpec spec)
      : spec_(spec), bits_((spec.edge_count() + 63) / 64, 0) {}

  const GraphSpec& spec() const { return spec_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(EdgeIndex e) const {
    check_range(e);
    return (bits_[e >> 6] >> (e & 63)) & 1;
  }

  // Returns true if the edge was newly inserted.
  bool insert(EdgeIndex e) {
    check_range(e);
    std::uint64_t& w = bits_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool erase(EdgeIndex e) {
    check_range(e);
    std::uint64_t& w = bits_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  // Visits members in ascending index order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
      std::uint64_t w = bits_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<EdgeIndex>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<EdgeIndex> indices() const {
    std::vector<EdgeIndex> out;
    out.reserve(count_);
    for_each([&](EdgeIndex e) { out.push_back(e); });
    return out;
  }

  std::span<const std::uint64_t> blocks() const { return bits_; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.spec_ == b.spec_ && a.bits_ == b.bits_;
  }

 private:
  void check_range(EdgeIndex e) const {
    if (e >= spec_.edge_count()) throw std::out_of_range("edge index out of range");
  }

  GraphSpec spec_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t count_ = 0;
};

inline EdgeSet build_full_graph(const GraphSpec& spec) {
  EdgeSet s(spec);
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e) s.insert(e);
  return s;
}

}  // namespace pathuniq
