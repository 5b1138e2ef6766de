#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "c2lab/error.hpp"

namespace c2lab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Fixed-capacity bitset over edge ids. Enumeration routines are exponential
/// in the edge count, so 256 edges is far beyond anything they can finish.
class EdgeSet {
 public:
  static constexpr std::size_t kCapacity = 256;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(static_cast<std::uint32_t>(universe)) {
    if (universe > kCapacity) {
      throw InvalidInput("edge sets support at most 256 edges");
    }
  }

  static EdgeSet full(std::size_t universe) {
    EdgeSet s(universe);
    for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<EdgeId>(e));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(EdgeId e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(EdgeId e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeId e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept { return size() == 0; }

  EdgeSet complement() const {
    EdgeSet out = full(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
    return out;
  }

  EdgeSet& operator|=(const EdgeSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  EdgeSet& operator-=(const EdgeSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) noexcept { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) noexcept { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) noexcept { return a -= b; }

  bool intersects(const EdgeSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<EdgeId>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<EdgeId> to_vector() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::array<std::uint64_t, kCapacity / 64> words_{};
  std::uint32_t universe_ = 0;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept { return s.hash(); }
};

}  // namespace c2lab
