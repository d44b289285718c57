#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace indcol {

using Vertex = int;

/**
 * Bitset over a fixed universe {0, ..., universe-1}.
 *
 * All binary operations require both operands to share the same universe
 * size. Bits at or above the universe size are always zero.
 */
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool test(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (static_cast<std::size_t>(v) % kWordBits)) & 1U;
  }
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < universe_ && test(v); }
  void set(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (static_cast<std::size_t>(v) % kWordBits); }
  void reset(Vertex v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (static_cast<std::size_t>(v) % kWordBits)); }
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool any() const { return !empty(); }

  // Lowest member, or -1 when empty.
  Vertex first() const;
  // Lowest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the universe.
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order on the member lists, used for deterministic sorting.
  bool operator<(const VertexSet& other) const;

  std::vector<Vertex> to_vector() const;
  const std::vector<Word>& words() const { return words_; }
  std::size_t hash() const;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace indcol

template <>
struct std::hash<indcol::VertexSet> {
  std::size_t operator()(const indcol::VertexSet& s) const noexcept { return s.hash(); }
};
