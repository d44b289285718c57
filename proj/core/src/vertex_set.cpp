#include "indcol/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace indcol {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    assert(v >= 0 && static_cast<std::size_t>(v) < universe);
    set(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

void VertexSet::trim() {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return -1;
  std::size_t i = pos / kWordBits;
  Word w = words_[i] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
    if (++i >= words_.size()) return -1;
    w = words_[i];
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.trim();
  return c;
}

bool VertexSet::operator<(const VertexSet& other) const {
  const auto a = to_vector();
  const auto b = other.to_vector();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = universe_ * 0x9E3779B97F4A7C15ULL;
  for (Word w : words_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}

}  // namespace indcol
