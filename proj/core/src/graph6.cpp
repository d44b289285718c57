#include "indcol/graph6.hpp"

#include <cstdint>

namespace indcol {

namespace {

constexpr int kOffset = 63;

int sextet(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError("graph6: character " + std::to_string(v) + " at offset " + std::to_string(pos) +
                     " outside 63..126");
  return v - kOffset;
}

}  // namespace

Graph from_graph6(std::string_view text, std::size_t capacity) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0], 0));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated 18-bit length prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i], i));
    if (n < 63) throw ParseError("graph6: non-canonical length prefix");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated 36-bit length prefix");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i], i));
    if (n < 258048) throw ParseError("graph6: non-canonical length prefix");
    pos = 8;
  }
  if (n > capacity)
    throw LimitExceeded(Resource::capacity, capacity, "graph6: n=" + std::to_string(n) + " exceeds capacity");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars)
    throw ParseError("graph6: body has " + std::to_string(text.size() - pos) + " characters, expected " +
                     std::to_string(chars));

  GraphBuilder b(static_cast<std::size_t>(n), capacity);
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = sextet(text[at], at);
      if ((value >> (5 - k % 6)) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (k % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    const int value = sextet(text[at], at);
    if (value & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0, filled = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace indcol
