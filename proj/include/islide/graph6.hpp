#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "islide/errors.hpp"
#include "islide/graph.hpp"

namespace islide {

// graph6 supports up to 258047 vertices here; the 8-byte size form is rejected.
inline constexpr std::size_t kMaxGraph6Order = 258047;

namespace detail {
inline std::size_t graph6_body_length(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }
}  // namespace detail

// Parses one graph6 string. An optional ">>graph6<<" header and trailing
// whitespace are accepted; everything else must be exact, including zero
// padding bits.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty string");
  for (char c : text)
    if (c < 63 || c > 126) throw FormatError("graph6: character out of range");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126)
      throw FormatError("graph6: orders above " + std::to_string(kMaxGraph6Order) +
                        " are not supported");
    if (text.size() < 4) throw FormatError("graph6: truncated size field");
    n = static_cast<std::size_t>(text[1] - 63) << 12 | static_cast<std::size_t>(text[2] - 63) << 6 |
        static_cast<std::size_t>(text[3] - 63);
    if (n < 63) throw FormatError("graph6: non-canonical size field");
    pos = 4;
  }
  const std::size_t body = n < 2 ? 0 : detail::graph6_body_length(n);
  if (text.size() - pos != body)
    throw FormatError("graph6: expected " + std::to_string(body) + " data bytes, got " +
                      std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t bit = 0;
  auto get = [&](std::size_t k) {
    const int byte = text[pos + k / 6] - 63;
    return (byte >> (5 - k % 6)) & 1;
  };
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (get(bit)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  for (; bit < body * 6; ++bit)
    if (get(bit)) throw FormatError("graph6: nonzero padding bits");
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw FormatError("graph6: graph too large");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>((n >> 12 & 63) + 63));
    out.push_back(static_cast<char>((n >> 6 & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  if (n < 2) return out;
  const std::size_t body = detail::graph6_body_length(n);
  std::string data(body, 0);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        data[bit / 6] = static_cast<char>(data[bit / 6] | (1 << (5 - bit % 6)));
  for (char& c : data) c = static_cast<char>(c + 63);
  return out + data;
}

}  // namespace islide
