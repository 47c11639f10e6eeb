#include "graph6.hpp"

namespace circ {

namespace {

constexpr int kBias = 63;

int payload_value(unsigned char c) {
  if (c < 63 || c > 126)
    fail(Status::non_ascii_byte,
         "byte " + std::to_string(static_cast<int>(c)) +
             " outside graph6 range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) fail(Status::malformed_header, "empty graph6 line");

  size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    // Long-form order: '~' + 3 payload bytes, or '~~' + 6 payload bytes.
    size_t width = text.size() > 1 && text[1] == '~' ? 6 : 3;
    size_t start = width == 6 ? 2 : 1;
    if (text.size() < start + width)
      fail(Status::malformed_header, "truncated long-form order header");
    for (size_t i = 0; i < width; ++i)
      n = (n << 6) | payload_value(static_cast<unsigned char>(text[start + i]));
    pos = start + width;
  } else {
    n = payload_value(static_cast<unsigned char>(text[0]));
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    fail(Status::too_large,
         "graph6 order " + std::to_string(n) + " exceeds supported 62");

  int order = static_cast<int>(n);
  int nbits = order * (order - 1) / 2;
  int ngroups = (nbits + 5) / 6;
  if (static_cast<int>(text.size() - pos) < ngroups)
    fail(Status::truncated_bits, "graph6 payload shorter than n(n-1)/2 bits");
  if (static_cast<int>(text.size() - pos) > ngroups)
    fail(Status::malformed_header, "trailing bytes after graph6 payload");

  std::vector<std::uint64_t> rows(static_cast<size_t>(order), 0);
  int bit_index = 0;
  for (int k = 0; k < ngroups; ++k) {
    int group = payload_value(static_cast<unsigned char>(text[pos + k]));
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int value = group >> b & 1;
      if (bit_index >= nbits) {
        if (value) fail(Status::malformed_header, "nonzero graph6 padding");
        continue;
      }
      if (value) {
        // Upper triangle, column major: bit t covers pair (u, v) with
        // v the column and u < v the row.
        int v = 1;
        int t = bit_index;
        while (t >= v) t -= v++;
        int u = t;
        rows[static_cast<size_t>(u)] |= bit(v);
        rows[static_cast<size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(order, std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > Graph::kMaxOrder)
    fail(Status::too_large, "short graph6 form requires n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = group << 1 | (g.neighbors(u) >> v & 1u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace circ
