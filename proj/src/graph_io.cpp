#include "sumdex/graph_io.hpp"

#include "sumdex/errors.hpp"

#include <charconv>
#include <sstream>

namespace sumdex {

namespace {

constexpr std::size_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

void put_bits(std::string& out, std::uint64_t value, int groups) {
  for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 63)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxOrder) throw InputError("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(out, n, 3);
  } else {
    out += "~~";
    put_bits(out, n, 6);
  }
  int filled = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const int bit = g.has_edge(i, j) ? 1 : 0;
      acc = (acc << 1) | bit;
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        filled = 0;
        acc = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 text truncated", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
    return c - 63;
  };
  std::uint64_t n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 text", pos);
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(byte_at(pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 2 + k));
    pos += 8;
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 1 + k));
    pos += 4;
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6 text truncated", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after graph6 body", pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding", last);
  }
  return Graph(n, std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::size_t pos = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    line.remove_prefix(lead);
    if (line.empty()) continue;
    const std::size_t at = line_start + lead;

    auto read_uint = [&](std::string_view& rest, std::size_t base) -> std::uint64_t {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr == rest.data()) throw ParseError("expected a vertex number", base);
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
      return value;
    };

    if (!have_n) {
      if (line.substr(0, 2) != "n=") throw ParseError("edge list must start with n=<k>", at);
      std::string_view rest = line.substr(2);
      n = read_uint(rest, at + 2);
      if (!trim(rest).empty()) throw ParseError("unexpected text after n=<k>", at);
      have_n = true;
      continue;
    }
    std::string_view rest = line;
    const auto u = read_uint(rest, at);
    std::size_t skipped = 0;
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
      rest.remove_prefix(1);
      ++skipped;
    }
    if (skipped == 0) throw ParseError("expected whitespace between endpoints", at);
    const auto v = read_uint(rest, at);
    if (!trim(rest).empty()) throw ParseError("unexpected text after edge", at);
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_n) throw ParseError("missing n=<k> header", 0);
  return Graph(n, std::move(edges));
}

Graph decode_graph_text(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  std::size_t i = 0;
  for (;;) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size() || text[i] != '#') break;
    i = text.find('\n', i);
    if (i == std::string_view::npos) i = text.size();
  }
  if (text.substr(i, 2) == "n=") return decode_edge_list(text);
  return decode_graph6(text.substr(i));
}

}  // namespace sumdex
