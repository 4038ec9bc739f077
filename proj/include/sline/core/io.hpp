#pragma once

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sline/core/hypergraph.hpp"

namespace sline {

/// Which column of a bipartite pair file names the hyperedge.
enum class Orientation { edge_major, vertex_major };

/// How file IDs become dense IDs. `automatic` keeps them verbatim unless the
/// ID space is less than half occupied, in which case it compacts.
enum class IdPolicy { automatic, verbatim, compact };

struct LoadOptions {
  Orientation orientation = Orientation::edge_major;
  IdPolicy ids = IdPolicy::automatic;
};

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline bool is_gzip(std::string_view bytes) {
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
         static_cast<unsigned char>(bytes[1]) == 0x8b;
}

inline std::string gunzip(std::string_view compressed) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) throw std::runtime_error("gzip: inflateInit failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());

  std::string out;
  char buffer[1 << 16];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof(buffer);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip: corrupt stream");
    }
    out.append(buffer, sizeof(buffer) - zs.avail_out);
    // concatenated gzip members
    if (rc == Z_STREAM_END && zs.avail_in > 0) {
      inflateReset(&zs);
      rc = Z_OK;
    }
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip: truncated stream");
    }
  }
  inflateEnd(&zs);
  return out;
}

inline label_t parse_id(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '-') {
    std::int64_t probe = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), probe);
    if (ec == std::errc{} && p == token.data() + token.size())
      throw std::domain_error("line " + std::to_string(line) + ": negative id " + std::string(token));
    throw parse_error(line, "not an integer id: '" + std::string(token) + "'");
  }
  label_t value = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || p != token.data() + token.size())
    throw parse_error(line, "not an integer id: '" + std::string(token) + "'");
  return value;
}

// Dense IDs for one side. Returns the label table, empty when IDs stay verbatim.
inline std::vector<label_t> densify(std::vector<label_t>& ids, IdPolicy policy, std::size_t& count) {
  std::vector<label_t> distinct(ids);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() > std::numeric_limits<index_t>::max())
    throw std::length_error("bipartite input: too many distinct ids");

  const label_t span = distinct.empty() ? 0 : distinct.back() + 1;
  bool verbatim = policy == IdPolicy::verbatim ||
                  (policy == IdPolicy::automatic && span <= 2 * distinct.size());
  if (verbatim && span > std::numeric_limits<index_t>::max()) {
    if (policy == IdPolicy::verbatim) throw std::length_error("bipartite input: id exceeds index range");
    verbatim = false;
  }
  if (verbatim) {
    count = static_cast<std::size_t>(span);
    return {};
  }
  for (auto& id : ids) {
    id = static_cast<label_t>(std::lower_bound(distinct.begin(), distinct.end(), id) - distinct.begin());
  }
  count = distinct.size();
  return distinct;
}

}  // namespace detail

/**
 * Parses a bipartite pair list: one `ID ID` pair per line, `#` comment lines
 * and blank lines skipped. Accepts gzip-compressed content transparently.
 *
 * Throws parse_error (with the line number) on a malformed line and
 * std::domain_error on a negative ID.
 */
inline Hypergraph load_bipartite_text(std::string_view text, LoadOptions opts = {}) {
  std::string inflated;
  if (detail::is_gzip(text)) {
    inflated = detail::gunzip(text);
    text = inflated;
  }

  std::vector<label_t> edge_ids;
  std::vector<label_t> vertex_ids;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    auto skip_ws = [&line] {
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r'))
        line.remove_prefix(1);
    };
    auto next_token = [&line, &skip_ws] {
      skip_ws();
      std::size_t len = 0;
      while (len < line.size() && line[len] != ' ' && line[len] != '\t' && line[len] != '\r') ++len;
      auto tok = line.substr(0, len);
      line.remove_prefix(len);
      return tok;
    };

    skip_ws();
    if (line.empty() || line.front() == '#') continue;
    auto first = next_token();
    auto second = next_token();
    if (second.empty()) throw parse_error(line_no, "expected two ids");
    skip_ws();
    if (!line.empty()) throw parse_error(line_no, "trailing tokens after id pair");

    label_t a = detail::parse_id(first, line_no);
    label_t b = detail::parse_id(second, line_no);
    if (opts.orientation == Orientation::vertex_major) std::swap(a, b);
    edge_ids.push_back(a);
    vertex_ids.push_back(b);
  }

  std::size_t m = 0;
  std::size_t n = 0;
  auto edge_labels = detail::densify(edge_ids, opts.ids, m);
  auto vertex_labels = detail::densify(vertex_ids, opts.ids, n);

  std::vector<std::pair<index_t, index_t>> pairs(edge_ids.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pairs[k] = {static_cast<index_t>(edge_ids[k]), static_cast<index_t>(vertex_ids[k])};
  }
  auto h = Hypergraph::from_incidences(std::move(pairs), n, m);
  h.set_labels(std::move(edge_labels), std::move(vertex_labels));
  return h;
}

inline Hypergraph load_bipartite(std::istream& in, LoadOptions opts = {}) {
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw std::runtime_error("bipartite input: read failure");
  return load_bipartite_text(bytes, opts);
}

inline Hypergraph load_bipartite_file(const std::filesystem::path& path, LoadOptions opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_bipartite(in, opts);
}

/// Writes edge-major `edge<TAB>vertex` pairs using the recorded labels.
inline void write_bipartite(std::ostream& out, const Hypergraph& h) {
  for (index_t e = 0; e < h.num_edges(); ++e) {
    for (index_t v : h.edge(e)) out << h.edge_label(e) << '\t' << h.vertex_label(v) << '\n';
  }
}

}  // namespace sline
