#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/trace.hpp"

namespace netcover {

/// Malformed input file. The message carries "<source>:<line>: ..." context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] inline void fail(std::string_view source, std::size_t line_no,
                              const std::string& msg) {
  throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
}

inline std::int64_t parse_int(std::string_view token, std::string_view source,
                              std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(source, line_no, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

inline double parse_double(std::string_view token, std::string_view source,
                           std::size_t line_no) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(source, line_no, "expected a number, got '" + std::string(token) + "'");
  return value;
}

// Blank lines and '#' comment lines are skipped by every loader.
inline bool significant(const std::vector<std::string_view>& tokens) {
  return !tokens.empty() && tokens[0][0] != '#';
}

}  // namespace detail

inline std::string read_file_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path.string());
  return std::move(buf).str();
}

/// Writes via a temporary sibling plus rename, so readers never observe a
/// partially written file.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// Shortest round-trippable decimal for doubles in reports and CSV cells.
inline std::string fmt_double(double x, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

// --- network text format -----------------------------------------------
// Header "N <node_count>", then one "src dst" line per edge. Blank lines
// and lines starting with '#' are ignored on load; writers emit the header
// plus edges sorted by (src, dst).

inline std::string network_to_string(const Network& net) {
  std::string out = "N " + std::to_string(net.node_count()) + "\n";
  for (const Edge& e : net.edges())
    out += std::to_string(e.src) + " " + std::to_string(e.dst) + "\n";
  return out;
}

inline Network network_from_string(std::string_view text,
                                   std::string_view source = "<string>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  NodeId n = 0;
  Network net(1);
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (!detail::significant(tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "N")
        detail::fail(source, line_no, "expected header 'N <node_count>'");
      std::int64_t v = detail::parse_int(tokens[1], source, line_no);
      if (v < 1 || v > std::numeric_limits<NodeId>::max())
        detail::fail(source, line_no, "node count out of range");
      n = static_cast<NodeId>(v);
      net = Network(n);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2)
      detail::fail(source, line_no, "expected 'src dst'");
    std::int64_t s = detail::parse_int(tokens[0], source, line_no);
    std::int64_t d = detail::parse_int(tokens[1], source, line_no);
    if (s < 0 || s >= n || d < 0 || d >= n)
      detail::fail(source, line_no, "node id out of range for node count " + std::to_string(n));
    if (s == d) detail::fail(source, line_no, "self-loop " + std::string(tokens[0]));
    if (!net.add_edge(static_cast<NodeId>(s), static_cast<NodeId>(d)))
      detail::fail(source, line_no, "duplicate edge");
  }
  if (!have_header) detail::fail(source, line_no, "missing header 'N <node_count>'");
  return net;
}

inline void save_network(const Network& net, const std::filesystem::path& path) {
  write_file_atomic(path, network_to_string(net));
}

inline Network load_network(const std::filesystem::path& path) {
  return network_from_string(read_file_text(path), path.string());
}

// --- trace text format --------------------------------------------------
// Header "N <node_count>", then one line per trace: reporting node ids in
// report order. A header-only file is a dataset with zero traces.

inline std::string traces_to_string(const MarkerDataset& ds) {
  std::string out = "N " + std::to_string(ds.node_count()) + "\n";
  for (const MarkerTrace& t : ds) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(t[i]);
    }
    out += '\n';
  }
  return out;
}

inline MarkerDataset traces_from_string(std::string_view text,
                                        std::string_view source = "<string>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  NodeId n = 0;
  MarkerDataset ds(1);
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (!detail::significant(tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "N")
        detail::fail(source, line_no, "expected header 'N <node_count>'");
      std::int64_t v = detail::parse_int(tokens[1], source, line_no);
      if (v < 1 || v > std::numeric_limits<NodeId>::max())
        detail::fail(source, line_no, "node count out of range");
      n = static_cast<NodeId>(v);
      ds = MarkerDataset(n);
      have_header = true;
      continue;
    }
    std::vector<NodeId> nodes;
    nodes.reserve(tokens.size());
    for (auto tok : tokens) {
      std::int64_t v = detail::parse_int(tok, source, line_no);
      if (v < 0 || v >= n)
        detail::fail(source, line_no,
                     "node id out of range for node count " + std::to_string(n));
      nodes.push_back(static_cast<NodeId>(v));
    }
    try {
      ds.add_trace(MarkerTrace(std::move(nodes)));
    } catch (const std::invalid_argument& e) {
      detail::fail(source, line_no, e.what());
    }
  }
  if (!have_header) detail::fail(source, line_no, "missing header 'N <node_count>'");
  return ds;
}

inline void save_traces(const MarkerDataset& ds, const std::filesystem::path& path) {
  write_file_atomic(path, traces_to_string(ds));
}

inline MarkerDataset load_traces(const std::filesystem::path& path) {
  return traces_from_string(read_file_text(path), path.string());
}

}  // namespace netcover
