#include "wpart/hgr_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace wpart {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-comment line; blank lines are skipped as well.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '%') continue;
      return true;
    }
    ++number_;
    return false;
  }

  std::size_t number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::int64_t> parse_numbers(std::string_view line, const LineReader& reader) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      reader.fail("expected an integer, got '" + std::string(line.substr(i)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Hypergraph parse_hgr(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) reader.fail("missing header");
  const auto header = parse_numbers(line, reader);
  if (header.size() < 2 || header.size() > 3) reader.fail("header must be '|E| |V| [fmt]'");
  const std::int64_t m = header[0];
  const std::int64_t n = header[1];
  const std::int64_t fmt = header.size() == 3 ? header[2] : 0;
  if (m < 0 || n < 0) reader.fail("negative counts in header");
  if (n > std::numeric_limits<VertexId>::max() / 2) reader.fail("too many vertices");
  if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11) reader.fail("unknown fmt " + std::to_string(fmt));
  const bool net_weights = fmt % 10 == 1;
  const bool vertex_weights = fmt / 10 == 1;

  std::vector<std::vector<VertexId>> nets;
  std::vector<Weight> weights_of_nets;
  nets.reserve(static_cast<std::size_t>(m));
  for (std::int64_t e = 0; e < m; ++e) {
    if (!reader.next(line)) {
      reader.fail("expected " + std::to_string(m) + " nets, found " + std::to_string(e));
    }
    auto numbers = parse_numbers(line, reader);
    Weight w = 1;
    std::size_t first = 0;
    if (net_weights) {
      if (numbers.empty()) reader.fail("missing net weight");
      w = numbers[0];
      first = 1;
      if (w <= 0) reader.fail("non-positive net weight " + std::to_string(w));
    }
    if (numbers.size() == first) reader.fail("empty net");
    std::vector<VertexId> pins;
    pins.reserve(numbers.size() - first);
    for (std::size_t i = first; i < numbers.size(); ++i) {
      if (numbers[i] < 1 || numbers[i] > n) {
        reader.fail("vertex " + std::to_string(numbers[i]) + " out of range [1, " + std::to_string(n) + "]");
      }
      pins.push_back(static_cast<VertexId>(numbers[i] - 1));
    }
    std::vector<VertexId> sorted = pins;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) reader.fail("duplicate pin in net");
    nets.push_back(std::move(pins));
    weights_of_nets.push_back(w);
  }

  std::vector<Weight> weights(static_cast<std::size_t>(n), 1);
  if (vertex_weights) {
    for (std::int64_t v = 0; v < n; ++v) {
      if (!reader.next(line)) {
        reader.fail("expected " + std::to_string(n) + " vertex weights, found " + std::to_string(v));
      }
      const auto numbers = parse_numbers(line, reader);
      if (numbers.size() != 1) reader.fail("expected one vertex weight");
      if (numbers[0] <= 0) reader.fail("non-positive vertex weight " + std::to_string(numbers[0]));
      weights[static_cast<std::size_t>(v)] = numbers[0];
    }
  }
  if (reader.next(line)) reader.fail("unexpected trailing content");
  return build_hypergraph(std::move(weights), nets, std::move(weights_of_nets));
}

std::string format_hgr(const Hypergraph& hg) {
  bool net_weights = false;
  bool vertex_weights = false;
  for (Weight w : hg.net_weights()) net_weights = net_weights || w != 1;
  for (Weight w : hg.vertex_weights()) vertex_weights = vertex_weights || w != 1;
  std::ostringstream out;
  out << hg.num_nets() << ' ' << hg.num_vertices();
  if (net_weights || vertex_weights) out << ' ' << (vertex_weights ? "1" : "") << (net_weights ? "1" : "0");
  out << '\n';
  for (NetId e = 0; e < hg.num_nets(); ++e) {
    bool first = true;
    if (net_weights) {
      out << hg.net_weight(e);
      first = false;
    }
    for (VertexId v : hg.pins(e)) {
      if (!first) out << ' ';
      out << v + 1;
      first = false;
    }
    out << '\n';
  }
  if (vertex_weights) {
    for (Weight w : hg.vertex_weights()) out << w << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("cannot write " + path);
}

Hypergraph read_hgr(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_hgr(text);
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_hgr(const Hypergraph& hg, const std::string& path) { write_file(path, format_hgr(hg)); }

std::string format_partition(std::span<const BlockId> block_of) {
  std::string out;
  out.reserve(block_of.size() * 3);
  for (BlockId b : block_of) {
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

std::vector<BlockId> parse_partition(std::string_view text, std::size_t num_vertices) {
  LineReader reader(text);
  std::string_view line;
  std::vector<BlockId> block_of;
  block_of.reserve(num_vertices);
  while (reader.next(line)) {
    const auto numbers = parse_numbers(line, reader);
    if (numbers.size() != 1) reader.fail("expected one block id");
    if (numbers[0] < 0 || numbers[0] > std::numeric_limits<BlockId>::max()) {
      reader.fail("invalid block id " + std::to_string(numbers[0]));
    }
    block_of.push_back(static_cast<BlockId>(numbers[0]));
  }
  if (block_of.size() != num_vertices) {
    throw Error("partition has " + std::to_string(block_of.size()) + " entries, expected " +
                std::to_string(num_vertices));
  }
  return block_of;
}

void write_partition(std::span<const BlockId> block_of, const std::string& path) {
  write_file(path, format_partition(block_of));
}

std::vector<BlockId> read_partition(const std::string& path, std::size_t num_vertices) {
  return parse_partition(read_file(path), num_vertices);
}

}  // namespace wpart
