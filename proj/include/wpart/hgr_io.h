#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpart/hypergraph.h"

namespace wpart {

// hMetis text format. Header "|E| |V| [fmt]": fmt 1 = net weights lead each
// net line, 10 = one vertex weight per line after the nets, 11 = both.
// Vertices are 1-indexed in the file. Lines starting with '%' are comments.
// Errors carry the offending line number.
Hypergraph parse_hgr(std::string_view text);
Hypergraph read_hgr(const std::string& path);

// Canonical form: fmt is emitted only for non-unit weights.
std::string format_hgr(const Hypergraph& hg);
void write_hgr(const Hypergraph& hg, const std::string& path);

// One block id per line in vertex order.
std::string format_partition(std::span<const BlockId> block_of);
std::vector<BlockId> parse_partition(std::string_view text, std::size_t num_vertices);
void write_partition(std::span<const BlockId> block_of, const std::string& path);
std::vector<BlockId> read_partition(const std::string& path, std::size_t num_vertices);

// Thrown for unreadable or unwritable files (as opposed to malformed content).
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace wpart
