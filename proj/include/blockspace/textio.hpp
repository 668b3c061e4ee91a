#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blockspace/coloring.hpp"
#include "blockspace/stream.hpp"

namespace blockspace {

/// Vector file: header "field <q>", one vector per line as space-separated
/// "index:coeff" pairs with strictly increasing indices, "#" comments,
/// blank lines separating sequences.
struct VectorFileContent {
  Field field{2};
  std::vector<BlockSeq> sequences;
};

/// Parse-and-validate; all errors carry 1-based line numbers.
VectorFileContent parse_vector_file(std::string_view text);

/// Same grammar with the block-order requirement dropped (for inputs that
/// name generating sets of subspaces rather than block sequences).
struct VectorListContent {
  Field field{2};
  std::vector<std::vector<Vec>> groups;
};
VectorListContent parse_vector_lines(std::string_view text);

std::string print_vector(const Vec& v);
std::string print_vector_file(const VectorFileContent& content);

/// Stream mini-language:
///   basis(<indexset>) | pattern(<vector>;shift=<n>) | tail(<expr>,<n>)
///   | concat(<seq>,<expr>) | interleave(<expr>,...;rr)
///   | sparse(<expr>;intervals=<spec>)
/// with indexset: all | evens | odds | ap(<o>,<s>) | val(<v>) | union(...)
/// vector: "i:c+i:c+..."; seq: vectors joined by '|';
/// intervals: singletons | blocks(<len>) | aff(<start>,<len>,<gap>).
BlockStream parse_stream_expr(std::string_view text, Field field);
IndexSet parse_index_set(std::string_view text);

/// Coloring file: lines "field 2", "window <N>", and either
/// "colors <bitstring>" (canonical vector order) or "builtin <name>".
Coloring parse_coloring_file(std::string_view text);

}  // namespace blockspace
