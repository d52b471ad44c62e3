#pragma once

#include <filesystem>
#include <iosfwd>

#include "padiam/graph.hpp"

namespace padiam {

// Text format:
//   pa <n> <m> <delta> <seed>
//   <newer> <slot> <target>      one line per edge, generation order
// delta is written in shortest round-trip form.
//
// Binary format (little-endian):
//   char[4] "PAB1", u64 n, u32 m, f64 delta, u64 seed,
//   then (u32 newer, u32 slot, u32 target) per edge.
//
// Readers validate everything PAGraph validates and throw
// std::runtime_error on malformed input.

void write_text(std::ostream& out, const PAGraph& g);
PAGraph read_text(std::istream& in);

void write_binary(std::ostream& out, const PAGraph& g);
PAGraph read_binary(std::istream& in);

enum class GraphFormat { kText, kBinary };

void save_graph(const std::filesystem::path& path, const PAGraph& g,
                GraphFormat format);

/// Detects the format from the leading bytes.
PAGraph load_graph(const std::filesystem::path& path);

}  // namespace padiam
