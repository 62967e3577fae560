#pragma once

#include "pdg/coloring.hpp"
#include "pdg/digraph.hpp"
#include "pdg/embedding.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pdg {

// ".pdg" text format, one statement per line:
//   pdg 1
//   # comment
//   v <id> <neighbor ids, clockwise>
//   a <u> <v>          arc u -> v, at most one per undirected edge
// Arc statements are optional; purely undirected consumers ignore them.

struct PdgFile {
    PlanarEmbedding embedding;
    std::vector<Arc> arcs; // internal indices

    bool fully_oriented() const {
        return static_cast<int>(arcs.size()) == embedding.edge_count();
    }
    /// Builds the digraph; throws InputError unless every edge is oriented.
    Digraph to_digraph() const;
};

PdgFile read_pdg(std::istream& in);
PdgFile read_pdg_file(const std::string& path);

std::string write_pdg(const PlanarEmbedding& emb, const std::vector<Arc>& arcs = {});
std::string write_pdg(const Digraph& D);

/// List files: lines "l <vertex> <colors...>". Vertices without a line get
/// the fallback list. Unknown vertex labels raise InputError.
ListAssignment read_lists(std::istream& in, const PlanarEmbedding& emb,
                          const std::vector<Color>& fallback);
ListAssignment read_lists_file(const std::string& path, const PlanarEmbedding& emb,
                               const std::vector<Color>& fallback);

/// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);

} // namespace pdg
