#pragma once

#include "pdg/coloring.hpp"
#include "pdg/digraph.hpp"
#include "pdg/embedding.hpp"

#include <optional>
#include <utility>
#include <vector>

// Test-side utilities. The oracles here are written independently of the
// library's algorithms: plain enumeration, no shared code paths.
namespace pdgtest {

using RotationSpec = std::vector<std::pair<pdg::VertexId, std::vector<pdg::VertexId>>>;

pdg::PlanarEmbedding make_embedding(const RotationSpec& spec);

pdg::Digraph make_digraph(pdg::PlanarEmbedding emb,
                          const std::vector<std::pair<pdg::VertexId, pdg::VertexId>>& arcs);

/// Every simple directed cycle, each exactly once (rooted at its smallest
/// vertex). Exhaustive DFS; fine for the sizes tests use.
std::vector<std::vector<int>> all_directed_cycles(const pdg::Digraph& D);

std::optional<int> digirth_oracle(const pdg::Digraph& D);

/// Validity of a total coloring of D - skip (skip = -1 checks all of D),
/// decided against the exhaustive cycle list.
bool coloring_valid_oracle(const pdg::Digraph& D, const pdg::Coloring& phi, int skip = -1);

/// All valid total colorings of D - skip drawn from L, by plain enumeration.
std::vector<pdg::Coloring> all_valid_colorings(const pdg::Digraph& D,
                                               const pdg::ListAssignment& L, int skip = -1);

/// Largest acyclic vertex set by subset enumeration (n <= 20).
int max_acyclic_oracle(const pdg::Digraph& D);

} // namespace pdgtest
