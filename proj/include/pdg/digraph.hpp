#pragma once

#include "pdg/embedding.hpp"

#include <optional>
#include <vector>

namespace pdg {

/// An arc u -> v, by internal vertex indices.
struct Arc {
    int from;
    int to;
};

// A planar digraph: an orientation overlay on a plane embedding. Every
// undirected edge carries exactly one arc (digons are unrepresentable).
// Immutable after construction.
class Digraph {
public:
    /// Orients every edge of emb. arcs must cover each edge exactly once and
    /// reference actual edges; throws InputError otherwise.
    static Digraph orient(PlanarEmbedding emb, const std::vector<Arc>& arcs);

    const PlanarEmbedding& embedding() const { return emb_; }
    int vertex_count() const { return emb_.vertex_count(); }
    int arc_count() const { return emb_.edge_count(); }

    bool has_arc(int u, int v) const;
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    /// The arc carried by edge e, as (from, to).
    Arc arc_of_edge(int e) const;

    /// Length of the shortest directed cycle; nullopt when acyclic.
    /// Computed exactly: shortest cycle through each arc via BFS.
    std::optional<int> digirth() const;
    /// A shortest directed cycle as a vertex sequence; empty when acyclic.
    std::vector<int> shortest_cycle() const;

    /// True iff the subdigraph induced by S has no directed cycle.
    /// S is given as a membership mask over vertex indices.
    bool is_acyclic_set(const std::vector<char>& members) const;
    bool is_acyclic_set(const std::vector<int>& vertices) const;
    bool is_acyclic() const { return !digirth().has_value(); }

private:
    Digraph() = default;

    PlanarEmbedding emb_;
    std::vector<char> edge_forward_; // arc runs edge_u -> edge_v
    std::vector<std::vector<int>> out_, in_;
};

} // namespace pdg
