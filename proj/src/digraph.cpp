#include "pdg/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pdg {

Digraph Digraph::orient(PlanarEmbedding emb, const std::vector<Arc>& arcs) {
    Digraph d;
    int m = emb.edge_count();
    std::vector<char> covered(m, 0);
    std::vector<char> forward(m, 0);
    for (const Arc& a : arcs) {
        int e = emb.edge_between(a.from, a.to);
        if (covered[e])
            throw InputError("edge {" + std::to_string(emb.label(a.from)) + "," +
                             std::to_string(emb.label(a.to)) + "} oriented twice");
        covered[e] = 1;
        forward[e] = (emb.edge_u(e) == a.from) ? 1 : 0;
    }
    for (int e = 0; e < m; ++e)
        if (!covered[e])
            throw InputError("edge {" + std::to_string(emb.label(emb.edge_u(e))) + "," +
                             std::to_string(emb.label(emb.edge_v(e))) + "} has no arc");

    int n = emb.vertex_count();
    d.out_.resize(n);
    d.in_.resize(n);
    for (int e = 0; e < m; ++e) {
        int from = forward[e] ? emb.edge_u(e) : emb.edge_v(e);
        int to = forward[e] ? emb.edge_v(e) : emb.edge_u(e);
        d.out_[from].push_back(to);
        d.in_[to].push_back(from);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(d.out_[v].begin(), d.out_[v].end());
        std::sort(d.in_[v].begin(), d.in_[v].end());
    }
    d.edge_forward_ = std::move(forward);
    d.emb_ = std::move(emb);
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

Arc Digraph::arc_of_edge(int e) const {
    if (edge_forward_[e]) return {emb_.edge_u(e), emb_.edge_v(e)};
    return {emb_.edge_v(e), emb_.edge_u(e)};
}

namespace {

// Shortest directed path from s to t (arc count), avoiding nothing; -1 if none.
// parent is filled for path reconstruction.
int bfs_dist(const std::vector<std::vector<int>>& out, int s, int t, std::vector<int>& parent) {
    int n = static_cast<int>(out.size());
    std::vector<int> dist(n, -1);
    parent.assign(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u == t) return dist[t];
        for (int v : out[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push_back(v);
            }
    }
    return -1;
}

} // namespace

std::optional<int> Digraph::digirth() const {
    auto cyc = shortest_cycle();
    if (cyc.empty()) return std::nullopt;
    return static_cast<int>(cyc.size());
}

std::vector<int> Digraph::shortest_cycle() const {
    // Shortest directed cycle through each arc (u,v): 1 + shortest path v -> u.
    int best = -1;
    std::vector<int> best_cycle;
    std::vector<int> parent;
    for (int e = 0; e < static_cast<int>(edge_forward_.size()); ++e) {
        Arc a = arc_of_edge(e);
        int d = bfs_dist(out_, a.to, a.from, parent);
        if (d < 0) continue;
        int len = d + 1;
        if (best < 0 || len < best) {
            best = len;
            best_cycle.clear();
            for (int x = a.from; x != a.to; x = parent[x]) best_cycle.push_back(x);
            best_cycle.push_back(a.to);
            std::reverse(best_cycle.begin(), best_cycle.end()); // a.to ... a.from
            // rotate so the smallest vertex leads; deterministic representative
            auto it = std::min_element(best_cycle.begin(), best_cycle.end());
            std::rotate(best_cycle.begin(), it, best_cycle.end());
        }
    }
    return best_cycle;
}

bool Digraph::is_acyclic_set(const std::vector<char>& members) const {
    // Kahn's algorithm on the induced subdigraph.
    int n = vertex_count();
    std::vector<int> indeg(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        if (!members[v]) continue;
        ++total;
        for (int u : in_[v])
            if (members[u]) ++indeg[v];
    }
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (members[v] && indeg[v] == 0) q.push_back(v);
    int removed = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        ++removed;
        for (int v : out_[u])
            if (members[v] && --indeg[v] == 0) q.push_back(v);
    }
    return removed == total;
}

bool Digraph::is_acyclic_set(const std::vector<int>& vertices) const {
    std::vector<char> members(vertex_count(), 0);
    for (int v : vertices) members[v] = 1;
    return is_acyclic_set(members);
}

} // namespace pdg
