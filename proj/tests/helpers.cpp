#include "helpers.hpp"

#include <algorithm>

namespace pdgtest {

using namespace pdg;

PlanarEmbedding make_embedding(const RotationSpec& spec) {
    std::vector<RotationData> data;
    for (const auto& [v, nbrs] : spec) data.push_back({v, nbrs});
    return PlanarEmbedding::build(data);
}

Digraph make_digraph(PlanarEmbedding emb,
                     const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    std::vector<Arc> internal;
    for (auto [u, v] : arcs) internal.push_back({emb.index_of(u), emb.index_of(v)});
    return Digraph::orient(std::move(emb), internal);
}

std::vector<std::vector<int>> all_directed_cycles(const Digraph& D) {
    std::vector<std::vector<int>> cycles;
    int n = D.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (int v : D.out_neighbors(u)) {
            if (v == start) {
                cycles.push_back(path);
            } else if (v > start && !on_path[v]) {
                on_path[v] = 1;
                path.push_back(v);
                self(self, start, v);
                path.pop_back();
                on_path[v] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
    return cycles;
}

std::optional<int> digirth_oracle(const Digraph& D) {
    std::optional<int> best;
    for (const auto& c : all_directed_cycles(D)) {
        int len = static_cast<int>(c.size());
        if (!best || len < *best) best = len;
    }
    return best;
}

bool coloring_valid_oracle(const Digraph& D, const Coloring& phi, int skip) {
    for (int v = 0; v < D.vertex_count(); ++v)
        if (v != skip && !phi.is_colored(v)) return false;
    for (const auto& cycle : all_directed_cycles(D)) {
        bool mono = true;
        Color c = kUncolored;
        for (int v : cycle) {
            if (v == skip || !phi.is_colored(v)) {
                mono = false;
                break;
            }
            if (c == kUncolored)
                c = phi.get(v);
            else if (phi.get(v) != c)
                mono = false;
            if (!mono) break;
        }
        if (mono) return false;
    }
    return true;
}

std::vector<Coloring> all_valid_colorings(const Digraph& D, const ListAssignment& L, int skip) {
    int n = D.vertex_count();
    std::vector<Coloring> out;
    std::vector<size_t> idx(n, 0);
    auto cycles = all_directed_cycles(D);
    while (true) {
        Coloring phi(n);
        for (int v = 0; v < n; ++v)
            if (v != skip) phi.set(v, L.list(v)[idx[v]]);
        bool ok = true;
        for (const auto& cycle : cycles) {
            bool mono = true;
            Color c = kUncolored;
            for (int v : cycle) {
                if (v == skip) {
                    mono = false;
                    break;
                }
                if (c == kUncolored)
                    c = phi.get(v);
                else if (phi.get(v) != c)
                    mono = false;
                if (!mono) break;
            }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(phi);
        int v = n - 1;
        for (; v >= 0; --v) {
            if (v == skip) continue;
            if (++idx[v] < L.list(v).size()) break;
            idx[v] = 0;
        }
        if (v < 0) break;
    }
    return out;
}

int max_acyclic_oracle(const Digraph& D) {
    int n = D.vertex_count();
    auto cycles = all_directed_cycles(D);
    std::vector<std::uint32_t> cycle_masks;
    for (const auto& c : cycles) {
        std::uint32_t m = 0;
        for (int v : c) m |= 1u << v;
        cycle_masks.push_back(m);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool acyclic = true;
        for (std::uint32_t m : cycle_masks)
            if ((m & s) == m) {
                acyclic = false;
                break;
            }
        if (acyclic) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace pdgtest
