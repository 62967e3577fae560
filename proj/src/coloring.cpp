#include "pdg/coloring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pdg {

bool Coloring::is_total() const {
    return std::all_of(colors_.begin(), colors_.end(),
                       [](Color c) { return c != kUncolored; });
}

ListAssignment ListAssignment::uniform(int n, int k, Color first) {
    ListAssignment L(n);
    std::vector<Color> colors(k);
    for (int i = 0; i < k; ++i) colors[i] = first + i;
    for (int v = 0; v < n; ++v) L.lists_[v] = colors;
    return L;
}

void ListAssignment::set_list(int v, std::vector<Color> colors) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    lists_[v] = std::move(colors);
}

bool ListAssignment::contains(int v, Color c) const {
    return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

bool ListAssignment::is_k_list(int k) const {
    return std::all_of(lists_.begin(), lists_.end(),
                       [k](const auto& l) { return static_cast<int>(l.size()) == k; });
}

bool ListAssignment::all_equal() const {
    for (const auto& l : lists_)
        if (l != lists_.front()) return false;
    return true;
}

std::string ValidationReport::describe(const PlanarEmbedding& emb) const {
    std::ostringstream os;
    switch (kind) {
    case Kind::ok:
        os << "ok";
        break;
    case Kind::not_total:
        os << "vertex " << emb.label(vertex) << " is uncolored";
        break;
    case Kind::color_outside_list:
        os << "vertex " << emb.label(vertex) << " colored outside its list";
        break;
    case Kind::mono_cycle:
        os << "monochromatic cycle (color " << cycle.color << "):";
        for (int v : cycle.cycle) os << " " << emb.label(v);
        break;
    }
    return os.str();
}

namespace {

// Finds a directed cycle within one color class, if any; deterministic.
// skip < 0 means no vertex is excluded.
bool find_class_cycle(const Digraph& D, const Coloring& phi, Color c, int skip, MonoCycle& out) {
    int n = D.vertex_count();
    std::vector<char> members(n, 0);
    for (int v = 0; v < n; ++v) members[v] = v != skip && phi.get(v) == c;

    // Peel sinks/sources via Kahn; leftover vertices all lie on cycles.
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!members[v]) continue;
        for (int u : D.in_neighbors(v))
            if (members[u]) ++indeg[v];
    }
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (members[v] && indeg[v] == 0) q.push_back(v);
    std::vector<char> alive = members;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        alive[u] = 0;
        for (int v : D.out_neighbors(u))
            if (alive[v] && --indeg[v] == 0) q.push_back(v);
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            start = v;
            break;
        }
    if (start < 0) return false;

    // Walk forward inside the remaining subgraph until a vertex repeats.
    std::vector<int> seen_at(n, -1);
    std::vector<int> walk;
    int cur = start;
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        int next = -1;
        for (int v : D.out_neighbors(cur))
            if (alive[v]) {
                next = v;
                break;
            }
        cur = next; // every alive vertex keeps an alive out-neighbor
    }
    out.color = c;
    out.cycle.assign(walk.begin() + seen_at[cur], walk.end());
    auto it = std::min_element(out.cycle.begin(), out.cycle.end());
    std::rotate(out.cycle.begin(), it, out.cycle.end());
    return true;
}

ValidationReport validate_impl(const Digraph& D, const ListAssignment* L, const Coloring& phi,
                               int skip) {
    ValidationReport rep;
    int n = D.vertex_count();
    std::set<Color> used;
    for (int v = 0; v < n; ++v) {
        if (v == skip) continue;
        if (!phi.is_colored(v)) {
            rep.kind = ValidationReport::Kind::not_total;
            rep.vertex = v;
            return rep;
        }
        if (L && !L->contains(v, phi.get(v))) {
            rep.kind = ValidationReport::Kind::color_outside_list;
            rep.vertex = v;
            return rep;
        }
        used.insert(phi.get(v));
    }
    for (Color c : used) {
        MonoCycle cycle;
        if (find_class_cycle(D, phi, c, skip, cycle)) {
            rep.kind = ValidationReport::Kind::mono_cycle;
            rep.cycle = std::move(cycle);
            return rep;
        }
    }
    return rep;
}

} // namespace

ValidationReport validate_coloring(const Digraph& D, const ListAssignment& L, const Coloring& phi) {
    return validate_impl(D, &L, phi, -1);
}

ValidationReport validate_coloring(const Digraph& D, const Coloring& phi) {
    return validate_impl(D, nullptr, phi, -1);
}

ValidationReport validate_coloring_deleted(const Digraph& D, const Coloring& phi, int removed) {
    return validate_impl(D, nullptr, phi, removed);
}

} // namespace pdg
