#include "pdg/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pdg {

namespace {

std::string vid(VertexId v) { return std::to_string(v); }

} // namespace

PlanarEmbedding PlanarEmbedding::build(const std::vector<RotationData>& rotation_data) {
    PlanarEmbedding emb;
    if (rotation_data.empty()) throw InputError("embedding has no vertices");

    for (const auto& rd : rotation_data) {
        if (emb.index_.count(rd.vertex))
            throw InputError("vertex " + vid(rd.vertex) + " declared twice");
        int idx = static_cast<int>(emb.labels_.size());
        emb.index_[rd.vertex] = idx;
        emb.labels_.push_back(rd.vertex);
    }

    emb.rotations_.resize(emb.labels_.size());
    for (const auto& rd : rotation_data) {
        int u = emb.index_[rd.vertex];
        std::set<int> seen;
        for (VertexId nb : rd.neighbors) {
            auto it = emb.index_.find(nb);
            if (it == emb.index_.end())
                throw InputError("vertex " + vid(rd.vertex) + " lists undeclared neighbor " + vid(nb));
            int v = it->second;
            if (v == u) throw InputError("vertex " + vid(rd.vertex) + " lists itself");
            if (!seen.insert(v).second)
                throw InputError("vertex " + vid(rd.vertex) + " lists neighbor " + vid(nb) + " twice");
            emb.rotations_[u].push_back(v);
        }
    }

    // Mutual consistency: u in rotation of v iff v in rotation of u.
    int n = emb.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v : emb.rotations_[u]) {
            const auto& rv = emb.rotations_[v];
            if (std::count(rv.begin(), rv.end(), u) != 1)
                throw InputError("rotation mismatch: " + vid(emb.labels_[u]) + " lists " +
                                 vid(emb.labels_[v]) + " but not vice versa");
        }
    }

    // Edges, indexed in scan order over (vertex, rotation position).
    std::map<std::pair<int, int>, int> edge_index;
    for (int u = 0; u < n; ++u) {
        for (int v : emb.rotations_[u]) {
            auto key = std::minmax(u, v);
            if (edge_index.emplace(std::make_pair(key.first, key.second),
                                   static_cast<int>(emb.edges_.size())).second)
                emb.edges_.emplace_back(key.first, key.second);
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : emb.rotations_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != n) throw InputError("graph is disconnected");
    }

    // Dart tables.
    emb.dart_offset_.assign(n + 1, 0);
    for (int u = 0; u < n; ++u)
        emb.dart_offset_[u + 1] = emb.dart_offset_[u] + emb.degree(u);
    int dart_total = emb.dart_offset_[n];
    emb.dart_tail_.resize(dart_total);
    emb.dart_head_.resize(dart_total);
    emb.dart_edge_.resize(dart_total);
    emb.dart_reverse_.assign(dart_total, -1);
    for (int u = 0; u < n; ++u) {
        for (int p = 0; p < emb.degree(u); ++p) {
            int d = emb.dart_offset_[u] + p;
            int v = emb.rotations_[u][p];
            emb.dart_tail_[d] = u;
            emb.dart_head_[d] = v;
            auto key = std::minmax(u, v);
            emb.dart_edge_[d] = edge_index.at({key.first, key.second});
        }
    }
    for (int d = 0; d < dart_total; ++d) {
        if (emb.dart_reverse_[d] >= 0) continue;
        int u = emb.dart_tail_[d], v = emb.dart_head_[d];
        const auto& rv = emb.rotations_[v];
        int q = static_cast<int>(std::find(rv.begin(), rv.end(), u) - rv.begin());
        int r = emb.dart_offset_[v] + q;
        emb.dart_reverse_[d] = r;
        emb.dart_reverse_[r] = d;
    }

    emb.trace_faces();
    if (emb.vertex_count() == 1) emb.faces_.push_back(Face{}); // lone vertex on the sphere

    int euler = emb.vertex_count() - emb.edge_count() + emb.face_count();
    if (euler != 2) {
        std::ostringstream msg;
        msg << "Euler relation violated: V-E+F = " << emb.vertex_count() << "-"
            << emb.edge_count() << "+" << emb.face_count() << " = " << euler
            << " (rotation data does not describe a plane embedding)";
        throw InputError(msg.str());
    }
    return emb;
}

int PlanarEmbedding::face_successor(int d) const {
    // From (u -> v), continue with (v -> w) where w follows u clockwise at v.
    int r = dart_reverse_[d]; // (v -> u)
    int v = dart_tail_[r];
    int q = r - dart_offset_[v];
    int next_pos = (q + 1) % degree(v);
    return dart_offset_[v] + next_pos;
}

void PlanarEmbedding::trace_faces() {
    int dart_total = static_cast<int>(dart_tail_.size());
    dart_face_.assign(dart_total, -1);
    for (int d0 = 0; d0 < dart_total; ++d0) {
        if (dart_face_[d0] >= 0) continue;
        Face f;
        int fid = static_cast<int>(faces_.size());
        int d = d0;
        do {
            dart_face_[d] = fid;
            f.darts.push_back(d);
            f.vertices.push_back(dart_tail_[d]);
            d = face_successor(d);
        } while (d != d0);
        f.size = static_cast<int>(f.darts.size());
        faces_.push_back(std::move(f));
    }
}

int PlanarEmbedding::index_of(VertexId label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown vertex " + vid(label));
    return it->second;
}

bool PlanarEmbedding::has_label(VertexId label) const { return index_.count(label) != 0; }

bool PlanarEmbedding::adjacent(int u, int v) const {
    const auto& r = rotations_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlanarEmbedding::dart_between(int u, int v) const {
    const auto& r = rotations_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end())
        throw InputError("no edge between " + vid(labels_[u]) + " and " + vid(labels_[v]));
    return dart_offset_[u] + static_cast<int>(it - r.begin());
}

std::vector<int> PlanarEmbedding::faces_at_vertex(int v) const {
    std::vector<int> out;
    for (int p = 0; p < degree(v); ++p) {
        int f = dart_face_[dart_offset_[v] + p];
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

std::vector<int> PlanarEmbedding::triangles_at_vertex(int v) const {
    std::vector<int> out;
    for (int f : faces_at_vertex(v))
        if (faces_[f].is_triangle()) out.push_back(f);
    return out;
}

std::vector<int> PlanarEmbedding::adjacent_faces(int f) const {
    std::vector<int> out;
    for (int d : faces_[f].darts) {
        int g = dart_face_[dart_reverse_[d]];
        if (g != f && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

int PlanarEmbedding::adjacent_major_face_count(int f) const {
    int count = 0;
    for (int g : adjacent_faces(f))
        if (faces_[g].is_major()) ++count;
    return count;
}

std::vector<int> PlanarEmbedding::triangle_vertices(int f) const {
    if (!faces_[f].is_triangle()) throw InputError("face is not a triangle");
    return faces_[f].vertices;
}

std::vector<int> PlanarEmbedding::face_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(faces_.size());
    for (const auto& f : faces_) sizes.push_back(f.size);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

PlanarEmbedding::TriangleClass PlanarEmbedding::classify_triangle(int f) const {
    auto vs = triangle_vertices(f);
    TriangleClass tc{};
    for (int i = 0; i < 3; ++i) tc.degrees[i] = degree(vs[i]);
    std::sort(tc.degrees.begin(), tc.degrees.end(), std::greater<int>());
    bool is_544 = tc.degrees[0] == 5 && tc.degrees[1] == 4 && tc.degrees[2] == 4;
    tc.bad = is_544 && adjacent_major_face_count(f) <= 2;
    return tc;
}

} // namespace pdg
