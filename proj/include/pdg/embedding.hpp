#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdg {

/// Raised when input data (rotation systems, files, catalogs) is invalid.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// External vertex label, as written in ".pdg" files.
using VertexId = std::uint32_t;

/// Per-vertex rotation data: label plus its neighbors in clockwise order.
struct RotationData {
    VertexId vertex;
    std::vector<VertexId> neighbors;
};

struct Face {
    std::vector<int> darts;    // facial walk, in trace order
    std::vector<int> vertices; // tail of each dart, same order
    int size = 0;              // edges on the walk, counted with multiplicity

    bool is_triangle() const { return size == 3; }
    bool is_major() const { return size >= 5; }
    bool is_minor() const { return size <= 4; }
};

// A combinatorial plane embedding of a simple connected graph, given by the
// clockwise rotation of neighbors at every vertex. Faces are traced with the
// fixed convention: the successor of dart (u -> v) is (v -> w) where w
// immediately follows u in the clockwise rotation at v. Construction verifies
// rotation consistency, connectivity, and the Euler relation; instances are
// immutable afterwards and safe to query concurrently.
class PlanarEmbedding {
public:
    /// Empty placeholder; real instances come from build().
    PlanarEmbedding() = default;

    /// Builds and validates an embedding. Throws InputError on inconsistent
    /// rotations, a disconnected graph, or an Euler-relation violation.
    static PlanarEmbedding build(const std::vector<RotationData>& rotation_data);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    VertexId label(int v) const { return labels_[v]; }
    /// Internal index for an external label; throws InputError if unknown.
    int index_of(VertexId label) const;
    bool has_label(VertexId label) const;

    int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    bool adjacent(int u, int v) const;

    // Darts. Dart d has a tail, a head, a reversal, and lies on one face.
    int dart(int tail, int rotation_pos) const { return dart_offset_[tail] + rotation_pos; }
    /// Dart for the ordered pair (u -> v); throws InputError if uv is not an edge.
    int dart_between(int u, int v) const;
    int tail(int d) const { return dart_tail_[d]; }
    int head(int d) const { return dart_head_[d]; }
    int reverse(int d) const { return dart_reverse_[d]; }
    /// Next dart of the facial walk containing d.
    int face_successor(int d) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    int face_of_dart(int d) const { return dart_face_[d]; }
    int face_size(int f) const { return faces_[f].size; }

    /// Undirected edge ids; edge e joins edge_u(e) < edge_v(e) by index order.
    int edge_of_dart(int d) const { return dart_edge_[d]; }
    int edge_between(int u, int v) const { return dart_edge_[dart_between(u, v)]; }
    int edge_u(int e) const { return edges_[e].first; }
    int edge_v(int e) const { return edges_[e].second; }

    /// Distinct faces incident to v, in rotation order of first appearance.
    std::vector<int> faces_at_vertex(int v) const;
    /// Distinct triangle faces incident to v.
    std::vector<int> triangles_at_vertex(int v) const;
    /// Distinct faces sharing an edge with f, excluding f itself.
    std::vector<int> adjacent_faces(int f) const;
    /// Of the faces adjacent to f, how many are major (size >= 5).
    int adjacent_major_face_count(int f) const;
    /// The three vertices of a triangle face; throws InputError otherwise.
    std::vector<int> triangle_vertices(int f) const;

    /// Multiset of face sizes; sums to 2|E|.
    std::vector<int> face_sizes() const;

    struct TriangleClass {
        std::array<int, 3> degrees; // sorted descending
        bool bad; // 5-4-4 triangle adjacent to at most two major faces
    };
    /// Degree triple and badness of a triangle face.
    TriangleClass classify_triangle(int f) const;

private:
    void trace_faces();

    std::vector<VertexId> labels_;
    std::map<VertexId, int> index_;
    std::vector<std::vector<int>> rotations_;
    std::vector<std::pair<int, int>> edges_;

    std::vector<int> dart_offset_;
    std::vector<int> dart_tail_, dart_head_, dart_reverse_, dart_edge_, dart_face_;
    std::vector<Face> faces_;
};

} // namespace pdg
