#pragma once

#include "pdg/digraph.hpp"
#include "pdg/embedding.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pdg {

/// Raised when a generator spec cannot be satisfied within its repair budget.
class GenError : public std::runtime_error {
public:
    explicit GenError(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kDigirthAcyclic = -1; // request an acyclic orientation

struct GenSpec {
    int n = 8;
    int min_degree = 2;
    std::optional<int> digirth_min; // 3, 4, 5, or kDigirthAcyclic
    std::uint64_t seed = 0;
    int max_repair_rounds = 0; // 0 picks the default (50 * |E|)

    void validate() const; // throws GenError on nonsense (n < 3, min_degree > 5, ...)
};

/// Connected simple plane graph with minimum degree >= spec.min_degree.
/// Construction: grow a plane triangulation by repeated vertex insertion into
/// a uniformly chosen face, raise deficient degrees by diagonal flips, then
/// delete a random edge subset subject to connectivity and the degree floor.
/// Deterministic per seed; throws GenError when the spec cannot be met.
PlanarEmbedding random_plane_graph(const GenSpec& spec);

/// Orients each edge uniformly, then repairs: while a directed cycle shorter
/// than digirth_min exists, flip one arc of a shortest such cycle. Throws
/// GenError when the flip budget runs out.
Digraph random_planar_digraph(const GenSpec& spec);

// Canonical instances, bit-stable across runs.
PlanarEmbedding golden_embedding(const std::string& name); // tetrahedron, cube,
                                                           // octahedron, dodecahedron,
                                                           // icosahedron, dicycle(k)
Digraph golden_digraph(const std::string& name);           // dicycle(k)

} // namespace pdg
