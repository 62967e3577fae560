#pragma once

#include "pdg/embedding.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pdg {

// A configuration is a plane pattern graph C with a designated unbounded
// face, a constrained vertex set U, and a degree prescription delta on U.
// A host G contains it when some map h : V(C) -> V(G)
//   (i)   maps edges to edges,
//   (ii)  maps every bounded facial walk to a facial walk of G,
//   (iii) hits exact degrees: deg_G(h(a)) == delta(a) for a in U,
//   (iv)  is one-to-one on the neighborhood of every pattern vertex.
// Walk matching is orientation-preserving up to cyclic rotation; a reflected
// pattern is a separate catalog entry.

struct Configuration {
    std::string name;
    std::string provenance; // free-text description of the entry's origin
    PlanarEmbedding pattern;
    int outer_face = -1;              // face index in pattern
    std::map<int, int> delta;         // constrained vertex -> exact host degree

    bool constrained(int v) const { return delta.count(v) != 0; }
};

/// A containment witness: image of each pattern vertex.
struct Match {
    std::vector<int> image; // pattern index -> host index

    bool operator==(const Match&) const = default;
    bool operator<(const Match& o) const { return image < o.image; }
};

// ".cfg" catalog format, one or more entries:
//   cfg 1
//   name <string>
//   provenance <quoted text>
//   v <id> <clockwise neighbors>
//   u <id> <delta>
//   outer <u> <v>        designates the unbounded face by one of its darts
std::vector<Configuration> load_catalog(std::istream& in);
std::vector<Configuration> load_catalog_file(const std::string& path);

/// All maps h satisfying (i)-(iv), in deterministic order. Backtracking over
/// pattern vertices in a connectivity-respecting order with degree pruning;
/// facial walks are checked as soon as they are fully mapped.
std::vector<Match> contains(const PlanarEmbedding& G, const Configuration& cfg);

struct MatchBreakdown {
    bool edges = false;        // (i)
    bool faces = false;        // (ii)
    bool degrees = false;      // (iii)
    bool locally_injective = false; // (iv)
    bool ok() const { return edges && faces && degrees && locally_injective; }
};

/// Checks the four conditions independently.
MatchBreakdown verify_match(const PlanarEmbedding& G, const Configuration& cfg, const Match& h);

/// Oracle: plain enumeration of vertex maps with edge-consistency pruning
/// only, verifying every leaf with verify_match. Throws CapError beyond the
/// caps (defaults |V(C)| <= 8, |V(G)| <= 16).
std::vector<Match> brute_contains(const PlanarEmbedding& G, const Configuration& cfg,
                                  int pattern_cap = 8, int host_cap = 16);

} // namespace pdg
