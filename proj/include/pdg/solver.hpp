#pragma once

#include "pdg/coloring.hpp"
#include "pdg/digraph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdg {

/// Raised when an exhaustive operation would exceed its configured cap.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

enum class SolveStatus { colored, unsatisfiable, budget_exhausted };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::budget_exhausted;
    Coloring witness; // total and valid when status == colored
    SearchStats stats;
};

struct SolveOptions {
    std::uint64_t budget = 10'000'000; // search nodes
    std::uint64_t seed = 0;            // 0 keeps the natural color order
};

/// Exact list-coloring search: branch on vertices by degree descending (ties
/// by index), prune by incremental monochromatic-cycle detection. When all
/// lists are equal the first branched vertex's color is pinned (color classes
/// are interchangeable). Deterministic per (vertex order, seed).
SolveOutcome solve(const Digraph& D, const ListAssignment& L, const SolveOptions& opts = {});

/// Ground-truth oracle: enumerates every assignment in the list product and
/// validates each one. Throws CapError when the product exceeds cap.
SolveOutcome brute_force(const Digraph& D, const ListAssignment& L,
                         std::uint64_t cap = std::uint64_t{1} << 24);

/// Least k admitting a valid k-coloring; 1 iff acyclic. Exact search.
int dichromatic_number(const Digraph& D, int vertex_cap = 20);

struct ColorVerdict {
    Color color;
    bool extends;       // coloring v with this color keeps phi valid
    MonoCycle blocking; // the monochromatic cycle through v otherwise
};

struct ExtensionReport {
    std::vector<ColorVerdict> verdicts;
    bool any_extends() const;
    const ColorVerdict& verdict_for(Color c) const;
};

/// For each color in L(v): does coloring v extend phi (a valid coloring of
/// D - v)? A color absent among v's out-neighbors, or absent among its
/// in-neighbors, always extends. Throws std::invalid_argument if phi is not
/// a valid total coloring of D - v.
ExtensionReport check_extension(const Digraph& D, int v, const Coloring& phi,
                                const ListAssignment& L);

// Forbidden shortcut patterns for monochromatic cycles through an uncolored
// vertex, in digraphs of digirth >= 5. A cycle exhibiting one of them implies
// a shorter monochromatic cycle avoiding the vertex, i.e., the surrounding
// partial coloring was never valid. Used as a corruption assertion inside the
// recoloring search.

struct TriangleContext {
    int apex; // the uncolored vertex the cycle runs through
    int u, w; // the other triangle corners
};

struct QuadContext {
    int apex, w, u, x; // 4-cycle apex-w-u-x in cyclic order
};

struct ShortcutVerdict {
    bool legal = true;
    // When illegal: the edge whose arc closes a monochromatic cycle that
    // avoids the apex.
    int shortcut_from = -1, shortcut_to = -1;
};

/// Cycle uses both triangle edges at the apex -> contradiction.
ShortcutVerdict shortcut_check(const Digraph& D, const MonoCycle& cycle, const TriangleContext& ctx);
/// Cycle uses three consecutive 4-cycle edges with the apex interior -> contradiction.
ShortcutVerdict shortcut_check(const Digraph& D, const MonoCycle& cycle, const QuadContext& ctx);

/// Screens a cycle through apex against every triangle and 4-cycle context in
/// D. Returns the number of contexts checked; throws std::logic_error on any
/// contradiction (search-state corruption).
std::uint64_t scan_shortcuts(const Digraph& D, int apex, const MonoCycle& cycle);

// Forced-color analysis around a degree-4 vertex on a triangle (v,u,w),
// given a valid coloring of D - v with 2-element L(v).

struct TriangleProfile {
    bool forced = false; // false: some color of L(v) extends
    Color extending_color = kUncolored;

    // Populated when forced. cycle_w blocks the color of w; cycle_u the other.
    MonoCycle cycle_w, cycle_u;
    bool pattern_ok = false; // neighbor colors split 2/2, w on cycle_w next to v,
                             // u on cycle_u next to v, u carries the other color
    bool touching = false;   // cycles do not cross at v in the rotation

    // deg(w) == 4 refinement: either some color of L(w) reopens the extension
    // (escape == true) or L(w) must equal L(v).
    bool case_b_checked = false;
    bool case_b_escape = false;
    bool case_b_lists_equal = false;

    // deg(w) == 5 with a 4-face on the far side of vw: which neighbor of w
    // continues cycle_w. 1 = the neighbor past u, 2 = the middle neighbor
    // (forces L(w) == L(v)), 0 = not applicable, -1 = the cycle continues
    // into a shortcut-forbidden neighbor (corrupt state).
    int case_c_variant = 0;
    bool case_c_lists_equal = false;
};

/// Throws std::invalid_argument unless deg(v) == 4, (v,u,w) is a triangle of
/// the underlying graph, |L(v)| == 2, and phi is a valid coloring of D - v.
TriangleProfile triangle_color_profile(const Digraph& D, int v, int u, int w,
                                       const Coloring& phi, const ListAssignment& L);

struct ReduceOptions {
    int recolor_depth = 8;
    std::uint64_t recolor_budget = 100'000; // moves per hard extension
    SolveOptions fallback;                  // used when reduction gets stuck
};

/// Constructive colorer: peel degree <= 3 vertices (extension by pigeonhole),
/// then degree-4 vertices on triangles (extension by bounded local
/// recoloring), falling back to solve() on the full instance when stuck.
/// Every witness is validated before it is returned.
SolveOutcome reduce_and_color(const Digraph& D, const ListAssignment& L,
                              const ReduceOptions& opts = {});

/// Maximum-cardinality vertex set inducing an acyclic subdigraph.
/// Branch-and-bound, exact. Throws CapError when |V| > vertex_cap.
std::vector<int> max_acyclic_set(const Digraph& D, int vertex_cap = 20);

} // namespace pdg
