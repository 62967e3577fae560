#pragma once

#include "pdg/digraph.hpp"

#include <string>
#include <vector>

namespace pdg {

/// Color symbols are small non-negative integers.
using Color = int;
constexpr Color kUncolored = -1;

// A partial vertex coloring, indexed by internal vertex index.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n) : colors_(n, kUncolored) {}

    int size() const { return static_cast<int>(colors_.size()); }
    Color get(int v) const { return colors_[v]; }
    void set(int v, Color c) { colors_[v] = c; }
    void clear(int v) { colors_[v] = kUncolored; }
    bool is_colored(int v) const { return colors_[v] != kUncolored; }
    bool is_total() const;

    const std::vector<Color>& raw() const { return colors_; }

private:
    std::vector<Color> colors_;
};

// Per-vertex admissible color sets. Lists are kept sorted and deduplicated.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int n) : lists_(n) {}
    /// Every vertex gets the same list {first, ..., first+k-1}.
    static ListAssignment uniform(int n, int k, Color first = 1);

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<Color>& list(int v) const { return lists_[v]; }
    void set_list(int v, std::vector<Color> colors);
    bool contains(int v, Color c) const;
    /// True iff every list has exactly k colors.
    bool is_k_list(int k) const;
    /// True iff all lists are identical.
    bool all_equal() const;

private:
    std::vector<std::vector<Color>> lists_;
};

/// A directed cycle whose vertices all carry one color.
struct MonoCycle {
    std::vector<int> cycle; // vertex sequence, arcs follow orientation
    Color color = kUncolored;
};

struct ValidationReport {
    enum class Kind { ok, not_total, color_outside_list, mono_cycle };
    Kind kind = Kind::ok;
    int vertex = -1;     // offender for not_total / color_outside_list
    MonoCycle cycle;     // offender for mono_cycle

    bool ok() const { return kind == Kind::ok; }
    std::string describe(const PlanarEmbedding& emb) const;
};

/// Checks that phi is total, respects L, and that every color class induces
/// an acyclic subdigraph. Sound and complete: any violation is reported with
/// the offending vertex or a monochromatic directed cycle.
ValidationReport validate_coloring(const Digraph& D, const ListAssignment& L, const Coloring& phi);

/// Same, without a list constraint (used for plain k-colorings).
ValidationReport validate_coloring(const Digraph& D, const Coloring& phi);

/// Validity of phi on D - removed: total there and classes acyclic there.
ValidationReport validate_coloring_deleted(const Digraph& D, const Coloring& phi, int removed);

} // namespace pdg
