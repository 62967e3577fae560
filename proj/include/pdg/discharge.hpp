#pragma once

#include "pdg/embedding.hpp"
#include "pdg/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pdg {

// Charges live on vertices and faces. Initial charge is deg(x) - 4 for every
// element; by the Euler relation the total is exactly -8 and every transfer
// preserves it.

struct Element {
    enum class Kind { vertex, face };
    Kind kind;
    int index;

    bool operator==(const Element&) const = default;
    static Element vertex(int v) { return {Kind::vertex, v}; }
    static Element face(int f) { return {Kind::face, f}; }
};

std::string to_string(const Element& e);

class ChargeState {
public:
    ChargeState() = default;
    ChargeState(int vertices, int faces)
        : vertex_charge_(vertices, Rational(0)), face_charge_(faces, Rational(0)) {}

    const Rational& of(const Element& e) const;
    Rational& of(const Element& e);
    const Rational& vertex(int v) const { return vertex_charge_[v]; }
    const Rational& face(int f) const { return face_charge_[f]; }

    Rational total() const;
    /// Elements with strictly negative charge, vertices first.
    std::vector<Element> negative_elements() const;

    bool operator==(const ChargeState&) const = default;

private:
    std::vector<Rational> vertex_charge_, face_charge_;
};

enum class Rule { R1, R2, R3, R4, R5, R6, R7, R8, R9, Rstar };

std::string to_string(Rule r);

struct Transfer {
    Rule rule;
    Element sender;
    Element receiver;
    Rational amount;   // always positive
    std::string note;  // optional flag, e.g. rule-text ambiguity fallbacks
};

// Ordered, replayable log of every transfer.
class ChargeLedger {
public:
    void add(Rule rule, Element sender, Element receiver, Rational amount, std::string note = {});
    const std::vector<Transfer>& transfers() const { return transfers_; }

    /// Records an event that moved no charge (e.g. the R5 clamp firing).
    void add_annotation(std::string text) { annotations_.push_back(std::move(text)); }
    const std::vector<std::string>& annotations() const { return annotations_; }

    /// Applies every transfer to a copy of the initial state.
    ChargeState replay(const ChargeState& initial) const;

    /// Line format "R<k> <sender> -> <receiver> <p>/<q>"; notes become
    /// '#'-prefixed comment lines, annotations trail the transfers.
    /// Rationals print in lowest terms.
    std::string serialize() const;
    static ChargeLedger deserialize(std::istream& in);
    static ChargeLedger deserialize(const std::string& text);

private:
    std::vector<Transfer> transfers_;
    std::vector<std::string> annotations_;
};

/// charge(x) = deg(x) - 4 for every vertex and face; total is -8.
/// Throws InputError if emb is not connected (never happens for built
/// embeddings, which enforce connectivity).
ChargeState initial_charges(const PlanarEmbedding& emb);

// The discharging pass. Rules R1-R4 and R6-R9 read only degrees, face sizes
// and adjacency, so they are evaluated simultaneously from the structure.
// R5 runs second: its amount depends on what R1 and R2 delivered. R* runs
// last on the post-R1..R9 state. Rules are applied to whatever graph is
// given; on graphs containing excluded configurations some element simply
// ends negative, which is the diagnostic signal.
struct DischargeResult {
    ChargeState initial;
    ChargeState after_rules; // R1..R9
    ChargeState final;       // after R*
    ChargeLedger ledger;
    std::vector<Element> negative; // elements with negative final charge
};

/// R1-R9 only (two stages; see above). Returns the state and the ledger.
std::pair<ChargeState, ChargeLedger> apply_rules(const PlanarEmbedding& emb);

/// R*: every triangle with positive post-R charge splits its excess equally
/// among edge-adjacent 5-5-4 triangles of negative post-R charge. Donations
/// are computed simultaneously from post_R and applied atomically. Extends
/// the ledger in place.
ChargeState apply_rstar(const PlanarEmbedding& emb, const ChargeState& post_R,
                        ChargeLedger& ledger);

/// initial_charges + apply_rules + apply_rstar + the negative-element list.
DischargeResult final_report(const PlanarEmbedding& emb);

/// Replays the ledger from the initial state and checks the total is exactly
/// -8 and the replay matches final. Exact arithmetic, no tolerance.
bool verify_conservation(const ChargeLedger& ledger, const PlanarEmbedding& emb,
                         const ChargeState& final_state);

} // namespace pdg
