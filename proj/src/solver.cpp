#include "pdg/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace pdg {

namespace {

// Monochromatic cycle through v in color class c, restricted to alive
// vertices; v itself counts as colored c. BFS over out-arcs, deterministic.
// The returned cycle starts at v.
bool blocking_cycle(const Digraph& D, const Coloring& phi, const std::vector<char>& alive,
                    int v, Color c, MonoCycle* out) {
    int n = D.vertex_count();
    std::vector<int> parent(n, -1);
    std::deque<int> q;
    for (int x : D.out_neighbors(v)) {
        if (x == v) continue;
        if (alive[x] && phi.get(x) == c && parent[x] < 0) {
            parent[x] = v;
            q.push_back(x);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int x : D.out_neighbors(u)) {
            if (x == v) {
                if (out) {
                    out->color = c;
                    out->cycle.clear();
                    for (int y = u; y != v; y = parent[y]) out->cycle.push_back(y);
                    out->cycle.push_back(v);
                    std::reverse(out->cycle.begin(), out->cycle.end());
                }
                return true;
            }
            if (alive[x] && phi.get(x) == c && parent[x] < 0) {
                parent[x] = u;
                q.push_back(x);
            }
        }
    }
    return false;
}

// phi restricted to alive: total and every color class acyclic?
bool valid_on(const Digraph& D, const Coloring& phi, const std::vector<char>& alive) {
    int n = D.vertex_count();
    std::set<Color> used;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        if (!phi.is_colored(v)) return false;
        used.insert(phi.get(v));
    }
    for (Color c : used) {
        std::vector<char> members(n, 0);
        for (int v = 0; v < n; ++v) members[v] = alive[v] && phi.get(v) == c;
        if (!D.is_acyclic_set(members)) return false;
    }
    return true;
}

std::vector<char> all_but(int n, int v) {
    std::vector<char> alive(n, 1);
    alive[v] = 0;
    return alive;
}

ExtensionReport extension_masked(const Digraph& D, int v, const Coloring& phi,
                                 const ListAssignment& L, const std::vector<char>& alive) {
    ExtensionReport rep;
    for (Color c : L.list(v)) {
        ColorVerdict verdict{c, true, {}};
        if (blocking_cycle(D, phi, alive, v, c, &verdict.blocking)) verdict.extends = false;
        rep.verdicts.push_back(std::move(verdict));
    }
    return rep;
}

} // namespace

bool ExtensionReport::any_extends() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const ColorVerdict& v) { return v.extends; });
}

const ColorVerdict& ExtensionReport::verdict_for(Color c) const {
    for (const auto& v : verdicts)
        if (v.color == c) return v;
    throw std::invalid_argument("color not in list");
}

SolveOutcome solve(const Digraph& D, const ListAssignment& L, const SolveOptions& opts) {
    int n = D.vertex_count();
    SolveOutcome outcome;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = D.embedding().degree(a), db = D.embedding().degree(b);
        if (da != db) return da > db;
        return a < b;
    });

    std::vector<std::vector<Color>> values(n);
    for (int v = 0; v < n; ++v) {
        values[v] = L.list(v);
        if (values[v].empty()) {
            outcome.status = SolveStatus::unsatisfiable;
            return outcome;
        }
        if (opts.seed != 0) {
            std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + v);
            for (size_t i = values[v].size() - 1; i > 0; --i)
                std::swap(values[v][i], values[v][rng() % (i + 1)]);
        }
    }
    // Interchangeable color classes: pin the first branched vertex.
    bool pin_root = L.all_equal() && n > 0;

    Coloring phi(n);
    std::vector<char> alive(n, 1);
    bool exhausted = false;

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int v = order[depth];
        int tried = 0;
        for (Color c : values[v]) {
            if (pin_root && depth == 0 && tried == 1) break;
            ++tried;
            if (++outcome.stats.nodes > opts.budget) {
                exhausted = true;
                return false;
            }
            phi.set(v, c);
            if (!blocking_cycle(D, phi, alive, v, c, nullptr)) {
                if (self(self, depth + 1)) return true;
                if (exhausted) return false;
            }
            phi.clear(v);
        }
        ++outcome.stats.backtracks;
        return false;
    };

    if (dfs(dfs, 0)) {
        outcome.status = SolveStatus::colored;
        outcome.witness = phi;
        if (!validate_coloring(D, L, phi).ok())
            throw std::logic_error("solver produced an invalid witness");
    } else {
        outcome.status = exhausted ? SolveStatus::budget_exhausted : SolveStatus::unsatisfiable;
    }
    return outcome;
}

SolveOutcome brute_force(const Digraph& D, const ListAssignment& L, std::uint64_t cap) {
    int n = D.vertex_count();
    SolveOutcome outcome;

    std::uint64_t product = 1;
    for (int v = 0; v < n; ++v) {
        std::uint64_t size = L.list(v).size();
        if (size == 0) {
            outcome.status = SolveStatus::unsatisfiable;
            return outcome;
        }
        if (product > cap / size) throw CapError("assignment space exceeds cap");
        product *= size;
    }

    std::vector<size_t> idx(n, 0);
    Coloring phi(n);
    for (std::uint64_t step = 0; step < product; ++step) {
        for (int v = 0; v < n; ++v) phi.set(v, L.list(v)[idx[v]]);
        ++outcome.stats.nodes;
        if (validate_coloring(D, phi).ok()) {
            outcome.status = SolveStatus::colored;
            outcome.witness = phi;
            return outcome;
        }
        for (int v = n - 1; v >= 0; --v) {
            if (++idx[v] < L.list(v).size()) break;
            idx[v] = 0;
        }
    }
    outcome.status = SolveStatus::unsatisfiable;
    return outcome;
}

int dichromatic_number(const Digraph& D, int vertex_cap) {
    int n = D.vertex_count();
    if (n > vertex_cap) throw CapError("instance exceeds the exact-search cap");
    if (D.is_acyclic()) return 1;
    for (int k = 2; k <= n; ++k) {
        SolveOptions opts;
        opts.budget = std::numeric_limits<std::uint64_t>::max();
        if (solve(D, ListAssignment::uniform(n, k), opts).status == SolveStatus::colored)
            return k;
    }
    return n; // every digraph without digons is |V|-colorable
}

ExtensionReport check_extension(const Digraph& D, int v, const Coloring& phi,
                                const ListAssignment& L) {
    int n = D.vertex_count();
    if (phi.is_colored(v)) throw std::invalid_argument("vertex v must be uncolored in phi");
    auto alive = all_but(n, v);
    if (!valid_on(D, phi, alive))
        throw std::invalid_argument("phi is not a valid total coloring of D - v");
    return extension_masked(D, v, phi, L, alive);
}

namespace {

int cycle_position(const MonoCycle& cycle, int v) {
    for (size_t i = 0; i < cycle.cycle.size(); ++i)
        if (cycle.cycle[i] == v) return static_cast<int>(i);
    return -1;
}

// Cycle neighbors (predecessor, successor) of a vertex on the cycle.
std::pair<int, int> cycle_neighbors(const MonoCycle& cycle, int pos) {
    int len = static_cast<int>(cycle.cycle.size());
    return {cycle.cycle[(pos + len - 1) % len], cycle.cycle[(pos + 1) % len]};
}

// Arc between two adjacent vertices, as oriented in D.
std::pair<int, int> oriented(const Digraph& D, int a, int b) {
    return D.has_arc(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

ShortcutVerdict shortcut_check(const Digraph& D, const MonoCycle& cycle,
                               const TriangleContext& ctx) {
    const auto& emb = D.embedding();
    if (!emb.adjacent(ctx.apex, ctx.u) || !emb.adjacent(ctx.apex, ctx.w) ||
        !emb.adjacent(ctx.u, ctx.w))
        throw std::invalid_argument("context is not a triangle");
    ShortcutVerdict verdict;
    int pos = cycle_position(cycle, ctx.apex);
    if (pos < 0) return verdict;
    auto [pred, succ] = cycle_neighbors(cycle, pos);
    if ((pred == ctx.u && succ == ctx.w) || (pred == ctx.w && succ == ctx.u)) {
        verdict.legal = false;
        std::tie(verdict.shortcut_from, verdict.shortcut_to) = oriented(D, ctx.u, ctx.w);
    }
    return verdict;
}

ShortcutVerdict shortcut_check(const Digraph& D, const MonoCycle& cycle, const QuadContext& ctx) {
    const auto& emb = D.embedding();
    if (!emb.adjacent(ctx.apex, ctx.w) || !emb.adjacent(ctx.w, ctx.u) ||
        !emb.adjacent(ctx.u, ctx.x) || !emb.adjacent(ctx.x, ctx.apex))
        throw std::invalid_argument("context is not a 4-cycle");
    ShortcutVerdict verdict;
    int apex_pos = cycle_position(cycle, ctx.apex);
    if (apex_pos < 0) return verdict;
    auto [pred, succ] = cycle_neighbors(cycle, apex_pos);
    bool uses_all = false;
    // The forbidden pattern is the path u-x-apex-w traversed either way.
    if (pred == ctx.x && succ == ctx.w) {
        auto [xpred, xsucc] = cycle_neighbors(cycle, cycle_position(cycle, ctx.x));
        (void)xsucc;
        uses_all = xpred == ctx.u;
    } else if (pred == ctx.w && succ == ctx.x) {
        auto [xpred, xsucc] = cycle_neighbors(cycle, cycle_position(cycle, ctx.x));
        (void)xpred;
        uses_all = xsucc == ctx.u;
    }
    if (uses_all) {
        verdict.legal = false;
        std::tie(verdict.shortcut_from, verdict.shortcut_to) = oriented(D, ctx.u, ctx.w);
    }
    return verdict;
}

namespace {

std::uint64_t scan_shortcuts_masked(const Digraph& D, int apex, const MonoCycle& cycle,
                                    const std::vector<char>& alive) {
    const auto& emb = D.embedding();
    std::uint64_t checked = 0;
    const auto& nbrs = emb.rotation(apex);
    for (size_t i = 0; i < nbrs.size(); ++i) {
        if (!alive[nbrs[i]]) continue;
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            if (!alive[nbrs[j]]) continue;
            if (!emb.adjacent(nbrs[i], nbrs[j])) continue;
            ++checked;
            auto verdict =
                shortcut_check(D, cycle, TriangleContext{apex, nbrs[i], nbrs[j]});
            if (!verdict.legal)
                throw std::logic_error("triangle shortcut fired: partial coloring is corrupt");
        }
    }
    for (int w : nbrs) {
        if (!alive[w]) continue;
        for (int x : nbrs) {
            if (x == w || !alive[x]) continue;
            for (int u : emb.rotation(w)) {
                if (u == apex || u == x || !alive[u]) continue;
                if (!emb.adjacent(u, x)) continue;
                ++checked;
                auto verdict = shortcut_check(D, cycle, QuadContext{apex, w, u, x});
                if (!verdict.legal)
                    throw std::logic_error("4-cycle shortcut fired: partial coloring is corrupt");
            }
        }
    }
    return checked;
}

} // namespace

std::uint64_t scan_shortcuts(const Digraph& D, int apex, const MonoCycle& cycle) {
    std::vector<char> alive(D.vertex_count(), 1);
    return scan_shortcuts_masked(D, apex, cycle, alive);
}

TriangleProfile triangle_color_profile(const Digraph& D, int v, int u, int w,
                                       const Coloring& phi, const ListAssignment& L) {
    const auto& emb = D.embedding();
    int n = D.vertex_count();
    if (emb.degree(v) != 4) throw std::invalid_argument("profile requires deg(v) == 4");
    if (!emb.adjacent(v, u) || !emb.adjacent(v, w) || !emb.adjacent(u, w))
        throw std::invalid_argument("v,u,w is not a triangle");
    if (L.list(v).size() != 2) throw std::invalid_argument("profile requires |L(v)| == 2");
    if (phi.is_colored(v)) throw std::invalid_argument("v must be uncolored");
    auto alive = all_but(n, v);
    if (!valid_on(D, phi, alive))
        throw std::invalid_argument("phi is not a valid total coloring of D - v");

    TriangleProfile profile;
    auto rep = extension_masked(D, v, phi, L, alive);
    for (const auto& verdict : rep.verdicts)
        if (verdict.extends) {
            profile.extending_color = verdict.color;
            return profile;
        }

    profile.forced = true;
    Color color_w = phi.get(w);
    Color color_u = phi.get(u);
    Color a = L.list(v)[0], b = L.list(v)[1];
    if (color_w == a || color_w == b) {
        profile.cycle_w = rep.verdict_for(color_w).blocking;
        profile.cycle_u = rep.verdict_for(color_w == a ? b : a).blocking;
    } else {
        // w's color is not even admissible for v; no pattern to speak of.
        profile.cycle_w = rep.verdicts[0].blocking;
        profile.cycle_u = rep.verdicts[1].blocking;
        return profile;
    }

    // Neighbor pattern: two neighbors per cycle, w next to v on its cycle,
    // u next to v on the other, u carrying the other admissible color.
    auto [pw, sw] = cycle_neighbors(profile.cycle_w, cycle_position(profile.cycle_w, v));
    auto [pu, su] = cycle_neighbors(profile.cycle_u, cycle_position(profile.cycle_u, v));
    const auto& nbrs = emb.rotation(v);
    Color other = color_w == a ? b : a;
    bool split_ok = true;
    for (int x : nbrs)
        split_ok = split_ok && (phi.get(x) == a || phi.get(x) == b);
    int count_w_color = 0;
    for (int x : nbrs)
        if (phi.get(x) == color_w) ++count_w_color;
    bool w_adjacent = (pw == w || sw == w);
    bool u_adjacent = (pu == u || su == u);
    profile.pattern_ok =
        split_ok && count_w_color == 2 && w_adjacent && u_adjacent && color_u == other;

    // Touching: the cycle pairs do not interleave in the rotation at v.
    if (profile.pattern_ok) {
        int changes = 0;
        for (size_t i = 0; i < nbrs.size(); ++i) {
            bool this_on_w = nbrs[i] == pw || nbrs[i] == sw;
            bool next_on_w = nbrs[(i + 1) % nbrs.size()] == pw ||
                             nbrs[(i + 1) % nbrs.size()] == sw;
            if (this_on_w != next_on_w) ++changes;
        }
        profile.touching = changes == 2;
    }

    // deg(w) == 4: shift the uncolored vertex to w and re-examine.
    if (emb.degree(w) == 4 && profile.pattern_ok) {
        profile.case_b_checked = true;
        Coloring shifted = phi;
        shifted.set(v, color_w);
        shifted.clear(w);
        auto alive_w = all_but(n, w);
        if (valid_on(D, shifted, alive_w)) {
            auto rep_w = extension_masked(D, w, shifted, L, alive_w);
            profile.case_b_escape = rep_w.any_extends();
            if (!profile.case_b_escape)
                profile.case_b_lists_equal = L.list(w) == L.list(v);
        }
    }

    // deg(w) == 5 with a 4-face beyond the edge vw: which neighbor of w
    // continues cycle_w.
    if (emb.degree(w) == 5 && profile.pattern_ok) {
        int dvw = emb.dart_between(v, w);
        int f1 = emb.face_of_dart(dvw), f2 = emb.face_of_dart(emb.reverse(dvw));
        auto is_triangle_vuw = [&](int f) {
            if (!emb.face(f).is_triangle()) return false;
            auto vs = emb.triangle_vertices(f);
            return std::set<int>(vs.begin(), vs.end()) == std::set<int>{v, u, w};
        };
        int far = is_triangle_vuw(f1) ? f2 : (is_triangle_vuw(f2) ? f1 : -1);
        if (far >= 0 && emb.face_size(far) == 4) {
            // Clockwise neighbors of w, starting from v towards u: v, u, w1, w2, w3.
            const auto& rw = emb.rotation(w);
            int deg_w = static_cast<int>(rw.size());
            int pos_v = static_cast<int>(std::find(rw.begin(), rw.end(), v) - rw.begin());
            int step = rw[(pos_v + 1) % deg_w] == u ? 1 : deg_w - 1;
            int w1 = rw[(pos_v + 2 * step) % deg_w];
            int w2 = rw[(pos_v + 3 * step) % deg_w];
            int w3 = rw[(pos_v + 4 * step) % deg_w];
            auto [pw2, sw2] = cycle_neighbors(profile.cycle_w, cycle_position(profile.cycle_w, w));
            int t = pw2 == v ? sw2 : pw2;
            if (t == w1) {
                profile.case_c_variant = 1;
            } else if (t == w2) {
                profile.case_c_variant = 2;
                std::vector<Color> forced{color_w, color_u};
                std::sort(forced.begin(), forced.end());
                profile.case_c_lists_equal = L.list(w) == forced;
            } else if (t == u || t == w3) {
                profile.case_c_variant = -1; // shortcut contradiction; corrupt state
            }
        }
    }
    return profile;
}

namespace {

int alive_degree(const PlanarEmbedding& emb, int v, const std::vector<char>& alive) {
    int d = 0;
    for (int x : emb.rotation(v))
        if (alive[x]) ++d;
    return d;
}

bool on_alive_triangle(const PlanarEmbedding& emb, int v, const std::vector<char>& alive) {
    const auto& nbrs = emb.rotation(v);
    for (size_t i = 0; i < nbrs.size(); ++i) {
        if (!alive[nbrs[i]]) continue;
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (alive[nbrs[j]] && emb.adjacent(nbrs[i], nbrs[j])) return true;
    }
    return false;
}

struct RecolorSearch {
    const Digraph& D;
    const ListAssignment& L;
    const ReduceOptions& opts;
    Coloring& phi;
    const std::vector<char>& alive;
    SearchStats& stats;
    std::uint64_t moves = 0;
    std::vector<char> on_path;

    RecolorSearch(const Digraph& d, const ListAssignment& l, const ReduceOptions& o, Coloring& p,
                  const std::vector<char>& a, SearchStats& s)
        : D(d), L(l), opts(o), phi(p), alive(a), stats(s), on_path(d.vertex_count(), 0) {}

    bool attempt(int v, int depth_left) {
        ++stats.nodes;
        auto rep = extension_masked(D, v, phi, L, alive);
        for (const auto& verdict : rep.verdicts)
            if (verdict.extends) {
                phi.set(v, verdict.color);
                return true;
            }
        if (depth_left == 0) return false;

        std::vector<int> candidates;
        for (const auto& verdict : rep.verdicts) {
            scan_shortcuts_masked(D, v, verdict.blocking, alive); // corruption assertion
            for (int x : verdict.blocking.cycle)
                if (x != v && !on_path[x] &&
                    std::find(candidates.begin(), candidates.end(), x) == candidates.end())
                    candidates.push_back(x);
        }
        std::sort(candidates.begin(), candidates.end());

        for (int u : candidates) {
            for (Color c : L.list(u)) {
                if (c == phi.get(u)) continue;
                if (++moves > opts.recolor_budget) return false;
                ++stats.nodes;
                // Recoloring u to c is legal iff no monochromatic c-cycle
                // through u appears in the graph minus v.
                Color old = phi.get(u);
                phi.clear(u);
                std::vector<char> alive_minus_v = alive;
                alive_minus_v[v] = 0;
                bool creates = blocking_cycle(D, phi, alive_minus_v, u, c, nullptr);
                phi.set(u, c);
                if (creates) {
                    phi.set(u, old);
                    continue;
                }
                on_path[u] = 1;
                if (attempt(v, depth_left - 1)) return true;
                on_path[u] = 0;
                phi.set(u, old);
            }
        }
        return false;
    }
};

} // namespace

SolveOutcome reduce_and_color(const Digraph& D, const ListAssignment& L,
                              const ReduceOptions& opts) {
    auto g = D.digirth();
    if (g.has_value() && *g < 5)
        throw std::invalid_argument("reduce_and_color requires digirth >= 5");

    const auto& emb = D.embedding();
    int n = D.vertex_count();
    SolveOutcome outcome;

    std::vector<char> alive(n, 1);
    std::vector<int> removal_order;
    int alive_count = n;
    bool stuck = false;
    while (alive_count > 0) {
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int d = alive_degree(emb, v, alive);
            if (pick < 0 || d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick_deg > 3) {
            pick = -1;
            for (int v = 0; v < n && pick < 0; ++v)
                if (alive[v] && alive_degree(emb, v, alive) == 4 && on_alive_triangle(emb, v, alive))
                    pick = v;
            if (pick < 0) {
                stuck = true;
                break;
            }
        }
        alive[pick] = 0;
        --alive_count;
        removal_order.push_back(pick);
    }

    if (!stuck) {
        Coloring phi(n);
        bool failed = false;
        for (auto it = removal_order.rbegin(); it != removal_order.rend(); ++it) {
            int v = *it;
            alive[v] = 1;
            ++outcome.stats.nodes;
            auto rep = extension_masked(D, v, phi, L, alive);
            bool extended = false;
            for (const auto& verdict : rep.verdicts)
                if (verdict.extends) {
                    phi.set(v, verdict.color);
                    extended = true;
                    break;
                }
            if (!extended) {
                RecolorSearch search(D, L, opts, phi, alive, outcome.stats);
                if (!search.attempt(v, opts.recolor_depth)) {
                    failed = true;
                    break;
                }
            }
        }
        if (!failed) {
            if (!validate_coloring(D, L, phi).ok())
                throw std::logic_error("reduction produced an invalid witness");
            outcome.status = SolveStatus::colored;
            outcome.witness = std::move(phi);
            return outcome;
        }
    }

    // Stuck or a hard extension failed: solve the full instance.
    SolveOutcome fallback = solve(D, L, opts.fallback);
    fallback.stats.nodes += outcome.stats.nodes;
    fallback.stats.backtracks += outcome.stats.backtracks;
    return fallback;
}

std::vector<int> max_acyclic_set(const Digraph& D, int vertex_cap) {
    int n = D.vertex_count();
    if (n > vertex_cap) throw CapError("instance exceeds the acyclic-set cap");

    std::vector<char> members(n, 0);
    std::vector<int> best;
    Coloring pseudo(n); // reuse the cycle detector: members carry color 0
    auto include_ok = [&](int v) {
        pseudo.set(v, 0);
        std::vector<char> with(members);
        with[v] = 1;
        bool cycle = blocking_cycle(D, pseudo, with, v, 0, nullptr);
        pseudo.clear(v);
        return !cycle;
    };

    int current = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        if (current + (n - v) <= static_cast<int>(best.size())) return; // bound
        if (v == n) {
            best.clear();
            for (int x = 0; x < n; ++x)
                if (members[x]) best.push_back(x);
            return;
        }
        if (include_ok(v)) {
            members[v] = 1;
            pseudo.set(v, 0);
            ++current;
            self(self, v + 1);
            --current;
            pseudo.clear(v);
            members[v] = 0;
        }
        self(self, v + 1);
    };
    dfs(dfs, 0);
    return best;
}

} // namespace pdg
