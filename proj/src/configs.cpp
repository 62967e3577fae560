#include "pdg/configs.hpp"

#include "pdg/solver.hpp" // CapError

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pdg {

namespace {

// Is `walk` (a cyclic vertex sequence) a facial walk of G, up to rotation?
// Orientation-preserving: the sequence must follow G's own trace direction.
bool is_facial_walk(const PlanarEmbedding& G, const std::vector<int>& walk) {
    int k = static_cast<int>(walk.size());
    for (const Face& f : G.faces()) {
        if (f.size != k) continue;
        for (int shift = 0; shift < k; ++shift) {
            bool match = true;
            for (int i = 0; i < k && match; ++i)
                match = f.vertices[(shift + i) % k] == walk[i];
            if (match) return true;
        }
    }
    return false;
}

std::vector<int> image_walk(const std::vector<int>& pattern_walk, const std::vector<int>& image) {
    std::vector<int> out;
    out.reserve(pattern_walk.size());
    for (int a : pattern_walk) out.push_back(image[a]);
    return out;
}

} // namespace

std::vector<Configuration> load_catalog(std::istream& in) {
    std::vector<Configuration> catalog;
    std::string line;
    bool header_seen = false;
    int lineno = 0;

    struct Draft {
        std::string name, provenance;
        std::vector<RotationData> rotations;
        std::vector<std::pair<VertexId, int>> constraints;
        std::pair<VertexId, VertexId> outer{};
        bool outer_set = false;
    };
    std::vector<Draft> drafts;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!header_seen) {
            int version = 0;
            if (tok != "cfg" || !(ls >> version) || version != 1)
                throw InputError("line " + std::to_string(lineno) + ": expected header 'cfg 1'");
            header_seen = true;
            continue;
        }
        if (tok == "name") {
            Draft d;
            if (!(ls >> d.name))
                throw InputError("line " + std::to_string(lineno) + ": name requires a value");
            drafts.push_back(std::move(d));
            continue;
        }
        if (drafts.empty())
            throw InputError("line " + std::to_string(lineno) + ": statement before any 'name'");
        Draft& d = drafts.back();
        if (tok == "provenance") {
            std::string rest;
            std::getline(ls, rest);
            auto first = rest.find('"');
            auto last = rest.rfind('"');
            if (first == std::string::npos || last == first)
                throw InputError("line " + std::to_string(lineno) + ": provenance must be quoted");
            d.provenance = rest.substr(first + 1, last - first - 1);
        } else if (tok == "v") {
            RotationData rd;
            if (!(ls >> rd.vertex))
                throw InputError("line " + std::to_string(lineno) + ": bad vertex statement");
            VertexId nb;
            while (ls >> nb) rd.neighbors.push_back(nb);
            d.rotations.push_back(std::move(rd));
        } else if (tok == "u") {
            VertexId vertex;
            int delta;
            if (!(ls >> vertex >> delta) || delta <= 0)
                throw InputError("line " + std::to_string(lineno) + ": bad constraint statement");
            d.constraints.emplace_back(vertex, delta);
        } else if (tok == "outer") {
            if (!(ls >> d.outer.first >> d.outer.second))
                throw InputError("line " + std::to_string(lineno) + ": bad outer statement");
            d.outer_set = true;
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown statement '" + tok + "'");
        }
    }
    if (!header_seen) throw InputError("missing 'cfg 1' header");

    for (auto& d : drafts) {
        Configuration cfg;
        cfg.name = d.name;
        cfg.provenance = d.provenance;
        cfg.pattern = PlanarEmbedding::build(d.rotations);
        for (auto [label, delta] : d.constraints) {
            int v = cfg.pattern.index_of(label);
            if (delta < cfg.pattern.degree(v))
                throw InputError("configuration " + d.name + ": delta(" + std::to_string(label) +
                                 ") = " + std::to_string(delta) + " below pattern degree " +
                                 std::to_string(cfg.pattern.degree(v)));
            cfg.delta[v] = delta;
        }
        if (!d.outer_set)
            throw InputError("configuration " + d.name + ": missing outer face designation");
        int du = cfg.pattern.index_of(d.outer.first);
        int dv = cfg.pattern.index_of(d.outer.second);
        cfg.outer_face = cfg.pattern.face_of_dart(cfg.pattern.dart_between(du, dv));
        catalog.push_back(std::move(cfg));
    }
    return catalog;
}

std::vector<Configuration> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return load_catalog(in);
}

MatchBreakdown verify_match(const PlanarEmbedding& G, const Configuration& cfg, const Match& h) {
    const PlanarEmbedding& C = cfg.pattern;
    MatchBreakdown bd;

    bd.edges = true;
    for (int e = 0; e < C.edge_count(); ++e) {
        int a = C.edge_u(e), b = C.edge_v(e);
        if (!G.adjacent(h.image[a], h.image[b])) {
            bd.edges = false;
            break;
        }
    }

    bd.faces = true;
    for (int f = 0; f < C.face_count() && bd.faces; ++f) {
        if (f == cfg.outer_face) continue;
        bd.faces = is_facial_walk(G, image_walk(C.face(f).vertices, h.image));
    }

    bd.degrees = true;
    for (const auto& [a, delta] : cfg.delta)
        if (G.degree(h.image[a]) != delta) {
            bd.degrees = false;
            break;
        }

    bd.locally_injective = true;
    for (int a = 0; a < C.vertex_count() && bd.locally_injective; ++a) {
        std::set<int> images;
        for (int b : C.rotation(a))
            if (!images.insert(h.image[b]).second) {
                bd.locally_injective = false;
                break;
            }
    }
    return bd;
}

namespace {

struct Matcher {
    const PlanarEmbedding& G;
    const Configuration& cfg;
    const PlanarEmbedding& C;
    std::vector<int> order;      // pattern vertices, connectivity-respecting
    std::vector<int> image;      // current partial map, -1 unassigned
    std::vector<Match> found;

    Matcher(const PlanarEmbedding& g, const Configuration& c)
        : G(g), cfg(c), C(c.pattern), image(C.vertex_count(), -1) {
        // BFS order from the most constrained vertex keeps the frontier joined
        // to assigned vertices, so edge checks prune early.
        int start = 0;
        for (int v = 1; v < C.vertex_count(); ++v)
            if ((cfg.constrained(v) ? 1 : 0) > (cfg.constrained(start) ? 1 : 0) ||
                (cfg.constrained(v) == cfg.constrained(start) && C.degree(v) > C.degree(start)))
                start = v;
        std::vector<char> seen(C.vertex_count(), 0);
        std::vector<int> queue{start};
        seen[start] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            for (int w : C.rotation(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        for (int v = 0; v < C.vertex_count(); ++v) // disconnected patterns
            if (!seen[v]) order.push_back(v);
    }

    bool candidate_ok(int a, int g) {
        if (cfg.constrained(a)) {
            if (G.degree(g) != cfg.delta.at(a)) return false;
        } else if (G.degree(g) < C.degree(a)) {
            return false; // (i)+(iv) force at least the pattern degree
        }
        // (i) against assigned neighbors, (iv) through any common neighbor.
        for (int b : C.rotation(a)) {
            if (image[b] >= 0 && !G.adjacent(g, image[b])) return false;
            for (int b2 : C.rotation(b)) // b sees both a and b2
                if (b2 != a && image[b2] == g) return false;
        }
        // (iv) at a itself: assigned neighbors of a must stay distinct.
        std::set<int> seen;
        for (int b : C.rotation(a))
            if (image[b] >= 0 && !seen.insert(image[b]).second) return false;
        return true;
    }

    // Bounded faces fully assigned once their last vertex lands.
    bool faces_ok(int a) {
        for (int f = 0; f < C.face_count(); ++f) {
            if (f == cfg.outer_face) continue;
            const Face& face = C.face(f);
            bool involves = false, complete = true;
            for (int v : face.vertices) {
                involves = involves || v == a;
                complete = complete && image[v] >= 0;
            }
            if (involves && complete &&
                !is_facial_walk(G, image_walk(face.vertices, image)))
                return false;
        }
        return true;
    }

    void run(size_t depth) {
        if (depth == order.size()) {
            Match m{image};
            if (!verify_match(G, cfg, m).ok())
                throw std::logic_error("matcher found a map that fails verification");
            found.push_back(std::move(m));
            return;
        }
        int a = order[depth];
        for (int g = 0; g < G.vertex_count(); ++g) {
            if (!candidate_ok(a, g)) continue;
            image[a] = g;
            if (faces_ok(a)) run(depth + 1);
            image[a] = -1;
        }
    }
};

} // namespace

std::vector<Match> contains(const PlanarEmbedding& G, const Configuration& cfg) {
    Matcher matcher(G, cfg);
    matcher.run(0);
    std::sort(matcher.found.begin(), matcher.found.end());
    return matcher.found;
}

std::vector<Match> brute_contains(const PlanarEmbedding& G, const Configuration& cfg,
                                  int pattern_cap, int host_cap) {
    const PlanarEmbedding& C = cfg.pattern;
    if (C.vertex_count() > pattern_cap) throw CapError("pattern exceeds the oracle cap");
    if (G.vertex_count() > host_cap) throw CapError("host exceeds the oracle cap");

    std::vector<Match> found;
    std::vector<int> image(C.vertex_count(), -1);
    auto enumerate = [&](auto&& self, int a) -> void {
        if (a == C.vertex_count()) {
            Match m{image};
            if (verify_match(G, cfg, m).ok()) found.push_back(std::move(m));
            return;
        }
        for (int g = 0; g < G.vertex_count(); ++g) {
            bool edges_ok = true;
            for (int b : C.rotation(a))
                if (b < a && !G.adjacent(g, image[b])) {
                    edges_ok = false;
                    break;
                }
            if (!edges_ok) continue;
            image[a] = g;
            self(self, a + 1);
            image[a] = -1;
        }
    };
    enumerate(enumerate, 0);
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace pdg
