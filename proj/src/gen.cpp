#include "pdg/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace pdg {

namespace {

// All randomness below draws from one engine through this helper so that the
// output stream is identical across standard library implementations.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Mutable triangulation under construction: rotations plus oriented triangle
// faces (a,b,c) meaning the traced walk a->b->c.
struct Triangulation {
    std::vector<std::vector<int>> rot;
    std::vector<std::array<int, 3>> faces;

    static Triangulation seed() {
        Triangulation t;
        t.rot = {{1, 2}, {2, 0}, {0, 1}};
        t.faces = {{0, 1, 2}, {1, 0, 2}};
        return t;
    }

    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    bool adjacent(int u, int v) const {
        return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
    }

    // Inserts y immediately after x in the rotation at v.
    void insert_after(int v, int x, int y) {
        auto it = std::find(rot[v].begin(), rot[v].end(), x);
        rot[v].insert(it + 1, y);
    }

    void remove_neighbor(int v, int x) {
        auto it = std::find(rot[v].begin(), rot[v].end(), x);
        rot[v].erase(it);
    }

    // New vertex inside face fi; the face (a,b,c) splits into three.
    int insert_vertex(int fi) {
        auto [a, b, c] = faces[fi];
        int x = static_cast<int>(rot.size());
        rot.push_back({a, c, b});
        insert_after(a, c, x); // rotation at a reads ..., c, x, b, ...
        insert_after(b, a, x);
        insert_after(c, b, x);
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
        return x;
    }

    // Faces on both sides of edge {p,q}: (p,q,r) and (q,p,s).
    bool edge_wings(int p, int q, int& r, int& s, int& fa, int& fb) const {
        r = s = fa = fb = -1;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            const auto& f = faces[i];
            for (int j = 0; j < 3; ++j) {
                if (f[j] == p && f[(j + 1) % 3] == q) {
                    r = f[(j + 2) % 3];
                    fa = i;
                } else if (f[j] == q && f[(j + 1) % 3] == p) {
                    s = f[(j + 2) % 3];
                    fb = i;
                }
            }
        }
        return r >= 0 && s >= 0;
    }

    bool can_flip(int p, int q) const {
        int r, s, fa, fb;
        if (!edge_wings(p, q, r, s, fa, fb)) return false;
        return r != s && !adjacent(r, s) && degree(p) > 3 && degree(q) > 3;
    }

    // Replaces edge {p,q} by {r,s} across the surrounding quadrilateral.
    void flip(int p, int q) {
        int r, s, fa, fb;
        edge_wings(p, q, r, s, fa, fb);
        remove_neighbor(p, q);
        remove_neighbor(q, p);
        insert_after(r, q, s); // at r: ..., q, s, p, ...
        insert_after(s, p, r); // at s: ..., p, r, q, ...
        faces[fa] = {r, p, s};
        faces[fb] = {s, q, r};
    }

    std::vector<RotationData> rotation_data() const {
        std::vector<RotationData> out;
        for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
            RotationData rd;
            rd.vertex = static_cast<VertexId>(v);
            for (int w : rot[v]) rd.neighbors.push_back(static_cast<VertexId>(w));
            out.push_back(std::move(rd));
        }
        return out;
    }
};

bool connected_without(const std::vector<std::vector<int>>& rot, int skip_u, int skip_v) {
    int n = static_cast<int>(rot.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : rot[u]) {
            if ((u == skip_u && w == skip_v) || (u == skip_v && w == skip_u)) continue;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace

void GenSpec::validate() const {
    if (n < 3) throw GenError("n must be at least 3");
    if (min_degree < 0 || min_degree > 5)
        throw GenError("min_degree must lie in [0,5] (planar bound)");
    if (min_degree >= n) throw GenError("min_degree >= n is impossible");
    if (min_degree >= 3 && n < 4) throw GenError("min degree 3 needs at least 4 vertices");
    if (min_degree >= 4 && n < 6) throw GenError("min degree 4 needs at least 6 vertices");
    if (min_degree == 5 && n < 12) throw GenError("min degree 5 needs at least 12 vertices");
    if (digirth_min.has_value()) {
        int g = *digirth_min;
        if (g != kDigirthAcyclic && (g < 3 || g > 5))
            throw GenError("digirth_min must be 3, 4, 5, or the acyclic request");
    }
}

PlanarEmbedding random_plane_graph(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    int rounds = spec.max_repair_rounds > 0 ? spec.max_repair_rounds : 50;

    for (int round = 0; round < rounds; ++round) {
        Triangulation t = Triangulation::seed();
        while (static_cast<int>(t.rot.size()) < spec.n)
            t.insert_vertex(static_cast<int>(rng_below(rng, t.faces.size())));

        // Raise deficient degrees by diagonal flips around them.
        bool degrees_ok = true;
        if (spec.min_degree > 2 && spec.n > 3) {
            int flip_budget = 20 * spec.n;
            while (flip_budget-- > 0) {
                std::vector<int> deficient;
                for (int v = 0; v < spec.n; ++v)
                    if (t.degree(v) < spec.min_degree) deficient.push_back(v);
                if (deficient.empty()) break;
                int v = deficient[rng_below(rng, deficient.size())];
                // Flipping the far edge of a face at v adds an edge at v.
                std::vector<std::pair<int, int>> options;
                for (const auto& f : t.faces)
                    for (int j = 0; j < 3; ++j)
                        if (f[j] == v) {
                            int p = f[(j + 1) % 3], q = f[(j + 2) % 3];
                            if (t.can_flip(p, q)) options.emplace_back(p, q);
                        }
                if (options.empty()) continue;
                auto [p, q] = options[rng_below(rng, options.size())];
                t.flip(p, q);
            }
            for (int v = 0; v < spec.n && degrees_ok; ++v)
                degrees_ok = t.degree(v) >= spec.min_degree;
        }
        if (!degrees_ok) continue;

        // Random deletions, keeping connectivity and the degree floor.
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < spec.n; ++v)
            for (int w : t.rot[v])
                if (v < w) edges.emplace_back(v, w);
        for (size_t i = edges.size(); i > 1; --i)
            std::swap(edges[i - 1], edges[rng_below(rng, i)]);
        for (auto [u, v] : edges) {
            if (rng_below(rng, 2) == 0) continue;
            if (t.degree(u) - 1 < spec.min_degree || t.degree(v) - 1 < spec.min_degree) continue;
            if (!connected_without(t.rot, u, v)) continue;
            t.remove_neighbor(u, v);
            t.remove_neighbor(v, u);
        }

        return PlanarEmbedding::build(t.rotation_data());
    }
    throw GenError("spec unsatisfiable after repair rounds (n=" + std::to_string(spec.n) +
                   ", min_degree=" + std::to_string(spec.min_degree) + ")");
}

Digraph random_planar_digraph(const GenSpec& spec) {
    if (!spec.digirth_min.has_value())
        throw GenError("random_planar_digraph requires digirth_min");
    PlanarEmbedding emb = random_plane_graph(spec);
    std::mt19937_64 rng(spec.seed ^ 0x5851f42d4c957f2dULL);

    int m = emb.edge_count();
    std::vector<char> forward(m);
    for (int e = 0; e < m; ++e) forward[e] = rng_below(rng, 2) == 0;

    auto build = [&]() {
        std::vector<Arc> arcs;
        arcs.reserve(m);
        for (int e = 0; e < m; ++e) {
            int u = emb.edge_u(e), v = emb.edge_v(e);
            arcs.push_back(forward[e] ? Arc{u, v} : Arc{v, u});
        }
        return Digraph::orient(emb, arcs);
    };

    int goal = *spec.digirth_min;
    long long budget = spec.max_repair_rounds > 0 ? spec.max_repair_rounds : 50LL * m;
    while (budget-- > 0) {
        Digraph D = build();
        auto cycle = D.shortest_cycle();
        bool ok = cycle.empty() ||
                  (goal != kDigirthAcyclic && static_cast<int>(cycle.size()) >= goal);
        if (ok) return D;
        size_t i = rng_below(rng, cycle.size());
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        int e = emb.edge_between(u, v);
        forward[e] = !forward[e];
    }
    throw GenError("digirth repair budget exhausted (seed=" + std::to_string(spec.seed) + ")");
}

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

// Plane rotation system of a convex polytope: at each vertex, neighbors
// ordered clockwise as seen from outside.
std::vector<RotationData> rotations_from_coordinates(const std::vector<Vec3>& pts,
                                                     double edge_sq, double tol) {
    int n = static_cast<int>(pts.size());
    std::vector<RotationData> out(n);
    for (int v = 0; v < n; ++v) {
        out[v].vertex = static_cast<VertexId>(v);
        Vec3 normal = scale(pts[v], 1.0 / norm(pts[v]));
        Vec3 up{0, 0, 1};
        if (std::abs(dot(normal, up)) > 0.9) up = {1, 0, 0};
        Vec3 e1 = cross(normal, up);
        e1 = scale(e1, 1.0 / norm(e1));
        Vec3 e2 = cross(normal, e1);
        std::vector<std::pair<double, int>> around;
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            Vec3 d = sub(pts[w], pts[v]);
            if (std::abs(dot(d, d) - edge_sq) > tol) continue;
            around.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
        }
        std::sort(around.begin(), around.end(), std::greater<>());
        for (auto [angle, w] : around) out[v].neighbors.push_back(static_cast<VertexId>(w));
    }
    return out;
}

PlanarEmbedding platonic(const std::string& name) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    double edge_sq = 0;
    if (name == "tetrahedron") {
        pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        edge_sq = 8;
    } else if (name == "cube") {
        for (int i = 0; i < 8; ++i)
            pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
        edge_sq = 4;
    } else if (name == "octahedron") {
        pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        edge_sq = 2;
    } else if (name == "icosahedron") {
        for (double s1 : {1.0, -1.0})
            for (double s2 : {phi, -phi}) {
                pts.push_back({0, s1, s2});
                pts.push_back({s1, s2, 0});
                pts.push_back({s2, 0, s1});
            }
        edge_sq = 4;
    } else if (name == "dodecahedron") {
        for (int i = 0; i < 8; ++i)
            pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0}) {
                pts.push_back({0, s1 / phi, s2 * phi});
                pts.push_back({s1 / phi, s2 * phi, 0});
                pts.push_back({s1 * phi, 0, s2 / phi});
            }
        edge_sq = 4.0 / (phi * phi);
    } else {
        throw InputError("unknown golden instance '" + name + "'");
    }
    return PlanarEmbedding::build(rotations_from_coordinates(pts, edge_sq, 0.25));
}

std::optional<int> parse_dicycle(const std::string& name) {
    if (name.rfind("dicycle(", 0) != 0 || name.back() != ')') return std::nullopt;
    int k = std::stoi(name.substr(8, name.size() - 9));
    if (k < 3) throw InputError("dicycle needs length >= 3");
    return k;
}

} // namespace

PlanarEmbedding golden_embedding(const std::string& name) {
    if (auto k = parse_dicycle(name)) {
        std::vector<RotationData> rot(*k);
        for (int i = 0; i < *k; ++i) {
            rot[i].vertex = static_cast<VertexId>(i);
            rot[i].neighbors = {static_cast<VertexId>((i + *k - 1) % *k),
                                static_cast<VertexId>((i + 1) % *k)};
        }
        return PlanarEmbedding::build(rot);
    }
    return platonic(name);
}

Digraph golden_digraph(const std::string& name) {
    auto k = parse_dicycle(name);
    if (!k) throw InputError("golden digraph requires 'dicycle(k)'");
    PlanarEmbedding emb = golden_embedding(name);
    std::vector<Arc> arcs;
    for (int i = 0; i < *k; ++i) arcs.push_back({i, (i + 1) % *k});
    return Digraph::orient(std::move(emb), arcs);
}

} // namespace pdg
