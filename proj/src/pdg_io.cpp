#include "pdg/pdg_io.hpp"

#include <fstream>
#include <sstream>

namespace pdg {

Digraph PdgFile::to_digraph() const {
    if (!fully_oriented())
        throw InputError("digraph requires an arc for every edge (" +
                         std::to_string(arcs.size()) + " of " +
                         std::to_string(embedding.edge_count()) + " present)");
    return Digraph::orient(embedding, arcs);
}

PdgFile read_pdg(std::istream& in) {
    std::string line;
    bool header_seen = false;
    std::vector<RotationData> rotations;
    std::vector<std::pair<VertexId, VertexId>> raw_arcs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!header_seen) {
            int version = 0;
            if (tok != "pdg" || !(ls >> version) || version != 1)
                throw InputError("line " + std::to_string(lineno) + ": expected header 'pdg 1'");
            header_seen = true;
            continue;
        }
        if (tok == "v") {
            RotationData rd;
            if (!(ls >> rd.vertex))
                throw InputError("line " + std::to_string(lineno) + ": bad vertex statement");
            VertexId nb;
            while (ls >> nb) rd.neighbors.push_back(nb);
            rotations.push_back(std::move(rd));
        } else if (tok == "a") {
            VertexId u, v;
            if (!(ls >> u >> v))
                throw InputError("line " + std::to_string(lineno) + ": bad arc statement");
            raw_arcs.emplace_back(u, v);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown statement '" + tok + "'");
        }
    }
    if (!header_seen) throw InputError("missing 'pdg 1' header");

    PdgFile file{PlanarEmbedding::build(rotations), {}};
    std::vector<char> oriented(file.embedding.edge_count(), 0);
    for (auto [lu, lv] : raw_arcs) {
        int u = file.embedding.index_of(lu);
        int v = file.embedding.index_of(lv);
        int e = file.embedding.edge_between(u, v); // throws if not an edge
        if (oriented[e])
            throw InputError("duplicate arc or digon on edge {" + std::to_string(lu) + "," +
                             std::to_string(lv) + "}");
        oriented[e] = 1;
        file.arcs.push_back({u, v});
    }
    return file;
}

PdgFile read_pdg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_pdg(in);
}

std::string write_pdg(const PlanarEmbedding& emb, const std::vector<Arc>& arcs) {
    std::ostringstream os;
    os << "pdg 1\n";
    for (int v = 0; v < emb.vertex_count(); ++v) {
        os << "v " << emb.label(v);
        for (int w : emb.rotation(v)) os << " " << emb.label(w);
        os << "\n";
    }
    for (const Arc& a : arcs)
        os << "a " << emb.label(a.from) << " " << emb.label(a.to) << "\n";
    return os.str();
}

std::string write_pdg(const Digraph& D) {
    std::vector<Arc> arcs;
    arcs.reserve(D.arc_count());
    for (int e = 0; e < D.arc_count(); ++e) arcs.push_back(D.arc_of_edge(e));
    return write_pdg(D.embedding(), arcs);
}

ListAssignment read_lists(std::istream& in, const PlanarEmbedding& emb,
                          const std::vector<Color>& fallback) {
    ListAssignment L(emb.vertex_count());
    for (int v = 0; v < emb.vertex_count(); ++v) L.set_list(v, fallback);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok != "l")
            throw InputError("lists line " + std::to_string(lineno) + ": expected 'l <vertex> <colors...>'");
        VertexId label;
        if (!(ls >> label))
            throw InputError("lists line " + std::to_string(lineno) + ": bad vertex");
        int v = emb.index_of(label); // throws on unknown vertex
        std::vector<Color> colors;
        Color c;
        while (ls >> c) colors.push_back(c);
        if (colors.empty())
            throw InputError("lists line " + std::to_string(lineno) + ": empty list");
        L.set_list(v, std::move(colors));
    }
    return L;
}

ListAssignment read_lists_file(const std::string& path, const PlanarEmbedding& emb,
                               const std::vector<Color>& fallback) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_lists(in, emb, fallback);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pdg
