#pragma once

#include "helpers.hpp"
#include "pdg/coloring.hpp"
#include "pdg/digraph.hpp"

// Digirth-5 instances admitting colorings of D - v with both list colors
// blocked at v; used wherever a test needs a guaranteed forced situation.
namespace pdgtest {

// Two directed pentagons sharing only v, plus the triangle edge u-w.
// Blocking both colors at v forces the touching-cycles pattern: C_1 through
// w and v2, C_2 through u and v1.
//   C_1: v -> v2 -> p -> q -> w -> v     C_2: v -> u -> r -> s -> v1 -> v
struct PentagonPair {
    pdg::Digraph D;
    int v, u, w, v1, v2;

    PentagonPair()
        : D(make_digraph(
              make_embedding({
                  {0, {1, 2, 4, 3}}, // v: u, w, v2, v1
                  {1, {2, 0, 7}},    // u: w, v, r
                  {2, {6, 0, 1}},    // w: q, v, u
                  {3, {8, 0}},       // v1: s, v
                  {4, {0, 5}},       // v2 (label 4): v, p
                  {5, {4, 6}},       // p
                  {6, {5, 2}},       // q
                  {7, {1, 8}},       // r
                  {8, {7, 3}},       // s
              }),
              {{2, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 2}, // C_1 arcs
               {0, 1}, {1, 7}, {7, 8}, {8, 3}, {3, 0}, // C_2 arcs
               {2, 1}})),                              // w -> u
          v(0), u(1), w(2), v1(3), v2(4) {}

    pdg::Coloring blocked_phi() const {
        pdg::Coloring phi(D.vertex_count());
        for (int x : {2, 4, 5, 6}) phi.set(x, 1); // w, v2, p, q
        for (int x : {1, 7, 8, 3}) phi.set(x, 2); // u, r, s, v1
        return phi;
    }
};

// Eleven-vertex digirth-5 instance for exhaustive profile checking:
// hexagon C_1 (v,v2,p,p2,q,w), pentagon C_2 (v,u,r,s,v1), triangle edge w-u,
// and the tail s -> t -> w making w a 4-vertex with both colors blockable.
struct ProfileInstance {
    pdg::Digraph D;
    int v = 0, u = 1, w = 2;

    ProfileInstance()
        : D(make_digraph(
              make_embedding({
                  {0, {1, 2, 4, 3}},  // v: u, w, v2, v1
                  {1, {2, 0, 7}},     // u: w, v, r
                  {2, {9, 0, 1, 10}}, // w: q, v, u, t
                  {3, {8, 0}},        // v1: s, v
                  {4, {0, 5}},        // v2 (label 4): v, p
                  {5, {4, 6}},        // p: v2, p2  -- label 5 = p, 6 = p2
                  {6, {5, 9}},        // p2: p, q
                  {9, {6, 2}},        // q: p2, w
                  {7, {1, 8}},        // r: u, s
                  {8, {10, 7, 3}},    // s: t, r, v1
                  {10, {2, 8}},       // t: w, s
              }),
              {{2, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 9}, {9, 2}, // C_1
               {0, 1}, {1, 7}, {7, 8}, {8, 3}, {3, 0},         // C_2
               {2, 1},                                         // w -> u
               {8, 10}, {10, 2}})) {}                          // s -> t -> w
};

} // namespace pdgtest
