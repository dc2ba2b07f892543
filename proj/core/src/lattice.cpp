#include "qdp/lattice.hpp"

#include "qdp/region.hpp"

#include <algorithm>
#include <set>

namespace qdp {

Lattice::Lattice(LatticeConfig config) : cfg_(config) {
    cfg_.validate();
    const int L = cfg_.L;
    const int nv = num_vertices();
    const int ne = num_edges();

    star_.resize(nv);
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            VertexId v = vertex_id(r, c);
            star_[v] = {
                SignedEdge{edge_id(r, c, Orientation::horizontal), +1},      // east, out
                SignedEdge{edge_id(r, c - 1, Orientation::horizontal), -1},  // west, in
                SignedEdge{edge_id(r, c, Orientation::vertical), +1},        // south-bound row+1, out
                SignedEdge{edge_id(r - 1, c, Orientation::vertical), -1},    // row-1 into v
            };
        }
    }

    // CCW boundary sum of face (r,c): +bottom, +right, -top, -left.
    face_.resize(num_faces());
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            FaceId p = face_id(r, c);
            face_[p] = {
                SignedEdge{edge_id(r, c, Orientation::horizontal), +1},
                SignedEdge{edge_id(r, c + 1, Orientation::vertical), +1},
                SignedEdge{edge_id(r + 1, c, Orientation::horizontal), -1},
                SignedEdge{edge_id(r, c, Orientation::vertical), -1},
            };
        }
    }

    edge_faces_.resize(ne);
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            // H(r,c) is the bottom of face (r,c) and the top of face (r-1,c).
            edge_faces_[edge_id(r, c, Orientation::horizontal)] = {face_id(r, c), face_id(r - 1, c)};
            // V(r,c) is the left of face (r,c) and the right of face (r,c-1).
            edge_faces_[edge_id(r, c, Orientation::vertical)] = {face_id(r, c), face_id(r, c - 1)};
        }
    }

    edge_nbrs_.resize(ne);
    for (EdgeId e = 0; e < ne; ++e) {
        auto [a, b] = edge_endpoints(e);
        std::set<EdgeId> nbrs;
        for (const auto& se : star_[a]) nbrs.insert(se.edge);
        for (const auto& se : star_[b]) nbrs.insert(se.edge);
        nbrs.erase(e);
        edge_nbrs_[e].assign(nbrs.begin(), nbrs.end());
    }

    vertex_kings_.resize(nv);
    for (int r = 0; r < L; ++r) {
        for (int c = 0; c < L; ++c) {
            VertexId v = vertex_id(r, c);
            std::set<VertexId> nbrs;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                    if (dr != 0 || dc != 0) nbrs.insert(vertex_id(r + dr, c + dc));
            nbrs.erase(v);
            vertex_kings_[v].assign(nbrs.begin(), nbrs.end());
        }
    }
}

EdgeCoord Lattice::edge_coord(EdgeId e) const {
    check_edge(e);
    const int L = cfg_.L;
    EdgeCoord c;
    if (e >= L * L) {
        c.orientation = Orientation::vertical;
        e -= L * L;
    }
    c.row = e / L;
    c.col = e % L;
    return c;
}

std::pair<VertexId, VertexId> Lattice::edge_endpoints(EdgeId e) const {
    EdgeCoord c = edge_coord(e);
    if (c.orientation == Orientation::horizontal)
        return {vertex_id(c.row, c.col), vertex_id(c.row, c.col + 1)};
    return {vertex_id(c.row, c.col), vertex_id(c.row + 1, c.col)};
}

int Lattice::star_inside_count(VertexId v, const EdgeSet& region) const {
    int k = 0;
    for (const auto& se : star_[v])
        if (region.test(se.edge)) ++k;
    return k;
}

std::vector<VertexId> Lattice::crossing_stars(const EdgeSet& region) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < num_vertices(); ++v) {
        int k = star_inside_count(v, region);
        if (k > 0 && k < 4) out.push_back(v);
    }
    return out;
}

Lattice build_lattice(const LatticeConfig& config) { return Lattice(config); }

}  // namespace qdp
