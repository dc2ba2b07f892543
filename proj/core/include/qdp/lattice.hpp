#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdp {

using EdgeId = int;
using VertexId = int;
using FaceId = int;

enum class Orientation : std::uint8_t { horizontal = 0, vertical = 1 };

struct LatticeConfig {
    int L = 0;  // linear size of the torus
    int d = 0;  // local qudit dimension |Z_d|

    void validate() const {
        if (L < 2) throw std::invalid_argument("lattice: L must be >= 2, got " + std::to_string(L));
        if (d < 2) throw std::invalid_argument("lattice: d must be >= 2, got " + std::to_string(d));
    }
};

struct EdgeCoord {
    int row = 0;
    int col = 0;
    Orientation orientation = Orientation::horizontal;

    bool operator==(const EdgeCoord&) const = default;
};

class EdgeSet;

// Incident edge of a star or face together with its orientation sign.
// For stars: +1 if the edge points out of the vertex, -1 if into it.
// For faces: sign of the edge in the counterclockwise boundary sum.
struct SignedEdge {
    EdgeId edge;
    int sign;  // +1 or -1
};

// Square lattice on a torus with qudits on the edges.  Horizontal edge
// (r,c) points from vertex (r,c) to (r,c+1); vertical edge (r,c) from
// (r,c) to (r+1,c).  Orienting the edges this way makes the star and
// plaquette projectors commute for every d and makes the product of all
// star generators the identity.
//
// Immutable after construction; safe to share across threads.
class Lattice {
  public:
    explicit Lattice(LatticeConfig config);

    int L() const { return cfg_.L; }
    int d() const { return cfg_.d; }
    const LatticeConfig& config() const { return cfg_; }

    int num_edges() const { return 2 * cfg_.L * cfg_.L; }
    int num_vertices() const { return cfg_.L * cfg_.L; }
    int num_faces() const { return cfg_.L * cfg_.L; }

    VertexId vertex_id(int row, int col) const { return wrap(row) * cfg_.L + wrap(col); }
    FaceId face_id(int row, int col) const { return wrap(row) * cfg_.L + wrap(col); }
    EdgeId edge_id(int row, int col, Orientation o) const {
        int base = o == Orientation::vertical ? cfg_.L * cfg_.L : 0;
        return base + wrap(row) * cfg_.L + wrap(col);
    }
    EdgeId edge_id(const EdgeCoord& c) const { return edge_id(c.row, c.col, c.orientation); }

    EdgeCoord edge_coord(EdgeId e) const;
    std::pair<int, int> vertex_coord(VertexId v) const { return {v / cfg_.L, v % cfg_.L}; }
    std::pair<int, int> face_coord(FaceId p) const { return {p / cfg_.L, p % cfg_.L}; }

    // Tail and head of the oriented edge.
    std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const;

    // The 4 edges of the star at v, signed by orientation relative to v.
    const std::array<SignedEdge, 4>& star_edges(VertexId v) const { return star_[v]; }

    // The 4 edges bounding face p, signed by the CCW boundary sum.
    const std::array<SignedEdge, 4>& face_edges(FaceId p) const { return face_[p]; }

    // The two faces adjacent to an edge.
    const std::array<FaceId, 2>& faces_of_edge(EdgeId e) const { return edge_faces_[e]; }

    // Edges sharing at least one endpoint vertex with e, excluding e.
    // 6 on a generic torus; fewer on L=2 where wrapped edges coincide.
    const std::vector<EdgeId>& edge_neighbors(EdgeId e) const { return edge_nbrs_[e]; }

    // The 8 vertices at Chebyshev distance 1 (deduplicated on small tori).
    const std::vector<VertexId>& vertex_kings_neighbors(VertexId v) const { return vertex_kings_[v]; }

    // Vertices whose star support intersects both the region and its
    // complement (1, 2 or 3 of the 4 incident edges inside).
    std::vector<VertexId> crossing_stars(const EdgeSet& region) const;

    // Number of incident edges of v inside the region.
    int star_inside_count(VertexId v, const EdgeSet& region) const;

    void check_edge(EdgeId e) const {
        if (e < 0 || e >= num_edges()) throw std::invalid_argument("invalid edge id " + std::to_string(e));
    }

  private:
    int wrap(int x) const {
        int m = x % cfg_.L;
        return m < 0 ? m + cfg_.L : m;
    }

    LatticeConfig cfg_;
    std::vector<std::array<SignedEdge, 4>> star_;
    std::vector<std::array<SignedEdge, 4>> face_;
    std::vector<std::array<FaceId, 2>> edge_faces_;
    std::vector<std::vector<EdgeId>> edge_nbrs_;
    std::vector<std::vector<VertexId>> vertex_kings_;
};

Lattice build_lattice(const LatticeConfig& config);

}  // namespace qdp
