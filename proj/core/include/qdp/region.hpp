#pragma once

#include "qdp/lattice.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qdp {

// Bit-set over edge ids.  Lexicographic order on the packed words gives
// canonical, deterministic ordering for use as map keys.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(int num_bits) : n_(num_bits), w_((num_bits + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const;
    bool empty() const;

    EdgeSet operator|(const EdgeSet& o) const;
    EdgeSet operator&(const EdgeSet& o) const;
    EdgeSet minus(const EdgeSet& o) const;
    EdgeSet complemented() const;

    bool intersects(const EdgeSet& o) const;
    bool is_subset_of(const EdgeSet& o) const;

    std::vector<int> to_vector() const;

    bool operator==(const EdgeSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    std::strong_ordering operator<=>(const EdgeSet& o) const;

    std::size_t hash() const;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

// A subset of the lattice edges.
struct Region {
    const Lattice* lattice = nullptr;
    EdgeSet edges;

    Region() = default;
    Region(const Lattice& lat, EdgeSet e) : lattice(&lat), edges(std::move(e)) {}
    explicit Region(const Lattice& lat) : lattice(&lat), edges(lat.num_edges()) {}

    int size() const { return edges.count(); }
    bool empty() const { return edges.empty(); }
    bool full() const { return edges.count() == lattice->num_edges(); }
};

void require_same_lattice(const Region& a, const Region& b);

Region region_union(const Region& a, const Region& b);
Region region_diff(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_complement(const Region& a);

// Edges outside the region with at least one endpoint shared with an edge
// inside it.  This is the boundary used by the twirl gate f(X,L) and by the
// chain-contiguity and marker tests of the circuit classifier.
EdgeSet edge_boundary(const Region& region);

// Statistics of the purity boundary.  Sites are counted on the star side:
// a boundary site is one inside-edge incidence at a crossing star, so
// boundary_size = sum over crossing stars of the number of incident edges
// inside the region.  n2/n3 count crossing stars with exactly 2/3 incident
// edges inside; they vanish for convex loops (rectangles) and compensate
// boundary_size so that boundary_size - n2 - 2*n3 is the number of crossing
// stars.  Components cluster the crossing stars under kings-move adjacency
// and are labeled by their smallest vertex id.
struct BoundaryStats {
    int boundary_size = 0;
    int n2 = 0;
    int n3 = 0;
    int n_components = 0;
    std::vector<std::vector<VertexId>> components;

    int crossing_star_count() const { return boundary_size - n2 - 2 * n3; }
};

BoundaryStats boundary_stats(const Region& region);

// ---- Shape builders ----
// Drawn regions are face blobs; the edge set is the blob's interior (both
// adjacent faces inside).  Blobs must fit on the torus without wrapping.

std::vector<FaceId> face_block(const Lattice& lat, int row0, int col0, int height, int width);

Region interior_edges_of_faces(const Lattice& lat, const std::vector<FaceId>& faces);

Region rect_region(const Lattice& lat, int row0, int col0, int height, int width);

// Block minus a centered-or-offset hole; both boxes given in faces.
Region annulus_region(const Lattice& lat, int row0, int col0, int height, int width,
                      int hole_row0, int hole_col0, int hole_height, int hole_width);

// The 4 edges bounding one face.  Circuit-domain shape; may wrap.
Region plaquette_region(const Lattice& lat, int row, int col);

// Union of plaquette edge sets over faces within torus Manhattan distance
// `radius` of (row,col).  radius 0 is a single plaquette.
Region disk_region(const Lattice& lat, int row, int col, int radius);

// ---- Serialization ----
// One edge per line as "row col H|V", sorted by canonical edge id.
std::string region_to_text(const Region& region);
Region region_from_text(const Lattice& lat, const std::string& text);
Region load_region_file(const Lattice& lat, const std::string& path);
void save_region_file(const Region& region, const std::string& path);

}  // namespace qdp
