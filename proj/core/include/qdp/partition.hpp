#pragma once

#include "qdp/region.hpp"

#include <optional>
#include <string>

namespace qdp {

enum class PartitionKind { annular, strips };

// Geometry of the four-region arrangement used by the topological purity.
// The annular variant places a square hole of side `hole` surrounded by a
// ring of thickness `thickness`; the ring is split into arcs A (top), C
// (bottom) and B_left/B_right (side bands including the corners), so A and
// C touch only B.  All parameters are in faces; row0/col0 is the top-left
// face of the outer box.
struct AnnularSpec {
    int row0 = 0;
    int col0 = 0;
    int hole = 4;
    int thickness = 2;

    int outer() const { return hole + 2 * thickness; }
};

// Simply-connected variant: a rectangle of faces split into three vertical
// strips A | B | C.  Detects no topological correction by construction.
struct StripsSpec {
    int row0 = 0;
    int col0 = 0;
    int height = 4;
    int width_a = 2;
    int width_b = 2;
    int width_c = 2;
};

struct StandardPartition {
    const Lattice* lattice = nullptr;
    PartitionKind kind = PartitionKind::annular;
    std::optional<AnnularSpec> annular;

    Region A, B_left, B_right, C, D;
    Region AB, BC, B, ABC;

    // Labeled boundary components of ABC as edge sets: (dABC)_1 is the
    // outer component, (dABC)_2 the inner (hole) component.  Empty for the
    // strips variant.
    EdgeSet outer_marker;
    EdgeSet inner_marker;

    bool has_markers() const { return !outer_marker.empty(); }
};

// Builds the annular arrangement.  Every edge of the ring belongs to
// exactly one of A, B_left, B_right, C; edges on an arc interface are owned
// by the B side.  Enforces hole >= 2, thickness >= 2 and a moat of >= 2
// faces so distinct boundary components stay separated, and asserts the
// boundary-length identity |dAB| + |dBC| = |dB| + |dABC| together with the
// component counts n_d(AB) = n_d(BC) = 1, n_d(B) = n_d(ABC) = 2.
StandardPartition build_annular_partition(const Lattice& lat, const AnnularSpec& spec);

StandardPartition build_strips_partition(const Lattice& lat, const StripsSpec& spec);

}  // namespace qdp
