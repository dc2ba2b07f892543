#include "qdp/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdp {

namespace {

enum class FaceLabel : char { out, hole, A, BL, BR, C };

bool is_b(FaceLabel l) { return l == FaceLabel::BL || l == FaceLabel::BR; }
bool in_ring(FaceLabel l) { return l == FaceLabel::A || l == FaceLabel::C || is_b(l); }

// Components of an edge set under shared-endpoint adjacency.
std::vector<EdgeSet> edge_components(const Lattice& lat, const EdgeSet& set) {
    std::vector<EdgeSet> out;
    std::vector<char> seen(lat.num_edges(), 0);
    for (EdgeId e0 = 0; e0 < lat.num_edges(); ++e0) {
        if (!set.test(e0) || seen[e0]) continue;
        EdgeSet comp(lat.num_edges());
        std::vector<EdgeId> stack{e0};
        seen[e0] = 1;
        while (!stack.empty()) {
            EdgeId e = stack.back();
            stack.pop_back();
            comp.set(e);
            for (EdgeId n : lat.edge_neighbors(e)) {
                if (set.test(n) && !seen[n]) {
                    seen[n] = 1;
                    stack.push_back(n);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

StandardPartition build_annular_partition(const Lattice& lat, const AnnularSpec& spec) {
    const int L = lat.L();
    const int t = spec.thickness;
    const int h = spec.hole;
    const int outer = spec.outer();
    if (h < 2) throw std::invalid_argument("annular partition: hole must be >= 2 faces");
    if (t < 2) throw std::invalid_argument("annular partition: thickness must be >= 2 faces");
    if (spec.row0 < 0 || spec.col0 < 0 || spec.row0 + outer > L || spec.col0 + outer > L)
        throw std::invalid_argument("annular partition: box does not fit on the lattice");
    if (L - outer < 2)
        throw std::invalid_argument(
            "annular partition: need a moat of >= 2 faces around the box (L too small)");

    std::vector<FaceLabel> label(lat.num_faces(), FaceLabel::out);
    for (int r = 0; r < outer; ++r) {
        for (int c = 0; c < outer; ++c) {
            FaceLabel l;
            bool hole_r = r >= t && r < t + h;
            bool hole_c = c >= t && c < t + h;
            if (hole_r && hole_c)
                l = FaceLabel::hole;
            else if (c < t)
                l = FaceLabel::BL;
            else if (c >= t + h)
                l = FaceLabel::BR;
            else if (r < t)
                l = FaceLabel::A;
            else
                l = FaceLabel::C;
            label[lat.face_id(spec.row0 + r, spec.col0 + c)] = l;
        }
    }

    StandardPartition p;
    p.lattice = &lat;
    p.kind = PartitionKind::annular;
    p.annular = spec;
    p.A = Region(lat);
    p.B_left = Region(lat);
    p.B_right = Region(lat);
    p.C = Region(lat);

    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        const auto& fs = lat.faces_of_edge(e);
        FaceLabel l0 = label[fs[0]], l1 = label[fs[1]];
        if (!in_ring(l0) || !in_ring(l1)) continue;
        FaceLabel owner;
        if (l0 == l1) {
            owner = l0;
        } else if (is_b(l0)) {
            owner = l0;  // interface edges are owned by the B side
        } else if (is_b(l1)) {
            owner = l1;
        } else {
            throw std::logic_error("annular partition: A and C faces may not be adjacent");
        }
        switch (owner) {
            case FaceLabel::A: p.A.edges.set(e); break;
            case FaceLabel::BL: p.B_left.edges.set(e); break;
            case FaceLabel::BR: p.B_right.edges.set(e); break;
            case FaceLabel::C: p.C.edges.set(e); break;
            default: break;
        }
    }

    p.B = region_union(p.B_left, p.B_right);
    p.AB = region_union(p.A, p.B);
    p.BC = region_union(p.B, p.C);
    p.ABC = region_union(p.AB, p.C);
    p.D = region_complement(p.ABC);

    // Label the two boundary components of ABC: the component containing an
    // edge with a hole face is the inner one.
    auto comps = edge_components(lat, edge_boundary(p.ABC));
    if (comps.size() != 2)
        throw std::logic_error("annular partition: expected exactly 2 boundary components, got " +
                               std::to_string(comps.size()));
    auto touches_hole = [&](const EdgeSet& s) {
        for (EdgeId e : s.to_vector()) {
            const auto& fs = lat.faces_of_edge(e);
            if (label[fs[0]] == FaceLabel::hole || label[fs[1]] == FaceLabel::hole) return true;
        }
        return false;
    };
    if (touches_hole(comps[0])) {
        p.inner_marker = comps[0];
        p.outer_marker = comps[1];
    } else {
        p.inner_marker = comps[1];
        p.outer_marker = comps[0];
    }
    if (touches_hole(p.outer_marker) || !touches_hole(p.inner_marker))
        throw std::logic_error("annular partition: marker labeling failed");

    // The identity |dAB| + |dBC| = |dB| + |dABC| and the component counts
    // behind Eq.(10).
    BoundaryStats sab = boundary_stats(p.AB), sbc = boundary_stats(p.BC);
    BoundaryStats sb = boundary_stats(p.B), sabc = boundary_stats(p.ABC);
    if (sab.boundary_size + sbc.boundary_size != sb.boundary_size + sabc.boundary_size)
        throw std::logic_error("annular partition: boundary-length identity violated");
    if (sab.n_components != 1 || sbc.n_components != 1 || sb.n_components != 2 ||
        sabc.n_components != 2)
        throw std::logic_error("annular partition: unexpected boundary component counts");
    return p;
}

StandardPartition build_strips_partition(const Lattice& lat, const StripsSpec& spec) {
    const int L = lat.L();
    const int w = spec.width_a + spec.width_b + spec.width_c;
    if (spec.height < 2 || spec.width_a < 1 || spec.width_b < 1 || spec.width_c < 1)
        throw std::invalid_argument("strips partition: degenerate strip widths");
    if (spec.row0 < 0 || spec.col0 < 0 || spec.row0 + spec.height > L || spec.col0 + w > L)
        throw std::invalid_argument("strips partition: box does not fit on the lattice");
    if (L - spec.height < 2 || L - w < 2)
        throw std::invalid_argument("strips partition: need a moat of >= 2 faces around the box");

    std::vector<FaceLabel> label(lat.num_faces(), FaceLabel::out);
    for (int r = 0; r < spec.height; ++r) {
        for (int c = 0; c < w; ++c) {
            FaceLabel l = c < spec.width_a                ? FaceLabel::A
                          : c < spec.width_a + spec.width_b ? FaceLabel::BL
                                                            : FaceLabel::C;
            label[lat.face_id(spec.row0 + r, spec.col0 + c)] = l;
        }
    }

    StandardPartition p;
    p.lattice = &lat;
    p.kind = PartitionKind::strips;
    p.A = Region(lat);
    p.B_left = Region(lat);
    p.B_right = Region(lat);
    p.C = Region(lat);

    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        const auto& fs = lat.faces_of_edge(e);
        FaceLabel l0 = label[fs[0]], l1 = label[fs[1]];
        if (!in_ring(l0) || !in_ring(l1)) continue;
        FaceLabel owner = l0 == l1 ? l0 : (is_b(l0) ? l0 : l1);
        switch (owner) {
            case FaceLabel::A: p.A.edges.set(e); break;
            case FaceLabel::BL: p.B_left.edges.set(e); break;
            case FaceLabel::C: p.C.edges.set(e); break;
            default: break;
        }
    }

    p.B = region_union(p.B_left, p.B_right);  // B_right empty here
    p.AB = region_union(p.A, p.B);
    p.BC = region_union(p.B, p.C);
    p.ABC = region_union(p.AB, p.C);
    p.D = region_complement(p.ABC);
    p.outer_marker = EdgeSet(lat.num_edges());
    p.inner_marker = EdgeSet(lat.num_edges());
    return p;
}

}  // namespace qdp
