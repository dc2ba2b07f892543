#include "qdp/region.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qdp {

int EdgeSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool EdgeSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

EdgeSet EdgeSet::operator|(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
}

EdgeSet EdgeSet::operator&(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
}

EdgeSet EdgeSet::minus(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
}

EdgeSet EdgeSet::complemented() const {
    EdgeSet r = *this;
    for (auto& w : r.w_) w = ~w;
    // mask tail bits beyond capacity
    int tail = n_ & 63;
    if (tail != 0 && !r.w_.empty()) r.w_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

bool EdgeSet::intersects(const EdgeSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

std::vector<int> EdgeSet::to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::strong_ordering EdgeSet::operator<=>(const EdgeSet& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t EdgeSet::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
    for (auto w : w_) {
        h ^= w;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

void require_same_lattice(const Region& a, const Region& b) {
    if (a.lattice == nullptr || b.lattice == nullptr || a.lattice != b.lattice)
        throw std::invalid_argument("regions belong to different lattices");
}

Region region_union(const Region& a, const Region& b) {
    require_same_lattice(a, b);
    return Region(*a.lattice, a.edges | b.edges);
}

Region region_diff(const Region& a, const Region& b) {
    require_same_lattice(a, b);
    return Region(*a.lattice, a.edges.minus(b.edges));
}

Region region_intersect(const Region& a, const Region& b) {
    require_same_lattice(a, b);
    return Region(*a.lattice, a.edges & b.edges);
}

Region region_complement(const Region& a) {
    return Region(*a.lattice, a.edges.complemented());
}

EdgeSet edge_boundary(const Region& region) {
    const Lattice& lat = *region.lattice;
    EdgeSet out(lat.num_edges());
    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        if (region.edges.test(e)) continue;
        for (EdgeId n : lat.edge_neighbors(e)) {
            if (region.edges.test(n)) {
                out.set(e);
                break;
            }
        }
    }
    return out;
}

BoundaryStats boundary_stats(const Region& region) {
    const Lattice& lat = *region.lattice;
    if (region.empty() || region.full())
        throw std::domain_error("boundary_stats: undefined for the empty or full region");

    BoundaryStats st;
    std::vector<VertexId> crossing = lat.crossing_stars(region.edges);
    std::vector<char> is_crossing(lat.num_vertices(), 0);
    for (VertexId v : crossing) {
        int k = lat.star_inside_count(v, region.edges);
        st.boundary_size += k;
        if (k == 2) ++st.n2;
        if (k == 3) ++st.n3;
        is_crossing[v] = 1;
    }

    // Components of the crossing-star set under kings-move adjacency,
    // flood-filled in ascending vertex order so labels are deterministic.
    std::vector<char> visited(lat.num_vertices(), 0);
    for (VertexId v : crossing) {
        if (visited[v]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{v};
        visited[v] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : lat.vertex_kings_neighbors(u)) {
                if (is_crossing[w] && !visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        st.components.push_back(std::move(comp));
    }
    std::sort(st.components.begin(), st.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    st.n_components = static_cast<int>(st.components.size());
    return st;
}

std::vector<FaceId> face_block(const Lattice& lat, int row0, int col0, int height, int width) {
    if (row0 < 0 || col0 < 0 || height < 1 || width < 1 || row0 + height > lat.L() ||
        col0 + width > lat.L())
        throw std::invalid_argument("face_block: block does not fit on the lattice");
    std::vector<FaceId> out;
    out.reserve(static_cast<std::size_t>(height) * width);
    for (int r = row0; r < row0 + height; ++r)
        for (int c = col0; c < col0 + width; ++c) out.push_back(lat.face_id(r, c));
    return out;
}

Region interior_edges_of_faces(const Lattice& lat, const std::vector<FaceId>& faces) {
    std::vector<char> in(lat.num_faces(), 0);
    for (FaceId f : faces) in[f] = 1;
    Region r(lat);
    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        const auto& fs = lat.faces_of_edge(e);
        if (in[fs[0]] && in[fs[1]]) r.edges.set(e);
    }
    return r;
}

Region rect_region(const Lattice& lat, int row0, int col0, int height, int width) {
    if (height < 2 || width < 2)
        throw std::invalid_argument("rect_region: need at least a 2x2 face block");
    return interior_edges_of_faces(lat, face_block(lat, row0, col0, height, width));
}

Region annulus_region(const Lattice& lat, int row0, int col0, int height, int width,
                      int hole_row0, int hole_col0, int hole_height, int hole_width) {
    if (hole_row0 <= row0 || hole_col0 <= col0 || hole_row0 + hole_height >= row0 + height ||
        hole_col0 + hole_width >= col0 + width)
        throw std::invalid_argument("annulus_region: hole must be strictly inside the block");
    std::vector<FaceId> faces;
    for (int r = row0; r < row0 + height; ++r) {
        for (int c = col0; c < col0 + width; ++c) {
            bool in_hole = r >= hole_row0 && r < hole_row0 + hole_height && c >= hole_col0 &&
                           c < hole_col0 + hole_width;
            if (!in_hole) faces.push_back(lat.face_id(r, c));
        }
    }
    if (row0 + height > lat.L() || col0 + width > lat.L() || row0 < 0 || col0 < 0)
        throw std::invalid_argument("annulus_region: block does not fit on the lattice");
    return interior_edges_of_faces(lat, faces);
}

Region plaquette_region(const Lattice& lat, int row, int col) {
    Region r(lat);
    for (const auto& se : lat.face_edges(lat.face_id(row, col))) r.edges.set(se.edge);
    return r;
}

Region disk_region(const Lattice& lat, int row, int col, int radius) {
    if (radius < 0) throw std::invalid_argument("disk_region: radius must be >= 0");
    const int L = lat.L();
    auto torus_dist = [L](int a, int b) {
        int d = std::abs(a - b) % L;
        return std::min(d, L - d);
    };
    Region r(lat);
    for (int fr = 0; fr < L; ++fr) {
        for (int fc = 0; fc < L; ++fc) {
            if (torus_dist(fr, row) + torus_dist(fc, col) > radius) continue;
            for (const auto& se : lat.face_edges(lat.face_id(fr, fc))) r.edges.set(se.edge);
        }
    }
    return r;
}

std::string region_to_text(const Region& region) {
    const Lattice& lat = *region.lattice;
    std::ostringstream os;
    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        if (!region.edges.test(e)) continue;
        EdgeCoord c = lat.edge_coord(e);
        os << c.row << ' ' << c.col << ' '
           << (c.orientation == Orientation::horizontal ? 'H' : 'V') << '\n';
    }
    return os.str();
}

Region region_from_text(const Lattice& lat, const std::string& text) {
    Region r(lat);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int row, col;
        std::string o;
        if (!(ls >> row)) continue;  // blank
        if (!(ls >> col >> o) || (o != "H" && o != "V"))
            throw std::invalid_argument("region file: bad line " + std::to_string(lineno));
        if (row < 0 || row >= lat.L() || col < 0 || col >= lat.L())
            throw std::invalid_argument("region file: coordinate out of range at line " +
                                        std::to_string(lineno));
        r.edges.set(lat.edge_id(row, col, o == "H" ? Orientation::horizontal : Orientation::vertical));
    }
    return r;
}

Region load_region_file(const Lattice& lat, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open region file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return region_from_text(lat, ss.str());
}

void save_region_file(const Region& region, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write region file: " + path);
    f << region_to_text(region);
}

}  // namespace qdp
