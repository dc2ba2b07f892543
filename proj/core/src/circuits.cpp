#include "qdp/circuits.hpp"

#include "qdp/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdp {

std::string to_string(SafetyCondition c) {
    switch (c) {
        case SafetyCondition::I_i: return "I.i";
        case SafetyCondition::II_a: return "II.a";
        case SafetyCondition::II_b_AC: return "II.b(A,C)";
        case SafetyCondition::II_b_B: return "II.b(B_left,B_right)";
        case SafetyCondition::I_ii_AC: return "I.ii(A,C)";
        case SafetyCondition::I_ii_B: return "I.ii(B_left,B_right)";
    }
    return "?";
}

namespace {

struct ChainSearch {
    // sbar[i] = domains of the reversed string; contiguous[i][j] (i < j)
    // tells whether a chain may step from element i to element j.
    std::vector<const Region*> sbar;
    std::vector<std::vector<char>> contiguous;
    std::vector<std::vector<char>> overlap;

    // Earliest-start, shortest chain from a marker to each index.
    struct Reach {
        std::vector<char> reachable;
        std::vector<int> pred;  // -1 for chain starts
    };

    Reach reach_from(const std::vector<char>& start) const {
        int k = static_cast<int>(sbar.size());
        Reach r{std::vector<char>(k, 0), std::vector<int>(k, -1)};
        for (int j = 0; j < k; ++j) {
            if (start[j]) {
                r.reachable[j] = 1;
                r.pred[j] = -1;
                continue;
            }
            for (int i = 0; i < j; ++i) {
                if (r.reachable[i] && contiguous[i][j]) {
                    r.reachable[j] = 1;
                    r.pred[j] = i;
                    break;  // first predecessor in scan order
                }
            }
        }
        return r;
    }

    static std::vector<int> chain_of(const Reach& r, int last) {
        std::vector<int> out;
        for (int i = last; i != -1; i = r.pred[i]) out.push_back(i);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

std::vector<char> marker_touch_vector(const std::vector<const Region*>& sbar, const EdgeSet& marker) {
    std::vector<char> out(sbar.size(), 0);
    for (std::size_t i = 0; i < sbar.size(); ++i)
        out[i] = sbar[i]->edges.intersects(marker) ? 1 : 0;
    return out;
}

EdgeSet region_halo(const Region& r) { return r.edges | edge_boundary(r); }

}  // namespace

SafetyVerdict classify(const DomainString& s, const StandardPartition& partition) {
    if (partition.kind != PartitionKind::annular || !partition.has_markers())
        throw std::invalid_argument("classify: requires a labeled annular partition");
    const Lattice& lat = *partition.lattice;

    ChainSearch cs;
    cs.sbar.reserve(s.domains.size());
    for (auto it = s.domains.rbegin(); it != s.domains.rend(); ++it) {
        if (it->empty()) throw std::invalid_argument("classify: empty domain in string");
        if (it->lattice != &lat) throw std::invalid_argument("classify: lattice mismatch");
        cs.sbar.push_back(&*it);
    }
    const int k = static_cast<int>(cs.sbar.size());

    std::vector<EdgeSet> halos;
    halos.reserve(k);
    for (int i = 0; i < k; ++i) halos.push_back(region_halo(*cs.sbar[i]));
    cs.contiguous.assign(k, std::vector<char>(k, 0));
    cs.overlap.assign(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            cs.contiguous[i][j] = cs.sbar[i]->edges.intersects(halos[j]) ? 1 : 0;
            cs.overlap[i][j] = cs.sbar[i]->edges.intersects(cs.sbar[j]->edges) ? 1 : 0;
        }
    }

    // Marker touch vectors.  Boundary-component markers are boundary edge
    // sets already; subregion markers take the region plus its boundary.
    std::vector<char> t_outer = marker_touch_vector(cs.sbar, partition.outer_marker);
    std::vector<char> t_inner = marker_touch_vector(cs.sbar, partition.inner_marker);
    std::vector<char> t_a = marker_touch_vector(cs.sbar, region_halo(partition.A));
    std::vector<char> t_c = marker_touch_vector(cs.sbar, region_halo(partition.C));
    std::vector<char> t_bl = marker_touch_vector(cs.sbar, region_halo(partition.B_left));
    std::vector<char> t_br = marker_touch_vector(cs.sbar, region_halo(partition.B_right));

    auto reach_outer = cs.reach_from(t_outer);
    auto reach_inner = cs.reach_from(t_inner);
    auto reach_a = cs.reach_from(t_a);
    auto reach_c = cs.reach_from(t_c);
    auto reach_bl = cs.reach_from(t_bl);
    auto reach_br = cs.reach_from(t_br);

    SafetyVerdict v;

    // Two chains whose terminal domains overlap (a domain may serve in
    // both).  Scan order over (i, j) is deterministic.
    auto two_chain = [&](const ChainSearch::Reach& ra, const ChainSearch::Reach& rb,
                         SafetyCondition cond) {
        for (int i = 0; i < k; ++i) {
            if (!ra.reachable[i]) continue;
            for (int j = 0; j < k; ++j) {
                if (!rb.reachable[j]) continue;
                if (i != j && !cs.overlap[i][j]) continue;
                v.safe = false;
                v.violated_condition = cond;
                v.chain1 = ChainSearch::chain_of(ra, i);
                v.chain2 = ChainSearch::chain_of(rb, j);
                return true;
            }
        }
        return false;
    };

    // One chain from one marker to its partner.
    auto one_chain = [&](const ChainSearch::Reach& ra, const std::vector<char>& target,
                         SafetyCondition cond) {
        for (int j = 0; j < k; ++j) {
            if (ra.reachable[j] && target[j]) {
                v.safe = false;
                v.violated_condition = cond;
                v.chain1 = ChainSearch::chain_of(ra, j);
                v.chain2.clear();
                return true;
            }
        }
        return false;
    };

    // Deterministic condition scan.  I.i before II.a (a meeting-chains
    // witness is the sharper diagnosis for boundary pairs); single-chain
    // bridges before the two-chain subregion conditions they imply.
    if (two_chain(reach_outer, reach_inner, SafetyCondition::I_i)) return v;
    if (one_chain(reach_outer, t_inner, SafetyCondition::II_a)) return v;
    if (one_chain(reach_inner, t_outer, SafetyCondition::II_a)) return v;
    if (one_chain(reach_a, t_c, SafetyCondition::II_b_AC)) return v;
    if (one_chain(reach_c, t_a, SafetyCondition::II_b_AC)) return v;
    if (one_chain(reach_bl, t_br, SafetyCondition::II_b_B)) return v;
    if (one_chain(reach_br, t_bl, SafetyCondition::II_b_B)) return v;
    if (two_chain(reach_a, reach_c, SafetyCondition::I_ii_AC)) return v;
    if (two_chain(reach_bl, reach_br, SafetyCondition::I_ii_B)) return v;
    return v;
}

GeneratedString random_shallow_string(const Lattice& lat, const StandardPartition& partition,
                                      int depth, const std::vector<DomainShape>& shapes,
                                      std::uint64_t seed, int max_rejections) {
    if (depth < 0) throw std::invalid_argument("random_shallow_string: negative depth budget");
    if (shapes.empty()) throw std::invalid_argument("random_shallow_string: no domain shapes");
    GeneratedString out;
    if (depth == 0) return out;

    for (int attempt = 0;; ++attempt) {
        if (attempt > max_rejections)
            throw std::runtime_error("random_shallow_string: rejection cap exceeded (" +
                                     std::to_string(max_rejections) + ")");
        RngStream rng(RngStream::derive(seed, 0x5afe, attempt));
        DomainString s;
        for (int i = 0; i < depth; ++i) {
            DomainShape shape = shapes[rng.next_u64() % shapes.size()];
            int r = static_cast<int>(rng.next_u64() % lat.L());
            int c = static_cast<int>(rng.next_u64() % lat.L());
            s.domains.push_back(shape == DomainShape::plaquette ? plaquette_region(lat, r, c)
                                                               : disk_region(lat, r, c, 1));
        }
        if (classify(s, partition).safe) {
            out.string = std::move(s);
            out.rejections = attempt;
            return out;
        }
    }
}

namespace {

const AnnularSpec& annular_spec(const StandardPartition& p) {
    if (!p.annular) throw std::invalid_argument("construction requires an annular partition");
    return *p.annular;
}

DomainString plaquette_chain(const Lattice& lat, const std::vector<std::pair<int, int>>& faces) {
    DomainString s;
    for (auto [r, c] : faces) s.domains.push_back(plaquette_region(lat, r, c));
    return s;
}

}  // namespace

DomainString make_cut_string(const StandardPartition& p) {
    const AnnularSpec& a = annular_spec(p);
    const Lattice& lat = *p.lattice;
    // Two plaquette chains in the C arc's column: one from the outer rim
    // inward, one from the hole outward, meeting mid-arc.  In circuit order
    // the meeting happens last, so the reversal reads outer-chain then
    // inner-chain with overlapping terminals: condition I.i.
    int col = a.col0 + a.thickness + a.hole / 2;
    int outer_row = a.row0 + a.outer() - 1;  // bottom row of C, touches the moat
    int hole_row = a.row0 + a.thickness + a.hole - 1;  // bottom row of the hole
    std::vector<std::pair<int, int>> sbar = {
        {outer_row, col}, {outer_row - 1, col},  // Y: outer -> mid
        {hole_row, col}, {hole_row + 1, col},    // Z: inner -> mid
    };
    std::vector<std::pair<int, int>> s(sbar.rbegin(), sbar.rend());
    return plaquette_chain(lat, s);
}

DomainString make_bridge_ac_string(const StandardPartition& p) {
    const AnnularSpec& a = annular_spec(p);
    const Lattice& lat = *p.lattice;
    // Plaquette chain from inside A straight through the hole into C.
    int col = a.col0 + a.thickness + a.hole / 2;
    std::vector<std::pair<int, int>> sbar;
    for (int r = a.row0 + a.thickness - 1; r <= a.row0 + a.thickness + a.hole; ++r)
        sbar.push_back({r, col});
    std::vector<std::pair<int, int>> s(sbar.rbegin(), sbar.rend());
    return plaquette_chain(lat, s);
}

DomainString make_bridge_b_string(const StandardPartition& p) {
    const AnnularSpec& a = annular_spec(p);
    const Lattice& lat = *p.lattice;
    // Plaquette chain across the hole from B_left to B_right at mid-height.
    int row = a.row0 + a.thickness + a.hole / 2;
    std::vector<std::pair<int, int>> sbar;
    for (int c = a.col0 + a.thickness - 1; c <= a.col0 + a.thickness + a.hole; ++c)
        sbar.push_back({row, c});
    std::vector<std::pair<int, int>> s(sbar.rbegin(), sbar.rend());
    return plaquette_chain(lat, s);
}

DomainString make_hole_pocket_string(const StandardPartition& p) {
    const AnnularSpec& a = annular_spec(p);
    const Lattice& lat = *p.lattice;
    // One tab from A's inner rim and one from B_left's inner rim meeting at
    // the hole's top-left corner: the maximal term seals a pocket of the
    // hole (the donut is destroyed) but no marked pair is connected.
    int hr = a.row0 + a.thickness;  // top row of the hole
    int hc = a.col0 + a.thickness;  // left column of the hole
    std::vector<std::pair<int, int>> sbar = {
        {hr, hc + 1},      // from A's rim, one face into the hole
        {hr + 1, hc + 1},  // extend downward
        {hr + 1, hc},      // from B_left's rim, meets the A tab
    };
    std::vector<std::pair<int, int>> s(sbar.rbegin(), sbar.rend());
    return plaquette_chain(lat, s);
}

DomainString make_interface_domain_string(const StandardPartition& p) {
    const AnnularSpec& a = annular_spec(p);
    const Lattice& lat = *p.lattice;
    // Two plaquettes inside the ring straddling the C | B_right interface,
    // away from both rims (needs thickness >= 3 for clearance).
    if (a.thickness < 3)
        throw std::invalid_argument("interface domain: thickness >= 3 required for rim clearance");
    int row = a.row0 + a.thickness + a.hole + 1;  // middle of the C band
    int c_col = a.col0 + a.thickness + a.hole - 1;
    Region x = region_union(plaquette_region(lat, row, c_col), plaquette_region(lat, row, c_col + 1));
    DomainString s;
    s.domains.push_back(std::move(x));
    return s;
}

std::string string_to_text(const DomainString& s) {
    std::ostringstream os;
    for (const auto& dom : s.domains) {
        os << "edges";
        const Lattice& lat = *dom.lattice;
        for (EdgeId e : dom.edges.to_vector()) {
            EdgeCoord c = lat.edge_coord(e);
            os << " (" << c.row << ',' << c.col << ','
               << (c.orientation == Orientation::horizontal ? 'H' : 'V') << ')';
        }
        os << '\n';
    }
    return os.str();
}

DomainString string_from_text(const Lattice& lat, const std::string& text) {
    DomainString s;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "plaquette") {
            int r, c;
            if (!(ls >> r >> c))
                throw std::invalid_argument("string file: bad plaquette at line " +
                                            std::to_string(lineno));
            s.domains.push_back(plaquette_region(lat, r, c));
        } else if (kind == "disk") {
            int radius, r, c;
            if (!(ls >> radius >> r >> c))
                throw std::invalid_argument("string file: bad disk at line " + std::to_string(lineno));
            s.domains.push_back(disk_region(lat, r, c, radius));
        } else if (kind == "edges") {
            Region dom(lat);
            std::string tok;
            while (ls >> tok) {
                int r, c;
                char o;
                if (std::sscanf(tok.c_str(), "(%d,%d,%c)", &r, &c, &o) != 3 || (o != 'H' && o != 'V'))
                    throw std::invalid_argument("string file: bad edge token '" + tok + "' at line " +
                                                std::to_string(lineno));
                dom.edges.set(lat.edge_id(r, c, o == 'H' ? Orientation::horizontal : Orientation::vertical));
            }
            if (dom.empty())
                throw std::invalid_argument("string file: empty domain at line " + std::to_string(lineno));
            s.domains.push_back(std::move(dom));
        } else {
            throw std::invalid_argument("string file: unknown shape '" + kind + "' at line " +
                                        std::to_string(lineno));
        }
    }
    return s;
}

DomainString load_string_file(const Lattice& lat, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open string file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return string_from_text(lat, ss.str());
}

void save_string_file(const DomainString& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write string file: " + path);
    f << string_to_text(s);
}

}  // namespace qdp
