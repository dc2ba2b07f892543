#include "qdp/group_purity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdp {

PurityValue PurityValue::from_power(int d, std::int64_t exponent) {
    PurityValue v;
    v.exact = rational_power(d, exponent);
    v.log2 = static_cast<double>(exponent) * std::log2(static_cast<double>(d));
    return v;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace {

int mod_pow(long long base, long long exp, int m) {
    long long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int mod_inverse_prime(int a, int p) { return mod_pow(a, p - 2, p); }

// Rank over GF(2), rows packed into 64-bit words.
std::int64_t rank_gf2_packed(std::vector<std::vector<std::uint64_t>>& rows, int num_cols) {
    std::int64_t rank = 0;
    std::size_t row_at = 0;
    for (int col = 0; col < num_cols && row_at < rows.size(); ++col) {
        std::size_t w = static_cast<std::size_t>(col) >> 6;
        std::uint64_t bit = std::uint64_t{1} << (col & 63);
        std::size_t pivot = row_at;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row_at], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != row_at && (rows[i][w] & bit)) {
                for (std::size_t k = w; k < rows[i].size(); ++k) rows[i][k] ^= rows[row_at][k];
            }
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

std::int64_t rank_gfp(std::vector<std::vector<int>>& rows, int num_cols, int p) {
    std::int64_t rank = 0;
    std::size_t row_at = 0;
    for (int col = 0; col < num_cols && row_at < rows.size(); ++col) {
        std::size_t pivot = row_at;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row_at], rows[pivot]);
        int inv = mod_inverse_prime(((rows[row_at][col] % p) + p) % p, p);
        for (int c = col; c < num_cols; ++c)
            rows[row_at][c] = static_cast<int>(static_cast<long long>(rows[row_at][c]) * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row_at) continue;
            int f = ((rows[i][col] % p) + p) % p;
            if (f == 0) continue;
            for (int c = col; c < num_cols; ++c) {
                long long v = rows[i][c] - static_cast<long long>(f) * rows[row_at][c];
                rows[i][c] = static_cast<int>(((v % p) + p) % p);
            }
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

// Smith normal form diagonal of an integer matrix (BigInt arithmetic; used
// only for composite d where sizes are small).
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> diag;
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot with minimal absolute value
        std::size_t pr = t, pc = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                BigInt v = abs(a[i][j]);
                if (!found || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = true;
        for (std::size_t i = t + 1; i < m && clean; ++i) {
            if (a[i][t] % a[t][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n && clean; ++j) {
            if (a[t][j] % a[t][t] != 0) clean = false;
        }
        if (!clean) {
            // one reduction round, then retry the pivot search
            for (std::size_t i = t + 1; i < m; ++i) {
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
            }
            continue;
        }
        for (std::size_t i = t + 1; i < m; ++i) {
            BigInt q = a[i][t] / a[t][t];
            if (q != 0)
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        }
        for (std::size_t j = t + 1; j < n; ++j) a[t][j] = 0;
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

std::int64_t rank_mod(const std::vector<std::vector<int>>& rows, int num_cols, int d) {
    if (!is_prime(d)) throw std::invalid_argument("rank_mod: d must be prime");
    auto copy = rows;
    for (auto& r : copy)
        for (auto& v : r) v = ((v % d) + d) % d;
    return rank_gfp(copy, num_cols, d);
}

std::int64_t kernel_exponent_mod(const std::vector<std::vector<long long>>& a, int n_cols, int d) {
    std::vector<std::vector<BigInt>> big(a.size(), std::vector<BigInt>(n_cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < n_cols; ++j) big[i][j] = a[i][j];
    std::vector<BigInt> diag = smith_diagonal(std::move(big));

    // |ker| = prod over n_cols invariant positions of gcd(d, s_i), s_i = 0
    // past the computed diagonal.
    BigInt order = 1;
    for (int i = 0; i < n_cols; ++i) {
        BigInt s = i < static_cast<int>(diag.size()) ? diag[i] : BigInt(0);
        order *= gcd(BigInt(d), s);
    }
    std::int64_t e = 0;
    BigInt v = order;
    while (v > 1) {
        if (v % d != 0)
            throw std::logic_error("kernel order is not a power of d; generator matrix not unimodular");
        v /= d;
        ++e;
    }
    return e;
}

std::int64_t GeneratorMatrix::rank_on_columns(const EdgeSet& columns) const {
    const Lattice& lat = *lat_;
    const int d = lat.d();
    std::vector<int> col_index(lat.num_edges(), -1);
    int num_cols = 0;
    for (int e = 0; e < lat.num_edges(); ++e)
        if (columns.test(e)) col_index[e] = num_cols++;
    if (num_cols == 0) return 0;

    if (d == 2) {
        std::size_t words = (static_cast<std::size_t>(num_cols) + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(lat.num_vertices(),
                                                     std::vector<std::uint64_t>(words, 0));
        for (VertexId v = 0; v < lat.num_vertices(); ++v) {
            for (const auto& se : lat.star_edges(v)) {
                int c = col_index[se.edge];
                if (c >= 0) rows[v][static_cast<std::size_t>(c) >> 6] ^= std::uint64_t{1} << (c & 63);
            }
        }
        return rank_gf2_packed(rows, num_cols);
    }

    if (is_prime(d)) {
        std::vector<std::vector<int>> rows(lat.num_vertices(), std::vector<int>(num_cols, 0));
        for (VertexId v = 0; v < lat.num_vertices(); ++v) {
            for (const auto& se : lat.star_edges(v)) {
                int c = col_index[se.edge];
                if (c >= 0) rows[v][c] = ((se.sign % d) + d) % d;
            }
        }
        return rank_gfp(rows, num_cols, d);
    }

    // Composite d: the kernel of c -> (M^T c) restricted to the columns has
    // order d^(N_v - rank) by total unimodularity; recover the rank from
    // the SNF kernel exponent.
    std::vector<std::vector<long long>> a(num_cols, std::vector<long long>(lat.num_vertices(), 0));
    for (VertexId v = 0; v < lat.num_vertices(); ++v) {
        for (const auto& se : lat.star_edges(v)) {
            int c = col_index[se.edge];
            if (c >= 0) a[c][v] = se.sign;
        }
    }
    std::int64_t ke = kernel_exponent_mod(a, lat.num_vertices(), d);
    return lat.num_vertices() - ke;
}

std::int64_t GeneratorMatrix::group_order_exponent() const {
    EdgeSet all(lat_->num_edges());
    all = all.complemented();
    return rank_on_columns(all);
}

std::int64_t GeneratorMatrix::subgroup_exponent(const Region& region) const {
    if (region.lattice != lat_)
        throw std::invalid_argument("subgroup_exponent: region belongs to a different lattice");
    return lat_->num_vertices() - 1 - rank_on_columns(region.edges.complemented());
}

GroupPurityResult GeneratorMatrix::purity(const Region& region) const {
    if (region.empty() || region.full())
        throw std::domain_error("purity_group: undefined for the empty or full region");
    GroupPurityResult r;
    r.group_rank = group_order_exponent();
    r.region_rank = subgroup_exponent(region);
    r.complement_rank = subgroup_exponent(region_complement(region));
    r.value = PurityValue::from_power(lat_->d(), -r.purity_exponent());
    return r;
}

std::vector<std::vector<int>> GeneratorMatrix::kernel_basis(const Region& region) const {
    const Lattice& lat = *lat_;
    const int d = lat.d();
    if (!is_prime(d)) throw std::invalid_argument("kernel_basis: prime d only");
    const int nv = lat.num_vertices();

    // Constraint matrix: rows = complement edges, columns = vertices.
    EdgeSet comp = region.edges.complemented();
    std::vector<std::vector<int>> a;
    for (int e = 0; e < lat.num_edges(); ++e) {
        if (!comp.test(e)) continue;
        std::vector<int> row(nv, 0);
        auto [tail, head] = lat.edge_endpoints(e);
        row[tail] = (row[tail] + 1) % d;
        row[head] = ((row[head] - 1) % d + d) % d;
        a.push_back(std::move(row));
    }

    // Row-reduce, track pivot columns, then read the nullspace off the RREF.
    std::vector<int> pivot_col;
    std::size_t row_at = 0;
    for (int col = 0; col < nv && row_at < a.size(); ++col) {
        std::size_t pivot = row_at;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[row_at], a[pivot]);
        int inv = mod_inverse_prime(a[row_at][col], d);
        for (int c = 0; c < nv; ++c)
            a[row_at][c] = static_cast<int>(static_cast<long long>(a[row_at][c]) * inv % d);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row_at || a[i][col] == 0) continue;
            int f = a[i][col];
            for (int c = 0; c < nv; ++c) {
                long long v = a[i][c] - static_cast<long long>(f) * a[row_at][c];
                a[i][c] = static_cast<int>(((v % d) + d) % d);
            }
        }
        pivot_col.push_back(col);
        ++row_at;
    }

    std::vector<char> is_pivot(nv, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<int>> null_basis;
    for (int free = 0; free < nv; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> vec(nv, 0);
        vec[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            vec[pivot_col[i]] = ((-a[i][free]) % d + d) % d;
        null_basis.push_back(std::move(vec));
    }

    // Quotient by the global all-ones kernel vector.
    std::vector<std::vector<int>> stack;
    stack.emplace_back(nv, 1);
    for (auto& b : null_basis) stack.push_back(b);
    std::vector<std::vector<int>> basis;
    std::size_t rr = 0;
    for (int col = 0; col < nv && rr < stack.size(); ++col) {
        std::size_t pivot = rr;
        while (pivot < stack.size() && stack[pivot][col] == 0) ++pivot;
        if (pivot == stack.size()) continue;
        std::swap(stack[rr], stack[pivot]);
        int inv = mod_inverse_prime(stack[rr][col], d);
        for (int c = 0; c < nv; ++c)
            stack[rr][c] = static_cast<int>(static_cast<long long>(stack[rr][c]) * inv % d);
        for (std::size_t i = 0; i < stack.size(); ++i) {
            if (i == rr || stack[i][col] == 0) continue;
            int f = stack[i][col];
            for (int c = 0; c < nv; ++c) {
                long long v = stack[i][c] - static_cast<long long>(f) * stack[rr][c];
                stack[i][c] = static_cast<int>(((v % d) + d) % d);
            }
        }
        if (rr > 0) basis.push_back(stack[rr]);  // skip the all-ones row
        ++rr;
    }
    return basis;
}

std::int64_t purity_geometric_exponent(const Region& region) {
    BoundaryStats st = boundary_stats(region);
    return st.boundary_size - st.n2 - 2 * st.n3 - st.n_components;
}

PurityValue purity_geometric(const Region& region) {
    return PurityValue::from_power(region.lattice->d(), -purity_geometric_exponent(region));
}

Rational GroupOracle::operator()(const Region& region) const {
    return rational_power(mat_->lattice().d(), -exponent(region));
}

std::int64_t GroupOracle::exponent(const Region& region) const {
    if (region.empty() || region.full()) return 0;  // pure state: purity 1 on trivial cuts
    auto it = cache_.find(region.edges);
    if (it != cache_.end()) return it->second;
    std::int64_t e = mat_->purity(region).purity_exponent();
    cache_.emplace(region.edges, e);
    return e;
}

}  // namespace qdp
