#pragma once

#include "qdp/rational.hpp"
#include "qdp/region.hpp"

#include <unordered_map>

namespace qdp {

// Exact purity value: a ratio of powers of d, plus a floating view.
struct PurityValue {
    Rational exact;
    double log2 = 0.0;

    static PurityValue from_power(int d, std::int64_t exponent);
};

// Exponent bookkeeping of P = |G_L| |G_Lbar| / |G| = d^(r_L + r_Lbar - r).
struct GroupPurityResult {
    std::int64_t group_rank = 0;       // r,     |G|      = d^r
    std::int64_t region_rank = 0;      // r_L,   |G_L|    = d^r_L
    std::int64_t complement_rank = 0;  // r_Lbar
    PurityValue value;

    std::int64_t purity_exponent() const { return group_rank - region_rank - complement_rank; }
};

// Star generator system of the Z_d quantum double.  One row per vertex; the
// row of v has +1 on the two edges oriented out of v and -1 (= d-1 mod d)
// on the two oriented into it.  With this convention the sum of all rows
// vanishes mod d for every d (the product of all star operators is the
// identity), so the group rank is N_v - 1.  The matrix is the transposed
// oriented incidence matrix of the lattice graph, hence totally unimodular:
// every G_L is an exact power of d, prime or not.
class GeneratorMatrix {
  public:
    explicit GeneratorMatrix(const Lattice& lat) : lat_(&lat) {}

    const Lattice& lattice() const { return *lat_; }

    // r with |G| = d^r; equals N_v - 1 on the torus.
    std::int64_t group_order_exponent() const;

    // r_L with |G_L| = d^r_L, G_L the subgroup supported inside the region
    // (edge-label vector vanishing on the complement).
    std::int64_t subgroup_exponent(const Region& region) const;

    GroupPurityResult purity(const Region& region) const;

    // Basis of exponent vectors c with supp(M^T c) inside the region,
    // modulo the global all-ones kernel.  Test hook: re-multiplication
    // verifies support, and the basis size equals subgroup_exponent.
    std::vector<std::vector<int>> kernel_basis(const Region& region) const;

  private:
    // Rank over Z_d of the star matrix restricted to the given columns.
    std::int64_t rank_on_columns(const EdgeSet& columns) const;

    const Lattice* lat_;
};

// Rank of an integer matrix mod d.  Gaussian elimination over the prime
// field when d is prime; Smith normal form over the integers otherwise.
// `kernel_order_is_power` receives false if the kernel order mod d is not a
// pure power of d (cannot happen for totally unimodular inputs).
std::int64_t rank_mod(const std::vector<std::vector<int>>& rows, int num_cols, int d);

// Kernel order exponent of the map x -> A x over (Z_d)^n via SNF:
// |ker| = prod_i gcd(d, s_i).  Throws if the order is not a power of d.
std::int64_t kernel_exponent_mod(const std::vector<std::vector<long long>>& a, int n_cols, int d);

bool is_prime(int n);

// Geometric purity, Eq-(7)-style closed form evaluated from BoundaryStats:
// P = d^-(boundary_size - n2 - 2 n3 - n_components).  Exact on the
// rectangle/annulus family (and any region whose kings-move boundary
// components agree with the region's topological boundary count);
// pathological regions are served by the group engine instead.
PurityValue purity_geometric(const Region& region);
std::int64_t purity_geometric_exponent(const Region& region);

// Region -> purity oracle backed by the group engine, memoized.
class GroupOracle {
  public:
    explicit GroupOracle(const GeneratorMatrix& mat) : mat_(&mat) {}

    Rational operator()(const Region& region) const;
    std::int64_t exponent(const Region& region) const;

  private:
    const GeneratorMatrix* mat_;
    mutable std::unordered_map<EdgeSet, std::int64_t, EdgeSetHash> cache_;
};

}  // namespace qdp
