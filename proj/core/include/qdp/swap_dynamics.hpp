#pragma once

#include "qdp/rational.hpp"
#include "qdp/region.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace qdp {

// Raised when a combo exceeds its term budget; identifies the twirl step.
class budget_error : public std::runtime_error {
  public:
    budget_error(std::size_t terms, std::size_t cap, int step)
        : std::runtime_error("swap combo exceeded term budget at step " + std::to_string(step) +
                             ": " + std::to_string(terms) + " > " + std::to_string(cap)),
          step_index(step) {}
    int step_index;
};

// Haar-twirl coefficients of R_X(T_L) = n_drop T_{L\X} + n_add T_{LuX},
//   n_drop = (dX^2 - di^2) / (di (dX^2 - 1)),
//   n_add  = dX (di^2 - 1) / (di (dX^2 - 1)),
// with dX = d^|X|, di = d^|L n X|.  Exact rationals.  Degenerate cases
// gate the dynamics by themselves: X inside L gives (0,1), X disjoint from
// L gives (1,0), so applying the split unconditionally reproduces the
// two-case form.
struct TwirlCoefficients {
    Rational drop;
    Rational add;

    static TwirlCoefficients compute(int d, int x_size, int intersection_size);
};

// Ordered list of twirl domains X~_1 ... X~_k modeling a random circuit.
struct DomainString {
    std::vector<Region> domains;

    std::size_t depth() const { return domains.size(); }
};

DomainString reverse(const DomainString& s);

// Weighted sum of swap operators sum_a m_a T_{L_a} in the Heisenberg
// picture.  Regions are canonical bitsets; equal regions merge by
// coefficient addition and zero coefficients are dropped.
class SwapCombo {
  public:
    explicit SwapCombo(const Lattice& lat) : lat_(&lat) {}
    SwapCombo(const Region& seed, Rational coeff);

    const Lattice& lattice() const { return *lat_; }
    const std::map<EdgeSet, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const EdgeSet& region, const Rational& coeff);

    Rational coefficient_sum() const;

  private:
    const Lattice* lat_ = nullptr;
    std::map<EdgeSet, Rational> terms_;
};

// f(X,L): 1 iff the twirl on X acts nontrivially on T_L.  Algebraically: X
// straddles L; the boundary-edge-set reading (X meets the edge boundary of
// L) is folded in so the gated form of the update coincides with the
// coefficient form for every X, including X touching L from outside.
bool boundary_hit(const Region& x, const Region& lambda);

inline constexpr std::size_t kDefaultComboCap = std::size_t{1} << 18;

SwapCombo apply_twirl(const SwapCombo& combo, const Region& x,
                      std::size_t term_cap = kDefaultComboCap, int step_index = 0);

// Heisenberg-picture evolution: <T_L>_{R_S(sigma^2)} = <R_Sbar(T_L)>, so the
// domains of s are applied in reversed order.
SwapCombo apply_string(const SwapCombo& combo, const DomainString& s,
                       std::size_t term_cap = kDefaultComboCap);

using PurityOracle = std::function<Rational(const Region&)>;

// sum_a m_a oracle(L_a), exact.  Oracle failures propagate with the
// offending region's size attached.
Rational evaluate(const SwapCombo& combo, const PurityOracle& oracle);

// ---- Traced evolution (proof-mechanics checker support) ----

enum class TwirlBranch : char { pass = 'P', drop = 'D', add = 'A' };

struct TraceStep {
    TwirlBranch branch;
    int intersection_size;  // |L n X| before the step; 0 for pass
};

struct TracedTerm {
    EdgeSet region;
    Rational coeff;
    std::vector<TraceStep> steps;
};

// Like apply_string but keeps one term per branch trajectory (no merging).
// Degenerate splits are recorded as passes.  Term count is at most 2^k.
std::vector<TracedTerm> evolve_traced(const Region& seed, const DomainString& s,
                                      std::size_t term_cap = kDefaultComboCap);

}  // namespace qdp
