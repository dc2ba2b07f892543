#include "qdp/swap_dynamics.hpp"

#include "qdp/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdp {

TwirlCoefficients TwirlCoefficients::compute(int d, int x_size, int intersection_size) {
    if (intersection_size < 0 || intersection_size > x_size)
        throw std::invalid_argument("twirl coefficients: bad intersection size");
    BigInt dx = ipow(d, x_size);
    BigInt di = ipow(d, intersection_size);
    BigInt dx2m1 = dx * dx - 1;
    TwirlCoefficients c;
    c.drop = Rational(dx * dx - di * di, di * dx2m1);
    c.add = Rational(dx * (di * di - 1), di * dx2m1);
    return c;
}

DomainString reverse(const DomainString& s) {
    DomainString r = s;
    std::reverse(r.domains.begin(), r.domains.end());
    return r;
}

SwapCombo::SwapCombo(const Region& seed, Rational coeff) : lat_(seed.lattice) {
    add_term(seed.edges, coeff);
}

void SwapCombo::add_term(const EdgeSet& region, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(region, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SwapCombo::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [r, m] : terms_) s += m;
    return s;
}

bool boundary_hit(const Region& x, const Region& lambda) {
    require_same_lattice(x, lambda);
    bool straddles = x.edges.intersects(lambda.edges) && !x.edges.is_subset_of(lambda.edges);
    if (straddles) return true;
    return x.edges.intersects(edge_boundary(lambda));
}

SwapCombo apply_twirl(const SwapCombo& combo, const Region& x, std::size_t term_cap,
                      int step_index) {
    if (x.empty()) throw std::invalid_argument("apply_twirl: empty domain");
    const Lattice& lat = combo.lattice();
    if (x.lattice != &lat) throw std::invalid_argument("apply_twirl: lattice mismatch");
    const int x_size = x.size();

    SwapCombo out(lat);
    for (const auto& [lam, m] : combo.terms()) {
        int inter = (lam & x.edges).count();
        if (inter == x_size) {
            out.add_term(lam, m);  // X inside L: n_add = 1 and L u X = L
            continue;
        }
        if (inter == 0) {
            out.add_term(lam, m);  // X disjoint: n_drop = 1 and L \ X = L
            continue;
        }
        TwirlCoefficients c = TwirlCoefficients::compute(lat.d(), x_size, inter);
        out.add_term(lam.minus(x.edges), m * c.drop);
        out.add_term(lam | x.edges, m * c.add);
    }
    if (out.size() > term_cap) throw budget_error(out.size(), term_cap, step_index);
    return out;
}

SwapCombo apply_string(const SwapCombo& combo, const DomainString& s, std::size_t term_cap) {
    SwapCombo cur = combo;
    // Heisenberg picture: the adjoint map applies the circuit's domains in
    // reversed order, so the last domain of s is twirled first.
    int step = 1;
    for (auto it = s.domains.rbegin(); it != s.domains.rend(); ++it, ++step)
        cur = apply_twirl(cur, *it, term_cap, step);
    return cur;
}

Rational evaluate(const SwapCombo& combo, const PurityOracle& oracle) {
    Rational total = 0;
    for (const auto& [region_edges, m] : combo.terms()) {
        Region region(combo.lattice(), region_edges);
        try {
            total += m * oracle(region);
        } catch (const std::exception& e) {
            throw std::runtime_error("evaluate: oracle failed on a " +
                                     std::to_string(region.size()) + "-edge region: " + e.what());
        }
    }
    return total;
}

std::vector<TracedTerm> evolve_traced(const Region& seed, const DomainString& s,
                                      std::size_t term_cap) {
    const Lattice& lat = *seed.lattice;
    std::vector<TracedTerm> terms{TracedTerm{seed.edges, Rational(1), {}}};
    int step = 1;
    for (auto it = s.domains.rbegin(); it != s.domains.rend(); ++it, ++step) {
        const Region& x = *it;
        const int x_size = x.size();
        std::vector<TracedTerm> next;
        next.reserve(terms.size() * 2);
        for (const auto& term : terms) {
            int inter = (term.region & x.edges).count();
            if (inter == 0 || inter == x_size) {
                TracedTerm t = term;
                t.steps.push_back({TwirlBranch::pass, 0});
                next.push_back(std::move(t));
                continue;
            }
            TwirlCoefficients c = TwirlCoefficients::compute(lat.d(), x_size, inter);
            TracedTerm drop{term.region.minus(x.edges), term.coeff * c.drop, term.steps};
            drop.steps.push_back({TwirlBranch::drop, inter});
            TracedTerm add{term.region | x.edges, term.coeff * c.add, term.steps};
            add.steps.push_back({TwirlBranch::add, inter});
            next.push_back(std::move(drop));
            next.push_back(std::move(add));
        }
        if (next.size() > term_cap) throw budget_error(next.size(), term_cap, step);
        terms = std::move(next);
    }
    return terms;
}

}  // namespace qdp
