#pragma once

#include "qdp/circuits.hpp"
#include "qdp/group_purity.hpp"
#include "qdp/partition.hpp"
#include "qdp/swap_dynamics.hpp"

#include <array>
#include <string>

namespace qdp {

enum class TopoClass { topological, trivial, other };

struct TopoEntry {
    std::string label;
    Rational value;
    std::size_t term_count = 1;
};

// The four-region ratio P_top = (P_AB P_BC) / (P_B P_ABC).  Classification
// is by exact rational comparison against d^-2 (= 2^(-2 gamma), gamma =
// log2 d) and 1.
struct TopoReport {
    std::array<TopoEntry, 4> entries;  // AB, BC, B, ABC
    Rational ratio;
    double ratio_double = 0.0;
    double gamma = 0.0;  // log2 d
    TopoClass classification = TopoClass::other;

    const TopoEntry& ab() const { return entries[0]; }
    const TopoEntry& bc() const { return entries[1]; }
    const TopoEntry& b() const { return entries[2]; }
    const TopoEntry& abc() const { return entries[3]; }

    std::string to_text(int d) const;
};

TopoReport topological_purity(const PurityOracle& oracle, const StandardPartition& partition);

// Evolves the four swap operators through the reversed string and evaluates
// each combo against the initial-state oracle; the ratio is exact.
TopoReport evolved_topological_purity(const PurityOracle& oracle, const StandardPartition& partition,
                                      const DomainString& s,
                                      std::size_t term_cap = kDefaultComboCap);

// Deterministic deformed-partition ratio: each of the four regions is
// unioned with / diffed by the given modification.  Used to reproduce the
// worked boundary-modification identities (cuts, bridges, pockets).
TopoReport deformed_topological_purity(const PurityOracle& oracle, const StandardPartition& partition,
                                       const Region& added, const Region& removed);

enum class Lemma1Outcome { stable, changed, precondition_violated };

// Local boundary deformation check: attaches X to every region it touches
// and compares the ratio with the undeformed one.  X must deform exactly
// one boundary component of ABC; topology-changing domains are reported as
// precondition violations (detected with the circuit classifier).
Lemma1Outcome lemma1_check(const PurityOracle& oracle, const StandardPartition& partition,
                           const Region& x);

// Proof-mechanics property: pairs the terms of the numerator combos
// (AB,BC) with the denominator combos (B,ABC) by their per-step branch and
// intersection-size trajectories and verifies that matched quadruples have
// equal coefficient products and boundary exponents offset by exactly 2:
//   m_AB m_BC = m_B m_ABC  and  E_AB + E_BC = E_B + E_ABC + 2.
struct PairingCheck {
    bool ok = false;
    std::size_t quadruples = 0;
    std::string failure;
};

PairingCheck check_term_pairing(const GroupOracle& oracle, const StandardPartition& partition,
                                const DomainString& s);

}  // namespace qdp
