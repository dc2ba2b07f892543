#pragma once

#include "qdp/partition.hpp"
#include "qdp/swap_dynamics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdp {

// Safety conditions of the classifier, in deterministic scan order.  The
// two-chain boundary condition is scanned first; single-chain bridges are
// scanned before the two-chain subregion conditions they imply (a bridge
// chain plus its own terminal always yields a two-chain witness).
enum class SafetyCondition {
    I_i,          // chains from the outer and inner boundary of ABC meet
    II_a,         // one chain connects outer to inner boundary
    II_b_AC,      // one chain connects A to C
    II_b_B,       // one chain connects B_left to B_right
    I_ii_AC,      // chains from A and C meet
    I_ii_B,       // chains from B_left and B_right meet
};

std::string to_string(SafetyCondition c);

struct SafetyVerdict {
    bool safe = true;
    std::optional<SafetyCondition> violated_condition;
    // Witness chains as indices into the reversed string S-bar (empty when
    // safe; chain2 empty for single-chain conditions).
    std::vector<int> chain1;
    std::vector<int> chain2;
};

// Decides membership in the safe set: scans the reversed string for
// ordered chains (subsequences whose consecutive members overlap each
// other's edge boundary) connecting the marked boundary components or the
// paired subregions (A,C), (B_left,B_right).  A domain may appear in both
// chains of a two-chain witness.  Requires an annular partition.
SafetyVerdict classify(const DomainString& s, const StandardPartition& partition);

enum class DomainShape { plaquette, disk1 };

struct GeneratedString {
    DomainString string;
    int rejections = 0;
};

// Samples `depth` domains uniformly over face positions and rejects whole
// strings the classifier marks unsafe.  Deterministic under seed.
GeneratedString random_shallow_string(const Lattice& lat, const StandardPartition& partition,
                                      int depth, const std::vector<DomainShape>& shapes,
                                      std::uint64_t seed, int max_rejections = 5000);

// Adversarial constructions on an annular partition (see the classifier
// tests and the acceptance suite).  Strings are returned in circuit order;
// classify() sees their reversal.
DomainString make_cut_string(const StandardPartition& partition);        // -> I.i
DomainString make_bridge_ac_string(const StandardPartition& partition);  // -> II.b(A,C)
DomainString make_bridge_b_string(const StandardPartition& partition);   // -> II.b(B_left,B_right)
// Two chains from the inner rims of A and B_left meeting inside the hole:
// destroys the donut in its maximal term yet is safe.
DomainString make_hole_pocket_string(const StandardPartition& partition);
// Single domain inside the ring straddling the B_right|C interface.
DomainString make_interface_domain_string(const StandardPartition& partition);

// ---- Serialization ----
// One domain per line: "plaquette R C" | "disk RADIUS R C" |
// "edges (r,c,H) (r,c,V) ...".
std::string string_to_text(const DomainString& s);
DomainString string_from_text(const Lattice& lat, const std::string& text);
DomainString load_string_file(const Lattice& lat, const std::string& path);
void save_string_file(const DomainString& s, const std::string& path);

}  // namespace qdp
