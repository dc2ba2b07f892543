#pragma once

#include "qdp/region.hpp"
#include "qdp/swap_dynamics.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qdp {

// Deterministic counter-based RNG stream (splitmix64 core).  Streams are
// derived per sample index so Monte-Carlo results do not depend on the
// worker count.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();              // in (0,1]
    double normal();                 // standard normal, Box-Muller
    std::complex<double> cnormal();  // complex standard normal

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                std::uint64_t c = 0);

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct StateVector {
    const Lattice* lattice = nullptr;
    std::vector<std::complex<double>> amp;  // length d^N, mixed-radix little-endian

    double norm_sq() const;
};

inline constexpr std::int64_t kDefaultAmplitudeCap = std::int64_t{1} << 20;

// Uniform superposition over the orbit of |0...0> under the star group:
// |G| = d^(N_v - 1) nonzero amplitudes, each |G|^(-1/2).  Verifies the
// stabilizer conditions A(v)|psi> = |psi>, B(p)|psi> = |psi> numerically.
StateVector build_ground_state(const Lattice& lat, std::int64_t amplitude_cap = kDefaultAmplitudeCap);

// |0...0>: topologically trivial with purity 1 on every cut.
StateVector build_product_state(const Lattice& lat, std::int64_t amplitude_cap = kDefaultAmplitudeCap);

// Random product state (independent Haar single-qudit states).
StateVector build_random_product_state(const Lattice& lat, std::uint64_t seed,
                                       std::int64_t amplitude_cap = kDefaultAmplitudeCap);

// tr(rho_L^2) by partial trace over the smaller side.
double reduced_purity(const StateVector& state, const Region& region);

// Haar-random unitary on dimension `dim` (Ginibre + QR with the phase
// correction that makes the distribution exactly Haar).
std::vector<std::complex<double>> haar_unitary(int dim, RngStream& rng);

// max-norm of U U^dag - 1; sanity hook for the sampler.
double unitarity_defect(const std::vector<std::complex<double>>& u, int dim);

// Applies a unitary on the qudits of `domain` (single copy).
void apply_unitary(StateVector& state, const Region& domain,
                   const std::vector<std::complex<double>>& u);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

// Monte-Carlo estimate of <T_L>_{R_X(sigma^2)}: per sample draw U on X,
// evolve one copy, measure the reduced purity on L.  Deterministic for a
// fixed seed independently of the worker count (QDPURITY_WORKERS).
McEstimate mc_twirl_expectation(const StateVector& state, const Region& lambda, const Region& x,
                                int samples, std::uint64_t seed);

// Same for a full string: fresh independent unitaries per domain, applied
// in circuit order X~_1 ... X~_k.
McEstimate mc_string_expectation(const StateVector& state, const Region& lambda,
                                 const DomainString& s, int samples, std::uint64_t seed);

// Purity oracle backed by the dense state vector (exact at desk scale).
PurityOracle statevector_oracle(const StateVector& state);

}  // namespace qdp
