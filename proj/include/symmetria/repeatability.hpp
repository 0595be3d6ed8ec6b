#pragma once

#include <symmetria/process_modes.hpp>

#include <vector>

namespace symmetria {

// Cyclic ladder Z_D with number basis |n> and shift |n> -> |n+1 mod D>.
struct LadderRef {
    int D = 0;
    CMatrix shift;
};

LadderRef make_ladder(int D);
// Delta^k for any integer k.
CMatrix shift_power(const LadderRef& l, int k);
// |theta_r> = D^{-1/2} sum_n exp(-2 pi i n r / D) |n>, eigenvalue exp(2 pi i r / D) of Delta.
CVector frame_state(int D, int r);
// sum_r (2 pi r / D) |theta_r><theta_r|
CMatrix frame_observable(int D);
// diag(omega^{g n}) on the ladder
CMatrix ladder_action(int D, int g);
// diag(omega^{g m}) on A, charges m = 0..dim_a-1
CMatrix system_action(int dim_a, int D, int g);
// tr(Delta^k sigma) for k = 0..D-1
std::vector<cplx> shift_profile(const LadderRef& l, const CMatrix& sigma);

// V(U) = sum U_mn |m><n| (x) Delta^{n-m} on A (x) ladder.
struct Protocol {
    CMatrix target;
    LadderRef ladder;
    CMatrix interaction;
    int dim_a = 0;
    double unitarity_defect = 0.0;
    double symmetry_defect = 0.0;  // max_g ||[V, U_A(g) (x) U_B(g)]||
};

Protocol build_protocol(const CMatrix& u, int D);

// tr_B V (rho (x) sigma) V^dagger as a map on A.
Superoperator induced_channel(const Protocol& p, const CMatrix& sigma);
// sum over mode charges of tr(Delta^k sigma) times the fixed k-part of the map.
Superoperator induced_channel_closed_form(const Protocol& p, const CMatrix& sigma);
// tr_A V (rho (x) sigma) V^dagger
CMatrix reference_update(const Protocol& p, const CMatrix& rho, const CMatrix& sigma);

struct SequentialResult {
    std::vector<Superoperator> channels;      // induced channel on A_k, k = 1..n
    std::vector<CMatrix> references;          // ladder state after each round
    std::vector<double> round_distances;      // choi_distance(channel[k], channel[0])
    std::vector<double> reference_fidelities; // <psi|sigma_k|psi> when sigma = |psi><psi|
    double full_tensor_defect = -1.0;         // n >= 2 only; -1 when skipped
};

// Propagates the reduced ladder state round by round. For n >= 2 the second
// channel is also recomputed from the joint unitary on A_1 A_2 B when
// dim_a^2 D <= max_full_dim.
SequentialResult sequential_use(const Protocol& p, const CMatrix& sigma, const std::vector<CMatrix>& inputs,
                                int max_full_dim = 1024);

struct MeasurePrepare {
    std::vector<Diagram> diagrams;
    std::vector<CMatrix> x_ops;  // X for each diagram
    std::vector<cplx> alpha0;    // coefficient of E_0 (sigma = |theta_0><theta_0|)
    double x_defect = 0.0;       // max ||X - alpha0 Delta^{-lambda}||
    double commutator = 0.0;     // max ||[X, frame observable]||
    std::vector<CMatrix> povm;   // frame projectors
    std::vector<Superoperator> maps;
    double form_defect = 0.0;    // sampled max choi distance of the sum form vs induced channel
    double solve_residual = 0.0;
};

// Solves tr(X sigma) = alpha(E_sigma) on D^2 spanning states. Requires D >= 2 dim_a.
MeasurePrepare measure_prepare_form(const Protocol& p, const ProcessModeBasis& basis);

struct BroadcastReport {
    double shift_commutator = 0.0;  // max ||[Delta^j, Delta^k]||
    double profile_change = 0.0;    // max over sigma and rounds of |<Delta^k>_t - <Delta^k>_0|
    double channel_spread = 0.0;    // max round distance
    bool ok = false;
};

BroadcastReport broadcast_check(const Protocol& p, const std::vector<CMatrix>& sigmas,
                                const std::vector<CMatrix>& inputs, double tol = 1e-12);

// RepSpec of A used for the mode decomposition.
RepSpec protocol_rep(const Protocol& p);

}  // namespace symmetria
