#pragma once

#include <symmetria/process_modes.hpp>

#include <Eigen/Sparse>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace symmetria {

using SparseC = Eigen::SparseMatrix<cplx>;

// Z_N link between vertices x -> y, basis |h>, h in Z_N.
struct LinkFrame {
    int N = 2;
    int x = 0;
    int y = 1;
};

// |h> -> |h + g_x - g_y mod N>
CMatrix link_action(const LinkFrame& frame, int g_x, int g_y);

// L = sum_h omega^{lambda h} |h><h|, A(sigma) = L sigma.
struct GaugeCoupling {
    int lambda = 0;
    int N = 2;
    CMatrix link_op;
    Superoperator op;
};

GaugeCoupling gauge_coupling(int lambda, int N);
// max over (g_x, g_y) of || U[A] - omega^{-lambda g_x + lambda g_y} A ||
double coupling_covariance_residual(const GaugeCoupling& c);

// Superoperator on site_x (x) link (x) site_y.
struct GaugedProcess {
    RepSpec site_x;
    RepSpec site_y;
    LinkFrame link;
    Superoperator op;
};

// U_x(g_x) (x) U_y(g_y) applied as S -> U S U^dagger on a map over x (x) y.
Superoperator pair_action(const Superoperator& chi, const RepSpec& x, const RepSpec& y, int g_x, int g_y);
// Average of pair_action over the diagonal (g, g).
Superoperator diagonal_twirl(const Superoperator& s, const RepSpec& x, const RepSpec& y);

CMatrix local_unitary(const GaugedProcess& p, int g_x, int g_y);
Superoperator local_action(const GaugedProcess& p, int g_x, int g_y);
// max over all N^2 pairs of || U[G] - G ||
double local_invariance_residual(const GaugedProcess& p);

// Expands chi = sum c_ij Phi_x,i (x) Phi_y,j and inserts A_{charge(i)} on the link.
// Throws if chi is not diagonally symmetric or a term carries a charge other than lambda.
GaugedProcess gauge_2symmetric(const Superoperator& chi, std::optional<int> lambda, const LinkFrame& frame,
                               const ProcessModeBasis& modes_x, const ProcessModeBasis& modes_y);

// (id (x) P_h2) o G o (id (x) P_h1) with P_h the link projection.
Superoperator gauge_fix(const GaugedProcess& p, int h1, int h2);

struct GaugeFixReport {
    std::vector<std::pair<int, int>> stabilizer;
    double transformation_defect = 0.0;  // max || U[G_{h1,h2}] - G_{h1+d, h2+d} ||, d = g_x - g_y
    double norm = 0.0;
    bool vanishes = false;
};
GaugeFixReport gauge_fix_report(const GaugedProcess& p, int h1, int h2, double tol = 1e-12);

// rho -> tr_link G(rho with link |h><h| inserted), a map on x (x) y.
Superoperator reduce_with_link(const GaugedProcess& p, int h);

// ----- lattice demo -----

// Unitary e_i -> phase[i] e_{perm[i]}
struct MonomialOp {
    std::vector<int> perm;
    std::vector<cplx> phase;

    CMatrix apply(const CMatrix& v) const;
    CMatrix conjugate(const CMatrix& rho) const;  // U rho U^dagger
    SparseC matrix() const;
};

struct Plaquette {
    std::array<int, 4> links;
    std::array<bool, 4> forward;
};

// Hardcore matter qubit per site, Z_N link per nearest-neighbour pair.
// Index order: sites (row-major, site 0 most significant), then links.
struct GaugedLattice {
    int Lx = 0, Ly = 0, N = 0;
    int n_sites = 0;
    int dim = 0;
    std::vector<LinkFrame> links;
    std::vector<Plaquette> plaquettes;
    SparseC h_free;
    SparseC h_gauged;
    std::vector<std::vector<SparseC>> gauss_ops;  // [site][g]
    std::vector<SparseC> wilson_ops;
};

GaugedLattice build_gauged_lattice(int Lx, int Ly, int N);
MonomialOp gauss_monomial(const GaugedLattice& lat, int site, int g);
MonomialOp lattice_local_action(const GaugedLattice& lat, const std::vector<int>& g);
// All N^n_sites local actions.
std::vector<MonomialOp> lattice_local_actions(const GaugedLattice& lat);
// Frobenius norm of [A, B].
double commutator_norm(const SparseC& a, const SparseC& b);
// exp(-i t H) v by scaled Taylor series.
CMatrix expmv(const SparseC& h, double t, const CMatrix& v);

struct FreeStateReport {
    bool is_free = false;
    double twirl_distance = 0.0;
    bool dynamics_checked = false;
    double dynamics_defect = 0.0;  // Frobenius norm of E(G(rho)) - G(E(rho))
};

// rho = F F^dagger. Dynamics E = exp(-i t H_gauged) conjugation, checked when t != 0.
FreeStateReport free_state_check(const GaugedLattice& lat, const CMatrix& factor, double t = 0.0,
                                 double tol = 1e-10);
CMatrix lattice_twirl(const GaugedLattice& lat, const CMatrix& rho);

}  // namespace symmetria
