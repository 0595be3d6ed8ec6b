#pragma once

#include <symmetria/process_modes.hpp>

#include <array>
#include <string>
#include <vector>

namespace symmetria {

enum class DiagramClass { Local, Injection, Relational };
std::string to_string(DiagramClass c);

// [(a_in, a_out) -> lambda -> (b_in, b_out)]; b.lambda is dual(a.lambda).
struct BipartiteDiagram {
    Diagram a;
    Diagram b;

    DiagramClass cls() const;
    std::string to_string() const;
    bool operator==(const BipartiteDiagram&) const = default;
};

DiagramClass classify(const BipartiteDiagram& d);

struct SymmetricElement {
    BipartiteDiagram diagram;
    Superoperator op;  // sum_k Phi^lambda_{A,k} (x) phase_k Phi^{lambda*}_{B,k*}
};

class SymmetricBasis {
public:
    SymmetricBasis(ProcessModeBasis modes_a, ProcessModeBasis modes_b, std::vector<SymmetricElement> elements);

    const ProcessModeBasis& modes_a() const { return modes_a_; }
    const ProcessModeBasis& modes_b() const { return modes_b_; }
    const std::vector<SymmetricElement>& elements() const { return elements_; }
    RepSpec rep_in() const;
    RepSpec rep_out() const;
    int find(const BipartiteDiagram& d) const;
    const Superoperator& element(const BipartiteDiagram& d) const;

private:
    ProcessModeBasis modes_a_, modes_b_;
    std::vector<SymmetricElement> elements_;
};

SymmetricBasis build_symmetric_basis(const RepSpec& a_in, const RepSpec& a_out, const RepSpec& b_in,
                                     const RepSpec& b_out);

struct SymmetricDecomposition {
    std::vector<cplx> coefficients;  // aligned with basis elements
    double residual = 0.0;           // HS norm of the part outside the span
};

// c = <chi, S> / dim(lambda)
SymmetricDecomposition decompose_symmetric(const Superoperator& s, const SymmetricBasis& basis);
Superoperator reconstruct_symmetric(const std::vector<cplx>& c, const SymmetricBasis& basis);

// Rank of the numerical twirl projector on the joint superoperator space.
int twirl_projector_rank(const RepSpec& a_in, const RepSpec& a_out, const RepSpec& b_in, const RepSpec& b_out);

// For each element, the index of its dual diagram and the phase eta with
// hermitian_conjugate(chi_theta) = eta chi_{theta*}.
struct DualPairing {
    std::vector<int> dual_index;
    std::vector<cplx> eta;
    double defect = 0.0;
};
DualPairing dual_pairing(const SymmetricBasis& basis);

// ----- two-qubit catalogs -----

const SymmetricBasis& two_qubit_basis();
// Diagram from qubit mode labels (spins as integers 0/1/2).
BipartiteDiagram qubit_bipartite_diagram(int a_in, int a_out, int lambda, int b_in, int b_out);

struct BlochData {
    Eigen::Vector3d a, b;
    Eigen::Matrix3d t;
    // T_k = sum eps_{kij} T_ij
    Eigen::Vector3d t_vector() const;
};
BlochData bloch_data(const CMatrix& rho_ab);
CMatrix two_qubit_state(const BlochData& d);

// Both sides fully depolarised: rho -> tr(rho) I / 4.
Superoperator two_qubit_depolarizing();

// E0 + x Phi_1 + y Phi_2 + z Phi_3, Phi_i = s_i chi_i for the three diagrams feeding A.
Superoperator injection_channel(double x, double y, double z);
std::array<cplx, 3> injection_scales();
Eigen::Vector3d injection_bloch(double x, double y, double z, const BlochData& in);

struct InjectionCoords {
    double X, Y, Z;
};
InjectionCoords injection_coords(double x, double y, double z);
void injection_from_coords(double X, double Y, double Z, double& x, double& y, double& z);

struct RegionPoint {
    double x, y, z;
    double X, Y, Z;
    double min_choi_eig;
    bool cptp;
    bool analytic_inside;
};
// analytic_inside: X^2 + Z^2 <= Y and 2 + X - Y >= 0.
RegionPoint injection_region_test(double x, double y, double z);
// Uniform grid in (X, Y, Z) over a box enclosing the region.
std::vector<RegionPoint> injection_region_scan(int grid);

// Phi_0 + sum x_i Phi_{theta_i}, i = 4..8, Phi = s chi.
Superoperator relational_channel(const std::array<double, 5>& x);
std::array<cplx, 5> relational_scales();
// Swap-invariant family Phi_0 + x Phi_4 + y Phi_5 + z Phi_8.
Superoperator relational_swap_channel(double x, double y, double z);

struct RelationalPoint {
    double x, y, z;
    double min_choi_eig;
    bool cptp;
    // Listed boundary surfaces, each as lhs - rhs.
    std::array<double, 4> quartics;
};
RelationalPoint relational_region_test(double x, double y, double z);
std::vector<RelationalPoint> relational_region_scan(int grid);

Superoperator singlet_preparation();
Superoperator relational_e1();
Superoperator relational_e2();

// Bell projectors: phi+, phi-, psi+, psi-.
std::array<CMatrix, 4> bell_projectors();

// exp(i t (XX + YY + ZZ)) conjugation.
CMatrix heisenberg_matrix(double t);
Superoperator heisenberg_unitary(double t);

}  // namespace symmetria
