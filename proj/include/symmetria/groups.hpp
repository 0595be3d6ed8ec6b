#pragma once

#include <symmetria/linalg.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace symmetria {

enum class GroupKind { SU2, ZN };

// Spin labels are stored doubled (two_j); Z_N charges reduced into [0, N).
class IrrepLabel {
public:
    static IrrepLabel su2(int two_j);
    static IrrepLabel zn(int charge, int modulus);

    GroupKind kind() const { return kind_; }
    int two_j() const { return two_j_; }
    int charge() const { return charge_; }
    int modulus() const { return modulus_; }
    int dim() const { return kind_ == GroupKind::SU2 ? two_j_ + 1 : 1; }
    bool is_trivial() const { return kind_ == GroupKind::SU2 ? two_j_ == 0 : charge_ == 0; }
    std::string to_string() const;

    auto operator<=>(const IrrepLabel&) const = default;

private:
    IrrepLabel(GroupKind k, int two_j, int charge, int modulus)
        : kind_(k), two_j_(two_j), charge_(charge), modulus_(modulus) {}

    GroupKind kind_;
    int two_j_;
    int charge_;
    int modulus_;
};

// SU(2): zyz Euler angles, D(g) = exp(-i a Jz) exp(-i b Jy) exp(-i c Jz).
class GroupElement {
public:
    static GroupElement su2(double alpha, double beta, double gamma);
    static GroupElement zn(int g, int modulus);
    static GroupElement identity(GroupKind kind, int modulus = 1);

    GroupKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    int g() const { return g_; }
    int modulus() const { return modulus_; }

private:
    GroupElement(GroupKind k, double a, double b, double c, int g, int n)
        : kind_(k), alpha_(a), beta_(b), gamma_(c), g_(g), modulus_(n) {}

    GroupKind kind_;
    double alpha_ = 0.0, beta_ = 0.0, gamma_ = 0.0;
    int g_ = 0;
    int modulus_ = 1;
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
// Euler angles of a 2x2 special unitary; gimbal cases use gamma = 0.
GroupElement su2_from_matrix(const CMatrix& u);

// Rows/columns ordered by m = j, j-1, ..., -j.
CMatrix wigner_D(const IrrepLabel& j, const GroupElement& g);
double wigner_small_d(int two_j, int two_m1, int two_m2, double beta);
cplx character(const IrrepLabel& j, const GroupElement& g);

// Condon-Shortley <j1 m1; j2 m2 | J M>, all arguments doubled.
double cgc(int two_j1, int two_j2, int two_J, int two_m1, int two_m2, int two_M);
double cgc(const IrrepLabel& j1, const IrrepLabel& j2, const IrrepLabel& J, int two_m1, int two_m2,
           int two_M);

// Group-generic coupling data indexed by component k (SU(2): m = j - k).
std::vector<IrrepLabel> coupling_series(const IrrepLabel& a, const IrrepLabel& b);
double coupling(const IrrepLabel& a, int ka, const IrrepLabel& b, int kb, const IrrepLabel& c, int kc);
IrrepLabel dual(const IrrepLabel& a);
// phase * <a, dual_index| transforms like |dual(a), k>.
int dual_index(const IrrepLabel& a, int k);
double dual_phase(const IrrepLabel& a, int k);

struct RepBlock {
    IrrepLabel irrep;
    int multiplicity = 1;
};

// Direct sum of irrep blocks in canonical order, optionally followed by a fixed
// unitary whose columns express canonical basis vectors in the physical basis.
class RepSpec {
public:
    struct Copy {
        IrrepLabel irrep;
        int block;
        int copy;
        int offset;
    };

    RepSpec(GroupKind kind, std::vector<RepBlock> blocks, std::optional<CMatrix> intertwiner = {});

    static RepSpec spin(int two_j);
    static RepSpec qubit() { return spin(1); }
    static RepSpec zn_charges(const std::vector<int>& charges, int modulus);
    static RepSpec trivial(GroupKind kind, int modulus = 1);

    GroupKind kind() const { return kind_; }
    int modulus() const { return modulus_; }
    int dim() const { return dim_; }
    const std::vector<RepBlock>& blocks() const { return blocks_; }
    const std::optional<CMatrix>& intertwiner() const { return intertwiner_; }
    const std::vector<Copy>& copies() const { return copies_; }
    int max_two_j() const;
    CMatrix basis_change() const;  // intertwiner or identity

private:
    GroupKind kind_;
    int modulus_ = 1;
    int dim_ = 0;
    std::vector<RepBlock> blocks_;
    std::optional<CMatrix> intertwiner_;
    std::vector<Copy> copies_;
};

RepSpec tensor_product(const RepSpec& a, const RepSpec& b);
CMatrix rep_matrix(const RepSpec& r, const GroupElement& g);
// SU(2): (Jx, Jy, Jz); Z_N: the charge operator.
std::vector<CMatrix> generators(const RepSpec& r);
std::vector<CMatrix> spin_matrices(int two_j);

struct QuadratureNode {
    GroupElement g;
    double weight;
};

struct HaarQuadrature {
    GroupKind kind;
    std::vector<QuadratureNode> nodes;
    // Largest doubled spin of a coupled integrand integrated exactly.
    int bandlimit;
};

HaarQuadrature haar_quadrature(GroupKind kind, int bandlimit, int modulus = 1);

// Nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace symmetria
