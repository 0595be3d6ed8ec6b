#pragma once

#include <symmetria/groups.hpp>

#include <vector>

namespace symmetria {

// One component T^{lambda,alpha}_k. ket_copy/bra_copy index rep.copies().
struct ITOElement {
    IrrepLabel lambda;
    int mult_index = 0;
    int k = 0;
    int ket_copy = 0;
    int bra_copy = 0;
    CMatrix matrix;
};

// Transformation law: U_g T_k U_g^dagger = sum_j D_{jk}(g) T_j.
class ITOBasis {
public:
    ITOBasis(RepSpec rep, std::vector<ITOElement> elements);

    const RepSpec& rep() const { return rep_; }
    const std::vector<ITOElement>& elements() const { return elements_; }
    // Distinct irreps in first-appearance order.
    std::vector<IrrepLabel> irreps() const;
    int multiplicity(const IrrepLabel& lambda) const;
    // Index of element (lambda, alpha, k), or -1.
    int find(const IrrepLabel& lambda, int alpha, int k) const;

private:
    RepSpec rep_;
    std::vector<ITOElement> elements_;
};

// Multiplets ordered by (bra copy, ket copy), then lambda, then k.
ITOBasis build_itos(const RepSpec& rep);

CMatrix state_mode_project(const CMatrix& rho, const ITOBasis& basis, const IrrepLabel& lambda);

// max over elements and nodes of || U T_k U^dagger - sum_j D_jk T_j ||.
double ito_covariance_residual(const ITOBasis& basis, const HaarQuadrature& quad);

}  // namespace symmetria
