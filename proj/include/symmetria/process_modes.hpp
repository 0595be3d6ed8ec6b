#pragma once

#include <symmetria/ito.hpp>

#include <compare>
#include <string>
#include <vector>

namespace symmetria {

// Input state-mode (a_in, in_mult) feeds output state-mode (a_out, out_mult)
// through irrep lambda. Multiplicities index the ITO bases of the two reps.
struct Diagram {
    IrrepLabel a_in;
    int in_mult = 0;
    IrrepLabel a_out;
    int out_mult = 0;
    IrrepLabel lambda;

    std::string to_string() const;
    auto operator<=>(const Diagram&) const = default;
};

struct ProcessMode {
    Diagram diagram;
    int k = 0;
    Superoperator op;
};

class ProcessModeBasis {
public:
    ProcessModeBasis(RepSpec rep_in, RepSpec rep_out, ITOBasis ito_in, ITOBasis ito_out,
                     std::vector<ProcessMode> modes);

    const RepSpec& rep_in() const { return rep_in_; }
    const RepSpec& rep_out() const { return rep_out_; }
    const ITOBasis& ito_in() const { return ito_in_; }
    const ITOBasis& ito_out() const { return ito_out_; }
    const std::vector<ProcessMode>& modes() const { return modes_; }
    std::vector<Diagram> diagrams() const;
    // Number of diagrams carrying lambda.
    int multiplicity(const IrrepLabel& lambda) const;
    int find(const Diagram& d, int k) const;
    const Superoperator& mode(const Diagram& d, int k) const;

private:
    RepSpec rep_in_, rep_out_;
    ITOBasis ito_in_, ito_out_;
    std::vector<ProcessMode> modes_;
};

// Phi(X) = sum C(a_out m; a_in* n | lambda k) phase(n) T^{a_out}_m tr(T^{a_in dagger}_{n*} X)
ProcessModeBasis build_canonical_modes(const RepSpec& rep_in, const RepSpec& rep_out);

// U' o S o U^dagger
Superoperator superop_group_action(const Superoperator& s, const GroupElement& g, const RepSpec& rep_in,
                                   const RepSpec& rep_out);

struct ModeCoefficient {
    Diagram diagram;
    int k = 0;
    cplx alpha;
};

struct ModeCoefficients {
    std::vector<ModeCoefficient> entries;
    double residual = 0.0;

    cplx get(const Diagram& d, int k) const;
    // Coefficient vector for one diagram, indexed by k.
    CVector vector(const Diagram& d) const;
};

ModeCoefficients decompose(const Superoperator& s, const ProcessModeBasis& basis);
Superoperator reconstruct(const ModeCoefficients& c, const ProcessModeBasis& basis);

// dim(lambda) sum_g w_g conj(chi_lambda(g)) U_g[S]. Throws if the quadrature
// bandlimit is below two_lambda plus the largest doubled spin of the mode space.
Superoperator project_isotypic(const Superoperator& s, const IrrepLabel& lambda, const HaarQuadrature& quad,
                               const RepSpec& rep_in, const RepSpec& rep_out);
Superoperator project_isotypic_basis(const Superoperator& s, const ProcessModeBasis& basis,
                                     const IrrepLabel& lambda);
Superoperator twirl(const Superoperator& s, const HaarQuadrature& quad, const RepSpec& rep_in,
                    const RepSpec& rep_out);

bool is_symmetric(const Superoperator& s, const ProcessModeBasis& basis, double tol = 1e-10);

// Largest doubled spin among the superoperator-space irreps.
int mode_space_max_two_j(const RepSpec& rep_in, const RepSpec& rep_out);

double mode_covariance_residual(const ProcessModeBasis& basis, const HaarQuadrature& quad);

}  // namespace symmetria
