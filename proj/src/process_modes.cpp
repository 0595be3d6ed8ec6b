#include <symmetria/process_modes.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symmetria {

namespace {

void check_dims(const Superoperator& s, const RepSpec& rep_in, const RepSpec& rep_out) {
    if (s.dim_in() != rep_in.dim() || s.dim_out() != rep_out.dim())
        throw std::invalid_argument("superoperator dimensions do not match the representations");
}

}  // namespace

std::string Diagram::to_string() const {
    return "(" + a_in.to_string() + "#" + std::to_string(in_mult) + " -> " + a_out.to_string() + "#" +
           std::to_string(out_mult) + " : " + lambda.to_string() + ")";
}

ProcessModeBasis::ProcessModeBasis(RepSpec rep_in, RepSpec rep_out, ITOBasis ito_in, ITOBasis ito_out,
                                   std::vector<ProcessMode> modes)
    : rep_in_(std::move(rep_in)),
      rep_out_(std::move(rep_out)),
      ito_in_(std::move(ito_in)),
      ito_out_(std::move(ito_out)),
      modes_(std::move(modes)) {}

std::vector<Diagram> ProcessModeBasis::diagrams() const {
    std::vector<Diagram> out;
    for (const auto& m : modes_)
        if (m.k == 0) out.push_back(m.diagram);
    return out;
}

int ProcessModeBasis::multiplicity(const IrrepLabel& lambda) const {
    int n = 0;
    for (const auto& m : modes_)
        if (m.k == 0 && m.diagram.lambda == lambda) ++n;
    return n;
}

int ProcessModeBasis::find(const Diagram& d, int k) const {
    for (std::size_t i = 0; i < modes_.size(); ++i)
        if (modes_[i].k == k && modes_[i].diagram == d) return static_cast<int>(i);
    return -1;
}

const Superoperator& ProcessModeBasis::mode(const Diagram& d, int k) const {
    const int i = find(d, k);
    if (i < 0) throw std::invalid_argument("no such process mode: " + d.to_string());
    return modes_[i].op;
}

ProcessModeBasis build_canonical_modes(const RepSpec& rep_in, const RepSpec& rep_out) {
    if (rep_in.kind() != rep_out.kind() || rep_in.modulus() != rep_out.modulus())
        throw std::invalid_argument("build_canonical_modes: group mismatch");
    ITOBasis ito_in = build_itos(rep_in);
    ITOBasis ito_out = build_itos(rep_out);
    const int din = rep_in.dim(), dout = rep_out.dim();

    struct Multiplet {
        IrrepLabel irrep;
        int alpha;
        std::vector<CVector> vecs;  // vec(T_k)
    };
    auto multiplets = [](const ITOBasis& b) {
        std::vector<Multiplet> out;
        for (const auto& e : b.elements()) {
            if (e.k == 0) out.push_back({e.lambda, e.mult_index, {}});
            out.back().vecs.push_back(vec(e.matrix));
        }
        return out;
    };
    const auto mi = multiplets(ito_in);
    const auto mo = multiplets(ito_out);

    std::vector<ProcessMode> modes;
    for (const auto& in : mi)
        for (const auto& outm : mo) {
            const IrrepLabel a = in.irrep, at = outm.irrep;
            for (const auto& lambda : coupling_series(at, dual(a))) {
                const Diagram d{a, in.alpha, at, outm.alpha, lambda};
                for (int k = 0; k < lambda.dim(); ++k) {
                    CMatrix t = CMatrix::Zero(dout * dout, din * din);
                    for (int m = 0; m < at.dim(); ++m)
                        for (int n = 0; n < a.dim(); ++n) {
                            const double c = coupling(at, m, dual(a), n, lambda, k);
                            if (c == 0.0) continue;
                            t += (c * dual_phase(a, n)) * outm.vecs[m] * in.vecs[dual_index(a, n)].adjoint();
                        }
                    modes.push_back({d, k, Superoperator::from_transfer(std::move(t), din, dout)});
                }
            }
        }
    return ProcessModeBasis(rep_in, rep_out, std::move(ito_in), std::move(ito_out), std::move(modes));
}

Superoperator superop_group_action(const Superoperator& s, const GroupElement& g, const RepSpec& rep_in,
                                   const RepSpec& rep_out) {
    check_dims(s, rep_in, rep_out);
    const CMatrix u = rep_matrix(rep_in, g);
    const CMatrix v = rep_matrix(rep_out, g);
    const CMatrix lo = kron(v, v.conjugate());
    const CMatrix li = kron(u, u.conjugate());
    return Superoperator::from_transfer(lo * s.transfer() * li.adjoint(), s.dim_in(), s.dim_out());
}

cplx ModeCoefficients::get(const Diagram& d, int k) const {
    for (const auto& e : entries)
        if (e.k == k && e.diagram == d) return e.alpha;
    throw std::invalid_argument("no coefficient for " + d.to_string());
}

CVector ModeCoefficients::vector(const Diagram& d) const {
    CVector v = CVector::Zero(d.lambda.dim());
    for (const auto& e : entries)
        if (e.diagram == d) v(e.k) = e.alpha;
    return v;
}

ModeCoefficients decompose(const Superoperator& s, const ProcessModeBasis& basis) {
    check_dims(s, basis.rep_in(), basis.rep_out());
    ModeCoefficients c;
    for (const auto& m : basis.modes()) c.entries.push_back({m.diagram, m.k, hs_inner(m.op, s)});
    c.residual = hs_norm(s - reconstruct(c, basis));
    return c;
}

Superoperator reconstruct(const ModeCoefficients& c, const ProcessModeBasis& basis) {
    const int din = basis.rep_in().dim(), dout = basis.rep_out().dim();
    CMatrix t = CMatrix::Zero(dout * dout, din * din);
    const auto& modes = basis.modes();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& e = c.entries[i];
        if (e.alpha == cplx(0.0)) continue;
        const bool aligned = i < modes.size() && modes[i].k == e.k && modes[i].diagram == e.diagram;
        t += e.alpha * (aligned ? modes[i].op : basis.mode(e.diagram, e.k)).transfer();
    }
    return Superoperator::from_transfer(std::move(t), din, dout);
}

int mode_space_max_two_j(const RepSpec& rep_in, const RepSpec& rep_out) {
    if (rep_in.kind() == GroupKind::ZN) return 0;
    return 2 * rep_in.max_two_j() + 2 * rep_out.max_two_j();
}

Superoperator project_isotypic(const Superoperator& s, const IrrepLabel& lambda, const HaarQuadrature& quad,
                               const RepSpec& rep_in, const RepSpec& rep_out) {
    check_dims(s, rep_in, rep_out);
    if (quad.kind != lambda.kind()) throw std::invalid_argument("project_isotypic: group mismatch");
    if (quad.kind == GroupKind::SU2 && quad.bandlimit < lambda.two_j() + mode_space_max_two_j(rep_in, rep_out))
        throw std::invalid_argument("project_isotypic: quadrature bandlimit too small");
    Superoperator acc = Superoperator::zero(s.dim_in(), s.dim_out());
    for (const auto& node : quad.nodes) {
        const cplx w = node.weight * static_cast<double>(lambda.dim()) * std::conj(character(lambda, node.g));
        acc += w * superop_group_action(s, node.g, rep_in, rep_out);
    }
    return acc;
}

Superoperator project_isotypic_basis(const Superoperator& s, const ProcessModeBasis& basis,
                                     const IrrepLabel& lambda) {
    check_dims(s, basis.rep_in(), basis.rep_out());
    const int din = s.dim_in(), dout = s.dim_out();
    CMatrix t = CMatrix::Zero(dout * dout, din * din);
    for (const auto& m : basis.modes())
        if (m.diagram.lambda == lambda) t += hs_inner(m.op, s) * m.op.transfer();
    return Superoperator::from_transfer(std::move(t), din, dout);
}

Superoperator twirl(const Superoperator& s, const HaarQuadrature& quad, const RepSpec& rep_in,
                    const RepSpec& rep_out) {
    const IrrepLabel triv =
        quad.kind == GroupKind::SU2 ? IrrepLabel::su2(0) : IrrepLabel::zn(0, rep_in.modulus());
    return project_isotypic(s, triv, quad, rep_in, rep_out);
}

bool is_symmetric(const Superoperator& s, const ProcessModeBasis& basis, double tol) {
    const auto c = decompose(s, basis);
    for (const auto& e : c.entries)
        if (!e.diagram.lambda.is_trivial() && std::abs(e.alpha) > tol) return false;
    return true;
}

double mode_covariance_residual(const ProcessModeBasis& basis, const HaarQuadrature& quad) {
    const auto& modes = basis.modes();
    // Index of the k = 0 member of each mode's diagram; members are contiguous.
    std::vector<std::size_t> head(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) head[i] = modes[i].k == 0 ? i : head[i - 1];
    const int di = basis.rep_in().dim(), d_o = basis.rep_out().dim();
    double worst = 0.0;
    for (const auto& node : quad.nodes) {
        const CMatrix u = rep_matrix(basis.rep_in(), node.g);
        const CMatrix v = rep_matrix(basis.rep_out(), node.g);
        const CMatrix uc = u.conjugate(), ut = u.transpose(), vd = v.adjoint();
        std::map<IrrepLabel, CMatrix> dcache;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const auto& m = modes[i];
            auto it = dcache.find(m.diagram.lambda);
            if (it == dcache.end()) it = dcache.emplace(m.diagram.lambda, wigner_D(m.diagram.lambda, node.g)).first;
            const CMatrix& k = m.op.transfer();
            // rows: K li, row r as a d_i x d_i matrix R -> conj(u) R u^T
            CMatrix right(k.rows(), k.cols());
            for (int r = 0; r < k.rows(); ++r) {
                const CMatrix rm = unvec(k.row(r).transpose(), di, di);
                right.row(r) = vec(uc * rm * ut).transpose();
            }
            // columns: lo X, column as a d_o x d_o matrix M -> v M v^dagger
            CMatrix act(k.rows(), k.cols());
            for (int c = 0; c < k.cols(); ++c) act.col(c) = vec(v * unvec(right.col(c), d_o, d_o) * vd);
            for (int j = 0; j < m.diagram.lambda.dim(); ++j) act -= it->second(j, m.k) * modes[head[i] + j].op.transfer();
            worst = std::max(worst, act.norm());
        }
    }
    return worst;
}

}  // namespace symmetria
