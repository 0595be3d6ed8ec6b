#include <symmetria/ito.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symmetria {

ITOBasis::ITOBasis(RepSpec rep, std::vector<ITOElement> elements)
    : rep_(std::move(rep)), elements_(std::move(elements)) {}

std::vector<IrrepLabel> ITOBasis::irreps() const {
    std::vector<IrrepLabel> out;
    for (const auto& e : elements_)
        if (std::find(out.begin(), out.end(), e.lambda) == out.end()) out.push_back(e.lambda);
    return out;
}

int ITOBasis::multiplicity(const IrrepLabel& lambda) const {
    int m = 0;
    for (const auto& e : elements_)
        if (e.lambda == lambda && e.k == 0) ++m;
    return m;
}

int ITOBasis::find(const IrrepLabel& lambda, int alpha, int k) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.lambda == lambda && e.mult_index == alpha && e.k == k) return static_cast<int>(i);
    }
    return -1;
}

ITOBasis build_itos(const RepSpec& rep) {
    const int d = rep.dim();
    const CMatrix w = rep.basis_change();
    const auto& copies = rep.copies();
    std::vector<ITOElement> out;
    std::map<IrrepLabel, int> counter;
    for (std::size_t q = 0; q < copies.size(); ++q) {
        const auto& bq = copies[q];
        const IrrepLabel b = bq.irrep;
        for (std::size_t p = 0; p < copies.size(); ++p) {
            const auto& cp = copies[p];
            const IrrepLabel a = cp.irrep;
            for (const auto& lambda : coupling_series(a, dual(b))) {
                const int alpha = counter[lambda]++;
                const std::size_t first = out.size();
                for (int k = 0; k < lambda.dim(); ++k) {
                    CMatrix t = CMatrix::Zero(d, d);
                    for (int k1 = 0; k1 < a.dim(); ++k1)
                        for (int k2 = 0; k2 < b.dim(); ++k2) {
                            const double c = coupling(a, k1, dual(b), k2, lambda, k);
                            if (c == 0.0) continue;
                            t(cp.offset + k1, bq.offset + dual_index(b, k2)) += c * dual_phase(b, k2);
                        }
                    out.push_back({lambda, alpha, k, static_cast<int>(p), static_cast<int>(q), w * t * w.adjoint()});
                }
                // Phase: first nonzero entry of the k = 0 component real positive.
                const CMatrix& t0 = out[first].matrix;
                cplx phase = 1.0;
                for (int r = 0; r < d && phase == cplx(1.0); ++r)
                    for (int c = 0; c < d; ++c)
                        if (std::abs(t0(r, c)) > 1e-12) {
                            phase = std::conj(t0(r, c)) / std::abs(t0(r, c));
                            break;
                        }
                for (std::size_t i = first; i < out.size(); ++i) out[i].matrix *= phase;
            }
        }
    }
    return ITOBasis(rep, std::move(out));
}

CMatrix state_mode_project(const CMatrix& rho, const ITOBasis& basis, const IrrepLabel& lambda) {
    if (rho.rows() != basis.rep().dim() || rho.cols() != basis.rep().dim())
        throw std::invalid_argument("state_mode_project: dimension mismatch");
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    bool found = false;
    for (const auto& e : basis.elements()) {
        if (e.lambda != lambda) continue;
        found = true;
        out += e.matrix * (e.matrix.adjoint() * rho).trace();
    }
    if (!found) throw std::invalid_argument("state_mode_project: irrep not present in basis");
    return out;
}

double ito_covariance_residual(const ITOBasis& basis, const HaarQuadrature& quad) {
    const auto& el = basis.elements();
    double worst = 0.0;
    for (const auto& node : quad.nodes) {
        const CMatrix u = rep_matrix(basis.rep(), node.g);
        std::map<IrrepLabel, CMatrix> dcache;
        for (const auto& e : el) {
            auto it = dcache.find(e.lambda);
            if (it == dcache.end()) it = dcache.emplace(e.lambda, wigner_D(e.lambda, node.g)).first;
            const CMatrix& dl = it->second;
            CMatrix rhs = CMatrix::Zero(u.rows(), u.cols());
            for (int j = 0; j < e.lambda.dim(); ++j)
                rhs += dl(j, e.k) * el[basis.find(e.lambda, e.mult_index, j)].matrix;
            worst = std::max(worst, (u * e.matrix * u.adjoint() - rhs).norm());
        }
    }
    return worst;
}

}  // namespace symmetria
