#include <symmetria/repeatability.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symmetria {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

cplx omega_pow(long long e, int D) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(((e % D) + D) % D) / D;
    return {std::cos(t), std::sin(t)};
}

void check_state(const CMatrix& sigma, int D) {
    if (sigma.rows() != D || sigma.cols() != D) throw std::invalid_argument("reference state has wrong dimension");
    if ((sigma - sigma.adjoint()).norm() > 1e-10) throw std::invalid_argument("reference state not hermitian");
    if (std::abs(sigma.trace() - 1.0) > 1e-10) throw std::invalid_argument("reference state not unit trace");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (sigma + sigma.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) throw std::invalid_argument("reference state not PSD");
}

CMatrix basis_op(int d, int i, int j) {
    CMatrix m = CMatrix::Zero(d, d);
    m(i, j) = 1.0;
    return m;
}

// Transfer matrix of a linear map given its action on matrix units.
template <class F>
Superoperator map_from_units(int d_in, int d_out, F&& f) {
    CMatrix t(d_out * d_out, d_in * d_in);
    for (int c = 0; c < d_in; ++c)
        for (int e = 0; e < d_in; ++e) t.col(c * d_in + e) = vec(f(basis_op(d_in, c, e)));
    return Superoperator::from_transfer(t, d_in, d_out);
}

std::vector<CMatrix> spanning_states(int D) {
    std::vector<CMatrix> out;
    out.reserve(static_cast<std::size_t>(D) * D);
    for (int i = 0; i < D; ++i) out.push_back(basis_op(D, i, i));
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j) {
            CVector v = CVector::Zero(D), w = CVector::Zero(D);
            v(i) = r, v(j) = r;
            w(i) = r, w(j) = cplx(0, r);
            out.push_back(v * v.adjoint());
            out.push_back(w * w.adjoint());
        }
    return out;
}

}  // namespace

LadderRef make_ladder(int D) {
    if (D < 1) throw std::invalid_argument("make_ladder: D must be positive");
    LadderRef l{D, CMatrix::Zero(D, D)};
    for (int n = 0; n < D; ++n) l.shift(mod(n + 1, D), n) = 1.0;
    return l;
}

CMatrix shift_power(const LadderRef& l, int k) {
    CMatrix m = CMatrix::Zero(l.D, l.D);
    for (int n = 0; n < l.D; ++n) m(mod(n + k, l.D), n) = 1.0;
    return m;
}

CVector frame_state(int D, int r) {
    CVector v(D);
    for (int n = 0; n < D; ++n) v(n) = omega_pow(-static_cast<long long>(n) * r, D) / std::sqrt(double(D));
    return v;
}

CMatrix frame_observable(int D) {
    CMatrix m = CMatrix::Zero(D, D);
    for (int r = 0; r < D; ++r) {
        const CVector v = frame_state(D, r);
        m += (2.0 * std::numbers::pi * r / D) * v * v.adjoint();
    }
    return m;
}

CMatrix ladder_action(int D, int g) {
    CMatrix m = CMatrix::Zero(D, D);
    for (int n = 0; n < D; ++n) m(n, n) = omega_pow(static_cast<long long>(g) * n, D);
    return m;
}

CMatrix system_action(int dim_a, int D, int g) {
    CMatrix m = CMatrix::Zero(dim_a, dim_a);
    for (int n = 0; n < dim_a; ++n) m(n, n) = omega_pow(static_cast<long long>(g) * n, D);
    return m;
}

std::vector<cplx> shift_profile(const LadderRef& l, const CMatrix& sigma) {
    std::vector<cplx> c(l.D);
    // tr(Delta^k sigma) = sum_n sigma(n, n + k)
    for (int k = 0; k < l.D; ++k) {
        cplx acc = 0.0;
        for (int n = 0; n < l.D; ++n) acc += sigma(n, mod(n + k, l.D));
        c[k] = acc;
    }
    return c;
}

RepSpec protocol_rep(const Protocol& p) {
    std::vector<int> charges(p.dim_a);
    for (int m = 0; m < p.dim_a; ++m) charges[m] = m;
    return RepSpec::zn_charges(charges, p.ladder.D);
}

Protocol build_protocol(const CMatrix& u, int D) {
    if (u.rows() != u.cols()) throw std::invalid_argument("build_protocol: target not square");
    if (!is_unitary(u, 1e-10)) throw std::invalid_argument("build_protocol: target not unitary");
    const int d = static_cast<int>(u.rows());
    if (D < d) throw std::invalid_argument("build_protocol: ladder dimension below system dimension");
    Protocol p;
    p.target = u;
    p.ladder = make_ladder(D);
    p.dim_a = d;
    p.interaction = CMatrix::Zero(d * D, d * D);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            if (u(m, n) == cplx(0.0)) continue;
            p.interaction += u(m, n) * kron(basis_op(d, m, n), shift_power(p.ladder, n - m));
        }
    p.unitarity_defect =
        (p.interaction.adjoint() * p.interaction - CMatrix::Identity(d * D, d * D)).cwiseAbs().maxCoeff();
    for (int g = 0; g < D; ++g) {
        const CMatrix w = kron(system_action(d, D, g), ladder_action(D, g));
        p.symmetry_defect = std::max(p.symmetry_defect, (p.interaction * w - w * p.interaction).norm());
    }
    return p;
}

Superoperator induced_channel(const Protocol& p, const CMatrix& sigma) {
    check_state(sigma, p.ladder.D);
    const int d = p.dim_a, D = p.ladder.D;
    const CMatrix& v = p.interaction;
    return map_from_units(d, d, [&](const CMatrix& x) {
        return partial_trace(v * kron(x, sigma) * v.adjoint(), {d, D}, 1);
    });
}

Superoperator induced_channel_closed_form(const Protocol& p, const CMatrix& sigma) {
    check_state(sigma, p.ladder.D);
    const int d = p.dim_a;
    const auto c = shift_profile(p.ladder, sigma);
    const CMatrix& u = p.target;
    CMatrix t = CMatrix::Zero(d * d, d * d);
    for (int m = 0; m < d; ++m)
        for (int mp = 0; mp < d; ++mp)
            for (int n = 0; n < d; ++n)
                for (int np = 0; np < d; ++np)
                    t(m * d + mp, n * d + np) =
                        u(m, n) * std::conj(u(mp, np)) * c[mod((n - np) - (m - mp), p.ladder.D)];
    return Superoperator::from_transfer(t, d, d);
}

CMatrix reference_update(const Protocol& p, const CMatrix& rho, const CMatrix& sigma) {
    const CMatrix& v = p.interaction;
    return partial_trace(v * kron(rho, sigma) * v.adjoint(), {p.dim_a, p.ladder.D}, 0);
}

SequentialResult sequential_use(const Protocol& p, const CMatrix& sigma, const std::vector<CMatrix>& inputs,
                                int max_full_dim) {
    if (inputs.empty()) throw std::invalid_argument("sequential_use: need at least one round");
    const int d = p.dim_a, D = p.ladder.D;
    for (const auto& r : inputs)
        if (r.rows() != d || r.cols() != d) throw std::invalid_argument("sequential_use: input dimension");
    SequentialResult out;
    const bool pure = std::abs((sigma * sigma).trace().real() - 1.0) < 1e-12;
    CVector psi;
    if (pure) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma);
        psi = es.eigenvectors().col(D - 1);
    }
    CMatrix s = sigma;
    for (const auto& rho : inputs) {
        out.channels.push_back(induced_channel(p, s));
        s = reference_update(p, rho, s);
        out.references.push_back(s);
        out.round_distances.push_back(choi_distance(out.channels.back(), out.channels.front()));
        out.reference_fidelities.push_back(pure ? (psi.adjoint() * s * psi)(0, 0).real() : -1.0);
    }
    if (inputs.size() >= 2 && d * d * D <= max_full_dim) {
        // joint unitary on A_1 (x) A_2 (x) B
        CMatrix v1 = CMatrix::Zero(d * d * D, d * d * D);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
                if (p.target(m, n) != cplx(0.0))
                    v1 += p.target(m, n) *
                          kron_all({basis_op(d, m, n), CMatrix::Identity(d, d), shift_power(p.ladder, n - m)});
        const CMatrix v2 = kron(CMatrix::Identity(d, d), p.interaction);
        const CMatrix w = v2 * v1;
        auto second = map_from_units(d, d, [&](const CMatrix& x) {
            const CMatrix joint = w * kron_all({inputs[0], x, sigma}) * w.adjoint();
            return partial_trace(partial_trace(joint, {d, d, D}, 2), {d, d}, 0);
        });
        out.full_tensor_defect = choi_distance(second, out.channels[1]);
    }
    return out;
}

MeasurePrepare measure_prepare_form(const Protocol& p, const ProcessModeBasis& basis) {
    const int d = p.dim_a, D = p.ladder.D;
    if (D < 2 * d) throw std::invalid_argument("measure_prepare_form: ladder needs D >= 2 dim_a");
    MeasurePrepare mp;
    mp.diagrams = basis.diagrams();
    const auto states = spanning_states(D);
    const int ns = static_cast<int>(states.size());
    const int nd = static_cast<int>(mp.diagrams.size());
    CMatrix a(ns, D * D);
    CMatrix rhs(ns, nd);
    for (int s = 0; s < ns; ++s) {
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) a(s, i * D + j) = states[s](j, i);
        const auto coeffs = decompose(induced_channel(p, states[s]), basis);
        for (int k = 0; k < nd; ++k) rhs(s, k) = coeffs.get(mp.diagrams[k], 0);
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(a);
    if (qr.rank() < D * D) throw std::runtime_error("measure_prepare_form: spanning family degenerate");
    const CMatrix sol = qr.solve(rhs);
    mp.solve_residual = (a * sol - rhs).norm();

    const CMatrix frame0 = frame_state(D, 0) * frame_state(D, 0).adjoint();
    const auto c0 = decompose(induced_channel(p, frame0), basis);
    const CMatrix phi = frame_observable(D);
    for (int k = 0; k < nd; ++k) {
        CMatrix x(D, D);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) x(i, j) = sol(i * D + j, k);
        const cplx a0 = c0.get(mp.diagrams[k], 0);
        const int lambda = mp.diagrams[k].lambda.charge();
        mp.x_defect = std::max(mp.x_defect, (x - a0 * shift_power(p.ladder, -lambda)).cwiseAbs().maxCoeff());
        mp.commutator = std::max(mp.commutator, (x * phi - phi * x).norm());
        mp.x_ops.push_back(std::move(x));
        mp.alpha0.push_back(a0);
    }

    for (int r = 0; r < D; ++r) {
        const CVector v = frame_state(D, r);
        mp.povm.push_back(v * v.adjoint());
        const CMatrix ur = system_action(d, D, r);
        mp.maps.push_back(unitary_channel(ur.adjoint() * p.target * ur));
    }
    for (const auto& st : states) {
        Superoperator sum = Superoperator::zero(d, d);
        for (int r = 0; r < D; ++r) sum += (mp.povm[r] * st).trace() * mp.maps[r];
        mp.form_defect = std::max(mp.form_defect, choi_distance(sum, induced_channel(p, st)));
    }
    return mp;
}

BroadcastReport broadcast_check(const Protocol& p, const std::vector<CMatrix>& sigmas,
                                const std::vector<CMatrix>& inputs, double tol) {
    BroadcastReport rep;
    const int D = p.ladder.D;
    for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k) {
            const CMatrix a = shift_power(p.ladder, j), b = shift_power(p.ladder, k);
            rep.shift_commutator = std::max(rep.shift_commutator, (a * b - b * a).cwiseAbs().maxCoeff());
        }
    for (const auto& s : sigmas) {
        const auto c0 = shift_profile(p.ladder, s);
        const auto seq = sequential_use(p, s, inputs, 0);
        for (const auto& ref : seq.references) {
            const auto c = shift_profile(p.ladder, ref);
            for (int k = 0; k < D; ++k) rep.profile_change = std::max(rep.profile_change, std::abs(c[k] - c0[k]));
        }
        for (double x : seq.round_distances) rep.channel_spread = std::max(rep.channel_spread, x);
    }
    rep.ok = rep.shift_commutator == 0.0 && rep.profile_change <= tol && rep.channel_spread <= tol;
    return rep;
}

}  // namespace symmetria
