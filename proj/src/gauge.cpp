#include <symmetria/gauge.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symmetria {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

cplx omega_pow(long long e, int N) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(((e % N) + N) % N) / N;
    return {std::cos(t), std::sin(t)};
}

// Column j of w is w_j e_{perm_j}; false if w is not of that form.
bool monomial_form(const CMatrix& w, std::vector<int>& perm, std::vector<cplx>& ph) {
    const int n = static_cast<int>(w.rows());
    perm.assign(n, -1);
    ph.assign(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (w(i, j) == cplx(0.0)) continue;
            if (perm[j] >= 0) return false;
            perm[j] = i;
            ph[j] = w(i, j);
        }
    return std::find(perm.begin(), perm.end(), -1) == perm.end();
}

// S -> W S W^dagger on transfer matrices
Superoperator conjugate_superop(const Superoperator& s, const CMatrix& w_out, const CMatrix& w_in) {
    std::vector<int> po, pi;
    std::vector<cplx> fo, fi;
    if (monomial_form(w_out, po, fo) && monomial_form(w_in, pi, fi)) {
        const int o = s.dim_out(), n = s.dim_in();
        const CMatrix& k = s.transfer();
        CMatrix out(o * o, n * n);
        for (int c = 0; c < n * n; ++c) {
            const int c1 = c / n, c2 = c % n;
            const int cc = pi[c1] * n + pi[c2];
            const cplx lc = std::conj(fi[c1] * std::conj(fi[c2]));
            for (int r = 0; r < o * o; ++r) {
                const int r1 = r / o, r2 = r % o;
                out(po[r1] * o + po[r2], cc) = fo[r1] * std::conj(fo[r2]) * k(r, c) * lc;
            }
        }
        return Superoperator::from_transfer(out, n, o);
    }
    const CMatrix lo = kron(w_out, w_out.conjugate());
    const CMatrix li = kron(w_in, w_in.conjugate());
    return Superoperator::from_transfer(lo * s.transfer() * li.adjoint(), s.dim_in(), s.dim_out());
}

CMatrix zn_rep(const RepSpec& r, int g) { return rep_matrix(r, GroupElement::zn(g, r.modulus())); }

void check_zn(const RepSpec& r, int N) {
    if (r.kind() != GroupKind::ZN || r.modulus() != N)
        throw std::invalid_argument("gauge: site rep must be Z_N with the link modulus");
}

Superoperator link_projection(int N, int h) {
    CMatrix p = CMatrix::Zero(N, N);
    p(mod(h, N), mod(h, N)) = 1.0;
    return kraus_channel({p}, N, N);
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

CMatrix link_action(const LinkFrame& frame, int g_x, int g_y) {
    CMatrix m = CMatrix::Zero(frame.N, frame.N);
    for (int h = 0; h < frame.N; ++h) m(mod(h + g_x - g_y, frame.N), h) = 1.0;
    return m;
}

GaugeCoupling gauge_coupling(int lambda, int N) {
    if (N < 2) throw std::invalid_argument("gauge_coupling: N must be at least 2");
    GaugeCoupling c{mod(lambda, N), N, CMatrix::Zero(N, N), Superoperator::zero(N, N)};
    for (int h = 0; h < N; ++h) c.link_op(h, h) = omega_pow(static_cast<long long>(c.lambda) * h, N);
    c.op = choi_of({{c.link_op, CMatrix::Identity(N, N)}}, N, N);
    return c;
}

double coupling_covariance_residual(const GaugeCoupling& c) {
    double r = 0.0;
    const LinkFrame f{c.N, 0, 1};
    for (int gx = 0; gx < c.N; ++gx)
        for (int gy = 0; gy < c.N; ++gy) {
            const CMatrix w = link_action(f, gx, gy);
            const Superoperator t = conjugate_superop(c.op, w, w);
            const cplx ph = omega_pow(-static_cast<long long>(c.lambda) * gx + static_cast<long long>(c.lambda) * gy, c.N);
            r = std::max(r, hs_norm(t - ph * c.op));
        }
    return r;
}

Superoperator pair_action(const Superoperator& chi, const RepSpec& x, const RepSpec& y, int g_x, int g_y) {
    const CMatrix w = kron(zn_rep(x, g_x), zn_rep(y, g_y));
    return conjugate_superop(chi, w, w);
}

Superoperator diagonal_twirl(const Superoperator& s, const RepSpec& x, const RepSpec& y) {
    check_zn(y, x.modulus());
    const int N = x.modulus();
    Superoperator acc = Superoperator::zero(s.dim_in(), s.dim_out());
    for (int g = 0; g < N; ++g) acc += pair_action(s, x, y, g, g);
    return acc * cplx(1.0 / N);
}

CMatrix local_unitary(const GaugedProcess& p, int g_x, int g_y) {
    return kron_all({zn_rep(p.site_x, g_x), link_action(p.link, g_x, g_y), zn_rep(p.site_y, g_y)});
}

Superoperator local_action(const GaugedProcess& p, int g_x, int g_y) {
    const CMatrix w = local_unitary(p, g_x, g_y);
    return conjugate_superop(p.op, w, w);
}

double local_invariance_residual(const GaugedProcess& p) {
    double r = 0.0;
    for (int gx = 0; gx < p.link.N; ++gx)
        for (int gy = 0; gy < p.link.N; ++gy) r = std::max(r, hs_norm(local_action(p, gx, gy) - p.op));
    return r;
}

GaugedProcess gauge_2symmetric(const Superoperator& chi, std::optional<int> lambda, const LinkFrame& frame,
                               const ProcessModeBasis& modes_x, const ProcessModeBasis& modes_y) {
    const int N = frame.N;
    check_zn(modes_x.rep_in(), N);
    check_zn(modes_y.rep_in(), N);
    const RepSpec& rx = modes_x.rep_in();
    const RepSpec& ry = modes_y.rep_in();
    if (chi.dim_in() != rx.dim() * ry.dim() || chi.dim_out() != modes_x.rep_out().dim() * modes_y.rep_out().dim())
        throw std::invalid_argument("gauge_2symmetric: dimension mismatch");
    const int dx = modes_x.rep_out().dim(), dy = modes_y.rep_out().dim();
    const double scale = std::max(1.0, hs_norm(chi));
    for (int g = 0; g < N; ++g)
        if (hs_norm(conjugate_superop(chi, kron(zn_rep(modes_x.rep_out(), g), zn_rep(modes_y.rep_out(), g)),
                                      kron(zn_rep(rx, g), zn_rep(ry, g))) -
                    chi) > 1e-10 * scale)
            throw std::invalid_argument("gauge_2symmetric: element is not globally symmetric");

    std::vector<GaugeCoupling> couplings;
    for (int q = 0; q < N; ++q) couplings.push_back(gauge_coupling(q, N));

    Superoperator rebuilt = Superoperator::zero(chi.dim_in(), chi.dim_out());
    Superoperator gauged = Superoperator::zero(rx.dim() * N * ry.dim(), dx * N * dy);
    for (const auto& mx : modes_x.modes())
        for (const auto& my : modes_y.modes()) {
            const Superoperator prod = tensor(mx.op, my.op);
            const cplx c = hs_inner(prod, chi) / hs_inner(prod, prod);
            if (std::abs(c) < 1e-14 * scale) continue;
            const int qx = mx.diagram.lambda.charge(), qy = my.diagram.lambda.charge();
            if (mod(qx + qy, N) != 0) throw std::invalid_argument("gauge_2symmetric: term breaks global symmetry");
            if (lambda && mod(*lambda, N) != qx)
                throw std::invalid_argument("gauge_2symmetric: term charge differs from lambda");
            rebuilt += c * prod;
            gauged += c * tensor(tensor(mx.op, couplings[qx].op), my.op);
        }
    if (hs_norm(rebuilt - chi) > 1e-10 * scale)
        throw std::invalid_argument("gauge_2symmetric: mode bases do not span the element");
    return GaugedProcess{rx, ry, frame, gauged};
}

Superoperator gauge_fix(const GaugedProcess& p, int h1, int h2) {
    const int dix = p.site_x.dim(), diy = p.site_y.dim();
    const int N = p.link.N;
    const int dox = p.op.dim_out() / (N * diy);
    auto embed = [&](int dx, int dy, int h) {
        return tensor(tensor(identity_channel(dx), link_projection(N, h)), identity_channel(dy));
    };
    return compose(embed(dox, diy, h2), compose(p.op, embed(dix, diy, h1)));
}

GaugeFixReport gauge_fix_report(const GaugedProcess& p, int h1, int h2, double tol) {
    GaugeFixReport rep;
    const int N = p.link.N;
    const Superoperator base = gauge_fix(p, h1, h2);
    std::vector<Superoperator> shifted;
    for (int d = 0; d < N; ++d) shifted.push_back(gauge_fix(p, h1 + d, h2 + d));
    rep.norm = hs_norm(base);
    rep.vanishes = rep.norm <= tol;
    for (int gx = 0; gx < N; ++gx)
        for (int gy = 0; gy < N; ++gy) {
            const CMatrix w = local_unitary(p, gx, gy);
            const Superoperator t = conjugate_superop(base, w, w);
            rep.transformation_defect =
                std::max(rep.transformation_defect, hs_norm(t - shifted[mod(gx - gy, N)]));
            if (hs_norm(t - base) <= tol) rep.stabilizer.emplace_back(gx, gy);
        }
    return rep;
}

Superoperator reduce_with_link(const GaugedProcess& p, int h) {
    const int N = p.link.N;
    const int dx = p.site_x.dim(), dy = p.site_y.dim();
    const int ox = p.op.dim_out() / (N * dy);
    const int din = dx * dy, dout = ox * dy;
    const int hh = mod(h, N);
    CMatrix t(dout * dout, din * din);
    for (int c = 0; c < din; ++c)
        for (int e = 0; e < din; ++e) {
            CMatrix big = CMatrix::Zero(dx * N * dy, dx * N * dy);
            const int row = ((c / dy) * N + hh) * dy + c % dy;
            const int col = ((e / dy) * N + hh) * dy + e % dy;
            big(row, col) = 1.0;
            const CMatrix out = apply(p.op, big);
            CMatrix red = CMatrix::Zero(dout, dout);
            for (int a = 0; a < dout; ++a)
                for (int b = 0; b < dout; ++b)
                    for (int l = 0; l < N; ++l)
                        red(a, b) += out(((a / dy) * N + l) * dy + a % dy, ((b / dy) * N + l) * dy + b % dy);
            t.col(c * din + e) = vec(red);
        }
    return Superoperator::from_transfer(t, din, dout);
}

// ----- lattice -----

CMatrix MonomialOp::apply(const CMatrix& v) const {
    CMatrix out = CMatrix::Zero(v.rows(), v.cols());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) out.row(perm[i]) = phase[i] * v.row(i);
    return out;
}

CMatrix MonomialOp::conjugate(const CMatrix& rho) const {
    const int n = static_cast<int>(perm.size());
    CMatrix out(n, n);
    for (int j = 0; j < n; ++j) {
        const cplx pj = std::conj(phase[j]);
        for (int i = 0; i < n; ++i) out(perm[i], perm[j]) = phase[i] * rho(i, j) * pj;
    }
    return out;
}

SparseC MonomialOp::matrix() const {
    const int n = static_cast<int>(perm.size());
    std::vector<Eigen::Triplet<cplx>> t;
    t.reserve(n);
    for (int i = 0; i < n; ++i) t.emplace_back(perm[i], i, phase[i]);
    SparseC m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

namespace {

struct Layout {
    int n_sites, n_links, N;
    // digit value of site s (0/1) or link l (0..N-1)
    int site(int idx, int s) const { return (idx / site_stride(s)) % 2; }
    int link(int idx, int l) const { return (idx / link_stride(l)) % N; }
    int link_stride(int l) const {
        int s = 1;
        for (int k = l + 1; k < n_links; ++k) s *= N;
        return s;
    }
    int site_stride(int s) const {
        int r = 1;
        for (int k = 0; k < n_links; ++k) r *= N;
        for (int k = s + 1; k < n_sites; ++k) r *= 2;
        return r;
    }
};

SparseC from_triplets(int n, std::vector<Eigen::Triplet<cplx>>& t) {
    SparseC m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    m.prune(cplx(0.0));
    return m;
}

SparseC build_hamiltonian(const GaugedLattice& lat, const Layout& lay, bool gauged) {
    std::vector<Eigen::Triplet<cplx>> t;
    for (int idx = 0; idx < lat.dim; ++idx) {
        int occ = 0;
        for (int s = 0; s < lat.n_sites; ++s) occ += lay.site(idx, s);
        if (occ) t.emplace_back(idx, idx, double(occ));
        for (int l = 0; l < static_cast<int>(lat.links.size()); ++l) {
            const auto& lk = lat.links[l];
            // a^dagger(x) L a(y): y occupied, x empty
            if (lay.site(idx, lk.x) == 0 && lay.site(idx, lk.y) == 1) {
                const int to = idx + lay.site_stride(lk.x) - lay.site_stride(lk.y);
                const cplx amp = gauged ? omega_pow(lay.link(idx, l), lat.N) : cplx(1.0);
                t.emplace_back(to, idx, amp);
                t.emplace_back(idx, to, std::conj(amp));
            }
        }
    }
    return from_triplets(lat.dim, t);
}

}  // namespace

MonomialOp lattice_local_action(const GaugedLattice& lat, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != lat.n_sites) throw std::invalid_argument("lattice_local_action: tuple size");
    const Layout lay{lat.n_sites, static_cast<int>(lat.links.size()), lat.N};
    MonomialOp op{std::vector<int>(lat.dim), std::vector<cplx>(lat.dim)};
    for (int idx = 0; idx < lat.dim; ++idx) {
        long long e = 0;
        for (int s = 0; s < lat.n_sites; ++s) e += static_cast<long long>(g[s]) * lay.site(idx, s);
        int to = idx;
        for (int l = 0; l < lay.n_links; ++l) {
            const int h = lay.link(idx, l);
            const int hn = mod(h + g[lat.links[l].x] - g[lat.links[l].y], lat.N);
            to += (hn - h) * lay.link_stride(l);
        }
        op.perm[idx] = to;
        op.phase[idx] = omega_pow(e, lat.N);
    }
    return op;
}

MonomialOp gauss_monomial(const GaugedLattice& lat, int site, int g) {
    std::vector<int> gs(lat.n_sites, 0);
    gs.at(site) = g;
    return lattice_local_action(lat, gs);
}

std::vector<MonomialOp> lattice_local_actions(const GaugedLattice& lat) {
    std::vector<MonomialOp> out;
    std::vector<int> g(lat.n_sites, 0);
    while (true) {
        out.push_back(lattice_local_action(lat, g));
        int k = lat.n_sites - 1;
        while (k >= 0 && ++g[k] == lat.N) g[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

GaugedLattice build_gauged_lattice(int Lx, int Ly, int N) {
    if (Lx < 1 || Ly < 1 || Lx * Ly > 4 || N < 2 || N > 4)
        throw std::invalid_argument("build_gauged_lattice: size guard (Lx Ly <= 4, 2 <= N <= 4)");
    GaugedLattice lat;
    lat.Lx = Lx, lat.Ly = Ly, lat.N = N;
    lat.n_sites = Lx * Ly;
    auto site = [Lx](int ix, int iy) { return iy * Lx + ix; };
    auto find_link = [&lat](int a, int b) {
        for (int i = 0; i < static_cast<int>(lat.links.size()); ++i)
            if ((lat.links[i].x == a && lat.links[i].y == b) || (lat.links[i].x == b && lat.links[i].y == a))
                return i;
        return -1;
    };
    // periodic neighbours; on extent 2 the wrap-around bond coincides with the direct one
    for (int iy = 0; iy < Ly; ++iy)
        for (int ix = 0; ix < Lx; ++ix) {
            const int s = site(ix, iy);
            for (int nb : {site((ix + 1) % Lx, iy), site(ix, (iy + 1) % Ly)})
                if (nb != s && find_link(s, nb) < 0) lat.links.push_back({N, s, nb});
        }
    if (Lx == 2 && Ly == 2) {
        const int s00 = site(0, 0), s10 = site(1, 0), s01 = site(0, 1), s11 = site(1, 1);
        Plaquette p;
        p.links = {find_link(s00, s10), find_link(s10, s11), find_link(s01, s11), find_link(s00, s01)};
        p.forward = {true, true, false, false};
        lat.plaquettes.push_back(p);
    }
    lat.dim = 1 << lat.n_sites;
    for (std::size_t l = 0; l < lat.links.size(); ++l) lat.dim *= N;
    const Layout lay{lat.n_sites, static_cast<int>(lat.links.size()), N};
    lat.h_free = build_hamiltonian(lat, lay, false);
    lat.h_gauged = build_hamiltonian(lat, lay, true);
    lat.gauss_ops.resize(lat.n_sites);
    for (int s = 0; s < lat.n_sites; ++s)
        for (int g = 0; g < N; ++g) lat.gauss_ops[s].push_back(gauss_monomial(lat, s, g).matrix());
    for (const auto& p : lat.plaquettes) {
        std::vector<Eigen::Triplet<cplx>> t;
        for (int idx = 0; idx < lat.dim; ++idx) {
            long long e = 0;
            for (int k = 0; k < 4; ++k) {
                const int h = lay.link(idx, p.links[k]);
                // L^{-1} for links traversed against their orientation
                e += p.forward[k] ? h : -h;
            }
            t.emplace_back(idx, idx, omega_pow(e, N));
        }
        lat.wilson_ops.push_back(from_triplets(lat.dim, t));
    }
    return lat;
}

double commutator_norm(const SparseC& a, const SparseC& b) {
    const SparseC c = a * b - b * a;
    return c.norm();
}

CMatrix expmv(const SparseC& h, double t, const CMatrix& v) {
    double norm1 = 0.0;
    for (int k = 0; k < h.outerSize(); ++k) {
        double col = 0.0;
        for (SparseC::InnerIterator it(h, k); it; ++it) col += std::abs(it.value());
        norm1 = std::max(norm1, col);
    }
    // substeps of norm at most 3 keep the series short and well conditioned
    const int steps = std::max(1, static_cast<int>(std::ceil(norm1 * std::abs(t) / 3.0)));
    const cplx f(0.0, -t / steps);
    CMatrix out = v;
    for (int s = 0; s < steps; ++s) {
        CMatrix term = out;
        CMatrix acc = out;
        for (int k = 1; k < 60; ++k) {
            term = (f / double(k)) * (h * term);
            acc += term;
            if (max_abs(term) <= 1e-18 * std::max(1.0, max_abs(acc))) break;
        }
        out = acc;
    }
    return out;
}

CMatrix lattice_twirl(const GaugedLattice& lat, const CMatrix& rho) {
    const auto acts = lattice_local_actions(lat);
    CMatrix acc = CMatrix::Zero(lat.dim, lat.dim);
    for (const auto& u : acts) acc += u.conjugate(rho);
    return acc / double(acts.size());
}

FreeStateReport free_state_check(const GaugedLattice& lat, const CMatrix& factor, double t, double tol) {
    if (factor.rows() != lat.dim) throw std::invalid_argument("free_state_check: dimension mismatch");
    FreeStateReport rep;
    const CMatrix rho = factor * factor.adjoint();
    const auto acts = lattice_local_actions(lat);
    const int r = static_cast<int>(factor.cols());
    const int ng = static_cast<int>(acts.size());
    if (static_cast<long>(r) * ng > 8192) {
        rep.twirl_distance = (rho - lattice_twirl(lat, rho)).norm();
        rep.is_free = rep.twirl_distance <= tol;
        return rep;
    }
    // twirl in factor form: G(rho) = B B^dagger / |G| with B = [U_g F]
    CMatrix pre(lat.dim, r * ng);
    for (int g = 0; g < ng; ++g) pre.middleCols(g * r, r) = acts[g].apply(factor);
    rep.twirl_distance = (rho - pre * pre.adjoint() / double(ng)).norm();
    rep.is_free = rep.twirl_distance <= tol;
    if (t == 0.0) return rep;
    const CMatrix b1 = expmv(lat.h_gauged, t, pre);  // E(G(rho)) factor
    const CMatrix evolved = expmv(lat.h_gauged, t, factor);
    CMatrix b2(lat.dim, r * ng);
    for (int g = 0; g < ng; ++g) b2.middleCols(g * r, r) = acts[g].apply(evolved);
    rep.dynamics_checked = true;
    rep.dynamics_defect = (b1 * b1.adjoint() - b2 * b2.adjoint()).norm() / ng;
    return rep;
}

}  // namespace symmetria
