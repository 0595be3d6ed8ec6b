#include <symmetria/groups.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symmetria {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    static const std::vector<double> table = [] {
        std::vector<double> t(171, 1.0);
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n > 170) throw std::overflow_error("factorial overflow");
    return table[n];
}

int reduce_mod(int x, int n) { return ((x % n) + n) % n; }

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) r += period;
    if (r >= period) r -= period;
    return r;
}

void require_same_kind(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.kind() != b.kind() || a.modulus() != b.modulus())
        throw std::invalid_argument("irrep labels from different groups");
}

cplx zn_phase(long long exponent, int modulus) {
    const long long r = ((exponent % modulus) + modulus) % modulus;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / modulus);
}

}  // namespace

IrrepLabel IrrepLabel::su2(int two_j) {
    if (two_j < 0) throw std::invalid_argument("negative spin");
    return IrrepLabel(GroupKind::SU2, two_j, 0, 1);
}

IrrepLabel IrrepLabel::zn(int charge, int modulus) {
    if (modulus <= 0) throw std::invalid_argument("Z_N modulus must be positive");
    return IrrepLabel(GroupKind::ZN, 0, reduce_mod(charge, modulus), modulus);
}

std::string IrrepLabel::to_string() const {
    if (kind_ == GroupKind::ZN) return std::to_string(charge_);
    if (two_j_ % 2 == 0) return std::to_string(two_j_ / 2);
    return std::to_string(two_j_) + "/2";
}

GroupElement GroupElement::su2(double alpha, double beta, double gamma) {
    if (!(beta >= -1e-12 && beta <= kPi + 1e-12)) throw std::invalid_argument("Euler beta outside [0, pi]");
    return GroupElement(GroupKind::SU2, alpha, std::clamp(beta, 0.0, kPi), gamma, 0, 1);
}

GroupElement GroupElement::zn(int g, int modulus) {
    if (modulus <= 0) throw std::invalid_argument("Z_N modulus must be positive");
    return GroupElement(GroupKind::ZN, 0, 0, 0, reduce_mod(g, modulus), modulus);
}

GroupElement GroupElement::identity(GroupKind kind, int modulus) {
    return kind == GroupKind::SU2 ? su2(0, 0, 0) : zn(0, modulus);
}

GroupElement su2_from_matrix(const CMatrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("su2_from_matrix: need 2x2");
    const double c = std::abs(u(0, 0));
    const double s = std::abs(u(1, 0));
    const double beta = 2.0 * std::atan2(s, c);
    constexpr double tiny = 1e-15;
    if (s <= tiny) {
        const double a = -2.0 * std::arg(u(0, 0));
        return GroupElement::su2(wrap(a, 4 * kPi), 0.0, 0.0);
    }
    if (c <= tiny) {
        const double b = 2.0 * std::arg(u(1, 0));
        return GroupElement::su2(wrap(b, 4 * kPi), kPi, 0.0);
    }
    const double sum = -2.0 * std::arg(u(0, 0));
    const double diff = 2.0 * std::arg(u(1, 0));
    double alpha = 0.5 * (sum + diff);
    double gamma = 0.5 * (sum - diff);
    const double k = std::floor(alpha / (2 * kPi));
    alpha -= 2 * kPi * k;
    gamma -= 2 * kPi * k;
    return GroupElement::su2(wrap(alpha, 2 * kPi), beta, wrap(gamma, 4 * kPi));
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    if (g1.kind() != g2.kind() || g1.modulus() != g2.modulus())
        throw std::invalid_argument("compose: group kind mismatch");
    if (g1.kind() == GroupKind::ZN) return GroupElement::zn(g1.g() + g2.g(), g1.modulus());
    const IrrepLabel half = IrrepLabel::su2(1);
    return su2_from_matrix(wigner_D(half, g1) * wigner_D(half, g2));
}

GroupElement inverse(const GroupElement& g) {
    if (g.kind() == GroupKind::ZN) return GroupElement::zn(-g.g(), g.modulus());
    return su2_from_matrix(wigner_D(IrrepLabel::su2(1), g).adjoint());
}

double wigner_small_d(int two_j, int two_m1, int two_m2, double beta) {
    if (std::abs(two_m1) > two_j || std::abs(two_m2) > two_j || (two_j + two_m1) % 2 != 0 ||
        (two_j + two_m2) % 2 != 0)
        throw std::invalid_argument("wigner_small_d: invalid m");
    const int jpm1 = (two_j + two_m1) / 2, jmm1 = (two_j - two_m1) / 2;
    const int jpm2 = (two_j + two_m2) / 2, jmm2 = (two_j - two_m2) / 2;
    const int dm = (two_m1 - two_m2) / 2;
    const double pref = std::sqrt(factorial(jpm1) * factorial(jmm1) * factorial(jpm2) * factorial(jmm2));
    const double cb = std::cos(beta / 2), sb = std::sin(beta / 2);
    double sum = 0.0;
    for (int s = std::max(0, -dm); s <= std::min(jpm2, jmm1); ++s) {
        const double den = factorial(jpm2 - s) * factorial(s) * factorial(dm + s) * factorial(jmm1 - s);
        const double sign = ((dm + s) % 2 == 0) ? 1.0 : -1.0;
        sum += sign / den * std::pow(cb, two_j - dm - 2 * s) * std::pow(sb, dm + 2 * s);
    }
    return pref * sum;
}

CMatrix wigner_D(const IrrepLabel& j, const GroupElement& g) {
    if (j.kind() != g.kind()) throw std::invalid_argument("wigner_D: group kind mismatch");
    if (j.kind() == GroupKind::ZN) {
        if (j.modulus() != g.modulus()) throw std::invalid_argument("wigner_D: modulus mismatch");
        CMatrix d(1, 1);
        d(0, 0) = zn_phase(static_cast<long long>(j.charge()) * g.g(), j.modulus());
        return d;
    }
    const int n = j.dim();
    CMatrix d(n, n);
    for (int k1 = 0; k1 < n; ++k1) {
        const int two_m1 = j.two_j() - 2 * k1;
        for (int k2 = 0; k2 < n; ++k2) {
            const int two_m2 = j.two_j() - 2 * k2;
            d(k1, k2) = std::exp(cplx(0, -0.5 * two_m1 * g.alpha())) *
                        wigner_small_d(j.two_j(), two_m1, two_m2, g.beta()) *
                        std::exp(cplx(0, -0.5 * two_m2 * g.gamma()));
        }
    }
    return d;
}

cplx character(const IrrepLabel& j, const GroupElement& g) { return wigner_D(j, g).trace(); }

double cgc(int two_j1, int two_j2, int two_J, int two_m1, int two_m2, int two_M) {
    if (two_j1 < 0 || two_j2 < 0 || two_J < 0) throw std::invalid_argument("cgc: negative spin");
    if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2 || (two_j1 + two_j2 + two_J) % 2 != 0)
        throw std::invalid_argument("cgc: J outside the Clebsch-Gordan series");
    auto bad_m = [](int tj, int tm) { return std::abs(tm) > tj || (tj + tm) % 2 != 0; };
    if (bad_m(two_j1, two_m1) || bad_m(two_j2, two_m2) || bad_m(two_J, two_M))
        throw std::invalid_argument("cgc: invalid magnetic quantum number");
    if (two_M != two_m1 + two_m2) return 0.0;
    const int a = (two_j1 + two_j2 - two_J) / 2;
    const int b = (two_j1 - two_m1) / 2;
    const int c = (two_j2 + two_m2) / 2;
    const int d = (two_J - two_j2 + two_m1) / 2;
    const int e = (two_J - two_j1 - two_m2) / 2;
    const double tri = factorial((two_J + two_j1 - two_j2) / 2) * factorial((two_J - two_j1 + two_j2) / 2) *
                       factorial(a) / factorial((two_j1 + two_j2 + two_J) / 2 + 1);
    const double ms = factorial((two_J + two_M) / 2) * factorial((two_J - two_M) / 2) * factorial(b) *
                      factorial((two_j1 + two_m1) / 2) * factorial((two_j2 - two_m2) / 2) * factorial(c);
    double sum = 0.0;
    for (int k = std::max({0, -d, -e}); k <= std::min({a, b, c}); ++k) {
        const double den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                           factorial(d + k) * factorial(e + k);
        sum += (k % 2 == 0 ? 1.0 : -1.0) / den;
    }
    return std::sqrt((two_J + 1) * tri * ms) * sum;
}

double cgc(const IrrepLabel& j1, const IrrepLabel& j2, const IrrepLabel& J, int two_m1, int two_m2, int two_M) {
    require_same_kind(j1, j2);
    require_same_kind(j1, J);
    if (j1.kind() != GroupKind::SU2) throw std::invalid_argument("cgc: SU(2) labels required");
    return cgc(j1.two_j(), j2.two_j(), J.two_j(), two_m1, two_m2, two_M);
}

std::vector<IrrepLabel> coupling_series(const IrrepLabel& a, const IrrepLabel& b) {
    require_same_kind(a, b);
    if (a.kind() == GroupKind::ZN) return {IrrepLabel::zn(a.charge() + b.charge(), a.modulus())};
    std::vector<IrrepLabel> out;
    for (int t = std::abs(a.two_j() - b.two_j()); t <= a.two_j() + b.two_j(); t += 2)
        out.push_back(IrrepLabel::su2(t));
    return out;
}

double coupling(const IrrepLabel& a, int ka, const IrrepLabel& b, int kb, const IrrepLabel& c, int kc) {
    require_same_kind(a, b);
    require_same_kind(a, c);
    if (a.kind() == GroupKind::ZN)
        return IrrepLabel::zn(a.charge() + b.charge(), a.modulus()) == c ? 1.0 : 0.0;
    return cgc(a.two_j(), b.two_j(), c.two_j(), a.two_j() - 2 * ka, b.two_j() - 2 * kb, c.two_j() - 2 * kc);
}

IrrepLabel dual(const IrrepLabel& a) {
    if (a.kind() == GroupKind::ZN) return IrrepLabel::zn(-a.charge(), a.modulus());
    return a;
}

int dual_index(const IrrepLabel& a, int k) { return a.dim() - 1 - k; }

double dual_phase(const IrrepLabel& a, int k) {
    if (a.kind() == GroupKind::ZN) return 1.0;
    return k % 2 == 0 ? 1.0 : -1.0;
}

RepSpec::RepSpec(GroupKind kind, std::vector<RepBlock> blocks, std::optional<CMatrix> intertwiner)
    : kind_(kind), blocks_(std::move(blocks)), intertwiner_(std::move(intertwiner)) {
    int bi = 0;
    for (const auto& b : blocks_) {
        if (b.irrep.kind() != kind_) throw std::invalid_argument("RepSpec: irrep of the wrong group");
        if (b.multiplicity < 0) throw std::invalid_argument("RepSpec: negative multiplicity");
        if (kind_ == GroupKind::ZN) {
            if (bi == 0) modulus_ = b.irrep.modulus();
            if (b.irrep.modulus() != modulus_) throw std::invalid_argument("RepSpec: mixed Z_N moduli");
        }
        for (int c = 0; c < b.multiplicity; ++c) {
            copies_.push_back({b.irrep, bi, c, dim_});
            dim_ += b.irrep.dim();
        }
        ++bi;
    }
    if (intertwiner_) {
        if (intertwiner_->rows() != dim_ || intertwiner_->cols() != dim_)
            throw std::invalid_argument("RepSpec: intertwiner dimension mismatch");
        if (!is_unitary(*intertwiner_, 1e-12)) throw std::invalid_argument("RepSpec: intertwiner not unitary");
    }
}

RepSpec RepSpec::spin(int two_j) { return RepSpec(GroupKind::SU2, {{IrrepLabel::su2(two_j), 1}}); }

RepSpec RepSpec::zn_charges(const std::vector<int>& charges, int modulus) {
    std::vector<RepBlock> blocks;
    for (int c : charges) blocks.push_back({IrrepLabel::zn(c, modulus), 1});
    if (blocks.empty()) throw std::invalid_argument("zn_charges: empty charge list");
    return RepSpec(GroupKind::ZN, std::move(blocks));
}

RepSpec RepSpec::trivial(GroupKind kind, int modulus) {
    return kind == GroupKind::SU2 ? spin(0) : zn_charges({0}, modulus);
}

int RepSpec::max_two_j() const {
    int m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.irrep.two_j());
    return m;
}

CMatrix RepSpec::basis_change() const {
    return intertwiner_ ? *intertwiner_ : CMatrix::Identity(dim_, dim_);
}

RepSpec tensor_product(const RepSpec& a, const RepSpec& b) {
    if (a.kind() != b.kind() || a.modulus() != b.modulus())
        throw std::invalid_argument("tensor_product: group mismatch");
    const CMatrix wab = kron(a.basis_change(), b.basis_change());
    struct Piece {
        IrrepLabel irrep;
        CMatrix vectors;
    };
    std::vector<Piece> pieces;
    const int db = b.dim();
    for (const auto& ca : a.copies())
        for (const auto& cb : b.copies())
            for (const auto& j : coupling_series(ca.irrep, cb.irrep)) {
                CMatrix v = CMatrix::Zero(a.dim() * db, j.dim());
                for (int kc = 0; kc < j.dim(); ++kc)
                    for (int ka = 0; ka < ca.irrep.dim(); ++ka)
                        for (int kb = 0; kb < cb.irrep.dim(); ++kb) {
                            const double c = coupling(ca.irrep, ka, cb.irrep, kb, j, kc);
                            if (c != 0.0) v((ca.offset + ka) * db + cb.offset + kb, kc) += c;
                        }
                pieces.push_back({j, wab * v});
            }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& x, const Piece& y) { return x.irrep < y.irrep; });
    std::vector<RepBlock> blocks;
    CMatrix w(a.dim() * db, a.dim() * db);
    int col = 0;
    for (const auto& p : pieces) {
        if (!blocks.empty() && blocks.back().irrep == p.irrep)
            ++blocks.back().multiplicity;
        else
            blocks.push_back({p.irrep, 1});
        w.middleCols(col, p.irrep.dim()) = p.vectors;
        col += p.irrep.dim();
    }
    return RepSpec(a.kind(), std::move(blocks), std::move(w));
}

CMatrix rep_matrix(const RepSpec& r, const GroupElement& g) {
    if (r.kind() != g.kind()) throw std::invalid_argument("rep_matrix: group kind mismatch");
    CMatrix d = CMatrix::Zero(r.dim(), r.dim());
    for (const auto& c : r.copies()) {
        const int n = c.irrep.dim();
        d.block(c.offset, c.offset, n, n) = wigner_D(c.irrep, g);
    }
    if (!r.intertwiner()) return d;
    const CMatrix& w = *r.intertwiner();
    return w * d * w.adjoint();
}

std::vector<CMatrix> spin_matrices(int two_j) {
    const int n = two_j + 1;
    const double j = 0.5 * two_j;
    CMatrix jp = CMatrix::Zero(n, n), jz = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double m = j - k;
        jz(k, k) = m;
        if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    const CMatrix jm = jp.adjoint();
    return {0.5 * (jp + jm), cplx(0, -0.5) * (jp - jm), jz};
}

std::vector<CMatrix> generators(const RepSpec& r) {
    const CMatrix w = r.basis_change();
    if (r.kind() == GroupKind::ZN) {
        CMatrix q = CMatrix::Zero(r.dim(), r.dim());
        for (const auto& c : r.copies()) q(c.offset, c.offset) = c.irrep.charge();
        return {w * q * w.adjoint()};
    }
    std::vector<CMatrix> out(3, CMatrix::Zero(r.dim(), r.dim()));
    for (const auto& c : r.copies()) {
        const auto s = spin_matrices(c.irrep.two_j());
        const int n = c.irrep.dim();
        for (int i = 0; i < 3; ++i) out[i].block(c.offset, c.offset, n, n) = s[i];
    }
    for (auto& m : out) m = w * m * w.adjoint();
    return out;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n <= 0) throw std::invalid_argument("gauss_legendre: need n > 0");
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        weights[i] = 2.0 * v * v;
    }
}

HaarQuadrature haar_quadrature(GroupKind kind, int bandlimit, int modulus) {
    if (bandlimit < 0) throw std::invalid_argument("haar_quadrature: negative bandlimit");
    HaarQuadrature q{kind, {}, bandlimit};
    if (kind == GroupKind::ZN) {
        for (int g = 0; g < modulus; ++g) q.nodes.push_back({GroupElement::zn(g, modulus), 1.0 / modulus});
        return q;
    }
    // Uniform alpha on [0, 2pi), uniform gamma on [0, 4pi), Gauss-Legendre in cos(beta).
    const int na = bandlimit + 1, ng = bandlimit + 1;
    const int nb = (bandlimit / 2) / 2 + 1;
    std::vector<double> x, w;
    gauss_legendre(nb, x, w);
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            for (int ig = 0; ig < ng; ++ig)
                q.nodes.push_back({GroupElement::su2(2 * kPi * ia / na, std::acos(x[ib]), 4 * kPi * ig / ng),
                                   w[ib] / (2.0 * na * ng)});
    return q;
}

}  // namespace symmetria
