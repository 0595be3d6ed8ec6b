#include <symmetria/linalg.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symmetria {

namespace {

void require_finite(const CMatrix& m, const char* what) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

void require_shape(const CMatrix& m, Eigen::Index r, Eigen::Index c, const char* what) {
    if (m.rows() != r || m.cols() != c)
        throw std::invalid_argument(std::string(what) + ": unexpected shape");
}

}  // namespace

Superoperator::Superoperator(int dim_in, int dim_out, CMatrix choi, CMatrix transfer)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)), transfer_(std::move(transfer)) {}

Superoperator Superoperator::from_choi(CMatrix choi, int dim_in, int dim_out) {
    if (dim_in <= 0 || dim_out <= 0) throw std::invalid_argument("from_choi: bad dimensions");
    const Eigen::Index n = static_cast<Eigen::Index>(dim_in) * dim_out;
    require_shape(choi, n, n, "from_choi");
    require_finite(choi, "from_choi");
    CMatrix k = choi_to_transfer(choi, dim_in, dim_out);
    return Superoperator(dim_in, dim_out, std::move(choi), std::move(k));
}

Superoperator Superoperator::from_transfer(CMatrix transfer, int dim_in, int dim_out) {
    if (dim_in <= 0 || dim_out <= 0) throw std::invalid_argument("from_transfer: bad dimensions");
    require_shape(transfer, static_cast<Eigen::Index>(dim_out) * dim_out,
                  static_cast<Eigen::Index>(dim_in) * dim_in, "from_transfer");
    require_finite(transfer, "from_transfer");
    CMatrix j = transfer_to_choi(transfer, dim_in, dim_out);
    return Superoperator(dim_in, dim_out, std::move(j), std::move(transfer));
}

Superoperator Superoperator::zero(int dim_in, int dim_out) {
    return from_transfer(CMatrix::Zero(dim_out * dim_out, dim_in * dim_in), dim_in, dim_out);
}

Superoperator Superoperator::with_kraus(std::vector<KrausPair> kraus) const {
    Superoperator s = *this;
    s.kraus_ = std::move(kraus);
    return s;
}

Superoperator& Superoperator::operator+=(const Superoperator& o) {
    if (o.dim_in_ != dim_in_ || o.dim_out_ != dim_out_)
        throw std::invalid_argument("superoperator sum: dimension mismatch");
    choi_ += o.choi_;
    transfer_ += o.transfer_;
    kraus_.reset();
    return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& o) {
    if (o.dim_in_ != dim_in_ || o.dim_out_ != dim_out_)
        throw std::invalid_argument("superoperator difference: dimension mismatch");
    choi_ -= o.choi_;
    transfer_ -= o.transfer_;
    kraus_.reset();
    return *this;
}

Superoperator& Superoperator::operator*=(cplx s) {
    choi_ *= s;
    transfer_ *= s;
    kraus_.reset();
    return *this;
}

Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
Superoperator operator*(cplx s, Superoperator a) { return a *= s; }
Superoperator operator*(Superoperator a, cplx s) { return a *= s; }

CVector vec(const CMatrix& m) {
    CVector v(m.size());
    for (Eigen::Index a = 0; a < m.rows(); ++a)
        for (Eigen::Index b = 0; b < m.cols(); ++b) v(a * m.cols() + b) = m(a, b);
    return v;
}

CMatrix unvec(const CVector& v, int rows, int cols) {
    if (v.size() != static_cast<Eigen::Index>(rows) * cols)
        throw std::invalid_argument("unvec: size mismatch");
    CMatrix m(rows, cols);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) m(a, b) = v(a * cols + b);
    return m;
}

CMatrix choi_to_transfer(const CMatrix& choi, int dim_in, int dim_out) {
    const int di = dim_in, d_o = dim_out;
    CMatrix k(d_o * d_o, di * di);
    for (int a = 0; a < d_o; ++a)
        for (int c = 0; c < di; ++c)
            for (int b = 0; b < d_o; ++b)
                for (int d = 0; d < di; ++d) k(a * d_o + b, c * di + d) = choi(a * di + c, b * di + d);
    return k;
}

CMatrix transfer_to_choi(const CMatrix& transfer, int dim_in, int dim_out) {
    const int di = dim_in, d_o = dim_out;
    CMatrix j(d_o * di, d_o * di);
    for (int a = 0; a < d_o; ++a)
        for (int c = 0; c < di; ++c)
            for (int b = 0; b < d_o; ++b)
                for (int d = 0; d < di; ++d) j(a * di + c, b * di + d) = transfer(a * d_o + b, c * di + d);
    return j;
}

Superoperator choi_of(const std::vector<KrausPair>& kraus, int dim_in, int dim_out) {
    const int n = dim_in * dim_out;
    CMatrix j = CMatrix::Zero(n, n);
    for (const auto& [a, b] : kraus) {
        if (a.rows() != dim_out || a.cols() != dim_in || b.rows() != dim_out || b.cols() != dim_in)
            throw std::invalid_argument("choi_of: Kraus operator dimension mismatch");
        j += vec(a) * vec(b).adjoint();
    }
    return Superoperator::from_choi(std::move(j), dim_in, dim_out).with_kraus(kraus);
}

Superoperator kraus_channel(const std::vector<CMatrix>& ops, int dim_in, int dim_out) {
    std::vector<KrausPair> pairs;
    pairs.reserve(ops.size());
    for (const auto& k : ops) pairs.push_back({k, k});
    return choi_of(pairs, dim_in, dim_out);
}

Superoperator unitary_channel(const CMatrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("unitary_channel: non-square");
    const int d = static_cast<int>(u.rows());
    return kraus_channel({u}, d, d);
}

Superoperator identity_channel(int d) { return unitary_channel(CMatrix::Identity(d, d)); }

CMatrix apply_superoperator(const Superoperator& s, const CMatrix& x) {
    if (x.rows() != s.dim_in() || x.cols() != s.dim_in())
        throw std::invalid_argument("apply: input dimension mismatch");
    return unvec(s.transfer() * vec(x), s.dim_out(), s.dim_out());
}

CptpReport check_cptp(const Superoperator& s, double psd_tol, double tp_tol) {
    const CMatrix& j = s.choi();
    if (j.rows() != j.cols()) throw std::invalid_argument("check_cptp: non-square Choi matrix");
    CptpReport r;
    const CMatrix herm = 0.5 * (j + j.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    // A non-Hermitian Choi matrix cannot be CP; its anti-Hermitian part lowers the bound.
    r.min_choi_eigenvalue = es.eigenvalues().minCoeff() - op_norm(0.5 * (j - j.adjoint()));
    // tr_out J must equal the identity on the input.
    const int di = s.dim_in(), d_o = s.dim_out();
    CMatrix reduced = CMatrix::Zero(di, di);
    for (int a = 0; a < d_o; ++a)
        for (int c = 0; c < di; ++c)
            for (int d = 0; d < di; ++d) reduced(c, d) += j(a * di + c, a * di + d);
    r.trace_defect = op_norm(reduced - CMatrix::Identity(di, di));
    r.is_cp = r.min_choi_eigenvalue >= -psd_tol;
    r.is_tp = r.trace_defect <= tp_tol;
    return r;
}

cplx hs_inner(const Superoperator& s1, const Superoperator& s2) {
    if (s1.dim_in() != s2.dim_in() || s1.dim_out() != s2.dim_out())
        throw std::invalid_argument("hs_inner: dimension mismatch");
    return s1.choi().conjugate().cwiseProduct(s2.choi()).sum();
}

double hs_norm(const Superoperator& s) { return s.choi().norm(); }

std::vector<CMatrix> kraus_of_choi(const Superoperator& s, double psd_tol) {
    const CMatrix herm = 0.5 * (s.choi() + s.choi().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    std::vector<CMatrix> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam < -psd_tol)
            throw std::domain_error("kraus_of_choi: Choi matrix is not positive semidefinite");
        if (lam <= 0.0) continue;
        out.push_back(std::sqrt(lam) * unvec(es.eigenvectors().col(i), s.dim_out(), s.dim_in()));
    }
    return out;
}

Superoperator compose(const Superoperator& outer, const Superoperator& inner) {
    if (outer.dim_in() != inner.dim_out()) throw std::invalid_argument("compose: dimension mismatch");
    return Superoperator::from_transfer(outer.transfer() * inner.transfer(), inner.dim_in(),
                                        outer.dim_out());
}

Superoperator tensor(const Superoperator& s1, const Superoperator& s2) {
    const int i1 = s1.dim_in(), o1 = s1.dim_out(), i2 = s2.dim_in(), o2 = s2.dim_out();
    const int di = i1 * i2, d_o = o1 * o2;
    const CMatrix& k1 = s1.transfer();
    const CMatrix& k2 = s2.transfer();
    CMatrix k = CMatrix::Zero(d_o * d_o, di * di);
    for (int r1 = 0; r1 < o1 * o1; ++r1) {
        const int a1 = r1 / o1, b1 = r1 % o1;
        for (int c1i = 0; c1i < i1 * i1; ++c1i) {
            const cplx v1 = k1(r1, c1i);
            if (v1 == cplx(0.0)) continue;
            const int c1 = c1i / i1, d1 = c1i % i1;
            for (int r2 = 0; r2 < o2 * o2; ++r2) {
                const int a2 = r2 / o2, b2 = r2 % o2;
                const int row = (a1 * o2 + a2) * d_o + (b1 * o2 + b2);
                for (int c2i = 0; c2i < i2 * i2; ++c2i) {
                    const int c2 = c2i / i2, d2 = c2i % i2;
                    k(row, (c1 * i2 + c2) * di + (d1 * i2 + d2)) = v1 * k2(r2, c2i);
                }
            }
        }
    }
    return Superoperator::from_transfer(std::move(k), di, d_o);
}

Superoperator hermitian_conjugate(const Superoperator& s) {
    const int di = s.dim_in(), d_o = s.dim_out();
    const CMatrix& k = s.transfer();
    CMatrix out(d_o * d_o, di * di);
    for (int a = 0; a < d_o; ++a)
        for (int b = 0; b < d_o; ++b)
            for (int c = 0; c < di; ++c)
                for (int d = 0; d < di; ++d)
                    out(a * d_o + b, d * di + c) = std::conj(k(b * d_o + a, c * di + d));
    return Superoperator::from_transfer(std::move(out), di, d_o);
}

double choi_distance(const Superoperator& s1, const Superoperator& s2) {
    if (s1.dim_in() != s2.dim_in() || s1.dim_out() != s2.dim_out())
        throw std::invalid_argument("choi_distance: dimension mismatch");
    return trace_norm(s1.choi() - s2.choi()) / s1.dim_in();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix kron_all(const std::vector<CMatrix>& factors) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims, int traced) {
    const int n = static_cast<int>(dims.size());
    if (traced < 0 || traced >= n) throw std::invalid_argument("partial_trace: bad subsystem");
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
    if (m.rows() != total || m.cols() != total) throw std::invalid_argument("partial_trace: shape");
    int left = 1, right = 1;
    for (int i = 0; i < traced; ++i) left *= dims[i];
    for (int i = traced + 1; i < n; ++i) right *= dims[i];
    const int dt = dims[traced];
    const int keep = left * right;
    CMatrix out = CMatrix::Zero(keep, keep);
    for (int l1 = 0; l1 < left; ++l1)
        for (int r1 = 0; r1 < right; ++r1)
            for (int l2 = 0; l2 < left; ++l2)
                for (int r2 = 0; r2 < right; ++r2) {
                    cplx acc = 0.0;
                    for (int t = 0; t < dt; ++t)
                        acc += m((l1 * dt + t) * right + r1, (l2 * dt + t) * right + r2);
                    out(l1 * right + r1, l2 * right + r2) = acc;
                }
    return out;
}

double op_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double trace_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues().sum();
}

CMatrix expm_hermitian(const CMatrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
    CVector phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(cplx(0.0, -t * es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

bool is_unitary(const CMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

}  // namespace symmetria
