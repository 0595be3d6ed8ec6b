#include <symmetria/random.hpp>

#include <algorithm>
#include <numbers>

namespace symmetria {

CMatrix random_cmatrix(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cplx(n(rng), n(rng));
    return m;
}

CMatrix random_unitary(int d, Rng& rng) {
    const CMatrix z = random_cmatrix(d, d, rng);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const cplx diag = r(j, j);
        if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

CVector random_pure(int d, Rng& rng) {
    CVector v = random_cmatrix(d, 1, rng);
    return v / v.norm();
}

CMatrix random_density(int d, Rng& rng, int rank) {
    if (rank <= 0) rank = d;
    const CMatrix g = random_cmatrix(d, rank, rng);
    CMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

Superoperator random_channel(int dim_in, int dim_out, Rng& rng, int n_kraus) {
    if (n_kraus <= 0) n_kraus = dim_in * dim_out;
    // Isometry dim_in -> dim_out * n_kraus from the first columns of a Haar unitary.
    const int big = dim_out * n_kraus;
    const CMatrix u = random_unitary(std::max(big, dim_in), rng);
    std::vector<CMatrix> ops;
    for (int k = 0; k < n_kraus; ++k) ops.push_back(u.block(k * dim_out, 0, dim_out, dim_in));
    return kraus_channel(ops, dim_in, dim_out);
}

Superoperator random_superoperator(int dim_in, int dim_out, Rng& rng) {
    const int n = dim_in * dim_out;
    return Superoperator::from_choi(random_cmatrix(n, n, rng), dim_in, dim_out);
}

GroupElement random_su2_element(Rng& rng) {
    constexpr double pi = std::numbers::pi;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double alpha = 2 * pi * u(rng);
    const double beta = std::acos(std::clamp(1.0 - 2.0 * u(rng), -1.0, 1.0));
    const double gamma = 4 * pi * u(rng);
    return GroupElement::su2(alpha, beta, gamma);
}

}  // namespace symmetria
