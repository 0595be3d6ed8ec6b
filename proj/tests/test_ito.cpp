#include <doctest.h>

#include <symmetria/ito.hpp>
#include <symmetria/random.hpp>

#include <cmath>

using namespace symmetria;

namespace {

CMatrix ket_bra(int d, int a, int b) {
    CMatrix m = CMatrix::Zero(d, d);
    m(a, b) = 1;
    return m;
}

}  // namespace

TEST_CASE("qubit operators") {
    const auto b = build_itos(RepSpec::qubit());
    REQUIRE(b.elements().size() == 4);
    CHECK(b.multiplicity(IrrepLabel::su2(0)) == 1);
    CHECK(b.multiplicity(IrrepLabel::su2(2)) == 1);
    const auto& e = b.elements();
    const int t0 = b.find(IrrepLabel::su2(0), 0, 0);
    REQUIRE(t0 >= 0);
    CHECK((e[t0].matrix - CMatrix::Identity(2, 2) / std::sqrt(2.0)).norm() < 1e-14);
    // spherical components of the spin-1 operator built by lowering from |0><1|
    const CMatrix z = ket_bra(2, 0, 0) - ket_bra(2, 1, 1);
    CHECK((e[b.find(IrrepLabel::su2(2), 0, 0)].matrix - ket_bra(2, 0, 1)).norm() < 1e-14);
    CHECK((e[b.find(IrrepLabel::su2(2), 0, 1)].matrix + z / std::sqrt(2.0)).norm() < 1e-14);
    CHECK((e[b.find(IrrepLabel::su2(2), 0, 2)].matrix + ket_bra(2, 1, 0)).norm() < 1e-14);
}

TEST_CASE("orthonormal and complete") {
    for (int tj : {1, 2, 3}) {
        const auto b = build_itos(RepSpec::spin(tj));
        const int d = tj + 1;
        CHECK(static_cast<int>(b.elements().size()) == d * d);
        CMatrix g(d * d, d * d);
        for (int i = 0; i < d * d; ++i)
            for (int j = 0; j < d * d; ++j) g(i, j) = (b.elements()[i].matrix.adjoint() * b.elements()[j].matrix).trace();
        CHECK((g - CMatrix::Identity(d * d, d * d)).norm() < 1e-12);
    }
}

TEST_CASE("covariance on irreps and sums") {
    const auto q = haar_quadrature(GroupKind::SU2, 6);
    CHECK(ito_covariance_residual(build_itos(RepSpec::spin(3)), q) < 1e-10);
    const auto qq = tensor_product(RepSpec::qubit(), RepSpec::qubit());
    const auto b = build_itos(qq);
    CHECK(b.elements().size() == 16);
    CHECK(b.multiplicity(IrrepLabel::su2(2)) == 3);
    CHECK(ito_covariance_residual(b, q) < 1e-10);
}

TEST_CASE("zn operators are matrix units") {
    const auto r = RepSpec::zn_charges({0, 1, 2}, 3);
    const auto b = build_itos(r);
    CHECK(b.elements().size() == 9);
    CHECK(ito_covariance_residual(b, haar_quadrature(GroupKind::ZN, 0, 3)) < 1e-12);
    for (const auto& e : b.elements()) CHECK(std::abs(e.matrix.cwiseAbs().sum() - 1.0) < 1e-14);
}

TEST_CASE("state mode projection") {
    Rng rng(31);
    const auto b = build_itos(RepSpec::qubit());
    const CMatrix rho = random_density(2, rng);
    const CMatrix p0 = state_mode_project(rho, b, IrrepLabel::su2(0));
    const CMatrix p1 = state_mode_project(rho, b, IrrepLabel::su2(2));
    CHECK((p0 - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-14);
    CHECK((p0 + p1 - rho).norm() < 1e-14);
    CHECK(std::abs(p1.trace()) < 1e-14);
}
