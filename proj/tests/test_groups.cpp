#include <doctest.h>

#include <symmetria/groups.hpp>
#include <symmetria/random.hpp>

#include <cmath>

using namespace symmetria;

namespace {

const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);

}  // namespace

TEST_CASE("clebsch-gordan reference values") {
    // standard Condon-Shortley tables
    CHECK(cgc(1, 1, 2, 1, -1, 0) == doctest::Approx(1 / r2));
    CHECK(cgc(1, 1, 0, 1, -1, 0) == doctest::Approx(1 / r2));
    CHECK(cgc(1, 1, 0, -1, 1, 0) == doctest::Approx(-1 / r2));
    CHECK(cgc(2, 2, 0, 2, -2, 0) == doctest::Approx(1 / r3));
    CHECK(cgc(2, 2, 0, 0, 0, 0) == doctest::Approx(-1 / r3));
    CHECK(cgc(2, 2, 4, 0, 0, 0) == doctest::Approx(std::sqrt(2.0 / 3)));
    CHECK(cgc(2, 2, 2, 2, 0, 2) == doctest::Approx(1 / r2));
    CHECK(cgc(2, 2, 2, 0, 0, 0) == doctest::Approx(0.0));
    CHECK(cgc(2, 1, 3, 2, -1, 1) == doctest::Approx(1 / r3));
    CHECK(cgc(2, 1, 3, 0, 1, 1) == doctest::Approx(std::sqrt(2.0 / 3)));
    CHECK(cgc(2, 1, 1, 2, -1, 1) == doctest::Approx(std::sqrt(2.0 / 3)));
    CHECK(cgc(2, 1, 1, 0, 1, 1) == doctest::Approx(-1 / r3));
    CHECK(cgc(3, 3, 0, 3, -3, 0) == doctest::Approx(0.5));
    // selection rules
    CHECK(cgc(1, 1, 2, 1, 1, 0) == 0.0);
    CHECK_THROWS(cgc(2, 2, 6, 0, 0, 0));
}

TEST_CASE("clebsch-gordan orthogonality") {
    for (int j1 = 0; j1 <= 4; ++j1)
        for (int j2 = 0; j2 <= 4; ++j2)
            for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2)
                for (int Jp = std::abs(j1 - j2); Jp <= j1 + j2; Jp += 2)
                    for (int M = -std::min(J, Jp); M <= std::min(J, Jp); M += 2) {
                        double s = 0;
                        for (int m1 = -j1; m1 <= j1; m1 += 2)
                            if (std::abs(M - m1) <= j2) s += cgc(j1, j2, J, m1, M - m1, M) * cgc(j1, j2, Jp, m1, M - m1, M);
                        CHECK(s == doctest::Approx(J == Jp ? 1.0 : 0.0).epsilon(1e-12));
                    }
}

TEST_CASE("small d reference values") {
    const double b = 0.7;
    CHECK(wigner_small_d(1, 1, 1, b) == doctest::Approx(std::cos(b / 2)));
    CHECK(wigner_small_d(1, 1, -1, b) == doctest::Approx(-std::sin(b / 2)));
    CHECK(wigner_small_d(2, 2, 2, b) == doctest::Approx((1 + std::cos(b)) / 2));
    CHECK(wigner_small_d(2, 2, 0, b) == doctest::Approx(-std::sin(b) / r2));
    CHECK(wigner_small_d(2, 2, -2, b) == doctest::Approx((1 - std::cos(b)) / 2));
    CHECK(wigner_small_d(2, 0, 0, b) == doctest::Approx(std::cos(b)));
    CHECK(wigner_small_d(3, 3, 1, b) == doctest::Approx(-r3 * std::pow(std::cos(b / 2), 2) * std::sin(b / 2)));
}

TEST_CASE("wigner D is a homomorphism") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        const auto g1 = random_su2_element(rng), g2 = random_su2_element(rng);
        for (int tj = 0; tj <= 4; ++tj) {
            const auto j = IrrepLabel::su2(tj);
            const CMatrix lhs = wigner_D(j, g1) * wigner_D(j, g2);
            CHECK((lhs - wigner_D(j, compose(g1, g2))).norm() < 1e-12);
            CHECK((wigner_D(j, inverse(g1)) - wigner_D(j, g1).adjoint()).norm() < 1e-12);
            CHECK(is_unitary(wigner_D(j, g1)));
        }
    }
}

TEST_CASE("D from the spin matrices") {
    // exp(-i a Jz) exp(-i b Jy) exp(-i c Jz) built from generators
    const auto g = GroupElement::su2(0.3, 1.1, -0.8);
    for (int tj = 1; tj <= 3; ++tj) {
        const auto s = spin_matrices(tj);
        const CMatrix d = expm_hermitian(s[2], 0.3) * expm_hermitian(s[1], 1.1) * expm_hermitian(s[2], -0.8);
        CHECK((d - wigner_D(IrrepLabel::su2(tj), g)).norm() < 1e-12);
    }
}

TEST_CASE("su2 from matrix recovers the element") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        const auto g = random_su2_element(rng);
        const auto h = su2_from_matrix(wigner_D(IrrepLabel::su2(1), g));
        CHECK((wigner_D(IrrepLabel::su2(3), g) - wigner_D(IrrepLabel::su2(3), h)).norm() < 1e-10);
    }
    // gimbal cases
    for (double b : {0.0, M_PI}) {
        const auto g = GroupElement::su2(0.4, b, 0.9);
        const auto h = su2_from_matrix(wigner_D(IrrepLabel::su2(1), g));
        CHECK((wigner_D(IrrepLabel::su2(2), g) - wigner_D(IrrepLabel::su2(2), h)).norm() < 1e-10);
    }
}

TEST_CASE("haar quadrature integrates Schur orthogonality exactly") {
    for (int L : {0, 2, 4, 8}) {
        const auto q = haar_quadrature(GroupKind::SU2, L);
        double wsum = 0;
        for (const auto& n : q.nodes) wsum += n.weight;
        CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
        for (int a = 0; a <= L / 2; ++a)
            for (int b = 0; b <= L / 2; ++b) {
                if (a + b > L) continue;
                const auto ja = IrrepLabel::su2(a), jb = IrrepLabel::su2(b);
                CMatrix acc = CMatrix::Zero(ja.dim() * jb.dim(), ja.dim() * jb.dim());
                for (const auto& n : q.nodes) acc += n.weight * kron(wigner_D(ja, n.g), wigner_D(jb, n.g).conjugate());
                // int D^a_mn conj(D^b_m'n') = delta_ab delta_mm' delta_nn' / dim
                CMatrix expect = CMatrix::Zero(acc.rows(), acc.cols());
                if (a == b)
                    for (int m = 0; m < ja.dim(); ++m)
                        for (int n = 0; n < ja.dim(); ++n) expect(m * ja.dim() + m, n * ja.dim() + n) = 1.0 / ja.dim();
                CHECK((acc - expect).cwiseAbs().maxCoeff() < kQuadratureTol);
            }
    }
}

TEST_CASE("characters") {
    const auto g = GroupElement::su2(0.0, 0.0, 0.9);
    // chi_j(rotation by w) = sin((2j+1) w / 2) / sin(w / 2)
    for (int tj = 0; tj <= 4; ++tj)
        CHECK(character(IrrepLabel::su2(tj), g).real() ==
              doctest::Approx(std::sin((tj + 1) * 0.9 / 2) / std::sin(0.9 / 2)));
    CHECK(std::abs(character(IrrepLabel::zn(2, 5), GroupElement::zn(3, 5)) - std::exp(cplx(0, 2 * M_PI * 6 / 5))) < 1e-14);
}

TEST_CASE("tensor product intertwiner") {
    Rng rng(23);
    const auto q = RepSpec::qubit();
    const auto qq = tensor_product(q, q);
    CHECK(qq.dim() == 4);
    CHECK(qq.blocks().size() == 2);
    for (int t = 0; t < 5; ++t) {
        const auto g = random_su2_element(rng);
        const CMatrix u = wigner_D(IrrepLabel::su2(1), g);
        CHECK((rep_matrix(qq, g) - kron(u, u)).norm() < 1e-12);
    }
}

TEST_CASE("coupling and duals") {
    const auto j = IrrepLabel::su2(2);
    CHECK(dual(j) == j);
    CHECK(coupling_series(IrrepLabel::su2(1), IrrepLabel::su2(2)).size() == 2);
    const auto c = IrrepLabel::zn(3, 5);
    CHECK(dual(c) == IrrepLabel::zn(2, 5));
    CHECK(coupling(c, 0, dual(c), 0, IrrepLabel::zn(0, 5), 0) == 1.0);
    // dual_phase(a, k) <a, dual_index| transforms like |dual(a), k>
    const auto g = GroupElement::su2(0.2, 0.5, 1.3);
    for (int tj = 1; tj <= 3; ++tj) {
        const auto a = IrrepLabel::su2(tj);
        const CMatrix d = wigner_D(a, g);
        for (int k = 0; k < a.dim(); ++k)
            for (int kp = 0; kp < a.dim(); ++kp) {
                const cplx lhs = dual_phase(a, k) * dual_phase(a, kp) * std::conj(d(dual_index(a, kp), dual_index(a, k)));
                CHECK(std::abs(lhs - d(kp, k)) < 1e-12);
            }
    }
}

TEST_CASE("generators of the qubit") {
    const auto s = generators(RepSpec::qubit());
    REQUIRE(s.size() == 3);
    const CMatrix comm = s[0] * s[1] - s[1] * s[0];
    CHECK((comm - cplx(0, 1) * s[2]).norm() < 1e-14);
}
