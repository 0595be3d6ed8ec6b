#include <doctest.h>

#include <symmetria/process_modes.hpp>
#include <symmetria/random.hpp>

#include <cmath>

using namespace symmetria;

namespace {

Diagram qd(int a_in, int a_out, int lambda) {
    return {IrrepLabel::su2(2 * a_in), 0, IrrepLabel::su2(2 * a_out), 0, IrrepLabel::su2(2 * lambda)};
}

}  // namespace

TEST_CASE("qubit multiplicities") {
    const auto q = RepSpec::qubit();
    const auto b = build_canonical_modes(q, q);
    CHECK(b.modes().size() == 16);
    CHECK(b.multiplicity(IrrepLabel::su2(0)) == 2);
    CHECK(b.multiplicity(IrrepLabel::su2(2)) == 3);
    CHECK(b.multiplicity(IrrepLabel::su2(4)) == 1);
    CHECK(b.diagrams().size() == 6);
    CHECK(b.find(qd(1, 0, 1), 0) >= 0);
}

TEST_CASE("modes are orthonormal and covariant") {
    const auto q = RepSpec::qubit();
    const auto b = build_canonical_modes(q, q);
    const int n = static_cast<int>(b.modes().size());
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = hs_inner(b.modes()[i].op, b.modes()[j].op);
    CHECK((g - CMatrix::Identity(n, n)).norm() < 1e-12);
    CHECK(mode_covariance_residual(b, haar_quadrature(GroupKind::SU2, 4)) < 1e-10);
}

TEST_CASE("identity channel coefficients") {
    const auto q = RepSpec::qubit();
    const auto b = build_canonical_modes(q, q);
    const auto c = decompose(identity_channel(2), b);
    // id = |Omega><Omega| in Choi form: trivial part 1, spin-1 relay sqrt(3)
    CHECK(std::abs(c.get(qd(0, 0, 0), 0) - 1.0) < 1e-12);
    CHECK(std::abs(c.get(qd(1, 1, 0), 0) - std::sqrt(3.0)) < 1e-12);
    double rest = 0;
    for (const auto& e : c.entries)
        if (!(e.diagram == qd(0, 0, 0)) && !(e.diagram == qd(1, 1, 0))) rest += std::abs(e.alpha);
    CHECK(rest < 1e-12);
    CHECK(c.residual < 1e-12);
    CHECK(is_symmetric(identity_channel(2), b));
}

TEST_CASE("completely depolarising channel") {
    const auto q = RepSpec::qubit();
    const auto b = build_canonical_modes(q, q);
    const auto dep = Superoperator::from_choi(CMatrix::Identity(4, 4) / 2.0, 2, 2);
    const auto c = decompose(dep, b);
    CHECK(std::abs(c.get(qd(0, 0, 0), 0) - 1.0) < 1e-12);
    CHECK(std::abs(c.get(qd(1, 1, 0), 0)) < 1e-12);
}

TEST_CASE("reconstruction and projectors") {
    Rng rng(41);
    const auto q = RepSpec::qubit();
    const auto b = build_canonical_modes(q, q);
    const auto quad = haar_quadrature(GroupKind::SU2, 8);
    for (int t = 0; t < 3; ++t) {
        const auto s = random_superoperator(2, 2, rng);
        CHECK(choi_distance(reconstruct(decompose(s, b), b), s) < 1e-12);
        Superoperator sum = Superoperator::zero(2, 2);
        for (int l : {0, 2, 4}) {
            const auto lam = IrrepLabel::su2(l);
            const auto p = project_isotypic(s, lam, quad, q, q);
            CHECK(choi_distance(p, project_isotypic_basis(s, b, lam)) < 1e-10);
            sum += p;
        }
        CHECK(choi_distance(sum, s) < 1e-10);
        const auto tw = twirl(s, quad, q, q);
        CHECK(is_symmetric(tw, b));
        CHECK(choi_distance(twirl(tw, quad, q, q), tw) < 1e-10);
    }
    CHECK_THROWS(project_isotypic(identity_channel(2), IrrepLabel::su2(4), haar_quadrature(GroupKind::SU2, 4), q, q));
}

TEST_CASE("twirled channels commute with rotations") {
    Rng rng(42);
    const auto q = RepSpec::qubit();
    const auto quad = haar_quadrature(GroupKind::SU2, 4);
    const auto tw = twirl(random_channel(2, 2, rng), quad, q, q);
    for (int t = 0; t < 5; ++t) {
        const auto g = random_su2_element(rng);
        CHECK(choi_distance(superop_group_action(tw, g, q, q), tw) < 1e-10);
    }
    CHECK(check_cptp(tw).is_cp);
}

TEST_CASE("spin 1 to qubit modes") {
    const auto a = RepSpec::spin(2), q = RepSpec::qubit();
    const auto b = build_canonical_modes(a, q);
    CHECK(b.modes().size() == 36);
    CHECK(mode_covariance_residual(b, haar_quadrature(GroupKind::SU2, 6)) < 1e-10);
}

TEST_CASE("zn process modes") {
    Rng rng(43);
    const auto r = RepSpec::zn_charges({0, 1}, 3);
    const auto b = build_canonical_modes(r, r);
    CHECK(b.modes().size() == 16);
    const auto quad = haar_quadrature(GroupKind::ZN, 0, 3);
    CHECK(mode_covariance_residual(b, quad) < 1e-12);
    const auto s = random_channel(2, 2, rng);
    const auto tw = twirl(s, quad, r, r);
    CHECK(choi_distance(tw, project_isotypic_basis(s, b, IrrepLabel::zn(0, 3))) < 1e-12);
    CHECK(is_symmetric(tw, b));
    // dephasing in the charge basis is symmetric, a bit flip is not
    CHECK(is_symmetric(kraus_channel({CMatrix::Identity(2, 2) * std::sqrt(0.5), CMatrix(Eigen::Vector2cd(1, -1).asDiagonal()) * std::sqrt(0.5)}, 2, 2), b));
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK_FALSE(is_symmetric(unitary_channel(x), b));
}
