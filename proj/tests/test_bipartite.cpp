#include <doctest.h>

#include <symmetria/bipartite.hpp>
#include <symmetria/random.hpp>

#include <cmath>

using namespace symmetria;

namespace {

const RepSpec& q() {
    static const RepSpec r = RepSpec::qubit();
    return r;
}

std::array<double, 4> bell_weights(const CMatrix& rho) {
    const auto b = bell_projectors();
    std::array<double, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = (rho * b[i]).trace().real();
    return w;
}

void check_weights(const CMatrix& rho, std::array<double, 4> expect) {
    const auto w = bell_weights(rho);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w[i] - expect[i]) < 1e-10);
    // the output is diagonal in the Bell basis
    CMatrix r = CMatrix::Zero(4, 4);
    const auto b = bell_projectors();
    for (int i = 0; i < 4; ++i) r += expect[i] * b[i];
    CHECK((rho - r).norm() < 1e-10);
}

CMatrix pauli(int i) {
    CMatrix m = CMatrix::Zero(2, 2);
    if (i == 1) m << 0, 1, 1, 0;
    if (i == 2) m << 0, cplx(0, -1), cplx(0, 1), 0;
    if (i == 3) m << 1, 0, 0, -1;
    return m;
}

CMatrix bloch_state(const Eigen::Vector3d& r) {
    CMatrix m = CMatrix::Identity(2, 2);
    for (int i = 0; i < 3; ++i) m += r(i) * pauli(i + 1);
    return m / 2.0;
}

Eigen::Vector3d random_ball(Rng& rng) {
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    return v.normalized() * std::cbrt(u(rng));
}

}  // namespace

TEST_CASE("fourteen symmetric elements") {
    const auto& b = two_qubit_basis();
    REQUIRE(b.elements().size() == 14);
    int local = 0, inj = 0, rel = 0;
    for (const auto& e : b.elements()) {
        switch (e.diagram.cls()) {
            case DiagramClass::Local: ++local; break;
            case DiagramClass::Injection: ++inj; break;
            case DiagramClass::Relational: ++rel; break;
        }
    }
    CHECK(local == 4);
    CHECK(inj == 5);
    CHECK(rel == 5);
    CHECK(classify(qubit_bipartite_diagram(1, 1, 0, 1, 1)) == DiagramClass::Local);
    CHECK(classify(qubit_bipartite_diagram(0, 1, 1, 1, 0)) == DiagramClass::Injection);
    CHECK(classify(qubit_bipartite_diagram(1, 0, 1, 1, 0)) == DiagramClass::Injection);
    CHECK(classify(qubit_bipartite_diagram(1, 1, 2, 1, 1)) == DiagramClass::Relational);
    CHECK(classify(qubit_bipartite_diagram(0, 1, 1, 0, 1)) == DiagramClass::Relational);
}

TEST_CASE("elements are invariant and orthogonal") {
    Rng rng(61);
    const auto& b = two_qubit_basis();
    const auto qq = tensor_product(q(), q());
    const int n = static_cast<int>(b.elements().size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j) CHECK(std::abs(hs_inner(b.elements()[i].op, b.elements()[j].op)) < 1e-12);
        const auto g = random_su2_element(rng);
        CHECK(hs_norm(superop_group_action(b.elements()[i].op, g, qq, qq) - b.elements()[i].op) < 1e-12);
    }
}

TEST_CASE("twirl rank") {
    CHECK(twirl_projector_rank(q(), q(), q(), q()) == 14);
    // spin 1 on B: sum_lambda multA(lambda) multB(lambda) = 2*3 + 3*6 + 1*6 + 0
    const auto s1 = RepSpec::spin(2);
    const auto ma = build_canonical_modes(q(), q()), mb = build_canonical_modes(s1, s1);
    int expect = 0;
    for (int l = 0; l <= 8; l += 2) expect += ma.multiplicity(IrrepLabel::su2(l)) * mb.multiplicity(IrrepLabel::su2(l));
    CHECK(expect == 30);
    CHECK(twirl_projector_rank(q(), q(), s1, s1) == expect);
    CHECK(build_symmetric_basis(q(), q(), s1, s1).elements().size() == 30);
}

TEST_CASE("twirled maps expand in the basis") {
    Rng rng(62);
    const auto& b = two_qubit_basis();
    const auto qq = tensor_product(q(), q());
    const auto quad = haar_quadrature(GroupKind::SU2, 8);
    const int excluded = b.find(qubit_bipartite_diagram(1, 0, 1, 1, 0));
    REQUIRE(excluded >= 0);
    for (int t = 0; t < 3; ++t) {
        const auto tw = twirl(random_channel(4, 4, rng), quad, qq, qq);
        const auto d = decompose_symmetric(tw, b);
        CHECK(d.residual < 1e-10);
        CHECK(choi_distance(reconstruct_symmetric(d.coefficients, b), tw) < 1e-10);
        // trace preservation forces the both-outputs-trivial relay to zero
        CHECK(std::abs(d.coefficients[excluded]) < 1e-10);
        CHECK(std::abs(d.coefficients[b.find(qubit_bipartite_diagram(0, 0, 0, 0, 0))] - 1.0) < 1e-10);
    }
    const auto raw = decompose_symmetric(random_superoperator(4, 4, rng), b);
    CHECK(raw.residual > 1e-3);
}

TEST_CASE("dual pairing of hermiticity preserving maps") {
    Rng rng(63);
    const auto& b = two_qubit_basis();
    const auto dp = dual_pairing(b);
    CHECK(dp.defect < 1e-12);
    int minus = 0;
    for (std::size_t i = 0; i < dp.eta.size(); ++i) {
        CHECK(dp.dual_index[i] == static_cast<int>(i));
        if (std::abs(dp.eta[i] + 1.0) < 1e-12) ++minus;
    }
    CHECK(minus == 4);
    const auto qq = tensor_product(q(), q());
    const auto tw = twirl(random_channel(4, 4, rng), haar_quadrature(GroupKind::SU2, 8), qq, qq);
    const auto d = decompose_symmetric(tw, b);
    for (std::size_t i = 0; i < d.coefficients.size(); ++i)
        CHECK(std::abs(d.coefficients[dp.dual_index[i]] - dp.eta[i] * std::conj(d.coefficients[i])) < 1e-10);
}

TEST_CASE("bell state actions") {
    const auto bell = bell_projectors();
    for (int i = 0; i < 4; ++i) check_weights(apply(singlet_preparation(), bell[i]), {0, 0, 0, 1});
    check_weights(apply(relational_e1(), bell[0]), {0.45, 0.15, 0.15, 0.25});
    check_weights(apply(relational_e1(), bell[1]), {0.15, 0.45, 0.15, 0.25});
    check_weights(apply(relational_e1(), bell[3]), {0.25, 0.25, 0.25, 0.25});
    check_weights(apply(relational_e2(), bell[3]), {0, 0, 0, 1});
    check_weights(apply(relational_e2(), bell[0]), {0.2, 0.4, 0.4, 0});
    for (const auto& e : {singlet_preparation(), relational_e1(), relational_e2()}) {
        const auto r = check_cptp(e);
        CHECK(r.is_cp);
        CHECK(r.is_tp);
    }
}

TEST_CASE("bloch data round trip") {
    Rng rng(64);
    const CMatrix rho = random_density(4, rng);
    const auto d = bloch_data(rho);
    CHECK((two_qubit_state(d) - rho).norm() < 1e-12);
    const CMatrix prod = kron(bloch_state(Eigen::Vector3d(0.1, 0.2, 0.3)), bloch_state(Eigen::Vector3d(0, -0.5, 0)));
    const auto dp = bloch_data(prod);
    CHECK((dp.a - Eigen::Vector3d(0.1, 0.2, 0.3)).norm() < 1e-14);
    CHECK((dp.b - Eigen::Vector3d(0, -0.5, 0)).norm() < 1e-14);
}

TEST_CASE("injection output on A") {
    Rng rng(65);
    for (int t = 0; t < 5; ++t) {
        const CMatrix rho = random_density(4, rng);
        const auto in = bloch_data(rho);
        const double x = 0.1 * t, y = 0.2, z = -0.15;
        const auto out = bloch_data(apply(injection_channel(x, y, z), rho));
        CHECK((out.a - injection_bloch(x, y, z, in)).norm() < 1e-12);
        CHECK(out.b.norm() < 1e-12);
        CHECK(out.t.norm() < 1e-12);
    }
}

TEST_CASE("U-NOT point copies the inverted B state onto A") {
    Rng rng(66);
    const auto e = injection_channel(0.0, 1.0 / 3, 0.0);
    const auto r = check_cptp(e);
    CHECK(r.is_cp);
    CHECK(r.is_tp);
    const auto c = injection_coords(0.0, 1.0 / 3, 0.0);
    CHECK(std::abs(c.X) + std::abs(c.Y) + std::abs(c.Z) < 1e-14);
    for (int t = 0; t < 10; ++t) {
        const Eigen::Vector3d a = random_ball(rng), b = random_ball(rng);
        const CMatrix out = apply(e, kron(bloch_state(a), bloch_state(b)));
        const CMatrix oa = partial_trace(out, {2, 2}, 1);
        for (int i = 0; i < 3; ++i) CHECK(std::abs((oa * pauli(i + 1)).trace().real() + b(i) / 3) < 1e-10);
        CHECK((partial_trace(out, {2, 2}, 0) - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);
    }
}

TEST_CASE("injection region agrees with the analytic test") {
    int disagree = 0;
    for (const auto& p : injection_region_scan(9)) {
        const double f = p.X * p.X + p.Z * p.Z - p.Y, h = 2 + p.X - p.Y;
        if (std::abs(f) < 1e-9 || std::abs(h) < 1e-9) continue;
        if (p.cptp != p.analytic_inside) ++disagree;
    }
    CHECK(disagree == 0);
    double x, y, z;
    injection_from_coords(0.3, 1.2, -0.4, x, y, z);
    const auto c = injection_coords(x, y, z);
    CHECK(std::abs(c.X - 0.3) + std::abs(c.Y - 1.2) + std::abs(c.Z + 0.4) < 1e-14);
}

TEST_CASE("relational swap family") {
    CHECK(relational_region_test(0.0, 0.0, 0.0).cptp);
    CHECK_FALSE(relational_region_test(2.0, 0.0, 0.0).cptp);
    const auto s = relational_scales();
    for (auto v : s) CHECK(v == cplx(1.0));
    // swap symmetry of the family
    CMatrix sw = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sw(j * 2 + i, i * 2 + j) = 1;
    const auto e = relational_swap_channel(0.2, -0.1, 0.3);
    const auto swc = unitary_channel(sw);
    CHECK(choi_distance(compose(swc, compose(e, swc)), e) < 1e-12);
}

TEST_CASE("heisenberg unitary") {
    const auto& b = two_qubit_basis();
    CHECK(choi_distance(heisenberg_unitary(0.0), identity_channel(4)) < 1e-14);
    const auto d = decompose_symmetric(heisenberg_unitary(0.37), b);
    CHECK(d.residual < 1e-10);
    // XX + YY + ZZ = 2 SWAP - 1, so the unitary is periodic with period pi
    CHECK(choi_distance(heisenberg_unitary(0.37 + M_PI), heisenberg_unitary(0.37)) < 1e-12);
}

TEST_CASE("local class is larger than product channels") {
    const auto& b = two_qubit_basis();
    const auto e = cplx(0.5) * (tensor(identity_channel(2), identity_channel(2)) + two_qubit_depolarizing());
    const auto r = check_cptp(e);
    CHECK(r.is_cp);
    CHECK(r.is_tp);
    const auto d = decompose_symmetric(e, b);
    CHECK(d.residual < 1e-12);
    const cplx c0 = d.coefficients[b.find(qubit_bipartite_diagram(0, 0, 0, 0, 0))];
    const cplx ca = d.coefficients[b.find(qubit_bipartite_diagram(1, 1, 0, 0, 0))];
    const cplx cb = d.coefficients[b.find(qubit_bipartite_diagram(0, 0, 0, 1, 1))];
    const cplx cab = d.coefficients[b.find(qubit_bipartite_diagram(1, 1, 0, 1, 1))];
    for (const auto& el : b.elements())
        if (el.diagram.cls() != DiagramClass::Local)
            CHECK(std::abs(d.coefficients[b.find(el.diagram)]) < 1e-12);
    // a product of symmetric qubit channels has c0 cab = ca cb
    CHECK(std::abs(c0 * cab - ca * cb) > 0.5);
}
