#include <symmetria/axial.hpp>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace symmetria {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSymTol = 1e-10;
constexpr double kFitTol = 1e-8;

using Vec3 = Eigen::Vector3d;

Vec3 to_vec(double theta, double phi) {
    const auto d = sphere_direction(theta, phi);
    return {d[0], d[1], d[2]};
}

void to_angles(Vec3 n, double& theta, double& phi) {
    n.normalize();
    theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
    phi = std::atan2(n.y(), n.x());
    if (phi < 0) phi += 2 * kPi;
    if (phi >= 2 * kPi) phi -= 2 * kPi;
}

// z > 0, else y > 0, else x > 0.
Vec3 canonical_hemisphere(Vec3 n) {
    constexpr double eps = 1e-12;
    bool flip = false;
    if (std::abs(n.z()) > eps)
        flip = n.z() < 0;
    else if (std::abs(n.y()) > eps)
        flip = n.y() < 0;
    else
        flip = n.x() < 0;
    return flip ? Vec3(-n) : n;
}

struct Channel {
    Diagram d;
    CVector alpha;
};

std::vector<Channel> group_by_diagram(const ModeCoefficients& c) {
    std::vector<Channel> out;
    for (const auto& e : c.entries) {
        if (out.empty() || !(out.back().d == e.diagram)) out.push_back({e.diagram, CVector::Zero(e.diagram.lambda.dim())});
        out.back().alpha(e.k) = e.alpha;
    }
    return out;
}

double residual_sq(const std::vector<Channel>& ch, const Vec3& n) {
    double theta, phi;
    to_angles(n, theta, phi);
    double r = 0.0;
    for (const auto& c : ch) {
        if (c.d.lambda.is_trivial()) continue;
        const CVector y = dual_harmonics(c.d.lambda.two_j(), theta, phi);
        const cplx a = y.dot(c.alpha) / y.squaredNorm();
        r += (c.alpha - a * y).squaredNorm();
    }
    return r;
}

struct TangentFit {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    const std::vector<Channel>* ch;
    Vec3 n0, e1, e2;
    int n_values;

    int inputs() const { return 2; }
    int values() const { return n_values; }

    Vec3 point(const Eigen::VectorXd& x) const { return (n0 + x(0) * e1 + x(1) * e2).normalized(); }

    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
        double theta, phi;
        to_angles(point(x), theta, phi);
        f.resize(n_values);
        int i = 0;
        for (const auto& c : *ch) {
            if (c.d.lambda.is_trivial()) continue;
            const CVector y = dual_harmonics(c.d.lambda.two_j(), theta, phi);
            const cplx a = y.dot(c.alpha) / y.squaredNorm();
            const CVector r = c.alpha - a * y;
            for (int k = 0; k < r.size(); ++k) {
                f(i++) = r(k).real();
                f(i++) = r(k).imag();
            }
        }
        return 0;
    }
};

Vec3 polish(const std::vector<Channel>& ch, Vec3 n) {
    int nv = 0;
    for (const auto& c : ch)
        if (!c.d.lambda.is_trivial()) nv += 2 * c.d.lambda.dim();
    if (nv < 2) return n;
    for (int round = 0; round < 3; ++round) {
        TangentFit f;
        f.ch = &ch;
        f.n0 = n.normalized();
        const Vec3 helper = std::abs(f.n0.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
        f.e1 = f.n0.cross(helper).normalized();
        f.e2 = f.n0.cross(f.e1);
        f.n_values = nv;
        Eigen::NumericalDiff<TangentFit, Eigen::Central> nd(f);
        Eigen::LevenbergMarquardt<Eigen::NumericalDiff<TangentFit, Eigen::Central>> lm(nd);
        lm.parameters.xtol = 1e-15;
        lm.parameters.ftol = 1e-15;
        Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
        lm.minimize(x);
        const Vec3 next = f.point(x);
        if (residual_sq(ch, next) <= residual_sq(ch, n)) n = next;
        if ((next - f.n0).norm() < 1e-13) break;
    }
    return n;
}

Vec3 grid_start(const std::vector<Channel>& ch) {
    Vec3 best = Vec3::UnitZ();
    double best_r = residual_sq(ch, best);
    for (int i = 0; i <= 36; ++i)
        for (int j = 0; j < 72; ++j) {
            const Vec3 n = to_vec(kPi * i / 36.0, 2 * kPi * j / 72.0);
            const double r = residual_sq(ch, n);
            if (r < best_r) {
                best_r = r;
                best = n;
            }
        }
    return best;
}

// alpha_1 components (m = +1, 0, -1) -> Cartesian direction up to a complex scale.
std::optional<Vec3> analytic_start(const std::vector<Channel>& ch) {
    const Channel* best = nullptr;
    for (const auto& c : ch)
        if (c.d.lambda.two_j() == 2 && (!best || c.alpha.norm() > best->alpha.norm())) best = &c;
    if (!best || best->alpha.norm() <= 1e-8) return std::nullopt;
    const cplx ap = best->alpha(0), a0 = best->alpha(1), am = best->alpha(2);
    const double s2 = std::sqrt(2.0);
    Eigen::Vector3cd u((am - ap) / s2, (am + ap) / (cplx(0, 1) * s2), a0);
    int imax = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u(i)) > std::abs(u(imax))) imax = i;
    const cplx ph = std::conj(u(imax)) / std::abs(u(imax));
    Vec3 n = (u * ph).real();
    if (n.norm() < 1e-12) return std::nullopt;
    return n.normalized();
}

Superoperator outer_map(const std::vector<std::pair<cplx, std::pair<CMatrix, CMatrix>>>& terms) {
    // rho -> sum c X tr(Y rho)
    const int d = static_cast<int>(terms.front().second.first.rows());
    CMatrix t = CMatrix::Zero(d * d, d * d);
    for (const auto& [c, xy] : terms) t += c * vec(xy.first) * vec(xy.second.adjoint()).adjoint();
    return Superoperator::from_transfer(t, d, d);
}

struct Paulis {
    CMatrix id, x, y, z, plus, minus;
    Paulis() : id(CMatrix::Identity(2, 2)), x(2, 2), y(2, 2), z(2, 2) {
        x << 0, 1, 1, 0;
        y << 0, cplx(0, -1), cplx(0, 1), 0;
        z << 1, 0, 0, -1;
        const double s2 = std::sqrt(2.0);
        plus = (x + cplx(0, 1) * y) / s2;
        minus = (x - cplx(0, 1) * y) / s2;
    }
};

Diagram qubit_diagram(int a_in, int a_out, int lambda) {
    return Diagram{IrrepLabel::su2(2 * a_in), 0, IrrepLabel::su2(2 * a_out), 0, IrrepLabel::su2(2 * lambda)};
}

}  // namespace

cplx sph_harm(int two_j, int two_m, double theta, double phi) {
    if (two_j < 0 || two_j % 2 != 0) throw std::invalid_argument("sph_harm: integer j required");
    if (std::abs(two_m) > two_j || two_m % 2 != 0) throw std::invalid_argument("sph_harm: invalid m");
    const int l = two_j / 2, m = two_m / 2;
    const unsigned am = static_cast<unsigned>(std::abs(m));
    const cplx y = std::sph_legendre(static_cast<unsigned>(l), am, theta) * std::exp(cplx(0, am * phi));
    if (m >= 0) return y;
    return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

CVector dual_harmonics(int two_j, double theta, double phi) {
    CVector y(two_j + 1);
    for (int k = 0; k <= two_j; ++k) {
        const int two_m = two_j - 2 * k;
        const double sign = ((two_m / 2) % 2 == 0) ? 1.0 : -1.0;
        y(k) = sign * sph_harm(two_j, -two_m, theta, phi);
    }
    return y;
}

std::array<double, 3> sphere_direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

GroupElement rotation_to(double theta, double phi) {
    double a = std::fmod(phi, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return GroupElement::su2(a, theta, 0.0);
}

std::string OrbitPoint::to_string() const {
    switch (kind) {
        case Kind::PointOrbit: return "point";
        case Kind::Sphere: return "sphere";
        case Kind::FullGroup: return "full-group";
    }
    return "";
}

double polar_fit_residual(const ModeCoefficients& c, double theta, double phi) {
    return std::sqrt(residual_sq(group_by_diagram(c), to_vec(theta, phi)));
}

PolarData polar_from_coefficients(const ModeCoefficients& c) {
    const auto ch = group_by_diagram(c);
    if (!ch.empty() && ch.front().d.lambda.kind() != GroupKind::SU2)
        throw std::invalid_argument("polar_decompose: SU(2) process modes required");
    PolarData out;
    double asym = 0.0, half = 0.0;
    for (const auto& x : ch) {
        if (x.d.lambda.is_trivial()) continue;
        asym = std::max(asym, x.alpha.norm());
        if (x.d.lambda.two_j() % 2 != 0) half = std::max(half, x.alpha.norm());
    }
    const double s4pi = std::sqrt(4 * kPi);
    if (asym <= kSymTol) {
        out.orbit_point.kind = OrbitPoint::Kind::PointOrbit;
        for (const auto& x : ch) out.invariants[x.d] = x.d.lambda.is_trivial() ? s4pi * x.alpha(0) : cplx(0.0);
        out.fit_residual = asym;
        return out;
    }
    if (half > kSymTol) {
        // Spinor-valued modes have no harmonic on the sphere.
        out.orbit_point.kind = OrbitPoint::Kind::FullGroup;
        out.orbit_point.g = GroupElement::identity(GroupKind::SU2);
        out.warning = true;
        for (const auto& x : ch)
            if (x.d.lambda.is_trivial()) out.invariants[x.d] = s4pi * x.alpha(0);
        out.fit_residual = half;
        return out;
    }
    Vec3 n = analytic_start(ch).value_or(grid_start(ch));
    n = canonical_hemisphere(polish(ch, n));
    double theta, phi;
    to_angles(n, theta, phi);
    for (const auto& x : ch) {
        const CVector y = dual_harmonics(x.d.lambda.two_j(), theta, phi);
        out.invariants[x.d] = y.dot(x.alpha) / y.squaredNorm();
    }
    out.fit_residual = std::sqrt(residual_sq(ch, n));
    out.orbit_point.theta = theta;
    out.orbit_point.phi = phi;
    if (out.fit_residual > kFitTol) {
        out.orbit_point.kind = OrbitPoint::Kind::FullGroup;
        out.orbit_point.g = rotation_to(theta, phi);
        out.warning = true;
    } else {
        out.orbit_point.kind = OrbitPoint::Kind::Sphere;
    }
    return out;
}

PolarData polar_decompose(const Superoperator& s, const ProcessModeBasis& basis) {
    return polar_from_coefficients(decompose(s, basis));
}

std::vector<SingleQubitMode> single_qubit_modes() {
    const Paulis p;
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    const cplx i(0, 1);
    std::vector<std::pair<Diagram, Superoperator>> raw;
    raw.push_back({qubit_diagram(0, 0, 0), outer_map({{0.5, {p.id, p.id}}})});
    raw.push_back({qubit_diagram(1, 1, 0), identity_channel(2) - outer_map({{0.5, {p.id, p.id}}})});
    for (const CMatrix* s : {&p.plus, &p.z, &p.minus}) raw.push_back({qubit_diagram(0, 1, 1), outer_map({{1.0, {*s, p.id}}})});
    const double c1 = 1.0 / (2 * s2);
    raw.push_back({qubit_diagram(1, 1, 1), outer_map({{-c1, {p.plus, p.z}}, {c1, {p.z, p.plus}}})});
    raw.push_back({qubit_diagram(1, 1, 1), outer_map({{i * c1, {p.x, p.y}}, {-i * c1, {p.y, p.x}}})});
    raw.push_back({qubit_diagram(1, 1, 1), outer_map({{-c1, {p.minus, p.z}}, {c1, {p.z, p.minus}}})});
    const Superoperator m2 = outer_map({{0.5, {p.plus, p.plus}}});
    const Superoperator m1 = outer_map({{-c1, {p.plus, p.z}}, {-c1, {p.z, p.plus}}});
    const double c0 = -1.0 / (2 * s6);
    const Superoperator z0 = outer_map({{-c0 / 2, {p.x, p.x}}, {-c0 / 2, {p.y, p.y}}, {c0, {p.z, p.z}}});
    for (const Superoperator& s : {m2, m1, z0, cplx(-1.0) * hermitian_conjugate(m1), hermitian_conjugate(m2)})
        raw.push_back({qubit_diagram(1, 1, 2), s});
    std::vector<SingleQubitMode> out;
    for (std::size_t j = 0; j < raw.size(); ++j) {
        int index = 0;
        for (std::size_t q = 0; q < j; ++q)
            if (raw[q].first == raw[j].first) ++index;
        const double n = hs_norm(raw[j].second);
        out.push_back({raw[j].first, index, n, (1.0 / n) * raw[j].second});
    }
    return out;
}

double single_qubit_span_defect(const std::vector<SingleQubitMode>& hand, const ProcessModeBasis& canonical) {
    double worst = 0.0;
    for (const auto& d : canonical.diagrams()) {
        std::vector<const Superoperator*> hs;
        for (const auto& h : hand)
            if (h.diagram == d) hs.push_back(&h.op);
        if (hs.empty()) continue;
        const int n = d.lambda.dim();
        CMatrix m(n, static_cast<int>(hs.size()));
        for (int k = 0; k < n; ++k)
            for (std::size_t j = 0; j < hs.size(); ++j) m(k, j) = hs_inner(canonical.mode(d, k), *hs[j]);
        if (m.cols() != n) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, (m.adjoint() * m - CMatrix::Identity(n, n)).norm());
        worst = std::max(worst, (m * m.adjoint() - CMatrix::Identity(n, n)).norm());
    }
    return worst;
}

Superoperator axial_channel(AxialChannel kind, double param) {
    const Paulis p;
    CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    const Superoperator id = identity_channel(2);
    const Superoperator meas = kraus_channel({p0, p1}, 2, 2);
    const Superoperator depol = Superoperator::from_choi(0.5 * CMatrix::Identity(4, 4), 2, 2);
    switch (kind) {
        case AxialChannel::Dephasing: return cplx(param) * id + cplx(1 - param) * meas;
        case AxialChannel::ProjectiveMeasurement: return meas;
        case AxialChannel::Rotation: return unitary_channel(expm_hermitian(p.z, -param / 2));
        case AxialChannel::StatePreparation:
            return Superoperator::from_choi(kron(0.5 * (p.id + param * p.z), p.id), 2, 2);
        case AxialChannel::Depolarising: return cplx(param) * id + cplx(1 - param) * depol;
    }
    throw std::invalid_argument("axial_channel: unknown kind");
}

std::string axial_channel_name(AxialChannel kind) {
    switch (kind) {
        case AxialChannel::Dephasing: return "dephasing";
        case AxialChannel::ProjectiveMeasurement: return "projective-measurement";
        case AxialChannel::Rotation: return "rotation";
        case AxialChannel::StatePreparation: return "state-preparation";
        case AxialChannel::Depolarising: return "depolarising";
    }
    return "";
}

std::array<Diagram, 4> axial_slot_diagrams() {
    return {qubit_diagram(1, 1, 0), qubit_diagram(0, 1, 1), qubit_diagram(1, 1, 1), qubit_diagram(1, 1, 2)};
}

std::array<double, 4> axial_table_factors() { return {-1.0, 1.0, 1.0, -std::sqrt(1.5)}; }

std::array<cplx, 4> axial_listed_values(AxialChannel kind, double p) {
    const double r3 = std::sqrt(3.0), r2 = std::sqrt(2.0);
    const cplx i(0, 1);
    switch (kind) {
        case AxialChannel::Dephasing: return {(2 * p - 1) / r3, 0.0, 1 - p, 0.0};
        case AxialChannel::ProjectiveMeasurement: return {-1 / r3, 0.0, 0.0, 1.0};
        case AxialChannel::Rotation:
            return {-(1 + 2 * std::cos(p)) / r3, 0.0, -i * r2 * std::sin(2 * p), 2 * std::sin(p) * std::sin(p)};
        case AxialChannel::StatePreparation: return {0.0, p, 0.0, 0.0};
        case AxialChannel::Depolarising: return {(1 - 4 * p) / r3, 0.0, 0.0, 0.0};
    }
    throw std::invalid_argument("axial_listed_values: unknown kind");
}

std::array<cplx, 4> axial_expected_values(AxialChannel kind, double p) {
    const double r3 = std::sqrt(3.0), r2 = std::sqrt(2.0);
    const cplx i(0, 1);
    switch (kind) {
        case AxialChannel::Dephasing: return {-(1 + 2 * p) / r3, 0.0, 0.0, 1 - p};
        case AxialChannel::ProjectiveMeasurement: return {-1 / r3, 0.0, 0.0, 1.0};
        case AxialChannel::Rotation:
            return {-(1 + 2 * std::cos(p)) / r3, 0.0, -i * r2 * std::sin(p), 2 * std::sin(p / 2) * std::sin(p / 2)};
        case AxialChannel::StatePreparation: return {0.0, p, 0.0, 0.0};
        case AxialChannel::Depolarising: return {-r3 * p, 0.0, 0.0, 0.0};
    }
    throw std::invalid_argument("axial_expected_values: unknown kind");
}

namespace {

std::array<std::string, 4> errata(AxialChannel kind) {
    switch (kind) {
        case AxialChannel::Dephasing:
            return {"listed (2p-1)/sqrt3; the p = 0 end must equal the measurement row and p = 1 the identity, "
                    "giving -(1+2p)/sqrt3",
                    "", "listed 1-p sits in the antisymmetric spin-1 slot; dephasing has no antisymmetric part",
                    "listed 0; the symmetric traceless part is proportional to 1-p"};
        case AxialChannel::ProjectiveMeasurement: return {"", "", "", ""};
        case AxialChannel::Rotation:
            return {"", "", "listed sin(2 phi); the antisymmetric part of a rotation by phi is sin(phi)",
                    "listed 2 sin^2(phi); the symmetric traceless part is 1 - cos(phi) = 2 sin^2(phi/2)"};
        case AxialChannel::StatePreparation: return {"", "", "", ""};
        case AxialChannel::Depolarising:
            return {"listed (1-4p)/sqrt3 is nonzero for the fully depolarising map (p = 0), which has no "
                    "spin-0 input mode; equals -sqrt3 p",
                    "", "", ""};
    }
    return {"", "", "", ""};
}

}  // namespace

AxialRow axial_table_row(AxialChannel kind, double param) {
    const auto basis = build_canonical_modes(RepSpec::qubit(), RepSpec::qubit());
    const auto hand = single_qubit_modes();
    const auto slots = axial_slot_diagrams();
    const auto factors = axial_table_factors();
    const std::array<int, 4> mid = {0, 1, 1, 2};  // m = 0 component in listed order

    const Superoperator e = axial_channel(kind, param);
    const auto coeffs = decompose(e, basis);
    const PolarData pd = polar_from_coefficients(coeffs);
    const auto listed = axial_listed_values(kind, param);
    const auto notes = errata(kind);

    AxialRow row;
    row.kind = kind;
    row.name = axial_channel_name(kind);
    row.parameter = param;
    row.fit_residual = pd.fit_residual;
    row.orbit_point = pd.orbit_point;

    // Polar reconstruction of the channel.
    const double th = pd.orbit_point.theta, ph = pd.orbit_point.phi;
    ModeCoefficients rec;
    for (const auto& m : basis.modes()) {
        const cplx a = pd.invariants.count(m.diagram) ? pd.invariants.at(m.diagram) : cplx(0.0);
        const cplx y = m.diagram.lambda.is_trivial() ? cplx(1.0 / std::sqrt(4 * kPi))
                                                     : dual_harmonics(m.diagram.lambda.two_j(), th, ph)(m.k);
        rec.entries.push_back({m.diagram, m.k, a * y});
    }
    const Superoperator from_polar = reconstruct(rec, basis);
    row.reconstruction_error = hs_norm(e - from_polar);

    for (int s = 0; s < 4; ++s) {
        const SingleQubitMode* h = nullptr;
        for (const auto& x : hand)
            if (x.diagram == slots[s] && x.index == mid[s]) h = &x;
        AxialEntry& en = row.entries[s];
        en.listed = listed[s];
        en.oracle = factors[s] * hs_inner(h->op, e);
        en.polar = factors[s] * hs_inner(h->op, from_polar);
        en.deviation = std::abs(en.polar - en.listed);
        en.erratum = !notes[s].empty();
        en.note = notes[s];
    }
    return row;
}

std::vector<AxialRow> axial_table() {
    return {axial_table_row(AxialChannel::Dephasing, 0.3), axial_table_row(AxialChannel::ProjectiveMeasurement, 0.0),
            axial_table_row(AxialChannel::Rotation, 0.7), axial_table_row(AxialChannel::StatePreparation, 0.6),
            axial_table_row(AxialChannel::Depolarising, 0.4)};
}

}  // namespace symmetria
