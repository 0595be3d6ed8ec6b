#include <symmetria/bipartite.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symmetria {

namespace {

bool is_trivial_mode(const IrrepLabel& a) { return a.is_trivial(); }

CMatrix pauli(int i) {
    CMatrix m = CMatrix::Zero(2, 2);
    switch (i) {
        case 0: m(0, 0) = m(1, 1) = 1; break;
        case 1: m(0, 1) = m(1, 0) = 1; break;
        case 2: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case 3: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

}  // namespace

std::string to_string(DiagramClass c) {
    switch (c) {
        case DiagramClass::Local: return "local";
        case DiagramClass::Injection: return "injection";
        case DiagramClass::Relational: return "relational";
    }
    return "";
}

DiagramClass classify(const BipartiteDiagram& d) {
    if (d.a.lambda.is_trivial()) return DiagramClass::Local;
    if (is_trivial_mode(d.a.a_out) || is_trivial_mode(d.b.a_out)) return DiagramClass::Injection;
    return DiagramClass::Relational;
}

DiagramClass BipartiteDiagram::cls() const { return classify(*this); }

std::string BipartiteDiagram::to_string() const {
    auto leg = [](const IrrepLabel& l, int m) {
        return m == 0 ? l.to_string() : l.to_string() + "#" + std::to_string(m);
    };
    return "[(" + leg(a.a_in, a.in_mult) + "," + leg(a.a_out, a.out_mult) + ")->" + a.lambda.to_string() + "->(" +
           leg(b.a_in, b.in_mult) + "," + leg(b.a_out, b.out_mult) + ")]";
}

SymmetricBasis::SymmetricBasis(ProcessModeBasis modes_a, ProcessModeBasis modes_b,
                               std::vector<SymmetricElement> elements)
    : modes_a_(std::move(modes_a)), modes_b_(std::move(modes_b)), elements_(std::move(elements)) {}

RepSpec SymmetricBasis::rep_in() const { return tensor_product(modes_a_.rep_in(), modes_b_.rep_in()); }
RepSpec SymmetricBasis::rep_out() const { return tensor_product(modes_a_.rep_out(), modes_b_.rep_out()); }

int SymmetricBasis::find(const BipartiteDiagram& d) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].diagram == d) return static_cast<int>(i);
    return -1;
}

const Superoperator& SymmetricBasis::element(const BipartiteDiagram& d) const {
    const int i = find(d);
    if (i < 0) throw std::invalid_argument("no symmetric element for " + d.to_string());
    return elements_[i].op;
}

SymmetricBasis build_symmetric_basis(const RepSpec& a_in, const RepSpec& a_out, const RepSpec& b_in,
                                     const RepSpec& b_out) {
    for (const RepSpec* r : {&a_out, &b_in, &b_out})
        if (r->kind() != a_in.kind() || r->modulus() != a_in.modulus())
            throw std::invalid_argument("build_symmetric_basis: group mismatch");
    ProcessModeBasis ma = build_canonical_modes(a_in, a_out);
    ProcessModeBasis mb = build_canonical_modes(b_in, b_out);
    std::vector<SymmetricElement> out;
    for (const auto& da : ma.diagrams())
        for (const auto& db : mb.diagrams()) {
            if (db.lambda != dual(da.lambda)) continue;
            const IrrepLabel& l = da.lambda;
            Superoperator chi = Superoperator::zero(a_in.dim() * b_in.dim(), a_out.dim() * b_out.dim());
            for (int k = 0; k < l.dim(); ++k)
                chi += cplx(dual_phase(l, k)) * tensor(ma.mode(da, k), mb.mode(db, dual_index(l, k)));
            out.push_back({BipartiteDiagram{da, db}, std::move(chi)});
        }
    return SymmetricBasis(std::move(ma), std::move(mb), std::move(out));
}

SymmetricDecomposition decompose_symmetric(const Superoperator& s, const SymmetricBasis& basis) {
    SymmetricDecomposition d;
    for (const auto& e : basis.elements())
        d.coefficients.push_back(hs_inner(e.op, s) / static_cast<double>(e.diagram.a.lambda.dim()));
    d.residual = hs_norm(s - reconstruct_symmetric(d.coefficients, basis));
    return d;
}

Superoperator reconstruct_symmetric(const std::vector<cplx>& c, const SymmetricBasis& basis) {
    const auto& el = basis.elements();
    if (c.size() != el.size()) throw std::invalid_argument("reconstruct_symmetric: size mismatch");
    Superoperator out = Superoperator::zero(el.front().op.dim_in(), el.front().op.dim_out());
    for (std::size_t i = 0; i < el.size(); ++i)
        if (c[i] != cplx(0.0)) out += c[i] * el[i].op;
    return out;
}

int twirl_projector_rank(const RepSpec& a_in, const RepSpec& a_out, const RepSpec& b_in, const RepSpec& b_out) {
    const RepSpec in = tensor_product(a_in, b_in), out = tensor_product(a_out, b_out);
    const int bl = mode_space_max_two_j(in, out);
    const auto quad = haar_quadrature(in.kind(), bl, in.modulus());
    const int n = in.dim() * in.dim() * out.dim() * out.dim();
    CMatrix p = CMatrix::Zero(n, n);
    for (const auto& node : quad.nodes) {
        const CMatrix u = rep_matrix(in, node.g), v = rep_matrix(out, node.g);
        p += node.weight * kron(kron(v, v.conjugate()), kron(u.conjugate(), u));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (p + p.adjoint()), Eigen::EigenvaluesOnly);
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 0.5) ++rank;
    return rank;
}

DualPairing dual_pairing(const SymmetricBasis& basis) {
    const auto& el = basis.elements();
    DualPairing p;
    for (const auto& e : el) {
        const Superoperator h = hermitian_conjugate(e.op);
        int best = 0;
        double best_v = -1.0;
        for (std::size_t j = 0; j < el.size(); ++j) {
            const double v = std::abs(hs_inner(el[j].op, h));
            if (v > best_v) {
                best_v = v;
                best = static_cast<int>(j);
            }
        }
        const cplx eta = hs_inner(el[best].op, h) / static_cast<double>(el[best].diagram.a.lambda.dim());
        p.dual_index.push_back(best);
        p.eta.push_back(eta);
        p.defect = std::max(p.defect, hs_norm(h - eta * el[best].op));
    }
    return p;
}

const SymmetricBasis& two_qubit_basis() {
    static const SymmetricBasis basis =
        build_symmetric_basis(RepSpec::qubit(), RepSpec::qubit(), RepSpec::qubit(), RepSpec::qubit());
    return basis;
}

BipartiteDiagram qubit_bipartite_diagram(int a_in, int a_out, int lambda, int b_in, int b_out) {
    auto s = [](int j) { return IrrepLabel::su2(2 * j); };
    return BipartiteDiagram{Diagram{s(a_in), 0, s(a_out), 0, s(lambda)}, Diagram{s(b_in), 0, s(b_out), 0, s(lambda)}};
}

Eigen::Vector3d BlochData::t_vector() const {
    return {t(1, 2) - t(2, 1), t(2, 0) - t(0, 2), t(0, 1) - t(1, 0)};
}

BlochData bloch_data(const CMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("bloch_data: two-qubit state required");
    BlochData d;
    for (int i = 0; i < 3; ++i) {
        d.a(i) = (rho * kron(pauli(i + 1), pauli(0))).trace().real();
        d.b(i) = (rho * kron(pauli(0), pauli(i + 1))).trace().real();
        for (int j = 0; j < 3; ++j) d.t(i, j) = (rho * kron(pauli(i + 1), pauli(j + 1))).trace().real();
    }
    return d;
}

CMatrix two_qubit_state(const BlochData& d) {
    CMatrix r = kron(pauli(0), pauli(0));
    for (int i = 0; i < 3; ++i) {
        r += d.a(i) * kron(pauli(i + 1), pauli(0)) + d.b(i) * kron(pauli(0), pauli(i + 1));
        for (int j = 0; j < 3; ++j) r += d.t(i, j) * kron(pauli(i + 1), pauli(j + 1));
    }
    return 0.25 * r;
}

Superoperator two_qubit_depolarizing() {
    return Superoperator::from_choi(0.25 * CMatrix::Identity(16, 16), 4, 4);
}

std::array<cplx, 3> injection_scales() { return {-1.0, -1.0, cplx(0.0, 1.0)}; }

Superoperator injection_channel(double x, double y, double z) {
    const auto& b = two_qubit_basis();
    const auto s = injection_scales();
    const std::array<BipartiteDiagram, 3> th = {qubit_bipartite_diagram(1, 1, 0, 0, 0),
                                                qubit_bipartite_diagram(0, 1, 1, 1, 0),
                                                qubit_bipartite_diagram(1, 1, 1, 1, 0)};
    const std::array<double, 3> c = {x, y, z};
    Superoperator e = two_qubit_depolarizing();
    for (int i = 0; i < 3; ++i) e += (c[i] * s[i]) * b.element(th[i]);
    return e;
}

Eigen::Vector3d injection_bloch(double x, double y, double z, const BlochData& in) {
    return -(x * in.a / std::sqrt(3.0) + y * in.b + z * in.t_vector() / std::sqrt(2.0));
}

InjectionCoords injection_coords(double x, double y, double z) {
    return {(1 + std::sqrt(3.0) * x - 3 * y) / 2, 1 - 3 * y, 3 * z / std::sqrt(2.0)};
}

void injection_from_coords(double X, double Y, double Z, double& x, double& y, double& z) {
    y = (1 - Y) / 3;
    x = (2 * X - Y) / std::sqrt(3.0);
    z = std::sqrt(2.0) * Z / 3;
}

RegionPoint injection_region_test(double x, double y, double z) {
    const auto c = injection_coords(x, y, z);
    const auto rep = check_cptp(injection_channel(x, y, z));
    RegionPoint p{x, y, z, c.X, c.Y, c.Z, rep.min_choi_eigenvalue, rep.is_cp && rep.is_tp, false};
    p.analytic_inside = c.X * c.X + c.Z * c.Z <= c.Y && 2 + c.X - c.Y >= 0;
    return p;
}

std::vector<RegionPoint> injection_region_scan(int grid) {
    if (grid < 2) throw std::invalid_argument("injection_region_scan: grid must be at least 2");
    std::vector<RegionPoint> out;
    out.reserve(static_cast<std::size_t>(grid) * grid * grid);
    auto lin = [grid](double lo, double hi, int i) { return lo + (hi - lo) * i / (grid - 1); };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int k = 0; k < grid; ++k) {
                double x, y, z;
                injection_from_coords(lin(-1.25, 2.25, i), lin(-0.25, 4.25, j), lin(-1.75, 1.75, k), x, y, z);
                out.push_back(injection_region_test(x, y, z));
            }
    return out;
}

std::array<cplx, 5> relational_scales() { return {1.0, 1.0, 1.0, 1.0, 1.0}; }

Superoperator relational_channel(const std::array<double, 5>& x) {
    const auto& b = two_qubit_basis();
    const auto s = relational_scales();
    const std::array<BipartiteDiagram, 5> th = {
        qubit_bipartite_diagram(0, 1, 1, 0, 1), qubit_bipartite_diagram(1, 1, 1, 1, 1),
        qubit_bipartite_diagram(1, 1, 1, 0, 1), qubit_bipartite_diagram(0, 1, 1, 1, 1),
        qubit_bipartite_diagram(1, 1, 2, 1, 1)};
    Superoperator e = two_qubit_depolarizing();
    for (int i = 0; i < 5; ++i) e += (x[i] * s[i]) * b.element(th[i]);
    return e;
}

Superoperator relational_swap_channel(double x, double y, double z) {
    return relational_channel({x, y, 0.0, 0.0, z});
}

RelationalPoint relational_region_test(double x, double y, double z) {
    const auto rep = check_cptp(relational_swap_channel(x, y, z));
    RelationalPoint p{x, y, z, rep.min_choi_eigenvalue, rep.is_cp && rep.is_tp, {}};
    const double a = 9 * x + 3 * y + 5 * z - 3, c = 5 * z + 21 * y - 12, e = 1 - 2 * y, f = 6 * y + 3 * x;
    p.quartics[0] = a * a - (c * c - 108 * e * e);
    p.quartics[1] = f * f - (6 * x + 3 + 20 * z);
    p.quartics[2] = y * y - (1 - x) * (1 - x) / 4;
    p.quartics[3] = y * y - ((x + 5.0 / 3) * (x + 5.0 / 3) / 4 - 4.0 / 9);
    return p;
}

std::vector<RelationalPoint> relational_region_scan(int grid) {
    if (grid < 2) throw std::invalid_argument("relational_region_scan: grid must be at least 2");
    std::vector<RelationalPoint> out;
    auto lin = [grid](double lo, double hi, int i) { return lo + (hi - lo) * i / (grid - 1); };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int k = 0; k < grid; ++k)
                out.push_back(relational_region_test(lin(-0.5, 1.1, i), lin(-0.8, 0.8, j), lin(-0.6, 1.0, k)));
    return out;
}

Superoperator singlet_preparation() { return relational_swap_channel(1.0, 0.0, 0.0); }
Superoperator relational_e1() { return relational_swap_channel(0.0, -0.5, 0.3); }
Superoperator relational_e2() { return relational_swap_channel(0.0, 0.5, 0.3); }

std::array<CMatrix, 4> bell_projectors() {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<CVector, 4> v;
    for (auto& x : v) x = CVector::Zero(4);
    v[0](0) = r, v[0](3) = r;   // phi+
    v[1](0) = r, v[1](3) = -r;  // phi-
    v[2](1) = r, v[2](2) = r;   // psi+
    v[3](1) = r, v[3](2) = -r;  // psi-
    std::array<CMatrix, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = v[i] * v[i].adjoint();
    return out;
}

CMatrix heisenberg_matrix(double t) {
    CMatrix h = CMatrix::Zero(4, 4);
    for (int i = 1; i <= 3; ++i) h += kron(pauli(i), pauli(i));
    return expm_hermitian(h, -t);
}

Superoperator heisenberg_unitary(double t) { return unitary_channel(heisenberg_matrix(t)); }

}  // namespace symmetria
