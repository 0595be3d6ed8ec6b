#include "cli.hpp"

#include <symmetria/axial.hpp>
#include <symmetria/bipartite.hpp>
#include <symmetria/gauge.hpp>
#include <symmetria/process_modes.hpp>
#include <symmetria/random.hpp>
#include <symmetria/repeatability.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace symmetria::cli {

using nlohmann::json;

namespace {

// polar fits and table deviations are judged at 1e-8
constexpr double kPolarTol = 1e-8;

// 12 significant digits, then shortest round trip when serialized
double r12(double x) {
    if (!std::isfinite(x)) return x;
    return std::stod(fmt::format("{:.12g}", x));
}

json cnum(cplx z) { return json::array({r12(z.real()), r12(z.imag())}); }

json conventions() {
    return {{"vec", "row-major: vec(|a><b|) = e_a (x) e_b"},
            {"choi", "J[(a,c),(b,d)] = <a|S(|c><d|)|b>"},
            {"clebsch_gordan", "Condon-Shortley"},
            {"wigner_d", "D(a,b,c) = exp(-i a Jz) exp(-i b Jy) exp(-i c Jz), rows m = j..-j"},
            {"ito_phase", "first nonzero entry of each k = 0 component real positive"},
            {"float_format", "12 significant digits"}};
}

json report(const std::string& cmd, json args, json tolerances, json results) {
    return {{"command", cmd},
            {"args", std::move(args)},
            {"tolerances", std::move(tolerances)},
            {"conventions", conventions()},
            {"results", std::move(results)}};
}

cplx parse_complex(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ParseError("complex entries must be [re, im] pairs");
    return {v[0].get<double>(), v[1].get<double>()};
}

CMatrix parse_matrix(const json& m) {
    if (!m.is_array() || m.empty() || !m[0].is_array()) throw ParseError("matrix must be a list of rows");
    const std::size_t rows = m.size(), cols = m[0].size();
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!m[i].is_array() || m[i].size() != cols) throw ParseError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = parse_complex(m[i][j]);
    }
    return out;
}

RepSpec parse_factor(const json& blocks, GroupKind kind, int modulus) {
    if (!blocks.is_array() || blocks.empty()) throw ParseError("rep factor must be a non-empty list of blocks");
    std::vector<RepBlock> out;
    for (const auto& b : blocks) {
        if (!b.is_object()) throw ParseError("rep block must be an object");
        const int mult = b.value("mult", 1);
        if (mult < 1) throw ParseError("block multiplicity must be positive");
        if (kind == GroupKind::SU2) {
            if (!b.contains("spin") || !b["spin"].is_number()) throw ParseError("su2 block needs a numeric spin");
            const double two = 2.0 * b["spin"].get<double>();
            if (two < 0 || std::abs(two - std::round(two)) > 1e-12) throw ParseError("spin must be a half-integer");
            out.push_back({IrrepLabel::su2(static_cast<int>(std::lround(two))), mult});
        } else {
            if (!b.contains("charge") || !b["charge"].is_number_integer())
                throw ParseError("zn block needs an integer charge");
            out.push_back({IrrepLabel::zn(b["charge"].get<int>(), modulus), mult});
        }
    }
    return RepSpec(kind, out);
}

// "in": list of blocks, or list of factors (each a list of blocks) combined by tensor product
RepSpec parse_rep(const json& v, GroupKind kind, int modulus) {
    if (!v.is_array() || v.empty()) throw ParseError("rep must be a non-empty list");
    if (v[0].is_object()) return parse_factor(v, kind, modulus);
    RepSpec r = parse_factor(v[0], kind, modulus);
    for (std::size_t i = 1; i < v.size(); ++i) r = tensor_product(r, parse_factor(v[i], kind, modulus));
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Rng make_rng(std::uint64_t seed) {
    if (const char* env = std::getenv("SYMMETRIA_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("SYMMETRIA_SEED must be an unsigned integer");
        }
    }
    return Rng(seed);
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("SYMMETRIA_SEED")) return std::stoull(env);
    return seed;
}

json mode_table(const ModeCoefficients& c, double tol) {
    json rows = json::array();
    for (const auto& e : c.entries) {
        if (std::abs(e.alpha) <= tol) continue;
        rows.push_back({{"diagram", e.diagram.to_string()},
                        {"lambda", e.diagram.lambda.to_string()},
                        {"k", e.k},
                        {"alpha", cnum(e.alpha)}});
    }
    return rows;
}

// ----- subcommands -----

int cmd_decompose(const std::string& file, const std::string& group, double tol, bool nonphysical, json& out) {
    const ChannelFile cf = load_channel_file(file, nonphysical);
    if (!group.empty()) {
        const GroupKind want = group == "su2" ? GroupKind::SU2 : GroupKind::ZN;
        if (group != "su2" && group != "zn") throw ParseError("--group must be su2 or zn");
        if (want != cf.rep_in.kind()) throw SemanticError("--group does not match the file's group");
    }
    const ProcessModeBasis basis = build_canonical_modes(cf.rep_in, cf.rep_out);
    const ModeCoefficients c = decompose(cf.map, basis);
    const double recon = choi_distance(reconstruct(c, basis), cf.map);
    double asym = 0.0;
    for (const auto& e : c.entries)
        if (!e.diagram.lambda.is_trivial()) asym = std::max(asym, std::abs(e.alpha));
    const bool sym = is_symmetric(cf.map, basis, tol);
    const auto rep = check_cptp(cf.map);
    out = report("decompose", {{"file", file}, {"group", group}}, {{"tol", tol}},
                 {{"coefficients", mode_table(c, tol)},
                  {"n_modes", static_cast<int>(basis.modes().size())},
                  {"max_asymmetric_coefficient", r12(asym)},
                  {"verdict", sym ? "symmetric" : "asymmetric"},
                  {"reconstruction_residual", r12(recon)},
                  {"decomposition_residual", r12(c.residual)},
                  {"cptp", rep.is_cp && rep.is_tp}});
    return recon <= tol ? kOk : kCheckFailed;
}

int cmd_polar(const std::string& file, double tol, bool nonphysical, json& out) {
    const ChannelFile cf = load_channel_file(file, nonphysical);
    if (cf.rep_in.kind() != GroupKind::SU2) throw SemanticError("polar requires an su2 channel file");
    const ProcessModeBasis basis = build_canonical_modes(cf.rep_in, cf.rep_out);
    PolarData pd;
    try {
        pd = polar_decompose(cf.map, basis);
    } catch (const std::invalid_argument& e) {
        throw SemanticError(e.what());
    }
    json inv = json::array();
    for (const auto& [d, a] : pd.invariants)
        inv.push_back({{"diagram", d.to_string()}, {"amplitude", cnum(a)}, {"abs", r12(std::abs(a))}});
    out = report("polar", {{"file", file}}, {{"tol", tol}},
                 {{"invariants", inv},
                  {"orbit_point",
                   {{"kind", pd.orbit_point.to_string()},
                    {"theta", r12(pd.orbit_point.theta)},
                    {"phi", r12(pd.orbit_point.phi)}}},
                  {"fit_residual", r12(pd.fit_residual)},
                  {"warning", pd.warning}});
    return pd.fit_residual <= tol || pd.warning ? kOk : kCheckFailed;
}

int cmd_table(double tol, json& out) {
    json rows = json::array();
    bool ok = true;
    for (const auto& row : axial_table()) {
        json entries = json::array();
        static const char* slot[4] = {"a0", "a'1", "a1", "a2"};
        for (int i = 0; i < 4; ++i) {
            const auto& e = row.entries[i];
            if (!e.erratum && e.deviation > tol) ok = false;
            entries.push_back({{"slot", slot[i]},
                               {"listed", cnum(e.listed)},
                               {"polar", cnum(e.polar)},
                               {"oracle", cnum(e.oracle)},
                               {"deviation", r12(e.deviation)},
                               {"oracle_gap", r12(std::abs(e.polar - e.oracle))},
                               {"erratum", e.erratum},
                               {"note", e.note}});
            if (std::abs(e.polar - e.oracle) > tol) ok = false;
        }
        rows.push_back({{"name", row.name},
                        {"parameter", r12(row.parameter)},
                        {"entries", entries},
                        {"reconstruction_error", r12(row.reconstruction_error)},
                        {"fit_residual", r12(row.fit_residual)},
                        {"orbit_point", row.orbit_point.to_string()}});
    }
    out = report("table", json::object(), {{"tol", tol}}, {{"rows", rows}});
    return ok ? kOk : kCheckFailed;
}

json bell_actions(const Superoperator& e) {
    static const char* names[4] = {"phi+", "phi-", "psi+", "psi-"};
    const auto bell = bell_projectors();
    json out = json::object();
    for (int i = 0; i < 4; ++i) {
        const CMatrix o = symmetria::apply(e, bell[i]);
        json w = json::object();
        for (int j = 0; j < 4; ++j) w[names[j]] = r12((o * bell[j]).trace().real());
        out[names[i]] = w;
    }
    return out;
}

int cmd_bipartite(const std::string& file, double tol, bool nonphysical, json& out) {
    const auto& basis = two_qubit_basis();
    if (!file.empty()) {
        const ChannelFile cf = load_channel_file(file, nonphysical);
        if (cf.rep_in.kind() != GroupKind::SU2 || cf.map.dim_in() != 4 || cf.map.dim_out() != 4)
            throw SemanticError("bipartite --file expects a two-qubit su2 channel");
        const auto dec = decompose_symmetric(cf.map, basis);
        json coeffs = json::array();
        for (std::size_t i = 0; i < dec.coefficients.size(); ++i)
            if (std::abs(dec.coefficients[i]) > tol)
                coeffs.push_back({{"diagram", basis.elements()[i].diagram.to_string()},
                                  {"class", to_string(basis.elements()[i].diagram.cls())},
                                  {"coefficient", cnum(dec.coefficients[i])}});
        out = report("bipartite", {{"file", file}}, {{"tol", tol}},
                     {{"coefficients", coeffs}, {"residual", r12(dec.residual)}, {"symmetric", dec.residual <= tol}});
        return kOk;
    }
    const RepSpec q = RepSpec::qubit();
    json elems = json::array();
    int counted = 0;
    std::string excluded;
    for (const auto& e : basis.elements()) {
        elems.push_back({{"diagram", e.diagram.to_string()}, {"class", to_string(e.diagram.cls())}});
        const bool out_trivial = e.diagram.a.a_out.is_trivial() && e.diagram.b.a_out.is_trivial();
        const bool in_trivial = e.diagram.a.a_in.is_trivial() && e.diagram.b.a_in.is_trivial();
        if (out_trivial && !in_trivial) excluded = e.diagram.to_string();
        else ++counted;
    }
    const int rank = twirl_projector_rank(q, q, q, q);
    const auto dp = dual_pairing(basis);
    const Superoperator heis = heisenberg_unitary(std::numbers::pi / 8);
    const RepSpec qq = tensor_product(q, q);
    const bool heis_sym = is_symmetric(heis, build_canonical_modes(qq, qq), tol);
    out = report("bipartite", json::object(), {{"tol", tol}},
                 {{"elements", elems},
                  {"invariant_dimension", static_cast<int>(basis.elements().size())},
                  {"twirl_projector_rank", rank},
                  {"caption_dimension", 13},
                  {"excluded_by_trace_preservation", excluded},
                  {"dimension_without_excluded", counted},
                  {"dual_pairing_defect", r12(dp.defect)},
                  {"bell_actions",
                   {{"singlet", bell_actions(singlet_preparation())},
                    {"E1", bell_actions(relational_e1())},
                    {"E2", bell_actions(relational_e2())}}},
                  {"heisenberg_symmetric", heis_sym}});
    return rank == static_cast<int>(basis.elements().size()) ? kOk : kCheckFailed;
}

int cmd_region(const std::string& kind, int grid, std::ostream& os) {
    if (grid < 2) throw ParseError("--grid must be at least 2");
    std::string csv = "x,y,z,X,Y,Z,min_eig,inside\n";
    auto row = [](double x, double y, double z, double X, double Y, double Z, double e, bool in) {
        return fmt::format("{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{}\n", x, y, z, X, Y, Z, e,
                           in ? 1 : 0);
    };
    if (kind == "injection") {
        for (const auto& p : injection_region_scan(grid)) csv += row(p.x, p.y, p.z, p.X, p.Y, p.Z, p.min_choi_eig, p.cptp);
    } else if (kind == "relational") {
        // no transformed coordinates for this family; X, Y, Z repeat x, y, z
        for (const auto& p : relational_region_scan(grid)) csv += row(p.x, p.y, p.z, p.x, p.y, p.z, p.min_choi_eig, p.cptp);
    } else {
        throw ParseError("--kind must be injection or relational");
    }
    os << csv;
    return kOk;
}

int cmd_catalytic(int dim_a, int ladder, int rounds, const std::string& sigma_kind, std::uint64_t seed, double tol,
                  json& out) {
    if (dim_a < 1 || rounds < 1) throw ParseError("--dim-a and --rounds must be positive");
    if (ladder < 2 * dim_a) throw SemanticError("--ladder must be at least 2 * dim-a");
    Rng rng = make_rng(seed);
    const CMatrix u = random_unitary(dim_a, rng);
    const Protocol p = build_protocol(u, ladder);
    CMatrix sigma;
    if (sigma_kind == "random") sigma = random_density(ladder, rng);
    else if (sigma_kind == "pure") {
        const CVector v = random_pure(ladder, rng);
        sigma = v * v.adjoint();
    } else if (sigma_kind == "frame") {
        const CVector v = frame_state(ladder, 0);
        sigma = v * v.adjoint();
    } else if (sigma_kind == "number") {
        sigma = CMatrix::Zero(ladder, ladder);
        sigma(0, 0) = 1.0;
    } else if (sigma_kind == "mixed") sigma = CMatrix::Identity(ladder, ladder) / double(ladder);
    else throw ParseError("--sigma must be random, pure, frame, number or mixed");
    std::vector<CMatrix> inputs;
    for (int i = 0; i < rounds; ++i) inputs.push_back(random_density(dim_a, rng));
    const auto seq = sequential_use(p, sigma, inputs);
    const auto c0 = shift_profile(p.ladder, sigma);
    json rounds_j = json::array();
    bool ok = true;
    for (int i = 0; i < rounds; ++i) {
        const auto c = shift_profile(p.ladder, seq.references[i]);
        double drift = 0.0;
        for (int k = 0; k < ladder; ++k) drift = std::max(drift, std::abs(c[k] - c0[k]));
        if (seq.round_distances[i] > tol) ok = false;
        json r = {{"round", i + 1},
                  {"choi_distance_to_first", r12(seq.round_distances[i])},
                  {"profile_drift", r12(drift)}};
        if (seq.reference_fidelities[i] >= 0) r["reference_fidelity"] = r12(seq.reference_fidelities[i]);
        rounds_j.push_back(r);
    }
    const double closed = choi_distance(induced_channel(p, sigma), induced_channel_closed_form(p, sigma));
    json res = {{"rounds", rounds_j},
                {"unitarity_defect", r12(p.unitarity_defect)},
                {"symmetry_defect", r12(p.symmetry_defect)},
                {"closed_form_gap", r12(closed)},
                {"full_tensor_defect", r12(seq.full_tensor_defect)}};
    if (ladder <= 16) {
        const auto mp = measure_prepare_form(p, build_canonical_modes(protocol_rep(p), protocol_rep(p)));
        res["x_lambda_defect"] = r12(mp.x_defect);
        res["frame_commutator"] = r12(mp.commutator);
        res["measure_prepare_defect"] = r12(mp.form_defect);
        if (mp.x_defect > 1e-10) ok = false;
    }
    out = report("catalytic",
                 {{"dim_a", dim_a}, {"ladder", ladder}, {"rounds", rounds}, {"sigma", sigma_kind},
                  {"seed", effective_seed(seed)}},
                 {{"tol", tol}}, res);
    return ok ? kOk : kCheckFailed;
}

int cmd_gauge(int n, const std::string& lattice, std::uint64_t seed, double tol, json& out) {
    int lx = 0, ly = 0;
    char sep = 0;
    std::istringstream ls(lattice);
    if (!(ls >> lx >> sep >> ly) || sep != 'x' || !ls.eof()) throw ParseError("--lattice must look like 2x2");
    if (lx < 1 || ly < 1 || lx * ly > 4 || n < 2 || n > 4) throw SemanticError("lattice size guard: Lx Ly <= 4, 2 <= N <= 4");
    Rng rng = make_rng(seed);
    const GaugedLattice lat = build_gauged_lattice(lx, ly, n);
    json sites = json::array();
    bool ok = true;
    for (int s = 0; s < lat.n_sites; ++s) {
        double cg = 0.0, cf = 0.0;
        for (int g = 0; g < n; ++g) {
            cg = std::max(cg, commutator_norm(lat.gauss_ops[s][g], lat.h_gauged));
            cf = std::max(cf, commutator_norm(lat.gauss_ops[s][g], lat.h_free));
        }
        if (cg > tol) ok = false;
        sites.push_back({{"site", s}, {"gauged_commutator", r12(cg)}, {"free_commutator", r12(cf)}});
    }
    json loops = json::array();
    const auto acts = lattice_local_actions(lat);
    for (const auto& w : lat.wilson_ops) {
        double inv = 0.0;
        for (const auto& a : acts) {
            const SparseC u = a.matrix();
            inv = std::max(inv, SparseC(u * w * SparseC(u.adjoint()) - w).norm());
        }
        std::vector<int> charges;
        for (int i = 0; i < w.rows(); ++i) {
            const double ang = std::arg(w.coeff(i, i));
            const int q = static_cast<int>(std::lround(ang * n / (2 * std::numbers::pi)));
            charges.push_back(((q % n) + n) % n);
        }
        std::sort(charges.begin(), charges.end());
        charges.erase(std::unique(charges.begin(), charges.end()), charges.end());
        json phases = json::array();
        for (int q : charges) phases.push_back(fmt::format("exp(2 pi i {}/{})", q, n));
        if (inv > tol) ok = false;
        loops.push_back({{"invariance_defect", r12(inv)}, {"spectrum", phases}});
    }
    const CMatrix mixed = CMatrix::Identity(lat.dim, lat.dim) / std::sqrt(double(lat.dim));
    CMatrix vac = CMatrix::Zero(lat.dim, 1);
    vac(0, 0) = 1.0;
    const CMatrix psi = random_pure(lat.dim, rng);
    const auto fm = free_state_check(lat, mixed);
    const auto fv = free_state_check(lat, vac);
    const auto fr = free_state_check(lat, psi, 0.7);
    if (fr.dynamics_defect > tol) ok = false;
    out = report("gauge", {{"n", n}, {"lattice", lattice}, {"seed", effective_seed(seed)}}, {{"tol", tol}},
                 {{"dim", lat.dim},
                  {"links", static_cast<int>(lat.links.size())},
                  {"sites", sites},
                  {"wilson_loops", loops},
                  {"free_states",
                   {{"maximally_mixed", {{"is_free", fm.is_free}, {"twirl_distance", r12(fm.twirl_distance)}}},
                    {"vacuum_links_zero", {{"is_free", fv.is_free}, {"twirl_distance", r12(fv.twirl_distance)}}},
                    {"random_pure",
                     {{"is_free", fr.is_free},
                      {"twirl_distance", r12(fr.twirl_distance)},
                      {"dynamics_defect_t0.7", r12(fr.dynamics_defect)}}}}}});
    return ok ? kOk : kCheckFailed;
}

}  // namespace

ChannelFile parse_channel_file(const std::string& text, bool allow_nonphysical) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("channel file must be a JSON object");
    if (!j.contains("group") || !j["group"].is_object()) throw ParseError("missing group descriptor");
    const json& g = j["group"];
    const std::string kind = g.value("kind", "");
    GroupKind gk;
    int modulus = 1;
    if (kind == "su2") gk = GroupKind::SU2;
    else if (kind == "zn") {
        gk = GroupKind::ZN;
        if (!g.contains("modulus") || !g["modulus"].is_number_integer() || g["modulus"].get<int>() < 1)
            throw ParseError("zn group needs a positive integer modulus");
        modulus = g["modulus"].get<int>();
    } else {
        throw ParseError("group kind must be su2 or zn");
    }
    if (!g.contains("in") || !g.contains("out")) throw ParseError("group needs in and out reps");
    RepSpec rin = parse_rep(g["in"], gk, modulus);
    RepSpec rout = parse_rep(g["out"], gk, modulus);
    const int din = j.value("dim_in", rin.dim()), dout = j.value("dim_out", rout.dim());
    if (din != rin.dim() || dout != rout.dim()) throw SemanticError("dim_in/dim_out disagree with the group reps");

    std::optional<Superoperator> map;
    if (j.contains("kraus")) {
        if (!j["kraus"].is_array() || j["kraus"].empty()) throw ParseError("kraus must be a non-empty list");
        std::vector<CMatrix> ops;
        for (const auto& k : j["kraus"]) {
            ops.push_back(parse_matrix(k));
            if (ops.back().rows() != dout || ops.back().cols() != din)
                throw SemanticError("Kraus operator shape does not match dim_out x dim_in");
        }
        map = kraus_channel(ops, din, dout);
    } else if (j.contains("choi")) {
        CMatrix c = parse_matrix(j["choi"]);
        if (c.rows() != din * dout || c.cols() != din * dout) throw SemanticError("Choi matrix has the wrong size");
        map = Superoperator::from_choi(c, din, dout);
    } else {
        throw ParseError("payload must contain kraus or choi");
    }
    if (!allow_nonphysical) {
        const auto rep = check_cptp(*map);
        if (!rep.is_cp || !rep.is_tp) throw SemanticError("channel is not CPTP (use --allow-nonphysical)");
    }
    return ChannelFile{std::move(rin), std::move(rout), std::move(*map)};
}

ChannelFile load_channel_file(const std::string& path, bool allow_nonphysical) {
    return parse_channel_file(read_file(path), allow_nonphysical);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetria: symmetry-adapted decomposition of quantum processes"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    double tol = 1e-10;
    bool nonphysical = false;
    app.add_option("--seed", seed, "RNG seed (SYMMETRIA_SEED overrides)");
    app.add_option("--tol", tol, "Tolerance for pass/fail checks");
    app.add_flag("--allow-nonphysical", nonphysical, "Accept non-CPTP channel files");

    std::string file, group, kind = "injection", sigma = "random", lattice = "2x2";
    int grid = 50, dim_a = 2, ladder = 16, rounds = 5, n = 3;

    auto* dec = app.add_subcommand("decompose", "Process-mode coefficients of a channel file");
    dec->add_option("file", file)->required();
    dec->add_option("--group", group, "Expected group (su2 or zn)");
    auto* pol = app.add_subcommand("polar", "Polar decomposition of an axial channel");
    pol->add_option("file", file)->required();
    auto* tab = app.add_subcommand("table", "Single-qubit axial table against the closed forms");
    auto* bip = app.add_subcommand("bipartite", "Two-qubit symmetric catalog or decomposition");
    bip->add_option("--file", file, "Two-qubit channel file to expand");
    auto* reg = app.add_subcommand("region", "CSV scan of an allowed parameter region");
    reg->add_option("--kind", kind, "injection or relational");
    reg->add_option("--grid", grid, "Points per axis");
    auto* cat = app.add_subcommand("catalytic", "Catalytic coherence protocol on a cyclic ladder");
    cat->add_option("--dim-a", dim_a);
    cat->add_option("--ladder", ladder);
    cat->add_option("--rounds", rounds);
    cat->add_option("--sigma", sigma, "random, pure, frame, number or mixed");
    auto* gau = app.add_subcommand("gauge", "Gauged lattice demo");
    gau->add_option("--n", n, "Z_N modulus");
    gau->add_option("--lattice", lattice, "Extent as LxL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kParseError;
    }

    try {
        json rep;
        int code = kOk;
        if (*dec) code = cmd_decompose(file, group, tol, nonphysical, rep);
        else if (*pol) code = cmd_polar(file, kPolarTol, nonphysical, rep);
        else if (*tab) code = cmd_table(kPolarTol, rep);
        else if (*bip) code = cmd_bipartite(file, tol, nonphysical, rep);
        else if (*reg) {
            std::ostringstream os;
            code = cmd_region(kind, grid, os);
            out << os.str();
            return code;
        } else if (*cat) code = cmd_catalytic(dim_a, ladder, rounds, sigma, seed, tol, rep);
        else if (*gau) code = cmd_gauge(n, lattice, seed, tol, rep);
        out << rep.dump(2) << "\n";
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const SemanticError& e) {
        err << "semantic error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const std::invalid_argument& e) {
        err << "semantic error: " << e.what() << "\n";
        return kSemanticError;
    }
}

}  // namespace symmetria::cli
