#pragma once

#include <symmetria/process_modes.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symmetria {

// Orthonormal, Condon-Shortley. Integer j only (two_j even).
cplx sph_harm(int two_j, int two_m, double theta, double phi);
// Y_{j*,k} = (-1)^m Y_{j,-m} with m = j - k, k = 0..2j.
CVector dual_harmonics(int two_j, double theta, double phi);

std::array<double, 3> sphere_direction(double theta, double phi);
// Rotation taking z to the direction (theta, phi).
GroupElement rotation_to(double theta, double phi);

struct OrbitPoint {
    enum class Kind { PointOrbit, Sphere, FullGroup };
    Kind kind = Kind::PointOrbit;
    double theta = 0.0;
    double phi = 0.0;
    std::optional<GroupElement> g;

    std::string to_string() const;
};

// alpha_{d,k} = a_d Y_{lambda*,k}(orbit point) per diagram d. Symmetric maps use
// a_d = sqrt(4 pi) alpha_d so the same formula holds with the constant harmonic.
struct PolarData {
    std::map<Diagram, cplx> invariants;
    OrbitPoint orbit_point;
    double fit_residual = 0.0;
    bool warning = false;
};

PolarData polar_decompose(const Superoperator& s, const ProcessModeBasis& basis);
PolarData polar_from_coefficients(const ModeCoefficients& c);
// sum_d || alpha_d - a_d Y_{lambda*}(theta, phi) || with the optimal a_d.
double polar_fit_residual(const ModeCoefficients& c, double theta, double phi);

// Hand-coded single-qubit modes, normalized, labelled with canonical diagrams.
// The unphysical (1 -> 0 : 1) diagram is absent, so there are 13.
struct SingleQubitMode {
    Diagram diagram;
    int index = 0;       // position in the listed component order
    double listed_norm;  // HS norm of the formula before normalization
    Superoperator op;
};
std::vector<SingleQubitMode> single_qubit_modes();
// Per diagram, max deviation from unitarity of the overlap matrix with the
// canonical qubit modes of that diagram.
double single_qubit_span_defect(const std::vector<SingleQubitMode>& hand, const ProcessModeBasis& canonical);

enum class AxialChannel { Dephasing, ProjectiveMeasurement, Rotation, StatePreparation, Depolarising };

// Single-qubit channel about the z axis.
Superoperator axial_channel(AxialChannel kind, double param);
std::string axial_channel_name(AxialChannel kind);

// Slots (a0, a'1, a1, a2) and their diagrams in the qubit mode basis.
std::array<Diagram, 4> axial_slot_diagrams();
// Fixed factors taking normalized hand-coded m = 0 coefficients to the table scale.
std::array<double, 4> axial_table_factors();
// Values as printed (one stray entry of the measurement row dropped).
std::array<cplx, 4> axial_listed_values(AxialChannel kind, double param);
// Closed forms in the table scale.
std::array<cplx, 4> axial_expected_values(AxialChannel kind, double param);

struct AxialEntry {
    cplx listed;
    cplx polar;   // from polar_decompose, converted to the table scale
    cplx oracle;  // direct HS projection on the hand-coded modes
    double deviation = 0.0;  // |polar - listed|
    bool erratum = false;
    std::string note;
};

struct AxialRow {
    AxialChannel kind;
    std::string name;
    double parameter = 0.0;
    std::array<AxialEntry, 4> entries;
    double reconstruction_error = 0.0;
    double fit_residual = 0.0;
    OrbitPoint orbit_point;
};

AxialRow axial_table_row(AxialChannel kind, double param);
// One row per channel at the default parameters.
std::vector<AxialRow> axial_table();

}  // namespace symmetria
