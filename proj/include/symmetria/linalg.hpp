#pragma once

#include <Eigen/Dense>

#include <complex>
#include <concepts>
#include <type_traits>
#include <optional>
#include <vector>

namespace symmetria {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTpTol = 1e-10;
inline constexpr double kQuadratureTol = 1e-8;

// One term of X -> a X b^dagger.
struct KrausPair {
    CMatrix a;
    CMatrix b;
};

// Linear map B(C^dim_in) -> B(C^dim_out), held as Choi and transfer matrix.
// Row-major vec: vec(|a><b|) = e_a (x) e_b.
class Superoperator {
public:
    static Superoperator from_choi(CMatrix choi, int dim_in, int dim_out);
    static Superoperator from_transfer(CMatrix transfer, int dim_in, int dim_out);
    static Superoperator zero(int dim_in, int dim_out);

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    const CMatrix& choi() const { return choi_; }
    const CMatrix& transfer() const { return transfer_; }
    const std::optional<std::vector<KrausPair>>& kraus() const { return kraus_; }

    Superoperator with_kraus(std::vector<KrausPair> kraus) const;

    Superoperator& operator+=(const Superoperator& o);
    Superoperator& operator-=(const Superoperator& o);
    Superoperator& operator*=(cplx s);

private:
    Superoperator(int dim_in, int dim_out, CMatrix choi, CMatrix transfer);

    int dim_in_ = 0;
    int dim_out_ = 0;
    CMatrix choi_;
    CMatrix transfer_;
    std::optional<std::vector<KrausPair>> kraus_;
};

Superoperator operator+(Superoperator a, const Superoperator& b);
Superoperator operator-(Superoperator a, const Superoperator& b);
Superoperator operator*(cplx s, Superoperator a);
Superoperator operator*(Superoperator a, cplx s);

struct CptpReport {
    double min_choi_eigenvalue = 0.0;
    double trace_defect = 0.0;
    bool is_cp = false;
    bool is_tp = false;
};

CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, int rows, int cols);

// J_{(a,c),(b,d)} <-> K_{(a,b),(c,d)}
CMatrix choi_to_transfer(const CMatrix& choi, int dim_in, int dim_out);
CMatrix transfer_to_choi(const CMatrix& transfer, int dim_in, int dim_out);

Superoperator choi_of(const std::vector<KrausPair>& kraus, int dim_in, int dim_out);
Superoperator kraus_channel(const std::vector<CMatrix>& ops, int dim_in, int dim_out);
Superoperator unitary_channel(const CMatrix& u);
Superoperator identity_channel(int d);

CMatrix apply_superoperator(const Superoperator& s, const CMatrix& x);
// Constrained so that argument-dependent lookup never picks std::apply.
template <class S, class M>
    requires std::same_as<std::remove_cvref_t<S>, Superoperator>
CMatrix apply(S&& s, M&& x) {
    return apply_superoperator(s, x);
}
CptpReport check_cptp(const Superoperator& s, double psd_tol = kPsdTol, double tp_tol = kTpTol);
cplx hs_inner(const Superoperator& s1, const Superoperator& s2);
double hs_norm(const Superoperator& s);

// Kraus operators {K} with S(X) = sum K X K^dagger. Throws if the Choi matrix
// has an eigenvalue below -psd_tol.
std::vector<CMatrix> kraus_of_choi(const Superoperator& s, double psd_tol = kPsdTol);

Superoperator compose(const Superoperator& outer, const Superoperator& inner);
Superoperator tensor(const Superoperator& s1, const Superoperator& s2);
// X -> S(X^dagger)^dagger
Superoperator hermitian_conjugate(const Superoperator& s);

// Trace norm of the Choi difference divided by dim_in.
double choi_distance(const Superoperator& s1, const Superoperator& s2);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron_all(const std::vector<CMatrix>& factors);
// Trace out subsystem `traced` of a state on prod(dims).
CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims, int traced);
double op_norm(const CMatrix& m);
double trace_norm(const CMatrix& m);
// exp(-i t H) for Hermitian H.
CMatrix expm_hermitian(const CMatrix& h, double t);
bool is_unitary(const CMatrix& u, double tol = 1e-12);

}  // namespace symmetria
