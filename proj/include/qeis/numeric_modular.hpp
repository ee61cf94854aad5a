#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qeis/qexpansion.hpp"

namespace qeis {

using cplx = std::complex<double>;

struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct branch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex error function, relative accuracy ~1e-12 for |z| <= 8.
cplx cerf(cplx z);

// Split representation erf(z) = main + scaled * exp(-z^2) with main in {+1,-1}
// and |scaled| bounded.  This is what lets theta-type sums with erf factors be
// assembled in log space without overflowing the erf factor on its own.
struct CerfParts {
    double main;
    cplx scaled;
};
CerfParts cerf_parts(cplx z);

// Faddeeva function w(z) = e^{-z^2} erfc(-iz), accurate for Im z >= 0.
cplx faddeeva_w(cplx z);

struct MoebiusMatrix {
    long long a = 1, b = 0, c = 0, d = 1;
    bool is_unimodular() const { return a * d - b * c == 1; }
    bool in_gamma0_3() const { return c % 3 == 0; }
    cplx apply(cplx tau) const {
        return (cplx(double(a)) * tau + double(b)) / (cplx(double(c)) * tau + double(d));
    }
    bool operator==(const MoebiusMatrix&) const = default;
};

struct ComplexSample {
    cplx z;
    cplx tau;  // upper half plane
    cplx w;    // upper half plane; ignored by one-variable functions
    int terms = 64;
    double tol = 1e-8;
    double eps = 0.5;  // the epsilon in w = tau + it + eps for limit checks
};

// name in {theta, psi, psihat, T, h, That, Hhat, frakHhat, eta}.
cplx eval_function(const std::string& name, const ComplexSample& s);

// eta multiplier nu_eta(gamma) = eta(gamma tau) / (sqrt(c tau + d) eta(tau)).
cplx nu_eta(const MoebiusMatrix& gamma, cplx tau, int terms = 64);

// The sign chi_{tau,w}(gamma); throws branch_error if the evaluated ratio is
// not within 1e-10 of +-1.
int chi(const MoebiusMatrix& gamma, cplx tau, cplx w);

struct TransformReport {
    std::string name;
    MoebiusMatrix gamma;
    ComplexSample sample;
    double residual = 0;
    bool pass = false;
};

// name in {theta_modular, psihat_modular, That_modular, frakHhat_modular}.
TransformReport check_transform(const std::string& name, const MoebiusMatrix& gamma,
                                const ComplexSample& s);

// Elliptic shifts z -> z + m tau + n; name in {theta_elliptic, psihat_elliptic}.
TransformReport check_elliptic(const std::string& name, int m, int n, const ComplexSample& s);

struct LimitReport {
    std::string name;
    std::vector<double> gaps;  // |completed - target| along the t ladder
    bool pass = false;
};

// name in {psihat, That, Hhat}: w = tau + it + eps, target psi / T / h.
LimitReport check_limit(const std::string& name, const ComplexSample& s,
                        const std::vector<double>& t_ladder);

// Deterministic sample of SL_2(Z) (or Gamma_0(3)) matrices: random words of
// length <= 6 in S, T, T^{-1}, deduplicated.
std::vector<MoebiusMatrix> sample_sl2(int count, unsigned seed, bool gamma0_3);

// Exact-vs-float bridge: sum c_n q^{n + prefactor} at q = e^{2 pi i tau}.
cplx eval_at_tau(const QExpansion& f, cplx tau);

}  // namespace qeis
