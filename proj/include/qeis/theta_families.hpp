#pragma once

#include <map>

#include "qeis/biexpansion.hpp"
#include "qeis/partitions.hpp"

namespace qeis {

enum class FamilyId {
    PartialTheta,          // normalized T-script: T(z;tau) / (2i q^{1/8})
    FalseTheta,            // normalized H-script: i h(zeta;q) / (2 sin(pi z))
    UnimodalRank,          // U(zeta;q)
    JacobiThetaSum,        // theta / (-i q^{1/8}), sum form
    JacobiThetaProduct,    // same normalization, triple-product form
    JacobiThetaEisenstein  // same normalization, Eisenstein-exponential form
};

// Bernoulli numbers B_0..B_k via the convolution recurrence (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int k);

// G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n for even k; the zero series otherwise.
QExpansion eisenstein_G(int k, int N);

// eta = q^{1/24} prod (1-q^n): prefactor 1/24, Euler-product coefficients.
QExpansion eta_product(int N);
// prod_{n=1}^{N} (1-q^n), no prefactor.
QExpansion euler_product(int N);
// T_0-script = sum_{n>=0} (-1)^n q^{n(n+1)/2}.
QExpansion t0_series(int N);

// (e^{x/2} - e^{-x/2}), the 2i*sin(pi z) ledger object.
BiExpansion two_i_sin_half(int K, int N);
// sin(pi z)/(pi z) = sum_m x^{2m} / (4^m (2m+1)!).
BiExpansion sinc_factor(int K, int N);

BiExpansion family_bivar(FamilyId which, int K, int N);

enum class CoeffFamily { g, h, u };

// Exponential Taylor coefficients: g_k, h_k, u_k for k = 1..k_max, each a
// q-series to order N.
std::vector<QExpansion> extract_coeffs(CoeffFamily which, int k_max, int N);

// Closed-form series from the Fourier coefficient tables:
// -delta_{k,1}/2 + sum_n sum_m a_{n,m} (resp. b_{n,m}) m^{k-1} q^n.
QExpansion closed_form(CoeffFamily which, int k, int N);

enum class ProductIdentity { T0, eta };

struct IdentityReport {
    std::string name;
    int order = 0;
    Rational max_abs_residual;
    bool pass = false;
};

// Log T_0-script = -sum a_{n,m}/m q^n   resp.   log prod(1-q^n) = -sum b_{n,m}/m q^n.
IdentityReport product_identity_check(ProductIdentity which, int N);

// Finite list of theta-type terms sign * zeta^alpha * q^beta.
struct ThetaTerm {
    int sign;  // +1 or -1
    Rational alpha;
    Rational beta;
};
struct ThetaTermList {
    std::vector<ThetaTerm> terms;
    Rational cutoff;
};

enum class HeatFamily { PartialTheta, FalseTheta };

ThetaTermList theta_term_list(HeatFamily which, const Rational& cutoff);

struct HeatReport {
    std::string name;
    int terms_checked = 0;
    bool pass = false;
};

// Termwise 4*m*beta - alpha^2 = 0 with index m = 1/2 (partial) or 3/2 (false).
HeatReport heat_annihilation_check(HeatFamily which, const Rational& cutoff);

// Exhaustive enumeration of peak-marked unimodal sequences of size n,
// counted by rank.
struct RankHistogram {
    int size = 0;
    std::map<int, long long> counts;
    long long total() const {
        long long t = 0;
        for (auto& [r, c] : counts) t += c;
        return t;
    }
};

RankHistogram unimodal_bruteforce(int n, int cap = 18);

}  // namespace qeis
