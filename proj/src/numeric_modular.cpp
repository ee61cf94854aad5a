#include "qeis/numeric_modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace qeis {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

// Rational (Fourier-tan) approximation of the Faddeeva function, following
// Weideman, SIAM J. Numer. Anal. 31 (1994).  Coefficients are computed once
// by the discrete Fourier transform of e^{-t^2}(L^2+t^2) on the tan grid.
constexpr int kWeidemanN = 36;

std::array<double, kWeidemanN> weideman_coeffs(double& L_out) {
    const int N = kWeidemanN, M = 2 * N, M2 = 2 * M;
    const double L = std::sqrt(N / std::sqrt(2.0));
    L_out = L;
    // f indexed like [0; f(k), k = -M+1..M-1], then fftshift.
    std::vector<double> f(M2, 0.0);
    for (int k = -M + 1; k <= M - 1; ++k) {
        double theta = k * kPi / M;
        double t = L * std::tan(theta / 2);
        f[k + M] = std::exp(-t * t) * (L * L + t * t);
    }
    std::vector<double> shifted(M2);
    for (int j = 0; j < M2; ++j) shifted[j] = f[(j + M) % M2];
    std::array<double, kWeidemanN> a{};
    for (int n = 1; n <= N; ++n) {
        double s = 0;
        for (int m = 0; m < M2; ++m) s += shifted[m] * std::cos(2 * kPi * m * n / M2);
        a[N - n] = s / M2;  // flipped: a[0] is the highest-order coefficient
    }
    return a;
}

}  // namespace

cplx faddeeva_w(cplx z) {
    static double L = 0;
    static const std::array<double, kWeidemanN> a = weideman_coeffs(L);
    cplx iz = I * z;
    cplx Z = (L + iz) / (L - iz);
    cplx p = 0;
    for (double an : a) p = p * Z + an;
    return 2.0 * p / ((L - iz) * (L - iz)) + (1.0 / std::sqrt(kPi)) / (L - iz);
}

namespace {

cplx cerf_maclaurin(cplx z) {
    // erf(z) = (2/sqrt(pi)) sum (-1)^k z^{2k+1} / (k! (2k+1))
    cplx term = z, sum = z;
    for (int k = 1; k <= 40; ++k) {
        term *= -z * z / double(k);
        sum += term / double(2 * k + 1);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / std::sqrt(kPi) * sum;
}

}  // namespace

CerfParts cerf_parts(cplx z) {
    // erf(z) = 1 - e^{-z^2} w(iz) for Re z >= 0; odd reflection otherwise.
    if (z.real() >= 0) return {1.0, -faddeeva_w(I * z)};
    return {-1.0, faddeeva_w(-I * z)};
}

cplx cerf(cplx z) {
    if (std::abs(z) <= 0.5) return cerf_maclaurin(z);
    CerfParts p = cerf_parts(z);
    return p.main + p.scaled * std::exp(-z * z);
}

namespace {

// exp with an overflow guard; huge negative real parts just underflow to 0.
cplx safe_exp(cplx e) {
    if (e.real() > 709.0) throw accuracy_error("exp overflow in theta-type sum");
    if (e.real() < -745.0) return 0.0;
    return std::exp(e);
}

void require_upper(cplx tau, const char* who) {
    if (tau.imag() <= 0) throw series_domain_error(std::string(who) + ": tau not in upper half plane");
}

// Index cap for Gaussian-decay sums: the tail is below ~1e-22 once
// pi*decay*n^2 dominates both the target exponent and the linear z term.
int gaussian_cap(int terms, double decay, double zim) {
    if (decay <= 0) throw accuracy_error("theta-type sum: no decay direction");
    double bound = std::abs(zim) / decay + std::sqrt(60.0 / (kPi * decay)) + 16.0;
    int cap = std::max(terms, static_cast<int>(bound) + 1);
    if (cap > 100000) throw accuracy_error("theta-type sum: imaginary parts too small for cutoff");
    return cap;
}

// i sum_{n in Z} s(n) (-1)^n zeta^{n+1/2} q^{(n+1/2)^2/2} with a per-index
// weight; shared by theta, psi, and the partial sum T.
template <class Weight>
cplx theta_like_sum(cplx z, cplx tau, int terms, Weight weight) {
    require_upper(tau, "theta_like_sum");
    int cap = gaussian_cap(terms, tau.imag(), z.imag());
    cplx sum = 0;
    double maxabs = 0;
    bool converged = false;
    for (int n = 0; n <= cap; ++n) {
        cplx t = 0;
        for (int m : {n, -n - 1}) {
            double r = m + 0.5;
            cplx term = weight(m) * safe_exp(kPi * I * tau * r * r + 2.0 * kPi * I * z * r);
            if (m % 2 != 0) term = -term;
            t += term;
        }
        sum += t;
        maxabs = std::max(maxabs, std::abs(t));
        if (n > 2 && std::abs(t) < 1e-20 * (maxabs + 1)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw accuracy_error("theta-type sum: term budget exhausted before tail bound");
    return I * sum;
}

cplx eval_theta(cplx z, cplx tau, int terms) {
    return theta_like_sum(z, tau, terms, [](int) { return cplx(1.0); });
}

cplx eval_psi(cplx z, cplx tau, int terms) {
    return theta_like_sum(z, tau, terms,
                          [](int n) { return cplx(n + 0.5 >= 0 ? 1.0 : -1.0); });
}

// Partial sum: only n >= 0, doubled.
cplx eval_T(cplx z, cplx tau, int terms) {
    return theta_like_sum(z, tau, terms,
                          [](int n) { return cplx(n >= 0 ? 1.0 : 0.0); }) * 2.0;
}

cplx eval_psihat(cplx z, cplx tau, cplx w, int terms) {
    require_upper(tau, "psihat");
    require_upper(w, "psihat (w)");
    cplx root = std::sqrt(kPi * I * (w - tau));
    double shift = z.imag() / tau.imag();
    // The erf factor saturates to +-1 plus a remainder decaying like
    // e^{-pi w_2 n^2}, so the slower of tau_2 and w_2 governs the tail.
    int cap = gaussian_cap(terms, std::min(tau.imag(), w.imag()), z.imag());
    cplx sum = 0;
    double maxabs = 0;
    bool converged = false;
    for (int n = 0; n <= cap; ++n) {
        cplx t = 0;
        for (int m : {n, -n - 1}) {
            double r = m + 0.5;
            cplx A = -I * root * (r + shift);
            CerfParts e = cerf_parts(A);
            cplx L = kPi * I * tau * r * r + 2.0 * kPi * I * z * r;
            cplx term = e.main * safe_exp(L) + e.scaled * safe_exp(L - A * A);
            if (m % 2 != 0) term = -term;
            t += term;
        }
        sum += t;
        maxabs = std::max(maxabs, std::abs(t));
        if (n > 2 && std::abs(t) < 1e-20 * (maxabs + 1)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw accuracy_error("psihat: term budget exhausted before tail bound");
    return I * sum;
}

cplx eval_That(cplx z, cplx tau, cplx w, int terms) {
    return eval_theta(z, tau, terms) + eval_psihat(z, tau, w, terms);
}

cplx eval_Hhat(cplx z, cplx tau, cplx w, int terms) {
    cplx zeta_half = std::exp(kPi * I * z);
    cplx zeta = zeta_half * zeta_half;
    cplx q8 = std::exp(kPi * I * tau / 4.0);
    cplx plus = eval_That(3.0 * z + tau, 3.0 * tau, 3.0 * w, terms);
    cplx minus = eval_That(3.0 * z - tau, 3.0 * tau, 3.0 * w, terms);
    return I / 2.0 * (zeta_half - 1.0 / zeta_half) * q8 * (-zeta * plus + minus / zeta);
}

cplx eval_frakHhat(cplx z, cplx tau, cplx w, int terms) {
    cplx zeta_half = std::exp(kPi * I * z);
    cplx zeta = zeta_half * zeta_half;
    cplx q24 = std::exp(kPi * I * tau / 12.0);
    return 2.0 * I * zeta_half * q24 / (1.0 - zeta) * eval_Hhat(z, tau, w, terms);
}

// h(zeta;q) = (1-zeta) sum_{n>=0} (-1)^n zeta^{3n} q^{n(3n+1)/2} (1 - zeta^2 q^{2n+1})
cplx eval_h(cplx z, cplx tau, int terms) {
    require_upper(tau, "h");
    cplx zeta = std::exp(2.0 * kPi * I * z);
    int cap = gaussian_cap(terms, 3.0 * tau.imag(), 6.0 * z.imag());
    cplx sum = 0;
    double maxabs = 0;
    bool converged = false;
    for (int n = 0; n <= cap; ++n) {
        cplx t = safe_exp(2.0 * kPi * I * (3.0 * n * z + 0.5 * n * (3 * n + 1) * tau)) *
                 (1.0 - zeta * zeta * std::exp(2.0 * kPi * I * tau * double(2 * n + 1)));
        if (n % 2 != 0) t = -t;
        sum += t;
        maxabs = std::max(maxabs, std::abs(t));
        if (n > 2 && std::abs(t) < 1e-20 * (maxabs + 1)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw accuracy_error("h: term budget exhausted before tail bound");
    return (1.0 - zeta) * sum;
}

cplx eval_eta(cplx tau, int terms) {
    require_upper(tau, "eta");
    // geometric decay: |q|^n < 1e-22 at n = 51/(2 pi tau_2)
    int cap = std::max(terms, static_cast<int>(51.0 / (2.0 * kPi * tau.imag())) + 2);
    if (cap > 1000000) throw accuracy_error("eta: imaginary part too small for cutoff");
    cplx q = std::exp(2.0 * kPi * I * tau);
    cplx prod = std::exp(kPi * I * tau / 12.0);
    cplx qn = 1.0;
    for (int n = 1; n <= cap; ++n) {
        qn *= q;
        prod *= 1.0 - qn;
        if (std::abs(qn) < 1e-22) return prod;
    }
    throw accuracy_error("eta: term budget exhausted before tail bound");
}

}  // namespace

cplx eval_function(const std::string& name, const ComplexSample& s) {
    if (name == "theta") return eval_theta(s.z, s.tau, s.terms);
    if (name == "psi") return eval_psi(s.z, s.tau, s.terms);
    if (name == "psihat") return eval_psihat(s.z, s.tau, s.w, s.terms);
    if (name == "T") return eval_T(s.z, s.tau, s.terms);
    if (name == "h") return eval_h(s.z, s.tau, s.terms);
    if (name == "That") return eval_That(s.z, s.tau, s.w, s.terms);
    if (name == "Hhat") return eval_Hhat(s.z, s.tau, s.w, s.terms);
    if (name == "frakHhat") return eval_frakHhat(s.z, s.tau, s.w, s.terms);
    if (name == "eta") return eval_eta(s.tau, s.terms);
    throw series_domain_error("eval_function: unknown name " + name);
}

cplx nu_eta(const MoebiusMatrix& gamma, cplx tau, int terms) {
    cplx cd = cplx(double(gamma.c)) * tau + double(gamma.d);
    return eval_eta(gamma.apply(tau), terms) / (std::sqrt(cd) * eval_eta(tau, terms));
}

int chi(const MoebiusMatrix& gamma, cplx tau, cplx w) {
    cplx ctd = cplx(double(gamma.c)) * tau + double(gamma.d);
    cplx cwd = cplx(double(gamma.c)) * w + double(gamma.d);
    cplx val = std::sqrt(I * (w - tau) / (ctd * cwd)) * std::sqrt(ctd) * std::sqrt(cwd) /
               std::sqrt(I * (w - tau));
    if (std::abs(val - 1.0) < 1e-10) return 1;
    if (std::abs(val + 1.0) < 1e-10) return -1;
    throw branch_error("chi: value not near +-1 (square-root convention bug)");
}

namespace {

double rel_residual(cplx lhs, cplx rhs) {
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

TransformReport finish(std::string name, const MoebiusMatrix& gamma, const ComplexSample& s,
                       cplx lhs, cplx rhs) {
    TransformReport rep;
    rep.name = std::move(name);
    rep.gamma = gamma;
    rep.sample = s;
    rep.residual = rel_residual(lhs, rhs);
    rep.pass = rep.residual < s.tol;
    return rep;
}

}  // namespace

TransformReport check_transform(const std::string& name, const MoebiusMatrix& gamma,
                                const ComplexSample& s) {
    if (!gamma.is_unimodular()) throw series_domain_error("check_transform: det != 1");
    cplx ctd = cplx(double(gamma.c)) * s.tau + double(gamma.d);
    cplx gtau = gamma.apply(s.tau);
    cplx gw = gamma.apply(s.w);
    cplx zc = s.z / ctd;
    if (name == "theta_modular") {
        cplx lhs = eval_theta(zc, gtau, s.terms);
        cplx rhs = std::pow(nu_eta(gamma, s.tau, s.terms), 3) * std::sqrt(ctd) *
                   std::exp(kPi * I * double(gamma.c) * s.z * s.z / ctd) *
                   eval_theta(s.z, s.tau, s.terms);
        return finish(name, gamma, s, lhs, rhs);
    }
    if (name == "psihat_modular") {
        cplx lhs = eval_psihat(zc, gtau, gw, s.terms);
        cplx rhs = double(chi(gamma, s.tau, s.w)) * std::pow(nu_eta(gamma, s.tau, s.terms), 3) *
                   std::sqrt(ctd) * std::exp(kPi * I * double(gamma.c) * s.z * s.z / ctd) *
                   eval_psihat(s.z, s.tau, s.w, s.terms);
        return finish(name, gamma, s, lhs, rhs);
    }
    if (name == "That_modular") {
        // The reference side is evaluated at chi*z literally; for chi = -1 this
        // exercises That(-z) = -theta(z) + psihat(z).
        double x = chi(gamma, s.tau, s.w);
        cplx lhs = eval_That(zc, gtau, gw, s.terms);
        cplx rhs = x * std::pow(nu_eta(gamma, s.tau, s.terms), 3) * std::sqrt(ctd) *
                   std::exp(kPi * I * double(gamma.c) * s.z * s.z / ctd) *
                   eval_That(x * s.z, s.tau, s.w, s.terms);
        return finish(name, gamma, s, lhs, rhs);
    }
    if (name == "frakHhat_modular") {
        if (!gamma.in_gamma0_3())
            throw series_domain_error("frakHhat_modular: gamma not in Gamma_0(3)");
        int ell = ((gamma.a % 3) + 3) % 3 == 1 ? 1 : -1;
        MoebiusMatrix conj{gamma.a, 3 * gamma.b, gamma.c / 3, gamma.d};
        long long par = gamma.b + (gamma.a - ell) / 3;
        cplx nu = (par % 2 == 0 ? 1.0 : -1.0) *
                  std::exp(kPi * I * double(gamma.a) * double(gamma.b) / 3.0) * double(ell) *
                  std::pow(nu_eta(conj, s.tau, s.terms), 3);
        double x = chi(gamma, s.tau, s.w);
        cplx lhs = eval_frakHhat(zc, gtau, gw, s.terms);
        cplx rhs = nu * std::sqrt(ctd) *
                   std::exp(3.0 * kPi * I * double(gamma.c) * s.z * s.z / ctd) *
                   eval_frakHhat(x * s.z, s.tau, s.w, s.terms);
        return finish(name, gamma, s, lhs, rhs);
    }
    throw series_domain_error("check_transform: unknown law " + name);
}

TransformReport check_elliptic(const std::string& name, int m, int n, const ComplexSample& s) {
    cplx zeta = std::exp(2.0 * kPi * I * s.z);
    cplx factor = ((m + n) % 2 == 0 ? 1.0 : -1.0) *
                  std::exp(-kPi * I * s.tau * double(m) * double(m)) * std::pow(zeta, -m);
    cplx shifted = s.z + double(m) * s.tau + double(n);
    cplx lhs, rhs;
    if (name == "theta_elliptic") {
        lhs = eval_theta(shifted, s.tau, s.terms);
        rhs = factor * eval_theta(s.z, s.tau, s.terms);
    } else if (name == "psihat_elliptic") {
        lhs = eval_psihat(shifted, s.tau, s.w, s.terms);
        rhs = factor * eval_psihat(s.z, s.tau, s.w, s.terms);
    } else {
        throw series_domain_error("check_elliptic: unknown law " + name);
    }
    MoebiusMatrix shift_tag{m, n, 0, 1};  // records (m, n) in the report
    return finish(name, shift_tag, s, lhs, rhs);
}

LimitReport check_limit(const std::string& name, const ComplexSample& s,
                        const std::vector<double>& t_ladder) {
    LimitReport rep;
    rep.name = name;
    cplx target;
    if (name == "psihat") target = eval_psi(s.z, s.tau, s.terms);
    else if (name == "That") target = eval_T(s.z, s.tau, s.terms);
    else if (name == "Hhat") target = eval_h(s.z, s.tau, s.terms);
    else throw series_domain_error("check_limit: unknown name " + name);
    for (double t : t_ladder) {
        cplx w = s.tau + cplx(s.eps, t);
        ComplexSample sw = s;
        sw.w = w;
        cplx val = name == "psihat"  ? eval_psihat(s.z, s.tau, w, s.terms)
                   : name == "That" ? eval_That(s.z, s.tau, w, s.terms)
                                    : eval_Hhat(s.z, s.tau, w, s.terms);
        rep.gaps.push_back(std::abs(val - target));
    }
    rep.pass = !rep.gaps.empty() && rep.gaps.back() < s.tol;
    for (size_t j = 2; j < rep.gaps.size(); ++j)
        if (rep.gaps[j] > rep.gaps[j - 1] + 1e-14) rep.pass = false;
    return rep;
}

std::vector<MoebiusMatrix> sample_sl2(int count, unsigned seed, bool gamma0_3) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 6);
    // For the congruence subgroup, words in T^{+-1} and (1 0; 3 1)^{+-1} stay
    // inside Gamma_0(3) by closure and reach plenty of nonzero c values;
    // rejection on c mod 3 would return almost only translations.
    const std::vector<MoebiusMatrix> gens =
        gamma0_3 ? std::vector<MoebiusMatrix>{{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 3, 1}, {1, 0, -3, 1}}
                 : std::vector<MoebiusMatrix>{{0, -1, 1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}};
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::vector<MoebiusMatrix> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 100000) {
        MoebiusMatrix g;
        int len = len_dist(rng);
        for (int j = 0; j < len; ++j) {
            const MoebiusMatrix& f = gens[pick(rng)];
            g = MoebiusMatrix{g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d,
                              g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d};
        }
        if (gamma0_3 && !g.in_gamma0_3()) continue;
        if (std::find(out.begin(), out.end(), g) != out.end()) continue;
        out.push_back(g);
    }
    if (static_cast<int>(out.size()) < count)
        throw accuracy_error("sample_sl2: could not assemble the requested sample");
    return out;
}

cplx eval_at_tau(const QExpansion& f, cplx tau) {
    require_upper(tau, "eval_at_tau");
    double rho = static_cast<double>(f.prefactor());
    cplx sum = 0;
    for (int n = 0; n <= f.order(); ++n) {
        if (f.coeff(n) == 0) continue;
        sum += static_cast<double>(f.coeff(n)) * std::exp(2.0 * kPi * I * tau * (n + rho));
    }
    return sum;
}

}  // namespace qeis
