#pragma once

#include "qeis/theta_families.hpp"

namespace qeis {

struct RecursionReport {
    std::string identity_name;
    int order_checked = 0;
    Rational max_abs_residual;
    bool pass = false;
};

// D(G_2) = -2 G_2^2 + (5/6) G_4,  D(G_4) = -8 G_2 G_4 + (7/10) G_6,
// D(G_6) = -12 G_2 G_6 + (400/7) G_4^2, all exact to order N.
RecursionReport verify_ramanujan(int N);

// D(Log eta), computed as 1/24 + D(log prod(1-q^n)), equals -G_2.
RecursionReport eta_derivative_check(int N);

// g_3..g_{k_max} from extracted seeds g_1, g_2 via
// g_{k+2} = 2 D(g_k) + sum_d binom(k,d) g_{d+1} g_{k-d+1}; compared against
// extraction.  Also checks D(Log T_0) = -g_2/2 + g_1^2/2 in normalized form
// (the q^{1/8} prefactor contributes the constant 1/8).
std::pair<std::vector<QExpansion>, RecursionReport> g_recursion(int k_max, int N);

// h_3..h_{k_max} from extracted seeds h_1, h_2 via
// h_{k+2} = 6 D(h_k) + sum_d binom(k,d) h_{d+1} h_{k-d+1}; compared against
// extraction.  Also checks h_2 = 6 G_2 + h_1^2.
std::pair<std::vector<QExpansion>, RecursionReport> h_recursion(int k_max, int N);

// The partition-trace recursion
//   u_k = -(k!/2) sum_{lambda |- k, lambda != (k^1)} phi(lambda) u_lambda
//         + C * Tr_k(phi, gamma) + k! g_1 Tr_{k-1}(psi, h),
// gamma_k = G_k - 2^{k-1} g_k.  The printed recursion has C = 1; the matching
// completed version carries C = k!/2.  Both variants are evaluated against
// extraction and exactly one is expected to validate; which one is recorded.
struct URecursionResult {
    std::vector<QExpansion> u;  // from the validating variant
    RecursionReport report;
    bool literal_validates = false;      // C = 1
    bool half_factorial_validates = false;  // C = k!/2
};

URecursionResult u_from_recursion(int k_max, int N);

// 2 g_1 T_0-script = -prod(1-q^n)^3  and  D(g_1) = g_1 (-3G_2 + g_2/2 - g_1^2/2).
RecursionReport g1_identity_check(int N);

}  // namespace qeis
