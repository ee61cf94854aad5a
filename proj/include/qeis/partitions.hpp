#pragma once

#include <functional>
#include <vector>

#include "qeis/qexpansion.hpp"

namespace qeis {

// Multiplicity-vector representation of a partition of n:
// lambda = (1^{m_1}, 2^{m_2}, ..., n^{m_n}),  sum j*m_j = n.
struct Partition {
    int n = 0;
    std::vector<int> mult;  // mult[j-1] = m_j, size n (empty for n = 0)

    int m(int j) const { return (j >= 1 && j <= n) ? mult[j - 1] : 0; }
    int length() const {
        int l = 0;
        for (int v : mult) l += v;
        return l;
    }
    bool operator==(const Partition&) const = default;
};

// All partitions of n, each exactly once, in a deterministic order
// (lexicographic on part lists, largest part first).
std::vector<Partition> partitions_of(int n);

// Lambda(n,m): partitions of n with non-increasing multiplicities and length m.
std::vector<Partition> lambda_nm(int n, int m);

// Omega(n,m): partitions of n with m_{3j} = 0, m_{3j-2} >= m_{3j+1},
// m_{3j-1} >= m_{3j+2}, and 3*length = m + m_1.
std::vector<Partition> omega_nm(int n, int m);

bool lambda_predicate(const Partition& p, int m);
bool omega_predicate(const Partition& p, int m);

// Exact multinomial (top; parts...).  Asserts the Bezout divisibility
// top/gcd(parts) | result on every call.
Integer multinomial(int top, const std::vector<int>& parts);

// Fourier coefficient formulas; exact integers by construction, but the
// accumulation runs in rationals and integrality is asserted at the end.
Integer a_nm(int n, int m);
Integer b_nm(int n, int m);

// All nonzero coefficients for a fixed n in one enumeration pass; m -> value.
std::map<int, Integer> a_row(int n);
std::map<int, Integer> b_row(int n);

// Vanishing thresholds from the Fourier-coefficient theorems.
int a_threshold(int n);  // ceil((sqrt(8n+1)-1)/2)
int b_threshold(int n);  // floor((sqrt(24n+1)-1)/2)

using TraceWeight = std::function<Rational(const Partition&)>;

// phi(lambda) = prod 2^{m_j} / (j!^{m_j} m_j!)
Rational phi_weight(const Partition& p);
// psi(lambda) = prod (-1)^{m_j} / (j!^{m_j} m_j!)
Rational psi_weight(const Partition& p);

// Tr_n(w, f) = sum_{lambda |- n} w(lambda) * prod_j f_j^{m_j}.
// family[j-1] must provide f_j for j = 1..n at compatible truncation order.
QExpansion partition_trace(const TraceWeight& weight,
                           const std::vector<QExpansion>& family, int n);

// Partitions into triangular numbers T_l = l(l+1)/2, as multiplicities per
// index l, and into generalized pentagonal numbers P_l = l(3l-1)/2 (l != 0),
// as multiplicities per index l = 1,-1,2,-2,...
struct TriangularPartition {
    int n = 0;
    std::vector<int> mult;  // mult[l-1] = multiplicity of T_l
    bool operator==(const TriangularPartition&) const = default;
};
struct PentagonalPartition {
    int n = 0;
    std::vector<int> mult_pos;  // multiplicity of P_l, l >= 1
    std::vector<int> mult_neg;  // multiplicity of P_{-l}, l >= 1
    bool operator==(const PentagonalPartition&) const = default;
};

std::vector<TriangularPartition> triangular_partitions(int n);
std::vector<PentagonalPartition> pentagonal_partitions(int n);

// The two set bijections: T(n) <-> G(n) (union of Lambda(n,m)) and
// P(n) <-> H(n) (union of Omega(n,m)).
Partition triangular_to_lambda(const TriangularPartition& t);
TriangularPartition lambda_to_triangular(const Partition& p);
Partition pentagonal_to_omega(const PentagonalPartition& t);
PentagonalPartition omega_to_pentagonal(const Partition& p);

inline long long triangular_number(long long l) { return l * (l + 1) / 2; }
inline long long pentagonal_number(long long l) { return l * (3 * l - 1) / 2; }

}  // namespace qeis
