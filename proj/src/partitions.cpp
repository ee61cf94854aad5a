#include "qeis/partitions.hpp"

#include <numeric>

namespace qeis {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& mult, int n,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.n = n;
        p.mult = mult;
        out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++mult[part - 1];
        gen_partitions(remaining - part, part, mult, n, out);
        --mult[part - 1];
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw series_domain_error("partitions_of: negative n");
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{0, {}});
        return out;
    }
    std::vector<int> mult(n, 0);
    gen_partitions(n, n, mult, n, out);
    return out;
}

bool lambda_predicate(const Partition& p, int m) {
    if (p.length() != m) return false;
    for (int j = 1; j < p.n; ++j)
        if (p.m(j) < p.m(j + 1)) return false;
    return true;
}

bool omega_predicate(const Partition& p, int m) {
    for (int j = 1; 3 * j <= p.n; ++j)
        if (p.m(3 * j) != 0) return false;
    for (int j = 1; 3 * j - 2 <= p.n; ++j)
        if (p.m(3 * j - 2) < p.m(3 * j + 1)) return false;
    for (int j = 1; 3 * j - 1 <= p.n; ++j)
        if (p.m(3 * j - 1) < p.m(3 * j + 2)) return false;
    return 3 * p.length() == m + p.m(1);
}

std::vector<Partition> lambda_nm(int n, int m) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (lambda_predicate(p, m)) out.push_back(p);
    return out;
}

std::vector<Partition> omega_nm(int n, int m) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (omega_predicate(p, m)) out.push_back(p);
    return out;
}

Integer multinomial(int top, const std::vector<int>& parts) {
    long long sum = 0;
    for (int a : parts) {
        if (a < 0) throw series_domain_error("multinomial: negative part");
        sum += a;
    }
    if (sum != top) throw series_domain_error("multinomial: parts do not sum to top");
    Integer result = factorial(top);
    for (int a : parts) result /= factorial(a);

    // top/gcd(parts) divides the multinomial (zero parts are inert,
    // since gcd(0, a) = a).
    if (top > 0) {
        long long g = 0;
        for (int a : parts) g = std::gcd(g, static_cast<long long>(a));
        if (g > 0 && result % (Integer(top) / g) != 0)
            throw std::logic_error("multinomial: Bezout divisibility violated");
    }
    return result;
}

int a_threshold(int n) {
    // smallest m with (2m+1)^2 >= 8n+1, i.e. T_m >= n
    int m = 0;
    while (m * (m + 1) / 2 < n) ++m;
    return m;
}

int b_threshold(int n) {
    // largest m with (2m+1)^2 <= 24n+1, i.e. m(m+1) <= 6n
    int m = 0;
    while ((m + 1) * (m + 2) <= 6 * n) ++m;
    return m;
}

Integer a_nm(int n, int m) {
    Rational total = 0;
    for (auto& p : lambda_nm(n, m)) {
        int m1 = p.m(1);
        std::vector<int> parts;
        parts.reserve(n);
        for (int j = 1; j <= n; ++j) parts.push_back(p.m(j) - p.m(j + 1));
        Rational term = Rational(m, m1) * Rational(multinomial(m1, parts));
        if ((m + m1) % 2 != 0) term = -term;
        total += term;
    }
    if (!is_integer(total)) throw std::logic_error("a_nm: non-integer total");
    return rat_num(total);
}

Integer b_nm(int n, int m) {
    Rational total = 0;
    for (auto& p : omega_nm(n, m)) {
        int m1 = p.m(1);
        int m2 = p.m(2);
        // 2-residue chain first, then the 1-residue chain.
        std::vector<int> parts;
        for (int j = 1; 3 * j - 1 <= p.n + 3; ++j) parts.push_back(p.m(3 * j - 1) - p.m(3 * j + 2));
        for (int j = 1; 3 * j - 2 <= p.n + 3; ++j) parts.push_back(p.m(3 * j - 2) - p.m(3 * j + 1));
        Rational term = Rational(m, m1 + m2) * Rational(multinomial(m1 + m2, parts));
        if ((m + m2) % 2 != 0) term = -term;
        total += term;
    }
    if (!is_integer(total)) throw std::logic_error("b_nm: non-integer total");
    return rat_num(total);
}

namespace {

// Shared per-partition terms of the two coefficient formulas.
Rational a_term(const Partition& p, int m) {
    int m1 = p.m(1);
    std::vector<int> parts;
    parts.reserve(p.n);
    for (int j = 1; j <= p.n; ++j) parts.push_back(p.m(j) - p.m(j + 1));
    Rational term = Rational(m, m1) * Rational(multinomial(m1, parts));
    return (m + m1) % 2 == 0 ? term : -term;
}

Rational b_term(const Partition& p, int m) {
    int m1 = p.m(1);
    int m2 = p.m(2);
    std::vector<int> parts;
    for (int j = 1; 3 * j - 1 <= p.n + 3; ++j) parts.push_back(p.m(3 * j - 1) - p.m(3 * j + 2));
    for (int j = 1; 3 * j - 2 <= p.n + 3; ++j) parts.push_back(p.m(3 * j - 2) - p.m(3 * j + 1));
    Rational term = Rational(m, m1 + m2) * Rational(multinomial(m1 + m2, parts));
    return (m + m2) % 2 == 0 ? term : -term;
}

// The Omega conditions that do not involve m.
bool omega_structural(const Partition& p) {
    for (int j = 1; 3 * j <= p.n; ++j)
        if (p.m(3 * j) != 0) return false;
    for (int j = 1; 3 * j - 2 <= p.n; ++j)
        if (p.m(3 * j - 2) < p.m(3 * j + 1)) return false;
    for (int j = 1; 3 * j - 1 <= p.n; ++j)
        if (p.m(3 * j - 1) < p.m(3 * j + 2)) return false;
    return true;
}

std::map<int, Integer> finalize_row(std::map<int, Rational>& totals, const char* who) {
    std::map<int, Integer> row;
    for (auto& [m, v] : totals) {
        if (v == 0) continue;
        if (!is_integer(v)) throw std::logic_error(std::string(who) + ": non-integer total");
        row[m] = rat_num(v);
    }
    return row;
}

}  // namespace

std::map<int, Integer> a_row(int n) {
    std::map<int, Rational> totals;
    for (auto& p : partitions_of(n)) {
        int m = p.length();
        if (!lambda_predicate(p, m)) continue;
        totals[m] += a_term(p, m);
    }
    return finalize_row(totals, "a_row");
}

std::map<int, Integer> b_row(int n) {
    std::map<int, Rational> totals;
    for (auto& p : partitions_of(n)) {
        if (!omega_structural(p)) continue;
        int m = 3 * p.length() - p.m(1);
        totals[m] += b_term(p, m);
    }
    return finalize_row(totals, "b_row");
}

Rational phi_weight(const Partition& p) {
    Rational w = 1;
    for (int j = 1; j <= p.n; ++j) {
        int mj = p.m(j);
        if (mj == 0) continue;
        w *= Rational(int_pow(2, mj), int_pow(factorial(j), mj) * factorial(mj));
    }
    return w;
}

Rational psi_weight(const Partition& p) {
    Rational w = 1;
    for (int j = 1; j <= p.n; ++j) {
        int mj = p.m(j);
        if (mj == 0) continue;
        w *= Rational(mj % 2 == 0 ? 1 : -1, int_pow(factorial(j), mj) * factorial(mj));
    }
    return w;
}

QExpansion partition_trace(const TraceWeight& weight, const std::vector<QExpansion>& family,
                           int n) {
    if (static_cast<int>(family.size()) < n)
        throw series_domain_error("partition_trace: family too short");
    int order = family.empty() ? 0 : family[0].order();
    for (const auto& f : family) order = std::min(order, f.order());
    QExpansion total(order);
    for (auto& p : partitions_of(n)) {
        QExpansion prod = QExpansion::constant(1, order);
        for (int j = 1; j <= n; ++j)
            for (int r = 0; r < p.m(j); ++r) prod *= family[j - 1];
        total += weight(p) * prod;
    }
    return total;
}

namespace {

void gen_bounded(int remaining, int idx, const std::vector<long long>& part_values,
                 std::vector<int>& mult, std::function<void(const std::vector<int>&)> emit) {
    if (idx < 0) {
        if (remaining == 0) emit(mult);
        return;
    }
    long long v = part_values[idx];
    int maxc = static_cast<int>(remaining / v);
    for (int c = maxc; c >= 0; --c) {
        mult[idx] = c;
        gen_bounded(remaining - c * static_cast<int>(v), idx - 1, part_values, mult, emit);
        mult[idx] = 0;
    }
}

}  // namespace

std::vector<TriangularPartition> triangular_partitions(int n) {
    std::vector<long long> vals;
    for (int l = 1; triangular_number(l) <= n; ++l) vals.push_back(triangular_number(l));
    std::vector<TriangularPartition> out;
    if (n == 0) {
        out.push_back(TriangularPartition{0, {}});
        return out;
    }
    std::vector<int> mult(vals.size(), 0);
    gen_bounded(n, static_cast<int>(vals.size()) - 1, vals, mult, [&](const std::vector<int>& m) {
        TriangularPartition t{n, m};
        while (!t.mult.empty() && t.mult.back() == 0) t.mult.pop_back();
        out.push_back(std::move(t));
    });
    return out;
}

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

std::vector<PentagonalPartition> pentagonal_partitions(int n) {
    // Interleave P_1, P_{-1}, P_2, P_{-2}, ... and split back afterwards.
    // P_l = l(3l-1)/2 for l in Z \ {0}; P_{-l} = l(3l+1)/2.
    std::vector<long long> vals;
    std::vector<bool> positive;  // index parity tag
    for (int l = 1;; ++l) {
        long long pp = pentagonal_number(l);
        long long pn = pentagonal_number(-l);
        bool any = false;
        if (pp <= n) {
            vals.push_back(pp);
            positive.push_back(true);
            any = true;
        }
        if (pn <= n) {
            vals.push_back(pn);
            positive.push_back(false);
            any = true;
        }
        if (!any) break;
    }
    std::vector<PentagonalPartition> out;
    if (n == 0) {
        out.push_back(PentagonalPartition{0, {}, {}});
        return out;
    }
    std::vector<int> mult(vals.size(), 0);
    gen_bounded(n, static_cast<int>(vals.size()) - 1, vals, mult, [&](const std::vector<int>& m) {
        PentagonalPartition p;
        p.n = n;
        for (size_t i = 0; i < m.size(); ++i) {
            auto& dst = positive[i] ? p.mult_pos : p.mult_neg;
            dst.push_back(m[i]);
        }
        trim_trailing_zeros(p.mult_pos);
        trim_trailing_zeros(p.mult_neg);
        out.push_back(std::move(p));
    });
    return out;
}

Partition triangular_to_lambda(const TriangularPartition& t) {
    Partition p;
    p.n = t.n;
    p.mult.assign(std::max(t.n, 0), 0);
    int ell = 0;
    for (int a : t.mult) ell += a;
    int remaining = ell;
    for (int j = 1; j <= t.n && remaining > 0; ++j) {
        p.mult[j - 1] = remaining;
        if (j - 1 < static_cast<int>(t.mult.size())) remaining -= t.mult[j - 1];
        else remaining = 0;
    }
    return p;
}

TriangularPartition lambda_to_triangular(const Partition& p) {
    TriangularPartition t;
    t.n = p.n;
    int L = 0;
    for (int l = 1; triangular_number(l) <= p.n; ++l) L = l;
    t.mult.assign(L, 0);
    for (int j = 1; j <= L; ++j) t.mult[j - 1] = p.m(j) - p.m(j + 1);
    while (!t.mult.empty() && t.mult.back() == 0) t.mult.pop_back();
    return t;
}

Partition pentagonal_to_omega(const PentagonalPartition& t) {
    Partition p;
    p.n = t.n;
    p.mult.assign(std::max(t.n, 0), 0);
    auto tail_sum = [](const std::vector<int>& v, int from) {
        int s = 0;
        for (size_t i = from; i < v.size(); ++i) s += v[i];
        return s;
    };
    for (int j = 1; 3 * j - 2 <= p.n; ++j) p.mult[3 * j - 2 - 1] = tail_sum(t.mult_pos, j - 1);
    for (int j = 1; 3 * j - 1 <= p.n; ++j) p.mult[3 * j - 1 - 1] = tail_sum(t.mult_neg, j - 1);
    return p;
}

PentagonalPartition omega_to_pentagonal(const Partition& p) {
    PentagonalPartition t;
    t.n = p.n;
    int L = 0;
    while (3 * (L + 1) - 2 <= p.n) ++L;
    t.mult_pos.assign(L, 0);
    t.mult_neg.assign(L, 0);
    for (int l = 1; l <= L; ++l) {
        t.mult_pos[l - 1] = p.m(3 * l - 2) - p.m(3 * l + 1);
        t.mult_neg[l - 1] = p.m(3 * l - 1) - p.m(3 * l + 2);
    }
    // trim trailing zeros so equality with enumerated forms is structural
    trim_trailing_zeros(t.mult_pos);
    trim_trailing_zeros(t.mult_neg);
    return t;
}

}  // namespace qeis
