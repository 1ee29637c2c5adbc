#pragma once

// Multi-sum and product evaluators for the Rogers-Ramanujan type identities.
// Tuple iteration over N_1 >= ... >= N_{k-1} >= 0 is cut off exactly when the
// minimal exponent reachable from the prefix exceeds the truncation order, so
// every sum below is finite and exact.

#include "alhc/qseries.hpp"

#include <vector>

namespace alhc {

namespace detail {

/// Tables of (q;q)_j^{-1}, (-q;q)_j and (-q;q)_j^{-1} for j = 0..max_n,
/// all truncated at `order`.
struct PochTables {
    std::vector<TruncatedSeries> inv_q;      // 1/(q;q)_j
    std::vector<TruncatedSeries> neg;        // (-q;q)_j
    std::vector<TruncatedSeries> inv_neg;    // 1/(-q;q)_j

    PochTables(int max_n, int order) {
        inv_q.reserve(static_cast<size_t>(max_n) + 1);
        neg.reserve(static_cast<size_t>(max_n) + 1);
        inv_neg.reserve(static_cast<size_t>(max_n) + 1);
        for (int j = 0; j <= max_n; ++j) {
            inv_q.push_back(poch(+1, 1, j, order).inverse());
            neg.push_back(poch(-1, 1, j, order));
            inv_neg.push_back(neg.back().inverse());
        }
    }
};

/// Sums `term(tuple)` over all weakly decreasing (N_1..N_{k-1}) tuples whose
/// minimal exponent stays within the order. `min_exponent` must be monotone:
/// appending a value can only raise it.
template <typename MinExponent, typename Term>
TruncatedSeries sum_over_tuples(int k, int order, MinExponent&& min_exponent, Term&& term) {
    TruncatedSeries acc(order);
    std::vector<int> tuple;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == k - 1) {
            acc += term(tuple);
            return;
        }
        int hi = tuple.empty() ? order : tuple.back();
        for (int v = 0; v <= hi; ++v) {
            tuple.push_back(v);
            bool within = min_exponent(tuple) <= order;
            if (within) self(self);
            tuple.pop_back();
            if (!within && v > 0) break;  // exponent grows with v
        }
    };
    rec(rec);
    return acc;
}

}  // namespace detail

/// Left side of the first overpartition identity: the sum over
/// N_1 >= ... >= N_{k-1} >= 0 of
///   q^{N_1(N_1+1)/2 + N_2^2+...+N_{k-1}^2 + N_2+...+N_{k-1}} (-q;q)_{N_1}
///   / [(q;q)_{N_1-N_2} ... (q;q)_{N_{k-2}-N_{k-1}} (q;q)_{N_{k-1}}].
/// With `extra_neg_denominator` the term also divides by (-q;q)_{N_{k-1}},
/// giving the left side of the second identity.
inline TruncatedSeries lhs_overpartition_sum(int k, int order, bool extra_neg_denominator) {
    if (k < 2) throw std::invalid_argument("lhs: k must be >= 2");
    auto min_exponent = [](const std::vector<int>& t) -> long long {
        long long e = static_cast<long long>(t[0]) * (t[0] + 1) / 2;
        for (size_t i = 1; i < t.size(); ++i)
            e += static_cast<long long>(t[i]) * t[i] + t[i];
        return e;
    };
    int max_n = 0;  // largest N_1 whose leading exponent fits
    while (static_cast<long long>(max_n + 1) * (max_n + 2) / 2 <= order) ++max_n;
    detail::PochTables tables(max_n, order);
    return detail::sum_over_tuples(
        k, order, min_exponent, [&](const std::vector<int>& t) {
            long long e = min_exponent(t);
            TruncatedSeries term = tables.neg[static_cast<size_t>(t[0])].shifted(static_cast<int>(e));
            for (size_t i = 0; i < t.size(); ++i) {
                int next = (i + 1 < t.size()) ? t[i + 1] : 0;
                term *= tables.inv_q[static_cast<size_t>(t[i] - next)];
            }
            if (extra_neg_denominator) term *= tables.inv_neg[static_cast<size_t>(t.back())];
            return term;
        });
}

inline TruncatedSeries lhs_even3(int k, int order) { return lhs_overpartition_sum(k, order, false); }
inline TruncatedSeries lhs_odd2(int k, int order) { return lhs_overpartition_sum(k, order, true); }

/// Right sides: (-q;q)_inf (q;q^m)_inf (q^{m-1};q^m)_inf (q^m;q^m)_inf /
/// (q;q)_inf with modulus m = 2k (first identity) or 2k-1 (second).
inline TruncatedSeries rhs_overpartition_product(int modulus, int order) {
    TruncatedSeries r = poch(-1, 1, kInfinite, order);
    r *= poch(+1, 1, kInfinite, order, modulus);
    r *= poch(+1, modulus - 1, kInfinite, order, modulus);
    r *= poch(+1, modulus, kInfinite, order, modulus);
    r *= poch(+1, 1, kInfinite, order).inverse();
    return r;
}

inline TruncatedSeries rhs_even3(int k, int order) {
    if (k < 2) throw std::invalid_argument("rhs_even3: k must be >= 2");
    return rhs_overpartition_product(2 * k, order);
}

inline TruncatedSeries rhs_odd2(int k, int order) {
    if (k < 2) throw std::invalid_argument("rhs_odd2: k must be >= 2");
    return rhs_overpartition_product(2 * k - 1, order);
}

/// Left side of the Andrews chain: sum over N_1 >= ... >= N_{k-1} >= 0 of
///   q^{N_1^2+...+N_{k-1}^2 + N_a+...+N_{k-1}} / prod_i (q;q)_{N_i-N_{i+1}}
/// with N_k = 0 and 1 <= a <= k (a = k drops the linear exponent entirely).
inline TruncatedSeries lhs_generr(int k, int a, int order) {
    if (k < 2) throw std::invalid_argument("lhs_generr: k must be >= 2");
    if (a < 1 || a > k) throw std::invalid_argument("lhs_generr: need 1 <= a <= k");
    auto min_exponent = [a](const std::vector<int>& t) -> long long {
        long long e = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            e += static_cast<long long>(t[i]) * t[i];
            if (static_cast<int>(i) + 1 >= a) e += t[i];
        }
        return e;
    };
    int max_n = 0;
    while (static_cast<long long>(max_n + 1) * (max_n + 1) <= order) ++max_n;
    detail::PochTables tables(max_n, order);
    return detail::sum_over_tuples(
        k, order, min_exponent, [&](const std::vector<int>& t) {
            long long e = min_exponent(t);
            TruncatedSeries term = TruncatedSeries::monomial(static_cast<int>(e), order);
            for (size_t i = 0; i < t.size(); ++i) {
                int next = (i + 1 < t.size()) ? t[i + 1] : 0;
                term *= tables.inv_q[static_cast<size_t>(t[i] - next)];
            }
            return term;
        });
}

/// Right side of the Andrews chain:
///   (q^a; q^m)_inf (q^{m-a}; q^m)_inf (q^m; q^m)_inf / (q;q)_inf,  m = 2k+1.
inline TruncatedSeries rhs_generr(int k, int a, int order) {
    if (k < 2) throw std::invalid_argument("rhs_generr: k must be >= 2");
    if (a < 1 || a > k) throw std::invalid_argument("rhs_generr: need 1 <= a <= k");
    int m = 2 * k + 1;
    TruncatedSeries r = poch(+1, a, kInfinite, order, m);
    r *= poch(+1, m - a, kInfinite, order, m);
    r *= poch(+1, m, kInfinite, order, m);
    r *= poch(+1, 1, kInfinite, order).inverse();
    return r;
}

/// One-sided foldings of the bilateral theta sums:
///   sum_{n>=0} (-1)^n (1 - q^{2n+1}) q^{k n^2 + (k-1) n}             (even)
///   sum_{n>=0} (-1)^n (1 - q^{2n+1}) q^{k n^2 + k n - n^2/2 - 3n/2}  (odd)
inline TruncatedSeries folded_theta(int two_a, int two_b, int order) {
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    for (long long n = 0;; ++n) {
        long long num = two_a * n * n + two_b * n;
        if (num % 2 != 0) throw std::domain_error("folded_theta: non-integer exponent");
        long long e = num / 2;
        if (e > order) break;
        int sign = (n % 2 == 0) ? 1 : -1;
        c[static_cast<size_t>(e)] += sign;
        if (e + 2 * n + 1 <= order) c[static_cast<size_t>(e + 2 * n + 1)] -= sign;
    }
    return TruncatedSeries::from_coeffs(std::move(c), order);
}

inline TruncatedSeries folded_theta_even(int k, int order) { return folded_theta(2 * k, 2 * k - 2, order); }
inline TruncatedSeries folded_theta_odd(int k, int order) { return folded_theta(2 * k - 1, 2 * k - 3, order); }

/// Triple products matched by the theta sums:
///   even: (q; q^{2k})_inf (q^{2k-1}; q^{2k})_inf (q^{2k}; q^{2k})_inf
///   odd:  (q; q^{2k-1})_inf (q^{2k-2}; q^{2k-1})_inf (q^{2k-1}; q^{2k-1})_inf
inline TruncatedSeries jacobi_product(int modulus, int order) {
    TruncatedSeries r = poch(+1, 1, kInfinite, order, modulus);
    r *= poch(+1, modulus - 1, kInfinite, order, modulus);
    r *= poch(+1, modulus, kInfinite, order, modulus);
    return r;
}

}  // namespace alhc
