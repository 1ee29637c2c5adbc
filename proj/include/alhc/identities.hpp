#pragma once

// Registry and evaluator for every identity the library can cross-check:
// enumeration series against product forms, multi-sums against products,
// theta sums against triple products, and the finite polynomial identity.
// Each check compares coefficients exactly and reports the first mismatch.

#include "alhc/bijection.hpp"
#include "alhc/enumerate.hpp"
#include "alhc/multisum.hpp"
#include "alhc/qseries.hpp"
#include "alhc/triangle.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alhc {

struct Mismatch {
    int exponent = 0;
    Int lhs, rhs;
};

struct IdentityReport {
    std::string id;
    std::map<std::string, int> params;  // ordered, so output is deterministic
    int order = 0;
    bool passed = false;
    std::optional<Mismatch> mismatch;
    double wall_time_ms = 0.0;
};

using Params = std::map<std::string, int>;

namespace detail {

inline int get_param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    return it->second;
}

inline IdentityReport compare(std::string id, Params params, int order,
                              const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.params = std::move(params);
    rep.order = order;
    if (auto at = first_mismatch(lhs, rhs)) {
        rep.passed = false;
        rep.mismatch = Mismatch{*at, lhs.coeff(*at), rhs.coeff(*at)};
    } else {
        rep.passed = true;
    }
    return rep;
}

}  // namespace detail

/// Product form prod_{i=1}^{k} (1+q^i)/(1-q^{i+1}); k = kInfinite gives the
/// unbounded version.
inline TruncatedSeries anti_product(int k, int order) {
    return poch(-1, 1, k, order) * poch(+1, 2, k, order).inverse();
}

/// (-q;q)_inf (q;q^k)_inf (q^{k-1};q^k)_inf (q^k;q^k)_inf / (q;q)_inf — the
/// bounded-first-part product, equal to the H_k overpartition series.
inline TruncatedSeries bounded_first_part_product(int k, int order) {
    TruncatedSeries r = poch(-1, 1, kInfinite, order);
    r *= poch(+1, 1, kInfinite, order, k);
    r *= poch(+1, k - 1, kInfinite, order, k);
    r *= poch(+1, k, kInfinite, order, k);
    r *= poch(+1, 1, kInfinite, order).inverse();
    return r;
}

/// First and second Rogers-Ramanujan sums and products.
inline TruncatedSeries rr_sum(int linear_shift, int order) {
    TruncatedSeries acc(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(n) * n + static_cast<long long>(linear_shift) * n;
        if (e > order) break;
        acc += poch(+1, 1, n, order).inverse().shifted(static_cast<int>(e));
    }
    return acc;
}

inline TruncatedSeries rr1_lhs(int order) { return rr_sum(0, order); }  // sum q^{n^2}/(q;q)_n
inline TruncatedSeries rr2_lhs(int order) { return rr_sum(1, order); }  // sum q^{n^2+n}/(q;q)_n

inline TruncatedSeries rr1_rhs(int order) {
    return (poch(+1, 1, kInfinite, order, 5) * poch(+1, 4, kInfinite, order, 5)).inverse();
}

inline TruncatedSeries rr2_rhs(int order) {
    return (poch(+1, 2, kInfinite, order, 5) * poch(+1, 3, kInfinite, order, 5)).inverse();
}

/// (-q;q)_inf (q,q^{2k},q^{2k+1};q^{2k+1})_inf / (q;q)_inf — the series of
/// F_{2k-1} per the convolution argument.
inline TruncatedSeries f_odd_product(int k, int order) {
    return poch(-1, 1, kInfinite, order) * gf_R_product(k, order);
}

/// Evaluates both sides of a registered identity and compares exactly.
///
/// Known ids: anti_k, anti, mthm1, main, generr, rr1, rr2, even3, odd2,
/// jacobi_even, jacobi_odd, even1, odd1, DE, DE2, F, si2.
inline IdentityReport verify(const std::string& id, const Params& params, int order) {
    using detail::get_param;
    auto t0 = std::chrono::steady_clock::now();
    IdentityReport rep;
    if (id == "anti_k") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, family_gf(Family::A_k, {.k = k}, order),
                              anti_product(k, order));
    } else if (id == "anti") {
        rep = detail::compare(id, params, order, family_gf(Family::A, {}, order),
                              anti_product(kInfinite, order));
    } else if (id == "mthm1") {
        int k = get_param(params, "k");
        if (k < 3) throw std::invalid_argument("mthm1: k must be >= 3");
        rep = detail::compare(id, params, order, family_gf(Family::F, {.k = k - 2}, order),
                              bounded_first_part_product(k, order));
    } else if (id == "main") {
        int k = get_param(params, "k");
        if (k < 3) throw std::invalid_argument("main: k must be >= 3");
        rep = detail::compare(id, params, order, family_gf(Family::F, {.k = k - 2}, order),
                              family_gf(Family::H, {.k = k}, order));
    } else if (id == "generr") {
        int k = get_param(params, "k");
        int a = get_param(params, "a");
        rep = detail::compare(id, params, order, lhs_generr(k, a, order), rhs_generr(k, a, order));
    } else if (id == "rr1") {
        rep = detail::compare(id, params, order, rr1_lhs(order), rr1_rhs(order));
    } else if (id == "rr2") {
        rep = detail::compare(id, params, order, rr2_lhs(order), rr2_rhs(order));
    } else if (id == "even3") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, lhs_even3(k, order), rhs_even3(k, order));
    } else if (id == "odd2") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, lhs_odd2(k, order), rhs_odd2(k, order));
    } else if (id == "jacobi_even" || id == "jacobi_odd") {
        int k = get_param(params, "k");
        if (k < 2) throw std::invalid_argument(id + ": k must be >= 2");
        bool even = id == "jacobi_even";
        TruncatedSeries bilateral = even ? theta_sum(2 * k, 2 * k - 2, order)
                                         : theta_sum(2 * k - 1, 2 * k - 3, order);
        TruncatedSeries product = jacobi_product(even ? 2 * k : 2 * k - 1, order);
        rep = detail::compare(id, params, order, bilateral, product);
        if (rep.passed) {  // also fold to the one-sided form
            TruncatedSeries folded = even ? folded_theta_even(k, order) : folded_theta_odd(k, order);
            rep = detail::compare(id, params, order, bilateral, folded);
        }
    } else if (id == "even1") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, family_gf(Family::F, {.k = 2 * k - 2}, order),
                              lhs_even3(k, order));
    } else if (id == "odd1") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, family_gf(Family::F, {.k = 2 * k - 3}, order),
                              lhs_odd2(k, order));
    } else if (id == "DE") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, gf_R_enumeration(k, order), gf_R_multisum(k, order));
    } else if (id == "DE2") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, gf_R_enumeration(k, order), gf_R_product(k, order));
    } else if (id == "F") {
        int k = get_param(params, "k");
        rep = detail::compare(id, params, order, family_gf(Family::F, {.k = 2 * k - 1}, order),
                              f_odd_product(k, order));
    } else if (id == "si2") {
        int m = get_param(params, "M");
        int p = get_param(params, "P");
        int deg = (2 * p + 1 + m) * m / 2;
        TruncatedSeries lhs(deg);
        for (int j = 0; j <= m; ++j) {
            long long e = (2LL * p + 1 + j) * j / 2;
            lhs += gauss_binom(m, j).truncated(deg).shifted(static_cast<int>(e));
        }
        rep = detail::compare(id, params, deg, lhs, poch(-1, p + 1, m, deg));
    } else {
        throw std::invalid_argument("unknown identity id '" + id + "'");
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

struct GridEntry {
    std::string id;
    Params params;
    int order;
};

/// The registered default grid: every identity at the parameters and orders
/// the library commits to.
inline std::vector<GridEntry> default_grid() {
    std::vector<GridEntry> g;
    for (int k = 1; k <= 8; ++k) g.push_back({"anti_k", {{"k", k}}, 40});
    g.push_back({"anti", {}, 40});
    for (int k = 3; k <= 8; ++k) g.push_back({"mthm1", {{"k", k}}, 60});
    for (int k = 3; k <= 8; ++k) g.push_back({"main", {{"k", k}}, 60});
    for (int k = 2; k <= 4; ++k)
        for (int a = 1; a <= k; ++a) g.push_back({"generr", {{"k", k}, {"a", a}}, 80});
    g.push_back({"rr1", {}, 100});
    g.push_back({"rr2", {}, 100});
    for (int k = 2; k <= 5; ++k) g.push_back({"even3", {{"k", k}}, 60});
    for (int k = 2; k <= 5; ++k) g.push_back({"odd2", {{"k", k}}, 60});
    for (int k = 2; k <= 6; ++k) g.push_back({"jacobi_even", {{"k", k}}, 200});
    for (int k = 2; k <= 6; ++k) g.push_back({"jacobi_odd", {{"k", k}}, 200});
    for (int k = 2; k <= 4; ++k) g.push_back({"even1", {{"k", k}}, 40});
    for (int k = 2; k <= 4; ++k) g.push_back({"odd1", {{"k", k}}, 40});
    for (int k = 2; k <= 3; ++k) g.push_back({"DE", {{"k", k}}, 30});
    for (int k = 2; k <= 3; ++k) g.push_back({"DE2", {{"k", k}}, 30});
    for (int k = 2; k <= 3; ++k) g.push_back({"F", {{"k", k}}, 40});
    for (int m = 0; m <= 12; ++m)
        for (int p = 0; p <= 12; ++p) g.push_back({"si2", {{"M", m}, {"P", p}}, 0});
    return g;
}

}  // namespace alhc
