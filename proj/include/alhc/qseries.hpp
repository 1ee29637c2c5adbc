#pragma once

// Exact truncated formal power series in q with arbitrary-precision integer
// coefficients, plus the q-Pochhammer, Gaussian-binomial and theta-sum
// constructors used throughout the library. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alhc {

using Int = boost::multiprecision::cpp_int;

/// A formal power series c_0 + c_1 q + ... + c_order q^order. Coefficients
/// beyond `order` are unknown, not zero; mixed-order arithmetic truncates to
/// the smaller order so precision loss is always explicit.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(check_order(order)), c_(order + 1) {}

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    /// q^exponent, or zero if the exponent exceeds the order.
    static TruncatedSeries monomial(int exponent, int order) {
        if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
        TruncatedSeries s(order);
        if (exponent <= order) s.c_[exponent] = 1;
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<Int> coeffs, int order) {
        check_order(order);
        if (static_cast<int>(coeffs.size()) > order + 1)
            throw std::invalid_argument("from_coeffs: more coefficients than order allows");
        TruncatedSeries s(order);
        std::copy(coeffs.begin(), coeffs.end(), s.c_.begin());
        return s;
    }

    int order() const { return order_; }
    const Int& coeff(int n) const { return c_.at(static_cast<size_t>(n)); }
    std::span<const Int> coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
    }

    TruncatedSeries truncated(int new_order) const {
        check_order(new_order);
        TruncatedSeries s(new_order);
        int n = std::min(new_order, order_);
        std::copy(c_.begin(), c_.begin() + n + 1, s.c_.begin());
        return s;
    }

    /// Multiplication by q^e at unchanged order; high coefficients fall off.
    TruncatedSeries shifted(int e) const {
        if (e < 0) throw std::invalid_argument("shifted: negative exponent");
        TruncatedSeries s(order_);
        for (int i = 0; i + e <= order_; ++i) s.c_[i + e] = c_[i];
        return s;
    }

    TruncatedSeries& negate() {
        for (Int& v : c_) v = -v;
        return *this;
    }

    /// In-place multiplication by the binomial 1 - sign * q^exponent.
    TruncatedSeries& mul_binomial(int sign, int exponent) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("mul_binomial: sign must be +-1");
        if (exponent <= 0) throw std::invalid_argument("mul_binomial: exponent must be positive");
        if (exponent <= order_) {
            for (int i = order_; i >= exponent; --i)
                c_[i] -= sign * c_[i - exponent];
        }
        return *this;
    }

    /// Multiplicative inverse. The constant term must be +1 or -1, which
    /// keeps every coefficient of the inverse an integer.
    TruncatedSeries inverse() const {
        if (c_[0] != 1 && c_[0] != -1)
            throw std::domain_error("inverse: constant term must be +1 or -1");
        // b_n = -c_0 * sum_{k=1}^{n} a_k b_{n-k}, b_0 = 1/c_0 = c_0.
        TruncatedSeries b(order_);
        b.c_[0] = c_[0];
        for (int n = 1; n <= order_; ++n) {
            Int s = 0;
            for (int k = 1; k <= n; ++k)
                if (c_[k] != 0) s += c_[k] * b.c_[n - k];
            b.c_[n] = -c_[0] * s;
        }
        return b;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    /// Cauchy product truncated to min(a.order, b.order).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= r.order_; ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (o.order_ < order_) *this = truncated(o.order_);
        for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
        return *this;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("order must be nonnegative");
        return order;
    }

    int order_;
    std::vector<Int> c_;
};

/// First exponent where the two series differ, comparing retained
/// coefficients up to the smaller order; nullopt when they agree.
inline std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return std::nullopt;
}

inline bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !first_mismatch(a, b).has_value();
}

/// Pass as `count` to poch() for an infinite product.
inline constexpr int kInfinite = -1;

/// Truncation of prod_{i=0}^{count-1} (1 - sign * q^{start + i*step}).
/// poch(+1, 1, n)   = (q;q)_n          poch(-1, 1, n)       = (-q;q)_n
/// poch(+1, 1, kInfinite)  = (q;q)_inf   poch(+1, a, kInfinite, ord, m) = (q^a;q^m)_inf
inline TruncatedSeries poch(int sign, int start, int count, int order, int step = 1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("poch: sign must be +-1");
    if (start < 1) throw std::invalid_argument("poch: start must be positive");
    if (step < 1) throw std::invalid_argument("poch: step must be positive");
    if (count < 0 && count != kInfinite) throw std::invalid_argument("poch: bad count");
    TruncatedSeries r = TruncatedSeries::one(order);
    for (long long i = 0; count == kInfinite || i < count; ++i) {
        long long e = start + i * step;
        if (e > order) break;  // factors beyond the order are 1 + O(q^{order+1})
        r.mul_binomial(sign, static_cast<int>(e));
    }
    return r;
}

/// Gaussian binomial coefficient [m choose r]_q as an exact polynomial of
/// degree r(m-r), built by the q-Pascal recurrence
///   [j, t] = [j-1, t-1] + q^t [j-1, t]
/// so every intermediate value is an integer polynomial. r > m gives the
/// zero polynomial.
inline TruncatedSeries gauss_binom(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("gauss_binom: negative argument");
    if (r > m) return TruncatedSeries(0);
    int deg = r * (m - r);
    // row[t] = [j choose t]_q while j sweeps 0..m
    std::vector<TruncatedSeries> row(static_cast<size_t>(r) + 1, TruncatedSeries(deg));
    row[0] = TruncatedSeries::one(deg);
    for (int j = 1; j <= m; ++j) {
        for (int t = std::min(j, r); t >= 1; --t) {
            TruncatedSeries next = row[t - 1];
            next += row[t].shifted(t);
            row[t] = std::move(next);
        }
    }
    return row[r];
}

/// Bilateral theta sum  sum_{n in Z} (-1)^n q^{A n^2 + B n}  truncated at
/// `order`, with A = two_a/2 > 0 and B = two_b/2 passed as doubled integers
/// so no rational arithmetic is needed. Every n whose exponent does not
/// exceed the order must yield a nonnegative integer exponent; anything
/// else is rejected.
inline TruncatedSeries theta_sum(int two_a, int two_b, int order) {
    if (two_a <= 0) throw std::invalid_argument("theta_sum: A must be positive");
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    auto accumulate = [&](long long n) {
        long long num = two_a * n * n + two_b * n;
        if (num > 2LL * order) return;
        if (num < 0)
            throw std::domain_error("theta_sum: negative exponent at n=" + std::to_string(n));
        if (num % 2 != 0)
            throw std::domain_error("theta_sum: non-integer exponent at n=" + std::to_string(n));
        c[static_cast<size_t>(num / 2)] += (n % 2 == 0) ? 1 : -1;
    };
    accumulate(0);
    for (long long n = 1;; ++n) {
        long long ep = two_a * n * n + two_b * n;   // exponent*2 at +n
        long long em = two_a * n * n - two_b * n;   // exponent*2 at -n
        bool grow_p = 2 * two_a * n + two_a + two_b > 0;  // e(n+1) > e(n)
        bool grow_m = 2 * two_a * n + two_a - two_b > 0;
        if (ep > 2LL * order && em > 2LL * order && grow_p && grow_m) break;
        accumulate(n);
        accumulate(-n);
    }
    return TruncatedSeries::from_coeffs(std::move(c), order);
}

}  // namespace alhc
