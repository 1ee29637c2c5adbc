#pragma once

// Successive N x (N+1) Durfee rectangle dissection of partitions, the sets
// R_k(n), and the weight-preserving bijection theta between R_k(n) and the
// even-floor compositions Q_{2k-2}(n), plus the counting consequences of the
// convolution with distinct-part partitions.

#include "alhc/enumerate.hpp"
#include "alhc/multisum.hpp"
#include "alhc/qseries.hpp"
#include "alhc/triangle.hpp"

#include <string>
#include <vector>

namespace alhc {

/// Greedy dissection: rect_sizes[i] is the largest N such that the remaining
/// rows contain at least N rows of length >= N+1; each rectangle removes its
/// N rows, leaving the dots to their right as a residue partition. N = 0 or
/// the rectangle budget ends the dissection; the untouched rows form
/// below_last.
struct DurfeeDissection {
    std::vector<int> rect_sizes;            // N_1 >= N_2 >= ...
    std::vector<Partition> right_residues;  // one per rectangle
    Partition below_last;
};

inline DurfeeDissection durfee_dissect(const Partition& p, int max_rects) {
    if (max_rects < 1) throw std::invalid_argument("durfee_dissect: need max_rects >= 1");
    for (size_t i = 0; i + 1 < p.parts.size(); ++i)
        if (p.parts[i] < p.parts[i + 1])
            throw std::invalid_argument("durfee_dissect: parts must be weakly decreasing");
    DurfeeDissection d;
    size_t row = 0;
    for (int r = 0; r < max_rects; ++r) {
        int n = 0;
        while (row + n < p.parts.size() && p.parts[row + n] >= n + 2) ++n;
        if (n == 0) break;
        d.rect_sizes.push_back(n);
        Partition residue;
        for (int i = 0; i < n; ++i) {
            int extra = p.parts[row + i] - (n + 1);
            residue.parts.push_back(extra);
        }
        while (!residue.parts.empty() && residue.parts.back() == 0) residue.parts.pop_back();
        d.right_residues.push_back(std::move(residue));
        row += static_cast<size_t>(n);
    }
    d.below_last.parts.assign(p.parts.begin() + static_cast<std::ptrdiff_t>(row), p.parts.end());
    return d;
}

/// Undoes durfee_dissect; used to assert the dissection is exact.
inline Partition reassemble(const DurfeeDissection& d) {
    Partition p;
    for (size_t r = 0; r < d.rect_sizes.size(); ++r) {
        int n = d.rect_sizes[r];
        for (int i = 0; i < n; ++i) {
            int extra = i < static_cast<int>(d.right_residues[r].parts.size())
                            ? d.right_residues[r].parts[static_cast<size_t>(i)]
                            : 0;
            p.parts.push_back(n + 1 + extra);
        }
    }
    p.parts.insert(p.parts.end(), d.below_last.parts.begin(), d.below_last.parts.end());
    return p;
}

/// Membership in R_k: every part at least two, at most k-1 successive
/// rectangles, and nothing below the last one.
inline bool in_R_k(const Partition& p, int k) {
    if (k < 2) throw std::invalid_argument("in_R_k: k must be >= 2");
    for (int v : p.parts)
        if (v < 2) return false;
    DurfeeDissection d = durfee_dissect(p, k - 1);
    return d.below_last.parts.empty();
}

/// Membership in Q_bound: even-floor anti-lecture hall composition with the
/// first part at most `bound`.
inline bool in_Q(const Composition& c, int bound) {
    return is_alhc(c) && has_even_floors(c) && (c.parts.empty() || c.parts.front() <= bound);
}

/// The bijection theta: each Durfee rectangle becomes an all-twos triangle of
/// its size, the dots to its right become columns of ones appended past the
/// triangle (the conjugate of the residue), and the k-1 arrays are summed
/// entrywise into one triangular representation.
inline Composition theta(const Partition& p, int k) {
    if (!in_R_k(p, k)) throw std::invalid_argument("theta: partition is not in R_k");
    DurfeeDissection d = durfee_dissect(p, k - 1);
    int size = 0;
    if (!d.rect_sizes.empty()) {
        int n1 = d.rect_sizes.front();
        const auto& res = d.right_residues.front().parts;
        size = n1 + (res.empty() ? 0 : res.front());
    }
    TriangularArray t = TriangularArray::filled(size, 0);
    for (size_t r = 0; r < d.rect_sizes.size(); ++r) {
        int n = d.rect_sizes[r];
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= j; ++i) t.at(i, j) += 2;
        const auto& res = d.right_residues[r].parts;
        // conjugate: column n+c holds one 1 per residue row of length >= c
        int width = res.empty() ? 0 : res.front();
        for (int c = 1; c <= width; ++c) {
            int height = 0;
            for (int v : res)
                if (v >= c) ++height;
            for (int i = 1; i <= height; ++i) t.at(i, n + c) += 1;
        }
    }
    Composition mu = from_triangle(t);
    if (!in_Q(mu, 2 * k - 2)) throw std::logic_error("theta: image left Q_{2k-2}");
    return mu;
}

/// Inverse of theta: rectangle sizes are read off the diagonal of the
/// triangular representation (N_i counts diagonal entries >= 2i), the
/// all-twos triangles are removed, and the leftover columns of ones are
/// conjugated back into the residues of each block.
inline Partition theta_inv(const Composition& mu, int k) {
    if (k < 2) throw std::invalid_argument("theta_inv: k must be >= 2");
    if (!in_Q(mu, 2 * k - 2))
        throw std::invalid_argument("theta_inv: composition is not in Q_{2k-2}");
    TriangularArray t = to_triangle(mu);
    std::vector<int> sizes;  // N_1..N_{k-1}
    for (int i = 1; i <= k - 1; ++i) {
        int count = 0;
        for (int j = 1; j <= t.size(); ++j)
            if (t.diag(j) >= 2 * i) ++count;
        sizes.push_back(count);
    }
    for (int n : sizes)
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= j; ++i) t.at(i, j) -= 2;
    std::vector<int> heights(static_cast<size_t>(t.size()) + 1, 0);
    for (int j = 1; j <= t.size(); ++j) {
        int h = 0;
        while (h < j && t.at(h + 1, j) == 1) ++h;
        for (int i = h + 1; i <= j; ++i)
            if (t.at(i, j) != 0)
                throw std::invalid_argument("theta_inv: leftover entries are not a one-column");
        heights[static_cast<size_t>(j)] = h;
    }
    Partition p;
    int prev = t.size();  // block i owns columns N_i+1 .. prev
    for (size_t b = 0; b < sizes.size(); ++b) {
        int n = sizes[b];
        for (int r = 1; r <= n; ++r) {
            int residue = 0;
            for (int j = n + 1; j <= prev; ++j)
                if (heights[static_cast<size_t>(j)] >= r) ++residue;
            p.parts.push_back(n + 1 + residue);
        }
        prev = n;
    }
    if (!in_R_k(p, k)) throw std::logic_error("theta_inv: preimage left R_k");
    return p;
}

/// Counts of R_k(n) for n = 0..order by enumerating partitions with parts
/// at least two and testing membership.
inline TruncatedSeries gf_R_enumeration(int k, int order) {
    std::vector<Int> counts(static_cast<size_t>(order) + 1);
    for_each_partition(order, 2, false, [&](const std::vector<int>& parts, int w) {
        if (in_R_k(Partition{parts}, k)) counts[static_cast<size_t>(w)] += 1;
    });
    return TruncatedSeries::from_coeffs(std::move(counts), order);
}

/// Multi-sum route: sum over N_1 >= ... >= N_{k-1} >= 0 of
/// q^{N_1^2+...+N_{k-1}^2+N_1+...+N_{k-1}} / prod (q;q)_{N_i - N_{i+1}}.
inline TruncatedSeries gf_R_multisum(int k, int order) {
    return lhs_generr(k, 1, order);
}

/// Product route: (q, q^{2k}, q^{2k+1}; q^{2k+1})_inf / (q;q)_inf.
inline TruncatedSeries gf_R_product(int k, int order) {
    int m = 2 * k + 1;
    TruncatedSeries r = poch(+1, 1, kInfinite, order, m);
    r *= poch(+1, 2 * k, kInfinite, order, m);
    r *= poch(+1, m, kInfinite, order, m);
    r *= poch(+1, 1, kInfinite, order).inverse();
    return r;
}

/// The three routes must agree coefficient for coefficient; throws on the
/// first disagreement and returns the common series.
inline TruncatedSeries gf_R(int k, int order) {
    TruncatedSeries by_enum = gf_R_enumeration(k, order);
    TruncatedSeries by_sum = gf_R_multisum(k, order);
    TruncatedSeries by_product = gf_R_product(k, order);
    if (auto m = first_mismatch(by_enum, by_sum))
        throw std::runtime_error("gf_R: enumeration and multi-sum differ at q^" + std::to_string(*m));
    if (auto m = first_mismatch(by_enum, by_product))
        throw std::runtime_error("gf_R: enumeration and product differ at q^" + std::to_string(*m));
    return by_product;
}

/// |F_{2k-1}(n)| == sum_m |D(m)| * |Q_{2k-2}(n-m)| for all n <= n_max,
/// counting every side by enumeration.
struct ConvolutionReport {
    bool passed = true;
    int first_failing_n = -1;
    std::vector<std::uint64_t> lhs, rhs;
};

inline ConvolutionReport convolution_check(int k, int n_max) {
    if (k < 2) throw std::invalid_argument("convolution_check: k must be >= 2");
    ConvolutionReport rep;
    rep.lhs = family_counts(Family::F, {.k = 2 * k - 1}, n_max);
    auto d = family_counts(Family::D, {}, n_max);
    auto q = family_counts(Family::Q, {.k = 2 * k - 2}, n_max);
    rep.rhs.assign(static_cast<size_t>(n_max) + 1, 0);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m)
            rep.rhs[static_cast<size_t>(n)] +=
                d[static_cast<size_t>(m)] * q[static_cast<size_t>(n - m)];
    for (int n = 0; n <= n_max; ++n) {
        if (rep.lhs[static_cast<size_t>(n)] != rep.rhs[static_cast<size_t>(n)]) {
            rep.passed = false;
            rep.first_failing_n = n;
            break;
        }
    }
    return rep;
}

/// Ferrers diagram with the successive Durfee rectangles outlined: rectangle
/// dots print as 'o' inside brackets, residue dots as 'o' after the closing
/// bracket, rows below the last rectangle as plain dots.
inline std::string print_ferrers(const Partition& p, int max_rects) {
    DurfeeDissection d = durfee_dissect(p, max_rects);
    std::string out;
    for (size_t r = 0; r < d.rect_sizes.size(); ++r) {
        int n = d.rect_sizes[r];
        for (int i = 0; i < n; ++i) {
            std::string line = "[";
            for (int c = 0; c < n + 1; ++c) line += c ? " o" : "o";
            line += "]";
            int extra = i < static_cast<int>(d.right_residues[r].parts.size())
                            ? d.right_residues[r].parts[static_cast<size_t>(i)]
                            : 0;
            for (int c = 0; c < extra; ++c) line += " o";
            out += line;
            out += '\n';
        }
    }
    for (int v : d.below_last.parts) {
        std::string line = " ";
        for (int c = 0; c < v; ++c) line += c ? " o" : "o";
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace alhc
