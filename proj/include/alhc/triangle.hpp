#pragma once

// The triangular representation of an anti-lecture hall composition and its
// decomposition into an all-ones triangle, a stack of all-twos triangles, a
// residual 0/1/2 array S and a partition tail. This is the machinery behind
// the even and odd bounded generating functions and the finite distinct-part
// identity check_si2.

#include "alhc/enumerate.hpp"
#include "alhc/qseries.hpp"

#include <string>
#include <vector>

namespace alhc {

/// Upper-triangular array t_{i,j}, 1 <= i <= j <= size, stored by columns:
/// column j holds rows 1..j top to bottom.
struct TriangularArray {
    std::vector<std::vector<int>> cols;

    friend auto operator<=>(const TriangularArray&, const TriangularArray&) = default;

    int size() const { return static_cast<int>(cols.size()); }

    /// 1-based access.
    int at(int i, int j) const { return cols.at(static_cast<size_t>(j - 1)).at(static_cast<size_t>(i - 1)); }
    int& at(int i, int j) { return cols.at(static_cast<size_t>(j - 1)).at(static_cast<size_t>(i - 1)); }
    int diag(int j) const { return at(j, j); }

    int weight() const {
        int w = 0;
        for (const auto& col : cols)
            for (int v : col) w += v;
        return w;
    }

    static TriangularArray filled(int size, int value) {
        TriangularArray t;
        t.cols.reserve(static_cast<size_t>(size));
        for (int j = 1; j <= size; ++j) t.cols.emplace_back(static_cast<size_t>(j), value);
        return t;
    }
};

/// Empty string when T satisfies the triangular-representation properties:
/// weakly decreasing diagonal, two-valued non-increasing columns, and the
/// cross-column comparison for equal neighbouring diagonal entries.
/// Otherwise names the first failing property.
inline std::string a_triangle_violation(const TriangularArray& t) {
    int n = t.size();
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
            if (t.at(i, j) < 0) return "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (int j = 1; j + 1 <= n; ++j)
        if (t.diag(j) < t.diag(j + 1))
            return "diagonal increases at column " + std::to_string(j + 1);
    for (int j = 1; j <= n; ++j) {
        int d = t.diag(j);
        for (int i = 1; i <= j; ++i) {
            int v = t.at(i, j);
            if (v != d && v != d + 1)
                return "column " + std::to_string(j) + " entry not in {" + std::to_string(d) +
                       "," + std::to_string(d + 1) + "}";
            if (i < j && t.at(i + 1, j) > v)
                return "column " + std::to_string(j) + " increases downward";
        }
    }
    for (int j = 1; j + 1 <= n; ++j) {
        if (t.diag(j) != t.diag(j + 1)) continue;
        for (int i = 1; i <= j; ++i)
            if (t.at(i, j) < t.at(i, j + 1))
                return "columns " + std::to_string(j) + "," + std::to_string(j + 1) +
                       " violate the equal-diagonal comparison at row " + std::to_string(i);
    }
    return {};
}

inline bool is_a_triangle(const TriangularArray& t) { return a_triangle_violation(t).empty(); }

/// Triangular representation of an anti-lecture hall composition: the j-th
/// column has diagonal floor(lambda_j / j) and its first lambda_j mod j
/// entries are one larger, so the column sums back to lambda_j.
inline TriangularArray to_triangle(const Composition& c) {
    if (!is_alhc(c)) throw std::invalid_argument("to_triangle: not an anti-lecture hall composition");
    TriangularArray t;
    t.cols.reserve(c.parts.size());
    for (size_t j0 = 0; j0 < c.parts.size(); ++j0) {
        int j = static_cast<int>(j0) + 1;
        int l = c.parts[j0] / j;
        int r = c.parts[j0] % j;
        std::vector<int> col(static_cast<size_t>(j), l);
        for (int i = 0; i < r; ++i) col[static_cast<size_t>(i)] = l + 1;
        t.cols.push_back(std::move(col));
    }
    return t;
}

/// Inverse of to_triangle: column sums, validated first.
inline Composition from_triangle(const TriangularArray& t) {
    std::string why = a_triangle_violation(t);
    if (!why.empty()) throw std::invalid_argument("from_triangle: " + why);
    Composition c;
    for (const auto& col : t.cols) {
        int s = 0;
        for (int v : col) s += v;
        c.parts.push_back(s);
    }
    while (!c.parts.empty() && c.parts.back() == 0) c.parts.pop_back();
    return c;
}

enum class Parity { Even, Odd };

inline int first_part_bound(int k, Parity parity) {
    return parity == Parity::Even ? 2 * k - 2 : 2 * k - 3;
}

/// Result of peeling the triangle of lambda^{(1)} = (lambda_1..lambda_{N_1}):
/// one from every column (R1), then two from the first N_i columns for each
/// i >= 2 (R2s), leaving S; the tail is the partition (lambda_{N_1+1}, ...).
///
/// rect_sizes holds N_1 >= ... >= N_{k-1} where N_i counts diagonal entries
/// of the full triangle that are >= 2i-1. segment_ones lists, innermost
/// segment first (columns 1..N_{k-1} up to columns N_2+1..N_1), how many of
/// the segment's diagonal entries of S equal one.
struct Decomposition {
    int k = 2;
    Parity parity = Parity::Even;
    std::vector<int> rect_sizes;    // N_1..N_{k-1}
    TriangularArray r1;             // all ones, size N_1
    std::vector<TriangularArray> r2s;  // all twos, sizes N_2..N_{k-1}
    TriangularArray s;              // size N_1
    Partition tail;                 // first part <= N_1
    std::vector<int> segment_ones;  // m values, innermost segment first

    int component_weight() const {
        int w = r1.weight() + s.weight() + tail.weight();
        for (const auto& r : r2s) w += r.weight();
        return w;
    }
};

/// Diagonal-segment boundaries in ascending column order: 0 = N_k <= N_{k-1}
/// <= ... <= N_1. Segment s covers columns bounds[s]+1 .. bounds[s+1].
inline std::vector<int> segment_bounds(const std::vector<int>& rect_sizes) {
    std::vector<int> b{0};
    for (auto it = rect_sizes.rbegin(); it != rect_sizes.rend(); ++it) b.push_back(*it);
    return b;
}

/// Validity of a residual array S for the given rectangle sizes: 0/1
/// diagonal, weakly decreasing within each segment, two-valued non-increasing
/// columns, the equal-diagonal column comparison within segments, and
/// reconstruction thresholds matching the N_i exactly. The odd variant
/// additionally forces the first N_{k-1} columns to zero.
inline std::string s_array_violation(const TriangularArray& s, const std::vector<int>& rect_sizes,
                                     Parity parity) {
    for (size_t i = 0; i + 1 < rect_sizes.size(); ++i)
        if (rect_sizes[i] < rect_sizes[i + 1]) return "rectangle sizes not weakly decreasing";
    int n1 = rect_sizes.empty() ? 0 : rect_sizes.front();
    if (s.size() != n1) return "S size differs from N_1";
    for (int j = 1; j <= n1; ++j)
        if (s.diag(j) != 0 && s.diag(j) != 1)
            return "S diagonal entry not 0/1 at column " + std::to_string(j);
    // reconstruct the triangle the decomposition came from and validate it
    TriangularArray t = s;
    for (int j = 1; j <= n1; ++j)
        for (int i = 1; i <= j; ++i) t.at(i, j) += 1;
    for (size_t r = 1; r < rect_sizes.size(); ++r)
        for (int j = 1; j <= rect_sizes[r]; ++j)
            for (int i = 1; i <= j; ++i) t.at(i, j) += 2;
    std::string why = a_triangle_violation(t);
    if (!why.empty()) return "reconstruction: " + why;
    for (size_t i = 0; i < rect_sizes.size(); ++i) {
        int threshold = 2 * static_cast<int>(i) + 1;
        int count = 0;
        for (int j = 1; j <= n1; ++j)
            if (t.diag(j) >= threshold) ++count;
        if (count != rect_sizes[i])
            return "N_" + std::to_string(i + 1) + " threshold mismatch";
    }
    if (parity == Parity::Odd) {
        int inner = rect_sizes.empty() ? 0 : rect_sizes.back();
        for (int j = 1; j <= inner; ++j)
            for (int i = 1; i <= j; ++i)
                if (s.at(i, j) != 0)
                    return "odd variant requires zero entries in the first N_{k-1} columns";
    }
    return {};
}

inline bool is_valid_s_array(const TriangularArray& s, const std::vector<int>& rect_sizes,
                             Parity parity) {
    return s_array_violation(s, rect_sizes, parity).empty();
}

/// Decomposition driving Theorems even1/odd1: requires lambda_1 <= 2k-2
/// (even) or 2k-3 (odd).
inline Decomposition decompose(const Composition& lambda, int k, Parity parity) {
    if (k < 2) throw std::invalid_argument("decompose: k must be >= 2");
    if (!is_alhc(lambda)) throw std::invalid_argument("decompose: not an anti-lecture hall composition");
    int bound = first_part_bound(k, parity);
    if (!lambda.parts.empty() && lambda.parts.front() > bound)
        throw std::invalid_argument("decompose: first part exceeds " + std::to_string(bound));

    TriangularArray t = to_triangle(lambda);
    Decomposition d;
    d.k = k;
    d.parity = parity;
    for (int i = 1; i <= k - 1; ++i) {
        int count = 0;
        for (int j = 1; j <= t.size(); ++j)
            if (t.diag(j) >= 2 * i - 1) ++count;
        d.rect_sizes.push_back(count);
    }
    int n1 = d.rect_sizes.front();
    d.tail.parts.assign(lambda.parts.begin() + n1, lambda.parts.end());
    d.r1 = TriangularArray::filled(n1, 1);
    d.s = to_triangle(Composition{{lambda.parts.begin(), lambda.parts.begin() + n1}});
    for (int j = 1; j <= n1; ++j)
        for (int i = 1; i <= j; ++i) d.s.at(i, j) -= 1;
    for (size_t r = 1; r < d.rect_sizes.size(); ++r) {
        int ni = d.rect_sizes[r];
        d.r2s.push_back(TriangularArray::filled(ni, 2));
        for (int j = 1; j <= ni; ++j)
            for (int i = 1; i <= j; ++i) d.s.at(i, j) -= 2;
    }
    auto bounds = segment_bounds(d.rect_sizes);
    for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
        int ones = 0;
        for (int j = bounds[seg] + 1; j <= bounds[seg + 1]; ++j)
            if (d.s.diag(j) == 1) ++ones;
        d.segment_ones.push_back(ones);
    }
    std::string why = s_array_violation(d.s, d.rect_sizes, parity);
    if (!why.empty()) throw std::logic_error("decompose: " + why);
    return d;
}

/// Inverse of decompose, validated component by component.
inline Composition recompose(const Decomposition& d) {
    if (static_cast<int>(d.rect_sizes.size()) != d.k - 1)
        throw std::invalid_argument("recompose: expected k-1 rectangle sizes");
    int n1 = d.rect_sizes.empty() ? 0 : d.rect_sizes.front();
    if (d.r1.size() != n1 || d.r1 != TriangularArray::filled(n1, 1))
        throw std::invalid_argument("recompose: R1 must be the all-ones triangle of size N_1");
    if (d.r2s.size() + 1 != d.rect_sizes.size())
        throw std::invalid_argument("recompose: expected k-2 all-twos triangles");
    for (size_t r = 0; r < d.r2s.size(); ++r)
        if (d.r2s[r] != TriangularArray::filled(d.rect_sizes[r + 1], 2))
            throw std::invalid_argument("recompose: R2 size/content mismatch");
    std::string why = s_array_violation(d.s, d.rect_sizes, d.parity);
    if (!why.empty()) throw std::invalid_argument("recompose: " + why);

    TriangularArray t = d.s;
    for (int j = 1; j <= n1; ++j)
        for (int i = 1; i <= j; ++i) t.at(i, j) += 1;
    for (size_t r = 1; r < d.rect_sizes.size(); ++r)
        for (int j = 1; j <= d.rect_sizes[r]; ++j)
            for (int i = 1; i <= j; ++i) t.at(i, j) += 2;
    Composition lambda = from_triangle(t);
    if (static_cast<int>(lambda.parts.size()) != n1)
        throw std::invalid_argument("recompose: reconstructed triangle has trailing zero columns");

    for (size_t i = 0; i + 1 < d.tail.parts.size(); ++i)
        if (d.tail.parts[i] < d.tail.parts[i + 1])
            throw std::invalid_argument("recompose: tail is not a partition");
    if (!d.tail.parts.empty() && (d.tail.parts.front() > n1 || d.tail.parts.back() <= 0))
        throw std::invalid_argument("recompose: tail parts must lie in 1..N_1");
    lambda.parts.insert(lambda.parts.end(), d.tail.parts.begin(), d.tail.parts.end());
    if (!is_alhc(lambda)) throw std::invalid_argument("recompose: result is not an ALHC");
    if (!lambda.parts.empty() && lambda.parts.front() > first_part_bound(d.k, d.parity))
        throw std::invalid_argument("recompose: first part exceeds the parity bound");
    return lambda;
}

/// One column block of S split into the three trapezoids of the proof:
/// s1 covers the all-ones layer of the block's first `ones` columns, s2 the
/// 0/1 remainder of those columns, s3 the untouched later columns. Each array
/// is stored as columns of the same heights as in S; the block reassembles as
/// s1 + (s2 | s3) columnwise.
struct SBlockSplit {
    int ones = 0;                         // m_i
    std::vector<std::vector<int>> s1, s2, s3;
};

/// Splits block `index` (1-based, innermost block of columns first, matching
/// segment_ones order) of a valid S array.
inline SBlockSplit split_S_block(const TriangularArray& s, const std::vector<int>& rect_sizes,
                                 int index, Parity parity = Parity::Even) {
    std::string why = s_array_violation(s, rect_sizes, parity);
    if (!why.empty()) throw std::invalid_argument("split_S_block: " + why);
    auto bounds = segment_bounds(rect_sizes);
    if (index < 1 || index + 1 > static_cast<int>(bounds.size()))
        throw std::invalid_argument("split_S_block: block index out of range");
    int lo = bounds[static_cast<size_t>(index) - 1];  // plays N_{i+1}
    int hi = bounds[static_cast<size_t>(index)];      // plays N_i

    SBlockSplit out;
    for (int j = lo + 1; j <= hi && s.diag(j) == 1; ++j) ++out.ones;
    for (int j = lo + 1; j <= hi; ++j) {
        std::vector<int> col(s.cols[static_cast<size_t>(j - 1)]);
        bool first_block = j <= lo + out.ones;
        std::vector<int> layer(col.size(), first_block ? 1 : 0);
        out.s1.push_back(layer);
        if (first_block) {
            for (int& v : col) v -= 1;
            out.s2.push_back(col);
        } else {
            out.s3.push_back(col);
        }
    }
    for (const auto& part : {out.s2, out.s3})
        for (const auto& col : part)
            for (int v : col)
                if (v != 0 && v != 1)
                    throw std::logic_error("split_S_block: non-binary entry after layer removal");
    return out;
}

/// Closed-form generating function for the valid S arrays of the given
/// rectangle sizes:
///   even: (q;q)_{N_1} (-q;q)_{N_1} / prod_i (q;q)_{N_i - N_{i+1}}
///   odd:  additionally divided by (-q;q)_{N_{k-1}}.
inline TruncatedSeries gf_S(const std::vector<int>& rect_sizes, int order, Parity parity) {
    for (size_t i = 0; i + 1 < rect_sizes.size(); ++i)
        if (rect_sizes[i] < rect_sizes[i + 1])
            throw std::invalid_argument("gf_S: sizes must be weakly decreasing");
    if (!rect_sizes.empty() && rect_sizes.back() < 0)
        throw std::invalid_argument("gf_S: sizes must be nonnegative");
    int n1 = rect_sizes.empty() ? 0 : rect_sizes.front();
    TruncatedSeries r = poch(+1, 1, n1, order) * poch(-1, 1, n1, order);
    for (size_t i = 0; i < rect_sizes.size(); ++i) {
        int next = (i + 1 < rect_sizes.size()) ? rect_sizes[i + 1] : 0;
        r *= poch(+1, 1, rect_sizes[i] - next, order).inverse();
    }
    if (parity == Parity::Odd && !rect_sizes.empty())
        r *= poch(-1, 1, rect_sizes.back(), order).inverse();
    return r;
}

/// The finite identity behind the block generating function: partitions with
/// distinct parts in [P+1, P+M] counted two ways,
///   sum_{m=0}^{M} q^{(2P+1+m)m/2} [M choose m]_q  ==  (-q^{P+1};q)_M.
inline bool check_si2(int M, int P) {
    if (M < 0 || P < 0) throw std::invalid_argument("check_si2: arguments must be nonnegative");
    int order = (2 * P + 1 + M) * M / 2;  // degree of both sides
    TruncatedSeries lhs(order);
    for (int m = 0; m <= M; ++m) {
        long long e = (2LL * P + 1 + m) * m / 2;
        lhs += gauss_binom(M, m).truncated(order).shifted(static_cast<int>(e));
    }
    TruncatedSeries rhs = poch(-1, P + 1, M, order);
    return !first_mismatch(lhs, rhs).has_value();
}

/// Row-aligned text like the tabular layout in the source material: row i
/// starts at column i.
inline std::string print_triangle(const TriangularArray& t) {
    int width = 1;
    for (const auto& col : t.cols)
        for (int v : col) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::string out;
    for (int i = 1; i <= t.size(); ++i) {
        std::string line;
        for (int j = 1; j <= t.size(); ++j) {
            std::string cell = j >= i ? std::to_string(t.at(i, j)) : "";
            cell.insert(0, static_cast<size_t>(width) - cell.size(), ' ');
            if (j > 1) line += ' ';
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace alhc
