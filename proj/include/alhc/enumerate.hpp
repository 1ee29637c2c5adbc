#pragma once

// Exhaustive generation and counting of the combinatorial families: bounded
// anti-lecture hall compositions F_k / Q_k, bounded-length ones A_k, plain
// and distinct partitions, and overpartitions with congruence-restricted
// non-overlined parts (H_k).

#include "alhc/qseries.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace alhc {

// ---------------------------------------------------------------------------
// Domain types

/// Anti-lecture hall composition candidate: a finite sequence of positive
/// integers (trailing zeros trimmed away; the empty composition is legal).
struct Composition {
    std::vector<int> parts;

    friend auto operator<=>(const Composition&, const Composition&) = default;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    /// l_i = floor(lambda_i / i), 1-based positions.
    std::vector<int> floors() const {
        std::vector<int> l(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) l[i] = parts[i] / static_cast<int>(i + 1);
        return l;
    }

    /// r_i = lambda_i - i * l_i.
    std::vector<int> remainders() const {
        std::vector<int> r(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) r[i] = parts[i] % static_cast<int>(i + 1);
        return r;
    }
};

/// Partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    friend auto operator<=>(const Partition&, const Partition&) = default;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
};

/// Overpartition: weakly decreasing parts plus the set of part values whose
/// first occurrence carries an overline (at most one overline per value).
struct Overpartition {
    std::vector<int> parts;      // weakly decreasing
    std::vector<int> overlined;  // strictly decreasing subset of the values in parts

    friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
};

// ---------------------------------------------------------------------------
// Predicates

/// lambda_1/1 >= lambda_2/2 >= ... >= 0, checked by cross-multiplication.
/// Parts must be nonnegative with no trailing zero (trimmed form); a zero
/// followed by a positive part fails the ratio chain anyway.
inline bool is_alhc(const Composition& c) {
    const auto& p = c.parts;
    if (!p.empty() && p.back() == 0) return false;
    for (int v : p)
        if (v < 0) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        // lambda_i / i >= lambda_{i+1} / (i+1), positions 1-based
        long long lhs = static_cast<long long>(i + 2) * p[i];
        long long rhs = static_cast<long long>(i + 1) * p[i + 1];
        if (lhs < rhs) return false;
    }
    return true;
}

inline bool has_even_floors(const Composition& c) {
    for (size_t i = 0; i < c.parts.size(); ++i)
        if ((c.parts[i] / static_cast<int>(i + 1)) % 2 != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Core DFS over anti-lecture hall compositions.
//
// Positions are filled left to right; at 1-based position i with part p the
// next part is capped by the cross-multiplied ratio bound
// lambda_{i+1} <= floor((i+1) p / i) and by the remaining weight. Candidates
// ascend, so compositions are visited in lexicographic order. The visitor
// sees every composition of weight <= max_weight exactly once (including the
// empty one).

struct AlhcFilter {
    int max_first = -1;     // bound on lambda_1; -1 = unbounded
    int max_length = -1;    // bound on trimmed length; -1 = unbounded
    bool even_floors = false;
};

template <typename Visitor>
void for_each_alhc(const AlhcFilter& f, int max_weight, Visitor&& visit) {
    std::vector<int> parts;
    visit(parts, 0);
    if (f.max_length == 0) return;
    auto rec = [&](auto&& self, int pos, int prev, int weight) -> void {
        if (f.max_length >= 0 && pos >= f.max_length) return;
        long long cap = static_cast<long long>(pos + 1) * prev / pos;
        int hi = static_cast<int>(std::min<long long>(cap, max_weight - weight));
        for (int next = 1; next <= hi; ++next) {
            if (f.even_floors && (next / (pos + 1)) % 2 != 0) continue;
            parts.push_back(next);
            visit(parts, weight + next);
            self(self, pos + 1, next, weight + next);
            parts.pop_back();
        }
    };
    int first_hi = (f.max_first >= 0) ? std::min(f.max_first, max_weight) : max_weight;
    for (int first = 1; first <= first_hi; ++first) {
        if (f.even_floors && first % 2 != 0) continue;
        parts.push_back(first);
        visit(parts, first);
        rec(rec, 1, first, first);
        parts.pop_back();
    }
}

// ---------------------------------------------------------------------------
// Partitions: parts descending, optional min part / distinctness. Visits
// every partition of weight <= max_weight once.

template <typename Visitor>
void for_each_partition(int max_weight, int min_part, bool distinct, Visitor&& visit) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int max_part, int weight) -> void {
        visit(parts, weight);
        int hi = std::min(max_part, max_weight - weight);
        for (int next = hi; next >= min_part; --next) {
            parts.push_back(next);
            self(self, distinct ? next - 1 : next, weight + next);
            parts.pop_back();
        }
    };
    rec(rec, max_weight, 0);
}

// ---------------------------------------------------------------------------
// Overpartitions. A distinct value v used with total multiplicity m either
// carries an overline on its first copy (the other m-1 copies are
// non-overlined) or does not (all m copies non-overlined). Non-overlined
// copies must satisfy the residue restriction when one is in force.

template <typename Visitor>
void for_each_overpartition(int max_weight, std::optional<int> modulus, Visitor&& visit) {
    if (modulus && *modulus < 3) throw std::invalid_argument("overpartition modulus must be >= 3");
    auto allowed = [&](int v) {
        if (!modulus) return true;
        int r = v % *modulus;
        return r != 0 && r != 1 && r != *modulus - 1;
    };
    std::vector<int> parts;
    std::vector<int> overlined;
    auto rec = [&](auto&& self, int max_value, int weight) -> void {
        visit(parts, overlined, weight);
        for (int v = std::min(max_value, max_weight - weight); v >= 1; --v) {
            bool ok = allowed(v);
            for (int m = 1; weight + m * v <= max_weight; ++m) {
                if (ok) {  // all m copies non-overlined
                    parts.insert(parts.end(), static_cast<size_t>(m), v);
                    self(self, v - 1, weight + m * v);
                    parts.resize(parts.size() - static_cast<size_t>(m));
                }
                if (m == 1 || ok) {  // first copy overlined
                    parts.insert(parts.end(), static_cast<size_t>(m), v);
                    overlined.push_back(v);
                    self(self, v - 1, weight + m * v);
                    overlined.pop_back();
                    parts.resize(parts.size() - static_cast<size_t>(m));
                }
            }
        }
    };
    rec(rec, max_weight, 0);
}

// ---------------------------------------------------------------------------
// Generators (materialized, deterministic order)

/// All anti-lecture hall compositions of weight n with lambda_1 <= max_first,
/// in ascending lexicographic order.
inline std::vector<Composition> gen_F(int max_first, int n) {
    std::vector<Composition> out;
    for_each_alhc({.max_first = max_first}, n, [&](const std::vector<int>& parts, int w) {
        if (w == n) out.push_back(Composition{parts});
    });
    return out;
}

/// The even-floor subset: all lambda in F_{max_first}(n) with every
/// floor(lambda_i / i) even.
inline std::vector<Composition> gen_Q(int max_first, int n) {
    std::vector<Composition> out;
    for_each_alhc({.max_first = max_first, .even_floors = true}, n,
                  [&](const std::vector<int>& parts, int w) {
                      if (w == n) out.push_back(Composition{parts});
                  });
    return out;
}

/// Anti-lecture hall compositions of n of length <= k (trailing zeros
/// trimmed), with no bound on the parts.
inline std::vector<Composition> gen_A_k(int k, int n) {
    std::vector<Composition> out;
    for_each_alhc({.max_length = k}, n, [&](const std::vector<int>& parts, int w) {
        if (w == n) out.push_back(Composition{parts});
    });
    return out;
}

/// All overpartitions of n; with a modulus k, non-overlined parts must not be
/// congruent to 0 or +-1 mod k (the set H_k(n)).
inline std::vector<Overpartition> gen_overpartitions(int n, std::optional<int> modulus) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, modulus,
                           [&](const std::vector<int>& parts, const std::vector<int>& over, int w) {
                               if (w == n) out.push_back(Overpartition{parts, over});
                           });
    return out;
}

inline std::vector<Partition> gen_partitions(int n, int min_part = 1, bool distinct = false) {
    std::vector<Partition> out;
    for_each_partition(n, min_part, distinct, [&](const std::vector<int>& parts, int w) {
        if (w == n) out.push_back(Partition{parts});
    });
    return out;
}

// ---------------------------------------------------------------------------
// Counting. Tallies come straight from the DFS above, one increment per
// object, so they are independent of any product-formula route.

enum class Family {
    F,               // ALHC, first part <= k
    H,               // overpartitions, non-overlined parts != 0, +-1 mod k
    Q,               // even-floor ALHC, first part <= k
    A_k,             // ALHC of length <= k
    A,               // all ALHC
    D,               // partitions into distinct parts
    P,               // partitions with every part > 1
    Overpartitions,  // unrestricted overpartitions
};

struct FamilyParams {
    int k = 0;  // meaning depends on the family; unused for A, D, P, Overpartitions
};

/// Counts of family members of each weight 0..order, by direct enumeration.
inline std::vector<std::uint64_t> family_counts(Family family, FamilyParams params, int order) {
    if (order < 0) throw std::invalid_argument("family_counts: negative order");
    std::vector<std::uint64_t> counts(static_cast<size_t>(order) + 1, 0);
    auto tally_alhc = [&](const AlhcFilter& f) {
        for_each_alhc(f, order, [&](const std::vector<int>&, int w) { ++counts[w]; });
    };
    switch (family) {
        case Family::F:
            if (params.k < 0) throw std::invalid_argument("family F: k must be >= 0");
            tally_alhc({.max_first = params.k});
            break;
        case Family::Q:
            if (params.k < 0) throw std::invalid_argument("family Q: k must be >= 0");
            tally_alhc({.max_first = params.k, .even_floors = true});
            break;
        case Family::A_k:
            if (params.k < 0) throw std::invalid_argument("family A_k: k must be >= 0");
            tally_alhc({.max_length = params.k});
            break;
        case Family::A:
            tally_alhc({});
            break;
        case Family::H:
            if (params.k < 3) throw std::invalid_argument("family H: modulus must be >= 3");
            for_each_overpartition(order, params.k,
                                   [&](const auto&, const auto&, int w) { ++counts[w]; });
            break;
        case Family::Overpartitions:
            for_each_overpartition(order, std::nullopt,
                                   [&](const auto&, const auto&, int w) { ++counts[w]; });
            break;
        case Family::D:
            for_each_partition(order, 1, true, [&](const auto&, int w) { ++counts[w]; });
            break;
        case Family::P:
            for_each_partition(order, 2, false, [&](const auto&, int w) { ++counts[w]; });
            break;
    }
    return counts;
}

inline std::uint64_t count_family(Family family, FamilyParams params, int n) {
    return family_counts(family, params, n).at(static_cast<size_t>(n));
}

/// Generating function assembled from enumeration counts; the n-th
/// coefficient equals count_family(family, params, n).
inline TruncatedSeries family_gf(Family family, FamilyParams params, int order) {
    auto counts = family_counts(family, params, order);
    std::vector<Int> c(counts.begin(), counts.end());
    return TruncatedSeries::from_coeffs(std::move(c), order);
}

// ---------------------------------------------------------------------------
// Text forms. Compositions and partitions are comma-separated integers;
// overpartitions mark an overlined value with a trailing '~', e.g. "3~,2,1".

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

inline Composition parse_composition(const std::string& text) {
    Composition c{parse_int_list(text)};
    while (!c.parts.empty() && c.parts.back() == 0) c.parts.pop_back();
    return c;
}

inline Partition parse_partition(const std::string& text) {
    Partition p{parse_int_list(text)};
    for (size_t i = 0; i + 1 < p.parts.size(); ++i)
        if (p.parts[i] < p.parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    for (int v : p.parts)
        if (v <= 0) throw std::invalid_argument("partition parts must be positive");
    return p;
}

inline Overpartition parse_overpartition(const std::string& text) {
    Overpartition op;
    if (text.empty()) return op;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        bool over = !item.empty() && item.back() == '~';
        if (over) item.pop_back();
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v <= 0) throw std::invalid_argument("bad part: '" + item + "'");
        op.parts.push_back(v);
        if (over) {
            if (std::find(op.overlined.begin(), op.overlined.end(), v) != op.overlined.end())
                throw std::invalid_argument("value overlined twice: " + std::to_string(v));
            op.overlined.push_back(v);
        }
    }
    for (size_t i = 0; i + 1 < op.parts.size(); ++i)
        if (op.parts[i] < op.parts[i + 1])
            throw std::invalid_argument("overpartition parts must be weakly decreasing");
    std::sort(op.overlined.begin(), op.overlined.end(), std::greater<>());
    return op;
}

inline std::string format_int_list(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string format_composition(const Composition& c) { return format_int_list(c.parts); }
inline std::string format_partition(const Partition& p) { return format_int_list(p.parts); }

inline std::string format_overpartition(const Overpartition& op) {
    std::string s;
    std::vector<int> pending = op.overlined;
    for (size_t i = 0; i < op.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(op.parts[i]);
        auto it = std::find(pending.begin(), pending.end(), op.parts[i]);
        if (it != pending.end()) {  // overline sits on the first occurrence
            s += '~';
            pending.erase(it);
        }
    }
    return s;
}

}  // namespace alhc
