#pragma once

// Schensted row insertion over exact scalars and the shape statistics built
// on top of it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gvm/exact.hpp"

namespace gvm {

using ScalarSequence = std::vector<ExactScalar>;

/// A partition: weakly decreasing positive row lengths.
struct Shape {
    std::vector<int> rows;

    int size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

    /// Column lengths, i.e. the conjugate partition.
    Shape conjugate() const {
        Shape out;
        if (rows.empty()) return out;
        out.rows.assign(rows.front(), 0);
        for (int r : rows)
            for (int c = 0; c < r; ++c) ++out.rows[c];
        return out;
    }

    friend bool operator==(const Shape&, const Shape&) = default;
};

using Tableau = std::vector<ScalarSequence>;

namespace detail {

/// Row insertion on plain rationals; returns rows of indices into `values`.
inline std::vector<std::vector<std::size_t>> insert_rows(std::span<const Rational> values) {
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        std::size_t carried = idx;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({carried});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), carried,
                                       [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            if (it == row.end()) {
                row.push_back(carried);
                break;
            }
            std::swap(*it, carried);
        }
    }
    return rows;
}

/// Rational parts of x after checking that every entry shares one symbol part.
inline std::vector<Rational> comparable_values(std::span<const ExactScalar> x) {
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const ExactScalar& v : x) {
        if (v.generic_part() != x.front().generic_part())
            throw IncomparableScalars("sequence mixes scalars with different generic parts");
        out.push_back(v.rational_part());
    }
    return out;
}

}  // namespace detail

/// Full insertion tableau.  Inserting v into a row bumps the leftmost entry
/// strictly greater than v, so rows are weakly increasing.
inline Tableau rs_insertion(std::span<const ExactScalar> x) {
    const auto values = detail::comparable_values(x);
    Tableau t;
    for (const auto& row : detail::insert_rows(values)) {
        ScalarSequence& out = t.emplace_back();
        for (std::size_t i : row) out.push_back(x[i]);
    }
    return t;
}

inline Shape rs_shape(std::span<const ExactScalar> x) {
    const auto values = detail::comparable_values(x);
    Shape s;
    for (const auto& row : detail::insert_rows(values)) s.rows.push_back(static_cast<int>(row.size()));
    return s;
}

/// x followed by the reversed negation of x.
inline ScalarSequence minus_double(std::span<const ExactScalar> x) {
    ScalarSequence out(x.begin(), x.end());
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
    return out;
}

struct EvenOddCounts {
    std::vector<int> ev;
    std::vector<int> odd;
};

/// Box (k, l) is even when k + l is even; rows and columns count from 1.
inline EvenOddCounts even_odd_counts(const Shape& s) {
    EvenOddCounts out;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const int p = s.rows[i];
        const bool odd_row = (i % 2 == 0);  // row index i + 1
        const int ev = odd_row ? (p + 1) / 2 : p / 2;
        out.ev.push_back(ev);
        out.odd.push_back(p - ev);
    }
    return out;
}

/// sum (k - 1) p_k over the rows of rs_shape(x).
inline std::int64_t f_a(std::span<const ExactScalar> x) {
    const Shape s = rs_shape(x);
    std::int64_t total = 0;
    for (std::size_t k = 0; k < s.rows.size(); ++k) total += static_cast<std::int64_t>(k) * s.rows[k];
    return total;
}

/// sum (k - 1) p_k^ev over the rows of rs_shape(x).
inline std::int64_t f_d(std::span<const ExactScalar> x) {
    const auto ev = even_odd_counts(rs_shape(x)).ev;
    std::int64_t total = 0;
    for (std::size_t k = 0; k < ev.size(); ++k) total += static_cast<std::int64_t>(k) * ev[k];
    return total;
}

}  // namespace gvm
