#pragma once

// Gelfand-Kirillov dimension of the simple highest weight module L(lambda),
// read off from Robinson-Schensted shapes of the integrality classes of
// lambda + rho.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gvm/errors.hpp"
#include "gvm/exact.hpp"
#include "gvm/rootdata.hpp"
#include "gvm/tableaux.hpp"

namespace gvm {

struct ClassDecomposition {
    /// All classes, ordered by first appearance; entries keep their original order.
    std::vector<ScalarSequence> classes;
    // Type D labelling of the same classes.
    std::optional<ScalarSequence> integer_class;
    std::optional<ScalarSequence> half_class;
    std::vector<ScalarSequence> other_classes;
};

/// Entries a, b lie in one class: integral difference (A), or integral
/// difference or sum (D).
inline bool same_class(const ExactScalar& a, const ExactScalar& b, LieKind kind) {
    if (sub_is_integer(a, b)) return true;
    return kind == LieKind::D && sum_is_integer(a, b);
}

inline ClassDecomposition partition_classes(std::span<const ExactScalar> x, LieKind kind) {
    ClassDecomposition out;
    for (const ExactScalar& v : x) {
        auto it = std::find_if(out.classes.begin(), out.classes.end(),
                               [&](const ScalarSequence& c) { return same_class(c.front(), v, kind); });
        if (it == out.classes.end())
            out.classes.push_back({v});
        else
            it->push_back(v);
    }
    if (kind == LieKind::D) {
        for (const auto& c : out.classes) {
            switch (coset_class(c.front())) {
                case CosetClass::Integer: out.integer_class = c; break;
                case CosetClass::HalfInteger: out.half_class = c; break;
                case CosetClass::Other: out.other_classes.push_back(c); break;
            }
        }
    }
    return out;
}

inline ClassDecomposition partition_classes(std::span<const ExactScalar> x, const LieType& lie) {
    return partition_classes(x, lie.kind);
}

/// Folds a type-D class into a single integral-difference sequence: the
/// entries congruent to the first one, then the negated remainder in reverse.
inline ScalarSequence tilde(std::span<const ExactScalar> x) {
    ScalarSequence y;
    ScalarSequence z;
    if (x.empty()) return y;
    for (const ExactScalar& v : x) {
        if (sub_is_integer(v, x.front()))
            y.push_back(v);
        else
            z.push_back(v);
    }
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        y.push_back(-*it);
        if (y.back().generic_part() != y.front().generic_part())
            throw IncomparableScalars("tilde: entry is related to the class by neither sum nor difference");
    }
    return y;
}

inline std::int64_t max_gk(const LieType& lie) {
    const std::int64_t n = lie.n;
    return lie.kind == LieKind::A ? n * (n - 1) / 2 : n * n - n;
}

inline std::int64_t gk_dimension_raw(std::span<const ExactScalar> lpr, const LieType& lie) {
    if (static_cast<int>(lpr.size()) != lie.n)
        throw IndexOutOfRange("weight vector length does not match the rank parameter");
    const auto dec = partition_classes(lpr, lie.kind);
    std::int64_t gk = max_gk(lie);
    if (lie.kind == LieKind::A) {
        for (const auto& c : dec.classes) gk -= f_a(c);
        return gk;
    }
    if (dec.integer_class) gk -= f_d(minus_double(*dec.integer_class));
    if (dec.half_class) gk -= f_d(minus_double(*dec.half_class));
    for (const auto& c : dec.other_classes) gk -= f_a(tilde(c));
    return gk;
}

/// Single-class formula for integral lambda + rho.  For type D the entries must
/// all be integers or all be half-odd integers.
inline std::int64_t gk_dimension_integral(std::span<const ExactScalar> lpr, const LieType& lie) {
    if (static_cast<int>(lpr.size()) != lie.n)
        throw IndexOutOfRange("weight vector length does not match the rank parameter");
    if (lpr.empty()) return 0;
    if (lie.kind == LieKind::A) {
        for (const auto& v : lpr)
            if (!sub_is_integer(v, lpr.front())) throw NonIntegralWeight("weight is not integral");
        return max_gk(lie) - f_a(lpr);
    }
    const CosetClass first = coset_class(lpr.front());
    for (const auto& v : lpr)
        if (first == CosetClass::Other || coset_class(v) != first)
            throw NonIntegralWeight("weight is not integral");
    return max_gk(lie) - f_d(minus_double(lpr));
}

inline std::int64_t gk_dimension(const ParabolicSetup& setup, const ExactScalar& z1,
                                 const ExactScalar& z2) {
    return gk_dimension_raw(lambda_plus_rho(setup, z1, z2), setup.lie());
}

}  // namespace gvm
