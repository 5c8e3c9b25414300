#pragma once

// Reducibility of scalar generalized Verma modules M_I(z1 xi_p + z2 xi_q).
//
// The oracle compares GKdim L(lambda) with dim u: the module is irreducible
// exactly when they agree.  The closed-form criteria below are evaluated
// independently of any tableau computation and cross-checked against it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gvm/errors.hpp"
#include "gvm/exact.hpp"
#include "gvm/gk.hpp"
#include "gvm/rootdata.hpp"
#include "gvm/tableaux.hpp"

namespace gvm {

struct Verdict {
    ParabolicSetup setup;
    ExactScalar z1;
    ExactScalar z2;
    std::int64_t gk = 0;
    std::int64_t dim_u = 0;
    bool reducible_oracle = false;
    std::optional<bool> reducible_criterion;
    std::optional<bool> agree;
};

/// z lies in start + step * Z_{>=0}.  Never true for a scalar with a symbol part.
inline bool in_progression(const ExactScalar& z, const Rational& start,
                           const Rational& step = 1) {
    if (!z.is_rational()) return false;
    const Rational offset = (z.rational_part() - start) / step;
    return is_integral(offset) && offset.numerator() >= 0;
}

inline bool is_half_odd_scalar(const ExactScalar& z) {
    return coset_class(z) == CosetClass::HalfInteger;
}

inline void require_kind(const ParabolicSetup& setup, LieKind kind) {
    if (setup.lie().kind != kind)
        throw WrongLieType(std::string("criterion applies to type ") + to_string(kind) + " only");
}

inline Verdict reducible_oracle(const ParabolicSetup& setup, const ExactScalar& z1,
                                const ExactScalar& z2) {
    Verdict v{setup, z1, z2, 0, 0, false, std::nullopt, std::nullopt};
    v.gk = gk_dimension(setup, z1, z2);
    v.dim_u = dim_nilradical(setup);
    v.reducible_oracle = v.gk < v.dim_u;
    return v;
}

// ---------------------------------------------------------------------------
// Type A

/// Maximal parabolic helper: M_I(z xi_p) for sl(n) is reducible iff
/// z in 1 - min{p, n-p} + Z_{>=0}.
inline bool single_weight_criterion_A(int n, int p, const ExactScalar& z) {
    if (p < 1 || p > n - 1) throw IndexOutOfRange("p must lie in 1..n-1");
    return in_progression(z, 1 - std::min(p, n - p));
}

/// Diagonal case z1 = z2 = z.
inline bool criterion_A_equal(const ParabolicSetup& setup, const ExactScalar& z) {
    require_kind(setup, LieKind::A);
    const int k = setup.k();
    const int m = setup.m();
    const int h = setup.h();

    if (!z.is_integer()) {
        // Open at the left endpoint: z = -(k+m)/2 itself is irreducible.
        return m >= 1 && is_half_odd_scalar(z) && z.rational_part() > Rational(-(k + m), 2);
    }

    std::int64_t first;
    if (m >= k - 1) {
        const std::int64_t half_m = (k % 2 == 0) ? ceil_of(Rational(m, 2)) : floor_of(Rational(m, 2));
        first = -half_m - floor_of(Rational(k - 1, 2));
    } else if (m > 0) {
        if (h < k)
            first = -std::max<std::int64_t>(ceil_of(Rational(k + m, 2)), h) + 1;
        else
            first = -k + 1;
    } else {
        first = -std::min(h, k) + 1;
    }
    return z.rational_part() >= Rational(first);
}

/// Off-diagonal case, consolidated form.
inline bool criterion_A_unequal(const ParabolicSetup& setup, const ExactScalar& z1,
                                const ExactScalar& z2) {
    require_kind(setup, LieKind::A);
    if (z1 == z2) throw EqualParameters("criterion_A_unequal requires z1 != z2");
    const int n = setup.n();
    const int p = setup.p();
    const int q = setup.q();
    if (n - q == 0) return in_progression(z1, 1 - std::min(p, q - p));
    return in_progression(z2, 1 - std::min(q - p, n - q)) ||
           in_progression(z1, 1 - std::min(p, q - p)) ||
           in_progression(z1 + z2, -q + p - std::min(p, n - q) + 1);
}

/// Off-diagonal case, branch by branch on the integrality of z1 and z2.
inline bool criterion_A_unequal_fine(const ParabolicSetup& setup, const ExactScalar& z1,
                                     const ExactScalar& z2) {
    require_kind(setup, LieKind::A);
    if (z1 == z2) throw EqualParameters("criterion_A_unequal_fine requires z1 != z2");
    const int n = setup.n();
    const int p = setup.p();
    const int q = setup.q();
    const int k = setup.k();
    const int m = setup.m();
    if (n - q == 0) return in_progression(z1, 1 - std::min(p, n - p));

    const bool int1 = z1.is_integer();
    const bool int2 = z2.is_integer();
    if (!int1 && !int2) return in_progression(z1 + z2, -k - m + 1);
    if (!int1) return in_progression(z2, 1 - std::min(k, n - q));
    if (!int2) return in_progression(z1, 1 - std::min(p, k));

    const Rational& a = z1.rational_part();
    const Rational& b = z2.rational_part();
    if (b > Rational(-1) || a > Rational(-1)) return true;
    return a + b > Rational(-k - m) || a > Rational(-std::min(k, p)) ||
           b > Rational(-std::min(k, n - q));
}

/// P(lambda + rho) has the shape of the diagram with columns {p, q-p, n-q}.
inline bool shape_maximality_test_A(const ParabolicSetup& setup, std::span<const ExactScalar> lpr) {
    require_kind(setup, LieKind::A);
    for (const auto& v : lpr)
        if (!sub_is_integer(v, lpr.front())) throw NonIntegralWeight("weight is not integral");
    std::vector<int> columns = rs_shape(lpr).conjugate().rows;
    std::vector<int> expected;
    for (int c : {setup.p(), setup.q() - setup.p(), setup.n() - setup.q()})
        if (c > 0) expected.push_back(c);
    std::sort(columns.rbegin(), columns.rend());
    std::sort(expected.rbegin(), expected.rend());
    return columns == expected;
}

// ---------------------------------------------------------------------------
// Type D

inline bool criterion_D(const ParabolicSetup& setup, const ExactScalar& z1, const ExactScalar& z2) {
    require_kind(setup, LieKind::D);
    const int n = setup.n();
    const bool odd = n % 2 == 1;

    if (setup.p() == 1) {
        if (in_progression(z1, 0)) return true;
        if ((!z1.is_integer() && !z2.is_integer()) || z1 == ExactScalar(-1))
            if (in_progression(z1 + z2, -n + 2)) return true;
        if (z1 == z2 && !z1.is_integer() &&
            in_progression(z1, Rational(floor_of(Rational(-n, 2))) + Rational(3, 2)))
            return true;
        return in_progression(z2, odd ? -n + 3 : -n + 4);
    }

    if (in_progression(z1, 0) || in_progression(z2, 0)) return true;
    if (z1 == z2 &&
        in_progression(z1, odd ? Rational(-n + 1, 2) : Rational(-n + 2, 2), Rational(1, 2)))
        return true;
    return in_progression(z1 + z2, odd ? -n + 1 : -n + 2);
}

/// Shape-based irreducibility diagnostic for type D: true when some class of
/// lambda + rho has one of the four near-column shapes.  Only the direction
/// "irreducible implies true" is expected to hold.
inline bool shape_irreducibility_diagnostic_D(const ParabolicSetup& setup, const ExactScalar& z1,
                                              const ExactScalar& z2) {
    require_kind(setup, LieKind::D);
    const int n = setup.n();
    std::vector<int> a(n - 1, 1);
    a.front() = 2;
    const std::vector<int> b(n - 1, 1);
    const auto dec = partition_classes(lambda_plus_rho(setup, z1, z2), LieKind::D);
    auto matches = [&](const std::vector<int>& v) { return v == a || v == b; };
    for (const auto* c : {&dec.integer_class, &dec.half_class}) {
        if (!*c) continue;
        // Trailing rows without even boxes are not part of the compared shape.
        std::vector<int> ev = even_odd_counts(rs_shape(minus_double(**c))).ev;
        while (!ev.empty() && ev.back() == 0) ev.pop_back();
        if (matches(ev)) return true;
    }
    for (const auto& y : dec.other_classes)
        if (matches(rs_shape(tilde(y)).rows)) return true;
    return false;
}

// ---------------------------------------------------------------------------

/// The closed-form answer matching the setup's type and the diagonal split.
inline bool reducible_criterion(const ParabolicSetup& setup, const ExactScalar& z1,
                                const ExactScalar& z2) {
    if (setup.lie().kind == LieKind::D) return criterion_D(setup, z1, z2);
    return z1 == z2 ? criterion_A_equal(setup, z1) : criterion_A_unequal(setup, z1, z2);
}

/// Oracle plus criterion, with the agreement flag filled in.
inline Verdict evaluate(const ParabolicSetup& setup, const ExactScalar& z1, const ExactScalar& z2) {
    Verdict v = reducible_oracle(setup, z1, z2);
    v.reducible_criterion = reducible_criterion(setup, z1, z2);
    v.agree = *v.reducible_criterion == v.reducible_oracle;
    return v;
}

}  // namespace gvm
