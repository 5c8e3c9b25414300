#pragma once

// Root data for A_{n-1} = sl(n) and D_n = so(2n) in the standard e_1..e_n
// coordinates, and the two-step nilpotent non-maximal parabolics they carry.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gvm/errors.hpp"
#include "gvm/exact.hpp"

namespace gvm {

enum class LieKind { A, D };

inline const char* to_string(LieKind k) { return k == LieKind::A ? "A" : "D"; }

/// sl(n) for kind A, so(2n) for kind D.  Weight vectors have length n either way.
struct LieType {
    LieKind kind;
    int n;

    LieType(LieKind kind_, int n_) : kind(kind_), n(n_) {
        if (kind == LieKind::A && n < 2)
            throw InvalidSetup("type A requires n >= 2");
        if (kind == LieKind::D && n < 4)
            throw InvalidSetup("type D requires n >= 4");
    }

    /// Number of simple roots.
    int rank() const { return kind == LieKind::A ? n - 1 : n; }

    friend bool operator==(const LieType&, const LieType&) = default;
};

using WeightVector = std::vector<ExactScalar>;

inline WeightVector rho(const LieType& lie) {
    WeightVector out;
    out.reserve(lie.n);
    for (int i = 0; i < lie.n; ++i) {
        if (lie.kind == LieKind::A)
            out.emplace_back(Rational(lie.n - 1 - 2 * i, 2));
        else
            out.emplace_back(lie.n - 1 - i);
    }
    return out;
}

inline WeightVector fundamental_weight(const LieType& lie, int i) {
    if (i < 1 || i > lie.rank())
        throw IndexOutOfRange("fundamental weight index " + std::to_string(i) +
                              " outside 1.." + std::to_string(lie.rank()));
    const int n = lie.n;
    WeightVector out(n);
    if (lie.kind == LieKind::A) {
        for (int j = 0; j < n; ++j)
            out[j] = j < i ? Rational(n - i, n) : Rational(-i, n);
        return out;
    }
    if (i <= n - 2) {
        for (int j = 0; j < i; ++j) out[j] = 1;
        return out;
    }
    for (int j = 0; j < n; ++j) out[j] = Rational(1, 2);
    if (i == n - 1) out[n - 1] = Rational(-1, 2);
    return out;
}

/// Multiplicity of the simple root alpha_i in the highest root.
inline int highest_root_multiplicity(const LieType& lie, int i) {
    if (i < 1 || i > lie.rank())
        throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range");
    if (lie.kind == LieKind::A) return 1;
    return (i == 1 || i >= lie.n - 1) ? 1 : 2;
}

struct NilpotencyReport {
    int step;
    bool maximal;
};

/// Nilpotency step of the parabolic obtained by removing `removed` from the
/// simple roots: the summed highest-root multiplicities.
inline NilpotencyReport classify_parabolic(const LieType& lie, const std::set<int>& removed) {
    if (removed.empty()) throw IndexOutOfRange("no simple roots removed");
    int step = 0;
    for (int i : removed) step += highest_root_multiplicity(lie, i);
    return {step, removed.size() == 1};
}

/// A two-step nilpotent, non-maximal parabolic given by the removed pair (p, q).
class ParabolicSetup {
public:
    ParabolicSetup(LieType lie, int p, int q) : lie_(lie), p_(p), q_(q) {
        if (p >= q)
            throw InvalidSetup("parabolic requires p < q");
        const auto report = classify_parabolic(lie, {p, q});
        if (report.step != 2 || report.maximal)
            throw InvalidSetup("removing {" + std::to_string(p) + "," + std::to_string(q) +
                                   "} gives a " + std::to_string(report.step) +
                                   "-step nilpotent radical",
                               report.step);
        if (lie.kind == LieKind::D) {
            const int n = lie.n;
            const bool ok = (p == 1 && (q == n - 1 || q == n)) || (p == n - 1 && q == n);
            if (!ok) throw InvalidSetup("unsupported type D pair", report.step);
        }
    }

    const LieType& lie() const noexcept { return lie_; }
    int n() const noexcept { return lie_.n; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int k() const noexcept { return q_ - p_; }
    int m() const noexcept { return std::min(p_, n() - q_); }
    int h() const noexcept { return std::max(p_, n() - q_); }

    int dim_u() const {
        const int n = lie_.n;
        if (lie_.kind == LieKind::A) return q_ * (n - q_) + p_ * (q_ - p_);
        return (n * n + n - 2) / 2;
    }

    friend bool operator==(const ParabolicSetup&, const ParabolicSetup&) = default;

private:
    LieType lie_;
    int p_;
    int q_;
};

inline int dim_nilradical(const ParabolicSetup& setup) { return setup.dim_u(); }

/// Every valid setup of the given kind with rank parameter n.
inline std::vector<ParabolicSetup> all_setups(LieKind kind, int n) {
    std::vector<ParabolicSetup> out;
    const LieType lie(kind, n);
    if (kind == LieKind::A) {
        for (int p = 1; p < n - 1; ++p)
            for (int q = p + 1; q <= n - 1; ++q) out.emplace_back(lie, p, q);
    } else {
        out.emplace_back(lie, 1, n - 1);
        out.emplace_back(lie, 1, n);
        out.emplace_back(lie, n - 1, n);
    }
    return out;
}

/// z1 * xi_p + z2 * xi_q + rho.
inline WeightVector lambda_plus_rho(const ParabolicSetup& setup, const ExactScalar& z1,
                                    const ExactScalar& z2) {
    WeightVector out = rho(setup.lie());
    const WeightVector xp = fundamental_weight(setup.lie(), setup.p());
    const WeightVector xq = fundamental_weight(setup.lie(), setup.q());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] += z1 * xp[j].rational_part();
        out[j] += z2 * xq[j].rational_part();
    }
    return out;
}

}  // namespace gvm
