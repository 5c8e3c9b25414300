#pragma once

// Parameter grids, bulk sweeps, criterion-versus-oracle verification and the
// report formats (CSV, JSON) built on them.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

#include "gvm/exact.hpp"
#include "gvm/rootdata.hpp"
#include "gvm/scalar_text.hpp"
#include "gvm/verdict.hpp"

namespace gvm {

inline const ExactScalar& tau() {
    static const ExactScalar t = ExactScalar::symbol("tau");
    return t;
}

inline const ExactScalar& sigma() {
    static const ExactScalar s = ExactScalar::symbol("sigma");
    return s;
}

enum class Pairing { Cartesian, Diagonal };

struct GridPoint {
    ExactScalar z1;
    ExactScalar z2;
};

/// Values on each axis combined by `pairing`, followed by explicit extra pairs.
struct ParameterGrid {
    std::vector<ExactScalar> z1_values;
    std::vector<ExactScalar> z2_values;
    Pairing pairing = Pairing::Cartesian;
    std::vector<GridPoint> extra_points;

    std::vector<GridPoint> points() const {
        std::vector<GridPoint> out;
        if (pairing == Pairing::Diagonal) {
            if (z1_values.size() != z2_values.size())
                throw UnsupportedGrid("diagonal pairing needs equal-length value lists");
            for (std::size_t i = 0; i < z1_values.size(); ++i) out.push_back({z1_values[i], z2_values[i]});
        } else {
            out.reserve(z1_values.size() * z2_values.size() + extra_points.size());
            for (const auto& a : z1_values)
                for (const auto& b : z2_values) out.push_back({a, b});
        }
        out.insert(out.end(), extra_points.begin(), extra_points.end());
        return out;
    }

    std::size_t size() const {
        const std::size_t base = pairing == Pairing::Diagonal ? z1_values.size()
                                                              : z1_values.size() * z2_values.size();
        return base + extra_points.size();
    }
};

/// lo, lo + step, ..., up to and including hi.
inline std::vector<ExactScalar> rational_range(const Rational& lo, const Rational& hi, const Rational& step) {
    std::vector<ExactScalar> out;
    for (Rational v = lo; v <= hi; v += step) out.emplace_back(v);
    return out;
}

/// Half-integer lattice on [-(n+2), 3] per axis, plus 1/3, tau and sigma; the
/// coupled pairs (a+tau, b-tau) are appended for every lattice a, b.
inline ParameterGrid standard_grid(const ParabolicSetup& setup) {
    ParameterGrid g;
    const auto lattice = rational_range(Rational(-(setup.n() + 2)), Rational(3), Rational(1, 2));
    g.z1_values = lattice;
    g.z1_values.emplace_back(Rational(1, 3));
    g.z1_values.push_back(tau());
    g.z1_values.push_back(sigma());
    g.z2_values = g.z1_values;
    for (const auto& a : lattice)
        for (const auto& b : lattice) g.extra_points.push_back({a + tau(), b - tau()});
    return g;
}

/// The z1 = z2 sub-grid of the standard grid.
inline ParameterGrid diagonal_grid(const ParabolicSetup& setup) {
    const auto full = standard_grid(setup);
    return {full.z1_values, full.z1_values, Pairing::Diagonal, {}};
}

using Criterion = std::function<bool(const ParabolicSetup&, const ExactScalar&, const ExactScalar&)>;

struct SweepSummary {
    std::size_t reducible = 0;
    std::size_t irreducible = 0;
    std::size_t mismatch = 0;
};

struct PointError {
    std::size_t index;
    std::string message;
};

/// Rows in grid order.  A point whose evaluation throws is listed under
/// `errors` instead of `rows`.
struct SweepReport {
    ParabolicSetup setup;
    std::vector<Verdict> rows;
    std::vector<PointError> errors;
    SweepSummary summary;
};

struct SweepOptions {
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Replaces the built-in closed-form criterion when set.
    Criterion criterion;
};

inline SweepReport sweep(const ParabolicSetup& setup, const ParameterGrid& grid,
                         const SweepOptions& options = {}) {
    const auto points = grid.points();
    std::vector<std::optional<Verdict>> slots(points.size());
    std::vector<std::string> failures(points.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                const auto& [z1, z2] = points[i];
                Verdict v = reducible_oracle(setup, z1, z2);
                v.reducible_criterion = options.criterion ? options.criterion(setup, z1, z2)
                                                          : reducible_criterion(setup, z1, z2);
                v.agree = *v.reducible_criterion == v.reducible_oracle;
                slots[i] = std::move(v);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size())));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    SweepReport report{setup, {}, {}, {}};
    report.rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!slots[i]) {
            report.errors.push_back({i, failures[i]});
            continue;
        }
        const Verdict& v = *slots[i];
        (v.reducible_oracle ? report.summary.reducible : report.summary.irreducible)++;
        if (v.agree && !*v.agree) ++report.summary.mismatch;
        report.rows.push_back(v);
    }
    return report;
}

struct MismatchReport {
    std::size_t setups_checked = 0;
    std::size_t points_checked = 0;
    std::vector<Verdict> mismatches;
    std::vector<PointError> errors;

    bool verified() const { return mismatches.empty() && errors.empty(); }
};

/// Sweeps the standard grid of every valid setup of `kind` with rank
/// parameter up to n_max and collects each disagreement.
inline MismatchReport verify_family(LieKind kind, int n_max, const SweepOptions& options = {}) {
    MismatchReport out;
    for (int n = kind == LieKind::A ? 3 : 4; n <= n_max; ++n) {
        for (const auto& setup : all_setups(kind, n)) {
            const auto report = sweep(setup, standard_grid(setup), options);
            ++out.setups_checked;
            out.points_checked += report.rows.size() + report.errors.size();
            for (const auto& v : report.rows)
                if (!*v.agree) out.mismatches.push_back(v);
            out.errors.insert(out.errors.end(), report.errors.begin(), report.errors.end());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline const char* csv_header() { return "type,n,p,q,z1,z2,gk,dim_u,reducible,criterion,agree"; }

inline std::string optional_bool(const std::optional<bool>& b) {
    return b ? (*b ? "true" : "false") : "";
}

inline std::string csv_row(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.setup.lie().kind) << ',' << v.setup.n() << ',' << v.setup.p() << ','
       << v.setup.q() << ',' << format_scalar(v.z1) << ',' << format_scalar(v.z2) << ',' << v.gk
       << ',' << v.dim_u << ',' << (v.reducible_oracle ? "true" : "false") << ','
       << optional_bool(v.reducible_criterion) << ',' << optional_bool(v.agree);
    return os.str();
}

inline std::string to_csv(const SweepReport& report) {
    std::string out = std::string(csv_header()) + "\n";
    for (const auto& v : report.rows) out += csv_row(v) + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["type"] = to_string(v.setup.lie().kind);
    j["n"] = v.setup.n();
    j["p"] = v.setup.p();
    j["q"] = v.setup.q();
    j["z1"] = format_scalar(v.z1);
    j["z2"] = format_scalar(v.z2);
    j["gk"] = v.gk;
    j["dim_u"] = v.dim_u;
    j["reducible"] = v.reducible_oracle;
    j["criterion"] = v.reducible_criterion ? nlohmann::ordered_json(*v.reducible_criterion) : nullptr;
    j["agree"] = v.agree ? nlohmann::ordered_json(*v.agree) : nullptr;
    return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : report.rows) j["verdicts"].push_back(to_json(v));
    nlohmann::ordered_json s;
    s["points"] = report.rows.size() + report.errors.size();
    s["reducible"] = report.summary.reducible;
    s["irreducible"] = report.summary.irreducible;
    s["mismatch"] = report.summary.mismatch;
    s["errors"] = report.errors.size();
    j["summary"] = s;
    return j;
}

}  // namespace gvm
