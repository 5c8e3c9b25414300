#pragma once

// Reducible-point diagrams in the (z1, z2) plane.  z1 runs horizontally, z2
// vertically.  Rational lattice points are plotted; points with a symbol
// part are summarized in a legend.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gvm/harness.hpp"
#include "gvm/scalar_text.hpp"

namespace gvm {

enum class DiagramFormat { Svg, Ascii };

/// A maximal family of lattice points that are all reducible.
struct Branch {
    enum class Kind { Horizontal, Vertical, AntiDiagonal } kind;
    Rational value;  // z2 for horizontal, z1 for vertical, z1 + z2 for anti-diagonal
    Rational from;   // z1 extent of the drawn segment
    Rational to;
};

struct LatticeView {
    std::vector<Rational> xs;  // distinct z1 values, ascending
    std::vector<Rational> ys;  // distinct z2 values, ascending
    std::map<std::pair<Rational, Rational>, bool> reducible;
    std::size_t symbolic_points = 0;
    std::size_t symbolic_reducible = 0;
    std::vector<std::string> symbolic_examples;
};

/// Splits a report into its rational lattice and symbolic points.  The rational
/// points must form a full cartesian product with uniform spacing on each axis.
inline LatticeView lattice_view(const SweepReport& report) {
    LatticeView view;
    std::set<Rational> xs;
    std::set<Rational> ys;
    for (const auto& v : report.rows) {
        if (!v.z1.is_rational() || !v.z2.is_rational()) {
            ++view.symbolic_points;
            if (v.reducible_oracle) {
                ++view.symbolic_reducible;
                if (view.symbolic_examples.size() < 8)
                    view.symbolic_examples.push_back("(" + format_scalar(v.z1) + ", " + format_scalar(v.z2) + ")");
            }
            continue;
        }
        xs.insert(v.z1.rational_part());
        ys.insert(v.z2.rational_part());
        view.reducible[{v.z1.rational_part(), v.z2.rational_part()}] = v.reducible_oracle;
    }
    view.xs.assign(xs.begin(), xs.end());
    view.ys.assign(ys.begin(), ys.end());

    // Off-lattice rationals such as 1/3 are dropped: keep the largest residue
    // class modulo the most common spacing.
    auto uniform_core = [](std::vector<Rational>& axis) {
        if (axis.size() < 3) return;
        std::map<Rational, int> steps;
        for (std::size_t i = 1; i < axis.size(); ++i) ++steps[axis[i] - axis[i - 1]];
        const Rational step =
            std::max_element(steps.begin(), steps.end(), [](const auto& l, const auto& r) {
                return l.second < r.second;
            })->first;
        std::vector<Rational> best;
        for (const auto& base : axis) {
            std::vector<Rational> kept;
            for (const auto& v : axis)
                if (is_integral((v - base) / step)) kept.push_back(v);
            if (kept.size() > best.size()) best = std::move(kept);
        }
        axis = std::move(best);
    };
    uniform_core(view.xs);
    uniform_core(view.ys);
    for (const auto& x : view.xs)
        for (const auto& y : view.ys)
            if (!view.reducible.count({x, y}))
                throw UnsupportedGrid("rational points do not form a cartesian lattice");
    return view;
}

inline std::vector<Branch> detect_branches(const LatticeView& view) {
    std::vector<Branch> out;
    if (view.xs.size() < 2 || view.ys.size() < 2) return out;
    auto red = [&](const Rational& x, const Rational& y) { return view.reducible.at({x, y}); };

    for (const auto& y : view.ys)
        if (std::all_of(view.xs.begin(), view.xs.end(), [&](const Rational& x) { return red(x, y); }))
            out.push_back({Branch::Kind::Horizontal, y, view.xs.front(), view.xs.back()});
    for (const auto& x : view.xs)
        if (std::all_of(view.ys.begin(), view.ys.end(), [&](const Rational& y) { return red(x, y); }))
            out.push_back({Branch::Kind::Vertical, x, view.ys.front(), view.ys.back()});

    std::map<Rational, std::vector<Rational>> by_sum;  // z1 + z2 -> z1 values on that line
    for (const auto& x : view.xs)
        for (const auto& y : view.ys) by_sum[x + y].push_back(x);
    for (const auto& [sum, line] : by_sum) {
        if (line.size() < 3) continue;
        if (std::all_of(line.begin(), line.end(), [&](const Rational& x) { return red(x, sum - x); }))
            out.push_back({Branch::Kind::AntiDiagonal, sum, line.front(), line.back()});
    }
    return out;
}

namespace detail {

inline std::string num(const Rational& r) {
    if (is_integral(r)) return std::to_string(r.numerator());
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    return os.str();
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

inline constexpr int kUnit = 40;  // user units per lattice unit
inline constexpr int kMargin = 40;

inline std::string render_svg(const SweepReport& report) {
    const LatticeView view = lattice_view(report);
    const auto branches = detect_branches(view);
    const std::string title = std::string(to_string(report.setup.lie().kind)) + " n=" +
                              std::to_string(report.setup.n()) + " (p,q)=(" +
                              std::to_string(report.setup.p()) + "," + std::to_string(report.setup.q()) + ")";

    const Rational x0 = view.xs.empty() ? Rational(0) : view.xs.front();
    const Rational x1 = view.xs.empty() ? Rational(0) : view.xs.back();
    const Rational y0 = view.ys.empty() ? Rational(0) : view.ys.front();
    const Rational y1 = view.ys.empty() ? Rational(0) : view.ys.back();
    auto px = [&](const Rational& x) { return detail::num((x - x0) * kUnit + kMargin); };
    auto py = [&](const Rational& y) { return detail::num((y1 - y) * kUnit + kMargin); };
    const int legend_lines = 2 + static_cast<int>(view.symbolic_examples.size());
    const Rational width = (x1 - x0) * kUnit + 2 * kMargin;
    const Rational plot_height = (y1 - y0) * kUnit + 2 * kMargin;
    const Rational height = plot_height + 16 * legend_lines + 8;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(width) << "\" height=\""
       << detail::num(height) << "\" viewBox=\"0 0 " << detail::num(width) << " " << detail::num(height)
       << "\">\n";
    os << "<title>" << detail::escape(title) << "</title>\n";

    // Axes through the origin, clamped to the plotted window.
    os << "<g class=\"axes\" stroke=\"#888\" stroke-width=\"1\">\n";
    const Rational ax = std::clamp(Rational(0), x0, x1);
    const Rational ay = std::clamp(Rational(0), y0, y1);
    os << "<line class=\"axis\" x1=\"" << px(x0) << "\" y1=\"" << py(ay) << "\" x2=\"" << px(x1) << "\" y2=\""
       << py(ay) << "\"/>\n";
    os << "<line class=\"axis\" x1=\"" << px(ax) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(ax) << "\" y2=\""
       << py(y1) << "\"/>\n";
    os << "</g>\n";

    os << "<g class=\"branches\" stroke=\"black\" stroke-width=\"2\">\n";
    for (const auto& b : branches) {
        switch (b.kind) {
            case Branch::Kind::Horizontal:
                os << "<line class=\"branch horizontal\" data-z2=\"" << format_rational(b.value) << "\" x1=\""
                   << px(b.from) << "\" y1=\"" << py(b.value) << "\" x2=\"" << px(b.to) << "\" y2=\""
                   << py(b.value) << "\"/>\n";
                break;
            case Branch::Kind::Vertical:
                os << "<line class=\"branch vertical\" data-z1=\"" << format_rational(b.value) << "\" x1=\""
                   << px(b.value) << "\" y1=\"" << py(b.from) << "\" x2=\"" << px(b.value) << "\" y2=\""
                   << py(b.to) << "\"/>\n";
                break;
            case Branch::Kind::AntiDiagonal:
                os << "<line class=\"branch antidiagonal\" data-sum=\"" << format_rational(b.value)
                   << "\" x1=\"" << px(b.from) << "\" y1=\"" << py(b.value - b.from) << "\" x2=\""
                   << px(b.to) << "\" y2=\"" << py(b.value - b.to) << "\"/>\n";
                break;
        }
    }
    os << "</g>\n";

    os << "<g class=\"points\" fill=\"black\">\n";
    for (const auto& x : view.xs)
        for (const auto& y : view.ys)
            if (view.reducible.at({x, y}))
                os << "<circle class=\"" << (x == y ? "reducible diagonal" : "reducible") << "\" data-z1=\""
                   << format_rational(x) << "\" data-z2=\"" << format_rational(y) << "\" cx=\"" << px(x)
                   << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
    os << "</g>\n";

    os << "<g class=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
    Rational ly = plot_height + 12;
    os << "<text x=\"8\" y=\"" << detail::num(ly) << "\">" << detail::escape(title) << "</text>\n";
    ly += 16;
    os << "<text x=\"8\" y=\"" << detail::num(ly) << "\">generic-offset points: " << view.symbolic_points
       << " evaluated, " << view.symbolic_reducible << " reducible</text>\n";
    for (const auto& e : view.symbolic_examples) {
        ly += 16;
        os << "<text x=\"8\" y=\"" << detail::num(ly) << "\">reducible " << detail::escape(e) << "</text>\n";
    }
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

/// Character grid, z2 descending down the rows: R reducible, . irreducible.
inline std::string render_ascii(const SweepReport& report) {
    const LatticeView view = lattice_view(report);
    std::ostringstream os;
    os << to_string(report.setup.lie().kind) << " n=" << report.setup.n() << " (p,q)=(" << report.setup.p()
       << "," << report.setup.q() << ")\n";
    for (auto y = view.ys.rbegin(); y != view.ys.rend(); ++y) {
        std::string label = format_rational(*y);
        os << std::string(label.size() < 6 ? 6 - label.size() : 0, ' ') << label << " |";
        for (const auto& x : view.xs) os << ' ' << (view.reducible.at({x, *y}) ? 'R' : '.');
        os << '\n';
    }
    if (!view.xs.empty())
        os << "z1: " << format_rational(view.xs.front()) << " .. " << format_rational(view.xs.back()) << "\n";
    os << "generic-offset points: " << view.symbolic_points << " evaluated, " << view.symbolic_reducible
       << " reducible\n";
    return os.str();
}

inline std::string render_diagram(const SweepReport& report, DiagramFormat format) {
    return format == DiagramFormat::Svg ? render_svg(report) : render_ascii(report);
}

}  // namespace gvm
