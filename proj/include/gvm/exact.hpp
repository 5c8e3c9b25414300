#pragma once

// Exact scalars: a rational number plus a rational combination of named
// formal symbols.  A symbol stands for a complex parameter that satisfies no
// rational relation, so the only observable facts about a scalar are which
// integrality cosets it meets and, inside one fiber of equal symbol part, the
// order of the rational parts.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "gvm/errors.hpp"

namespace gvm {

using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline bool is_half_odd(const Rational& r) { return r.denominator() == 2; }

/// Largest integer not exceeding r.
inline std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

class ExactScalar {
public:
    using GenericPart = std::map<std::string, Rational>;

    ExactScalar() = default;
    ExactScalar(std::int64_t value) : rational_(value) {}  // NOLINT: implicit by intent
    ExactScalar(Rational value) : rational_(value) {}      // NOLINT
    ExactScalar(Rational value, GenericPart generic)
        : rational_(value), generic_(std::move(generic)) {
        prune();
    }

    /// The scalar `coefficient * name`.
    static ExactScalar symbol(const std::string& name, Rational coefficient = 1) {
        return ExactScalar(0, GenericPart{{name, coefficient}});
    }

    const Rational& rational_part() const noexcept { return rational_; }
    const GenericPart& generic_part() const noexcept { return generic_; }

    bool is_rational() const noexcept { return generic_.empty(); }
    bool is_integer() const noexcept { return is_rational() && is_integral(rational_); }

    ExactScalar operator-() const {
        ExactScalar r = *this;
        r.rational_ = -r.rational_;
        for (auto& [name, c] : r.generic_) c = -c;
        return r;
    }

    ExactScalar& operator+=(const ExactScalar& o) {
        rational_ += o.rational_;
        for (const auto& [name, c] : o.generic_) generic_[name] += c;
        prune();
        return *this;
    }

    ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }

    ExactScalar& operator*=(const Rational& k) {
        rational_ *= k;
        for (auto& [name, c] : generic_) c *= k;
        prune();
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const Rational& k) { return a *= k; }
    friend ExactScalar operator*(const Rational& k, ExactScalar a) { return a *= k; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.rational_ == b.rational_ && a.generic_ == b.generic_;
    }

private:
    void prune() {
        for (auto it = generic_.begin(); it != generic_.end();) {
            if (it->second.numerator() == 0)
                it = generic_.erase(it);
            else
                ++it;
        }
    }

    Rational rational_{0};
    GenericPart generic_;
};

enum class CosetClass { Integer, HalfInteger, Other };

/// a - b is an integer: equal symbol parts and an integral rational difference.
inline bool sub_is_integer(const ExactScalar& a, const ExactScalar& b) {
    return a.generic_part() == b.generic_part() &&
           is_integral(a.rational_part() - b.rational_part());
}

/// a + b is an integer: cancelling symbol parts and an integral rational sum.
inline bool sum_is_integer(const ExactScalar& a, const ExactScalar& b) {
    const auto& ga = a.generic_part();
    const auto& gb = b.generic_part();
    if (ga.size() != gb.size()) return false;
    for (auto ia = ga.begin(), ib = gb.begin(); ia != ga.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != -ib->second) return false;
    return is_integral(a.rational_part() + b.rational_part());
}

inline CosetClass coset_class(const ExactScalar& a) {
    if (!a.is_rational()) return CosetClass::Other;
    if (is_integral(a.rational_part())) return CosetClass::Integer;
    if (is_half_odd(a.rational_part())) return CosetClass::HalfInteger;
    return CosetClass::Other;
}

/// Total order on one fiber of equal symbol part.  Throws IncomparableScalars
/// across fibers.
inline std::strong_ordering compare(const ExactScalar& a, const ExactScalar& b) {
    if (a.generic_part() != b.generic_part())
        throw IncomparableScalars("scalars with different generic parts are not ordered");
    const Rational& x = a.rational_part();
    const Rational& y = b.rational_part();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace gvm
