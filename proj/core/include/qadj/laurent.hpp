#ifndef QADJ_LAURENT_HPP
#define QADJ_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qadj {

/// Thrown when a coefficient computation leaves the 64-bit range.
/// Overflow is reported, never wrapped.
struct CoefficientOverflow : std::runtime_error {
    CoefficientOverflow() : std::runtime_error("coefficient overflow in Z[v,v^-1] arithmetic") {}
};

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow{};
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow{};
    return r;
}
} // namespace detail

/// Element of Z[v, v^-1] in canonical sparse form: exponent -> nonzero
/// integer coefficient. Equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant) {
        if (constant != 0) terms_[0] = constant;
    }

    static LaurentPoly monomial(std::int64_t coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }
    /// v^exp
    static LaurentPoly power_of_v(int exp) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && coeff(0) == 1; }

    std::int64_t coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// Lowest / highest exponent with nonzero coefficient. Zero poly has none.
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_)
                r.add_term(ea + eb, detail::checked_mul(ca, cb));
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// The ring involution v -> v^-1.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (auto [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    /// Sum of coefficients (specialization v = 1).
    std::int64_t eval_at_one() const {
        std::int64_t s = 0;
        for (auto [e, c] : terms_) s = detail::checked_add(s, c);
        return s;
    }

    /// True iff every coefficient is >= 0, i.e. the element lies in N[v,v^-1].
    bool is_nonneg() const {
        for (auto [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// Exact division: returns *this / divisor if the quotient lies in
    /// Z[v,v^-1], std::nullopt otherwise. Long division by the leading term;
    /// any nonzero remainder or non-integral step aborts the attempt.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    /// Rendering in descending exponent order, e.g. "v^2 + 1 + v^-2".
    std::string str() const;

private:
    void add_term(int e, std::int64_t c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, std::int64_t> terms_;
};

/// Quantum integer [n]_d = (v^{dn} - v^{-dn})/(v^d - v^{-d}); d = i.i/2.
LaurentPoly q_int(int n, int d);

/// Quantum factorial [n]!_d.
LaurentPoly q_factorial(int n, int d);

/// Gaussian binomial [a]!_d / ([b]!_d [a-b]!_d), requires b <= a.
/// Computed by exact division; a nonzero remainder is an internal error.
LaurentPoly q_binomial(int a, int b, int d);

} // namespace qadj

#endif
