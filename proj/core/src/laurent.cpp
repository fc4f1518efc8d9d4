#include "qadj/laurent.hpp"

#include <sstream>

namespace qadj {

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly{};
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const std::int64_t dcoeff = divisor.terms_.rbegin()->second;
    // Degree (max_exp - min_exp) strictly decreases or the remainder empties.
    while (!rem.is_zero()) {
        const int rlead = rem.max_exp();
        const std::int64_t rcoeff = rem.terms_.rbegin()->second;
        if (rlead - rem.min_exp() < dlead - divisor.min_exp()) return std::nullopt;
        if (rcoeff % dcoeff != 0) return std::nullopt;
        LaurentPoly t = monomial(rcoeff / dcoeff, rlead - dlead);
        quot += t;
        rem -= t * divisor;
        if (!rem.is_zero() && rem.max_exp() >= rlead) return std::nullopt;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly q_int(int n, int d) {
    if (d <= 0) throw std::invalid_argument("q_int: d must be positive");
    if (n == 0) return LaurentPoly{};
    if (n < 0) return -q_int(-n, d);
    LaurentPoly r;
    for (int k = 0; k < n; ++k) r += LaurentPoly::power_of_v(d * (n - 1 - 2 * k));
    return r;
}

LaurentPoly q_factorial(int n, int d) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    LaurentPoly r{1};
    for (int s = 1; s <= n; ++s) r *= q_int(s, d);
    return r;
}

LaurentPoly q_binomial(int a, int b, int d) {
    if (b < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
    LaurentPoly num = q_factorial(a, d);
    LaurentPoly den = q_factorial(b, d) * q_factorial(a - b, d);
    auto q = num.divide_exact(den);
    if (!q) throw std::logic_error("q_binomial: non-exact division (internal error)");
    return *q;
}

} // namespace qadj
