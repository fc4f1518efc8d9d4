#include "qadj/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qadj {

namespace {
constexpr std::size_t kClosureBound = 10000;
} // namespace

RootSystem RootSystem::generate(const CartanDatum& datum) {
    RootSystem rs(datum);
    const std::size_t n = datum.rank();

    // Closure of {i'} under the simple reflections s_i.
    std::set<Weight> closed;
    std::vector<Weight> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = Weight::simple_root(n, i);
        closed.insert(w);
        frontier.push_back(w);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                Weight r = w;
                long long pair = datum.pairing(i, w);
                r.coords[i] -= static_cast<int>(pair);
                if (closed.insert(r).second) next.push_back(r);
            }
        }
        if (closed.size() > kClosureBound)
            throw std::runtime_error("reflection closure exceeded safety bound");
        frontier = std::move(next);
    }

    // Split into positive/negative; order positives by (height, lex), then
    // mirror for the negatives.
    std::vector<Weight> positive;
    for (const Weight& w : closed) {
        bool pos = true, neg = true;
        for (int c : w.coords) {
            if (c < 0) pos = false;
            if (c > 0) neg = false;
        }
        if (pos == neg) throw std::runtime_error("root with mixed-sign coordinates");
        if (pos) positive.push_back(w);
    }
    std::sort(positive.begin(), positive.end(), [](const Weight& a, const Weight& b) {
        return std::pair(a.height(), a.coords) < std::pair(b.height(), b.coords);
    });
    rs.roots_ = positive;
    for (const Weight& w : positive) rs.roots_.push_back(-w);
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = k;

    // String tables by consecutive membership.
    rs.strings_.assign(rs.roots_.size(), std::vector<RootString>(n));
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            RootString s;
            Weight up = rs.roots_[k];
            for (;;) {
                up.coords[i] += 1;
                if (!rs.index_.count(up)) break;
                ++s.p;
            }
            Weight down = rs.roots_[k];
            for (;;) {
                down.coords[i] -= 1;
                if (!rs.index_.count(down)) break;
                ++s.q;
            }
            rs.strings_[k][i] = s;
        }
    }

    // Length class via squared length.
    rs.short_.assign(rs.roots_.size(), false);
    for (std::size_t k = 0; k < rs.roots_.size(); ++k)
        rs.short_[k] = datum.bilinear(rs.roots_[k], rs.roots_[k]) == 2;

    // Highest root: unique height maximum among positives; the mirrored
    // ordering puts it last in the positive block.
    rs.alpha0_index_ = rs.num_positive() - 1;
    if (rs.num_positive() >= 2 &&
        rs.roots_[rs.alpha0_index_].height() == rs.roots_[rs.alpha0_index_ - 1].height())
        throw std::runtime_error("height maximum on R+ is not unique");
    return rs;
}

std::size_t RootSystem::index_of(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end())
        throw std::invalid_argument("not a root: " + w.str());
    return it->second;
}

RootString RootSystem::string(std::size_t i, const Weight& alpha) const {
    return strings_[index_of(alpha)][i];
}

int RootSystem::height(const Weight& alpha) const {
    std::size_t k = index_of(alpha);
    if (k >= num_positive()) throw std::invalid_argument("height is defined on R+ only");
    return alpha.height();
}

VerificationReport RootSystem::verify_string_facts() const {
    const std::size_t n = datum_.rank();
    VerificationReport rep;
    CheckResult a{"string_fact_a_pairing", "", 0, {}};
    CheckResult bound{"string_fact_a_bound", "", 0, {}};
    CheckResult b{"string_fact_b_long_strings", "", 0, {}};
    CheckResult c{"string_fact_c_endpoints", "", 0, {}};

    auto length_name = [&](std::size_t idx) { return is_short_root(idx) ? "R1" : "Re"; };

    for (std::size_t k = 0; k < roots_.size(); ++k) {
        const Weight& alpha = roots_[k];
        for (std::size_t i = 0; i < n; ++i) {
            const RootString s = strings_[k][i];
            const long long pair = datum_.pairing(i, alpha);

            Weight pm = Weight::simple_root(n, i);
            bool is_plus_minus_simple = (alpha == pm) || (alpha == -pm);
            if (!is_plus_minus_simple) {
                ++a.instances_checked;
                if (pair != s.q - s.p) {
                    std::ostringstream os;
                    os << "<" << i + 1 << "," << alpha.str() << "> = " << pair << " but q-p = "
                       << s.q - s.p;
                    a.failures.push_back(os.str());
                }
            }
            ++bound.instances_checked;
            if (s.p + s.q > 3) {
                std::ostringstream os;
                os << "p+q = " << s.p + s.q << " at (" << i + 1 << "," << alpha.str() << ")";
                bound.failures.push_back(os.str());
            }

            if (s.p + s.q > 1) {
                ++b.instances_checked;
                std::ostringstream loc;
                loc << "(" << i + 1 << "," << alpha.str() << ")";
                if (s.p + s.q != datum_.e() || !datum_.is_short(i))
                    b.failures.push_back("p+q = " + std::to_string(s.p + s.q) +
                                         " without p+q = e and i short at " + loc.str());
                Weight lo = alpha - s.q * Weight::simple_root(n, i);
                Weight hi = alpha + s.p * Weight::simple_root(n, i);
                if (!is_long_root(index_of(lo)) || !is_long_root(index_of(hi)))
                    b.failures.push_back("string endpoint not in Re at " + loc.str());
                for (int t = -s.q + 1; t < s.p; ++t) {
                    Weight mid = alpha + t * Weight::simple_root(n, i);
                    if (!is_short_root(index_of(mid)))
                        b.failures.push_back("string interior not in R1 at " + loc.str());
                }
            } else if (s.p + s.q == 1) {
                ++c.instances_checked;
                Weight lo = alpha - s.q * Weight::simple_root(n, i);
                Weight hi = alpha + s.p * Weight::simple_root(n, i);
                std::size_t li = index_of(lo), hi_i = index_of(hi);
                bool both_short = is_short_root(li) && is_short_root(hi_i);
                bool both_long = is_long_root(li) && is_long_root(hi_i);
                if (!both_short && !both_long) {
                    std::ostringstream os;
                    os << "endpoints " << lo.str() << " (" << length_name(li) << ") and "
                       << hi.str() << " (" << length_name(hi_i) << ") differ in length at ("
                       << i + 1 << "," << alpha.str() << ")";
                    c.failures.push_back(os.str());
                }
            }
        }
    }
    rep.checks = {a, bound, b, c};
    rep.sort();
    return rep;
}

} // namespace qadj
