#ifndef QADJ_ROOTS_HPP
#define QADJ_ROOTS_HPP

#include <map>
#include <vector>

#include "qadj/cartan.hpp"
#include "qadj/report.hpp"

namespace qadj {

/// Arm lengths of the root string through alpha in direction i':
/// p is the largest k >= 0 with alpha, alpha+i', ..., alpha+k i' all in R,
/// q the same toward -i'. Membership-based: strings never cross 0, so at
/// alpha = +-i' both arms stop there even though <i,alpha> = +-2 (the module
/// acting on the zero-weight space handles those cases by explicit branches).
struct RootString {
    int p = 0;
    int q = 0;
};

/// The full root system generated from a Cartan datum by reflection closure,
/// with string tables, heights, highest root and length classification.
/// Immutable after generate().
class RootSystem {
public:
    static RootSystem generate(const CartanDatum& datum);

    const CartanDatum& datum() const { return datum_; }

    /// All of R: positive roots sorted by (height, lex coords), then the
    /// negatives in mirrored order (roots()[num_positive()+k] = -roots()[k]).
    const std::vector<Weight>& roots() const { return roots_; }
    std::size_t num_positive() const { return roots_.size() / 2; }
    std::size_t size() const { return roots_.size(); }

    bool contains(const Weight& w) const { return index_.count(w) != 0; }
    /// Index into roots(); throws if w is not a root.
    std::size_t index_of(const Weight& w) const;

    RootString string(std::size_t i, const Weight& alpha) const;
    RootString string_at(std::size_t root_index, std::size_t i) const {
        return strings_[root_index][i];
    }

    /// h(alpha) = sum of simple-root coordinates; defined on positive roots.
    int height(const Weight& alpha) const;
    const Weight& highest_root() const { return roots_[alpha0_index_]; }
    std::size_t highest_root_index() const { return alpha0_index_; }

    /// alpha.alpha = 2 for short roots, 2e for long roots; if e = 1 every
    /// root is both.
    bool is_short_root(std::size_t root_index) const { return short_[root_index]; }
    bool is_long_root(std::size_t root_index) const {
        return datum_.e() == 1 || !short_[root_index];
    }

    /// Exhaustive check of the string facts: the <i,alpha> = q - p identity
    /// (excluding alpha = +-i', where the membership-based string stops at
    /// zero), the p+q <= 3 bound, the long-strings-force-short-node fact and
    /// the endpoint length classification.
    VerificationReport verify_string_facts() const;

private:
    explicit RootSystem(CartanDatum d) : datum_(std::move(d)) {}

    CartanDatum datum_;
    std::vector<Weight> roots_;
    std::map<Weight, std::size_t> index_;
    std::vector<std::vector<RootString>> strings_;  // [root_index][node]
    std::vector<bool> short_;
    std::size_t alpha0_index_ = 0;
};

} // namespace qadj

#endif
