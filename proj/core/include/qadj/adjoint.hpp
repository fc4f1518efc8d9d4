#ifndef QADJ_ADJOINT_HPP
#define QADJ_ADJOINT_HPP

#include <string>
#include <vector>

#include "qadj/laurent.hpp"
#include "qadj/roots.hpp"

namespace qadj {

/// Dense square matrix over Z[v,v^-1]. Dimensions here are at most 248
/// (E8 adjoint), so dense storage keeps indexing trivial; multiplication
/// skips zero entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly{1};
        return m;
    }

    std::size_t dim() const { return n_; }
    LaurentPoly& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    bool is_zero() const {
        for (const auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& x);
    PolyMatrix pow(unsigned k) const;

    /// Matrix-vector product over Z[v,v^-1]; throws on dimension mismatch.
    std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& vec) const;

private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> a_;
};

/// One basis element of Lambda: a root vector X_alpha or a zero-weight
/// vector t_i.
struct BasisElement {
    enum Kind { RootVector, ZeroVector } kind;
    std::size_t index;  // root index for X, node index for t
};

/// The quantum adjoint representation on the ordered canonical basis
/// {X_alpha; alpha in R} followed by {t_i; i in I}, with the generator
/// matrices built column-by-column from their explicit action formulas.
/// Immutable; operator builds for distinct generators are independent.
class AdjointModule {
public:
    explicit AdjointModule(RootSystem rs) : rs_(std::move(rs)) {}

    const RootSystem& roots() const { return rs_; }
    const CartanDatum& datum() const { return rs_.datum(); }
    std::size_t dim() const { return rs_.size() + datum().rank(); }

    BasisElement basis_element(std::size_t b) const {
        if (b < rs_.size()) return {BasisElement::RootVector, b};
        return {BasisElement::ZeroVector, b - rs_.size()};
    }
    std::size_t root_basis_index(std::size_t root_index) const { return root_index; }
    std::size_t t_basis_index(std::size_t node) const { return rs_.size() + node; }

    /// Weight of basis element b: alpha for X_alpha, zero for t_i.
    Weight weight_of(std::size_t b) const {
        if (b < rs_.size()) return rs_.roots()[b];
        return Weight::zero(datum().rank());
    }
    /// "X[coords]" or "t[i]" (1-based node).
    std::string label_of(std::size_t b) const;

    /// The action of E_i:
    ///   E_i X_alpha = [q_{i,alpha}+1]_i X_{alpha+i'}   if p_{i,alpha} > 0,
    ///   E_i X_{-i'} = t_i,
    ///   E_i X_alpha = 0                                 otherwise,
    ///   E_i t_j     = [|<j,i'>|]_j X_{i'}.
    PolyMatrix E(std::size_t i) const;
    /// Mirror of E: F_i X_alpha = [p+1]_i X_{alpha-i'} if q > 0,
    /// F_i X_{i'} = t_i, F_i t_j = [|<j,i'>|]_j X_{-i'}.
    PolyMatrix F(std::size_t i) const;
    /// Diagonal K_y with entry v^{<y,lambda(b)>}.
    PolyMatrix K(const std::vector<int>& y) const;

    /// Divided power E_i^{(k)} = E_i^k / [k]!_i, built directly:
    ///   E_i^{(k)} X_alpha = ([q+k]!_i / [q]!_i [k]!_i) X_{alpha+k i'}
    ///                                     if alpha != -i', k <= p_{i,alpha},
    ///   E_i^{(2)} X_{-i'} = X_{i'},  E_i^{(k)} X_{-i'} = 0 for k >= 3,
    ///   E_i^{(k)} t_j = 0 for k >= 2.
    PolyMatrix E_divided(std::size_t i, unsigned k) const;
    PolyMatrix F_divided(std::size_t i, unsigned k) const;

private:
    RootSystem rs_;
};

} // namespace qadj

#endif
