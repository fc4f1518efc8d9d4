#ifndef QADJ_CARTAN_HPP
#define QADJ_CARTAN_HPP

#include <compare>
#include <string>
#include <vector>

namespace qadj {

/// Element of the root lattice in simple-root coordinates: sum_i n_i * i'.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }
    static Weight simple_root(std::size_t rank, std::size_t i) {
        Weight w = zero(rank);
        w.coords[i] = 1;
        return w;
    }

    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }
    int height() const {
        int h = 0;
        for (int c : coords) h += c;
        return h;
    }

    friend Weight operator+(Weight a, const Weight& b) {
        for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] += b.coords[k];
        return a;
    }
    friend Weight operator-(Weight a, const Weight& b) {
        for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] -= b.coords[k];
        return a;
    }
    friend Weight operator-(Weight a) {
        for (int& c : a.coords) c = -c;
        return a;
    }
    friend Weight operator*(int s, Weight a) {
        for (int& c : a.coords) c *= s;
        return a;
    }
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const;
};

/// Outcome of validating a raw symmetric pairing matrix: either a datum or
/// the complete list of violated axioms.
class CartanDatum;
struct DatumValidation {
    std::vector<std::string> issues;   // empty iff valid
    bool ok() const { return issues.empty(); }
};

/// Finite-type irreducible Cartan datum: index set I (0-based internally,
/// 1-based in all I/O) with symmetric pairing i.j.
///
/// Preset node order is Bourbaki: chains numbered along the diagram;
/// B_n has nodes 1..n-1 long and n short, C_n has 1..n-1 short and n long,
/// F4 has 1,2 long and 3,4 short, G2 has 1 short and 2 long, D_n/E_n branch
/// node conventions as in Bourbaki plates.
class CartanDatum {
public:
    /// Build one of A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4),
    /// E6, E7, E8, F4, G2, normalized so min(i.i/2) = 1.
    static CartanDatum preset(char family, int rank);
    /// Parse "A2", "G2", ... (case-insensitive family letter).
    static CartanDatum preset(const std::string& name);

    /// Full axiom check of a raw symmetric matrix; every violation is
    /// reported, not just the first.
    static DatumValidation validate(const std::vector<std::vector<long long>>& raw_dot);
    /// validate + construct; throws std::invalid_argument with the full
    /// issue list if invalid.
    static CartanDatum from_dot(const std::vector<std::vector<long long>>& raw_dot);

    std::size_t rank() const { return dot_.size(); }
    int dot(std::size_t i, std::size_t j) const { return dot_[i][j]; }
    int e() const { return e_; }
    /// i.i/2, the exponent in v_i = v^{i.i/2}.
    int v_exponent(std::size_t i) const { return dot_[i][i] / 2; }
    bool is_short(std::size_t i) const { return v_exponent(i) == 1; }
    bool is_long(std::size_t i) const { return v_exponent(i) == e_; }
    std::vector<std::size_t> short_nodes() const;
    std::vector<std::size_t> long_nodes() const;

    /// Cartan pairing <i, j'> = 2 (i.j) / (i.i).
    int cartan(std::size_t i, std::size_t j) const { return 2 * dot_[i][j] / dot_[i][i]; }
    /// <i, lambda>, bilinear in lambda.
    long long pairing(std::size_t i, const Weight& lambda) const {
        long long s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long long>(lambda.coords[j]) * cartan(i, j);
        return s;
    }
    /// Symmetric form lambda . mu extended bilinearly from i.j.
    long long bilinear(const Weight& a, const Weight& b) const {
        long long s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                s += static_cast<long long>(a.coords[i]) * b.coords[j] * dot_[i][j];
        return s;
    }

    const std::vector<std::vector<int>>& dot_matrix() const { return dot_; }

private:
    explicit CartanDatum(std::vector<std::vector<int>> dot);

    std::vector<std::vector<int>> dot_;
    int e_ = 1;
};

} // namespace qadj

#endif
