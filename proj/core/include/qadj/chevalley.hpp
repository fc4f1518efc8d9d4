#ifndef QADJ_CHEVALLEY_HPP
#define QADJ_CHEVALLEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qadj/adjoint.hpp"
#include "qadj/report.hpp"

namespace qadj {

/// Prime field F_p, 2 <= p < 2^31; elements are canonical residues.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);
    std::uint32_t modulus() const { return p_; }
    std::uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }

private:
    std::uint32_t p_;
};

/// Dense square matrix of residues mod a prime.
class FieldMatrix {
public:
    FieldMatrix(std::size_t n, PrimeField f) : n_(n), f_(f), a_(n * n, 0) {}
    static FieldMatrix identity(std::size_t n, PrimeField f);

    std::size_t dim() const { return n_; }
    const PrimeField& field() const { return f_; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    friend FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y);
    friend FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y);
    bool operator==(const FieldMatrix& o) const { return a_ == o.a_; }
    bool is_zero() const;

    /// Canonical row-major byte key for exact dedup in the BFS closure.
    std::string key() const;

private:
    std::size_t n_;
    PrimeField f_;
    std::vector<std::uint32_t> a_;
};

/// Entrywise specialization v -> 1 of an operator matrix.
std::vector<std::vector<long long>> specialize(const PolyMatrix& op);

/// x_i(z) = exp(z e_i) from the closed formulas: on a root column X_alpha
/// (alpha != -i') the entries are binomial(q_{i,alpha}+k, k) z^k at
/// X_{alpha+k i'} for k <= p_{i,alpha}; x_i(z) X_{-i'} = X_{-i'} + z t_i
/// + z^2 X_{i'}; x_i(z) t_j = t_j + |<j,i'>| z X_{i'}. Factorial ratios are
/// computed in Z before reduction mod p (p may divide k!).
FieldMatrix x_gen(const AdjointModule& m, std::size_t i, std::uint32_t z, PrimeField f);
/// y_i(z) = exp(z f_i), the mirror of x_gen.
FieldMatrix y_gen(const AdjointModule& m, std::size_t i, std::uint32_t z, PrimeField f);

/// Exhaustive one-parameter-subgroup check x_i(z) x_i(z') = x_i(z+z') and
/// the y-version over all of F_p; requires p <= 101.
VerificationReport one_param_check(const AdjointModule& m, std::size_t i, PrimeField f,
                                   const std::string& scope = "");

struct ClosureResult {
    bool exceeded = false;
    std::uint64_t order = 0;  // exact order when !exceeded; partial count otherwise
};

/// BFS closure of the generated matrix group under right multiplication.
/// The generator set must be inverse-closed (x_i(-z) accompanies x_i(z)).
/// Never returns a wrong order: if the cap is hit the result is flagged.
ClosureResult group_closure(const std::vector<FieldMatrix>& gens,
                            std::size_t cap = 20000000);

/// All x_i(z), y_i(z) for z = 1..p-1; inverse-closed.
std::vector<FieldMatrix> chevalley_generators(const AdjointModule& m, PrimeField f);

/// Classical order formula q^{|R+|} prod (q^{d_t}-1) / d with the standard
/// invariant degrees per family and the adjoint-group center divisor d.
/// External oracle for cross-checking group_closure; not derivable from the
/// construction itself.
std::uint64_t classical_order(char family, int rank, std::uint64_t q);

} // namespace qadj

#endif
