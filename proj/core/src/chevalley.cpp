#include "qadj/chevalley.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qadj {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

FieldMatrix FieldMatrix::identity(std::size_t n, PrimeField f) {
    FieldMatrix m(n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.n_ != y.n_ || x.f_.modulus() != y.f_.modulus())
        throw std::invalid_argument("field matrix mismatch");
    const std::size_t n = x.n_;
    FieldMatrix r(n, x.f_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) = x.f_.reduce(static_cast<long long>(
                    (xik * y.at(k, j) + r.at(i, j)) % x.f_.modulus()));
        }
    return r;
}

FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y) {
    FieldMatrix r(x.n_, x.f_);
    for (std::size_t k = 0; k < x.a_.size(); ++k)
        r.a_[k] = x.f_.reduce(static_cast<long long>(x.a_[k]) - static_cast<long long>(y.a_[k]));
    return r;
}

bool FieldMatrix::is_zero() const {
    for (std::uint32_t v : a_)
        if (v != 0) return false;
    return true;
}

std::string FieldMatrix::key() const {
    std::string s;
    s.reserve(a_.size() * 4);
    for (std::uint32_t v : a_)
        for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    return s;
}

std::vector<std::vector<long long>> specialize(const PolyMatrix& op) {
    std::vector<std::vector<long long>> r(op.dim(), std::vector<long long>(op.dim(), 0));
    for (std::size_t i = 0; i < op.dim(); ++i)
        for (std::size_t j = 0; j < op.dim(); ++j) r[i][j] = op.at(i, j).eval_at_one();
    return r;
}

namespace {

// (q+k)! / (q! k!) over Z; q <= 3, k <= 3 here.
long long binom_ratio(int q, int k) {
    long long num = 1, den = 1;
    for (int t = 1; t <= k; ++t) {
        num *= q + t;
        den *= t;
    }
    return num / den;
}

FieldMatrix exp_gen(const AdjointModule& m, std::size_t i, std::uint32_t z, PrimeField f,
                    bool raising) {
    const std::size_t n = m.datum().rank();
    const Weight ip = Weight::simple_root(n, i);
    const RootSystem& rs = m.roots();
    FieldMatrix mat(m.dim(), f);
    const Weight special = raising ? -ip : ip;       // column with the z^2 term
    const Weight target = raising ? ip : -ip;        // image simple root
    std::vector<std::uint32_t> zpow{1, z, f.mul(z, z), f.mul(f.mul(z, z), z)};
    for (std::size_t b = 0; b < m.dim(); ++b) {
        BasisElement be = m.basis_element(b);
        if (be.kind == BasisElement::RootVector) {
            const Weight& alpha = rs.roots()[be.index];
            if (alpha == special) {
                mat.at(b, b) = 1;
                mat.at(m.t_basis_index(i), b) = z;
                mat.at(rs.index_of(target), b) = zpow[2];
                continue;
            }
            RootString s = rs.string_at(be.index, i);
            const int reach = raising ? s.p : s.q;
            const int arm = raising ? s.q : s.p;
            for (int k = 0; k <= reach; ++k) {
                Weight dest = raising ? alpha + k * ip : alpha - k * ip;
                std::uint32_t c = f.mul(f.reduce(binom_ratio(arm, k)), zpow[k]);
                mat.at(rs.index_of(dest), b) = c;
            }
        } else {
            mat.at(b, b) = 1;
            long long pair = m.datum().pairing(be.index, ip);
            long long a = pair < 0 ? -pair : pair;
            if (a != 0) mat.at(rs.index_of(target), b) = f.mul(f.reduce(a), z);
        }
    }
    return mat;
}

} // namespace

FieldMatrix x_gen(const AdjointModule& m, std::size_t i, std::uint32_t z, PrimeField f) {
    return exp_gen(m, i, f.reduce(z), f, true);
}

FieldMatrix y_gen(const AdjointModule& m, std::size_t i, std::uint32_t z, PrimeField f) {
    return exp_gen(m, i, f.reduce(z), f, false);
}

VerificationReport one_param_check(const AdjointModule& m, std::size_t i, PrimeField f,
                                   const std::string& scope) {
    if (f.modulus() > 101)
        throw std::invalid_argument("one_param_check: exhaustive range needs p <= 101");
    VerificationReport rep;
    CheckResult cx{"one_param_x", scope, 0, {}};
    CheckResult cy{"one_param_y", scope, 0, {}};
    const std::uint32_t p = f.modulus();
    std::vector<FieldMatrix> xs, ys;
    for (std::uint32_t z = 0; z < p; ++z) {
        xs.push_back(x_gen(m, i, z, f));
        ys.push_back(y_gen(m, i, z, f));
    }
    for (std::uint32_t z = 0; z < p; ++z)
        for (std::uint32_t zp = 0; zp < p; ++zp) {
            ++cx.instances_checked;
            if (!(xs[z] * xs[zp] == xs[(z + zp) % p]))
                cx.failures.push_back("i=" + std::to_string(i + 1) + " z=" + std::to_string(z) +
                                      " z'=" + std::to_string(zp));
            ++cy.instances_checked;
            if (!(ys[z] * ys[zp] == ys[(z + zp) % p]))
                cy.failures.push_back("i=" + std::to_string(i + 1) + " z=" + std::to_string(z) +
                                      " z'=" + std::to_string(zp));
        }
    rep.checks = {cx, cy};
    return rep;
}

std::vector<FieldMatrix> chevalley_generators(const AdjointModule& m, PrimeField f) {
    std::vector<FieldMatrix> gens;
    for (std::size_t i = 0; i < m.datum().rank(); ++i)
        for (std::uint32_t z = 1; z < f.modulus(); ++z) {
            gens.push_back(x_gen(m, i, z, f));
            gens.push_back(y_gen(m, i, z, f));
        }
    return gens;
}

ClosureResult group_closure(const std::vector<FieldMatrix>& gens, std::size_t cap) {
    if (gens.empty()) return {false, 1};
    for (const FieldMatrix& g : gens)
        if (g.dim() != gens[0].dim() || g.field().modulus() != gens[0].field().modulus())
            throw std::invalid_argument("group_closure: mixed dimensions or moduli");

    FieldMatrix id = FieldMatrix::identity(gens[0].dim(), gens[0].field());
    std::unordered_set<std::string> seen;
    std::deque<FieldMatrix> frontier;
    seen.insert(id.key());
    frontier.push_back(id);
    while (!frontier.empty()) {
        FieldMatrix cur = std::move(frontier.front());
        frontier.pop_front();
        for (const FieldMatrix& g : gens) {
            FieldMatrix next = cur * g;
            if (seen.insert(next.key()).second) {
                if (seen.size() > cap) return {true, seen.size()};
                frontier.push_back(std::move(next));
            }
        }
    }
    return {false, seen.size()};
}

std::uint64_t classical_order(char family, int rank, std::uint64_t q) {
    // Invariant degrees and adjoint center divisor per family.
    std::vector<int> degrees;
    std::uint64_t d = 1;
    auto qpow = [&](int k) {
        std::uint64_t r = 1;
        for (int t = 0; t < k; ++t)
            if (__builtin_mul_overflow(r, q, &r))
                throw std::overflow_error("classical_order: result exceeds 64 bits");
        return r;
    };
    auto gcd64 = [](std::uint64_t a, std::uint64_t b) {
        while (b) {
            std::uint64_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    int npos;
    switch (family) {
    case 'A':
        for (int t = 2; t <= rank + 1; ++t) degrees.push_back(t);
        d = gcd64(rank + 1, q - 1);
        npos = rank * (rank + 1) / 2;
        break;
    case 'B':
    case 'C':
        for (int t = 1; t <= rank; ++t) degrees.push_back(2 * t);
        d = gcd64(2, q - 1);
        npos = rank * rank;
        break;
    case 'D':
        for (int t = 1; t < rank; ++t) degrees.push_back(2 * t);
        degrees.push_back(rank);
        d = gcd64(4, qpow(rank) - 1);
        npos = rank * (rank - 1);
        break;
    case 'E':
        if (rank == 6) {
            degrees = {2, 5, 6, 8, 9, 12};
            d = gcd64(3, q - 1);
        } else if (rank == 7) {
            degrees = {2, 6, 8, 10, 12, 14, 18};
            d = gcd64(2, q - 1);
        } else if (rank == 8) {
            degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        } else {
            throw std::invalid_argument("classical_order: unknown E rank");
        }
        npos = 0;
        for (int t : degrees) npos += t - 1;
        break;
    case 'F':
        if (rank != 4) throw std::invalid_argument("classical_order: F rank must be 4");
        degrees = {2, 6, 8, 12};
        npos = 24;
        break;
    case 'G':
        if (rank != 2) throw std::invalid_argument("classical_order: G rank must be 2");
        degrees = {2, 6};
        npos = 6;
        break;
    default:
        throw std::invalid_argument("classical_order: unknown family");
    }
    std::uint64_t order = qpow(npos);
    for (int t : degrees) {
        std::uint64_t factor = qpow(t) - 1;
        if (__builtin_mul_overflow(order, factor, &order))
            throw std::overflow_error("classical_order: result exceeds 64 bits");
    }
    return order / d;
}

} // namespace qadj
