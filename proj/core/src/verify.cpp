#include "qadj/verify.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qadj {

namespace {

std::string pair_witness(const AdjointModule& m, std::size_t b, std::size_t c) {
    return "(" + m.label_of(b) + ", " + m.label_of(c) + ")";
}

// ---- exact rational functions over Z[v,v^-1], used only by the gram solver

std::int64_t int_content(const LaurentPoly& p) {
    std::int64_t g = 0;
    for (auto [e, c] : p.terms()) g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

struct Frac {
    LaurentPoly num;
    LaurentPoly den{1};

    void normalize() {
        if (num.is_zero()) {
            den = LaurentPoly{1};
            return;
        }
        if (auto q = num.divide_exact(den)) {
            num = *q;
            den = LaurentPoly{1};
            return;
        }
        std::int64_t g = std::gcd(int_content(num), int_content(den));
        if (g > 1) {
            num = *num.divide_exact(LaurentPoly{g});
            den = *den.divide_exact(LaurentPoly{g});
        }
    }
    bool is_zero() const { return num.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        Frac r{a.num * b.den + b.num * a.den, a.den * b.den};
        r.normalize();
        return r;
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        Frac r{a.num * b.num, a.den * b.den};
        r.normalize();
        return r;
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        Frac r{a.num * b.den, a.den * b.num};
        r.normalize();
        return r;
    }
    friend Frac operator-(const Frac& a) { return Frac{-a.num, a.den}; }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num * b.den == b.num * a.den;
    }
};

} // namespace

VerificationReport check_relations(const AdjointModule& m, const std::string& scope) {
    const CartanDatum& d = m.datum();
    const std::size_t n = d.rank();
    VerificationReport rep;

    std::vector<PolyMatrix> Es, Fs, Ks;
    for (std::size_t i = 0; i < n; ++i) {
        Es.push_back(m.E(i));
        Fs.push_back(m.F(i));
        std::vector<int> y(n, 0);
        y[i] = 1;
        Ks.push_back(m.K(y));
    }

    // (1) K_y K_y' = K_{y+y'} on unit vectors and all pairwise sums.
    // K is diagonal with multiplicative entries, so this spanning check is
    // logically sufficient for all of Y.
    {
        CheckResult c{"relation_1_K_additivity", scope, 0, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                ++c.instances_checked;
                std::vector<int> y(n, 0);
                y[i] += 1;
                y[j] += 1;
                if (!(Ks[i] * Ks[j] == m.K(y)))
                    c.failures.push_back("K additivity fails at y = e" + std::to_string(i + 1) +
                                         " + e" + std::to_string(j + 1));
            }
        rep.checks.push_back(std::move(c));
    }

    // (2)(3) K_i E_j = v^{<i,j'>} E_j K_i and K_i F_j = v^{-<i,j'>} F_j K_i.
    {
        CheckResult ce{"relation_2_KE", scope, 0, {}};
        CheckResult cf{"relation_3_KF", scope, 0, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int a = d.cartan(i, j);
                ++ce.instances_checked;
                if (!(Ks[i] * Es[j] == LaurentPoly::power_of_v(a) * (Es[j] * Ks[i])))
                    ce.failures.push_back("K" + std::to_string(i + 1) + " E" +
                                          std::to_string(j + 1));
                ++cf.instances_checked;
                if (!(Ks[i] * Fs[j] == LaurentPoly::power_of_v(-a) * (Fs[j] * Ks[i])))
                    cf.failures.push_back("K" + std::to_string(i + 1) + " F" +
                                          std::to_string(j + 1));
            }
        rep.checks.push_back(std::move(ce));
        rep.checks.push_back(std::move(cf));
    }

    // (4) E_i F_j - F_j E_i = delta_ij H_i, where H_i is diagonal with entry
    // [<i,lambda(b)>]_i. This realizes (K_i^{i.i/2}-K_i^{-i.i/2})/(v_i-v_i^-1)
    // entrywise without division.
    {
        CheckResult c{"relation_4_EF_commutator", scope, 0, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++c.instances_checked;
                PolyMatrix lhs = Es[i] * Fs[j] - Fs[j] * Es[i];
                PolyMatrix rhs(m.dim());
                if (i == j)
                    for (std::size_t b = 0; b < m.dim(); ++b)
                        rhs.at(b, b) = q_int(static_cast<int>(d.pairing(i, m.weight_of(b))),
                                             d.v_exponent(i));
                if (!(lhs == rhs))
                    c.failures.push_back("[E" + std::to_string(i + 1) + ", F" +
                                         std::to_string(j + 1) + "]");
            }
        rep.checks.push_back(std::move(c));
    }

    // (5)(6) Quantum Serre relations via divided powers:
    // sum_{p+p'=1-<i,j'>} (-1)^{p'} E_i^{(p)} E_j E_i^{(p')} = 0, and the
    // F-version.
    {
        CheckResult ce{"relation_5_serre_E", scope, 0, {}};
        CheckResult cf{"relation_6_serre_F", scope, 0, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const int N = 1 - d.cartan(i, j);
                PolyMatrix se(m.dim()), sf(m.dim());
                for (int p = 0; p <= N; ++p) {
                    const int pp = N - p;
                    LaurentPoly sign{pp % 2 == 0 ? 1 : -1};
                    se = se + sign * (m.E_divided(i, p) * Es[j] * m.E_divided(i, pp));
                    sf = sf + sign * (m.F_divided(i, p) * Fs[j] * m.F_divided(i, pp));
                }
                ++ce.instances_checked;
                if (!se.is_zero())
                    ce.failures.push_back("Serre(E) i=" + std::to_string(i + 1) +
                                          " j=" + std::to_string(j + 1));
                ++cf.instances_checked;
                if (!sf.is_zero())
                    cf.failures.push_back("Serre(F) i=" + std::to_string(i + 1) +
                                          " j=" + std::to_string(j + 1));
            }
        rep.checks.push_back(std::move(ce));
        rep.checks.push_back(std::move(cf));
    }

    rep.sort();
    return rep;
}

GramMatrix gram_closed_form(const AdjointModule& m) {
    const CartanDatum& d = m.datum();
    const RootSystem& rs = m.roots();
    const int e = d.e();
    GramMatrix g{PolyMatrix(m.dim()), GramMatrix::Provenance::ClosedForm};

    LaurentPoly short_norm;  // 1 + v^-2 + ... + v^-2(e-1) = v^{-e+1}[e]
    for (int t = 0; t < e; ++t) short_norm += LaurentPoly::power_of_v(-2 * t);

    for (std::size_t k = 0; k < rs.size(); ++k)
        g.entries.at(k, k) = rs.is_short_root(k) && e > 1 ? short_norm : LaurentPoly{1};

    for (std::size_t i = 0; i < d.rank(); ++i) {
        std::size_t bi = m.t_basis_index(i);
        if (d.is_short(i) && e > 1)
            g.entries.at(bi, bi) =
                (LaurentPoly{1} + LaurentPoly::power_of_v(-2)) * short_norm;
        else
            g.entries.at(bi, bi) = LaurentPoly{1} + LaurentPoly::power_of_v(-2 * e);
        for (std::size_t j = i + 1; j < d.rank(); ++j) {
            if (d.dot(i, j) == 0) continue;
            LaurentPoly val = LaurentPoly::power_of_v(-e);
            if (d.is_short(i) || d.is_short(j)) val = val * q_int(e, 1);
            g.entries.at(bi, m.t_basis_index(j)) = val;
            g.entries.at(m.t_basis_index(j), bi) = val;
        }
    }
    return g;
}

GramMatrix gram_from_contract(const AdjointModule& m) {
    const CartanDatum& d = m.datum();
    const RootSystem& rs = m.roots();
    const std::size_t n = d.rank();
    const std::size_t dim = m.dim();

    // Unknowns: one per unordered same-weight basis pair. Root weight spaces
    // are one-dimensional, so these are the root diagonal plus the
    // zero-weight t-block. Cross-weight entries vanish by the K-adjunction:
    // (K_y x, x') = (x, K_y x') forces v^{<y,l>} g = v^{<y,l'>} g, and the
    // Cartan matrix is nonsingular so some unit y separates l from l'.
    std::vector<Weight> wt(dim);
    for (std::size_t b = 0; b < dim; ++b) wt[b] = m.weight_of(b);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown_id;
    std::vector<std::pair<std::size_t, std::size_t>> unknown_pair;
    auto id_of = [&](std::size_t b, std::size_t c) -> long {
        if (wt[b] != wt[c]) return -1;
        auto key = std::minmax(b, c);
        auto it = unknown_id.find(key);
        if (it != unknown_id.end()) return static_cast<long>(it->second);
        unknown_id[key] = unknown_pair.size();
        unknown_pair.push_back(key);
        return static_cast<long>(unknown_pair.size() - 1);
    };
    for (std::size_t k = 0; k < rs.size(); ++k) id_of(k, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) id_of(m.t_basis_index(i), m.t_basis_index(j));
    const std::size_t num_unknowns = unknown_pair.size();

    // Equations sum coeff_u * g_u = 0 from both adjunction identities on all
    // basis pairs:
    //   sum_c E_i[c,b] g(c,b') = sum_c v_i^{1+<i,wt(c)>} F_i[c,b'] g(b,c),
    //   sum_c F_i[c,b] g(c,b') = sum_c v_i^{1-<i,wt(c)>} E_i[c,b'] g(b,c).
    using Equation = std::map<std::size_t, LaurentPoly>;
    std::vector<Equation> eqs;
    auto add_term = [&](Equation& eq, long id, const LaurentPoly& coeff) {
        if (id < 0 || coeff.is_zero()) return;
        auto [it, fresh] = eq.emplace(static_cast<std::size_t>(id), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) eq.erase(it);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const int di = d.v_exponent(i);
        const PolyMatrix E = m.E(i), F = m.F(i);
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t bp = 0; bp < dim; ++bp) {
                Equation eqE, eqF;
                for (std::size_t c = 0; c < dim; ++c) {
                    if (!E.at(c, b).is_zero()) add_term(eqE, id_of(c, bp), E.at(c, b));
                    if (!F.at(c, bp).is_zero()) {
                        int ex = di * (1 + static_cast<int>(d.pairing(i, wt[c])));
                        add_term(eqE, id_of(b, c),
                                 -(LaurentPoly::power_of_v(ex) * F.at(c, bp)));
                    }
                    if (!F.at(c, b).is_zero()) add_term(eqF, id_of(c, bp), F.at(c, b));
                    if (!E.at(c, bp).is_zero()) {
                        int ex = di * (1 - static_cast<int>(d.pairing(i, wt[c])));
                        add_term(eqF, id_of(b, c),
                                 -(LaurentPoly::power_of_v(ex) * E.at(c, bp)));
                    }
                }
                if (!eqE.empty()) eqs.push_back(std::move(eqE));
                if (!eqF.empty()) eqs.push_back(std::move(eqF));
            }
    }

    // Seed (eta,eta) = 1 and propagate: any equation whose unknowns are all
    // solved but one determines that one in every solution, so reaching all
    // unknowns also proves uniqueness.
    std::vector<Frac> value(num_unknowns);
    std::vector<bool> solved(num_unknowns, false);
    std::size_t eta = m.root_basis_index(rs.highest_root_index());
    value[static_cast<std::size_t>(id_of(eta, eta))] = Frac{LaurentPoly{1}, LaurentPoly{1}};
    solved[static_cast<std::size_t>(id_of(eta, eta))] = true;
    std::size_t num_solved = 1;

    bool progress = true;
    while (progress && num_solved < num_unknowns) {
        progress = false;
        for (const Equation& eq : eqs) {
            long open = -1;
            bool multiple = false;
            for (const auto& [u, coeff] : eq) {
                if (!solved[u]) {
                    if (open >= 0) {
                        multiple = true;
                        break;
                    }
                    open = static_cast<long>(u);
                }
            }
            if (multiple || open < 0) continue;
            Frac acc;
            for (const auto& [u, coeff] : eq)
                if (solved[u]) acc = acc + Frac{coeff, LaurentPoly{1}} * value[u];
            const LaurentPoly& c = eq.at(static_cast<std::size_t>(open));
            value[open] = -acc / Frac{c, LaurentPoly{1}};
            solved[open] = true;
            ++num_solved;
            progress = true;
        }
    }
    if (num_solved < num_unknowns) {
        std::ostringstream os;
        os << "gram_from_contract: underdetermined system; free entries:";
        for (std::size_t u = 0; u < num_unknowns; ++u)
            if (!solved[u])
                os << " " << pair_witness(m, unknown_pair[u].first, unknown_pair[u].second);
        throw std::runtime_error(os.str());
    }

    // Consistency of every equation against the solved values.
    for (const Equation& eq : eqs) {
        Frac acc;
        for (const auto& [u, coeff] : eq) acc = acc + Frac{coeff, LaurentPoly{1}} * value[u];
        if (!acc.is_zero()) {
            std::ostringstream os;
            os << "gram_from_contract: inconsistent system at equation with entries";
            for (const auto& [u, coeff] : eq)
                os << " " << pair_witness(m, unknown_pair[u].first, unknown_pair[u].second);
            throw std::runtime_error(os.str());
        }
    }

    // Every entry must clear its denominator into Z[v,v^-1].
    GramMatrix g{PolyMatrix(dim), GramMatrix::Provenance::ContractSolved};
    for (std::size_t u = 0; u < num_unknowns; ++u) {
        value[u].normalize();
        auto q = value[u].num.divide_exact(value[u].den);
        if (!q)
            throw std::runtime_error(
                "gram_from_contract: entry does not clear denominators at " +
                pair_witness(m, unknown_pair[u].first, unknown_pair[u].second));
        g.entries.at(unknown_pair[u].first, unknown_pair[u].second) = *q;
        g.entries.at(unknown_pair[u].second, unknown_pair[u].first) = *q;
    }
    return g;
}

VerificationReport check_string_norms(const AdjointModule& m, const GramMatrix& gram,
                                      const std::string& scope) {
    const CartanDatum& d = m.datum();
    const RootSystem& rs = m.roots();
    const std::size_t n = d.rank();
    VerificationReport rep;
    CheckResult c{"string_norm_recursion", scope, 0, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const int di = d.v_exponent(i);
        const Weight ip = Weight::simple_root(n, i);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            RootString s = rs.string_at(r, i);
            if (s.q != 0 || s.p < 1) continue;
            const Weight& alpha = rs.roots()[r];
            for (int k = 0; k < s.p; ++k) {
                ++c.instances_checked;
                std::size_t zk = rs.index_of(alpha + k * ip);
                std::size_t zk1 = rs.index_of(alpha + (k + 1) * ip);
                LaurentPoly lhs = (LaurentPoly{1} - LaurentPoly::power_of_v(di * (-2 * k - 2))) *
                                  gram.entries.at(zk1, zk1);
                LaurentPoly rhs =
                    (LaurentPoly{1} - LaurentPoly::power_of_v(di * (-2 * s.p + 2 * k))) *
                    gram.entries.at(zk, zk);
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "i=" << i + 1 << " alpha=" << alpha.str() << " k=" << k << ": "
                       << lhs.str() << " != " << rhs.str();
                    c.failures.push_back(os.str());
                }
            }
        }
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

VerificationReport check_bar_compatibility(const AdjointModule& m, const std::string& scope) {
    const std::size_t n = m.datum().rank();
    VerificationReport rep;
    CheckResult c{"bar_invariant_entries", scope, 0, {}};
    auto scan = [&](const PolyMatrix& mat, const std::string& label) {
        for (std::size_t r = 0; r < mat.dim(); ++r)
            for (std::size_t cc = 0; cc < mat.dim(); ++cc) {
                const LaurentPoly& p = mat.at(r, cc);
                if (p.is_zero()) continue;
                ++c.instances_checked;
                if (!(p.bar() == p))
                    c.failures.push_back(label + " entry (" + m.label_of(r) + "," +
                                         m.label_of(cc) + ") = " + p.str());
            }
    };
    for (std::size_t i = 0; i < n; ++i) {
        scan(m.E(i), "E" + std::to_string(i + 1));
        scan(m.F(i), "F" + std::to_string(i + 1));
        for (unsigned k = 2; k <= 4; ++k) {
            scan(m.E_divided(i, k), "E" + std::to_string(i + 1) + "^(" + std::to_string(k) + ")");
            scan(m.F_divided(i, k), "F" + std::to_string(i + 1) + "^(" + std::to_string(k) + ")");
        }
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

VerificationReport check_form_adjunction(const AdjointModule& m, const GramMatrix& gram,
                                         const std::string& scope) {
    const CartanDatum& d = m.datum();
    const std::size_t dim = m.dim();
    VerificationReport rep;
    CheckResult ce{"form_adjunction_E", scope, 0, {}};
    CheckResult cf{"form_adjunction_F", scope, 0, {}};
    for (std::size_t i = 0; i < d.rank(); ++i) {
        const int di = d.v_exponent(i);
        const PolyMatrix E = m.E(i), F = m.F(i);
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t bp = 0; bp < dim; ++bp) {
                LaurentPoly lhsE, rhsE, lhsF, rhsF;
                for (std::size_t c = 0; c < dim; ++c) {
                    int pair = static_cast<int>(d.pairing(i, m.weight_of(c)));
                    if (!E.at(c, b).is_zero())
                        lhsE += E.at(c, b) * gram.entries.at(c, bp);
                    if (!F.at(c, bp).is_zero())
                        rhsE += LaurentPoly::power_of_v(di * (1 + pair)) * F.at(c, bp) *
                                gram.entries.at(b, c);
                    if (!F.at(c, b).is_zero())
                        lhsF += F.at(c, b) * gram.entries.at(c, bp);
                    if (!E.at(c, bp).is_zero())
                        rhsF += LaurentPoly::power_of_v(di * (1 - pair)) * E.at(c, bp) *
                                gram.entries.at(b, c);
                }
                ++ce.instances_checked;
                if (!(lhsE == rhsE))
                    ce.failures.push_back("i=" + std::to_string(i + 1) + " " +
                                          pair_witness(m, b, bp) + ": " + lhsE.str() +
                                          " != " + rhsE.str());
                ++cf.instances_checked;
                if (!(lhsF == rhsF))
                    cf.failures.push_back("i=" + std::to_string(i + 1) + " " +
                                          pair_witness(m, b, bp) + ": " + lhsF.str() +
                                          " != " + rhsF.str());
            }
    }
    rep.checks = {ce, cf};
    rep.sort();
    return rep;
}

} // namespace qadj
