// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// usage: acceptance <path-to-cli-binary>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qadj/chevalley.hpp"
#include "qadj/verify.hpp"

using namespace qadj;

namespace {

int g_failed = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failed;
}

AdjointModule module(const std::string& name) {
    return AdjointModule(RootSystem::generate(CartanDatum::preset(name)));
}

const std::vector<std::string> kRelationPresets = {"A1", "A2", "A3", "A4", "B2", "B3",
                                                   "C3", "D4", "F4", "G2", "E6"};
const std::vector<std::string> kRankLe4Presets = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                                  "C2", "C3", "C4", "D4", "F4", "G2"};

// 1. all six defining-relation families hold as exact matrix identities
void criterion_relations() {
    std::string detail;
    for (const auto& name : kRelationPresets) {
        VerificationReport rep = check_relations(module(name), name);
        if (!rep.all_passed()) detail += name + " ";
    }
    report(1, "defining relations on the module, exact, " +
                  std::to_string(kRelationPresets.size()) + " presets",
           detail.empty(), detail);
}

// 2. every entry of E_i, F_i and divided powers k <= 4 lies in N[v,v^-1]
void criterion_positivity() {
    std::string detail;
    for (const auto& name : kRelationPresets) {
        AdjointModule m = module(name);
        for (std::size_t i = 0; i < m.datum().rank() && detail.empty(); ++i)
            for (unsigned k = 1; k <= 4; ++k)
                for (const PolyMatrix& g : {m.E_divided(i, k), m.F_divided(i, k)})
                    for (std::size_t r = 0; r < m.dim(); ++r)
                        for (std::size_t c = 0; c < m.dim(); ++c)
                            if (!g.at(r, c).is_nonneg() && detail.empty())
                                detail = name + " i=" + std::to_string(i + 1) +
                                         " k=" + std::to_string(k);
    }
    report(2, "generator and divided-power entries nonnegative, k <= 4", detail.empty(),
           detail);
}

// 3. [k]!_i E_i^{(k)} = E_i^k and the F analogue, k <= 4
void criterion_divided_powers() {
    std::string detail;
    for (const auto& name : kRelationPresets) {
        AdjointModule m = module(name);
        for (std::size_t i = 0; i < m.datum().rank(); ++i) {
            int d = m.datum().v_exponent(i);
            for (unsigned k = 1; k <= 4; ++k) {
                bool ok = q_factorial(static_cast<int>(k), d) * m.E_divided(i, k) ==
                              m.E(i).pow(k) &&
                          q_factorial(static_cast<int>(k), d) * m.F_divided(i, k) ==
                              m.F(i).pow(k);
                if (!ok && detail.empty())
                    detail = name + " i=" + std::to_string(i + 1) + " k=" + std::to_string(k);
            }
        }
    }
    report(3, "divided powers times [k]! recover plain powers, k <= 4", detail.empty(),
           detail);
}

// 4. the contract-solved Gram matrix equals the closed forms entrywise
void criterion_gram_oracles() {
    std::string detail;
    for (const std::string name : {"A1", "A2", "A3", "B2", "C3", "G2", "F4"}) {
        AdjointModule m = module(name);
        if (!(gram_closed_form(m).entries == gram_from_contract(m).entries))
            detail += name + " ";
    }
    report(4, "independent Gram routes agree on A1 A2 A3 B2 C3 G2 F4", detail.empty(),
           detail);
}

// 5. string-norm recursion, cross-multiplied, every string instance
void criterion_string_norms() {
    std::string detail;
    for (const std::string name : {"B2", "G2", "F4"}) {
        AdjointModule m = module(name);
        if (!check_string_norms(m, gram_closed_form(m), name).all_passed())
            detail += name + " ";
    }
    report(5, "string-norm recursion exact on B2 G2 F4 (p = 1, 2, 3)", detail.empty(),
           detail);
}

// 6. string facts (pairing identity, length bound, long-string placement,
//    endpoint lengths) exhaustively on all presets
void criterion_string_facts() {
    std::string detail;
    std::vector<std::string> presets = kRankLe4Presets;
    presets.insert(presets.end(), {"D5", "E6", "E7", "E8"});
    for (const auto& name : presets) {
        RootSystem rs = RootSystem::generate(CartanDatum::preset(name));
        if (!rs.verify_string_facts().all_passed()) detail += name + " ";
    }
    report(6, "root-string facts exhaustive on all presets through E8", detail.empty(),
           detail);
}

// 7. v = 1 specialization matches the integer pattern, and the closed-form
//    x_i/y_i matrices equal a truncated-exponential oracle mod p
void criterion_specialization() {
    std::string detail;
    for (const auto& name : kRankLe4Presets) {
        AdjointModule m = module(name);
        const RootSystem& rs = m.roots();
        std::size_t n = m.datum().rank();
        for (std::size_t i = 0; i < n; ++i) {
            // integer pattern for E_i at v = 1, built straight from strings
            auto e1 = specialize(m.E(i));
            std::vector<std::vector<long long>> want(m.dim(),
                                                     std::vector<long long>(m.dim(), 0));
            Weight ip = Weight::simple_root(n, i);
            for (std::size_t k = 0; k < rs.size(); ++k) {
                RootString s = rs.string_at(k, i);
                if (s.p > 0)
                    want[rs.index_of(rs.roots()[k] + ip)][k] = s.q + 1;
                else if (rs.roots()[k] == -ip)
                    want[m.t_basis_index(i)][k] = 1;
            }
            for (std::size_t j = 0; j < n; ++j) {
                long long c = m.datum().pairing(j, ip);
                want[rs.index_of(ip)][m.t_basis_index(j)] = c < 0 ? -c : c;
            }
            if (e1 != want && detail.empty())
                detail = name + " E" + std::to_string(i + 1) + " at v=1";

            // truncated exponential of the specialized nilpotent, over Q
            for (std::uint32_t p : {2u, 3u, 5u}) {
                PrimeField f(p);
                for (std::uint32_t z = 0; z < p && detail.empty(); ++z)
                    for (bool raising : {true, false}) {
                        auto e = specialize(raising ? m.E(i) : m.F(i));
                        FieldMatrix want_m(m.dim(), f);
                        std::vector<std::vector<long long>> pw(
                            m.dim(), std::vector<long long>(m.dim(), 0));
                        for (std::size_t r = 0; r < m.dim(); ++r) pw[r][r] = 1;
                        long long fact = 1;
                        std::uint32_t zk = 1;
                        for (int k = 0; k < 6; ++k) {
                            if (k > 0) {
                                fact *= k;
                                zk = f.mul(zk, f.reduce(z));
                                std::vector<std::vector<long long>> nx(
                                    m.dim(), std::vector<long long>(m.dim(), 0));
                                for (std::size_t r = 0; r < m.dim(); ++r)
                                    for (std::size_t t = 0; t < m.dim(); ++t)
                                        if (pw[r][t] != 0)
                                            for (std::size_t c = 0; c < m.dim(); ++c)
                                                nx[r][c] += pw[r][t] * e[t][c];
                                pw = std::move(nx);
                            }
                            for (std::size_t r = 0; r < m.dim(); ++r)
                                for (std::size_t c = 0; c < m.dim(); ++c) {
                                    if (pw[r][c] % fact != 0) {
                                        detail = name + " nonintegral exp term";
                                        break;
                                    }
                                    want_m.at(r, c) = f.add(
                                        want_m.at(r, c),
                                        f.mul(f.reduce(pw[r][c] / fact), zk));
                                }
                        }
                        FieldMatrix got = raising ? x_gen(m, i, z, f) : y_gen(m, i, z, f);
                        if (!(got == want_m) && detail.empty())
                            detail = name + (raising ? " x" : " y") + std::to_string(i + 1) +
                                     "(" + std::to_string(z) + ") mod " + std::to_string(p);
                    }
            }
        }
    }
    report(7, "v = 1 specialization and exponential oracle, rank <= 4, p in {2,3,5}",
           detail.empty(), detail);
}

// 8. one-parameter subgroup law, exhaustive over F_p
void criterion_one_param() {
    std::string detail;
    for (const auto& name : kRankLe4Presets) {
        AdjointModule m = module(name);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            PrimeField f(p);
            for (std::size_t i = 0; i < m.datum().rank(); ++i)
                if (!one_param_check(m, i, f, name).all_passed() && detail.empty())
                    detail = name + " p=" + std::to_string(p);
        }
    }
    report(8, "x_i(z) x_i(z') = x_i(z+z') exhaustive, p in {2,3,5,7}, rank <= 4 + G2",
           detail.empty(), detail);
}

// 9. BFS closure orders match the classical order formulas
void criterion_group_orders() {
    struct Case {
        const char* name;
        std::uint32_t p;
        std::uint64_t order;
    };
    std::string detail;
    for (const Case& c : {Case{"A1", 2, 6}, Case{"A1", 3, 12}, Case{"A2", 2, 168},
                          Case{"B2", 2, 720}, Case{"G2", 2, 12096}, Case{"A2", 3, 5616}}) {
        AdjointModule m = module(c.name);
        ClosureResult r = group_closure(chevalley_generators(m, PrimeField(c.p)));
        std::uint64_t classical =
            classical_order(c.name[0], c.name[1] - '0', c.p);
        if (r.exceeded || r.order != c.order || r.order != classical)
            detail += std::string(c.name) + "/F" + std::to_string(c.p) + " got " +
                      std::to_string(r.order) + " ";
    }
    report(9, "group orders by closure equal the classical formulas, six cases",
           detail.empty(), detail);
}

// 10. byte-identical CLI output across repeated identical invocations
void criterion_determinism(const std::string& cli) {
    auto run = [](const std::string& cmd) -> std::pair<int, std::string> {
        FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
        if (!pipe) return {-1, ""};
        std::string out;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        int status = pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    };
    std::string detail;
    for (const char* cmd :
         {" roots G2 --format json", " matrices A2 --format json",
          " verify B2 --suite all --format json", " gram C3 --source both --format json",
          " chevalley A1 --p 2 --order --format json"}) {
        auto a = run(cli + cmd), b = run(cli + cmd);
        if (a != b || a.first == -1) detail += std::string(cmd) + " ";
    }
    report(10, "byte-identical output across repeated identical invocations",
           detail.empty(), detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <cli-binary>\n";
        return 2;
    }
    criterion_relations();
    criterion_positivity();
    criterion_divided_powers();
    criterion_gram_oracles();
    criterion_string_norms();
    criterion_string_facts();
    criterion_specialization();
    criterion_one_param();
    criterion_group_orders();
    criterion_determinism(std::string("\"") + argv[1] + "\"");
    if (g_failed != 0) {
        std::cout << g_failed << " criteria failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
