// Command-line front end: construct root systems and operator matrices,
// run the verification suites, compare Gram-matrix routes, and build
// Chevalley groups over prime fields.
//
// Exit codes: 0 success, 1 usage error, 2 datum validation failure,
// 3 verification failure, 4 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qadj/chevalley.hpp"
#include "qadj/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qadj;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCap = 4;

struct CliError {
    int code;
    std::string message;
};

// Type spec: preset name ("A2", "G2", ...) or path to a JSON file holding a
// symmetric integer matrix (either a bare array-of-arrays or {"dot": ...}).
CartanDatum resolve_type(const std::string& spec) {
    if (!spec.empty() && std::isalpha(static_cast<unsigned char>(spec[0])) &&
        spec.find('.') == std::string::npos && spec.find('/') == std::string::npos) {
        try {
            return CartanDatum::preset(spec);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitUsage, std::string(e.what()) +
                                           "\nknown presets: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2"};
        }
    }
    std::ifstream in(spec);
    if (!in) throw CliError{kExitUsage, "cannot open datum file: " + spec};
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CliError{kExitValidation, "datum file is not valid JSON: " + std::string(e.what())};
    }
    if (j.is_object() && j.contains("dot")) j = j["dot"];
    if (!j.is_array()) throw CliError{kExitValidation, "datum must be a JSON matrix"};
    std::vector<std::vector<long long>> dot;
    for (const auto& row : j) {
        dot.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw CliError{kExitValidation, "datum entries must be integers"};
            dot.back().push_back(x.get<long long>());
        }
    }
    DatumValidation v = CartanDatum::validate(dot);
    if (!v.ok()) {
        std::string msg = "invalid Cartan datum:";
        for (const auto& s : v.issues) msg += "\n  - " + s;
        throw CliError{kExitValidation, msg};
    }
    return CartanDatum::from_dot(dot);
}

json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"check", c.name},
                          {"scope", c.scope},
                          {"instances_checked", c.instances_checked},
                          {"pass", c.passed()},
                          {"failures", c.failures}});
    return {{"all_passed", rep.all_passed()}, {"checks", checks}};
}

void print_report_text(const VerificationReport& rep, std::ostream& os) {
    for (const auto& c : rep.checks) {
        os << (c.passed() ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.scope.empty()) os << " [" << c.scope << "]";
        os << "  (" << c.instances_checked << " instances)\n";
        for (const auto& f : c.failures) os << "      witness: " << f << "\n";
    }
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json basis_legend(const AdjointModule& m) {
    json legend = json::array();
    for (std::size_t b = 0; b < m.dim(); ++b) legend.push_back(m.label_of(b));
    return legend;
}

void print_matrix_text(const AdjointModule& m, const PolyMatrix& mat, const std::string& label,
                       std::ostream& os) {
    os << label << " (dim " << mat.dim() << ")\n";
    std::size_t width = 1;
    for (std::size_t r = 0; r < mat.dim(); ++r)
        for (std::size_t c = 0; c < mat.dim(); ++c)
            width = std::max(width, mat.at(r, c).str().size());
    for (std::size_t r = 0; r < mat.dim(); ++r) {
        os << "  ";
        for (std::size_t c = 0; c < mat.dim(); ++c) {
            std::string s = mat.at(r, c).str();
            os << s << std::string(width - s.size() + 1, ' ');
        }
        os << "| " << m.label_of(r) << "\n";
    }
}

int cmd_roots(const std::string& type, const std::string& format) {
    CartanDatum d = resolve_type(type);
    RootSystem rs = RootSystem::generate(d);
    VerificationReport rep = rs.verify_string_facts();

    if (format == "json") {
        json roots = json::array(), pos = json::array();
        for (const auto& w : rs.roots()) roots.push_back(w.coords);
        for (std::size_t k = 0; k < rs.num_positive(); ++k) pos.push_back(rs.roots()[k].coords);
        json strings = json::array();
        for (std::size_t k = 0; k < rs.size(); ++k) {
            json row = json::array();
            for (std::size_t i = 0; i < d.rank(); ++i) {
                RootString s = rs.string_at(k, i);
                row.push_back({{"p", s.p}, {"q", s.q}});
            }
            strings.push_back(std::move(row));
        }
        json out = {{"type", type},
                    {"rank", d.rank()},
                    {"e", d.e()},
                    {"num_roots", rs.size()},
                    {"num_positive", rs.num_positive()},
                    {"highest_root", rs.highest_root().coords},
                    {"highest_root_height", rs.highest_root().height()},
                    {"roots", roots},
                    {"positive_roots", pos},
                    {"strings", strings},
                    {"string_facts", report_to_json(rep)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << type << ": |R| = " << rs.size() << ", |R+| = " << rs.num_positive()
                  << ", e = " << d.e() << "\n";
        std::cout << "highest root a0 = " << rs.highest_root().str()
                  << ", h(a0) = " << rs.highest_root().height() << "\n";
        std::cout << "roots (positive then mirrored negatives):\n";
        for (std::size_t k = 0; k < rs.size(); ++k) {
            const Weight& w = rs.roots()[k];
            std::cout << "  " << w.str() << (rs.is_short_root(k) ? "  short" : "  long");
            std::cout << "  strings(p,q):";
            for (std::size_t i = 0; i < d.rank(); ++i) {
                RootString s = rs.string_at(k, i);
                std::cout << " (" << s.p << "," << s.q << ")";
            }
            std::cout << "\n";
        }
        print_report_text(rep, std::cout);
    }
    return rep.all_passed() ? 0 : kExitVerification;
}

int cmd_matrices(const std::string& type, const std::string& gen, unsigned divided,
                 const std::string& format) {
    CartanDatum d = resolve_type(type);
    AdjointModule m(RootSystem::generate(d));

    std::vector<std::pair<std::string, PolyMatrix>> mats;
    auto parse_node = [&](const std::string& s) -> std::size_t {
        int node = std::stoi(s);
        if (node < 1 || static_cast<std::size_t>(node) > d.rank())
            throw CliError{kExitUsage, "node out of range: " + s};
        return static_cast<std::size_t>(node - 1);
    };
    if (gen.empty()) {
        for (std::size_t i = 0; i < d.rank(); ++i) {
            std::string suffix =
                divided > 1 ? "^(" + std::to_string(divided) + ")" : "";
            mats.emplace_back("E" + std::to_string(i + 1) + suffix, m.E_divided(i, divided));
            mats.emplace_back("F" + std::to_string(i + 1) + suffix, m.F_divided(i, divided));
        }
    } else {
        auto colon = gen.find(':');
        if (colon == std::string::npos)
            throw CliError{kExitUsage, "generator spec must be E:i, F:i or K:y1,..,yn"};
        std::string kind = gen.substr(0, colon), arg = gen.substr(colon + 1);
        if (kind == "E" || kind == "F") {
            std::size_t i = parse_node(arg);
            std::string suffix =
                divided > 1 ? "^(" + std::to_string(divided) + ")" : "";
            PolyMatrix mat = kind == "E" ? m.E_divided(i, divided) : m.F_divided(i, divided);
            mats.emplace_back(kind + std::to_string(i + 1) + suffix, std::move(mat));
        } else if (kind == "K") {
            std::vector<int> y;
            std::stringstream ss(arg);
            std::string part;
            while (std::getline(ss, part, ',')) y.push_back(std::stoi(part));
            if (y.size() != d.rank())
                throw CliError{kExitUsage, "K spec needs one integer per node"};
            mats.emplace_back("K[" + arg + "]", m.K(y));
        } else {
            throw CliError{kExitUsage, "unknown generator kind: " + kind};
        }
    }

    if (format == "json") {
        json out = {{"type", type}, {"dim", m.dim()}, {"basis", basis_legend(m)}};
        json arr = json::array();
        for (const auto& [label, mat] : mats)
            arr.push_back({{"label", label}, {"entries", matrix_to_json(mat)}});
        out["matrices"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [label, mat] : mats) print_matrix_text(m, mat, label, std::cout);
    }
    return 0;
}

int cmd_verify(const std::string& type, const std::string& suite, const std::string& format) {
    CartanDatum d = resolve_type(type);
    AdjointModule m(RootSystem::generate(d));
    VerificationReport rep;
    if (suite == "relations" || suite == "all") rep.append(check_relations(m, type));
    if (suite == "form" || suite == "all") {
        GramMatrix closed = gram_closed_form(m);
        GramMatrix solved = gram_from_contract(m);
        CheckResult eq{"gram_oracle_equality", type, 1, {}};
        if (!(closed.entries == solved.entries))
            eq.failures.push_back("closed-form and contract-solved Gram matrices differ");
        rep.checks.push_back(std::move(eq));
        rep.append(check_form_adjunction(m, closed, type));
    }
    if (suite == "strings" || suite == "all")
        rep.append(check_string_norms(m, gram_from_contract(m), type));
    if (suite == "bar" || suite == "all") rep.append(check_bar_compatibility(m, type));
    rep.append(m.roots().verify_string_facts());
    rep.sort();

    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report_text(rep, std::cout);
    return rep.all_passed() ? 0 : kExitVerification;
}

int cmd_gram(const std::string& type, const std::string& source, const std::string& format) {
    CartanDatum d = resolve_type(type);
    AdjointModule m(RootSystem::generate(d));
    std::optional<GramMatrix> closed, solved;
    if (source == "closed" || source == "both") closed = gram_closed_form(m);
    if (source == "contract" || source == "both") solved = gram_from_contract(m);

    bool match = true;
    if (closed && solved) match = closed->entries == solved->entries;

    if (format == "json") {
        json out = {{"type", type}, {"dim", m.dim()}, {"basis", basis_legend(m)}};
        if (closed) out["closed_form"] = matrix_to_json(closed->entries);
        if (solved) out["contract_solved"] = matrix_to_json(solved->entries);
        if (closed && solved) {
            out["match"] = match;
            json diff = json::array();
            if (!match)
                for (std::size_t r = 0; r < m.dim(); ++r)
                    for (std::size_t c = 0; c < m.dim(); ++c)
                        if (!(closed->entries.at(r, c) == solved->entries.at(r, c)))
                            diff.push_back({{"row", r},
                                            {"col", c},
                                            {"closed", closed->entries.at(r, c).str()},
                                            {"contract", solved->entries.at(r, c).str()}});
            out["diff"] = std::move(diff);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (closed) print_matrix_text(m, closed->entries, "Gram (closed form)", std::cout);
        if (solved) print_matrix_text(m, solved->entries, "Gram (contract solved)", std::cout);
        if (closed && solved)
            std::cout << (match ? "routes match exactly\n" : "ROUTES DIFFER\n");
    }
    return match ? 0 : kExitVerification;
}

int cmd_chevalley(const std::string& type, int p, bool order, bool check_one_param,
                  std::size_t cap, const std::string& format) {
    CartanDatum d = resolve_type(type);
    AdjointModule m(RootSystem::generate(d));
    PrimeField f = [&] {
        try {
            return PrimeField(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitUsage, e.what()};
        }
    }();

    json out = {{"type", type}, {"p", p}, {"dim", m.dim()}};
    VerificationReport rep;
    int rc = 0;

    if (check_one_param) {
        for (std::size_t i = 0; i < d.rank(); ++i)
            rep.append(one_param_check(m, i, f, type + " i=" + std::to_string(i + 1)));
        if (!rep.all_passed()) rc = kExitVerification;
    }
    if (order) {
        ClosureResult res = group_closure(chevalley_generators(m, f), cap);
        if (res.exceeded) {
            out["order"] = nullptr;
            out["exceeded_cap"] = cap;
            rc = kExitCap;
        } else {
            out["order"] = res.order;
            bool matched = false;
            if (std::isalpha(static_cast<unsigned char>(type[0])) && type.size() >= 2) {
                try {
                    matched = classical_order(std::toupper(static_cast<unsigned char>(type[0])),
                                              std::stoi(type.substr(1)),
                                              static_cast<std::uint64_t>(p)) == res.order;
                } catch (const std::exception&) {
                    matched = false;
                }
            }
            out["matched_classical"] = matched;
        }
    }

    if (format == "json") {
        if (check_one_param) out["one_param"] = report_to_json(rep);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "type " << type << " over F_" << p << ", dim " << m.dim() << "\n";
        if (order) {
            if (out.contains("exceeded_cap"))
                std::cout << "closure exceeded cap " << cap << " (partial, not an order)\n";
            else
                std::cout << "group order " << out["order"]
                          << (out["matched_classical"].get<bool>() ? " (matches classical formula)"
                                                                   : " (no classical match)")
                          << "\n";
        }
        if (check_one_param) print_report_text(rep, std::cout);
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum adjoint representation toolkit"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string type, format = "text";
    std::string gen, suite = "all", source = "both";
    unsigned divided = 1;
    int p = 0;
    bool want_order = false, want_one_param = false;
    std::size_t cap = 20000000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("type", type, "preset name (A2, G2, ...) or datum JSON path")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };
    CLI::App* roots = app.add_subcommand("roots", "root system, string tables, string facts");
    add_common(roots);
    CLI::App* matrices = app.add_subcommand("matrices", "generator matrices with basis legend");
    add_common(matrices);
    matrices->add_option("--gen", gen, "single generator: E:i, F:i or K:y1,..,yn");
    matrices->add_option("--divided", divided, "divided power k for E/F")->check(CLI::Range(1u, 8u));
    CLI::App* verify = app.add_subcommand("verify", "algebraic verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"relations", "form", "strings", "bar", "all"}));
    CLI::App* gram = app.add_subcommand("gram", "contravariant-form Gram matrix");
    add_common(gram);
    gram->add_option("--source", source, "closed | contract | both")
        ->check(CLI::IsMember({"closed", "contract", "both"}));
    CLI::App* chev = app.add_subcommand("chevalley", "Chevalley group over a prime field");
    add_common(chev);
    chev->add_option("--p", p, "prime field modulus")->required();
    chev->add_flag("--order", want_order, "BFS group order");
    chev->add_flag("--check-one-param", want_one_param, "exhaustive x_i(z)x_i(z')=x_i(z+z')");
    chev->add_option("--cap", cap, "closure element cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << (e.get_exit_code() == 0 ? "" : "usage error: ") << e.what() << "\n";
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (roots->parsed()) return cmd_roots(type, format);
        if (matrices->parsed()) return cmd_matrices(type, gen, divided, format);
        if (verify->parsed()) return cmd_verify(type, suite, format);
        if (gram->parsed()) return cmd_gram(type, source, format);
        if (chev->parsed())
            return cmd_chevalley(type, p, want_order, want_one_param, cap, format);
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
