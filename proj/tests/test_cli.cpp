// End-to-end checks of the command-line tool: exit codes, byte-identical
// determinism, and JSON output validity against the shipped schemas.
//
// usage: test_cli <path-to-cli-binary> <schema-dir>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

using json = nlohmann::json;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

// Minimal validator for the subset of JSON Schema the shipped schemas use:
// type (string or list of strings), required, properties, items, enum.
void validate(const json& schema, const json& inst, const std::string& path,
              std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object") return inst.is_object();
            if (t == "array") return inst.is_array();
            if (t == "string") return inst.is_string();
            if (t == "integer") return inst.is_number_integer();
            if (t == "number") return inst.is_number();
            if (t == "boolean") return inst.is_boolean();
            if (t == "null") return inst.is_null();
            return false;
        };
        const json& ty = schema["type"];
        bool ok = ty.is_array()
                      ? std::any_of(ty.begin(), ty.end(),
                                    [&](const json& t) { return matches(t.get<std::string>()); })
                      : matches(ty.get<std::string>());
        if (!ok) {
            errors.push_back(path + ": wrong type, got " + std::string(inst.type_name()));
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"])
            if (v == inst) ok = true;
        if (!ok) errors.push_back(path + ": value not in enum");
    }
    if (inst.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!inst.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key " + key.get<std::string>());
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (inst.contains(key)) validate(sub, inst[key], path + "." + key, errors);
    }
    if (inst.is_array() && schema.contains("items")) {
        std::size_t k = 0;
        for (const auto& el : inst)
            validate(schema["items"], el, path + "[" + std::to_string(k++) + "]", errors);
    }
}

json load_schema(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name + ".json");
    if (!in) {
        std::cerr << "missing schema: " << name << "\n";
        std::exit(2);
    }
    json j;
    in >> j;
    return j;
}

bool conforms(const json& schema, const std::string& text, const std::string& what) {
    json inst;
    try {
        inst = json::parse(text);
    } catch (const json::exception& e) {
        std::cout << "FAIL " << what << ": output is not JSON (" << e.what() << ")\n";
        ++g_failures;
        return false;
    }
    std::vector<std::string> errors;
    validate(schema, inst, "$", errors);
    for (const auto& e : errors) std::cout << "       schema violation: " << e << "\n";
    expect(errors.empty(), what + " validates against schema");
    return errors.empty();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: test_cli <cli-binary> <schema-dir>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::string schemas = argv[2];

    // --- exit codes ---------------------------------------------------
    expect(run(cli + " roots BogusType").exit_code == 1, "unknown preset exits 1");
    expect(run(cli + " verify").exit_code == 1, "missing argument exits 1");
    expect(run(cli + " chevalley A1 --p 4 --order").exit_code == 1, "composite p exits 1");

    std::string bad = write_temp("qadj_affine.json", "[[2,-2],[-2,2]]");
    expect(run(cli + " roots " + bad).exit_code == 2, "non-positive-definite datum exits 2");
    std::string garbage = write_temp("qadj_garbage.json", "not json at all");
    expect(run(cli + " roots " + garbage).exit_code == 2, "malformed datum file exits 2");

    RunResult ok_verify = run(cli + " verify A2 --suite all --format json");
    expect(ok_verify.exit_code == 0, "verify A2 --suite all exits 0");

    RunResult capped = run(cli + " chevalley A2 --p 3 --order --cap 10 --format json");
    expect(capped.exit_code == 4, "closure cap exits 4");

    // --- schema conformance -------------------------------------------
    json roots_schema = load_schema(schemas, "roots");
    json matrices_schema = load_schema(schemas, "matrices");
    json report_schema = load_schema(schemas, "report");
    json gram_schema = load_schema(schemas, "gram");
    json chevalley_schema = load_schema(schemas, "chevalley");

    RunResult roots_out = run(cli + " roots A2 --format json");
    expect(roots_out.exit_code == 0, "roots A2 exits 0");
    if (conforms(roots_schema, roots_out.out, "roots A2")) {
        json j = json::parse(roots_out.out);
        expect(j["num_roots"] == 6, "roots A2 reports 6 roots");
        expect(j["highest_root"] == json::array({1, 1}), "roots A2 highest root [1,1]");
        expect(j["string_facts"]["all_passed"] == true, "roots A2 string facts pass");
    }

    conforms(matrices_schema, run(cli + " matrices A2 --format json").out, "matrices A2");
    conforms(matrices_schema,
             run(cli + " matrices B2 --gen K:1,0 --format json").out, "matrices B2 K");
    conforms(matrices_schema,
             run(cli + " matrices A2 --gen E:1 --divided 2 --format json").out,
             "matrices A2 divided power");
    conforms(report_schema, ok_verify.out, "verify A2 report");
    if (json j = json::parse(ok_verify.out); true)
        expect(j["all_passed"] == true, "verify A2 all_passed");

    RunResult gram_out = run(cli + " gram B2 --source both --format json");
    expect(gram_out.exit_code == 0, "gram B2 exits 0");
    if (conforms(gram_schema, gram_out.out, "gram B2")) {
        json j = json::parse(gram_out.out);
        expect(j["match"] == true, "gram B2 routes match");
        expect(j["diff"].empty(), "gram B2 empty diff");
    }

    RunResult chev_out = run(cli + " chevalley A1 --p 2 --order --format json");
    expect(chev_out.exit_code == 0, "chevalley A1 exits 0");
    if (conforms(chevalley_schema, chev_out.out, "chevalley A1")) {
        json j = json::parse(chev_out.out);
        expect(j["order"] == 6, "chevalley A1/F_2 order 6");
        expect(j["matched_classical"] == true, "order matches classical formula");
    }
    conforms(chevalley_schema, capped.out, "capped chevalley output");
    if (json j = json::parse(capped.out); true)
        expect(j["order"].is_null() && j.contains("exceeded_cap"),
               "capped run reports null order and the cap");

    RunResult one_param = run(cli + " chevalley A2 --p 5 --check-one-param --format json");
    expect(one_param.exit_code == 0, "one-param check exits 0");
    conforms(chevalley_schema, one_param.out, "chevalley one-param output");

    // --- custom datum file --------------------------------------------
    std::string custom = write_temp("qadj_custom_a2.json", "{\"dot\": [[2,-1],[-1,2]]}");
    RunResult custom_out = run(cli + " roots " + custom + " --format json");
    expect(custom_out.exit_code == 0, "custom datum file accepted");
    if (custom_out.exit_code == 0)
        expect(json::parse(custom_out.out)["num_roots"] == 6, "custom datum generates A2 roots");

    // --- determinism ----------------------------------------------------
    for (const char* cmd :
         {" roots F4 --format json", " matrices A2 --format json",
          " verify G2 --suite all --format json", " gram A2 --source both --format json",
          " chevalley A1 --p 3 --order --format json", " roots G2", " verify B2"}) {
        RunResult a = run(cli + cmd), b = run(cli + cmd);
        expect(a.exit_code == b.exit_code && a.out == b.out,
               std::string("byte-identical reruns:") + cmd);
    }

    std::cout << (g_failures == 0 ? "ALL OK\n" : "FAILURES: " + std::to_string(g_failures) + "\n");
    return g_failures == 0 ? 0 : 1;
}
