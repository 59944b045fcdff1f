// Acceptance suite: every criterion is exercised end to end through the CLI
// binary and prints one PASS/FAIL line.  The process exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli_runner.hpp"

using Json = nlohmann::ordered_json;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string label;
    bool ok = true;
    std::vector<std::string> problems;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (problems.size() < 8) problems.push_back(what);
        }
    }
};

void run_criterion(int number, const std::string& label, double time_budget_s,
                   const std::function<void(Criterion&)>& body) {
    Criterion c{number, label, true, {}};
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_budget_s > 0 && elapsed > time_budget_s)
        c.expect(false, "time budget " + std::to_string(time_budget_s) + "s exceeded");
    std::printf("%s  %2d  %s  (%.2fs)\n", c.ok ? "PASS" : "FAIL", number, label.c_str(), elapsed);
    if (!c.ok) {
        ++failures;
        for (const auto& p : c.problems) std::printf("          - %s\n", p.c_str());
    }
    std::fflush(stdout);
}

Json run_json(Criterion& c, const std::vector<std::string>& args, const std::string& stdin_data = "") {
    cli::Result r = cli::run(args, stdin_data);
    if (r.code != 0) {
        std::string cmd;
        for (const auto& a : args) cmd += a + " ";
        c.expect(false, "cli exited " + std::to_string(r.code) + " for: " + cmd +
                            (r.err.empty() ? "" : (" [" + r.err.substr(0, 200) + "]")));
        return Json::object();
    }
    return Json::parse(r.out);
}

std::string gen_poset(Criterion& c, const std::vector<std::string>& gen_args) {
    cli::Result r = cli::run(gen_args);
    c.expect(r.code == 0, "poset generation failed");
    return r.out;
}

std::vector<std::string> words_over(const std::string& alphabet, int length) {
    std::vector<std::string> out{""};
    for (int k = 0; k < length; ++k) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char ch : alphabet) next.push_back(w + ch);
        out = std::move(next);
    }
    return out;
}

void check_suite(Criterion& c, const std::string& suite, int cases, long long min_cases) {
    Json doc = run_json(c, {"check", "--suite", suite, "--cases", std::to_string(cases), "--seed",
                            "20240801"});
    if (doc.empty()) return;
    const Json& s = doc["suites"][0];
    c.expect(s["cases"].get<long long>() >= min_cases,
             suite + ": ran " + s["cases"].dump() + " cases, need >= " + std::to_string(min_cases));
    c.expect(s["failures"].get<long long>() == 0,
             suite + ": " + s["failures"].dump() + " failures" +
                 (s.contains("failure_messages") ? " e.g. " + s["failure_messages"][0].dump() : ""));
}

} // namespace

int main() {
    const std::string fx = cli::fixture_dir();

    run_criterion(1, "interval gldim 0 for every A_n orientation, n = 1..6", 10, [](Criterion& c) {
        for (int n = 1; n <= 6; ++n)
            for (const std::string& w : words_over("rl", n - 1)) {
                std::string poset = gen_poset(
                    c, {"gen", "--family", "A", "--n", std::to_string(n), "--orient",
                        w.empty() ? "equi" : w});
                Json doc = run_json(c, {"gldim", "-", "--interval"}, poset);
                c.expect(doc["interval_gldim"] == 0,
                         "A_" + std::to_string(n) + "(" + w + ") gldim " +
                             doc["interval_gldim"].dump());
            }
    });

    run_criterion(2, "interval gldim 1 for all 8 D_4 orientations", 10, [](Criterion& c) {
        for (const std::string& w : words_over("io", 3)) {
            std::string poset = gen_poset(c, {"gen", "--family", "D4", "--orient", w});
            Json doc = run_json(c, {"gldim", "-", "--interval"}, poset);
            c.expect(doc["interval_gldim"] == 1,
                     "D_4(" + w + ") gldim " + doc["interval_gldim"].dump());
        }
    });

    run_criterion(3, "the worked D_4 module: cover, syzygy, resdim", 0, [&](Criterion& c) {
        Json cover = run_json(c, {"cover", fx + "/d4_M.json"});
        c.expect(cover["summands"] == Json::parse(R"({"2,3": 1, "3,4": 1, "1,2,3,4": 1})"),
                 "cover summands " + cover["summands"].dump());
        for (const char* key : {"pointwise_surjective", "summands_injective", "support_equal",
                                "right_approximation", "right_minimal"})
            c.expect(cover["certificates"][key] == true, std::string("certificate ") + key);
        Json res = run_json(c, {"resolve", fx + "/d4_M.json"});
        c.expect(res["length"] == 1, "resolution length " + res["length"].dump());
        c.expect(res["terms"][1] == Json::parse(R"({"2,3,4": 1})"),
                 "syzygy term " + res["terms"][1].dump());
        Json dim = run_json(c, {"resdim", fx + "/d4_M.json"});
        c.expect(dim["interval_resdim"] == 1, "resdim " + dim["interval_resdim"].dump());
    });

    run_criterion(4, "C(m,l): interval = indecomposable = string+1 counts, gldim 0", 60,
                  [](Criterion& c) {
        for (int m = 1; m <= 7; ++m)
            for (int l = 1; m + l <= 8; ++l) {
                long long expected =
                    (static_cast<long long>(m) * m + 4ll * m * l + static_cast<long long>(l) * l +
                     5ll * m + 5ll * l + 6) / 2;
                std::string poset = gen_poset(c, {"gen", "--family", "C", "--m", std::to_string(m),
                                                  "--l", std::to_string(l)});
                Json iv = run_json(c, {"intervals", "-"}, poset);
                c.expect(iv["count"].get<long long>() == expected,
                         "C(" + std::to_string(m) + "," + std::to_string(l) + ") intervals " +
                             iv["count"].dump() + " != " + std::to_string(expected));
                Json st = run_json(c, {"strings", "--m", std::to_string(m), "--l",
                                       std::to_string(l)});
                c.expect(st["string_count"].get<long long>() + 1 == expected,
                         "C(" + std::to_string(m) + "," + std::to_string(l) + ") strings " +
                             st["string_count"].dump());
                c.expect(st["indecomposable_count"].get<long long>() == expected,
                         "count formula mismatch");
                c.expect(st["bijection_onto_proper_intervals"] == true,
                         "string-interval bijection failed");
                if (m + l <= 5) {
                    Json gl = run_json(c, {"gldim", "-", "--interval"}, poset);
                    c.expect(gl["interval_gldim"] == 0,
                             "C(" + std::to_string(m) + "," + std::to_string(l) + ") gldim " +
                                 gl["interval_gldim"].dump());
                }
            }
    });

    run_criterion(5, "cover contract on 200 random modules over GF(2) and GF(3)", 0,
                  [](Criterion& c) { check_suite(c, "cover-contract", 100, 200); });

    run_criterion(6, "brute-force oracle equivalence on 100 random modules", 0,
                  [](Criterion& c) { check_suite(c, "oracle", 100, 100); });

    run_criterion(7, "convex invariance of resolutions on 50 random triples", 0,
                  [](Criterion& c) { check_suite(c, "convex-invariance", 50, 50); });

    run_criterion(8, "support reduction: identical terms, never more hom solves", 0,
                  [&](Criterion& c) {
        Json on = run_json(c, {"resolve", fx + "/d4_M.json"});
        Json off = run_json(c, {"resolve", fx + "/d4_M.json", "--no-reduce-support"});
        c.expect(on["terms"] == off["terms"], "fixture terms differ with --no-reduce-support");
        c.expect(on["hom_solves"].get<long long>() <= off["hom_solves"].get<long long>(),
                 "reduced run used more hom solves (" + on["hom_solves"].dump() + " > " +
                     off["hom_solves"].dump() + ")");
        check_suite(c, "support-reduction", 40, 40);
    });

    run_criterion(9, "gldim monotonicity on 50 random full subposets", 0,
                  [](Criterion& c) { check_suite(c, "monotonicity", 50, 50); });

    run_criterion(10, "classifier matches gldim == 0 on corpus + 100 random posets", 600,
                  [](Criterion& c) { check_suite(c, "classification", 100, 150); });

    run_criterion(11, "classical gldim 2 and 3 for the stacked-diamond pair", 0, [&](Criterion& c) {
        for (const std::string field : {"2", "3"}) {
            Json p = run_json(c, {"gldim", fx + "/igusa_p.json", "--projective", "--field", field});
            c.expect(p["projective_gldim"] == 2,
                     "GF(" + field + ") gldim(P) = " + p["projective_gldim"].dump());
            Json pp = run_json(c, {"gldim", fx + "/igusa_p_prime.json", "--projective", "--field",
                                   field});
            c.expect(pp["projective_gldim"] == 3,
                     "GF(" + field + ") gldim(P') = " + pp["projective_gldim"].dump());
        }
    });

    run_criterion(12, "AR translate anchors on the worked D_4 orientation", 0, [&](Criterion& c) {
        std::string poset = gen_poset(c, {"gen", "--family", "D4", "--orient", "ioo"});
        Json t1 = run_json(c, {"tau", "-", "--interval", "1,3", "--isomorphic-to",
                               fx + "/d4_M.json"}, poset);
        c.expect(t1["isomorphic_to_file"] == "yes",
                 "tau(k_{1,3}) vs M: " + t1["isomorphic_to_file"].dump());
        c.expect(t1["interval_decomposable"] == false, "tau(k_{1,3}) should not be interval");
        Json t2 = run_json(c, {"tau", "-", "--interval", "3", "--isomorphic-to-interval",
                               "1,2,3,4"}, poset);
        c.expect(t2["isomorphic_to_interval"] == "yes",
                 "tau(k_{3}) vs k_{1,2,3,4}: " + t2["isomorphic_to_interval"].dump());
    });

    std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures;
}
