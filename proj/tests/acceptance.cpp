// Acceptance suite: one PASS/FAIL line per criterion.
#include "exfeec/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace exfeec;

namespace {
// Every comparison below is exact (rational or Q(√m) equality, exact ranks).
constexpr const char* kTolerance = "exact";

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Tally {
    std::size_t passed = 0, failed = 0;
    std::string first_witness;
    void add(const VerificationReport& r) {
        if (r.pass) {
            ++passed;
        } else {
            ++failed;
            if (first_witness.empty()) first_witness = r.statement + ": " + r.witness;
        }
    }
    Outcome outcome() const {
        Outcome o;
        o.pass = failed == 0 && passed > 0;
        o.detail = std::to_string(passed) + " cases pass, " + std::to_string(failed) + " fail";
        if (!first_witness.empty()) o.detail += "; first failure " + first_witness.substr(0, 300);
        return o;
    }
};

SuiteConfig base_config(std::vector<std::string> statements) {
    SuiteConfig c;
    c.max_n = 3;
    c.max_r = 3;
    c.statements = std::move(statements);
    return c;
}

Tally run(const SuiteConfig& c, const std::function<bool(const VerificationReport&)>& keep = {}) {
    Tally t;
    run_suite(c, [&](const VerificationReport& r) {
        if (!keep || keep(r)) t.add(r);
    });
    return t;
}

Outcome c1() {
    auto c = base_config({"hodge.involution", "star_T.involution"});
    c.simplex_source = "random-rational";
    c.random_simplices = 5;
    return run(c).outcome();
}

Outcome c2() { return run(base_config({"ring_star.iso"})).outcome(); }

Outcome c3() { return run(base_config({"ring_star.twice"})).outcome(); }

Outcome c4() {
    auto c = base_config({"star_T.affine_invariance"});
    c.simplex_source = "random-rational";
    return run(c).outcome();
}

Outcome c5() {
    json j = counterexample_report();
    Outcome o;
    o.pass = counterexample_ok(j);
    o.detail = "E- = " + j["trimmed_extension"]["extension_unicode"].get<std::string>() +
               " in P2: " + (j["trimmed_extension"]["in_P2Lambda1"].get<bool>() ? "yes" : "no") +
               "; kappa_v1 E = " + j["full_extension"]["koszul_v1_unicode"].get<std::string>() +
               " in P3: " + (j["full_extension"]["koszul_in_P3Lambda0"].get<bool>() ? "yes" : "no");
    return o;
}

Outcome c6() {
    auto c = base_config({"bubble.roundtrip"});
    c.families = {Family::Full};
    Outcome o = run(c).outcome();
    o.detail = "roundtrip " + o.detail;
    const auto T = IncreasingMap::interval(0, 2);
    PolyForm w = wedge(PolyForm::lambda(T, 0), whitney(T, IncreasingMap{1, 2}));
    auto W = bubble_decompose(w);
    const PolyForm& on02 = W.components.at(IncreasingMap{0, 2});
    const PolyForm& on01 = W.components.at(IncreasingMap{0, 1});
    const bool stated = on02 == PolyForm::constant(IncreasingMap{0, 2}, 1) && on01 == PolyForm::constant(IncreasingMap{0, 1}, -1);
    o.pass = o.pass && stated;
    o.detail += "; lambda0 phi12 components: (0,2) -> " + on02.str() + ", (0,1) -> " + on01.str() +
                " (expected +1 on (0,2), -1 on (0,1))";
    return o;
}

Outcome c7() {
    auto c = base_config({"dot_extend.consistency"});
    c.min_n = 3;
    return run(c).outcome();
}

Outcome c8() {
    return run(base_config({"decomposition.geometric"}), [](const VerificationReport& r) {
               return r.statement == "decomposition.full" || r.statement == "decomposition.trimmed";
           })
        .outcome();
}

Outcome c9() {
    return run(base_config({"decomposition.geometric"}),
               [](const VerificationReport& r) { return r.statement == "decomposition.corollary"; })
        .outcome();
}

Outcome c10() { return run(base_config({"two_cell.continuity"})).outcome(); }

Outcome c11() {
    auto c = base_config({"inner.dual_unisolvence"});
    c.max_r = -1;
    return run(c).outcome();
}

Outcome c12() {
    SuiteConfig c;
    c.max_n = 2;
    c.seed = 424242;
    auto once = [&] {
        std::string s;
        run_suite(c, [&](const VerificationReport& r) { s += to_json(r).dump() + "\n"; });
        return s;
    };
    const std::string a = once(), b = once();
    Outcome o;
    o.pass = !a.empty() && a == b;
    o.detail = std::to_string(a.size()) + " bytes per run, " + (a == b ? "identical" : "different");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "star involutions (coordinate forms n<=4, 5 random simplices n<=3)", c1},
    {2, "isomorphism sweeps, full and trimmed, n<=3, r<=3", c2},
    {3, "ring star twice equals signed bubble multiple", c3},
    {4, "affine invariance of star_T and ring star", c4},
    {5, "legacy extension counterexamples", c5},
    {6, "bubble bijection and worked example", c6},
    {7, "consistency of the unified extension on the tetrahedron", c7},
    {8, "geometric decompositions, both families", c8},
    {9, "corollary components equal the decomposition components", c9},
    {10, "two-cell trace continuity", c10},
    {11, "dual unisolvence and positive Gram matrices", c11},
    {12, "byte-identical reports for identical seeds", c12},
};
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
                  << " [tolerance " << kTolerance << "] " << o.detail << "\n";
    }
    return all ? 0 : 1;
}
