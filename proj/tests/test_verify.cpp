#include "exfeec/verify.hpp"

#include <doctest.h>

#include <set>

using namespace exfeec;

namespace {
SuiteConfig small(std::vector<std::string> statements) {
    SuiteConfig c;
    c.max_n = 2;
    c.random_simplices = 2;
    c.statements = std::move(statements);
    return c;
}
}  // namespace

TEST_SUITE("verify_cli") {
    TEST_CASE("registry lists every statement once") {
        const std::set<std::string> expected{
            "hodge.involution", "hodge.wedge_inner", "simplex.oriented_volume", "koszul.pullback_commute",
            "whitney.properties", "trimmed.koszul_characterization", "legacy_h.signs", "star_T.bijection",
            "star_T.involution", "star_T.affine_invariance", "star_T.equilateral", "ring_star.cartesian_agreement",
            "ring_star.injective", "ring_star.twice", "ring_star.boundary_vanishing", "ring_star.iso",
            "inner.dual_unisolvence", "proxy.vector", "projector.identities", "legacy_extension.counterexamples",
            "legacy_extension.trace_identity", "bubble.worked_example", "bubble.roundtrip", "bubble.injective",
            "bubble.cross_trace", "dot_extend.trace_identity", "dot_extend.consistency", "dot_extend.koszul_commute",
            "decomposition.geometric", "decomposition.peeling", "two_cell.continuity"};
        std::set<std::string> names;
        for (const auto& s : registry()) {
            CHECK(names.insert(s.name).second);
            CHECK_FALSE(s.summary.empty());
        }
        CHECK(names == expected);
    }

    TEST_CASE("every statement produces cases under the default ranges") {
        SuiteConfig c;
        c.random_simplices = 1;
        std::map<std::string, int> per;
        for (const auto& st : registry()) per[st.name] = 0;
        for (const auto& st : registry()) {
            SuiteConfig one = c;
            one.statements = {st.name};
            per[st.name] = static_cast<int>(run_suite(one).size());
        }
        for (const auto& [name, count] : per) {
            INFO(name);
            CHECK(count > 0);
        }
    }

    TEST_CASE("a corrupted Hodge star is caught with a witness") {
        auto c = small({"hodge.involution"});
        c.fault = "hodge-sign";
        auto reps = run_suite(c);
        REQUIRE_FALSE(reps.empty());
        bool any_fail = false;
        for (const auto& r : reps)
            if (!r.pass) {
                any_fail = true;
                CHECK_FALSE(r.witness.empty());
            }
        CHECK(any_fail);
        c.fault.clear();
        for (const auto& r : run_suite(c)) CHECK(r.pass);
    }

    TEST_CASE("statements with no cases in range emit nothing") {
        auto c = small({"two_cell.continuity", "legacy_extension.counterexamples", "bubble.worked_example"});
        c.min_n = 1;
        c.max_n = 1;
        CHECK(run_suite(c).empty());
    }

    TEST_CASE("config validation") {
        CHECK_THROWS_AS(parse_config(json{{"bogus", 1}}), ConfigError);
        CHECK_THROWS_AS(parse_config(json{{"statements", {"nope"}}}), ConfigError);
        CHECK_THROWS_AS(parse_config(json{{"families", {"custom"}}}), ConfigError);
        CHECK_THROWS_AS(parse_config(json{{"max_n", 5}}), ConfigError);
        CHECK_THROWS_AS(parse_config(json{{"max_n", "three"}}), ConfigError);
        CHECK_THROWS_AS(parse_config(json::array()), ConfigError);
        auto c = parse_config(json{{"max_n", 2}, {"seed", 7}, {"statements", {"bubble."}}, {"families", {"trimmed"}}});
        CHECK(c.max_n == 2);
        CHECK(c.seed == 7);
        CHECK(c.families == std::vector<Family>{Family::Trimmed});
        for (const auto& r : run_suite(c)) CHECK(r.statement.rfind("bubble.", 0) == 0);
    }

    TEST_CASE("reports serialize in a fixed key order") {
        VerificationReport r;
        r.statement = "x";
        r.n = 2;
        r.k = 1;
        r.pass = false;
        r.witness = "w";
        r.seconds = 0.5;
        CHECK(to_json(r).dump() == R"({"statement":"x","n":2,"k":1,"seed":0,"verdict":"fail","witness":"w"})");
        CHECK(to_json(r, true).contains("seconds"));
    }

    TEST_CASE("seeded runs are reproducible and seeds differ per statement") {
        auto c = small({"ring_star.twice", "star_T.affine_invariance"});
        auto dump = [&] {
            std::string s;
            for (const auto& r : run_suite(c)) s += to_json(r).dump() + "\n";
            return s;
        };
        CHECK(dump() == dump());
        CHECK(statement_seed(1, "a") != statement_seed(1, "b"));
        Rng a(5), b(5);
        for (int i = 0; i < 20; ++i) CHECK(a.rational() == b.rational());
    }

    TEST_CASE("two-cell continuity and tables") {
        auto R = two_cell_continuity(two_cell_mesh(3), 1, 2, Family::Trimmed);
        CHECK(R.ok());
        CHECK(R.shared_checked > 0);
        CHECK(R.interior_checked > 0);
        CHECK_THROWS(two_cell_mesh(4));
        json t = basis_table(2, 0, 3, Family::Full);
        CHECK(basis_table_ok(t));
        CHECK(t["forms"].size() == 10);
        CHECK_THROWS_AS(basis_table(2, 3, 1, Family::Full), std::invalid_argument);
        CHECK(gram_table(2, 2, 0, Family::Full)["ok"].get<bool>());
    }

    TEST_CASE("unicode rendering") {
        CHECK(unicode_text("l1 l2 (phi23 + phi13)") == "λ₁λ₂(φ₂₃+φ₁₃)");
        CHECK(unicode_text("-1/3 * l0 l1 l2 l3") == "−(1/3)λ₀λ₁λ₂λ₃");
        CHECK(unicode_text("1 * l1 l2^2 ^ dl3") == "λ₁λ₂²dλ₃");
        CHECK(unicode_text("2 * dl1 ^ dl2") == "2dλ₁∧dλ₂");
    }
}
