// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/extension.hpp"
#include "exfeec/json_io.hpp"
#include "exfeec/star.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace exfeec {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Small portable generator: mt19937_64 output mapped by hand, so streams do
// not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    int uniform(int lo, int hi);  // inclusive
    // p/q with |p| ≤ max_num, 1 ≤ q ≤ max_den
    Rational rational(int max_num = 8, int max_den = 8);

private:
    std::mt19937_64 gen_;
};

std::uint64_t statement_seed(std::uint64_t seed, const std::string& name);

// positively oriented, vertex coordinates with denominators ≤ 8
Simplex random_simplex(Rng& rng, int n);
// random combination of the basis of S with small coefficients
PolyForm random_element(Rng& rng, const Span& S);
// x -> A x + t with det A > 0
CartesianAffine<Rational> random_affine(Rng& rng, int n);

struct SuiteConfig {
    int min_n = 1;
    int max_n = 3;
    int max_r = -1;  // -1: 4 for n ≤ 2, 3 for n = 3, 2 for n ≥ 4
    std::uint64_t seed = 20240601;
    int random_simplices = 5;
    std::string simplex_source = "both";  // reference | random-rational | both
    std::vector<Family> families{Family::Full, Family::Trimmed};
    std::vector<std::string> statements;  // empty: all; entries ending in '.' select a group
    bool timing = false;
    std::string fault;  // test fixture: "hodge-sign" corrupts the Hodge star in hodge.involution

    int r_max(int n) const;
};

// Reads the keys of SuiteConfig from a JSON object; unknown keys are errors.
SuiteConfig parse_config(const json& j);
SuiteConfig load_config(const std::string& path);

struct VerificationReport {
    std::string statement;
    int n = -1, k = -1, r = -1;
    std::string family;
    std::string simplex;
    std::uint64_t seed = 0;
    bool pass = false;
    json detail = json::object();
    std::string witness;
    double seconds = -1;
};

json to_json(const VerificationReport& rep, bool timing = false);

struct Statement {
    std::string name;
    std::string summary;
    std::function<void(const SuiteConfig&, Rng&, const std::function<void(VerificationReport)>&)> run;
};

const std::vector<Statement>& registry();

// Runs the selected statements in registry order; each report is also passed to sink.
std::vector<VerificationReport> run_suite(const SuiteConfig& config,
                                          const std::function<void(const VerificationReport&)>& sink = {});

// Both legacy-extension examples on the tetrahedron with σ = (1,2,3).
json counterexample_report();
bool counterexample_ok(const json& report);

// λ-subscript rendering such as "λ₁λ₂(φ₂₃+φ₁₃)" of the text forms used above.
std::string unicode_text(const std::string& ascii);

struct TwoCellMesh {
    Simplex a, b;
    std::vector<int> a_labels, b_labels;  // mesh vertex number of each local vertex
};

// Two cells sharing a facet (n = 2, 3); the second cell's local order is not
// monotone in the mesh numbering.
TwoCellMesh two_cell_mesh(int n);

struct TwoCellReport {
    int n = 0, k = 0, r = 0;
    Family family = Family::Full;
    std::size_t shared_checked = 0, interior_checked = 0;
    bool shared_ok = true, interior_ok = true;
    std::string witness;
    bool ok() const { return shared_ok && interior_ok; }
};

TwoCellReport two_cell_continuity(const TwoCellMesh& mesh, int k, int r, Family family);
json to_json(const TwoCellReport& rep);

// per-σ basis of the geometric decomposition
json basis_table(int n, int k, int r, Family family);
bool basis_table_ok(const json& table);
json gram_table(int n, int k, int r, Family family);

}  // namespace exfeec
