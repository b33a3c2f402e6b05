// SPDX-License-Identifier: Apache-2.0
#include "exfeec/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace exfeec;

namespace {
constexpr int kUsage = 2;

struct Shape {
    int n = 2, k = 1, r = 1;
    std::string family = "full";
};

void add_shape(CLI::App* cmd, Shape& s) {
    cmd->add_option("--n", s.n, "simplex dimension (1..4)")->required();
    cmd->add_option("--k", s.k, "form degree")->required();
    cmd->add_option("--r", s.r, "polynomial degree")->required();
    cmd->add_option("--family", s.family, "full or trimmed")->check(CLI::IsMember({"full", "trimmed"}));
}

int print(const json& j, bool ok) {
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite element exterior calculus kernel on a single simplex"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_n, max_r;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite, one JSON line per case");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--max-n", max_n, "largest simplex dimension");
    verify->add_option("--max-r", max_r, "largest polynomial degree");
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--timing", timing, "include per-case seconds");

    Shape basis_s, gram_s, cell_s;
    auto* basis = app.add_subcommand("basis", "geometric decomposition basis table");
    add_shape(basis, basis_s);
    auto* gram = app.add_subcommand("gram", "Vandermonde and Gram matrices of the ring star duals");
    add_shape(gram, gram_s);
    auto* counter = app.add_subcommand("counterexample", "legacy extension examples on the tetrahedron");
    auto* two_cell = app.add_subcommand("two-cell", "continuity across the shared facet of two cells");
    add_shape(two_cell, cell_s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : load_config(config_path);
            if (seed) cfg.seed = *seed;
            if (max_n) cfg.max_n = *max_n;
            if (max_r) cfg.max_r = *max_r;
            if (timing) cfg.timing = true;
            if (cfg.max_n < cfg.min_n || cfg.max_n > 4) throw ConfigError("--max-n must lie in [min_n, 4]");
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw ConfigError("cannot write " + out_path);
            }
            std::ostream& out = out_path.empty() ? std::cout : file;
            std::size_t passed = 0, failed = 0;
            run_suite(cfg, [&](const VerificationReport& rep) {
                out << to_json(rep, cfg.timing).dump() << "\n";
                out.flush();
                (rep.pass ? passed : failed)++;
            });
            std::cerr << passed << " passed, " << failed << " failed\n";
            return failed == 0 ? 0 : 1;
        }
        if (*basis) {
            json t = basis_table(basis_s.n, basis_s.k, basis_s.r, parse_family(basis_s.family));
            return print(t, basis_table_ok(t));
        }
        if (*gram) {
            json t = gram_table(gram_s.n, gram_s.k, gram_s.r, parse_family(gram_s.family));
            return print(t, t.at("ok").get<bool>());
        }
        if (*counter) {
            json t = counterexample_report();
            return print(t, counterexample_ok(t));
        }
        if (*two_cell) {
            if (cell_s.n != 2 && cell_s.n != 3) throw std::invalid_argument("two-cell: --n must be 2 or 3");
            if (cell_s.k < 0 || cell_s.k > cell_s.n || cell_s.r < 1) throw std::invalid_argument("two-cell: need 0 <= k <= n, r >= 1");
            auto R = two_cell_continuity(two_cell_mesh(cell_s.n), cell_s.k, cell_s.r, parse_family(cell_s.family));
            json j = to_json(R);
            if (!R.witness.empty()) j["witness"] = R.witness;
            return print(j, R.ok());
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
