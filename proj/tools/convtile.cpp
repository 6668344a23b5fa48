// convtile - enumerate oriented convex sphere tilings, compute exact
// weighted counts, and verify the closed-form divisor-sum formulas and
// lattice identities. All values are exact rationals.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "convtile/report.hpp"

namespace {

using namespace convtile;

struct Budgets {
    int triangles = default_budget(3);
    int squares = default_budget(4);
    int hexagons = default_budget(6);
    int threads = 1;

    int for_gon(int gon) const {
        return gon == 3 ? triangles : (gon == 4 ? squares : hexagons);
    }
};

void load_config(const std::string& path, Budgets& b) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json cfg = json::parse(in);
    b.triangles = cfg.value("budget_triangles", b.triangles);
    b.squares = cfg.value("budget_squares", b.squares);
    b.hexagons = cfg.value("budget_hexagons", b.hexagons);
    b.threads = cfg.value("threads", b.threads);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start).count();
}

// Flat CSV rendering of the row-based reports.
void print_rows_csv(const json& rows, std::ostream& os) {
    if (rows.empty()) return;
    bool first = true;
    for (auto& [key, value] : rows[0].items()) {
        (void)value;
        os << (first ? "" : ",") << key;
        first = false;
    }
    os << "\n";
    for (const json& row : rows) {
        first = true;
        for (auto& [key, value] : row.items()) {
            (void)key;
            os << (first ? "" : ",");
            if (value.is_string()) os << value.get<std::string>();
            else os << value.dump();
            first = false;
        }
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and counting of convex sphere tilings"};
    app.require_subcommand(1);

    Budgets budgets;
    std::string config_path;
    std::string format = "json";
    bool timing = false;
    int threads_flag = 0;
    app.add_option("--config", config_path, "JSON config with budgets and thread count");
    app.add_option("--format", format, "output format: json, csv or maps")
        ->check(CLI::IsMember({"json", "csv", "maps"}));
    app.add_option("--threads", threads_flag, "worker threads for enumeration");
    app.add_flag("--timing", timing, "include elapsed times in reports");

    int gon = 3, tiles = 1, max_tiles = 1, order = 12, kk = 4;
    std::string engine = "generate";
    bool unoriented = false;

    auto* cmd_enum = app.add_subcommand("enumerate", "list tilings with a given tile count");
    cmd_enum->add_option("--gon", gon, "face size (3, 4 or 6)")->required()
        ->check(CLI::IsMember({3, 4, 6}));
    cmd_enum->add_option("--tiles", tiles, "number of tiles")->required();
    cmd_enum->add_option("--engine", engine, "generate or oracle")
        ->check(CLI::IsMember({"generate", "oracle"}));
    cmd_enum->add_flag("--oracle", "shorthand for --engine oracle");

    auto* cmd_weights = app.add_subcommand("weights", "weighted count for one tile number");
    cmd_weights->add_option("--gon", gon, "face size")->required()
        ->check(CLI::IsMember({3, 4, 6}));
    cmd_weights->add_option("--tiles", tiles, "number of tiles")->required();
    cmd_weights->add_flag("--unoriented", unoriented, "count unoriented classes");

    auto* cmd_verify = app.add_subcommand("verify", "enumerated vs closed-form counts");
    cmd_verify->add_option("--gon", gon, "face size")->required()
        ->check(CLI::IsMember({3, 4, 6}));
    cmd_verify->add_option("--max-tiles", max_tiles, "verify n = 1..max")->required();
    cmd_verify->add_flag("--unoriented", unoriented, "also check the halving identity");

    auto* cmd_lattice = app.add_subcommand("lattice-report", "Hermitian lattice identities");
    cmd_lattice->add_option("--k", kk, "cyclotomic index (3, 4 or 6)")
        ->check(CLI::IsMember({3, 4, 6}));

    auto* cmd_volumes = app.add_subcommand("volumes", "complex-hyperbolic volume checks");
    auto* cmd_fit = app.add_subcommand("fit-constants", "fit Eisenstein constants");
    cmd_fit->add_option("--gon", gon, "face size")->required()
        ->check(CLI::IsMember({3, 4, 6}));
    cmd_fit->add_option("--order", order, "series truncation order");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) load_config(config_path, budgets);
        if (threads_flag > 0) budgets.threads = threads_flag;

        auto start = std::chrono::steady_clock::now();

        if (*cmd_enum) {
            if (cmd_enum->count("--oracle")) engine = "oracle";
            std::vector<Tiling> tilings =
                engine == "oracle" ? brute_force(gon, tiles)
                                   : generate(gon, tiles, budgets.for_gon(gon), budgets.threads);
            if (format == "maps") {
                for (const Tiling& t : tilings) std::cout << to_interchange(t) << "\n";
            } else {
                json records = json::array();
                for (const Tiling& t : tilings) {
                    json rec;
                    rec["map"] = to_interchange(t);
                    std::string profile;
                    for (int mu : curvature_profile(t))
                        profile += (profile.empty() ? "" : ",") + std::to_string(mu);
                    rec["profile"] = "(" + profile + ")";
                    rec["aut_order"] = aut_order(t);
                    rec["weight"] = rat_str(weight(t));
                    records.push_back(rec);
                }
                json out;
                out["g"] = gon;
                out["n"] = tiles;
                out["engine"] = engine;
                out["count"] = tilings.size();
                out["tilings"] = records;
                if (timing) out["elapsed_ms"] = elapsed_ms(start);
                if (format == "csv") print_rows_csv(records, std::cout);
                else std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_weights) {
            std::vector<Tiling> tilings = generate(gon, tiles, budgets.for_gon(gon), budgets.threads);
            json row = counts_row(gon, tiles, tilings, unoriented);
            if (timing) row["elapsed_ms"] = elapsed_ms(start);
            if (format == "csv") print_rows_csv(json::array({row}), std::cout);
            else std::cout << row.dump(2) << "\n";
            return 0;
        }

        if (*cmd_verify) {
            if (max_tiles > budgets.for_gon(gon))
                throw UsageError("--max-tiles exceeds enumeration budget");
            json report = verify_report(gon, max_tiles, budgets.for_gon(gon),
                                        budgets.threads, unoriented);
            if (timing) report["elapsed_ms"] = elapsed_ms(start);
            if (format == "csv") print_rows_csv(report["rows"], std::cout);
            else std::cout << report.dump(2) << "\n";
            return report["all_pass"].get<bool>() ? 0 : 1;
        }

        if (*cmd_lattice) {
            json out;
            if (cmd_lattice->count("--k")) out = lattice_report(kk);
            else {
                out = json::array();
                for (int k : {3, 4, 6}) out.push_back(lattice_report(k));
            }
            if (timing && out.is_object()) out["elapsed_ms"] = elapsed_ms(start);
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*cmd_volumes) {
            json report = volumes_report(budgets.triangles, budgets.squares,
                                         budgets.hexagons, budgets.threads);
            if (timing) report["elapsed_ms"] = elapsed_ms(start);
            std::cout << report.dump(2) << "\n";
            return report["all_pass"].get<bool>() ? 0 : 1;
        }

        if (*cmd_fit) {
            json report = fit_report(gon, budgets.for_gon(gon), budgets.threads);
            // Zero-residual check of the fitted series beyond the fit window.
            std::vector<Rat> constants = golden_constants(gon);
            QSeries series = fitted_series(gon, constants, order);
            json residual_ok = true;
            for (int n = 1; n <= budgets.for_gon(gon); ++n) {
                Rat m = q_exponent(gon, n);
                if (m.get_den() != 1 || m > order) continue;
                if (series.at(static_cast<int>(m.get_num().get_si())) !=
                    closed_form_count(gon, n))
                    residual_ok = false;
            }
            report["series_matches_closed_form"] = residual_ok;
            if (timing) report["elapsed_ms"] = elapsed_ms(start);
            std::cout << report.dump(2) << "\n";
            bool ok = report["match"].get<bool>() && residual_ok.get<bool>();
            return ok ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
