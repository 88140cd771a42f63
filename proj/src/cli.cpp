#include "recur/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>
#include <variant>

#include <CLI11.hpp>

#include "recur/json_io.hpp"

namespace recur {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_inline(const std::string& arg) {
    const auto pos = arg.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && arg[pos] == '{';
}

nlohmann::json load_set_document(const std::string& arg) {
    return parse_json(looks_inline(arg) ? arg : read_file(arg), "set document");
}

std::string format_points(const PointSet& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.members().size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(s.members()[static_cast<size_t>(i)]);
    }
    return out + "]";
}

void emit(std::ostream& out, const Json& doc) {
    out << doc.dump() << "\n";
}

void print_verification(std::ostream& out, const VerificationReport& report, bool normalized) {
    out << std::left;
    out << std::setw(26) << "lhs (integral of n_E)" << report.lhs.str() << "\n";
    out << std::setw(26) << "rhs (mu of closure)" << report.rhs.str() << "\n";
    out << std::setw(26) << "equal" << (report.equal ? "yes" : "NO") << "\n";
    out << std::setw(26) << "invariant closure" << format_points(report.rhs_set) << "\n";
    if (normalized && report.normalized_lhs) {
        out << std::setw(26) << "normalized lhs" << report.normalized_lhs->str() << "\n";
    }
}

void print_series(std::ostream& out, const SeriesReport& report) {
    out << "mu(E) = " << report.mu_E.str() << "\n";
    out << std::left << std::setw(6) << "n" << std::setw(14) << "a_n" << std::setw(14) << "b_n"
        << "partial" << "\n";
    for (size_t i = 0; i < report.terms_a.size(); ++i) {
        out << std::left << std::setw(6) << i + 1 << std::setw(14) << report.terms_a[i].str()
            << std::setw(14) << report.terms_b[i].str() << report.partial_sums[i].str() << "\n";
    }
}

void print_tower(std::ostream& out, const Tower& tower) {
    for (const TowerColumn& column : tower.columns) {
        out << "column r=" << column.return_time << "  base " << format_points(column.base)
            << "\n";
        for (size_t k = 0; k < column.levels.size(); ++k) {
            out << "  level " << k << ": " << format_points(column.levels[k]) << "\n";
        }
    }
}

void print_distribution(std::ostream& out,
                        const std::vector<std::pair<long long, Rational>>& distribution) {
    out << std::left << std::setw(14) << "return_time" << "mass" << "\n";
    for (const auto& [k, mass] : distribution) {
        out << std::left << std::setw(14) << k << mass.str() << "\n";
    }
}

struct LoadedInstance {
    FiniteMeasureSpace space;
    Transformation map;
    PointSet set;
};

/// Loads the system and resolves the set argument; exchanges compile here.
LoadedInstance load_instance(const RunConfig& config) {
    ParsedSystem system = parse_system(read_file(config.system_path));
    if (auto* perm = std::get_if<System>(&system)) {
        PointSet e = config.set_arg
                         ? parse_point_set(load_set_document(*config.set_arg),
                                           perm->space.size())
                         : PointSet::full(perm->space.size());
        return LoadedInstance{std::move(perm->space), std::move(perm->map), std::move(e)};
    }
    const Iet& iet = std::get<Iet>(system);
    IntervalSet e = config.set_arg
                        ? parse_interval_set(load_set_document(*config.set_arg), iet.total())
                        : IntervalSet::full(iet.total());
    auto [compilation, cells] = compile_iet(iet, {e});
    return LoadedInstance{std::move(compilation.space), std::move(compilation.map),
                          std::move(cells.front())};
}

int run_verify(const RunConfig& config, std::ostream& out, const KacCheckFn& check) {
    LoadedInstance inst = load_instance(config);
    const VerificationReport report = check ? check(inst.space, inst.map, inst.set)
                                            : kac_check(inst.space, inst.map, inst.set);
    const bool with_normalized = config.normalize;
    if (config.output == RunConfig::Output::json) {
        emit(out, verification_to_json(report, with_normalized));
    } else {
        print_verification(out, report, with_normalized);
    }
    return report.equal ? kExitOk : kExitFalsified;
}

int run_series(const RunConfig& config, std::ostream& out) {
    LoadedInstance inst = load_instance(config);
    const SeriesReport report = series_terms(inst.space, inst.map, inst.set, config.horizon);
    if (config.output == RunConfig::Output::json) {
        emit(out, series_to_json(report));
    } else {
        print_series(out, report);
    }
    return kExitOk;
}

int run_tower(const RunConfig& config, std::ostream& out) {
    LoadedInstance inst = load_instance(config);
    const Tower tower = kakutani_tower(inst.space, inst.map, inst.set);
    if (config.output == RunConfig::Output::json) {
        emit(out, tower_to_json(tower));
    } else {
        print_tower(out, tower);
    }
    return kExitOk;
}

int run_dist(const RunConfig& config, std::ostream& out) {
    LoadedInstance inst = load_instance(config);
    const auto distribution = return_time_distribution(inst.space, inst.map, inst.set);
    if (config.output == RunConfig::Output::json) {
        emit(out, distribution_to_json(distribution));
    } else {
        print_distribution(out, distribution);
    }
    return kExitOk;
}

int run_induce(const RunConfig& config, std::ostream& out) {
    ParsedSystem system = parse_system(read_file(config.system_path));
    Json doc;
    if (auto* perm = std::get_if<System>(&system)) {
        PointSet e = config.set_arg
                         ? parse_point_set(load_set_document(*config.set_arg),
                                           perm->space.size())
                         : PointSet::full(perm->space.size());
        doc = induced_to_json(induced_map(perm->space, perm->map, e));
    } else {
        const Iet& iet = std::get<Iet>(system);
        IntervalSet e = config.set_arg
                            ? parse_interval_set(load_set_document(*config.set_arg), iet.total())
                            : IntervalSet::full(iet.total());
        doc = iet_to_json(induced_iet(iet, e));
    }
    if (config.output == RunConfig::Output::json) {
        emit(out, doc);
    } else {
        out << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int run_gen(const RunConfig& config, std::ostream& out) {
    System system = [&config] {
        if (config.kind == "cycle") {
            const Rational total =
                config.total ? Rational::parse(*config.total) : Rational(1);
            return make_cycle(static_cast<int>(config.n), total);
        }
        if (config.kind == "random_permutation") {
            return make_random_permutation(static_cast<int>(config.n), config.seed,
                                           config.max_denominator);
        }
        if (config.kind == "cat_map") {
            return make_cat_map(static_cast<int>(config.q));
        }
        throw BadParam("unknown generator kind '" + config.kind + "'");
    }();
    const Json doc = system_to_json(system.space, system.map);
    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary);
        if (!file) {
            throw ParseError("cannot open output file: " + *config.out_path);
        }
        file << doc.dump() << "\n";
    } else {
        emit(out, doc);
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err, const KacCheckFn& check) {
    try {
        switch (config.command) {
            case RunConfig::Command::verify:
                return run_verify(config, out, check);
            case RunConfig::Command::series:
                return run_series(config, out);
            case RunConfig::Command::tower:
                return run_tower(config, out);
            case RunConfig::Command::induce:
                return run_induce(config, out);
            case RunConfig::Command::dist:
                return run_dist(config, out);
            case RunConfig::Command::gen:
                return run_gen(config, out);
        }
        err << "error: unknown command\n";
        return kExitBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact return-time toolkit for finite measure-preserving systems"};
    app.require_subcommand(1);

    RunConfig config;

    const auto add_common = [&config](CLI::App* sub, bool with_set = true) {
        sub->add_option("--system", config.system_path, "system JSON file")->required();
        if (with_set) {
            sub->add_option("--set", config.set_arg,
                            "set: inline JSON or a file (default: the full space)");
        }
        sub->add_option("--output", [&config](const CLI::results_t& values) {
                            if (values[0] == "human") {
                                config.output = RunConfig::Output::human;
                            } else if (values[0] == "json") {
                                config.output = RunConfig::Output::json;
                            } else {
                                return false;
                            }
                            return true;
                        },
                        "output format: json (default) or human")
            ->type_name("FORMAT");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the return-time identity on a set");
    add_common(verify);
    verify->add_flag("--normalize", config.normalize,
                     "also report lhs divided by the total measure");

    CLI::App* series = app.add_subcommand("series", "series terms a_n, b_n and partial sums");
    add_common(series);
    series->add_option("--horizon", config.horizon,
                       "number of terms (default: the space size)");

    CLI::App* tower = app.add_subcommand("tower", "tower over the set keyed by return time");
    add_common(tower);

    CLI::App* induce = app.add_subcommand("induce", "first-return system on the set");
    add_common(induce);

    CLI::App* dist = app.add_subcommand("dist", "return-time distribution on the set");
    add_common(dist);

    CLI::App* gen = app.add_subcommand("gen", "generate a test system");
    gen->add_option("--kind", config.kind, "cycle | random_permutation | cat_map")->required();
    gen->add_option("--n", config.n, "number of points (cycle, random_permutation)");
    gen->add_option("--q", config.q, "grid order (cat_map)");
    gen->add_option("--seed", config.seed, "PRNG seed (random_permutation)");
    gen->add_option("--total", config.total, "total measure (cycle; default 1)");
    gen->add_option("--max-den", config.max_denominator,
                    "largest weight denominator (random_permutation)");
    gen->add_option("--out", config.out_path, "write the system here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    if (app.got_subcommand(verify)) {
        config.command = RunConfig::Command::verify;
    } else if (app.got_subcommand(series)) {
        config.command = RunConfig::Command::series;
    } else if (app.got_subcommand(tower)) {
        config.command = RunConfig::Command::tower;
    } else if (app.got_subcommand(induce)) {
        config.command = RunConfig::Command::induce;
    } else if (app.got_subcommand(dist)) {
        config.command = RunConfig::Command::dist;
    } else {
        config.command = RunConfig::Command::gen;
    }

    return run(config, out, err);
}

}  // namespace recur
