#include <CLI11.hpp>

#include <memory>
#include <fstream>
#include <iostream>
#include <string>

#include "bench/config.hpp"
#include "bench/runners.hpp"
#include "bench/surface.hpp"

namespace {

struct CommandArgs {
    std::string config_path;
    std::string out_path;
    long long seed = -1;
    bool seed_set = false;
};

isfsf::bench::Config load_config(const CommandArgs& args) {
    auto cfg = isfsf::bench::Config::from_file(args.config_path);
    if (args.seed_set) cfg.set("seed", std::to_string(args.seed));
    return cfg;
}

void emit_report(const isfsf::bench::BenchmarkReport& report, const CommandArgs& args) {
    if (args.out_path.empty())
        report.write_csv(std::cout);
    else
        report.write_csv_file(args.out_path);
}

std::shared_ptr<CommandArgs> add_common_options(CLI::App* cmd) {
    auto args = std::make_shared<CommandArgs>();
    cmd->add_option("--config", args->config_path, "key-value config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args->out_path, "output CSV path (default: stdout)");
    cmd->add_option("--seed", args->seed, "override the config seed")
        ->each([args](const std::string&) { args->seed_set = true; });
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-kernel feature approximation benchmarks"};
    app.require_subcommand(1);

    auto* gram = app.add_subcommand("gram", "Gram-matrix reconstruction error per method");
    auto gram_args = add_common_options(gram);
    gram->callback([gram_args] {
        emit_report(isfsf::bench::run_gram_benchmark(load_config(*gram_args)), *gram_args);
    });

    auto* trunc = app.add_subcommand("truncation", "truncation error over a (D, R, l) grid");
    auto trunc_args = add_common_options(trunc);
    trunc->callback([trunc_args] {
        emit_report(isfsf::bench::run_truncation_curve(load_config(*trunc_args)), *trunc_args);
    });

    auto* regress = app.add_subcommand("regress", "mask-inpainting regression on a synthetic surface");
    auto regress_args = add_common_options(regress);
    regress->callback([regress_args] {
        emit_report(isfsf::bench::run_regression_benchmark(load_config(*regress_args)),
                    *regress_args);
    });

    auto* surface = app.add_subcommand("surface", "export the synthetic surface dataset as CSV");
    auto surface_args = add_common_options(surface);
    surface->callback([surface_args] {
        const auto cfg = load_config(*surface_args);
        const auto spec = isfsf::bench::surface_spec_from_config(cfg);
        const auto grid = isfsf::bench::generate_surface_grid(
            spec, static_cast<std::uint64_t>(cfg.get_int("seed", 1)));
        if (surface_args->out_path.empty()) {
            isfsf::bench::write_surface_csv(grid, std::cout);
        } else {
            std::ofstream out(surface_args->out_path);
            if (!out) throw std::runtime_error("cannot open output file: " + surface_args->out_path);
            isfsf::bench::write_surface_csv(grid, out);
        }
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
