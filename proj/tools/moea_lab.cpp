// moea-lab: command-line runner for the benchmark experiments.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <moea/moea.hpp>

int main(int argc, char** argv) {
    CLI::App app{"Multi-objective evolutionary algorithm laboratory"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_dir = "out";
    int threads = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::vector<std::string> overrides;

    CLI::App* run = app.add_subcommand("run", "Run one experiment from a spec file");
    run->add_option("--spec", spec_path, "Experiment spec file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Output directory (created if missing)");
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Override the spec's base_seed")
        ->each([&](const std::string&) { seed_set = true; });
    run->add_option("--override", overrides, "Override a spec entry, as key=value");

    CLI::App* list = app.add_subcommand("list-variants", "List the scheme x mutation variants");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const std::string& row : moea::list_variants())
            std::cout << row << "\n";
        return 0;
    }

    try {
        moea::ExperimentSpec spec = moea::parse_spec_file(spec_path);
        for (const std::string& entry : overrides) {
            const std::size_t eq = entry.find('=');
            if (eq == std::string::npos)
                throw moea::SpecError("--override expects key=value, got: " + entry);
            moea::apply_assignment(spec, entry.substr(0, eq), entry.substr(eq + 1));
        }
        if (seed_set)
            spec.base_seed = seed;

        const std::vector<std::filesystem::path> written =
            moea::run_experiment(spec, out_dir, threads);
        for (const std::filesystem::path& path : written)
            std::cout << path.string() << "\n";
        return 0;
    } catch (const std::exception& error) {
        std::cerr << "moea-lab: " << error.what() << "\n";
        return 1;
    }
}
