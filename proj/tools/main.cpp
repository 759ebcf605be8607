#include <cstdio>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace cli = phonostat::cli;

namespace {

void add_corpus_options(CLI::App* sub, cli::RunConfig& config, bool with_fit_options,
                        bool with_holdout) {
    sub->add_option("--lexicon", config.lexicon_path, "pronunciation lexicon (word TAB phonemes)")
        ->required();
    sub->add_option("--authors", config.authors_path,
                    "CSV of text_id,author,path; relative paths resolve against the CSV")
        ->required();
    sub->add_option("--mode", config.modes,
                    "word modes to process: all, types, exclusive-types (repeatable)");
    if (with_fit_options) {
        sub->add_option("--beta-min", config.beta_min, "lower edge of the fit search range");
        sub->add_option("--beta-max", config.beta_max, "upper edge of the fit search range");
        sub->add_option("--tol", config.tol, "absolute tolerance of the fit search");
    }
    sub->add_option("-o,--out", config.out_dir, "output directory");
    sub->add_option("--format", config.format, "table format: json or csv");
    sub->add_option("--seed", config.seed, "random seed recorded for reproducibility");
    sub->add_option("--jobs", config.jobs, "worker threads (0 = hardware)");
    sub->add_option("--cache", config.cache_dir, "profile cache directory (default <out>/cache)");
    if (with_holdout)
        sub->add_option("--holdout", config.holdouts,
                        "text ids to test against every author's remaining texts (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phoneme rank-frequency statistics: profiling, fitting, distances, clustering"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file");

    cli::ModelArgs model_args;
    cli::RunConfig config;
    std::string command;

    CLI::App* model = app.add_subcommand(
        "model", "write the expected rank-frequency curve, its approximation and fluctuations");
    model->add_option("-n,--symbols", model_args.n, "number of categories")->required();
    model->add_option("-b,--beta", model_args.beta, "concentration parameter")->required();
    model->add_option("--columns", model_args.columns,
                      "subset of exact, approx, fluctuations (default all)");
    model->add_option("-o,--out", model_args.out_dir, "output directory");
    model->callback([&] { command = "model"; });

    CLI::App* profile =
        app.add_subcommand("profile", "tokenize texts and write phoneme count profiles");
    add_corpus_options(profile, config, false, false);
    profile->callback([&] { command = "profile"; });

    CLI::App* fit = app.add_subcommand("fit", "fit the concentration parameter per text");
    add_corpus_options(fit, config, true, false);
    fit->callback([&] { command = "fit"; });

    CLI::App* distance = app.add_subcommand("distance", "write pairwise distance tables");
    add_corpus_options(distance, config, false, false);
    distance->callback([&] { command = "distance"; });

    CLI::App* cluster = app.add_subcommand(
        "cluster", "author clustering margins, cross-mode scorecard and attribution");
    add_corpus_options(cluster, config, true, true);
    cluster->callback([&] { command = "cluster"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (command == "model")
            return cli::cmd_model(model_args);
        config.texts = cli::load_authors_csv(config.authors_path);
        cli::validate_config(config);
        if (command == "profile")
            return cli::cmd_profile(config);
        if (command == "fit")
            return cli::cmd_fit(config);
        if (command == "distance")
            return cli::cmd_distance(config);
        return cli::cmd_cluster(config);
    } catch (const cli::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
