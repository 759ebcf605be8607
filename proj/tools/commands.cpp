#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "phonostat/corpus/profile_json.hpp"
#include "phonostat/model/dirichlet.hpp"
#include "phonostat/stylometry/cluster.hpp"
#include "phonostat/stylometry/report.hpp"

#include "output.hpp"
#include "pipeline.hpp"

namespace phonostat::cli {

namespace {

void note_wrote(const std::string& path) {
    std::printf("wrote %s\n", path.c_str());
}

int report_text_errors(const RunConfig& config, const CorpusData& corpus) {
    int failures = 0;
    for (std::size_t i = 0; i < corpus.errors.size(); ++i) {
        if (corpus.errors[i].empty())
            continue;
        ++failures;
        std::fprintf(stderr, "error: %s: %s\n", config.texts[i].id.c_str(),
                     corpus.errors[i].c_str());
    }
    return failures;
}

std::vector<std::string> modes_or(const RunConfig& config, std::vector<std::string> fallback) {
    return config.modes.empty() ? std::move(fallback) : config.modes;
}

}  // namespace

int cmd_model(const ModelArgs& args) {
    std::set<std::string> want(args.columns.begin(), args.columns.end());
    for (const std::string& c : want)
        if (c != "exact" && c != "approx" && c != "fluctuations")
            throw ConfigError("unknown column: " + c + " (choose exact, approx, fluctuations)");
    if (want.empty())
        want = {"exact", "approx", "fluctuations"};
    if (args.n < 2)
        throw ConfigError("n must be >= 2");
    if (!(args.beta > 0.0))
        throw ConfigError("beta must be > 0");

    model::DirichletModel model(args.n, args.beta);
    std::optional<std::vector<double>> exact;
    std::optional<std::vector<double>> approx;
    if (want.count("exact"))
        exact = model::expected_spectrum(model).freqs();
    if (want.count("approx"))
        approx = model::approx_spectrum(model);

    int failures = 0;
    RecordTable table;
    table.columns.push_back("rank");
    if (exact)
        table.columns.push_back("f_exact");
    if (approx)
        table.columns.push_back("f_approx");
    if (want.count("fluctuations"))
        table.columns.push_back("epsilon");
    for (int r = 1; r <= args.n; ++r) {
        nlohmann::ordered_json row;
        row["rank"] = r;
        if (exact)
            row["f_exact"] = (*exact)[r - 1];
        if (approx)
            row["f_approx"] = (*approx)[r - 1];
        if (want.count("fluctuations")) {
            try {
                row["epsilon"] = model::relative_fluctuation_exact(model, r);
            } catch (const std::exception& e) {
                std::fprintf(stderr, "error: rank %d: %s\n", r, e.what());
                row["epsilon"] = nullptr;
                ++failures;
            }
        }
        table.rows.push_back(std::move(row));
    }
    note_wrote(write_records(args.out_dir, "model", "csv", table));
    return failures ? 1 : 0;
}

int cmd_profile(const RunConfig& config) {
    CorpusData corpus = load_corpus(config);

    RecordTable summary;
    summary.columns = {"text_id",       "author",         "words_total",
                       "phonemes_total", "words_distinct", "phonemes_distinct",
                       "coverage"};
    for (std::size_t i = 0; i < config.texts.size(); ++i) {
        if (!corpus.errors[i].empty())
            continue;
        const TextEntry& t = config.texts[i];
        const auto& all = corpus.all_profiles[i];
        const auto& types = corpus.type_profiles[i];
        note_wrote(write_json(config.out_dir, "profile_" + safe_name(t.id) + "_all",
                              corpus::profile_to_json(all)));
        note_wrote(write_json(config.out_dir, "profile_" + safe_name(t.id) + "_types",
                              corpus::profile_to_json(types)));
        nlohmann::ordered_json row;
        row["text_id"] = t.id;
        row["author"] = t.author;
        row["words_total"] = all.in_lexicon_tokens;
        row["phonemes_total"] = all.total;
        row["words_distinct"] = static_cast<std::int64_t>(all.word_types.size());
        row["phonemes_distinct"] = types.total;
        row["coverage"] = all.coverage();
        summary.rows.push_back(std::move(row));
    }
    note_wrote(write_records(config.out_dir, "profile_summary", config.format, summary));
    return report_text_errors(config, corpus) ? 1 : 0;
}

int cmd_fit(const RunConfig& config) {
    std::vector<std::string> modes = modes_or(config, {"all", "types"});
    for (const std::string& mode : modes)
        if (mode == "exclusive-types")
            throw ConfigError("fit supports the all and types modes; exclusive-types is pairwise");

    CorpusData corpus = load_corpus(config);
    RecordTable table;
    table.columns = {"text_id", "author", "mode", "beta", "ss_err_e7", "r_squared",
                     "grid_warning"};
    for (const std::string& mode : modes) {
        for (const TextFit& f : fit_corpus(config, corpus, mode)) {
            nlohmann::ordered_json row;
            row["text_id"] = f.id;
            row["author"] = f.author;
            row["mode"] = mode;
            row["beta"] = f.fit.beta_hat;
            row["ss_err_e7"] = f.fit.ss_err * 1e7;
            row["r_squared"] = f.fit.r_squared;
            row["grid_warning"] = f.fit.grid_warning;
            table.rows.push_back(std::move(row));
        }
    }
    note_wrote(write_records(config.out_dir, "fits", config.format, table));
    return report_text_errors(config, corpus) ? 1 : 0;
}

namespace {

void append_matrix_rows(RecordTable& table, const stylometry::DistanceMatrix& matrix,
                        const std::string& mode) {
    for (const auto& p : matrix.pairs()) {
        nlohmann::ordered_json row;
        row["text_i"] = p.text_i;
        row["text_j"] = p.text_j;
        row["rho0"] = p.rho0;
        row["rho1"] = p.rho1;
        row["mode"] = mode;
        table.rows.push_back(std::move(row));
    }
}

}  // namespace

int cmd_distance(const RunConfig& config) {
    if (config.texts.size() < 2)
        throw ConfigError("distance needs at least 2 texts");
    CorpusData corpus = load_corpus(config);
    if (report_text_errors(config, corpus))
        return 1;

    int failures = 0;
    for (const std::string& mode : modes_or(config, {"all", "types", "exclusive-types"})) {
        RecordTable table;
        table.columns = {"text_i", "text_j", "rho0", "rho1", "mode"};
        try {
            auto matrix = mode == "exclusive-types" ? exclusive_distances(config, corpus)
                                                    : aligned_distances(config, corpus, mode);
            append_matrix_rows(table, matrix, mode);
        } catch (const corpus::ProfileError& e) {
            std::fprintf(stderr, "error: %s distances unavailable: %s\n", mode.c_str(), e.what());
            ++failures;
            continue;
        }
        note_wrote(write_records(config.out_dir, "distances_" + mode, config.format, table));
    }
    return failures ? 1 : 0;
}

int cmd_cluster(const RunConfig& config) {
    std::map<std::string, std::string> author_of;
    std::set<std::string> authors;
    for (const TextEntry& t : config.texts) {
        author_of[t.id] = t.author;
        authors.insert(t.author);
    }
    if (authors.size() < 2)
        throw ConfigError("cluster needs at least 2 authors");

    CorpusData corpus = load_corpus(config);
    if (report_text_errors(config, corpus))
        return 1;

    std::map<std::string, double> beta_all;
    std::map<std::string, double> beta_types;
    for (const TextFit& f : fit_corpus(config, corpus, "all"))
        beta_all[f.id] = f.fit.beta_hat;
    for (const TextFit& f : fit_corpus(config, corpus, "types"))
        beta_types[f.id] = f.fit.beta_hat;

    auto all = aligned_distances(config, corpus, "all");
    auto types = aligned_distances(config, corpus, "types");
    std::optional<stylometry::DistanceMatrix> exclusive;
    try {
        exclusive = exclusive_distances(config, corpus);
    } catch (const corpus::ProfileError& e) {
        std::fprintf(stderr, "warning: exclusive-types distances unavailable: %s\n", e.what());
    }
    auto common = common_fraction_table(config, corpus);

    stylometry::ModeComparisonInputs inputs;
    inputs.beta_all = beta_all;
    inputs.beta_types = beta_types;
    inputs.distances_all = &all;
    inputs.distances_types = &types;
    inputs.distances_exclusive = exclusive ? &*exclusive : nullptr;
    inputs.common_fractions = &common;
    inputs.author_of = author_of;
    auto report = stylometry::mode_comparison_report(inputs);

    RecordTable margins;
    margins.columns = {"author", "mode", "z0", "z1", "b"};
    for (const auto& m : report.margins) {
        nlohmann::ordered_json row;
        row["author"] = m.author;
        row["mode"] = m.mode;
        row["z0"] = m.z0 ? nlohmann::ordered_json(*m.z0) : nlohmann::ordered_json(nullptr);
        row["z1"] = m.z1 ? nlohmann::ordered_json(*m.z1) : nlohmann::ordered_json(nullptr);
        row["b"] = m.b ? nlohmann::ordered_json(*m.b) : nlohmann::ordered_json(nullptr);
        margins.rows.push_back(std::move(row));
    }
    note_wrote(write_records(config.out_dir, "cluster_margins", config.format, margins));

    RecordTable fractions;
    fractions.columns = {"text_i", "text_j", "common_fraction"};
    const auto& ids = common.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            nlohmann::ordered_json row;
            row["text_i"] = ids[i];
            row["text_j"] = ids[j];
            row["common_fraction"] = common.get(i, j);
            fractions.rows.push_back(std::move(row));
        }
    }
    note_wrote(write_records(config.out_dir, "common_fractions", config.format, fractions));

    RecordTable checks;
    checks.columns = {"relation", "subject", "lhs", "rhs", "holds", "tie"};
    for (const auto& c : report.checks) {
        nlohmann::ordered_json row;
        row["relation"] = c.relation;
        row["subject"] = c.subject;
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
        row["holds"] = c.holds;
        row["tie"] = c.tie;
        checks.rows.push_back(std::move(row));
    }
    note_wrote(write_records(config.out_dir, "scorecard", config.format, checks));

    RecordTable tally;
    tally.columns = {"relation", "holds", "ties", "total"};
    for (const auto& [relation, t] : report.tally) {
        nlohmann::ordered_json row;
        row["relation"] = relation;
        row["holds"] = t.holds;
        row["ties"] = t.ties;
        row["total"] = t.total;
        tally.rows.push_back(std::move(row));
    }
    note_wrote(write_records(config.out_dir, "scorecard_tally", config.format, tally));

    if (!config.holdouts.empty()) {
        RecordTable verdicts;
        verdicts.columns = {"candidate", "reference_author", "lambda",
                            "max_candidate", "max_intra", "verdict"};
        for (const std::string& holdout : config.holdouts) {
            for (const std::string& author : authors) {
                std::vector<std::string> refs;
                for (const TextEntry& t : config.texts)
                    if (t.author == author && t.id != holdout)
                        refs.push_back(t.id);
                if (refs.size() < 2) {
                    std::fprintf(stderr,
                                 "warning: author %s keeps fewer than 2 references against %s\n",
                                 author.c_str(), holdout.c_str());
                    continue;
                }
                auto result = stylometry::attribute(types, holdout, refs);
                for (int lambda = 0; lambda <= 1; ++lambda) {
                    const auto& v = lambda == 0 ? result.by_rho0 : result.by_rho1;
                    nlohmann::ordered_json row;
                    row["candidate"] = holdout;
                    row["reference_author"] = author;
                    row["lambda"] = lambda;
                    row["max_candidate"] = v.max_candidate_distance;
                    row["max_intra"] = v.max_intra_reference;
                    row["verdict"] = v.evidence ? "EVIDENCE" : "NO_EVIDENCE";
                    verdicts.rows.push_back(std::move(row));
                }
            }
        }
        note_wrote(write_records(config.out_dir, "attribution", config.format, verdicts));
    }
    return 0;
}

}  // namespace phonostat::cli
