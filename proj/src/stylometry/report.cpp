#include "phonostat/stylometry/report.hpp"

#include <stdexcept>

namespace phonostat::stylometry {

std::vector<InequalityCheck> ModeComparisonReport::exceptions() const {
    std::vector<InequalityCheck> out;
    for (const InequalityCheck& c : checks)
        if (!c.holds)
            out.push_back(c);
    return out;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond)
        throw std::invalid_argument(std::string("mode_comparison_report: ") + what);
}

}  // namespace

ModeComparisonReport mode_comparison_report(const ModeComparisonInputs& in) {
    require(!in.author_of.empty(), "author labels missing");
    require(!in.beta_all.empty() && !in.beta_types.empty(),
            "mode set incomplete: need fits for both all and types modes");
    require(in.distances_all && in.distances_types,
            "mode set incomplete: need distance matrices for both all and types modes");
    for (const auto& [text, author] : in.author_of) {
        require(in.beta_all.count(text) && in.beta_types.count(text),
                "a labeled text is missing from the fits");
    }

    ModeComparisonReport report;
    auto add_check = [&](const std::string& relation, const std::string& subject, double lhs,
                         double rhs) {
        bool tie = lhs == rhs;
        bool holds = lhs > rhs;
        report.checks.push_back({relation, subject, lhs, rhs, holds, tie});
        RelationTally& t = report.tally[relation];
        t.total += 1;
        t.holds += holds ? 1 : 0;
        t.ties += tie ? 1 : 0;
    };

    // fitted beta rises when repeated words are dropped
    for (const auto& [text, beta_t] : in.beta_types)
        if (in.beta_all.count(text))
            add_check("beta_types_gt_all", text, beta_t, in.beta_all.at(text));

    std::vector<ClusterMargins> b_all = cluster_margins_beta(in.beta_all, in.author_of, "all");
    std::vector<ClusterMargins> b_types = cluster_margins_beta(in.beta_types, in.author_of, "types");
    for (std::size_t a = 0; a < b_all.size(); ++a) {
        add_check("beta_margin_types_gt_all", b_all[a].author, *b_types[a].b, *b_all[a].b);
        report.margins.push_back(b_all[a]);
        report.margins.push_back(b_types[a]);
    }

    std::vector<ClusterMargins> z_all = cluster_margins_distance(*in.distances_all, in.author_of, "all");
    std::vector<ClusterMargins> z_types =
        cluster_margins_distance(*in.distances_types, in.author_of, "types");
    for (std::size_t a = 0; a < z_all.size(); ++a) {
        const std::string& author = z_all[a].author;
        add_check("z_margin_positive", author + ":rho0:all", *z_all[a].z0, 0.0);
        add_check("z_margin_positive", author + ":rho1:all", *z_all[a].z1, 0.0);
        add_check("z_margin_positive", author + ":rho0:types", *z_types[a].z0, 0.0);
        add_check("z_margin_positive", author + ":rho1:types", *z_types[a].z1, 0.0);
        add_check("z_margin_types_gt_all", author + ":rho0", *z_types[a].z0, *z_all[a].z0);
        add_check("z_margin_types_gt_all", author + ":rho1", *z_types[a].z1, *z_all[a].z1);
        report.margins.push_back(z_all[a]);
        report.margins.push_back(z_types[a]);
    }

    // same-author pairs move apart when repeated words are dropped, so the
    // all-words distance should exceed the types distance
    const auto& ids = in.distances_all->rho0.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (in.author_of.at(ids[i]) != in.author_of.at(ids[j]))
                continue;
            std::string pair = ids[i] + "-" + ids[j];
            add_check("same_author_distance_all_gt_types", pair + ":rho0",
                      in.distances_all->rho0.get(ids[i], ids[j]),
                      in.distances_types->rho0.get(ids[i], ids[j]));
            add_check("same_author_distance_all_gt_types", pair + ":rho1",
                      in.distances_all->rho1.get(ids[i], ids[j]),
                      in.distances_types->rho1.get(ids[i], ids[j]));
        }
    }

    if (in.distances_exclusive) {
        std::vector<ClusterMargins> z_nc =
            cluster_margins_distance(*in.distances_exclusive, in.author_of, "exclusive-types");
        for (std::size_t a = 0; a < z_nc.size(); ++a) {
            const std::string& author = z_nc[a].author;
            add_check("z_margin_exclusive_positive", author + ":rho0", *z_nc[a].z0, 0.0);
            add_check("z_margin_exclusive_positive", author + ":rho1", *z_nc[a].z1, 0.0);
            add_check("z_margin_exclusive_gt_types", author + ":rho0", *z_nc[a].z0, *z_types[a].z0);
            add_check("z_margin_exclusive_gt_types", author + ":rho1", *z_nc[a].z1, *z_types[a].z1);
            report.margins.push_back(z_nc[a]);
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                std::string pair = ids[i] + "-" + ids[j];
                add_check("exclusive_distance_gt_types", pair + ":rho0",
                          in.distances_exclusive->rho0.get(ids[i], ids[j]),
                          in.distances_types->rho0.get(ids[i], ids[j]));
                add_check("exclusive_distance_gt_types", pair + ":rho1",
                          in.distances_exclusive->rho1.get(ids[i], ids[j]),
                          in.distances_types->rho1.get(ids[i], ids[j]));
            }
        }
    }

    if (in.common_fractions) {
        // author clustering in shared vocabulary: 1 - p behaves like a distance
        PairTable similarity(in.common_fractions->ids());
        const auto& sids = in.common_fractions->ids();
        for (std::size_t i = 0; i < sids.size(); ++i)
            for (std::size_t j = i + 1; j < sids.size(); ++j)
                similarity.set(sids[i], sids[j], 1.0 - in.common_fractions->get(i, j));
        for (const ClusterMargins& m : z_all) {
            double margin = pair_table_margin(similarity, in.author_of, m.author);
            add_check("similarity_margin_positive", m.author, margin, 0.0);
        }
    }

    return report;
}

}  // namespace phonostat::stylometry
