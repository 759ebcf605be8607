#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phonostat/stylometry/distance.hpp"
#include "phonostat/stylometry/fit.hpp"

namespace phonostat::stylometry {

// Per-author clustering margins: min inter-author value minus max
// intra-author value; positive means the author's texts form a cluster.
// z margins come from distance matrices, b from |beta_i - beta_j| tables.
struct ClusterMargins {
    std::string author;
    std::optional<double> z0;
    std::optional<double> z1;
    std::optional<double> b;
    std::string mode;
};

// Margin over fitted concentration parameters. Requires >= 2 authors with
// >= 2 texts each; all texts must carry an author label.
std::vector<ClusterMargins> cluster_margins_beta(const std::map<std::string, double>& beta_by_text,
                                                 const std::map<std::string, std::string>& author_of,
                                                 const std::string& mode_label = "");
std::vector<ClusterMargins> cluster_margins_beta(const std::map<std::string, FitResult>& fits,
                                                 const std::map<std::string, std::string>& author_of,
                                                 const std::string& mode_label = "");

// Margins over both distance tables of a matrix.
std::vector<ClusterMargins> cluster_margins_distance(
    const DistanceMatrix& matrix, const std::map<std::string, std::string>& author_of,
    const std::string& mode_label = "");

// Margin over an arbitrary symmetric pair table (also used for 1 - common
// word fraction tables).
double pair_table_margin(const PairTable& table, const std::map<std::string, std::string>& author_of,
                         const std::string& author);

struct AttributionVerdict {
    std::string candidate;
    double max_candidate_distance;  // candidate vs each reference
    double max_intra_reference;     // threshold from the reference cluster
    bool evidence;                  // candidate max <= reference max
};

// Authorship-evidence rule on one distance table: EVIDENCE when the
// candidate sits no farther from every reference text than the references
// sit from each other. Requires >= 2 reference texts, none equal to the
// candidate.
AttributionVerdict attribute(const PairTable& distances, const std::string& candidate,
                             const std::vector<std::string>& reference_texts);

struct AttributionResult {
    AttributionVerdict by_rho0;
    AttributionVerdict by_rho1;
};

AttributionResult attribute(const DistanceMatrix& matrix, const std::string& candidate,
                            const std::vector<std::string>& reference_texts);

}  // namespace phonostat::stylometry
