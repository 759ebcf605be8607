#pragma once

#include <map>
#include <string>
#include <vector>

#include "phonostat/stylometry/cluster.hpp"
#include "phonostat/stylometry/distance.hpp"

namespace phonostat::stylometry {

// One strict inequality lhs > rhs with its signed outcome; exact equality is
// reported as a tie, not a pass.
struct InequalityCheck {
    std::string relation;
    std::string subject;
    double lhs;
    double rhs;
    bool holds;
    bool tie;

    double margin() const { return lhs - rhs; }
};

struct RelationTally {
    int holds = 0;
    int ties = 0;
    int total = 0;
};

struct ModeComparisonInputs {
    // fitted concentration parameter per text, per word-set mode
    std::map<std::string, double> beta_all;
    std::map<std::string, double> beta_types;
    const DistanceMatrix* distances_all = nullptr;
    const DistanceMatrix* distances_types = nullptr;
    const DistanceMatrix* distances_exclusive = nullptr;  // optional
    const PairTable* common_fractions = nullptr;          // optional
    std::map<std::string, std::string> author_of;
};

struct ModeComparisonReport {
    std::vector<ClusterMargins> margins;  // per author, per available mode
    std::vector<InequalityCheck> checks;
    std::map<std::string, RelationTally> tally;

    std::vector<InequalityCheck> exceptions() const;  // checks that failed or tied
};

// Cross-mode scorecard. Relations covered (those with inputs present):
//   beta_types_gt_all                per text
//   beta_margin_types_gt_all         per author
//   z_margin_positive                per author x {rho0, rho1} x {all, types}
//   z_margin_types_gt_all            per author x {rho0, rho1}
//   same_author_distance_all_gt_types  per same-author pair x {rho0, rho1}
//   z_margin_exclusive_positive      per author x {rho0, rho1}
//   exclusive_distance_gt_types      per pair x {rho0, rho1}
//   z_margin_exclusive_gt_types      per author x {rho0, rho1}
//   similarity_margin_positive       per author, over 1 - common_fraction
// Throws std::invalid_argument when the required all/types inputs are
// missing or inconsistent with author_of.
ModeComparisonReport mode_comparison_report(const ModeComparisonInputs& inputs);

}  // namespace phonostat::stylometry
