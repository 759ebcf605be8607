#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "phonostat/corpus/profile.hpp"
#include "phonostat/model/dirichlet.hpp"

namespace phonostat::stylometry {

struct DistancePair {
    std::string text_i;
    std::string text_j;
    double rho0;
    double rho1;
};

// Half L1 distance over phoneme-aligned frequencies; requires both vectors
// on the same inventory.
double rho0(const corpus::FrequencyVector& fv_i, const corpus::FrequencyVector& fv_j);

// Half L1 distance over rank-sorted frequencies; coarser than rho0.
double rho1(const model::RankedSpectrum& spec_i, const model::RankedSpectrum& spec_j);

// Symmetric pairwise values over a fixed set of text ids; diagonal is 0.
class PairTable {
public:
    explicit PairTable(std::vector<std::string> ids);

    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t index_of(const std::string& id) const;
    void set(const std::string& id_i, const std::string& id_j, double value);
    double get(const std::string& id_i, const std::string& id_j) const;
    double get(std::size_t i, std::size_t j) const { return values_[i * ids_.size() + j]; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<double> values_;
};

struct DistanceMatrix {
    PairTable rho0;
    PairTable rho1;

    std::vector<DistancePair> pairs() const;  // long form, i < j
};

// Fills both tables from per-text frequency vectors (aligned with ids).
DistanceMatrix distance_matrix(const std::vector<std::string>& ids,
                               const std::vector<corpus::FrequencyVector>& fvs);

// Distances after removing each pair's common word types: for every pair the
// two exclusive profiles are recomputed and compared. Inputs must be
// distinct-types profiles over the given lexicon.
DistanceMatrix exclusive_distance_matrix(const std::vector<std::string>& ids,
                                         const std::vector<corpus::PhonemeProfile>& type_profiles,
                                         const corpus::Lexicon& lexicon);

}  // namespace phonostat::stylometry
