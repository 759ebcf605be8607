#include "phonostat/stylometry/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace phonostat::stylometry {

double rho0(const corpus::FrequencyVector& fv_i, const corpus::FrequencyVector& fv_j) {
    if (!(fv_i.inventory() == fv_j.inventory()))
        throw std::invalid_argument("rho0: frequency vectors use different inventories");
    double sum = 0.0;
    for (std::size_t k = 0; k < fv_i.size(); ++k)
        sum += std::fabs(fv_i.freqs()[k] - fv_j.freqs()[k]);
    return 0.5 * sum;
}

double rho1(const model::RankedSpectrum& spec_i, const model::RankedSpectrum& spec_j) {
    if (spec_i.size() != spec_j.size())
        throw std::invalid_argument("rho1: spectra have different lengths");
    double sum = 0.0;
    for (std::size_t k = 0; k < spec_i.size(); ++k)
        sum += std::fabs(spec_i.freqs()[k] - spec_j.freqs()[k]);
    return 0.5 * sum;
}

PairTable::PairTable(std::vector<std::string> ids) : ids_(std::move(ids)) {
    if (ids_.size() < 2)
        throw std::invalid_argument("PairTable: needs at least 2 texts");
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (!index_.emplace(ids_[i], i).second)
            throw std::invalid_argument("PairTable: duplicate text id " + ids_[i]);
    values_.assign(ids_.size() * ids_.size(), 0.0);
}

std::size_t PairTable::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("PairTable: unknown text id " + id);
    return it->second;
}

void PairTable::set(const std::string& id_i, const std::string& id_j, double value) {
    std::size_t i = index_of(id_i), j = index_of(id_j);
    values_[i * ids_.size() + j] = value;
    values_[j * ids_.size() + i] = value;
}

double PairTable::get(const std::string& id_i, const std::string& id_j) const {
    return values_[index_of(id_i) * ids_.size() + index_of(id_j)];
}

std::vector<DistancePair> DistanceMatrix::pairs() const {
    std::vector<DistancePair> out;
    const auto& ids = rho0.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            out.push_back({ids[i], ids[j], rho0.get(i, j), rho1.get(i, j)});
    return out;
}

DistanceMatrix distance_matrix(const std::vector<std::string>& ids,
                               const std::vector<corpus::FrequencyVector>& fvs) {
    if (ids.size() != fvs.size())
        throw std::invalid_argument("distance_matrix: ids and vectors differ in length");
    DistanceMatrix m{PairTable(ids), PairTable(ids)};
    std::vector<model::RankedSpectrum> spectra;
    spectra.reserve(fvs.size());
    for (const auto& fv : fvs)
        spectra.push_back(corpus::rank_spectrum(fv));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            m.rho0.set(ids[i], ids[j], rho0(fvs[i], fvs[j]));
            m.rho1.set(ids[i], ids[j], rho1(spectra[i], spectra[j]));
        }
    }
    return m;
}

DistanceMatrix exclusive_distance_matrix(const std::vector<std::string>& ids,
                                         const std::vector<corpus::PhonemeProfile>& type_profiles,
                                         const corpus::Lexicon& lexicon) {
    if (ids.size() != type_profiles.size())
        throw std::invalid_argument("exclusive_distance_matrix: ids and profiles differ in length");
    DistanceMatrix m{PairTable(ids), PairTable(ids)};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            auto [pi, pj] = corpus::exclusive_profile(type_profiles[i], type_profiles[j], lexicon);
            corpus::FrequencyVector fi = corpus::to_frequency_vector(pi);
            corpus::FrequencyVector fj = corpus::to_frequency_vector(pj);
            m.rho0.set(ids[i], ids[j], rho0(fi, fj));
            m.rho1.set(ids[i], ids[j], rho1(corpus::rank_spectrum(fi), corpus::rank_spectrum(fj)));
        }
    }
    return m;
}

}  // namespace phonostat::stylometry
