#include "phonostat/stylometry/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace phonostat::stylometry {

namespace {

// Distinct author labels in sorted order. Beta margins need two texts per
// author (an intra |beta_i - beta_j| pair must exist); distance margins accept
// singleton authors and score them against an intra distance of zero.
std::vector<std::string> author_labels(const std::map<std::string, std::string>& author_of,
                                       bool require_pairs) {
    std::map<std::string, int> texts_per_author;
    for (const auto& [text, author] : author_of)
        ++texts_per_author[author];
    if (texts_per_author.size() < 2)
        throw std::invalid_argument("cluster margins: need at least 2 authors");
    std::vector<std::string> authors;
    for (const auto& [author, count] : texts_per_author) {
        if (require_pairs && count < 2)
            throw std::invalid_argument("cluster margins: author '" + author +
                                        "' has fewer than 2 texts");
        authors.push_back(author);
    }
    return authors;
}

template <typename ValueFn>
double margin_over_pairs(const std::vector<std::string>& texts,
                         const std::map<std::string, std::string>& author_of,
                         const std::string& author, ValueFn value) {
    double max_intra = -std::numeric_limits<double>::infinity();
    double min_inter = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < texts.size(); ++i) {
        bool i_in = author_of.at(texts[i]) == author;
        for (std::size_t j = i + 1; j < texts.size(); ++j) {
            bool j_in = author_of.at(texts[j]) == author;
            if (i_in && j_in)
                max_intra = std::max(max_intra, value(texts[i], texts[j]));
            else if (i_in || j_in)
                min_inter = std::min(min_inter, value(texts[i], texts[j]));
        }
    }
    if (std::isinf(max_intra))
        max_intra = 0.0;
    return min_inter - max_intra;
}

std::vector<std::string> texts_of(const std::map<std::string, std::string>& author_of) {
    std::vector<std::string> texts;
    for (const auto& [text, author] : author_of)
        texts.push_back(text);
    return texts;
}

}  // namespace

std::vector<ClusterMargins> cluster_margins_beta(const std::map<std::string, double>& beta_by_text,
                                                 const std::map<std::string, std::string>& author_of,
                                                 const std::string& mode_label) {
    for (const auto& [text, author] : author_of)
        if (!beta_by_text.count(text))
            throw std::invalid_argument("cluster_margins_beta: no fit for text " + text);
    std::vector<std::string> authors = author_labels(author_of, true);
    std::vector<std::string> texts = texts_of(author_of);
    std::vector<ClusterMargins> out;
    for (const std::string& author : authors) {
        double b = margin_over_pairs(texts, author_of, author, [&](const auto& i, const auto& j) {
            return std::fabs(beta_by_text.at(i) - beta_by_text.at(j));
        });
        out.push_back({author, std::nullopt, std::nullopt, b, mode_label});
    }
    return out;
}

std::vector<ClusterMargins> cluster_margins_beta(const std::map<std::string, FitResult>& fits,
                                                 const std::map<std::string, std::string>& author_of,
                                                 const std::string& mode_label) {
    std::map<std::string, double> betas;
    for (const auto& [text, fit] : fits)
        betas.emplace(text, fit.beta_hat);
    return cluster_margins_beta(betas, author_of, mode_label);
}

double pair_table_margin(const PairTable& table, const std::map<std::string, std::string>& author_of,
                         const std::string& author) {
    std::vector<std::string> texts = texts_of(author_of);
    return margin_over_pairs(texts, author_of, author,
                             [&](const auto& i, const auto& j) { return table.get(i, j); });
}

std::vector<ClusterMargins> cluster_margins_distance(
    const DistanceMatrix& matrix, const std::map<std::string, std::string>& author_of,
    const std::string& mode_label) {
    for (const std::string& id : matrix.rho0.ids())
        if (!author_of.count(id))
            throw std::invalid_argument("cluster_margins_distance: no author for text " + id);
    std::vector<std::string> authors = author_labels(author_of, false);
    std::vector<ClusterMargins> out;
    for (const std::string& author : authors) {
        double z0 = pair_table_margin(matrix.rho0, author_of, author);
        double z1 = pair_table_margin(matrix.rho1, author_of, author);
        out.push_back({author, z0, z1, std::nullopt, mode_label});
    }
    return out;
}

AttributionVerdict attribute(const PairTable& distances, const std::string& candidate,
                             const std::vector<std::string>& reference_texts) {
    if (reference_texts.size() < 2)
        throw std::invalid_argument("attribute: need at least 2 reference texts");
    for (const std::string& ref : reference_texts)
        if (ref == candidate)
            throw std::invalid_argument("attribute: candidate appears among the references");

    double max_candidate = -std::numeric_limits<double>::infinity();
    for (const std::string& ref : reference_texts)
        max_candidate = std::max(max_candidate, distances.get(candidate, ref));

    double max_intra = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < reference_texts.size(); ++i)
        for (std::size_t j = i + 1; j < reference_texts.size(); ++j)
            max_intra = std::max(max_intra, distances.get(reference_texts[i], reference_texts[j]));

    return {candidate, max_candidate, max_intra, max_candidate <= max_intra};
}

AttributionResult attribute(const DistanceMatrix& matrix, const std::string& candidate,
                            const std::vector<std::string>& reference_texts) {
    return {attribute(matrix.rho0, candidate, reference_texts),
            attribute(matrix.rho1, candidate, reference_texts)};
}

}  // namespace phonostat::stylometry
