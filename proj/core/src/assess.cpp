#include "netsimp/assess.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "netsimp/format.hpp"

namespace netsimp {

double RankTable::rank_sum(std::size_t candidate) const {
    double sum = 0.0;
    for (double r : ranks[candidate]) sum += r;
    return sum;
}

RankTable rank_candidates(const std::vector<std::string>& candidates,
                          const std::vector<std::string>& properties,
                          const std::vector<std::vector<std::optional<double>>>& scores,
                          const std::vector<Orientation>& orientations) {
    if (candidates.empty() || properties.empty())
        throw std::invalid_argument("rank_candidates: empty score matrix");
    if (scores.size() != candidates.size())
        throw std::invalid_argument("rank_candidates: score rows != candidates");
    for (const auto& row : scores)
        if (row.size() != properties.size())
            throw std::invalid_argument("rank_candidates: score columns != properties");
    if (orientations.size() != properties.size())
        throw std::invalid_argument("rank_candidates: orientations != properties");

    RankTable table;
    table.candidates = candidates;

    const std::size_t nc = candidates.size();
    for (std::size_t p = 0; p < properties.size(); ++p) {
        bool defined = true;
        for (std::size_t c = 0; c < nc; ++c) defined = defined && scores[c][p].has_value();
        if (defined)
            table.properties.push_back(properties[p]);
        else
            table.excluded_properties.push_back(properties[p]);
    }

    table.ranks.assign(nc, std::vector<double>(table.properties.size(), 0.0));
    std::size_t column = 0;
    for (std::size_t p = 0; p < properties.size(); ++p) {
        bool defined = true;
        for (std::size_t c = 0; c < nc; ++c) defined = defined && scores[c][p].has_value();
        if (!defined) continue;

        // order candidates best-first; exact ties share the average rank
        std::vector<std::size_t> order(nc);
        for (std::size_t c = 0; c < nc; ++c) order[c] = c;
        const bool higher = orientations[p] == Orientation::HigherIsBetter;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double sa = *scores[a][p], sb = *scores[b][p];
            return higher ? sa > sb : sa < sb;
        });
        std::size_t i = 0;
        while (i < nc) {
            std::size_t j = i;
            while (j + 1 < nc && *scores[order[j + 1]][p] == *scores[order[i]][p]) ++j;
            const double shared = 0.5 * static_cast<double>(i + j);
            for (std::size_t k = i; k <= j; ++k) table.ranks[order[k]][column] = shared;
            i = j + 1;
        }
        ++column;
    }
    return table;
}

std::vector<double> measure_a(const RankTable& table) {
    const std::size_t nc = table.candidate_count();
    const std::size_t np = table.property_count();
    if (nc < 2) throw std::invalid_argument("measure_a: need at least two candidates");
    if (np < 1) throw std::invalid_argument("measure_a: no defined properties");
    const double denom = static_cast<double>(nc - 1) * static_cast<double>(np);
    std::vector<double> a(nc);
    for (std::size_t c = 0; c < nc; ++c) a[c] = table.rank_sum(c) / denom;
    return a;
}

std::vector<double> measure_a_weighted(const RankTable& table, std::span<const double> weights) {
    const std::size_t nc = table.candidate_count();
    const std::size_t np = table.property_count();
    if (nc < 2) throw std::invalid_argument("measure_a_weighted: need at least two candidates");
    if (weights.size() != np)
        throw std::invalid_argument("measure_a_weighted: one weight per property required");
    double weight_sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("measure_a_weighted: negative weight");
        weight_sum += w;
    }
    if (weight_sum == 0.0) throw std::invalid_argument("measure_a_weighted: all weights zero");

    const double denom = static_cast<double>(nc) * weight_sum;
    std::vector<double> a(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        double sum = 0.0;
        for (std::size_t p = 0; p < np; ++p) sum += table.ranks[c][p] * weights[p];
        a[c] = sum / denom;
    }
    return a;
}

BestSize best_size(std::span<const std::pair<double, double>> a_by_size) {
    if (a_by_size.empty()) throw std::invalid_argument("best_size: no sizes");
    for (std::size_t i = 1; i < a_by_size.size(); ++i)
        if (a_by_size[i].first <= a_by_size[i - 1].first)
            throw std::invalid_argument("best_size: sizes must be strictly ascending");

    BestSize result;
    result.global_min_size = a_by_size[0].first;
    result.global_min_a = a_by_size[0].second;
    for (const auto& [size, a] : a_by_size) {
        if (a < result.global_min_a) {
            result.global_min_a = a;
            result.global_min_size = size;
        }
    }

    const std::size_t n = a_by_size.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i == 0 ? 1.0 : a_by_size[i - 1].second;  // virtual point at size 0
        const double a = a_by_size[i].second;
        const bool below_left = a < left;
        const bool at_most_right = i + 1 == n || a <= a_by_size[i + 1].second;
        if (below_left && at_most_right) {
            result.size = a_by_size[i].first;
            result.a = a;
            return result;
        }
    }
    // no local minimum (flat all-ones curve); fall back to the global minimum
    result.size = result.global_min_size;
    result.a = result.global_min_a;
    return result;
}

MethodVerdicts rank_methods(std::span<const std::pair<std::string, double>> method_scores) {
    if (method_scores.empty()) throw std::invalid_argument("rank_methods: no methods");
    MethodVerdicts verdicts;
    verdicts.ordered.assign(method_scores.begin(), method_scores.end());
    std::stable_sort(verdicts.ordered.begin(), verdicts.ordered.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });

    const double lowest = verdicts.ordered.front().second;
    const double highest = verdicts.ordered.back().second;
    verdicts.all_tied = lowest == highest;

    double second_value = lowest;
    for (const auto& [name, a] : verdicts.ordered) {
        if (a == lowest) {
            verdicts.best.push_back(name);
        } else {
            if (second_value == lowest) second_value = a;
            if (a == second_value) verdicts.second_best.push_back(name);
        }
    }
    if (!verdicts.all_tied)
        for (const auto& [name, a] : verdicts.ordered)
            if (a == highest) verdicts.worst.push_back(name);
    return verdicts;
}

Assessment assess(const std::string& name, const std::vector<std::string>& candidates,
                  const std::vector<std::string>& properties,
                  const std::vector<std::vector<std::optional<double>>>& scores,
                  const std::vector<Orientation>& orientations, std::span<const double> weights) {
    Assessment result;
    result.name = name;
    result.table = rank_candidates(candidates, properties, scores, orientations);
    result.a = measure_a(result.table);
    if (!weights.empty()) {
        result.weights = std::vector<double>(weights.begin(), weights.end());
        result.a_weighted = measure_a_weighted(result.table, weights);
    }
    return result;
}

void write_assessment_csv(const Assessment& assessment, std::ostream& out) {
    out << "candidate";
    for (const auto& property : assessment.table.properties) out << ',' << property;
    out << ",Sum,A";
    if (assessment.a_weighted) out << ",A_w";
    out << '\n';
    for (std::size_t c = 0; c < assessment.table.candidate_count(); ++c) {
        out << assessment.table.candidates[c];
        for (double r : assessment.table.ranks[c]) out << ',' << format_double(r);
        out << ',' << format_double(assessment.table.rank_sum(c)) << ','
            << format_double(assessment.a[c]);
        if (assessment.a_weighted) out << ',' << format_double((*assessment.a_weighted)[c]);
        out << '\n';
    }
}

}  // namespace netsimp
