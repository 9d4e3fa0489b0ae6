#include "netsimp/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "netsimp/format.hpp"

namespace netsimp {

double ks_d(std::span<const double> sample_a, std::span<const double> sample_b) {
    if (sample_a.empty() || sample_b.empty()) throw std::invalid_argument("ks_d: empty sample");
    std::vector<double> a(sample_a.begin(), sample_a.end());
    std::vector<double> b(sample_b.begin(), sample_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

namespace {

// average ranks (1-based, fractional on ties)
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = shared;
        i = j + 1;
    }
    return rank;
}

}  // namespace

std::optional<double> spearman_rho(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 2) throw std::invalid_argument("spearman_rho: need at least two pairs");
    std::vector<double> x, y;
    x.reserve(pairs.size());
    y.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        x.push_back(a);
        y.push_back(b);
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);

    const double n = static_cast<double>(pairs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        mean_x += rx[i];
        mean_y += ry[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean_x;
        const double dy = ry[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

const char* property_name(LocalProperty p) {
    switch (p) {
        case LocalProperty::Degree: return "degree";
        case LocalProperty::InDegree: return "in_degree";
        case LocalProperty::OutDegree: return "out_degree";
        case LocalProperty::Clustering: return "clustering";
        case LocalProperty::Betweenness: return "betweenness";
    }
    return "?";
}

const char* property_name(GlobalProperty p) {
    switch (p) {
        case GlobalProperty::Density: return "density";
        case GlobalProperty::DegreeMixing: return "degree_mixing";
        case GlobalProperty::Transitivity: return "transitivity";
    }
    return "?";
}

std::optional<LocalProperty> local_property_from_name(std::string_view name) {
    for (LocalProperty p : kLocalProperties)
        if (name == property_name(p)) return p;
    return std::nullopt;
}

std::optional<GlobalProperty> global_property_from_name(std::string_view name) {
    for (GlobalProperty p : kGlobalProperties)
        if (name == property_name(p)) return p;
    return std::nullopt;
}

SimilarityRecord average_over_repetitions(
    const std::string& network, Method method, double size,
    const std::map<GlobalProperty, std::optional<double>>& original_globals,
    double original_lwcc, std::span<const RepetitionComparison> repetitions) {
    if (repetitions.empty())
        throw std::invalid_argument("average_over_repetitions: no repetitions");

    SimilarityRecord record;
    record.network = network;
    record.method = method;
    record.size = size;
    record.repetitions = repetitions.size();
    record.original_value = original_globals;
    record.original_lwcc = original_lwcc;

    const auto& first = repetitions.front();
    for (const auto& rep : repetitions) {
        if (rep.d.size() != first.d.size() ||
            !std::equal(rep.d.begin(), rep.d.end(), first.d.begin(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }))
            throw std::invalid_argument(
                "average_over_repetitions: repetitions report different property sets");
    }

    const double count = static_cast<double>(repetitions.size());
    for (const auto& [property, unused] : first.d) {
        double sum = 0.0;
        for (const auto& rep : repetitions) sum += rep.d.at(property);
        record.mean_d[property] = sum / count;
    }
    for (GlobalProperty property : kGlobalProperties) {
        double sum = 0.0;
        std::size_t defined = 0;
        for (const auto& rep : repetitions) {
            auto it = rep.globals.find(property);
            if (it != rep.globals.end() && it->second) {
                sum += *it->second;
                ++defined;
            }
        }
        record.mean_simplified_value[property] =
            defined ? std::optional<double>(sum / static_cast<double>(defined)) : std::nullopt;
        if (!record.original_value.count(property)) record.original_value[property] = std::nullopt;
    }
    double lwcc = 0.0, achieved = 0.0;
    for (const auto& rep : repetitions) {
        lwcc += rep.lwcc_fraction;
        achieved += rep.achieved_fraction;
    }
    record.mean_lwcc = lwcc / count;
    record.mean_achieved_fraction = achieved / count;
    return record;
}

GlobalCorrelation pooled_correlation(Method method, double size, GlobalProperty property,
                                     std::span<const SimilarityRecord> records) {
    GlobalCorrelation result;
    result.method = method;
    result.size = size;
    result.property = property;
    std::vector<std::pair<double, double>> pairs;
    for (const auto& record : records) {
        if (record.method != method || record.size != size) continue;
        auto orig = record.original_value.find(property);
        auto simp = record.mean_simplified_value.find(property);
        if (orig == record.original_value.end() || !orig->second) continue;
        if (simp == record.mean_simplified_value.end() || !simp->second) continue;
        pairs.emplace_back(*orig->second, *simp->second);
    }
    result.pair_count = pairs.size();
    if (pairs.size() >= 2) result.rho = spearman_rho(pairs);
    return result;
}

namespace {

// continued fraction for the incomplete beta (Lentz's method)
double incomplete_beta_cf(double a, double b, double x) {
    constexpr int kMaxIterations = 300;
    constexpr double kEpsilon = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEpsilon) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * incomplete_beta_cf(a, b, x) / a;
    return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

std::optional<AnovaResult> one_way_anova(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2) throw std::invalid_argument("one_way_anova: need >= 2 groups");
    std::size_t total_count = 0;
    for (const auto& group : groups) {
        if (group.empty()) throw std::invalid_argument("one_way_anova: empty group");
        total_count += group.size();
    }
    if (total_count <= groups.size())
        throw std::invalid_argument("one_way_anova: need more values than groups");

    double grand_sum = 0.0;
    for (const auto& group : groups)
        for (double v : group) grand_sum += v;
    const double grand_mean = grand_sum / static_cast<double>(total_count);

    double ss_between = 0.0, ss_within = 0.0;
    for (const auto& group : groups) {
        double mean = 0.0;
        for (double v : group) mean += v;
        mean /= static_cast<double>(group.size());
        ss_between += static_cast<double>(group.size()) * (mean - grand_mean) * (mean - grand_mean);
        for (double v : group) ss_within += (v - mean) * (v - mean);
    }
    const std::size_t df_between = groups.size() - 1;
    const std::size_t df_within = total_count - groups.size();
    const double ms_between = ss_between / static_cast<double>(df_between);
    const double ms_within = ss_within / static_cast<double>(df_within);
    if (ms_within == 0.0) return std::nullopt;

    AnovaResult result;
    result.df_between = df_between;
    result.df_within = df_within;
    result.f = ms_between / ms_within;
    const double d1 = static_cast<double>(df_between);
    const double d2 = static_cast<double>(df_within);
    result.p = regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * result.f));
    return result;
}

void write_similarity_header(std::ostream& out) {
    out << "network,method,size,property,mean_d,orig_value,simp_value,reps\n";
}

namespace {

std::string opt_str(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

void write_similarity_rows(const SimilarityRecord& record, std::ostream& out) {
    const std::string prefix = record.network + ',' + method_name(record.method) + ',' +
                               format_double(record.size) + ',';
    const std::string reps = std::to_string(record.repetitions);
    for (const auto& [property, mean_d] : record.mean_d)
        out << prefix << property_name(property) << ',' << format_double(mean_d) << ",,," << reps
            << '\n';
    for (GlobalProperty property : kGlobalProperties) {
        out << prefix << property_name(property) << ",,"
            << opt_str(record.original_value.at(property)) << ','
            << opt_str(record.mean_simplified_value.at(property)) << ',' << reps << '\n';
    }
    out << prefix << "lwcc_fraction,," << format_double(record.original_lwcc) << ','
        << format_double(record.mean_lwcc) << ',' << reps << '\n';
    out << prefix << "achieved_fraction,,1," << format_double(record.mean_achieved_fraction)
        << ',' << reps << '\n';
}

}  // namespace netsimp
