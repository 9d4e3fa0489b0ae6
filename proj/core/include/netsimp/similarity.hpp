#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netsimp/simplify.hpp"

namespace netsimp {

// Two-sample Kolmogorov-Smirnov D: sup distance between the empirical CDFs,
// evaluated over the merged support. Both samples must be nonempty.
double ks_d(std::span<const double> sample_a, std::span<const double> sample_b);

// Spearman rank correlation with average ranks for ties. Undefined when
// either side has zero rank variance. Needs at least two pairs.
std::optional<double> spearman_rho(std::span<const std::pair<double, double>> pairs);

enum class LocalProperty { Degree, InDegree, OutDegree, Clustering, Betweenness };
enum class GlobalProperty { Density, DegreeMixing, Transitivity };

const char* property_name(LocalProperty p);
const char* property_name(GlobalProperty p);
std::optional<LocalProperty> local_property_from_name(std::string_view name);
std::optional<GlobalProperty> global_property_from_name(std::string_view name);

constexpr LocalProperty kLocalProperties[] = {LocalProperty::Degree, LocalProperty::InDegree,
                                              LocalProperty::OutDegree, LocalProperty::Clustering,
                                              LocalProperty::Betweenness};
constexpr GlobalProperty kGlobalProperties[] = {GlobalProperty::Density,
                                                GlobalProperty::DegreeMixing,
                                                GlobalProperty::Transitivity};

// distances and values measured on one simplification repetition
struct RepetitionComparison {
    std::map<LocalProperty, double> d;                          // vs the original
    std::map<GlobalProperty, std::optional<double>> globals;    // of the simplified graph
    double lwcc_fraction = 0.0;
    double achieved_fraction = 0.0;
};

// Repetition-averaged comparison of one (network, method, size) cell.
struct SimilarityRecord {
    std::string network;
    Method method = Method::RN;
    double size = 0.0;  // s, box radius, or 0 for BP
    std::size_t repetitions = 0;
    std::map<LocalProperty, double> mean_d;
    std::map<GlobalProperty, std::optional<double>> original_value;
    // mean over the repetitions whose value was defined
    std::map<GlobalProperty, std::optional<double>> mean_simplified_value;
    double original_lwcc = 0.0;
    double mean_lwcc = 0.0;
    double mean_achieved_fraction = 0.0;
};

// Arithmetic mean per property over >= 1 repetitions. All repetitions must
// report the same local property set.
SimilarityRecord average_over_repetitions(
    const std::string& network, Method method, double size,
    const std::map<GlobalProperty, std::optional<double>>& original_globals,
    double original_lwcc, std::span<const RepetitionComparison> repetitions);

// Pooled rank correlation of one global property for one (method, size):
// one (original, mean simplified) pair per network, undefined pairs dropped.
struct GlobalCorrelation {
    Method method = Method::RN;
    double size = 0.0;
    GlobalProperty property = GlobalProperty::Density;
    std::optional<double> rho;
    std::size_t pair_count = 0;
};

GlobalCorrelation pooled_correlation(Method method, double size, GlobalProperty property,
                                     std::span<const SimilarityRecord> records);

struct AnovaResult {
    double f = 0.0;
    double p = 1.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
};

// Classic one-way fixed-effects analysis of variance. Undefined (nullopt)
// when the within-group mean square is zero. Needs >= 2 groups, every group
// nonempty, and more values than groups.
std::optional<AnovaResult> one_way_anova(std::span<const std::vector<double>> groups);

// Regularized incomplete beta function I_x(a,b); used for the F tail
// probability. Exposed for testing.
double regularized_incomplete_beta(double a, double b, double x);

// CSV rows: network, method, size, property, mean_d, orig_value, simp_value,
// reps (one row per property, plus lwcc_fraction and achieved_fraction rows).
void write_similarity_header(std::ostream& out);
void write_similarity_rows(const SimilarityRecord& record, std::ostream& out);

}  // namespace netsimp
