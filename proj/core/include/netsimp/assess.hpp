#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netsimp {

// whether a high or a low score means a better fit for a property
enum class Orientation { HigherIsBetter, LowerIsBetter };

// Candidates (sizes or methods) ranked per property: rank 0 for the best
// score under the property's orientation, exact ties sharing the average of
// the ranks they span. Property columns containing an undefined score are
// excluded for every candidate so totals stay comparable.
struct RankTable {
    std::vector<std::string> candidates;
    std::vector<std::string> properties;           // included columns
    std::vector<std::string> excluded_properties;  // had undefined scores
    std::vector<std::vector<double>> ranks;        // [candidate][property]

    std::size_t candidate_count() const { return candidates.size(); }
    std::size_t property_count() const { return properties.size(); }
    double rank_sum(std::size_t candidate) const;
};

// scores[candidate][property]; a nullopt marks an undefined fit score
RankTable rank_candidates(const std::vector<std::string>& candidates,
                          const std::vector<std::string>& properties,
                          const std::vector<std::vector<std::optional<double>>>& scores,
                          const std::vector<Orientation>& orientations);

// Normalized total rank per candidate: sum of ranks over properties divided
// by (candidates - 1) * properties. 0 means best on every property, 1 worst
// on every property. Lower is better throughout.
std::vector<double> measure_a(const RankTable& table);

// Weighted variant: sum of rank * weight divided by candidates * sum of
// weights (denominator uses the candidate count, not count - 1). Weights are
// nonnegative, not all zero, one per included property.
std::vector<double> measure_a_weighted(const RankTable& table, std::span<const double> weights);

struct BestSize {
    double size = 0.0;   // smallest size whose measure is a local minimum
    double a = 0.0;
    double global_min_size = 0.0;
    double global_min_a = 0.0;
};

// Scan sizes ascending with a virtual point of measure 1 at size 0. A size
// is a local minimum when strictly below its left neighbor and at most its
// right neighbor; the last size qualifies when strictly below its left
// neighbor. Returns the smallest such size plus the global minimum.
BestSize best_size(std::span<const std::pair<double, double>> a_by_size);

// Methods ordered by their measure ascending (better fit first). Equal
// values share a verdict slot, so ties are explicit.
struct MethodVerdicts {
    std::vector<std::pair<std::string, double>> ordered;  // (method, A) ascending
    std::vector<std::string> best;
    std::vector<std::string> second_best;
    std::vector<std::string> worst;
    bool all_tied = false;
};

MethodVerdicts rank_methods(std::span<const std::pair<std::string, double>> method_scores);

struct Assessment {
    std::string name;
    RankTable table;
    std::vector<double> a;
    std::optional<std::vector<double>> weights;
    std::optional<std::vector<double>> a_weighted;
    std::optional<MethodVerdicts> verdicts;  // when candidates are methods
    std::optional<BestSize> best;            // when candidates are sizes
};

Assessment assess(const std::string& name, const std::vector<std::string>& candidates,
                  const std::vector<std::string>& properties,
                  const std::vector<std::vector<std::optional<double>>>& scores,
                  const std::vector<Orientation>& orientations,
                  std::span<const double> weights = {});

// candidate, one rank column per property, Sum, A (and A_w when present)
void write_assessment_csv(const Assessment& assessment, std::ostream& out);

}  // namespace netsimp
