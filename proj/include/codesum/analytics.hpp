#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codesum/corpus.hpp"

namespace codesum::analytics {

struct FeasibilityRow {
    std::string repo_slug;
    std::int64_t inception_ts = 0;      // first sample's creation_ts
    std::int64_t last_activity_ts = 0;  // head commit time of the checkout
    std::int64_t lifespan_days = 0;
    std::optional<std::int64_t> days_to_n;        // absent when never reached n
    std::optional<double> benefit_fraction;       // (lifespan - days_to_n) / lifespan
};

// How early a project accumulates n samples relative to its lifespan.
// Day arithmetic is UTC floor division; no calendar adjustments.
FeasibilityRow feasibility(const ProjectCorpus& project, std::int64_t last_activity_ts,
                           std::size_t n = 100);

struct CohortMedians {
    double lifespan_days = 0.0;
    std::optional<double> days_to_n;  // median over rows where defined
};

// Standard median, mean of the middle two for even counts. Throws EmptyInput.
CohortMedians cohort_medians(const std::vector<FeasibilityRow>& rows);

struct CostRatio {
    std::int64_t same_samples = 0;
    std::int64_t same_epochs = 0;
    std::int64_t cross_samples = 0;
    std::int64_t cross_epochs = 0;
    double ratio = 0.0;  // (same_samples*same_epochs) / (cross_samples*cross_epochs)
};

// Training-cost comparison in sample-epoch units. Throws NonPositiveInput.
CostRatio cost_ratio(std::int64_t same_samples, std::int64_t same_epochs,
                     std::int64_t cross_samples, std::int64_t cross_epochs);

nlohmann::json to_json(const FeasibilityRow& row);
nlohmann::json to_json(const CostRatio& ratio);

std::string feasibility_markdown(const std::vector<FeasibilityRow>& rows,
                                 const CohortMedians& medians);
std::string cost_markdown(const std::vector<CostRatio>& ratios);

}  // namespace codesum::analytics
