#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skillspace/augment.hpp"
#include "skillspace/skillset.hpp"

namespace skillspace {

struct ImpactReport {
    std::string degree_label;
    std::string cert_label;
    std::string role_label;
    double baseline_theta = 0.0;
    double enhanced_theta = 0.0;  // direct weighted SSS on the combined set
    double C = 0.0;
    double C_prime = 0.0;
    double cert_term = 0.0;  // additive second term of the decomposition
    std::optional<double> percentage_improvement;  // null when baseline is 0
    double identity_residual = 0.0;  // |direct - decomposed|, relative
    std::vector<AlignmentRow> top_contributions;
};

// Weighted-average similarity and its normalization constant C.
std::pair<double, double> baseline_similarity(const WeightedSkillSet& s1,
                                              const WeightedSkillSet& t,
                                              const SkillSimilarityMatrix& theta);

// Combines s1 with the certification s2, computes the enhanced similarity
// both directly and via the C/C' decomposition, and reports the residual.
ImpactReport impact_decompose(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                              const WeightedSkillSet& t, const SkillSimilarityMatrix& theta,
                              double alpha, std::size_t top_k = 5);

double percentage_improvement(double baseline, double enhanced);

// Synthetic corpus exhibiting the small-set amplification effect: two degree
// groups of very different skill-set size receive the same role-aligned
// certification.
struct AnomalyBundle {
    Corpus corpus;
    std::string small_degree = "degree_small";
    std::string large_degree = "degree_large";
    std::string cert = "cert";
    std::string role = "role";
};

AnomalyBundle anomaly_scenario(std::uint64_t seed);

}  // namespace skillspace
