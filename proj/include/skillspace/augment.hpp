#pragma once

#include <map>

#include "skillspace/skillset.hpp"

namespace skillspace {

// Linear map placing certification weights in the top alpha band of the
// degree's weight range: w^T(s) = a * w(s, S2) + b_coeff.
struct TransformParams {
    double alpha = 0.2;
    double a = 0.0;
    double b_coeff = 0.0;
    double min_s1 = 0.0, max_s1 = 0.0;
    double min_s2 = 0.0, max_s2 = 0.0;
    bool degenerate_cert = false;    // all cert weights equal: map to max_s1
    bool degenerate_degree = false;  // all degree weights equal: enter at that weight

    double apply(double w) const { return a * w + b_coeff; }
};

TransformParams transform_params(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                                 double alpha);

enum class Origin { degree_only, cert_only, both };

struct CombinedSkillSet {
    WeightedSkillSet set;  // provenance = combined
    std::map<std::size_t, Origin> origin;
    TransformParams params;
};

// Union of supports: degree-only skills keep w(s,S1), cert-only skills get
// w^T(s,S2), overlap skills get the sum of both.
CombinedSkillSet combine(const WeightedSkillSet& s1, const WeightedSkillSet& s2,
                         double alpha);

void save_combined(const CombinedSkillSet& combined, const SkillVocabulary& vocab,
                   const std::filesystem::path& path);

}  // namespace skillspace
