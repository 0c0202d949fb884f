#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "skillspace/corpus.hpp"
#include "skillspace/rca.hpp"
#include "skillspace/simmatrix.hpp"

namespace skillspace {

enum class Provenance { derived_from_group, loaded, combined };

struct WeightedSkillSet {
    std::string label;
    std::map<std::size_t, double> weights;  // skill id -> weight > 0
    Provenance provenance = Provenance::derived_from_group;
};

// Mean RCA over the group's documents; skills with zero mean are omitted.
WeightedSkillSet skill_weights(const Corpus& corpus, const RcaMatrix& r,
                               const std::string& group);

// Eq-style cosine normalization: root-sum-square denominator.
double sss_cosine(const WeightedSkillSet& a, const WeightedSkillSet& b,
                  const SkillSimilarityMatrix& theta);

struct WeightedSss {
    double value = 0.0;
    double normalization = 0.0;  // C, the sum of pairwise weight products
};

// Weighted-average normalization: denominator is the sum of weight products.
WeightedSss sss_weighted(const WeightedSkillSet& a, const WeightedSkillSet& b,
                         const SkillSimilarityMatrix& theta);

// Contribution of the whole educational set A toward one target job skill.
double latent_alignment(std::size_t target, const WeightedSkillSet& a,
                        const WeightedSkillSet& b, const SkillSimilarityMatrix& theta);

struct AlignmentRow {
    std::size_t skill = 0;
    double score = 0.0;
};

// Top-k target skills of B by latent alignment; ties broken by lower id.
std::vector<AlignmentRow> top_alignments(const WeightedSkillSet& a,
                                         const WeightedSkillSet& b,
                                         const SkillSimilarityMatrix& theta,
                                         std::size_t k);

void save_skillset(const WeightedSkillSet& set, const SkillVocabulary& vocab,
                   const std::filesystem::path& path);
WeightedSkillSet load_skillset(const std::filesystem::path& path, SkillVocabulary& vocab);

void save_alignment_csv(const std::vector<AlignmentRow>& rows, const SkillVocabulary& vocab,
                        const std::filesystem::path& path);

}  // namespace skillspace
