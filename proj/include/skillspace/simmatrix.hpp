#pragma once

#include <filesystem>
#include <vector>

#include "skillspace/corpus.hpp"
#include "skillspace/matrix.hpp"
#include "skillspace/rca.hpp"

namespace skillspace {

struct EffectiveUseMatrix {
    Matrix data;  // n x m, entries in {0,1}
};

// Boundary inclusive: RCA exactly at the threshold counts as effective.
EffectiveUseMatrix effective_use(const RcaMatrix& r, double threshold = 1.0);

struct SkillSimilarityMatrix {
    Matrix data;                             // m x m, symmetric, entries in [0,1]
    std::vector<double> skill_frequencies;   // q = diag(E^T E)
};

// theta(i,k) = N(i,k) / max(q_i, q_k) with N = E^T E; pairs where both
// frequencies are zero are defined as 0.
SkillSimilarityMatrix skill_similarity(const EffectiveUseMatrix& e);

// Persistence: matrix binary plus a sidecar vocabulary file. The cache
// header carries the source corpus hash so stale caches are rejected.
void save_theta(const SkillSimilarityMatrix& theta, const SkillVocabulary& vocab,
                std::uint64_t source_hash, const std::filesystem::path& path);
SkillSimilarityMatrix load_theta(const std::filesystem::path& path,
                                 std::uint64_t expected_hash);

void export_theta_csv(const SkillSimilarityMatrix& theta, const SkillVocabulary& vocab,
                      const std::filesystem::path& path);

}  // namespace skillspace
