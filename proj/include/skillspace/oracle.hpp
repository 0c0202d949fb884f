#pragma once

#include "skillspace/corpus.hpp"
#include "skillspace/rca.hpp"
#include "skillspace/simmatrix.hpp"
#include "skillspace/skillset.hpp"

namespace skillspace {

// Serial, loop-based reference implementations. Deliberately share no
// computation helpers with the parallel engine and recompute the row and
// column sums definitionally inside the loops; they are the equivalence
// oracle and the benchmark baseline.
namespace oracle {

enum class SssNorm { weighted, cosine };

RcaMatrix naive_rca(const Corpus& corpus);

SkillSimilarityMatrix naive_theta(const EffectiveUseMatrix& e);

EffectiveUseMatrix naive_effective_use(const RcaMatrix& r, double threshold = 1.0);

WeightedSkillSet naive_skill_weights(const Corpus& corpus, const RcaMatrix& r,
                                     const std::string& group);

double naive_sss(const WeightedSkillSet& a, const WeightedSkillSet& b,
                 const SkillSimilarityMatrix& theta, SssNorm norm);

double naive_latent_alignment(std::size_t target, const WeightedSkillSet& a,
                              const WeightedSkillSet& b, const SkillSimilarityMatrix& theta);

}  // namespace oracle
}  // namespace skillspace
