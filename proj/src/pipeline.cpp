#include "skillspace/pipeline.hpp"

#include "skillspace/simmatrix.hpp"
#include "skillspace/skillset.hpp"

namespace skillspace {

std::vector<PairSimilarity> run_pipeline(const Corpus& corpus, Engine engine) {
    std::vector<std::string> groups;
    groups.reserve(corpus.groups.size());
    for (const auto& [name, _] : corpus.groups) groups.push_back(name);

    std::vector<PairSimilarity> out;
    if (engine == Engine::naive) {
        RcaMatrix r = oracle::naive_rca(corpus);
        SkillSimilarityMatrix theta = oracle::naive_theta(oracle::naive_effective_use(r));
        std::vector<WeightedSkillSet> sets;
        sets.reserve(groups.size());
        for (const auto& g : groups) sets.push_back(oracle::naive_skill_weights(corpus, r, g));
        for (std::size_t a = 0; a < groups.size(); ++a) {
            for (std::size_t b = a + 1; b < groups.size(); ++b) {
                out.push_back({groups[a], groups[b],
                               oracle::naive_sss(sets[a], sets[b], theta, oracle::SssNorm::weighted),
                               oracle::naive_sss(sets[a], sets[b], theta, oracle::SssNorm::cosine)});
            }
        }
        return out;
    }

    RcaMatrix r = rca_matrix(presence_matrix(corpus));
    SkillSimilarityMatrix theta = skill_similarity(effective_use(r));
    std::vector<WeightedSkillSet> sets;
    sets.reserve(groups.size());
    for (const auto& g : groups) sets.push_back(skill_weights(corpus, r, g));
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a + 1; b < groups.size(); ++b) {
            out.push_back({groups[a], groups[b], sss_weighted(sets[a], sets[b], theta).value,
                           sss_cosine(sets[a], sets[b], theta)});
        }
    }
    return out;
}

}  // namespace skillspace
