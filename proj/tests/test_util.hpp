#pragma once

#include <random>
#include <set>
#include <string>

#include "skillspace/corpus.hpp"
#include "skillspace/simmatrix.hpp"
#include "skillspace/skillset.hpp"

namespace skillspace::testutil {

// Random corpus with non-empty documents spread over a few groups. Every
// skill appears at least once so RCA columns are non-degenerate unless the
// caller asks otherwise.
inline Corpus random_corpus(std::mt19937_64& rng, std::size_t n_docs, std::size_t m_skills,
                            std::size_t n_groups = 3) {
    Corpus corpus;
    for (std::size_t s = 0; s < m_skills; ++s)
        corpus.vocabulary.add("s" + std::to_string(s));
    std::uniform_int_distribution<std::size_t> skill_count(1, std::max<std::size_t>(1, m_skills / 2));
    std::uniform_int_distribution<std::size_t> skill_pick(0, m_skills - 1);
    std::uniform_int_distribution<std::size_t> group_pick(0, n_groups - 1);
    for (std::size_t j = 0; j < n_docs; ++j) {
        std::set<std::size_t> skills;
        const std::size_t want = skill_count(rng);
        while (skills.size() < want) skills.insert(skill_pick(rng));
        if (j < m_skills) skills.insert(j % m_skills);  // coverage
        Document doc;
        doc.id = "d" + std::to_string(j);
        doc.group = "g" + std::to_string(j < n_groups ? j : group_pick(rng));
        doc.skills.assign(skills.begin(), skills.end());
        corpus.groups[doc.group].push_back(corpus.documents.size());
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

// Random symmetric theta with unit diagonal, entries in [0, 1].
inline SkillSimilarityMatrix random_theta(std::mt19937_64& rng, std::size_t m) {
    SkillSimilarityMatrix theta;
    theta.data = Matrix(m, m);
    theta.skill_frequencies.assign(m, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        theta.data(i, i) = 1.0;
        for (std::size_t k = i + 1; k < m; ++k) {
            const double v = unit(rng);
            theta.data(i, k) = v;
            theta.data(k, i) = v;
        }
    }
    return theta;
}

// Random sparse weight set over [0, m) with strictly positive weights.
inline WeightedSkillSet random_weights(std::mt19937_64& rng, std::size_t m,
                                       std::size_t max_support, const std::string& label) {
    std::uniform_int_distribution<std::size_t> support(1, max_support);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::uniform_real_distribution<double> weight(0.05, 3.0);
    WeightedSkillSet set;
    set.label = label;
    const std::size_t want = support(rng);
    while (set.weights.size() < want) set.weights.emplace(pick(rng), weight(rng));
    return set;
}

}  // namespace skillspace::testutil
