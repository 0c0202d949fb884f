#include "skillspace/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "skillspace/errors.hpp"

namespace skillspace::oracle {

namespace {

bool has_skill(const Document& doc, std::size_t s) {
    return std::binary_search(doc.skills.begin(), doc.skills.end(), s);
}

}  // namespace

RcaMatrix naive_rca(const Corpus& corpus) {
    const std::size_t n = corpus.documents.size(), m = corpus.vocabulary.size();
    RcaMatrix r;
    r.data = Matrix(n, m);
    r.skills_per_job.assign(n, 0.0);
    r.jobs_per_skill.assign(m, 0.0);

    double d = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < m; ++s)
            if (has_skill(corpus.documents[j], s)) d += 1.0;
    r.total_occurrences = d;

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t s = 0; s < m; ++s) {
            // Row and column sums recomputed per entry, as a direct
            // transcription of the definition.
            double b = 0.0;
            for (std::size_t s2 = 0; s2 < m; ++s2)
                if (has_skill(corpus.documents[j], s2)) b += 1.0;
            double c = 0.0;
            for (std::size_t j2 = 0; j2 < n; ++j2)
                if (has_skill(corpus.documents[j2], s)) c += 1.0;
            const double x = has_skill(corpus.documents[j], s) ? 1.0 : 0.0;
            r.data(j, s) = c > 0.0 ? (x / b) / (c / d) : 0.0;
            if (j == 0) {
                r.jobs_per_skill[s] = c;
                if (c == 0.0) r.degenerate_columns.push_back(s);
            }
            if (s == 0) r.skills_per_job[j] = b;
        }
    }
    return r;
}

EffectiveUseMatrix naive_effective_use(const RcaMatrix& r, double threshold) {
    EffectiveUseMatrix e{Matrix(r.data.rows(), r.data.cols())};
    for (std::size_t j = 0; j < r.data.rows(); ++j)
        for (std::size_t s = 0; s < r.data.cols(); ++s)
            e.data(j, s) = r.data(j, s) >= threshold ? 1.0 : 0.0;
    return e;
}

SkillSimilarityMatrix naive_theta(const EffectiveUseMatrix& e) {
    const std::size_t n = e.data.rows(), m = e.data.cols();
    SkillSimilarityMatrix out;
    out.data = Matrix(m, m);
    out.skill_frequencies.assign(m, 0.0);
    for (std::size_t s = 0; s < m; ++s) {
        double q = 0.0;
        for (std::size_t j = 0; j < n; ++j) q += e.data(j, s);
        out.skill_frequencies[s] = q;
    }
    for (std::size_t s1 = 0; s1 < m; ++s1) {
        for (std::size_t s2 = 0; s2 < m; ++s2) {
            double joint = 0.0, f1 = 0.0, f2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                joint += e.data(j, s1) * e.data(j, s2);
                f1 += e.data(j, s1);
                f2 += e.data(j, s2);
            }
            const double denom = std::max(f1, f2);
            out.data(s1, s2) = denom > 0.0 ? joint / denom : 0.0;
        }
    }
    return out;
}

WeightedSkillSet naive_skill_weights(const Corpus& corpus, const RcaMatrix& r,
                                     const std::string& group) {
    auto it = corpus.groups.find(group);
    if (it == corpus.groups.end()) throw UnknownGroup(group);
    if (it->second.empty()) throw EmptyGroup(group);
    WeightedSkillSet set;
    set.label = group;
    for (std::size_t s = 0; s < r.data.cols(); ++s) {
        double sum = 0.0;
        for (std::size_t j : it->second) sum += r.data(j, s);
        const double mean = sum / static_cast<double>(it->second.size());
        if (mean > 0.0) set.weights.emplace(s, mean);
    }
    if (set.weights.empty()) throw EmptySkillSet(group);
    return set;
}

double naive_sss(const WeightedSkillSet& a, const WeightedSkillSet& b,
                 const SkillSimilarityMatrix& theta, SssNorm norm) {
    if (a.weights.empty()) throw EmptySkillSet(a.label);
    if (b.weights.empty()) throw EmptySkillSet(b.label);
    double num = 0.0;
    for (const auto& [i, wi] : a.weights)
        for (const auto& [j, wj] : b.weights) num += wi * wj * theta.data(i, j);

    if (norm == SssNorm::cosine) {
        double na = 0.0, nb = 0.0;
        for (const auto& [i, wi] : a.weights) na += wi * wi;
        for (const auto& [j, wj] : b.weights) nb += wj * wj;
        return num / (std::sqrt(na) * std::sqrt(nb));
    }
    double denom = 0.0;
    for (const auto& [i, wi] : a.weights)
        for (const auto& [j, wj] : b.weights) denom += wi * wj;
    if (denom <= 0.0) throw ZeroNormalization();
    return num / denom;
}

double naive_latent_alignment(std::size_t target, const WeightedSkillSet& a,
                              const WeightedSkillSet& b, const SkillSimilarityMatrix& theta) {
    auto it = b.weights.find(target);
    if (it == b.weights.end()) throw TargetSkillNotInB(target);
    double sum = 0.0;
    for (const auto& [s, ws] : a.weights) sum += ws * it->second * theta.data(s, target);
    return sum;
}

}  // namespace skillspace::oracle
