#include "skillspace/skillset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>

#include <json.hpp>

#include "skillspace/errors.hpp"

namespace skillspace {

using nlohmann::json;

WeightedSkillSet skill_weights(const Corpus& corpus, const RcaMatrix& r,
                               const std::string& group) {
    const auto& docs = subset(corpus, group);
    if (docs.empty()) throw EmptyGroup(group);
    WeightedSkillSet set;
    set.label = group;
    set.provenance = Provenance::derived_from_group;
    const double inv = 1.0 / static_cast<double>(docs.size());
    for (std::size_t s = 0; s < r.data.cols(); ++s) {
        double sum = 0.0;
        for (std::size_t j : docs) sum += r.data(j, s);
        if (sum > 0.0) set.weights.emplace(s, sum * inv);
    }
    if (set.weights.empty()) throw EmptySkillSet(group);
    return set;
}

double sss_cosine(const WeightedSkillSet& a, const WeightedSkillSet& b,
                  const SkillSimilarityMatrix& theta) {
    if (a.weights.empty()) throw EmptySkillSet(a.label);
    if (b.weights.empty()) throw EmptySkillSet(b.label);
    double num = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [i, wi] : a.weights) {
        na += wi * wi;
        for (const auto& [j, wj] : b.weights) num += wi * wj * theta.data(i, j);
    }
    for (const auto& [j, wj] : b.weights) nb += wj * wj;
    return num / (std::sqrt(na) * std::sqrt(nb));
}

WeightedSss sss_weighted(const WeightedSkillSet& a, const WeightedSkillSet& b,
                         const SkillSimilarityMatrix& theta) {
    if (a.weights.empty()) throw EmptySkillSet(a.label);
    if (b.weights.empty()) throw EmptySkillSet(b.label);
    double num = 0.0, denom = 0.0;
    for (const auto& [i, wi] : a.weights) {
        for (const auto& [j, wj] : b.weights) {
            const double prod = wi * wj;
            num += prod * theta.data(i, j);
            denom += prod;
        }
    }
    if (denom <= 0.0) throw ZeroNormalization();
    return {num / denom, denom};
}

double latent_alignment(std::size_t target, const WeightedSkillSet& a,
                        const WeightedSkillSet& b, const SkillSimilarityMatrix& theta) {
    auto it = b.weights.find(target);
    if (it == b.weights.end()) throw TargetSkillNotInB(target);
    const double wt = it->second;
    double sum = 0.0;
    for (const auto& [s, ws] : a.weights) sum += ws * wt * theta.data(s, target);
    return sum;
}

std::vector<AlignmentRow> top_alignments(const WeightedSkillSet& a,
                                         const WeightedSkillSet& b,
                                         const SkillSimilarityMatrix& theta,
                                         std::size_t k) {
    std::vector<AlignmentRow> rows;
    rows.reserve(b.weights.size());
    for (const auto& [target, _] : b.weights)
        rows.push_back({target, latent_alignment(target, a, b, theta)});
    std::stable_sort(rows.begin(), rows.end(), [](const AlignmentRow& x, const AlignmentRow& y) {
        if (x.score != y.score) return x.score > y.score;
        return x.skill < y.skill;
    });
    if (rows.size() > k) rows.resize(k);
    return rows;
}

void save_skillset(const WeightedSkillSet& set, const SkillVocabulary& vocab,
                   const std::filesystem::path& path) {
    json weights = json::object();
    for (const auto& [s, w] : set.weights) weights[vocab.name(s)] = w;
    json obj{{"label", set.label}, {"weights", weights}};
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << obj.dump(2) << '\n';
}

WeightedSkillSet load_skillset(const std::filesystem::path& path, SkillVocabulary& vocab) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    json obj;
    try {
        in >> obj;
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 1);
    }
    WeightedSkillSet set;
    set.label = obj.at("label").get<std::string>();
    set.provenance = Provenance::loaded;
    for (const auto& [name, w] : obj.at("weights").items()) {
        const double weight = w.get<double>();
        if (weight < 0.0) throw ParseError("negative weight for skill " + name, 1);
        if (weight > 0.0) set.weights.emplace(vocab.add(canonicalize(name)), weight);
    }
    if (set.weights.empty()) throw EmptySkillSet(set.label);
    return set;
}

void save_alignment_csv(const std::vector<AlignmentRow>& rows, const SkillVocabulary& vocab,
                        const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "skill,score\n" << std::setprecision(17);
    for (const auto& row : rows) out << vocab.name(row.skill) << ',' << row.score << '\n';
}

}  // namespace skillspace
