#include "skillspace/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skillspace/errors.hpp"
#include "skillspace/pipeline.hpp"

namespace skillspace {

namespace {

constexpr int kCoverageRetries = 64;

Corpus try_generate(const WorkloadSpec& spec, std::mt19937_64& rng) {
    Corpus corpus;
    for (std::size_t s = 0; s < spec.m_skills; ++s)
        corpus.vocabulary.add("skill_" + std::to_string(s));

    std::uniform_int_distribution<std::size_t> count_dist(spec.skills_min, spec.skills_max);
    std::uniform_int_distribution<std::size_t> skill_dist(0, spec.m_skills - 1);
    std::size_t next_id = 0;
    for (std::size_t g = 0; g < spec.n_groups; ++g) {
        const std::string group = "occupation_" + std::to_string(g);
        for (std::size_t d = 0; d < spec.docs_per_group; ++d) {
            std::set<std::size_t> skills;
            const std::size_t want = count_dist(rng);
            while (skills.size() < want) skills.insert(skill_dist(rng));
            Document doc;
            doc.id = "w" + std::to_string(next_id++);
            doc.group = group;
            doc.skills.assign(skills.begin(), skills.end());
            corpus.groups[group].push_back(corpus.documents.size());
            corpus.documents.push_back(std::move(doc));
        }
    }
    return corpus;
}

bool covers_all_skills(const Corpus& corpus) {
    std::vector<bool> used(corpus.vocabulary.size(), false);
    for (const auto& doc : corpus.documents)
        for (std::size_t s : doc.skills) used[s] = true;
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double iqr(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto at = [&v](double q) {
        const double pos = q * static_cast<double>(v.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
    };
    return at(0.75) - at(0.25);
}

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

void check_agreement(const std::vector<PairSimilarity>& naive,
                     const std::vector<PairSimilarity>& vec) {
    if (naive.size() != vec.size()) throw EngineMismatch("pair count differs");
    for (std::size_t i = 0; i < naive.size(); ++i) {
        const double tol = 1e-9;
        const auto rel = [](double a, double b) {
            const double scale = std::max({std::abs(a), std::abs(b), 1.0});
            return std::abs(a - b) / scale;
        };
        if (rel(naive[i].weighted, vec[i].weighted) > tol ||
            rel(naive[i].cosine, vec[i].cosine) > tol)
            throw EngineMismatch(naive[i].group_a + " x " + naive[i].group_b);
    }
}

}  // namespace

Corpus generate_workload(const WorkloadSpec& spec) {
    if (spec.n_groups < 1 || spec.m_skills < 1 || spec.docs_per_group < 1 ||
        spec.skills_min < 1 || spec.skills_max < spec.skills_min ||
        spec.skills_max > spec.m_skills)
        throw InfeasibleSpec("counts must be >= 1 and skills_min <= skills_max <= m_skills");

    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < kCoverageRetries; ++attempt) {
        Corpus corpus = try_generate(spec, rng);
        if (covers_all_skills(corpus)) return corpus;
    }
    throw InfeasibleSpec("could not cover all " + std::to_string(spec.m_skills) +
                         " skills in " + std::to_string(kCoverageRetries) + " attempts");
}

BenchReport run_benchmark(const std::vector<WorkloadSpec>& specs, std::size_t repetitions) {
    if (repetitions < 5) throw std::invalid_argument("repetitions must be >= 5");
    BenchReport report;
#ifdef _OPENMP
    report.thread_count = omp_get_max_threads();
#else
    report.thread_count = 1;
#endif
    for (const auto& spec : specs) {
        Corpus corpus = generate_workload(spec);

        // Warm-up, also the correctness gate: no timing row is reported for
        // engines that disagree.
        std::vector<PairSimilarity> naive_result = run_pipeline(corpus, Engine::naive);
        std::vector<PairSimilarity> vec_result = run_pipeline(corpus, Engine::vectorised);
        check_agreement(naive_result, vec_result);

        std::vector<double> naive_times, vec_times;
        for (std::size_t rep = 0; rep < repetitions; ++rep)
            naive_times.push_back(time_ms([&] { run_pipeline(corpus, Engine::naive); }));
        for (std::size_t rep = 0; rep < repetitions; ++rep)
            vec_times.push_back(time_ms([&] { run_pipeline(corpus, Engine::vectorised); }));

        BenchRow row;
        row.spec = spec;
        row.naive_ms = median(naive_times);
        row.vectorised_ms = median(vec_times);
        row.speedup = row.vectorised_ms > 0.0 ? row.naive_ms / row.vectorised_ms : 0.0;
        row.naive_iqr_ms = iqr(naive_times);
        row.vectorised_iqr_ms = iqr(vec_times);
        row.repetitions = repetitions;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<WorkloadSpec> paper_ladder(std::size_t docs_per_group, std::uint64_t seed) {
    static constexpr std::pair<std::size_t, std::size_t> kRungs[] = {
        {15, 5}, {30, 10}, {45, 15}, {60, 20}, {75, 25}, {90, 30},
    };
    std::vector<WorkloadSpec> specs;
    for (const auto& [groups, skills] : kRungs) {
        WorkloadSpec spec;
        spec.n_groups = groups;
        spec.m_skills = skills;
        spec.docs_per_group = docs_per_group;
        spec.skills_min = 1;
        spec.skills_max = std::max<std::size_t>(1, skills / 2);
        spec.seed = seed + groups;
        specs.push_back(spec);
    }
    return specs;
}

namespace {

std::optional<std::pair<double, double>> paper_reference(const WorkloadSpec& spec) {
    static constexpr struct {
        std::size_t groups, skills;
        double naive_ms, speedup;
    } kRefs[] = {
        {15, 5, 11.55, 77.0},        {30, 10, 141.58, 1011.0},
        {45, 15, 2206.75, 11034.0},  {60, 20, 5673.70, 28369.0},
        {75, 25, 28927.69, 96426.0}, {90, 30, 34530.35, 143876.0},
    };
    for (const auto& ref : kRefs)
        if (ref.groups == spec.n_groups && ref.skills == spec.m_skills)
            return std::make_pair(ref.naive_ms, ref.speedup);
    return std::nullopt;
}

}  // namespace

std::string render_bench_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "# medians over repetitions with interquartile dispersion; published table reports means\n";
    out << "# threads=" << report.thread_count << '\n';
    out << "groups,skills,docs_per_group,seed,repetitions,naive_ms,naive_iqr_ms,"
           "vectorised_ms,vectorised_iqr_ms,speedup,paper_naive_ms,paper_speedup\n";
    for (const auto& row : report.rows) {
        out << row.spec.n_groups << ',' << row.spec.m_skills << ',' << row.spec.docs_per_group
            << ',' << row.spec.seed << ',' << row.repetitions << ',' << row.naive_ms << ','
            << row.naive_iqr_ms << ',' << row.vectorised_ms << ',' << row.vectorised_iqr_ms
            << ',' << row.speedup << ',';
        if (auto ref = paper_reference(row.spec)) out << ref->first << ',' << ref->second;
        else out << ',';
        out << '\n';
    }
    return out.str();
}

std::string render_bench_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "Medians over " << (report.rows.empty() ? 0 : report.rows.front().repetitions)
        << " repetitions (published table reports means); threads=" << report.thread_count
        << "\n\n";
    out << "| Occupations | Skills | Naive (ms) | Vectorised (ms) | Speedup | Published naive (ms) | Published speedup |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& row : report.rows) {
        out << "| " << row.spec.n_groups << " | " << row.spec.m_skills << " | " << row.naive_ms
            << " | " << row.vectorised_ms << " | " << row.speedup << " | ";
        if (auto ref = paper_reference(row.spec))
            out << ref->first << " | " << ref->second << " |\n";
        else
            out << "- | - |\n";
    }
    return out.str();
}

}  // namespace skillspace
