#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skillspace/bench.hpp"
#include "skillspace/corpus.hpp"
#include "skillspace/errors.hpp"
#include "skillspace/impact.hpp"
#include "skillspace/oracle.hpp"
#include "skillspace/pipeline.hpp"
#include "skillspace/rca.hpp"
#include "skillspace/simmatrix.hpp"
#include "skillspace/skillset.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace skillspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitInput = 2;

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// The transform hyperparameter is a fraction in (0, 1]; values above 1 are
// read as percentages (e.g. 20 means 0.20).
double normalize_alpha(double alpha) {
    return alpha > 1.0 ? alpha / 100.0 : alpha;
}

struct ThetaBundle {
    RcaMatrix rca;
    SkillSimilarityMatrix theta;
};

// Build RCA and theta for the corpus, optionally restricting theta to the
// documents of selected groups (pooled vs market-only geometry). The theta
// cache on disk is keyed by the corpus content hash.
ThetaBundle build_theta(const Corpus& corpus, Engine engine,
                        const std::vector<std::string>& theta_groups,
                        const std::optional<fs::path>& cache_path) {
    ThetaBundle out;
    if (engine == Engine::naive) {
        out.rca = oracle::naive_rca(corpus);
    } else {
        out.rca = rca_matrix(presence_matrix(corpus));
    }

    if (!theta_groups.empty()) {
        Corpus restricted;
        restricted.vocabulary = corpus.vocabulary;
        for (const auto& g : theta_groups) {
            for (std::size_t j : subset(corpus, g)) {
                restricted.groups[g].push_back(restricted.documents.size());
                restricted.documents.push_back(corpus.documents[j]);
            }
        }
        if (engine == Engine::naive) {
            RcaMatrix r = oracle::naive_rca(restricted);
            out.theta = oracle::naive_theta(oracle::naive_effective_use(r));
        } else {
            RcaMatrix r = rca_matrix(presence_matrix(restricted));
            out.theta = skill_similarity(effective_use(r));
        }
        return out;
    }

    if (cache_path && engine == Engine::vectorised) {
        const std::uint64_t hash = corpus_hash(corpus);
        if (fs::exists(*cache_path)) {
            try {
                out.theta = load_theta(*cache_path, hash);
                return out;
            } catch (const IoError&) {
                // stale or unreadable cache: rebuild below
            }
        }
        out.theta = skill_similarity(effective_use(out.rca));
        save_theta(out.theta, corpus.vocabulary, hash, *cache_path);
        return out;
    }

    if (engine == Engine::naive)
        out.theta = oracle::naive_theta(oracle::naive_effective_use(out.rca));
    else
        out.theta = skill_similarity(effective_use(out.rca));
    return out;
}

SkillSimilarityMatrix identity_theta(std::size_t m) {
    SkillSimilarityMatrix theta;
    theta.data = Matrix(m, m);
    theta.skill_frequencies.assign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) theta.data(i, i) = 1.0;
    return theta;
}

WeightedSkillSet group_weights(const Corpus& corpus, const RcaMatrix& r,
                               const std::string& group, Engine engine) {
    return engine == Engine::naive ? oracle::naive_skill_weights(corpus, r, group)
                                   : skill_weights(corpus, r, group);
}

json report_to_json(const ImpactReport& report, const SkillVocabulary& vocab) {
    json contributions = json::array();
    for (const auto& row : report.top_contributions)
        contributions.push_back({{"skill", vocab.name(row.skill)}, {"score", row.score}});
    json obj{
        {"degree", report.degree_label},
        {"cert", report.cert_label},
        {"role", report.role_label},
        {"baseline_theta", report.baseline_theta},
        {"enhanced_theta", report.enhanced_theta},
        {"C", report.C},
        {"C_prime", report.C_prime},
        {"cert_term", report.cert_term},
        {"identity_residual", report.identity_residual},
        {"top_contributions", contributions},
        {"threads", thread_count()},
    };
    if (report.percentage_improvement)
        obj["percentage_improvement"] = *report.percentage_improvement;
    else
        obj["percentage_improvement"] = nullptr;
    return obj;
}

std::string fmt_scaled(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << value * 1e4;
    return out.str();
}

std::string fmt_pct(const std::optional<double>& pct) {
    if (!pct) return "n/a";
    std::ostringstream out;
    out << std::fixed << std::setprecision(0) << *pct << '%';
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skill-space analytics: similarity, augmentation, certification impact"};
    app.require_subcommand(1);

    std::string engine_name = "vectorised";
    std::string norm_name = "weighted";
    double alpha = 0.2;
    std::uint64_t seed = 0;
    std::string format = "markdown";
    app.add_option("--engine", engine_name, "vectorised|naive")->capture_default_str();
    app.add_option("--norm", norm_name, "weighted|cosine")->capture_default_str();
    app.add_option("--alpha", alpha, "transform band fraction; >1 read as percent")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for synthetic generation")->capture_default_str();
    app.add_option("--format", format, "json|csv|markdown")->capture_default_str();

    // ingest
    auto* ingest = app.add_subcommand("ingest", "load and persist a corpus");
    std::string in_path, in_format = "jsonl", out_dir;
    ingest->add_option("--in", in_path, "input file")->required();
    ingest->add_option("--in-format", in_format, "jsonl|csv")->capture_default_str();
    ingest->add_option("--out", out_dir, "corpus directory")->required();

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "build and cache the skill similarity matrix");
    std::string corpus_dir, theta_out, theta_csv;
    std::vector<std::string> theta_groups;
    theta_cmd->add_option("--corpus", corpus_dir, "corpus directory")->required();
    theta_cmd->add_option("--out", theta_out, "theta cache path (default <corpus>/theta.bin)");
    theta_cmd->add_option("--csv", theta_csv, "also export as CSV");
    theta_cmd->add_option("--theta-groups", theta_groups,
                          "build theta from these groups only (default: all documents)");

    // sss
    auto* sss_cmd = app.add_subcommand("sss", "skill set similarity between groups");
    std::string sss_corpus, theta_arg;
    std::vector<std::string> pairs;
    std::vector<std::string> sss_theta_groups;
    sss_cmd->add_option("--corpus", sss_corpus, "corpus directory")->required();
    sss_cmd->add_option("--pair", pairs, "GROUP_A,GROUP_B (repeatable)")->required();
    sss_cmd->add_option("--theta", theta_arg, "theta cache path, or 'identity' (debug)");
    sss_cmd->add_option("--theta-groups", sss_theta_groups,
                        "build theta from these groups only");

    // align
    auto* align_cmd = app.add_subcommand("align", "top latent skill alignments");
    std::string align_corpus, edu_group, job_group, align_out;
    std::size_t top_k = 5;
    align_cmd->add_option("--corpus", align_corpus, "corpus directory")->required();
    align_cmd->add_option("--edu", edu_group, "educational group")->required();
    align_cmd->add_option("--job", job_group, "target job group")->required();
    align_cmd->add_option("--top-k", top_k, "rows to report")->capture_default_str();
    align_cmd->add_option("--out", align_out, "write CSV here instead of stdout");

    // combine
    auto* combine_cmd = app.add_subcommand("combine", "combine degree and certification sets");
    std::string comb_corpus, degree_group, cert_group, comb_out;
    combine_cmd->add_option("--corpus", comb_corpus, "corpus directory")->required();
    combine_cmd->add_option("--degree", degree_group, "degree group")->required();
    combine_cmd->add_option("--cert", cert_group, "certification group")->required();
    combine_cmd->add_option("--out", comb_out, "output JSON path")->required();

    // impact
    auto* impact_cmd = app.add_subcommand("impact", "certification impact report");
    std::string imp_corpus, imp_degree, imp_cert, imp_role;
    std::vector<std::string> imp_degrees, imp_roles;
    bool matrix_mode = false;
    std::size_t imp_top_k = 5;
    impact_cmd->add_option("--corpus", imp_corpus, "corpus directory")->required();
    impact_cmd->add_option("--degree", imp_degree, "degree group");
    impact_cmd->add_option("--cert", imp_cert, "certification group")->required();
    impact_cmd->add_option("--role", imp_role, "target role group");
    impact_cmd->add_flag("--matrix", matrix_mode, "multi-degree x multi-role tables");
    impact_cmd->add_option("--degrees", imp_degrees, "degree groups for --matrix");
    impact_cmd->add_option("--roles", imp_roles, "role groups for --matrix");
    impact_cmd->add_option("--top-k", imp_top_k, "contribution rows")->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "naive vs vectorised benchmark");
    bool ladder_paper = false;
    std::size_t bench_groups = 10, bench_skills = 8, bench_docs = 50;
    std::size_t bench_skills_min = 1, bench_skills_max = 4, repetitions = 5;
    std::string bench_out;
    bench_cmd->add_flag("--ladder", ladder_paper, "run the published six-rung ladder")
        ->default_str("paper");
    bench_cmd->add_option("--groups", bench_groups, "occupations")->capture_default_str();
    bench_cmd->add_option("--skills", bench_skills, "unique skills")->capture_default_str();
    bench_cmd->add_option("--docs-per-group", bench_docs, "")->capture_default_str();
    bench_cmd->add_option("--skills-min", bench_skills_min, "")->capture_default_str();
    bench_cmd->add_option("--skills-max", bench_skills_max, "")->capture_default_str();
    bench_cmd->add_option("--reps", repetitions, "repetitions (>= 5)")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "write report here instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "oracle vs vectorised equivalence");
    std::string verify_corpus;
    verify_cmd->add_option("--corpus", verify_corpus, "corpus directory")->required();

    CLI11_PARSE(app, argc, argv);

    const Engine engine = engine_name == "naive" ? Engine::naive : Engine::vectorised;
    alpha = normalize_alpha(alpha);

    try {
        if (*ingest) {
            const CorpusFormat fmt =
                in_format == "csv" ? CorpusFormat::csv : CorpusFormat::jsonl;
            Corpus corpus = load_corpus(in_path, fmt);
            save_corpus(corpus, out_dir);
            std::cout << corpus.documents.size() << " documents, " << corpus.vocabulary.size()
                      << " skills, " << corpus.groups.size() << " groups\n";
            return kExitOk;
        }

        if (*theta_cmd) {
            Corpus corpus = load_corpus_dir(corpus_dir);
            const fs::path cache =
                theta_out.empty() ? fs::path(corpus_dir) / "theta.bin" : fs::path(theta_out);
            ThetaBundle bundle = build_theta(corpus, engine, theta_groups, cache);
            if (!theta_groups.empty())
                save_theta(bundle.theta, corpus.vocabulary, corpus_hash(corpus), cache);
            if (!theta_csv.empty())
                export_theta_csv(bundle.theta, corpus.vocabulary, theta_csv);
            std::cout << "theta " << bundle.theta.data.rows() << "x"
                      << bundle.theta.data.cols() << " cached at " << cache.string() << "\n";
            return kExitOk;
        }

        if (*sss_cmd) {
            Corpus corpus = load_corpus_dir(sss_corpus);
            ThetaBundle bundle;
            if (theta_arg == "identity") {
                bundle.rca = engine == Engine::naive
                                 ? oracle::naive_rca(corpus)
                                 : rca_matrix(presence_matrix(corpus));
                bundle.theta = identity_theta(corpus.vocabulary.size());
            } else {
                std::optional<fs::path> cache;
                if (!theta_arg.empty())
                    cache = theta_arg;
                else
                    cache = fs::path(sss_corpus) / "theta.bin";
                bundle = build_theta(corpus, engine, sss_theta_groups, cache);
            }
            for (const auto& pair : pairs) {
                const auto comma = pair.find(',');
                if (comma == std::string::npos)
                    throw Error("--pair expects GROUP_A,GROUP_B: " + pair);
                const std::string ga = pair.substr(0, comma), gb = pair.substr(comma + 1);
                WeightedSkillSet a = group_weights(corpus, bundle.rca, ga, engine);
                WeightedSkillSet b = group_weights(corpus, bundle.rca, gb, engine);
                double value;
                if (engine == Engine::naive) {
                    value = oracle::naive_sss(a, b, bundle.theta,
                                              norm_name == "cosine" ? oracle::SssNorm::cosine
                                                                    : oracle::SssNorm::weighted);
                } else {
                    value = norm_name == "cosine" ? sss_cosine(a, b, bundle.theta)
                                                  : sss_weighted(a, b, bundle.theta).value;
                }
                // Units of 1e-4, matching the published table convention.
                std::cout << ga << ' ' << gb << ' ' << fmt_scaled(value) << '\n';
            }
            return kExitOk;
        }

        if (*align_cmd) {
            Corpus corpus = load_corpus_dir(align_corpus);
            ThetaBundle bundle =
                build_theta(corpus, engine, {}, fs::path(align_corpus) / "theta.bin");
            WeightedSkillSet edu = group_weights(corpus, bundle.rca, edu_group, engine);
            WeightedSkillSet job = group_weights(corpus, bundle.rca, job_group, engine);
            auto rows = top_alignments(edu, job, bundle.theta, top_k);
            if (!align_out.empty()) {
                save_alignment_csv(rows, corpus.vocabulary, align_out);
            } else {
                std::cout << "skill,score\n" << std::setprecision(17);
                for (const auto& row : rows)
                    std::cout << corpus.vocabulary.name(row.skill) << ',' << row.score << '\n';
            }
            return kExitOk;
        }

        if (*combine_cmd) {
            Corpus corpus = load_corpus_dir(comb_corpus);
            ThetaBundle bundle = build_theta(corpus, engine, {}, std::nullopt);
            WeightedSkillSet degree = group_weights(corpus, bundle.rca, degree_group, engine);
            WeightedSkillSet cert = group_weights(corpus, bundle.rca, cert_group, engine);
            CombinedSkillSet combined = combine(degree, cert, alpha);
            save_combined(combined, corpus.vocabulary, comb_out);
            std::cout << "combined " << combined.set.weights.size() << " skills -> " << comb_out
                      << '\n';
            return kExitOk;
        }

        if (*impact_cmd) {
            Corpus corpus = load_corpus_dir(imp_corpus);
            ThetaBundle bundle =
                build_theta(corpus, engine, {}, fs::path(imp_corpus) / "theta.bin");
            WeightedSkillSet cert = group_weights(corpus, bundle.rca, imp_cert, engine);

            if (matrix_mode) {
                if (imp_degrees.empty() || imp_roles.empty())
                    throw Error("--matrix requires --degrees and --roles");
                std::vector<std::vector<ImpactReport>> grid;
                for (const auto& role : imp_roles) {
                    std::vector<ImpactReport> row;
                    WeightedSkillSet t = group_weights(corpus, bundle.rca, role, engine);
                    for (const auto& deg : imp_degrees) {
                        WeightedSkillSet d = group_weights(corpus, bundle.rca, deg, engine);
                        row.push_back(impact_decompose(d, cert, t, bundle.theta, alpha, imp_top_k));
                    }
                    grid.push_back(std::move(row));
                }
                if (format == "json") {
                    json rows = json::array();
                    for (const auto& row : grid)
                        for (const auto& rep : row)
                            rows.push_back(report_to_json(rep, corpus.vocabulary));
                    std::cout << rows.dump(2) << '\n';
                } else {
                    std::cout << "Enhanced similarity (x 1e-4)\n\n| Role |";
                    for (const auto& deg : imp_degrees)
                        std::cout << ' ' << deg << " + " << imp_cert << " |";
                    std::cout << "\n|---|";
                    for (std::size_t i = 0; i < imp_degrees.size(); ++i) std::cout << "---|";
                    std::cout << '\n';
                    for (std::size_t ri = 0; ri < imp_roles.size(); ++ri) {
                        std::cout << "| " << imp_roles[ri] << " |";
                        for (const auto& rep : grid[ri])
                            std::cout << ' ' << fmt_scaled(rep.enhanced_theta) << " |";
                        std::cout << '\n';
                    }
                    std::cout << "\nPercentage increase\n\n| Role |";
                    for (const auto& deg : imp_degrees) std::cout << ' ' << deg << " |";
                    std::cout << "\n|---|";
                    for (std::size_t i = 0; i < imp_degrees.size(); ++i) std::cout << "---|";
                    std::cout << '\n';
                    for (std::size_t ri = 0; ri < imp_roles.size(); ++ri) {
                        std::cout << "| " << imp_roles[ri] << " |";
                        for (const auto& rep : grid[ri])
                            std::cout << ' ' << fmt_pct(rep.percentage_improvement) << " |";
                        std::cout << '\n';
                    }
                }
                return kExitOk;
            }

            if (imp_degree.empty() || imp_role.empty())
                throw Error("impact requires --degree and --role (or --matrix)");
            WeightedSkillSet degree = group_weights(corpus, bundle.rca, imp_degree, engine);
            WeightedSkillSet role = group_weights(corpus, bundle.rca, imp_role, engine);
            ImpactReport report =
                impact_decompose(degree, cert, role, bundle.theta, alpha, imp_top_k);
            if (format == "json") {
                std::cout << report_to_json(report, corpus.vocabulary).dump(2) << '\n';
            } else {
                std::cout << "degree: " << report.degree_label << "\ncert: " << report.cert_label
                          << "\nrole: " << report.role_label << "\nbaseline (x 1e-4): "
                          << fmt_scaled(report.baseline_theta) << "\nenhanced (x 1e-4): "
                          << fmt_scaled(report.enhanced_theta)
                          << "\nimprovement: " << fmt_pct(report.percentage_improvement)
                          << "\n\n| skill | alignment |\n|---|---|\n";
                for (const auto& row : report.top_contributions)
                    std::cout << "| " << corpus.vocabulary.name(row.skill) << " | " << row.score
                              << " |\n";
            }
            return kExitOk;
        }

        if (*bench_cmd) {
            std::vector<WorkloadSpec> specs;
            if (ladder_paper) {
                specs = paper_ladder(bench_docs, seed);
            } else {
                WorkloadSpec spec;
                spec.n_groups = bench_groups;
                spec.m_skills = bench_skills;
                spec.docs_per_group = bench_docs;
                spec.skills_min = bench_skills_min;
                spec.skills_max = bench_skills_max;
                spec.seed = seed;
                specs.push_back(spec);
            }
            BenchReport report = run_benchmark(specs, repetitions);
            const std::string rendered =
                format == "csv" ? render_bench_csv(report) : render_bench_markdown(report);
            if (!bench_out.empty()) {
                std::ofstream out(bench_out);
                out << rendered;
            } else {
                std::cout << rendered;
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            Corpus corpus = load_corpus_dir(verify_corpus);
            auto naive = run_pipeline(corpus, Engine::naive);
            auto vec = run_pipeline(corpus, Engine::vectorised);
            double worst = 0.0;
            for (std::size_t i = 0; i < naive.size(); ++i) {
                const auto rel = [](double a, double b) {
                    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
                    return std::abs(a - b) / scale;
                };
                worst = std::max({worst, rel(naive[i].weighted, vec[i].weighted),
                                  rel(naive[i].cosine, vec[i].cosine)});
            }
            std::cout << naive.size() << " group pairs, max relative divergence " << worst
                      << '\n';
            if (worst > 1e-12) {
                std::cerr << "engines disagree beyond 1e-12\n";
                return kExitComputation;
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DuplicateDocumentId& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const EmptySkillList& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const EmptyGroup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const UnknownGroup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitOk;
}
