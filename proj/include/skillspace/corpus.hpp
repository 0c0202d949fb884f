#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skillspace/matrix.hpp"

namespace skillspace {

// Lowercase + trim surrounding whitespace. Exact match after that; no
// stemming or fuzzy matching (inputs are assumed taxonomy-mapped).
std::string canonicalize(std::string_view name);

class SkillVocabulary {
public:
    // Returns the id, inserting in first-seen order if absent.
    std::size_t add(const std::string& canonical_name);
    std::optional<std::size_t> find(const std::string& canonical_name) const;

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Document {
    std::string id;
    std::string group;
    std::vector<std::size_t> skills;  // sorted, unique
};

struct Corpus {
    SkillVocabulary vocabulary;
    std::vector<Document> documents;
    std::map<std::string, std::vector<std::size_t>> groups;
};

enum class CorpusFormat { jsonl, csv };

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

// Directory persistence: vocabulary.txt (one skill per line, line = id)
// and documents.jsonl (skill ids, not names).
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus load_corpus_dir(const std::filesystem::path& dir);

// FNV-1a over the canonical serialization; keys the theta cache.
std::uint64_t corpus_hash(const Corpus& corpus);

struct PresenceMatrix {
    Matrix data;  // n x m, entries in {0,1}
};

PresenceMatrix presence_matrix(const Corpus& corpus);

const std::vector<std::size_t>& subset(const Corpus& corpus, const std::string& group);

}  // namespace skillspace
