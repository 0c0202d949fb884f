#include "skillspace/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "skillspace/errors.hpp"

namespace skillspace {

using nlohmann::json;

std::string canonicalize(std::string_view name) {
    std::size_t begin = 0, end = name.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(name[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(name[end - 1]))) --end;
    std::string out(name.substr(begin, end - begin));
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::size_t SkillVocabulary::add(const std::string& canonical_name) {
    auto it = index_.find(canonical_name);
    if (it != index_.end()) return it->second;
    std::size_t id = names_.size();
    names_.push_back(canonical_name);
    index_.emplace(canonical_name, id);
    return id;
}

std::optional<std::size_t> SkillVocabulary::find(const std::string& canonical_name) const {
    auto it = index_.find(canonical_name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

void add_document(Corpus& corpus, std::set<std::string>& seen_ids, const std::string& id,
                  const std::string& group, const std::vector<std::string>& skill_names) {
    if (!seen_ids.insert(id).second) throw DuplicateDocumentId(id);
    std::set<std::size_t> ids;
    for (const auto& raw : skill_names) {
        std::string canon = canonicalize(raw);
        if (!canon.empty()) ids.insert(corpus.vocabulary.add(canon));
    }
    if (ids.empty()) throw EmptySkillList(id);
    Document doc{id, group, std::vector<std::size_t>(ids.begin(), ids.end())};
    corpus.groups[group].push_back(corpus.documents.size());
    corpus.documents.push_back(std::move(doc));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

Corpus load_jsonl(std::istream& in) {
    Corpus corpus;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(e.what(), line_no);
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("group") ||
            !obj.contains("skills") || !obj["skills"].is_array())
            throw ParseError("expected object with id, group, skills[]", line_no);
        std::vector<std::string> skills;
        for (const auto& s : obj["skills"]) {
            if (!s.is_string()) throw ParseError("skill entries must be strings", line_no);
            skills.push_back(s.get<std::string>());
        }
        add_document(corpus, seen, obj["id"].get<std::string>(), obj["group"].get<std::string>(),
                     skills);
    }
    return corpus;
}

Corpus load_csv(std::istream& in) {
    Corpus corpus;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty file", 1);
    ++line_no;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line != "id,group,skills") throw ParseError("expected header id,group,skills", 1);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.size() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 3) throw ParseError("expected 3 comma-separated fields", line_no);
        add_document(corpus, seen, fields[0], fields[1], split(fields[2], ';'));
    }
    return corpus;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    return format == CorpusFormat::jsonl ? load_jsonl(in) : load_csv(in);
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "vocabulary.txt");
        if (!out) throw IoError("cannot write vocabulary: " + dir.string());
        for (const auto& name : corpus.vocabulary.names()) out << name << '\n';
    }
    std::ofstream out(dir / "documents.jsonl");
    if (!out) throw IoError("cannot write documents: " + dir.string());
    for (const auto& doc : corpus.documents) {
        json obj{{"id", doc.id}, {"group", doc.group}, {"skills", doc.skills}};
        out << obj.dump() << '\n';
    }
}

Corpus load_corpus_dir(const std::filesystem::path& dir) {
    Corpus corpus;
    {
        std::ifstream in(dir / "vocabulary.txt");
        if (!in) throw IoError("cannot open vocabulary: " + dir.string());
        std::string name;
        while (std::getline(in, name)) corpus.vocabulary.add(name);
    }
    std::ifstream in(dir / "documents.jsonl");
    if (!in) throw IoError("cannot open documents: " + dir.string());
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(e.what(), line_no);
        }
        Document doc;
        doc.id = obj.at("id").get<std::string>();
        doc.group = obj.at("group").get<std::string>();
        for (std::size_t id : obj.at("skills").get<std::vector<std::size_t>>()) {
            if (id >= corpus.vocabulary.size())
                throw ParseError("skill id out of range: " + std::to_string(id), line_no);
            doc.skills.push_back(id);
        }
        std::sort(doc.skills.begin(), doc.skills.end());
        doc.skills.erase(std::unique(doc.skills.begin(), doc.skills.end()), doc.skills.end());
        if (doc.skills.empty()) throw EmptySkillList(doc.id);
        if (!seen.insert(doc.id).second) throw DuplicateDocumentId(doc.id);
        corpus.groups[doc.group].push_back(corpus.documents.size());
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

std::uint64_t corpus_hash(const Corpus& corpus) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* p, std::size_t n) {
        const auto* bytes = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
    };
    for (const auto& name : corpus.vocabulary.names()) mix(name.data(), name.size() + 1);
    for (const auto& doc : corpus.documents) {
        mix(doc.id.data(), doc.id.size() + 1);
        mix(doc.group.data(), doc.group.size() + 1);
        for (std::size_t s : doc.skills) mix(&s, sizeof(s));
    }
    return h;
}

PresenceMatrix presence_matrix(const Corpus& corpus) {
    PresenceMatrix p{Matrix(corpus.documents.size(), corpus.vocabulary.size())};
    for (std::size_t j = 0; j < corpus.documents.size(); ++j)
        for (std::size_t s : corpus.documents[j].skills) p.data(j, s) = 1.0;
    return p;
}

const std::vector<std::size_t>& subset(const Corpus& corpus, const std::string& group) {
    auto it = corpus.groups.find(group);
    if (it == corpus.groups.end()) throw UnknownGroup(group);
    return it->second;
}

}  // namespace skillspace
