#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skillspace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / validation errors (CLI exit code 2).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

struct DuplicateDocumentId : Error {
    explicit DuplicateDocumentId(const std::string& id)
        : Error("duplicate document id: " + id) {}
};

struct EmptySkillList : Error {
    explicit EmptySkillList(const std::string& id)
        : Error("document has no skills: " + id) {}
};

struct UnknownGroup : Error {
    explicit UnknownGroup(const std::string& group)
        : Error("unknown group: " + group) {}
};

struct EmptyGroup : Error {
    explicit EmptyGroup(const std::string& group)
        : Error("group has no documents: " + group) {}
};

// Computation errors (CLI exit code 1).
struct EmptySkillSet : Error {
    explicit EmptySkillSet(const std::string& label)
        : Error("skill set is empty: " + label) {}
};

struct ZeroNormalization : Error {
    ZeroNormalization() : Error("normalization constant is zero") {}
};

struct TargetSkillNotInB : Error {
    explicit TargetSkillNotInB(std::size_t skill)
        : Error("target skill " + std::to_string(skill) + " has no weight in B") {}
};

struct BaselineZero : Error {
    BaselineZero() : Error("percentage improvement undefined: baseline is zero") {}
};

struct InfeasibleSpec : Error {
    explicit InfeasibleSpec(const std::string& why)
        : Error("infeasible workload spec: " + why) {}
};

struct EngineMismatch : Error {
    explicit EngineMismatch(const std::string& detail)
        : Error("naive and vectorised engines disagree: " + detail) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace skillspace
