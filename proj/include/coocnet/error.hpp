#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coocnet {

/// Base of every error raised by the engine. Callers that only need to
/// distinguish "data problem" from "programming problem" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DictionaryError : public Error {
public:
    enum class Kind { MalformedRecord, DuplicateConceptId, EmptyDictionary, Io };

    DictionaryError(Kind kind, std::string detail, std::size_t line = 0)
        : Error(describe(kind, detail, line)), kind_(kind), line_(line), detail_(std::move(detail)) {}

    Kind kind() const noexcept { return kind_; }
    /// 1-based line of the offending record, 0 when not line-specific.
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    static std::string describe(Kind kind, const std::string& detail, std::size_t line);

    Kind kind_;
    std::size_t line_;
    std::string detail_;
};

class MalformedDocument : public Error {
public:
    using Error::Error;
};

class UnknownConcept : public Error {
public:
    explicit UnknownConcept(const std::string& id) : Error("unknown concept: " + id), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class UnknownEdge : public Error {
public:
    UnknownEdge(const std::string& a, const std::string& b) : Error("unknown edge: " + a + " - " + b) {}
};

class StoreError : public Error {
public:
    enum class Kind { IoFailure, VersionMismatch, CorruptFile, MissingFile, IncompatibleIndexes };

    StoreError(Kind kind, std::string name, const std::string& reason = {})
        : Error(describe(kind, name, reason)), kind_(kind), name_(std::move(name)) {}

    Kind kind() const noexcept { return kind_; }
    /// File (or path) the error refers to.
    const std::string& name() const noexcept { return name_; }

private:
    static std::string describe(Kind kind, const std::string& name, const std::string& reason);

    Kind kind_;
    std::string name_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace coocnet
