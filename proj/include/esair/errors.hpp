#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esair {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingFileError : public Error {
public:
    explicit MissingFileError(const std::string& path)
        : Error("missing file: " + path) {}
};

class MalformedLineError : public Error {
public:
    MalformedLineError(const std::string& path, std::size_t line, const std::string& why)
        : Error(path + ":" + std::to_string(line) + ": " + why), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateTemplateError : public Error {
public:
    using Error::Error;
};

class DuplicateDocIdError : public Error {
public:
    explicit DuplicateDocIdError(const std::string& doc_id)
        : Error("duplicate document id: " + doc_id) {}
};

class UnknownDocError : public Error {
public:
    explicit UnknownDocError(const std::string& doc_id)
        : Error("unknown document id: " + doc_id) {}
};

class EmptyWordError : public Error {
public:
    EmptyWordError() : Error("empty word") {}
};

class EmptyQueryError : public Error {
public:
    EmptyQueryError() : Error("query has no indexable terms") {}
};

class EmptyRelevantSetError : public Error {
public:
    EmptyRelevantSetError() : Error("relevant document set is empty") {}
};

class EmptyListError : public Error {
public:
    EmptyListError() : Error("metric list is empty") {}
};

class MissingGoldError : public Error {
public:
    explicit MissingGoldError(const std::string& word_utf8)
        : Error("no gold root for word: " + word_utf8) {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError() : Error("template length does not match word length") {}
};

class MalformedIndexError : public Error {
public:
    using Error::Error;
};

}  // namespace esair
