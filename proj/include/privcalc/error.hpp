#pragma once

#include <stdexcept>
#include <string>

namespace privcalc {

/// A position in a named input. Line and column are 1-based; zero means unknown.
struct SourceLocation {
    std::string file;
    int line = 0;
    int column = 0;

    std::string str() const;
};

/// Base of every error the library throws. The message never includes the
/// location; what() does.
class Error : public std::runtime_error {
public:
    explicit Error(std::string message, SourceLocation where = {});

    const std::string& message() const { return message_; }
    const SourceLocation& where() const { return where_; }

private:
    std::string message_;
    SourceLocation where_;
};

class SyntaxError : public Error {
    using Error::Error;
};

/// Name resolution and kind clashes while loading a program.
class ResolutionError : public Error {
    using Error::Error;
};

class ArrangementError : public Error {
    using Error::Error;
};

/// Condition evaluation failed, e.g. a table condition queried off its family.
class EvaluationError : public Error {
    using Error::Error;
};

/// Bad declarations in a facts or RBAC file.
class DeclarationError : public Error {
    using Error::Error;
};

class ImportError : public Error {
    using Error::Error;
};

}  // namespace privcalc
