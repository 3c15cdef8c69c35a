#include "privcalc/error.hpp"

namespace privcalc {

std::string SourceLocation::str() const {
    std::string out = file.empty() ? "<input>" : file;
    if (line > 0) {
        out += ":" + std::to_string(line);
        if (column > 0) out += ":" + std::to_string(column);
    }
    return out;
}

static std::string render(const std::string& message, const SourceLocation& where) {
    if (where.file.empty() && where.line == 0) return message;
    return where.str() + ": " + message;
}

Error::Error(std::string message, SourceLocation where)
    : std::runtime_error(render(message, where)),
      message_(std::move(message)),
      where_(std::move(where)) {}

}  // namespace privcalc
