#include <cctype>
#include <fstream>
#include <sstream>

#include "privcalc/error.hpp"
#include "privcalc/facts.hpp"

namespace privcalc {

namespace {

struct Word {
    std::string text;
    int column;
};

std::vector<Word> split_line(std::string_view line) {
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '=') {
            words.push_back({"=", static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' &&
               line[i] != '#')
            ++i;
        words.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return words;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

FactsFile parse_facts(std::string_view text, const std::string& filename) {
    StatementSet universe;
    std::vector<Fact> generators;
    std::set<std::string> fact_ids;
    std::vector<Condition> conditions;
    std::set<std::string> condition_ids;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;

        auto words = split_line(line);
        if (words.empty()) continue;
        auto at = [&](const Word& w) { return SourceLocation{filename, line_no, w.column}; };
        auto expect_identifier = [&](std::size_t i, const char* what) -> const Word& {
            if (i >= words.size())
                throw DeclarationError(std::string("expected ") + what,
                                       SourceLocation{filename, line_no, static_cast<int>(line.size()) + 1});
            if (!is_identifier(words[i].text))
                throw DeclarationError(std::string("expected ") + what + ", found '" + words[i].text + "'",
                                       at(words[i]));
            return words[i];
        };
        auto expect_equals = [&](std::size_t i) {
            if (i >= words.size() || words[i].text != "=")
                throw DeclarationError("expected '='", i < words.size()
                                                           ? at(words[i])
                                                           : SourceLocation{filename, line_no,
                                                                            static_cast<int>(line.size()) + 1});
        };
        auto statements_from = [&](std::size_t first) {
            StatementSet out;
            for (std::size_t i = first; i < words.size(); ++i) {
                const auto& w = expect_identifier(i, "statement id");
                if (!universe.contains(w.text))
                    throw DeclarationError("unknown statement '" + w.text + "'", at(w));
                out.insert(w.text);
            }
            return out;
        };

        const auto& keyword = words[0].text;
        if (keyword == "statement") {
            const auto& id = expect_identifier(1, "statement id");
            if (words.size() > 2) throw DeclarationError("unexpected '" + words[2].text + "'", at(words[2]));
            if (!universe.insert(id.text).second)
                throw DeclarationError("duplicate statement '" + id.text + "'", at(id));
        } else if (keyword == "fact") {
            const auto& id = expect_identifier(1, "fact id");
            expect_equals(2);
            if (!fact_ids.insert(id.text).second)
                throw DeclarationError("duplicate fact '" + id.text + "'", at(id));
            generators.push_back({id.text, statements_from(3)});
        } else if (keyword == "condition") {
            const auto& id = expect_identifier(1, "condition id");
            expect_equals(2);
            if (!condition_ids.insert(id.text).second)
                throw DeclarationError("duplicate condition '" + id.text + "'", at(id));
            if (words.size() < 4)
                throw DeclarationError("expected 'any', 'true' or 'false'",
                                       SourceLocation{filename, line_no, static_cast<int>(line.size()) + 1});
            const auto& body = words[3];
            if (body.text == "true" || body.text == "false") {
                if (words.size() > 4) throw DeclarationError("unexpected '" + words[4].text + "'", at(words[4]));
                conditions.push_back(Condition::constant(body.text == "true", id.text));
            } else if (body.text == "any") {
                conditions.push_back(Condition::witness(id.text, statements_from(4)));
            } else {
                throw DeclarationError("expected 'any', 'true' or 'false', found '" + body.text + "'", at(body));
            }
        } else {
            throw DeclarationError("unknown declaration '" + keyword + "'", at(words[0]));
        }
    }

    FactsFile out;
    out.family = close_family(universe, generators);
    out.conditions = std::move(conditions);
    return out;
}

FactsFile load_facts_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DeclarationError("cannot open facts file", SourceLocation{path, 0, 0});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_facts(buf.str(), path);
}

}  // namespace privcalc
