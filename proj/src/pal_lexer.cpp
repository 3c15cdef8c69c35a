#include <cctype>

#include "privcalc/pal.hpp"

namespace privcalc::pal {

std::string_view spelling(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::String: return "string";
        case TokenKind::KwNamespace: return "'namespace'";
        case TokenKind::KwLet: return "'let'";
        case TokenKind::KwIs: return "'is'";
        case TokenKind::Define: return "':='";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Complies: return "'<:'";
        case TokenKind::Congruent: return "'~'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            if (at_end()) {
                out.push_back({TokenKind::End, "", line_, column_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

    void advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            // UTF-8 continuation bytes don't start a new column.
            ++column_;
        }
    }

    void skip_blank() {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg, int line, int column) {
        throw SyntaxError(msg, SourceLocation{file_, line, column});
    }

    Token next() {
        int line = line_;
        int column = column_;
        auto simple = [&](TokenKind k, std::size_t width) {
            for (std::size_t n = 0; n < width; ++n) advance();
            return Token{k, "", line, column};
        };
        char c = peek();
        switch (c) {
            case '+': return simple(TokenKind::Plus, 1);
            case '*': return simple(TokenKind::Star, 1);
            case '/': return simple(TokenKind::Slash, 1);
            case '(': return simple(TokenKind::LParen, 1);
            case ')': return simple(TokenKind::RParen, 1);
            case '{': return simple(TokenKind::LBrace, 1);
            case '}': return simple(TokenKind::RBrace, 1);
            case '[': return simple(TokenKind::LBracket, 1);
            case ']': return simple(TokenKind::RBracket, 1);
            case '~': return simple(TokenKind::Congruent, 1);
            case ':':
                if (peek(1) == '=') return simple(TokenKind::Define, 2);
                fail("unexpected ':' (did you mean ':='?)", line, column);
            case '<':
                if (peek(1) == ':') return simple(TokenKind::Complies, 2);
                fail("unexpected '<' (did you mean '<:'?)", line, column);
            case '"': return string_literal();
            default: break;
        }
        if (ident_start(c)) {
            std::size_t start = i_;
            while (!at_end() && ident_char(peek())) advance();
            std::string word(src_.substr(start, i_ - start));
            TokenKind kind = TokenKind::Identifier;
            if (word == "namespace")
                kind = TokenKind::KwNamespace;
            else if (word == "let")
                kind = TokenKind::KwLet;
            else if (word == "is")
                kind = TokenKind::KwIs;
            return {kind, kind == TokenKind::Identifier ? word : "", line, column};
        }
        if (static_cast<unsigned char>(c) >= 0x80) fail("unexpected non-ASCII character", line, column);
        if (std::isprint(static_cast<unsigned char>(c)))
            fail(std::string("unexpected character '") + c + "'", line, column);
        fail("unexpected control character", line, column);
    }

    Token string_literal() {
        int line = line_;
        int column = column_;
        advance();  // opening quote
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n') fail("unterminated string literal", line, column);
            char c = peek();
            if (c == '"') {
                advance();
                return {TokenKind::String, value, line, column};
            }
            if (c == '\\') {
                char esc = peek(1);
                if (esc != '"' && esc != '\\') fail("unknown escape in string literal", line_, column_);
                advance();
                advance();
                value += esc;
                continue;
            }
            std::size_t start = i_;
            advance();
            value += src_.substr(start, i_ - start);
        }
    }

    std::string_view src_;
    const std::string& file_;
    std::size_t i_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& filename) {
    return Lexer(source, filename).run();
}

bool is_identifier(std::string_view text) {
    if (text.empty() || !ident_start(text[0])) return false;
    for (char c : text)
        if (!ident_char(c)) return false;
    return text != "namespace" && text != "let" && text != "is";
}

}  // namespace privcalc::pal
