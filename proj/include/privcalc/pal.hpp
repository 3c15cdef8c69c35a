#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "privcalc/error.hpp"

namespace privcalc::pal {

enum class TokenKind {
    Identifier,
    String,
    KwNamespace,
    KwLet,
    KwIs,
    Define,     // :=
    Plus,       // +
    Star,       // *
    Slash,      // /
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Complies,   // <:
    Congruent,  // ~
    End,
};

std::string_view spelling(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;  // identifier name or unescaped string contents
    int line;
    int column;
};

/// Splits PAL source into tokens ending with TokenKind::End. `#` comments run
/// to end of line. Columns count code points. Throws SyntaxError at the first
/// character that starts no token.
std::vector<Token> tokenize(std::string_view source, const std::string& filename = "<pal>");

struct Position {
    int line = 0;
    int column = 0;
};

enum class GuardOp { Compliance, Congruence };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Immutable expression tree. `Slash` keeps its right operand as a name.
struct ExprNode {
    enum class Kind { Name, Sum, Product, Slash, Guard };

    Kind kind;
    std::string name;  // Name identifier, or the right operand of Slash
    Expr left;
    Expr right;        // unused for Name and Slash
    GuardOp op = GuardOp::Compliance;
    Position pos;

    static Expr make_name(std::string name, Position pos = {});
    static Expr make_sum(Expr l, Expr r, Position pos = {});
    static Expr make_product(Expr l, Expr r, Position pos = {});
    static Expr make_slash(Expr l, std::string scope, Position pos = {});
    static Expr make_guard(GuardOp op, Expr l, Expr r, Position pos = {});
};

/// Structural equality; positions are ignored.
bool same_structure(const ExprNode& a, const ExprNode& b);

struct StatementNode {
    enum class Kind { LetIs, Define };

    Kind kind;
    std::string name;      // entity for LetIs, defined name for Define
    std::string category;  // LetIs only
    Expr body;             // Define only
    Position pos;
};

struct NamespaceNode {
    std::string name;
    std::vector<StatementNode> statements;
    Position pos;
};

struct Program {
    std::vector<NamespaceNode> namespaces;
};

bool same_structure(const Program& a, const Program& b);

/// Recursive descent over the token stream. `/` binds tighter than `*`, which
/// binds tighter than `+`; all are left-associative. Throws SyntaxError with
/// the set of expected tokens.
Program parse(const std::vector<Token>& tokens, const std::string& filename = "<pal>");
Program parse_source(std::string_view source, const std::string& filename = "<pal>");

/// A standalone expression, as given on a command line.
Expr parse_expression(std::string_view source, const std::string& filename = "<expr>");

/// Canonical text with the fewest parentheses that keep the tree intact.
std::string format(const ExprNode& expr);
std::string format(const Program& program);

/// True when `text` lexes as a single identifier.
bool is_identifier(std::string_view text);

}  // namespace privcalc::pal
