#include <initializer_list>
#include <set>

#include "privcalc/pal.hpp"

namespace privcalc::pal {

Expr ExprNode::make_name(std::string name, Position pos) {
    return std::make_shared<const ExprNode>(ExprNode{Kind::Name, std::move(name), nullptr, nullptr,
                                                     GuardOp::Compliance, pos});
}

Expr ExprNode::make_sum(Expr l, Expr r, Position pos) {
    return std::make_shared<const ExprNode>(ExprNode{Kind::Sum, {}, std::move(l), std::move(r),
                                                     GuardOp::Compliance, pos});
}

Expr ExprNode::make_product(Expr l, Expr r, Position pos) {
    return std::make_shared<const ExprNode>(ExprNode{Kind::Product, {}, std::move(l), std::move(r),
                                                     GuardOp::Compliance, pos});
}

Expr ExprNode::make_slash(Expr l, std::string scope, Position pos) {
    return std::make_shared<const ExprNode>(ExprNode{Kind::Slash, std::move(scope), std::move(l), nullptr,
                                                     GuardOp::Compliance, pos});
}

Expr ExprNode::make_guard(GuardOp op, Expr l, Expr r, Position pos) {
    return std::make_shared<const ExprNode>(ExprNode{Kind::Guard, {}, std::move(l), std::move(r), op, pos});
}

bool same_structure(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::Name:
            return a.name == b.name;
        case ExprNode::Kind::Slash:
            return a.name == b.name && same_structure(*a.left, *b.left);
        case ExprNode::Kind::Guard:
            if (a.op != b.op) return false;
            [[fallthrough]];
        case ExprNode::Kind::Sum:
        case ExprNode::Kind::Product:
            return same_structure(*a.left, *b.left) && same_structure(*a.right, *b.right);
    }
    return false;
}

bool same_structure(const Program& a, const Program& b) {
    if (a.namespaces.size() != b.namespaces.size()) return false;
    for (std::size_t n = 0; n < a.namespaces.size(); ++n) {
        const auto& x = a.namespaces[n];
        const auto& y = b.namespaces[n];
        if (x.name != y.name || x.statements.size() != y.statements.size()) return false;
        for (std::size_t i = 0; i < x.statements.size(); ++i) {
            const auto& s = x.statements[i];
            const auto& t = y.statements[i];
            if (s.kind != t.kind || s.name != t.name || s.category != t.category) return false;
            if (s.kind == StatementNode::Kind::Define && !same_structure(*s.body, *t.body)) return false;
        }
    }
    return true;
}

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const std::string& file) : toks_(tokens), file_(file) {
        if (toks_.empty() || toks_.back().kind != TokenKind::End)
            throw SyntaxError("token stream must end with end of input", SourceLocation{file_, 1, 1});
    }

    Program program() {
        Program p;
        std::set<std::string> seen;
        while (!at(TokenKind::End)) {
            if (!at(TokenKind::KwNamespace)) fail({TokenKind::KwNamespace, TokenKind::End});
            const Token& kw = take();
            const Token& name = expect(TokenKind::String);
            if (!seen.insert(name.text).second)
                throw SyntaxError("duplicate namespace \"" + name.text + "\"",
                                  SourceLocation{file_, name.line, name.column});
            expect(TokenKind::LBrace);
            NamespaceNode ns{name.text, {}, {kw.line, kw.column}};
            while (!at(TokenKind::RBrace)) ns.statements.push_back(statement());
            take();
            p.namespaces.push_back(std::move(ns));
        }
        return p;
    }

    Expr lone_expression() {
        Expr e = expr();
        if (!at(TokenKind::End)) fail({TokenKind::Plus, TokenKind::Star, TokenKind::Slash, TokenKind::End});
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    bool at(TokenKind k) const { return cur().kind == k; }
    const Token& take() {
        const Token& t = toks_[i_];
        if (t.kind != TokenKind::End) ++i_;
        return t;
    }

    [[noreturn]] void fail(std::initializer_list<TokenKind> expected) {
        std::string msg = "expected ";
        std::size_t n = 0;
        for (auto k : expected) {
            if (n++) msg += n == expected.size() ? " or " : ", ";
            msg += spelling(k);
        }
        const Token& t = cur();
        msg += ", found ";
        if (t.kind == TokenKind::Identifier)
            msg += "'" + t.text + "'";
        else if (t.kind == TokenKind::String)
            msg += "\"" + t.text + "\"";
        else
            msg += spelling(t.kind);
        throw SyntaxError(msg, SourceLocation{file_, t.line, t.column});
    }

    const Token& expect(TokenKind k) {
        if (!at(k)) fail({k});
        return take();
    }

    StatementNode statement() {
        if (at(TokenKind::KwLet)) {
            const Token& kw = take();
            const Token& entity = expect(TokenKind::Identifier);
            expect(TokenKind::KwIs);
            const Token& category = expect(TokenKind::Identifier);
            return {StatementNode::Kind::LetIs, entity.text, category.text, nullptr, {kw.line, kw.column}};
        }
        if (at(TokenKind::Identifier)) {
            const Token& name = take();
            expect(TokenKind::Define);
            Expr body = expr();
            return {StatementNode::Kind::Define, name.text, {}, std::move(body), {name.line, name.column}};
        }
        fail({TokenKind::KwLet, TokenKind::Identifier, TokenKind::RBrace});
    }

    Expr expr() {
        Expr left = term();
        while (at(TokenKind::Plus)) {
            const Token& op = take();
            left = ExprNode::make_sum(left, term(), {op.line, op.column});
        }
        return left;
    }

    Expr term() {
        Expr left = factor();
        while (at(TokenKind::Star)) {
            const Token& op = take();
            left = ExprNode::make_product(left, factor(), {op.line, op.column});
        }
        return left;
    }

    Expr factor() {
        Expr left = primary();
        while (at(TokenKind::Slash)) {
            const Token& op = take();
            const Token& scope = expect(TokenKind::Identifier);
            left = ExprNode::make_slash(left, scope.text, {op.line, op.column});
        }
        return left;
    }

    Expr primary() {
        if (at(TokenKind::Identifier)) {
            const Token& t = take();
            return ExprNode::make_name(t.text, {t.line, t.column});
        }
        if (at(TokenKind::LParen)) {
            take();
            Expr inner = expr();
            expect(TokenKind::RParen);
            return inner;
        }
        if (at(TokenKind::LBracket)) {
            const Token& open = take();
            Expr l = expr();
            GuardOp op;
            if (at(TokenKind::Complies))
                op = GuardOp::Compliance;
            else if (at(TokenKind::Congruent))
                op = GuardOp::Congruence;
            else
                fail({TokenKind::Complies, TokenKind::Congruent});
            take();
            Expr r = expr();
            expect(TokenKind::RBracket);
            return ExprNode::make_guard(op, l, r, {open.line, open.column});
        }
        fail({TokenKind::Identifier, TokenKind::LParen, TokenKind::LBracket});
    }

    const std::vector<Token>& toks_;
    const std::string& file_;
    std::size_t i_ = 0;
};

}  // namespace

Program parse(const std::vector<Token>& tokens, const std::string& filename) {
    return Parser(tokens, filename).program();
}

Program parse_source(std::string_view source, const std::string& filename) {
    return parse(tokenize(source, filename), filename);
}

Expr parse_expression(std::string_view source, const std::string& filename) {
    auto tokens = tokenize(source, filename);
    return Parser(tokens, filename).lone_expression();
}

}  // namespace privcalc::pal
