#include "privcalc/pal.hpp"

namespace privcalc::pal {

namespace {

// Binding strength; higher binds tighter.
int precedence(const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::Kind::Sum: return 1;
        case ExprNode::Kind::Product: return 2;
        case ExprNode::Kind::Slash: return 3;
        case ExprNode::Kind::Name:
        case ExprNode::Kind::Guard: return 4;
    }
    return 4;
}

void emit(const ExprNode& e, std::string& out);

// Operators are left-associative, so a right operand at the same level
// needs parentheses and a left one does not.
void emit_operand(const ExprNode& e, int min_precedence, std::string& out) {
    if (precedence(e) < min_precedence) {
        out += '(';
        emit(e, out);
        out += ')';
    } else {
        emit(e, out);
    }
}

void emit(const ExprNode& e, std::string& out) {
    switch (e.kind) {
        case ExprNode::Kind::Name:
            out += e.name;
            break;
        case ExprNode::Kind::Sum:
            emit_operand(*e.left, 1, out);
            out += " + ";
            emit_operand(*e.right, 2, out);
            break;
        case ExprNode::Kind::Product:
            emit_operand(*e.left, 2, out);
            out += " * ";
            emit_operand(*e.right, 3, out);
            break;
        case ExprNode::Kind::Slash:
            emit_operand(*e.left, 3, out);
            out += '/';
            out += e.name;
            break;
        case ExprNode::Kind::Guard:
            out += '[';
            emit(*e.left, out);
            out += e.op == GuardOp::Compliance ? " <: " : " ~ ";
            emit(*e.right, out);
            out += ']';
            break;
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format(const ExprNode& expr) {
    std::string out;
    emit(expr, out);
    return out;
}

std::string format(const Program& program) {
    std::string out;
    for (std::size_t n = 0; n < program.namespaces.size(); ++n) {
        const auto& ns = program.namespaces[n];
        if (n) out += "\n";
        out += "namespace " + quote(ns.name) + " {\n";
        for (const auto& s : ns.statements) {
            if (s.kind == StatementNode::Kind::LetIs)
                out += "  let " + s.name + " is " + s.category + "\n";
            else
                out += "  " + s.name + " := " + format(*s.body) + "\n";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace privcalc::pal
