#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "privcalc/engine.hpp"

namespace privcalc {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<std::string> comma_list(std::string_view s) {
    std::vector<std::string> out;
    std::string rest = trim(s);
    if (rest.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = rest.find(',', start);
        out.push_back(trim(std::string_view(rest).substr(start, comma == std::string::npos ? std::string::npos
                                                                                           : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

RbacModel parse_rbac(std::string_view text, const std::string& filename) {
    RbacModel model;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;

        SourceLocation where{filename, line_no, 1};
        auto fail = [&](const std::string& msg) -> void { throw DeclarationError(msg, where); };
        auto ident = [&](const std::string& s, const char* what) {
            if (!pal::is_identifier(s)) fail(std::string("invalid ") + what + " '" + s + "'");
            return s;
        };

        std::size_t eq = line.find('=');
        auto head = words(std::string_view(line).substr(0, eq));
        const std::string& keyword = head[0];
        if (keyword == "op" || keyword == "cat") {
            if (head.size() != 2 || eq != std::string::npos) fail("expected '" + keyword + " <id>'");
            (keyword == "op" ? model.operations : model.categories).push_back(ident(head[1], keyword.c_str()));
        } else if (keyword == "obj") {
            if (head.size() != 4 || head[2] != "is" || eq != std::string::npos) fail("expected 'obj <id> is <cat>'");
            if (!model.objects.emplace(ident(head[1], "object"), ident(head[3], "category")).second)
                fail("duplicate object '" + head[1] + "'");
        } else if (keyword == "inherits") {
            if (head.size() != 3 || eq != std::string::npos) fail("expected 'inherits <senior> <junior>'");
            model.hierarchy.emplace_back(ident(head[1], "role"), ident(head[2], "role"));
        } else if (keyword == "role" || keyword == "user") {
            if (head.size() != 2) fail("expected '" + keyword + " <id> = ...'");
            std::string id = ident(head[1], keyword.c_str());
            auto items = eq == std::string::npos ? std::vector<std::string>{}
                                                 : comma_list(std::string_view(line).substr(eq + 1));
            if (keyword == "role") {
                if (model.roles.contains(id)) fail("duplicate role '" + id + "'");
                auto& perms = model.roles[id];
                for (const auto& item : items) {
                    auto slash = item.find('/');
                    if (slash == std::string::npos) fail("expected '<op>/<cat>', found '" + item + "'");
                    perms.emplace_back(ident(trim(item.substr(0, slash)), "operation"),
                                       ident(trim(item.substr(slash + 1)), "category"));
                }
            } else {
                if (model.users.contains(id)) fail("duplicate user '" + id + "'");
                auto& roles = model.users[id];
                for (const auto& item : items) roles.push_back(ident(item, "role"));
            }
        } else {
            fail("unknown declaration '" + keyword + "'");
        }
    }
    return model;
}

RbacModel load_rbac_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DeclarationError("cannot open RBAC file", SourceLocation{path, 0, 0});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rbac(buf.str(), path);
}

pal::Program import_rbac(const RbacModel& model, const std::string& namespace_name) {
    std::set<std::string> ops(model.operations.begin(), model.operations.end());
    std::set<std::string> cats(model.categories.begin(), model.categories.end());

    std::map<std::string, std::string> owner;
    auto claim = [&](const std::string& name, const std::string& what) {
        auto [it, fresh] = owner.emplace(name, what);
        if (!fresh && it->second != what)
            throw ImportError("'" + name + "' is declared both as " + it->second + " and as " + what);
    };
    for (const auto& o : ops) claim(o, "operation");
    for (const auto& c : cats) claim(c, "category");
    for (const auto& [obj, cat] : model.objects) {
        claim(obj, "object");
        if (!cats.contains(cat)) throw ImportError("object '" + obj + "' is in undeclared category '" + cat + "'");
    }
    for (const auto& [role, perms] : model.roles) {
        claim(role, "role");
        for (const auto& [op, cat] : perms) {
            if (!ops.contains(op)) throw ImportError("role '" + role + "' uses undeclared operation '" + op + "'");
            if (!cats.contains(cat)) throw ImportError("role '" + role + "' uses undeclared category '" + cat + "'");
        }
    }
    for (const auto& [user, roles] : model.users) {
        claim(user, "user");
        if (roles.empty()) throw ImportError("user '" + user + "' has no roles");
        for (const auto& r : roles)
            if (!model.roles.contains(r)) throw ImportError("user '" + user + "' has undeclared role '" + r + "'");
    }

    std::map<std::string, std::set<std::string>> juniors;
    for (const auto& [senior, junior] : model.hierarchy) {
        for (const auto* r : {&senior, &junior})
            if (!model.roles.contains(*r)) throw ImportError("inherits names undeclared role '" + *r + "'");
        if (senior == junior) throw ImportError("role hierarchy has a cycle: " + senior + " -> " + senior);
        juniors[senior].insert(junior);
    }

    // Depth-first, juniors before seniors, siblings by name.
    std::vector<std::string> order;
    std::map<std::string, int> state;  // 1 = on stack, 2 = done
    std::vector<std::string> stack;
    std::function<void(const std::string&)> visit = [&](const std::string& role) {
        if (state[role] == 2) return;
        if (state[role] == 1) {
            auto from = std::find(stack.begin(), stack.end(), role);
            std::string cycle;
            for (auto it = from; it != stack.end(); ++it) cycle += *it + " -> ";
            throw ImportError("role hierarchy has a cycle: " + cycle + role);
        }
        state[role] = 1;
        stack.push_back(role);
        for (const auto& j : juniors[role]) visit(j);
        stack.pop_back();
        state[role] = 2;
        order.push_back(role);
    };
    for (const auto& [role, perms] : model.roles) visit(role);

    pal::NamespaceNode ns{namespace_name, {}, {}};
    std::set<std::string> populated;
    for (const auto& [obj, cat] : model.objects) {
        ns.statements.push_back({pal::StatementNode::Kind::LetIs, obj, cat, nullptr, {}});
        populated.insert(cat);
    }
    for (const auto& cat : cats) {
        if (populated.contains(cat)) continue;
        std::string placeholder = cat + "_obj";
        claim(placeholder, "object");
        ns.statements.push_back({pal::StatementNode::Kind::LetIs, placeholder, cat, nullptr, {}});
    }

    auto sum = [](pal::Expr acc, pal::Expr term) {
        return acc ? pal::ExprNode::make_sum(std::move(acc), std::move(term)) : term;
    };
    for (const auto& role : order) {
        pal::Expr body;
        for (const auto& j : juniors[role]) body = sum(body, pal::ExprNode::make_name(j));
        std::set<std::pair<std::string, std::string>> perms(model.roles.at(role).begin(), model.roles.at(role).end());
        for (const auto& [op, cat] : perms)
            body = sum(body, pal::ExprNode::make_slash(pal::ExprNode::make_name(op), cat));
        if (!body) throw ImportError("role '" + role + "' grants nothing; PAL has no empty privilege");
        ns.statements.push_back({pal::StatementNode::Kind::Define, role, {}, body, {}});
    }
    for (const auto& [user, roles] : model.users) {
        pal::Expr body;
        for (const auto& r : std::set<std::string>(roles.begin(), roles.end()))
            body = sum(body, pal::ExprNode::make_name(r));
        ns.statements.push_back({pal::StatementNode::Kind::Define, user, {}, body, {}});
    }

    pal::Program program;
    if (!model.operations.empty() || !model.categories.empty() || !model.roles.empty() || !model.users.empty() ||
        !model.objects.empty())
        program.namespaces.push_back(std::move(ns));
    return program;
}

}  // namespace privcalc
