#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "privcalc/engine.hpp"

namespace privcalc::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DeclarationError("cannot open file", SourceLocation{path, 0, 0});
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string id;
    while (std::getline(in, id, ','))
        if (!id.empty()) out.push_back(id);
    return out;
}

struct Options {
    std::string merge = "intersection";
    std::string file;
    std::string namespace_name;
    std::string facts;
    std::string arrangement;
    std::string expr;
    std::string other;
    std::string fact;
    std::string seq;
};

int print_errors(const std::vector<Diagnostic>& errors, std::ostream& err) {
    for (const auto& d : errors) err << d.where.str() << ": error: " << d.message << "\n";
    return kInputError;
}

int check(const Options& o, MergeMode mode, std::ostream& out, std::ostream& err) {
    pal::Program program = pal::parse_source(read_file(o.file), o.file);
    std::optional<FactsFile> facts;
    if (!o.facts.empty()) facts = load_facts_file(o.facts);
    std::size_t privileges = 0;
    for (const auto& ns : program.namespaces) {
        if (!o.namespace_name.empty() && ns.name != o.namespace_name) continue;
        Environment env(ns.name, mode);
        if (facts) env.use_facts(*facts);
        env = load_program(program, std::move(env), o.file);
        for (const auto& w : env.warnings()) err << w.where.str() << ": warning: " << w.message << "\n";
        privileges += env.privilege_names().size();
    }
    out << "ok: " << program.namespaces.size() << " namespace(s), " << privileges << " privilege(s)\n";
    return kSuccess;
}

int query(const Options& o, MergeMode mode, Query q, std::ostream& out, std::ostream& err) {
    ScenarioInput in;
    in.program = read_file(o.file);
    in.program_file = o.file;
    in.namespace_name = o.namespace_name;
    if (!o.facts.empty()) in.facts = load_facts_file(o.facts);
    in.arrangement = o.arrangement;
    if (!in.arrangement.empty() && in.arrangement.front() == '@') in.arrangement = read_file(in.arrangement.substr(1));
    in.merge_mode = mode;
    in.queries.push_back(std::move(q));

    Report report = run_scenario(in);
    for (const auto& w : report.warnings) err << w.where.str() << ": warning: " << w.message << "\n";
    if (!report.ok()) return print_errors(report.errors, err);
    const QueryResult& r = report.results.front();
    out << r.output;
    return r.verdict.value_or(true) ? kSuccess : kAnsweredFalse;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Privilege calculus toolchain for PAL policies", "privcalc"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--merge-conditions", o.merge, "How mergence combines condition sets")
        ->check(CLI::IsMember({"intersection", "union"}));

    auto file_arg = [&](CLI::App* sub) {
        sub->add_option("FILE", o.file, "PAL source")->required();
        sub->add_option("--namespace", o.namespace_name, "Namespace to use (default: the first)");
    };
    auto facts_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--facts", o.facts, "Facts file");
        if (required) opt->required();
    };
    auto arrangement_opt = [&](CLI::App* sub) {
        sub->add_option("--arrangement", o.arrangement, "Arrangement as a PAL sum, or @FILE")->required();
    };

    auto* check_cmd = app.add_subcommand("check", "Parse and resolve a PAL file");
    file_arg(check_cmd);
    facts_opt(check_cmd, false);

    auto* eval_cmd = app.add_subcommand("eval", "Print the canonical form of a privilege");
    file_arg(eval_cmd);
    facts_opt(eval_cmd, false);
    eval_cmd->add_option("--expr", o.expr, "Privilege expression")->required();

    auto* nf_cmd = app.add_subcommand("nf", "Print the normal form over an arrangement");
    file_arg(nf_cmd);
    facts_opt(nf_cmd, false);
    nf_cmd->add_option("--expr", o.expr, "Privilege expression")->required();
    arrangement_opt(nf_cmd);

    auto* eq_cmd = app.add_subcommand("eq", "Decide structural equivalence");
    file_arg(eq_cmd);
    facts_opt(eq_cmd, true);
    eq_cmd->add_option("--left", o.expr, "Left privilege")->required();
    eq_cmd->add_option("--right", o.other, "Right privilege")->required();
    arrangement_opt(eq_cmd);

    auto* pulse_cmd = app.add_subcommand("pulse", "Print the pulsed form at one fact");
    file_arg(pulse_cmd);
    facts_opt(pulse_cmd, true);
    pulse_cmd->add_option("--expr", o.expr, "Privilege expression")->required();
    arrangement_opt(pulse_cmd);
    pulse_cmd->add_option("--fact", o.fact, "Fact id")->required();

    auto* trace_cmd = app.add_subcommand("trace", "Print the trace matrix as CSV");
    file_arg(trace_cmd);
    facts_opt(trace_cmd, true);
    trace_cmd->add_option("--expr", o.expr, "Privilege expression")->required();
    arrangement_opt(trace_cmd);
    trace_cmd->add_option("--seq", o.seq, "Comma-separated fact ids")->required();

    auto* comply_cmd = app.add_subcommand("comply", "Decide whether p is compliant to q at a fact");
    file_arg(comply_cmd);
    facts_opt(comply_cmd, true);
    comply_cmd->add_option("--p", o.expr, "Privilege p")->required();
    comply_cmd->add_option("--q", o.other, "Privilege q")->required();
    arrangement_opt(comply_cmd);
    comply_cmd->add_option("--fact", o.fact, "Fact id")->required();

    auto* import_cmd = app.add_subcommand("import-rbac", "Translate an RBAC model into PAL");
    import_cmd->add_option("RBACFILE", o.file, "RBAC model file")->required();
    import_cmd->add_option("--namespace", o.namespace_name, "Namespace of the emitted program");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    MergeMode mode = o.merge == "union" ? MergeMode::Union : MergeMode::Intersection;
    try {
        if (*check_cmd) return check(o, mode, out, err);
        if (*import_cmd) {
            pal::Program p = import_rbac(load_rbac_file(o.file), o.namespace_name.empty() ? "rbac" : o.namespace_name);
            out << pal::format(p);
            return kSuccess;
        }
        Query q;
        q.expr = o.expr;
        q.other = o.other;
        if (*eval_cmd) {
            q.kind = Query::Kind::Eval;
        } else if (*nf_cmd) {
            q.kind = Query::Kind::NormalForm;
        } else if (*eq_cmd) {
            q.kind = Query::Kind::Equal;
        } else if (*pulse_cmd) {
            q.kind = Query::Kind::Pulse;
            q.facts = {o.fact};
        } else if (*trace_cmd) {
            q.kind = Query::Kind::Trace;
            q.facts = split_ids(o.seq);
        } else {
            q.kind = Query::Kind::Comply;
            q.facts = {o.fact};
        }
        return query(o, mode, std::move(q), out, err);
    } catch (const Error& e) {
        return print_errors({{e.where(), e.message()}}, err);
    }
}

}  // namespace privcalc::cli
