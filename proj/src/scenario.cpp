#include "privcalc/engine.hpp"

namespace privcalc {

namespace {

const Fact& lookup_fact(const FactFamily& family, const std::string& id) {
    const Fact* f = family.find(id);
    if (!f) throw EvaluationError("unknown fact '" + id + "'", SourceLocation{"<query>", 0, 0});
    return *f;
}

std::string render_nf(const NormalForm& nf) {
    std::string out;
    for (std::size_t i = 0; i < nf.arrangement.size(); ++i)
        out += to_string(nf.arrangement.basis()[i]) + " : " + to_string(nf.coefficients[i]) + "\n";
    return out;
}

std::string render_pulse(const PulsedForm& pf) {
    std::string out;
    for (std::size_t i = 0; i < pf.arrangement.size(); ++i)
        out += to_string(pf.arrangement.basis()[i]) + " " + (pf.bits[i] ? "1" : "0") + "\n";
    return out;
}

Diagnostic diagnostic(const Error& e) { return {e.where(), e.message()}; }

QueryResult answer(const Query& q, Environment& env, const Arrangement* m) {
    QueryResult r{q, std::nullopt, {}};
    auto expr = [&](const std::string& text, const char* file) {
        return eval_expr(*pal::parse_expression(text, file), env, file);
    };
    auto need_arrangement = [&]() -> const Arrangement& {
        if (!m) throw EvaluationError("this query needs an arrangement");
        return *m;
    };
    auto one_fact = [&]() -> const Fact& {
        if (q.facts.size() != 1) throw EvaluationError("this query needs exactly one fact");
        return lookup_fact(env.family(), q.facts.front());
    };
    EvalContext ctx{&env.family(), m, env.merge_mode()};

    switch (q.kind) {
        case Query::Kind::Eval:
            r.output = to_string(expr(q.expr, "<expr>")) + "\n";
            break;
        case Query::Kind::NormalForm:
            r.output = render_nf(normal_form(expr(q.expr, "<expr>"), need_arrangement()));
            break;
        case Query::Kind::Equal: {
            bool eq = structural_eq(expr(q.expr, "<left>"), expr(q.other, "<right>"), need_arrangement(),
                                    env.family(), ctx);
            r.verdict = eq;
            r.output = eq ? "equal\n" : "not equal\n";
            break;
        }
        case Query::Kind::Pulse:
            r.output = render_pulse(pulse(expr(q.expr, "<expr>"), need_arrangement(), one_fact(), ctx));
            break;
        case Query::Kind::Trace: {
            if (q.facts.empty()) throw EvaluationError("trace needs a non-empty fact sequence");
            std::vector<Fact> seq;
            for (const auto& id : q.facts) seq.push_back(lookup_fact(env.family(), id));
            r.output = to_csv(trace(expr(q.expr, "<expr>"), need_arrangement(), seq, ctx));
            break;
        }
        case Query::Kind::Comply: {
            bool ok = compliant(expr(q.expr, "<p>"), expr(q.other, "<q>"), need_arrangement(), one_fact(), ctx);
            r.verdict = ok;
            r.output = ok ? "compliant\n" : "non-compliant\n";
            break;
        }
        case Query::Kind::Congruent: {
            bool ok = congruent(expr(q.expr, "<left>"), expr(q.other, "<right>"), need_arrangement(), one_fact(), ctx);
            r.verdict = ok;
            r.output = ok ? "congruent\n" : "not congruent\n";
            break;
        }
    }
    return r;
}

}  // namespace

Report run_scenario(const ScenarioInput& input) {
    Report report;
    Environment env(input.namespace_name, input.merge_mode);
    std::optional<Arrangement> arrangement;
    try {
        if (input.facts) env.use_facts(*input.facts);
        env = load_program(pal::parse_source(input.program, input.program_file), std::move(env), input.program_file);
        if (!input.arrangement.empty())
            arrangement = load_arrangement(*pal::parse_expression(input.arrangement, "<arrangement>"), env);
    } catch (const Error& e) {
        report.warnings = env.warnings();
        report.errors.push_back(diagnostic(e));
        return report;
    }
    report.warnings = env.warnings();

    for (const auto& q : input.queries) {
        try {
            report.results.push_back(answer(q, env, arrangement ? &*arrangement : nullptr));
        } catch (const Error& e) {
            report.errors.push_back(diagnostic(e));
        }
    }
    return report;
}

}  // namespace privcalc
