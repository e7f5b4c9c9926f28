#include "opcoact/cli.hpp"

#include "opcoact/coact.hpp"
#include "opcoact/operad.hpp"
#include "opcoact/palgebra.hpp"
#include "opcoact/universal.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace opcoact {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

json parse_inline(const std::string& text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string("missing ") + what);
    return json::parse(text);
}

struct Context {
    OperadPresentation pres;
    StructureAlgebra alg;
    StructureAlgebra alg_b;
    bool has_b = false;
};

Context load_context(const RunConfig& cfg) {
    Context ctx;
    if (cfg.operad.empty()) throw std::invalid_argument("missing --operad");
    ctx.pres = load_operad(cfg.operad);
    if (cfg.algebra.empty()) throw std::invalid_argument("missing --algebra");
    ctx.alg = load_algebra_file(cfg.algebra, ctx.pres);
    if (!cfg.algebra_b.empty()) {
        ctx.alg_b = load_algebra_file(cfg.algebra_b, ctx.pres);
        ctx.has_b = true;
    }
    return ctx;
}

UniversalPresentation build_presentation(const Context& ctx, const RunConfig& cfg) {
    if (ctx.alg.graded) {
        if (ctx.has_b)
            throw std::invalid_argument("graded presentations support only the square case C(A)");
        return graded_universal_polynomials(ctx.alg, ctx.pres, cfg.order);
    }
    return universal_polynomials(ctx.alg, ctx.has_b ? ctx.alg_b : ctx.alg, ctx.pres, cfg.order);
}

std::string jgen_name(const UniversalPresentation& univ, const OperadPresentation& pres,
                      const JGenTag& tag) {
    std::ostringstream os;
    os << "P[" << pres.generators[tag.gen].name << ";a=";
    auto label = [&](const std::vector<int>& dims, int flat) {
        if (!univ.graded) return std::to_string(flat + 1);
        int p = 0, rest = flat;
        while (rest >= dims[p]) { rest -= dims[p]; ++p; }
        return "(" + std::to_string(p) + "," + std::to_string(rest + 1) + ")";
    };
    os << label(univ.src_dims, tag.a) << ";in=";
    for (std::size_t r = 0; r < tag.inputs.size(); ++r)
        os << (r ? "," : "") << label(univ.tgt_dims, tag.inputs[r]);
    if (univ.graded) os << ";w=" << tag.omega;
    os << "]";
    return os.str();
}

std::string render(const json& j, const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    std::function<void(const json&, int)> walk = [&](const json& v, int depth) {
        std::string pad(2 * depth, ' ');
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (it.value().is_primitive()) {
                    os << pad << it.key() << ": "
                       << (it.value().is_string() ? it.value().get<std::string>()
                                                  : it.value().dump())
                       << "\n";
                } else {
                    os << pad << it.key() << ":\n";
                    walk(it.value(), depth + 1);
                }
            }
        } else if (v.is_array()) {
            for (const auto& x : v) {
                if (x.is_primitive())
                    os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
                else {
                    os << pad << "-\n";
                    walk(x, depth + 1);
                }
            }
        } else {
            os << pad << v.dump() << "\n";
        }
    };
    walk(j, 0);
    return os.str();
}

json polys_report(const UniversalPresentation& univ, const OperadPresentation& pres,
                  const RunConfig& cfg) {
    if (cfg.format == RunConfig::Format::Text) {
        json j;
        j["command"] = cfg.command;
        json lines = json::array();
        for (const auto& jg : univ.jgens)
            lines.push_back(jgen_name(univ, pres, jg.tag) + " = " + jg.poly.str());
        j["jgens"] = lines;
        j["zero_dropped"] = univ.zero_dropped;
        return j;
    }
    return univ.to_json(pres);
}

RunResult finish(const RunConfig& cfg, int code, const json& body) {
    RunResult res;
    res.exit_code = code;
    res.report = render(body, cfg);
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) {
            res.exit_code = ExitInputError;
            res.report = "cannot write '" + cfg.output + "'\n";
            return res;
        }
        out << res.report;
    }
    return res;
}

RunResult run(const RunConfig& cfg) {
    const std::string& cmd = cfg.command;

    if (cmd == "check-axioms") {
        Context ctx = load_context(cfg);
        AxiomReport rep = check_axioms(ctx.alg, ctx.pres);
        json j;
        j["command"] = cmd;
        j["algebra"] = ctx.alg.name;
        j["operad"] = ctx.pres.name;
        j["ok"] = rep.ok();
        json rv = json::array();
        for (const auto& v : rep.relation_violations) {
            json e;
            e["relation"] = v.relation;
            json tuple = json::array();
            for (int x : v.tuple) tuple.push_back(ctx.alg.basis_label(x));
            e["inputs"] = tuple;
            rv.push_back(e);
        }
        j["relation_violations"] = rv;
        json av = json::array();
        for (const auto& v : rep.action_violations) {
            json e;
            e["generator"] = ctx.pres.generators[v.gen].name;
            e["transposition"] = v.transposition;
            json tuple = json::array();
            for (int x : v.tuple) tuple.push_back(ctx.alg.basis_label(x));
            e["inputs"] = tuple;
            av.push_back(e);
        }
        j["action_violations"] = av;
        return finish(cfg, rep.ok() ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "polys" || cmd == "graded-polys") {
        Context ctx = load_context(cfg);
        if (cmd == "graded-polys" && !ctx.alg.graded)
            throw std::invalid_argument("graded-polys: the algebra file is not graded");
        UniversalPresentation univ = build_presentation(ctx, cfg);
        return finish(cfg, ExitOk, polys_report(univ, ctx.pres, cfg));
    }

    if (cmd == "groebner") {
        Ideal ideal;
        json out;
        out["command"] = cmd;
        if (!cfg.ideal.empty()) {
            json j = load_json_file(cfg.ideal);
            ideal.order = order_from_name(j.value("order", "degrevlex"));
            for (const auto& pj : j.at("generators"))
                ideal.generators.push_back(Polynomial::from_json(pj, RingMode::Plain));
        } else {
            Context ctx = load_context(cfg);
            UniversalPresentation univ = build_presentation(ctx, cfg);
            if (univ.graded)
                throw RingModeError("groebner: no Groebner bases over the graded ring");
            ideal = univ.ideal();
        }
        GroebnerBasis gb = buchberger(ideal, cfg.budget);
        out["order"] = order_name(gb.order);
        out["reduced"] = gb.reduced;
        json basis = json::array();
        for (const auto& g : gb.basis) {
            if (cfg.format == RunConfig::Format::Text) basis.push_back(g.str());
            else basis.push_back(g.to_json(gb.order));
        }
        out["basis"] = basis;
        return finish(cfg, ExitOk, out);
    }

    if (cmd == "verify-eta") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        const StructureAlgebra& b = ctx.has_b ? ctx.alg_b : ctx.alg;
        EtaReport rep = verify_eta_morphism(ctx.alg, b, ctx.pres, univ, cfg.budget);
        json j;
        j["command"] = cmd;
        j["ok"] = rep.ok();
        j["checked"] = rep.checked;
        json fails = json::array();
        for (const auto& f : rep.failures) {
            json e;
            e["generator"] = ctx.pres.generators[f.gen].name;
            json tuple = json::array();
            for (int x : f.tuple) tuple.push_back(b.basis_label(x));
            e["inputs"] = tuple;
            e["component"] = ctx.alg.basis_label(f.component);
            e["difference"] = f.difference.str();
            fails.push_back(e);
        }
        j["failures"] = fails;
        return finish(cfg, rep.ok() ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "verify-t52") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        GenerationReport rep = verify_generation(ctx.alg, ctx.pres, univ, cfg.max_arity, cfg.budget);
        json j;
        j["command"] = cmd;
        j["ok"] = rep.ok();
        j["max_arity"] = cfg.max_arity;
        j["composites"] = rep.composites;
        j["polynomials_checked"] = rep.polynomials_checked;
        j["zero_polynomials"] = rep.zero_polynomials;
        json fails = json::array();
        for (const auto& f : rep.non_members) {
            json e;
            e["arity"] = f.arity;
            e["composite"] = f.composite_index;
            e["a"] = f.a + 1;
            json tuple = json::array();
            for (int x : f.tuple) tuple.push_back(x + 1);
            e["inputs"] = tuple;
            fails.push_back(e);
        }
        j["non_members"] = fails;
        return finish(cfg, rep.ok() ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "bialgebra-check") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        BialgebraStructure bial = bialgebra_structure(univ);
        BialgebraReport rep = verify_bialgebra(univ, bial, cfg.budget);
        json j;
        j["command"] = cmd;
        j["ok"] = rep.ok();
        j["coassociative"] = rep.coassociative;
        j["counit_laws"] = rep.counit_laws;
        j["comodule_identity"] = rep.comodule_identity;
        j["jgens_checked"] = rep.jgens_checked;
        json cf = json::array();
        for (auto k : rep.counit_failures)
            cf.push_back(jgen_name(univ, ctx.pres, univ.jgens[k].tag));
        j["counit_failures"] = cf;
        json pf = json::array();
        for (auto k : rep.coproduct_failures)
            pf.push_back(jgen_name(univ, ctx.pres, univ.jgens[k].tag));
        j["coproduct_failures"] = pf;
        return finish(cfg, rep.ok() ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "kpoint-check" || cmd == "aut-check") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        KPoint c = matrix_from_json(parse_inline(cfg.matrix, "--matrix"));
        json j;
        j["command"] = cmd;
        auto violation = first_kpoint_violation(univ, c);
        bool ok = !violation.has_value();
        j["kpoint"] = ok;
        if (violation)
            j["violated"] = jgen_name(univ, ctx.pres, univ.jgens[*violation].tag) + " = " +
                            univ.jgens[*violation].poly.str();
        if (cmd == "aut-check" && ok) {
            auto inv = mat_inverse(c);
            if (!inv) {
                j["invertible"] = false;
                ok = false;
            } else {
                j["invertible"] = true;
                auto iv = first_kpoint_violation(univ, *inv);
                j["inverse_kpoint"] = !iv.has_value();
                if (iv) {
                    ok = false;
                    j["violated_by_inverse"] =
                        jgen_name(univ, ctx.pres, univ.jgens[*iv].tag);
                }
                // cross-check: zeta(c) must be an algebra endomorphism
                bool endo = check_morphism(zeta(c), ctx.alg, ctx.alg, ctx.pres);
                j["zeta_is_morphism"] = endo;
                if (!endo) ok = false;
            }
        }
        j["ok"] = ok;
        return finish(cfg, ok ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "grading-check") {
        Context ctx = load_context(cfg);
        Grading grading = Grading::from_json(load_json_file(cfg.grading));
        bool ok = check_grading(ctx.alg, ctx.pres, grading);
        json j;
        j["command"] = cmd;
        j["ok"] = ok;
        return finish(cfg, ok ? ExitOk : ExitCheckFailed, j);
    }

    if (cmd == "grading-to-morphism") {
        Context ctx = load_context(cfg);
        Grading grading = Grading::from_json(load_json_file(cfg.grading));
        GroupMorphism m = grading_to_morphism(ctx.alg, ctx.pres, grading);
        return finish(cfg, ExitOk, m.to_json());
    }

    if (cmd == "morphism-to-grading") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        GroupMorphism m = GroupMorphism::from_json(load_json_file(cfg.morphism));
        Grading g = morphism_to_grading(univ, m);
        return finish(cfg, ExitOk, g.to_json());
    }

    if (cmd == "conjugate") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        GroupMorphism m = GroupMorphism::from_json(load_json_file(cfg.morphism));
        KPoint g = matrix_from_json(parse_inline(cfg.matrix, "--matrix"));
        GroupMorphism out = conjugate(univ, m, g);
        MorphismReport rep = verify_group_morphism(univ, out);
        if (!rep.ok())
            throw std::runtime_error("conjugate: result fails verification");
        return finish(cfg, ExitOk, out.to_json());
    }

    if (cmd == "morphism-check") {
        Context ctx = load_context(cfg);
        UniversalPresentation univ = build_presentation(ctx, cfg);
        GroupMorphism m = GroupMorphism::from_json(load_json_file(cfg.morphism));
        MorphismReport rep = verify_group_morphism(univ, m);
        json j;
        j["command"] = cmd;
        j["ok"] = rep.ok();
        j["sum_is_identity"] = rep.sum_is_identity;
        json of = json::array();
        for (const auto& [s, t] : rep.orthogonality_failures)
            of.push_back(AbelianGroup::element_key(s) + "*" + AbelianGroup::element_key(t));
        j["orthogonality_failures"] = of;
        json af = json::array();
        for (const auto& [k, sigma] : rep.algebra_failures)
            af.push_back(jgen_name(univ, ctx.pres, univ.jgens[k].tag) + " at " +
                         AbelianGroup::element_key(sigma));
        j["algebra_failures"] = af;
        return finish(cfg, rep.ok() ? ExitOk : ExitCheckFailed, j);
    }

    throw std::invalid_argument("unknown command '" + cmd + "'");
}

} // namespace

RunResult dispatch(const RunConfig& config) {
    try {
        return run(config);
    } catch (const BudgetExceeded& e) {
        return {ExitBudget, std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {ExitInputError, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {ExitInputError, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {ExitInputError, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace opcoact
