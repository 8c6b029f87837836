#include "ellop/cli.hpp"

#include "ellop/audit.hpp"
#include "ellop/parse.hpp"
#include "ellop/symbol.hpp"
#include "ellop/version.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <functional>
#include <sstream>

namespace ellop::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommandIo {
    const Invocation& inv;
    std::ostringstream out;
    std::ostringstream err;
    int exit_code = kExitOk;
};

ordered_json envelope(const std::string& command, const Problem* problem) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    if (problem) {
        j["input_digest"] = problem->digest;
        j["seed"] = problem->seed;
    }
    return j;
}

void emit_json(CommandIo& io, const ordered_json& j) { io.out << j.dump(2) << "\n"; }

Problem load_problem(const Invocation& inv) {
    if (!inv.input_path) throw InputError("this command requires --input <problem.json>");
    ProblemOverrides overrides;
    if (inv.order) {
        auto kind = parse_order_kind(*inv.order);
        if (!kind) throw InputError("unknown monomial order '" + *inv.order + "'");
        overrides.order = kind;
    }
    if (inv.mode) {
        auto mode = parse_delta_mode(*inv.mode);
        if (!mode) throw InputError("unknown mode '" + *inv.mode + "'");
        overrides.mode = mode;
    }
    overrides.seed = inv.seed;
    return problem_from_file(*inv.input_path, overrides);
}

// The operator under study: the problem file's, or the one the delta
// construction yields for the ideal.
DiffOperator operator_from(const Problem& problem) {
    if (problem.op) return *problem.op;
    if (problem.ideal_generators.empty())
        throw InputError("no operator in the problem file and no ideal to construct one from");
    return construct_delta_operator(problem.ideal_generators, problem.mode);
}

std::vector<KPoint> requested_points(const Invocation& inv, const Problem& problem) {
    std::vector<KPoint> points;
    if (inv.point_text) {
        points.push_back(
            kpoint(problem.algebra, parse_point_text(*inv.point_text, problem.context->size())));
    } else if (inv.all_points) {
        if (problem.points.empty())
            throw InputError("--all-points given but the problem file lists no points");
        for (std::size_t i = 0; i < problem.points.size(); ++i)
            points.push_back(problem.point_at(i));
    } else {
        throw InputError("this command requires --point \"a,b,...\" or --all-points");
    }
    return points;
}

std::string render_vector(const std::vector<Rational>& v) { return to_string(v); }

ordered_json verdict_to_json(const EllipticityVerdict& v) {
    ordered_json out;
    out["status"] = ellipticity_name(v.status);
    out["method"] = v.method;
    if (v.rational_witness) out["witness"] = render_vector(*v.rational_witness);
    if (v.algebraic_witness) {
        ordered_json cert;
        cert["base"] = render_vector(v.algebraic_witness->base);
        cert["direction"] = render_vector(v.algebraic_witness->dir);
        cert["polynomial"] = v.algebraic_witness->root.poly.to_string();
        cert["interval"] = {v.algebraic_witness->root.lo.str(),
                            v.algebraic_witness->root.hi.str()};
        out["certificate"] = std::move(cert);
    }
    return out;
}

std::string verdict_to_text(const EllipticityVerdict& v) {
    std::ostringstream os;
    os << ellipticity_name(v.status) << " (" << v.method << ")";
    if (v.rational_witness) os << ", witness " << render_vector(*v.rational_witness);
    if (v.algebraic_witness)
        os << ", witness " << render_vector(v.algebraic_witness->base) << " + t*"
           << render_vector(v.algebraic_witness->dir) << ", "
           << v.algebraic_witness->root.poly.to_string() << " = 0, t in ["
           << v.algebraic_witness->root.lo.str() << ", " << v.algebraic_witness->root.hi.str()
           << "]";
    return os.str();
}

// ---- commands ----

void cmd_groebner(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    const auto& basis = problem.algebra.ideal();
    if (io.inv.json) {
        ordered_json j = envelope("groebner", &problem);
        j["order"] = problem.order.name();
        ordered_json elems = ordered_json::array();
        for (const auto& g : basis.elements()) elems.push_back(g.to_string());
        j["basis"] = std::move(elems);
        emit_json(io, j);
        return;
    }
    io.out << "reduced basis (" << problem.order.name() << "):\n";
    if (basis.is_zero_ideal()) io.out << "  (zero ideal)\n";
    for (const auto& g : basis.elements()) io.out << "  " << g.to_string() << "\n";
}

void cmd_nf(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    if (!io.inv.poly_text) throw InputError("nf requires --poly \"<polynomial>\"");
    Polynomial p = parse_polynomial(*io.inv.poly_text, problem.context);
    Polynomial nf = problem.algebra.reduce(p);
    if (io.inv.json) {
        ordered_json j = envelope("nf", &problem);
        j["input"] = *io.inv.poly_text;
        j["normal_form"] = nf.to_string();
        j["in_ideal"] = nf.is_zero();
        emit_json(io, j);
        return;
    }
    io.out << nf.to_string() << "\n";
}

void cmd_point(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    if (!io.inv.point_text) throw InputError("point requires --point \"a,b,...\"");
    auto coords = parse_point_text(*io.inv.point_text, problem.context->size());
    ordered_json j = envelope("point", &problem);
    j["point"] = render_vector(coords);
    try {
        kpoint(problem.algebra, coords);
        j["valid"] = true;
        if (io.inv.json)
            emit_json(io, j);
        else
            io.out << "valid: " << render_vector(coords) << " lies on the variety\n";
    } catch (const PointValidationError& e) {
        j["valid"] = false;
        j["generator"] = e.generator.to_string();
        j["value"] = e.value.str();
        if (io.inv.json)
            emit_json(io, j);
        else
            io.out << "invalid: generator " << e.generator.to_string() << " evaluates to "
                   << e.value.str() << " at " << render_vector(coords) << "\n";
        io.exit_code = kExitCheckFailed;
    }
}

void cmd_cotangent(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    if (!io.inv.point_text) throw InputError("cotangent requires --point \"a,b,...\"");
    KPoint h = kpoint(problem.algebra,
                      parse_point_text(*io.inv.point_text, problem.context->size()));
    std::string model = io.inv.model.value_or("direct");

    CotangentSpace space = cotangent_space(h);
    std::vector<CotangentVector> diffs;
    const auto& ctx = problem.context;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        Polynomial xi = Polynomial::variable(ctx, i);
        if (model == "direct") {
            diffs.push_back(differential(h, xi));
        } else if (model == "classical") {
            FormalDerivationSum s;
            s.add(Rational(1), xi).add(-ev(h, xi), Polynomial::constant(ctx, Rational(1)));
            diffs.push_back(classical_normalize(h, s));
        } else if (model == "rough") {
            diffs.push_back(rough_normalize(h, FormalDerivationSum::single(xi)));
        } else if (model == "algebraic") {
            diffs.push_back(algebraic_normalize(h, FormalDerivationSum::single(xi)));
        } else if (model == "kaehler") {
            KaehlerModel km = kaehler_specialize(h);
            space = km.space;
            diffs.push_back(km.model_differential(xi));
        } else {
            throw InputError("unknown model '" + model +
                             "' (expected classical, rough, algebraic or kaehler)");
        }
    }

    if (io.inv.json) {
        ordered_json j = envelope("cotangent", &problem);
        j["point"] = h.to_string();
        j["model"] = model;
        j["dim"] = space.dim;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < space.relation_rows.rows(); ++r)
            rows.push_back(render_vector(space.relation_rows.row(r)));
        j["relation_rows"] = std::move(rows);
        ordered_json ds = ordered_json::array();
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            ordered_json d;
            d["of"] = ctx->name(i);
            d["coords"] = render_vector(diffs[i].coords);
            ds.push_back(std::move(d));
        }
        j["differentials"] = std::move(ds);
        emit_json(io, j);
        return;
    }
    io.out << "cotangent space at " << h.to_string() << " (model " << model << ")\n";
    io.out << "  dim: " << space.dim << "\n";
    for (std::size_t r = 0; r < space.relation_rows.rows(); ++r)
        io.out << "  relation: " << render_vector(space.relation_rows.row(r)) << "\n";
    for (std::size_t i = 0; i < diffs.size(); ++i)
        io.out << "  d(" << ctx->name(i) << ") = " << render_vector(diffs[i].coords) << "\n";
}

void cmd_order(CommandIo& io) {
    DiffOperator op = DiffOperator::zero(make_context({"X"}));
    std::string text;
    std::optional<Problem> problem;
    if (io.inv.op_text) {
        text = *io.inv.op_text;
        if (io.inv.input_path) {
            problem = load_problem(io.inv);
            op = parse_operator(text, problem->context);
        } else {
            auto names = infer_operator_variables(text);
            if (names.empty()) throw InputError("cannot infer variables from '" + text + "'");
            op = parse_operator(text, make_context(names));
        }
    } else {
        problem = load_problem(io.inv);
        op = operator_from(*problem);
        text = op.to_string();
    }
    if (op.is_zero()) throw InputError("the zero operator has no order");
    unsigned k = op.structural_order();
    bool verified = verify_order(op, k) && (k == 0 || !verify_order(op, k - 1));
    if (io.inv.json) {
        ordered_json j = envelope("order", problem ? &*problem : nullptr);
        j["operator"] = text;
        j["variables"] = op.context()->names();
        j["order"] = k;
        j["verified"] = verified;
        emit_json(io, j);
        return;
    }
    io.out << "operator: " << text << "\n";
    io.out << "order: " << k << (verified ? " (verified by iterated commutators)" : "") << "\n";
}

void cmd_invariance(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    DiffOperator op = operator_from(problem);
    InvarianceReport report = check_ideal_invariance(op, problem.algebra.ideal());
    if (io.inv.json) {
        ordered_json j = envelope("invariance", &problem);
        j["operator"] = op.to_string();
        j["holds"] = report.holds;
        j["probes"] = report.checked;
        if (!report.holds) {
            j["witness"] = report.witness->to_string();
            j["residue"] = report.residue->to_string();
        }
        emit_json(io, j);
    } else {
        io.out << "operator: " << op.to_string() << "\n";
        if (report.holds) {
            io.out << "invariance holds (" << report.checked << " probes reduced to zero)\n";
        } else {
            io.out << "invariance fails\n";
            io.out << "  witness: " << report.witness->to_string() << "\n";
            io.out << "  residue: " << report.residue->to_string() << "\n";
        }
    }
    if (!report.holds) io.exit_code = kExitCheckFailed;
}

void cmd_induce(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    DiffOperator op = operator_from(problem);
    try {
        InducedOperator induced = induce(op, problem.algebra);
        if (io.inv.json) {
            ordered_json j = envelope("induce", &problem);
            j["operator"] = op.to_string();
            j["induced"] = true;
            j["order"] = induced.structural_order();
            j["probes"] = induced.certificate().checked;
            emit_json(io, j);
        } else {
            io.out << "induced operator defined on the quotient (order "
                   << induced.structural_order() << ", " << induced.certificate().checked
                   << " invariance probes)\n";
        }
    } catch (const InduceError& e) {
        if (io.inv.json) {
            ordered_json j = envelope("induce", &problem);
            j["operator"] = op.to_string();
            j["induced"] = false;
            j["witness"] = e.report.witness->to_string();
            j["residue"] = e.report.residue->to_string();
            emit_json(io, j);
        } else {
            io.out << "induced operator undefined: " << e.what() << "\n";
        }
        io.exit_code = kExitCheckFailed;
    }
}

void cmd_symbol(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    DiffOperator op = operator_from(problem);
    if (!io.inv.point_text) throw InputError("symbol requires --point \"a,b,...\"");
    KPoint h = kpoint(problem.algebra,
                      parse_point_text(*io.inv.point_text, problem.context->size()));
    SymbolForm s{h, 0, Polynomial::zero(problem.context)};
    if (problem.algebra.is_ambient()) {
        s = principal_symbol(op, h);
    } else {
        // A quotient point needs the invariance certificate first.
        try {
            InducedOperator induced = induce(op, problem.algebra);
            s = principal_symbol(induced, h);
        } catch (const InduceError& e) {
            io.out << "symbol undefined on the quotient: " << e.what() << "\n";
            io.exit_code = kExitCheckFailed;
            return;
        }
    }
    if (io.inv.json) {
        ordered_json j = envelope("symbol", &problem);
        j["operator"] = op.to_string();
        j["point"] = h.to_string();
        j["degree"] = s.degree;
        j["form"] = s.form.to_string();
        j["order_holds"] = !s.is_zero();
        emit_json(io, j);
        return;
    }
    io.out << "symbol at " << h.to_string() << " (degree " << s.degree << ", includes the "
           << s.degree << "! factor):\n";
    io.out << "  " << s.form.to_string() << (s.is_zero() ? "  (order drops here)" : "") << "\n";
}

void cmd_elliptic(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    DiffOperator op = operator_from(problem);
    auto points = requested_points(io.inv, problem);
    bool all_elliptic = true;
    ordered_json results = ordered_json::array();
    for (const auto& h : points) {
        PointEllipticity pe = is_elliptic_at(op, lift_to_ambient(h), problem.seed);
        all_elliptic = all_elliptic && pe.verdict.status == Ellipticity::Elliptic;
        if (io.inv.json) {
            ordered_json e;
            e["point"] = h.to_string();
            e["symbol"] = pe.symbol.form.to_string();
            e["order_holds"] = pe.order_holds_at_point;
            e["verdict"] = verdict_to_json(pe.verdict);
            results.push_back(std::move(e));
        } else {
            io.out << "point " << h.to_string() << ": " << verdict_to_text(pe.verdict) << "\n";
        }
    }
    if (io.inv.json) {
        ordered_json j = envelope("elliptic", &problem);
        j["operator"] = op.to_string();
        j["points"] = std::move(results);
        j["all_elliptic"] = all_elliptic;
        emit_json(io, j);
    }
    if (!all_elliptic) io.exit_code = kExitCheckFailed;
}

void cmd_delta_construct(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    if (problem.ideal_generators.empty())
        throw InputError("delta-construct requires a non-empty ideal");
    DiffOperator op = construct_delta_operator(problem.ideal_generators, problem.mode);
    if (io.inv.json) {
        ordered_json j = envelope("delta-construct", &problem);
        j["mode"] = delta_mode_name(problem.mode);
        j["operator"] = op.to_string();
        j["order"] = op.structural_order();
        emit_json(io, j);
        return;
    }
    io.out << op.to_string() << "\n";
}

void cmd_audit(CommandIo& io) {
    Problem problem = load_problem(io.inv);
    AuditReport report = audit_variety(problem);
    io.out << (io.inv.json ? report.to_json_text() : report.to_text());
    io.exit_code = report.exit_code();
}

}  // namespace

std::string usage_text() {
    return
        "usage: ellop <command> [flags]\n"
        "\n"
        "commands:\n"
        "  groebner         print the reduced basis of the problem ideal\n"
        "  nf               normal form of --poly against the ideal\n"
        "  point            test whether --point lies on the variety\n"
        "  cotangent        cotangent space data at --point (--model picks the construction)\n"
        "  order            operator order (from --op or the problem file)\n"
        "  invariance       exact decision of L(I) within I (exit 3 when it fails)\n"
        "  induce           induce the operator on the quotient (exit 3 when undefined)\n"
        "  symbol           principal symbol form at --point\n"
        "  elliptic         ellipticity verdict at --point or --all-points\n"
        "  delta-construct  build the even-power annihilating operator for the ideal\n"
        "  audit            run the full verification pipeline over the problem file\n"
        "\n"
        "flags:\n"
        "  --input <file>   problem JSON (schema 1)\n"
        "  --json           machine-readable output (byte-deterministic per input+seed)\n"
        "  --seed <n>       seed for randomized refutation search\n"
        "  --order <name>   grevlex | grlex | lex\n"
        "  --poly <text>    polynomial argument for nf\n"
        "  --op <text>      operator text for order\n"
        "  --point <text>   comma-separated rational coordinates\n"
        "  --model <name>   classical | rough | algebraic | kaehler (cotangent)\n"
        "  --mode <name>    as-written | balanced (delta construction)\n"
        "  --all-points     iterate over every point in the problem file\n"
        "\n"
        "exit codes: 0 ok, 2 input error, 3 a checked claim failed\n";
}

RunResult run(const Invocation& inv) {
    CommandIo io{inv};
    using Handler = std::function<void(CommandIo&)>;
    static const std::vector<std::pair<std::string, Handler>> handlers = {
        {"groebner", cmd_groebner},   {"nf", cmd_nf},
        {"point", cmd_point},         {"cotangent", cmd_cotangent},
        {"order", cmd_order},         {"invariance", cmd_invariance},
        {"induce", cmd_induce},       {"symbol", cmd_symbol},
        {"elliptic", cmd_elliptic},   {"delta-construct", cmd_delta_construct},
        {"audit", cmd_audit},
    };
    try {
        if (inv.command == "help" || inv.command.empty()) {
            io.out << usage_text();
            return {kExitOk, io.out.str(), io.err.str()};
        }
        bool found = false;
        for (const auto& [name, handler] : handlers) {
            if (name == inv.command) {
                handler(io);
                found = true;
                break;
            }
        }
        if (!found) {
            io.err << "error: unknown command '" << inv.command << "'\n" << usage_text();
            return {kExitInputError, io.out.str(), io.err.str()};
        }
    } catch (const Error& e) {
        io.err << "error: " << e.what() << "\n";
        return {kExitInputError, io.out.str(), io.err.str()};
    }
    return {io.exit_code, io.out.str(), io.err.str()};
}

RunResult run_args(const std::vector<std::string>& args) {
    Invocation inv;
    if (args.empty()) {
        return {kExitInputError, "", "error: missing command\n" + usage_text()};
    }
    inv.command = args[0];
    if (inv.command == "--help" || inv.command == "-h") inv.command = "help";
    std::size_t i = 1;
    auto need_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size())
            throw InputError("flag " + flag + " needs a value");
        return args[++i];
    };
    try {
        for (; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "--input") inv.input_path = need_value(a);
            else if (a == "--poly") inv.poly_text = need_value(a);
            else if (a == "--op") inv.op_text = need_value(a);
            else if (a == "--point") inv.point_text = need_value(a);
            else if (a == "--model") inv.model = need_value(a);
            else if (a == "--mode") inv.mode = need_value(a);
            else if (a == "--order") inv.order = need_value(a);
            else if (a == "--json") inv.json = true;
            else if (a == "--all-points") inv.all_points = true;
            else if (a == "--seed") {
                std::string v = need_value(a);
                std::uint64_t seed = 0;
                auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
                if (ec != std::errc() || ptr != v.data() + v.size())
                    throw InputError("--seed needs a non-negative integer, got '" + v + "'");
                inv.seed = seed;
            } else {
                throw InputError("unknown flag '" + a + "'");
            }
        }
    } catch (const Error& e) {
        return {kExitInputError, "", std::string("error: ") + e.what() + "\n" + usage_text()};
    }
    return run(inv);
}

}  // namespace ellop::cli
