#include "ellop/audit.hpp"

#include "ellop/version.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace ellop {

namespace {

using ordered_json = nlohmann::ordered_json;

CheckEntry make_entry(std::string check, std::string claim, bool pass, bool counted) {
    return CheckEntry{std::move(check), std::move(claim), pass ? "pass" : "fail", {}, counted};
}

ordered_json verdict_json(const EllipticityVerdict& v) {
    ordered_json out;
    out["status"] = ellipticity_name(v.status);
    out["method"] = v.method;
    if (v.rational_witness) out["witness"] = to_string(*v.rational_witness);
    if (v.algebraic_witness) {
        ordered_json cert;
        cert["base"] = to_string(v.algebraic_witness->base);
        cert["direction"] = to_string(v.algebraic_witness->dir);
        cert["polynomial"] = v.algebraic_witness->root.poly.to_string();
        cert["interval"] = {v.algebraic_witness->root.lo.str(), v.algebraic_witness->root.hi.str()};
        out["certificate"] = std::move(cert);
    }
    return out;
}

std::string verdict_text(const EllipticityVerdict& v) {
    std::ostringstream os;
    os << ellipticity_name(v.status) << " (" << v.method << ")";
    if (v.rational_witness) os << ", witness " << to_string(*v.rational_witness);
    if (v.algebraic_witness)
        os << ", witness " << to_string(v.algebraic_witness->base) << " + t*"
           << to_string(v.algebraic_witness->dir) << " with " << v.algebraic_witness->root.poly.to_string()
           << " = 0, t in [" << v.algebraic_witness->root.lo.str() << ", "
           << v.algebraic_witness->root.hi.str() << "]";
    return os.str();
}

}  // namespace

bool AuditReport::all_counted_pass() const {
    for (const auto& entry : checks)
        if (entry.counted && entry.status == "fail") return false;
    return true;
}

AuditReport audit_variety(const Problem& problem) {
    AuditReport report;
    report.variables = problem.context->names();
    report.ideal = problem.ideal_texts;
    report.order_name = problem.order.name();
    report.seed = problem.seed;
    report.input_digest = problem.digest;

    bool constructed = !problem.op.has_value();
    DiffOperator op = DiffOperator::zero(problem.context);
    if (constructed) {
        if (problem.ideal_generators.empty())
            throw InputError("audit: no operator supplied and no ideal to construct one from");
        op = construct_delta_operator(problem.ideal_generators, problem.mode);
        report.operator_source = "constructed:" + delta_mode_name(problem.mode);
    } else {
        op = *problem.op;
        report.operator_source = "supplied";
    }
    if (op.is_zero()) throw InputError("audit: the operator is zero");
    report.operator_text = op.to_string();
    unsigned k = op.structural_order();
    report.operator_order = k;

    {
        bool order_ok = verify_order(op, k) && (k == 0 || !verify_order(op, k - 1));
        auto entry = make_entry(
            "operator_order",
            "iterated commutators of length k+1 annihilate the operator and some length-k "
            "iterate does not, for k = " + std::to_string(k),
            order_ok, true);
        report.checks.push_back(std::move(entry));
    }

    {
        bool all_zero = true;
        std::string bad_gen, bad_image;
        for (const auto& g : problem.ideal_generators) {
            Polynomial image = op.apply(g);
            if (!image.is_zero()) {
                all_zero = false;
                bad_gen = g.to_string();
                bad_image = image.to_string();
                break;
            }
        }
        auto entry = make_entry("generator_annihilation",
                                "the operator maps every ideal generator to zero", all_zero,
                                constructed);
        if (!constructed) entry.status = all_zero ? "pass" : "info";
        if (!all_zero) {
            entry.data.emplace_back("generator", bad_gen);
            entry.data.emplace_back("image", bad_image);
        }
        report.checks.push_back(std::move(entry));
    }

    InvarianceReport invariance = check_ideal_invariance(op, problem.algebra.ideal());
    {
        auto entry = make_entry("ideal_invariance",
                                "the operator maps every element of the ideal into the ideal",
                                invariance.holds, true);
        entry.data.emplace_back("probes", std::to_string(invariance.checked));
        if (!invariance.holds) {
            entry.data.emplace_back("witness", invariance.witness->to_string());
            entry.data.emplace_back("residue", invariance.residue->to_string());
        }
        report.checks.push_back(std::move(entry));
    }

    if (constructed && !problem.ideal_generators.empty()) {
        CheckEntry entry;
        entry.check = "construction_full_ideal_claim";
        entry.claim =
            "generator annihilation by the constructed operator extends to the full ideal";
        entry.counted = false;
        if (invariance.holds) {
            entry.status = "pass";
        } else {
            entry.status = "fail";
            entry.data.emplace_back(
                "note",
                "the constructed operator annihilates every generator but does not map the "
                "full ideal into itself, so the induced operator on the quotient is undefined");
            entry.data.emplace_back("witness", invariance.witness->to_string());
            entry.data.emplace_back("residue", invariance.residue->to_string());
            report.discrepancies.push_back(entry.check);
        }
        report.checks.push_back(std::move(entry));
    }

    {
        CheckEntry entry;
        entry.check = "induced_operator";
        entry.claim = "the operator descends to the quotient algebra";
        entry.counted = false;
        entry.status = "info";
        entry.data.emplace_back("defined", invariance.holds ? "true" : "false");
        if (invariance.holds && !problem.algebra.is_ambient())
            entry.data.emplace_back("order", std::to_string(k));
        report.checks.push_back(std::move(entry));
    }

    std::optional<InducedOperator> induced;
    if (invariance.holds) induced = induce(op, problem.algebra);

    bool elliptic_everywhere = !problem.points.empty();
    for (std::size_t i = 0; i < problem.points.size(); ++i) {
        KPoint h = problem.point_at(i);
        KPoint lifted = lift_to_ambient(h);
        PointEllipticity pe = is_elliptic_at(op, lifted, problem.seed);
        PointReport pr;
        pr.point = problem.points[i];
        pr.symbol = pe.symbol.form.to_string();
        pr.order_holds = pe.order_holds_at_point;
        pr.verdict = pe.verdict;
        elliptic_everywhere =
            elliptic_everywhere && pe.verdict.status == Ellipticity::Elliptic;

        if (induced) {
            PullbackCheck pc = symbol_pullback_check(*induced, h);
            pr.pullback = pc.ok ? "pass" : "fail";
            pr.omega_surjective = pc.omega_surjective;
            auto entry = make_entry(
                "symbol_pullback@" + h.to_string(),
                "the quotient symbol composed with the induced cotangent map equals the "
                "ambient symbol at the lifted point",
                pc.ok, true);
            entry.data.emplace_back("multisets", std::to_string(pc.multisets_checked));
            report.checks.push_back(std::move(entry));
            report.checks.push_back(make_entry(
                "cotangent_map_surjective@" + h.to_string(),
                "the induced cotangent map of the canonical projection is surjective",
                pc.omega_surjective, true));
            pr.transfer_applies = pe.verdict.status == Ellipticity::Elliptic;
            pr.pullback_note = pr.transfer_applies
                                   ? "invariance certified and elliptic upstairs: the quotient "
                                     "operator inherits ellipticity through the surjection"
                                   : "transfer hypotheses not met (upstairs verdict: " +
                                         ellipticity_name(pe.verdict.status) + ")";
        } else {
            pr.pullback = "skipped";
            pr.pullback_note = "no invariance certificate, the induced operator is undefined";
            pr.omega_surjective = cotangent_map(canonical_projection(problem.algebra), h).surjective;
            pr.transfer_applies = false;
        }
        report.points.push_back(std::move(pr));
    }

    if (!problem.points.empty()) {
        CheckEntry entry;
        entry.check = "ellipticity_summary";
        entry.claim = "ellipticity verdicts are results, not pass/fail claims";
        entry.counted = false;
        entry.status = "info";
        entry.data.emplace_back("elliptic_at_every_listed_point",
                                elliptic_everywhere ? "true" : "false");
        report.checks.push_back(std::move(entry));
    }

    return report;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << "audit: variables " << '(';
    for (std::size_t i = 0; i < variables.size(); ++i)
        os << (i ? ", " : "") << variables[i];
    os << "), order " << order_name << ", seed " << seed << "\n";
    os << "ideal:";
    if (ideal.empty()) os << " (zero ideal)";
    for (const auto& g : ideal) os << " " << g << ";";
    os << "\n";
    os << "operator [" << operator_source << "]: " << operator_text << "  (order "
       << operator_order << ")\n";
    for (const auto& c : checks) {
        os << "  [" << c.status << "] " << c.check;
        if (!c.counted && c.status != "info") os << " (not counted)";
        os << ": " << c.claim;
        for (const auto& [key, value] : c.data) os << "\n        " << key << ": " << value;
        os << "\n";
    }
    for (const auto& p : points) {
        os << "point " << to_string(p.point) << ":\n";
        os << "  symbol: " << p.symbol << (p.order_holds ? "" : "  (order drops)") << "\n";
        os << "  ellipticity: " << verdict_text(p.verdict) << "\n";
        os << "  pullback: " << p.pullback;
        if (!p.pullback_note.empty()) os << " (" << p.pullback_note << ")";
        os << "\n";
        os << "  cotangent map surjective: " << (p.omega_surjective ? "true" : "false") << "\n";
    }
    if (!discrepancies.empty()) {
        os << "flagged discrepancies:";
        for (const auto& d : discrepancies) os << " " << d;
        os << "\n";
    }
    os << "result: " << (all_counted_pass() ? "all checks passed" : "a checked claim failed")
       << "\n";
    return os.str();
}

std::string AuditReport::to_json_text() const {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["toolchain"] = toolchain_description();
    j["command"] = "audit";
    j["input_digest"] = input_digest;
    j["seed"] = seed;
    j["variables"] = variables;
    j["ideal"] = ideal;
    j["order"] = order_name;
    ordered_json op;
    op["text"] = operator_text;
    op["source"] = operator_source;
    op["order"] = operator_order;
    j["operator"] = std::move(op);
    ordered_json checks_json = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json e;
        e["check"] = c.check;
        e["claim"] = c.claim;
        e["status"] = c.status;
        e["counted"] = c.counted;
        for (const auto& [key, value] : c.data) e[key] = value;
        checks_json.push_back(std::move(e));
    }
    j["checks"] = std::move(checks_json);
    ordered_json points_json = ordered_json::array();
    for (const auto& p : points) {
        ordered_json e;
        ordered_json coords = ordered_json::array();
        for (const auto& c : p.point) coords.push_back(c.str());
        e["point"] = std::move(coords);
        e["symbol"] = p.symbol;
        e["order_holds"] = p.order_holds;
        e["ellipticity"] = verdict_json(p.verdict);
        e["pullback"] = p.pullback;
        e["pullback_note"] = p.pullback_note;
        e["cotangent_map_surjective"] = p.omega_surjective;
        e["transfer_applies"] = p.transfer_applies;
        points_json.push_back(std::move(e));
    }
    j["points"] = std::move(points_json);
    j["discrepancies"] = discrepancies;
    j["status"] = all_counted_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

}  // namespace ellop
