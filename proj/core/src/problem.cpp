#include "ellop/problem.hpp"

#include "ellop/parse.hpp"
#include "ellop/version.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ellop {

namespace {

using nlohmann::json;

Rational coordinate_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": coordinates must be integers or rational strings like \"8/3\"");
}

}  // namespace

std::vector<Rational> parse_point_text(const std::string& text, std::size_t expected_len) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty coordinate in point '" + text + "'");
        out.push_back(parse_rational(piece.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected_len)
        throw InputError("point '" + text + "' has " + std::to_string(out.size()) +
                         " coordinates, expected " + std::to_string(expected_len));
    return out;
}

Problem problem_from_json_text(const std::string& text, const ProblemOverrides& overrides) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("problem file must be a JSON object");

    static const std::set<std::string> known = {"schema", "variables", "ideal",  "operator",
                                                "points", "order",     "mode",   "seed"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw InputError("unknown field '" + key + "' in problem file");

    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != kSchemaVersion)
        throw InputError("problem file must declare \"schema\": 1");

    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw InputError("problem file needs a non-empty \"variables\" array");
    std::vector<std::string> vars;
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw InputError("\"variables\" entries must be strings");
        vars.push_back(v.get<std::string>());
    }
    ContextPtr ctx = make_context(vars);

    OrderKind kind = OrderKind::Grevlex;
    if (j.contains("order")) {
        if (!j["order"].is_string()) throw InputError("\"order\" must be a string");
        auto parsed = parse_order_kind(j["order"].get<std::string>());
        if (!parsed)
            throw InputError("unknown monomial order '" + j["order"].get<std::string>() +
                             "' (expected grevlex, grlex or lex)");
        kind = *parsed;
    }
    if (overrides.order) kind = *overrides.order;

    std::vector<std::string> ideal_texts;
    std::vector<Polynomial> generators;
    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) throw InputError("\"ideal\" must be an array of strings");
        for (const auto& g : j["ideal"]) {
            if (!g.is_string()) throw InputError("\"ideal\" entries must be strings");
            std::string text_g = g.get<std::string>();
            try {
                generators.push_back(parse_polynomial(text_g, ctx));
            } catch (const ParseError& e) {
                throw InputError("ideal generator '" + text_g + "': " + e.what());
            }
            ideal_texts.push_back(std::move(text_g));
        }
    }

    QuotientAlgebra algebra =
        QuotientAlgebra::make(ctx, generators, order_of_kind(kind, ctx));

    std::optional<std::string> op_text;
    std::optional<DiffOperator> op;
    if (j.contains("operator")) {
        if (!j["operator"].is_string()) throw InputError("\"operator\" must be a string");
        op_text = j["operator"].get<std::string>();
        try {
            op = parse_operator(*op_text, ctx);
        } catch (const ParseError& e) {
            throw InputError("operator '" + *op_text + "': " + e.what());
        }
    }

    std::vector<std::vector<Rational>> points;
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw InputError("\"points\" must be an array");
        for (const auto& p : j["points"]) {
            if (!p.is_array() || p.size() != ctx->size())
                throw InputError("each point must be an array of " +
                                 std::to_string(ctx->size()) + " coordinates");
            std::vector<Rational> coords;
            for (const auto& c : p) coords.push_back(coordinate_from_json(c, "points"));
            // Validate on load: every listed point must lie on the variety.
            try {
                kpoint(algebra, coords);
            } catch (const PointValidationError& e) {
                throw InputError(std::string("problem file point rejected: ") + e.what());
            }
            points.push_back(std::move(coords));
        }
    }

    DeltaMode mode = DeltaMode::AsWritten;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw InputError("\"mode\" must be a string");
        auto parsed = parse_delta_mode(j["mode"].get<std::string>());
        if (!parsed)
            throw InputError("unknown mode '" + j["mode"].get<std::string>() +
                             "' (expected as-written or balanced)");
        mode = *parsed;
    }
    if (overrides.mode) mode = *overrides.mode;

    std::uint64_t seed = kDefaultSeed;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw InputError("\"seed\" must be an integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    if (overrides.seed) seed = *overrides.seed;

    return Problem{ctx,
                   std::move(ideal_texts),
                   std::move(generators),
                   std::move(algebra),
                   std::move(op_text),
                   std::move(op),
                   std::move(points),
                   order_of_kind(kind, ctx),
                   mode,
                   seed,
                   fnv1a_digest(text)};
}

Problem problem_from_file(const std::string& path, const ProblemOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return problem_from_json_text(buffer.str(), overrides);
}

}  // namespace ellop
