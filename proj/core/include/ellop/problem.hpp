#pragma once

#include "ellop/affine.hpp"
#include "ellop/elliptic.hpp"
#include "ellop/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellop {

// A parsed and validated problem file. Construction rejects unknown fields,
// wrong schema versions and malformed entries, and validates every listed
// point against the ideal, all with positioned messages (InputError).
struct Problem {
    ContextPtr context;
    std::vector<std::string> ideal_texts;
    std::vector<Polynomial> ideal_generators;
    QuotientAlgebra algebra;
    std::optional<std::string> operator_text;
    std::optional<DiffOperator> op;
    std::vector<std::vector<Rational>> points;
    MonomialOrder order;
    DeltaMode mode = DeltaMode::AsWritten;
    std::uint64_t seed = kDefaultSeed;
    std::string digest;  // of the raw input bytes

    KPoint point_at(std::size_t i) const { return kpoint(algebra, points[i]); }
};

struct ProblemOverrides {
    std::optional<OrderKind> order;
    std::optional<DeltaMode> mode;
    std::optional<std::uint64_t> seed;
};

Problem problem_from_json_text(const std::string& text, const ProblemOverrides& overrides = {});
Problem problem_from_file(const std::string& path, const ProblemOverrides& overrides = {});

// "a,b,..." with rational entries; length must match the context.
std::vector<Rational> parse_point_text(const std::string& text, std::size_t expected_len);

}  // namespace ellop
