#pragma once

#include "ellop/context.hpp"
#include "ellop/monomial.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ellop {

enum class OrderKind { Grevlex, Grlex, Lex };

// A monomial order: a multiplicative well-order on exponent vectors.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    ContextPtr context;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    std::string name() const;
    bool operator==(const MonomialOrder& other) const;
};

MonomialOrder grevlex_order(ContextPtr ctx);
MonomialOrder grlex_order(ContextPtr ctx);
MonomialOrder lex_order(ContextPtr ctx);
MonomialOrder order_of_kind(OrderKind kind, ContextPtr ctx);

std::optional<OrderKind> parse_order_kind(std::string_view name);
std::string order_kind_name(OrderKind kind);

}  // namespace ellop
