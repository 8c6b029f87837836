#include "ellop/order.hpp"

namespace ellop {

namespace {

std::strong_ordering lex_exp_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Lex:
            return lex_exp_compare(a, b);
        case OrderKind::Grlex: {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
            return lex_exp_compare(a, b);
        }
        case OrderKind::Grevlex: {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
            // Ties: the smaller exponent in the last differing variable wins.
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const { return order_kind_name(kind); }

bool MonomialOrder::operator==(const MonomialOrder& other) const {
    if (kind != other.kind) return false;
    if (context == other.context) return true;
    return context && other.context && *context == *other.context;
}

MonomialOrder grevlex_order(ContextPtr ctx) { return {OrderKind::Grevlex, std::move(ctx)}; }
MonomialOrder grlex_order(ContextPtr ctx) { return {OrderKind::Grlex, std::move(ctx)}; }
MonomialOrder lex_order(ContextPtr ctx) { return {OrderKind::Lex, std::move(ctx)}; }
MonomialOrder order_of_kind(OrderKind kind, ContextPtr ctx) { return {kind, std::move(ctx)}; }

std::optional<OrderKind> parse_order_kind(std::string_view name) {
    if (name == "grevlex") return OrderKind::Grevlex;
    if (name == "grlex") return OrderKind::Grlex;
    if (name == "lex") return OrderKind::Lex;
    return std::nullopt;
}

std::string order_kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Grlex: return "grlex";
        case OrderKind::Lex: return "lex";
    }
    return "?";
}

}  // namespace ellop
