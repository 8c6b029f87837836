#include "ellop/context.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace ellop {

bool valid_variable_name(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name[0]);
    if (!(std::isalpha(head) || name[0] == '_')) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Context::Context(std::vector<std::string> names) : names_store_(std::move(names)) {
    names_ = names_store_.size();
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_store_) {
        if (!valid_variable_name(n)) throw InputError("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second) throw InputError("duplicate variable name: '" + n + "'");
    }
}

std::optional<std::size_t> Context::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_store_.size(); ++i)
        if (names_store_[i] == name) return i;
    return std::nullopt;
}

std::string Context::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < names_store_.size(); ++i) {
        if (i) os << ", ";
        os << names_store_[i];
    }
    os << ")";
    return os.str();
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const Context>(std::move(names));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    std::string lhs = a ? a->to_string() : "(null)";
    std::string rhs = b ? b->to_string() : "(null)";
    throw ContextMismatchError(std::string(where) + ": variable contexts differ: " + lhs +
                                   " vs " + rhs,
                               lhs, rhs);
}

}  // namespace ellop
