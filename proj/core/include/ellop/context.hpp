#pragma once

#include "ellop/errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellop {

// An ordered list of variable names. Every polynomial and operator carries
// one; binary operations require matching contexts (checked by value, so
// independently parsed values interoperate).
class Context {
public:
    explicit Context(std::vector<std::string> names);

    std::size_t size() const { return names_; }
    const std::vector<std::string>& names() const { return names_store_; }
    const std::string& name(std::size_t i) const { return names_store_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Context& other) const { return names_store_ == other.names_store_; }
    bool operator!=(const Context& other) const { return !(*this == other); }

    std::string to_string() const;  // "(X, Y)"

private:
    std::vector<std::string> names_store_;
    std::size_t names_ = 0;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> names);

bool valid_variable_name(std::string_view name);

// Throws ContextMismatchError naming both contexts.
void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where);

}  // namespace ellop
