#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ualg {

struct SigSymbol {
    std::string name;
    int arity = 0;
    bool operator==(const SigSymbol&) const = default;
};

/// Ordered list of operation symbols. Names are unique, arity 0 means constant.
struct Signature {
    std::vector<SigSymbol> symbols;

    std::optional<int> index_of(std::string_view name) const;
    /// Arity of a known symbol; throws SyntaxError for unknown names.
    int arity_of(std::string_view name) const;
    bool has(std::string_view name) const { return index_of(name).has_value(); }
    bool operator==(const Signature&) const = default;
};

/// Checks name uniqueness and nonnegative arities.
void validate(const Signature& sig);

} // namespace ualg
