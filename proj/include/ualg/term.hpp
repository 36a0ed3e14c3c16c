#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/exec.hpp"
#include "ualg/signature.hpp"

namespace ualg {

struct FiniteAlgebra;

/// Variable bindings for term evaluation.
using Environment = std::map<std::string, int>;

/// Term over a signature: a variable or a symbol applied to arguments.
struct Term {
    enum class Kind { Var, App };
    Kind kind = Kind::Var;
    std::string head;       // variable name (Var) or symbol name (App)
    std::vector<Term> args; // empty for Var

    static Term var(std::string name);
    static Term app(std::string symbol, std::vector<Term> arguments = {});
    bool operator==(const Term&) const = default;
};

/// Parses an S-expression: bare identifiers are variables, parenthesized
/// forms apply a signature symbol to arguments (constants look like "(0)").
Term parse_term(std::string_view text, const Signature& sig);

std::string to_string(const Term& t);
std::set<std::string> free_vars(const Term& t);
Term substitute(const Term& t, const std::map<std::string, Term>& repl);

/// Bottom-up evaluation via the algebra's tables.
int eval_term(const FiniteAlgebra& alg, const Term& t, const Environment& env);

/// Postfix-compiled form of a term for tight evaluation loops. Variables are
/// resolved against a fixed ordering once at compile time.
class CompiledTerm {
public:
    CompiledTerm() = default;
    CompiledTerm(const FiniteAlgebra& alg, const Term& t,
                 const std::vector<std::string>& var_order);
    /// binding[i] is the value of var_order[i].
    int eval(const FiniteAlgebra& alg, std::span<const int> binding) const;

private:
    struct Ins {
        int op = -1;  // operation index when >= 0
        int var = -1; // binding slot when >= 0
        int arity = 0;
    };
    std::vector<Ins> code_;
    int max_stack_ = 0;
};

struct IdentityCounterexample {
    std::size_t algebra_index = 0;
    Environment env;
};

/// Exhaustively checks lhs = rhs over every assignment in each algebra,
/// in order (algebra index, then mixed-radix assignment over the sorted
/// free variables, first variable most significant).
std::optional<IdentityCounterexample>
check_identity(std::span<const FiniteAlgebra> algs, const Term& lhs, const Term& rhs,
               Exec exec = default_exec());

} // namespace ualg
