#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ualg/algebra.hpp"
#include "ualg/errors.hpp"
#include "ualg/kernels.hpp"

namespace ualg {

std::optional<int> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

int Signature::arity_of(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw SyntaxError("unknown symbol: " + std::string(name));
    return symbols[static_cast<std::size_t>(*i)].arity;
}

void validate(const Signature& sig) {
    for (std::size_t i = 0; i < sig.symbols.size(); ++i) {
        if (sig.symbols[i].name.empty()) throw SyntaxError("empty symbol name");
        if (sig.symbols[i].arity < 0) throw ArityError("negative arity");
        for (std::size_t j = i + 1; j < sig.symbols.size(); ++j)
            if (sig.symbols[i].name == sig.symbols[j].name)
                throw SyntaxError("duplicate symbol: " + sig.symbols[i].name);
    }
}

Term Term::var(std::string name) {
    Term t;
    t.kind = Kind::Var;
    t.head = std::move(name);
    return t;
}

Term Term::app(std::string symbol, std::vector<Term> arguments) {
    Term t;
    t.kind = Kind::App;
    t.head = std::move(symbol);
    t.args = std::move(arguments);
    return t;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Signature& sig;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    std::string atom() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == start) throw SyntaxError("expected token at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    Term expr() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input");
        if (text[pos] == ')') throw SyntaxError("unexpected ')'");
        if (text[pos] != '(') return Term::var(atom());
        ++pos; // '('
        skip_ws();
        if (pos < text.size() && text[pos] == ')') throw SyntaxError("empty form");
        if (pos >= text.size() || text[pos] == '(')
            throw SyntaxError("form head must be a symbol");
        std::string head = atom();
        auto idx = sig.index_of(head);
        if (!idx) throw SyntaxError("unknown symbol: " + head);
        std::vector<Term> args;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) throw SyntaxError("unbalanced parentheses");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            args.push_back(expr());
        }
        const int want = sig.symbols[static_cast<std::size_t>(*idx)].arity;
        if (static_cast<int>(args.size()) != want)
            throw ArityError(head + " expects " + std::to_string(want) + " arguments, got " +
                             std::to_string(args.size()));
        return Term::app(std::move(head), std::move(args));
    }
};

} // namespace

Term parse_term(std::string_view text, const Signature& sig) {
    Parser p{text, 0, sig};
    Term t = p.expr();
    if (!p.at_end()) throw SyntaxError("trailing input after term");
    return t;
}

std::string to_string(const Term& t) {
    if (t.kind == Term::Kind::Var) return t.head;
    std::string out = "(" + t.head;
    for (const Term& a : t.args) {
        out += ' ';
        out += to_string(a);
    }
    out += ')';
    return out;
}

static void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Var) {
        out.insert(t.head);
        return;
    }
    for (const Term& a : t.args) collect_vars(a, out);
}

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& repl) {
    if (t.kind == Term::Kind::Var) {
        auto it = repl.find(t.head);
        return it == repl.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const Term& a : t.args) args.push_back(substitute(a, repl));
    return Term::app(t.head, std::move(args));
}

int eval_term(const FiniteAlgebra& alg, const Term& t, const Environment& env) {
    if (t.kind == Term::Kind::Var) {
        auto it = env.find(t.head);
        if (it == env.end()) throw UnboundVariable("unbound variable: " + t.head);
        return it->second;
    }
    auto idx = alg.sig.index_of(t.head);
    if (!idx) throw SyntaxError("unknown symbol: " + t.head);
    const OpTable& op = alg.ops[static_cast<std::size_t>(*idx)];
    if (static_cast<int>(t.args.size()) != op.arity)
        throw ArityError(t.head + " arity mismatch");
    std::vector<int> args(t.args.size());
    for (std::size_t i = 0; i < t.args.size(); ++i) args[i] = eval_term(alg, t.args[i], env);
    return alg.apply(*idx, args);
}

CompiledTerm::CompiledTerm(const FiniteAlgebra& alg, const Term& t,
                           const std::vector<std::string>& var_order) {
    int depth = 0;
    std::function<void(const Term&)> emit = [&](const Term& node) {
        if (node.kind == Term::Kind::Var) {
            auto it = std::find(var_order.begin(), var_order.end(), node.head);
            if (it == var_order.end())
                throw UnboundVariable("unbound variable: " + node.head);
            code_.push_back({-1, static_cast<int>(it - var_order.begin()), 0});
            ++depth;
            max_stack_ = std::max(max_stack_, depth);
            return;
        }
        for (const Term& a : node.args) emit(a);
        auto idx = alg.sig.index_of(node.head);
        if (!idx) throw SyntaxError("unknown symbol: " + node.head);
        const int arity = alg.ops[static_cast<std::size_t>(*idx)].arity;
        if (static_cast<int>(node.args.size()) != arity)
            throw ArityError(node.head + " arity mismatch");
        code_.push_back({*idx, -1, arity});
        depth -= arity - 1;
        max_stack_ = std::max(max_stack_, depth);
    };
    emit(t);
}

int CompiledTerm::eval(const FiniteAlgebra& alg, std::span<const int> binding) const {
    int local[64];
    local[0] = 0; // compilation always emits at least one instruction
    std::vector<int> big;
    int* stack = local;
    if (max_stack_ > 64) {
        big.resize(static_cast<std::size_t>(max_stack_));
        stack = big.data();
    }
    int top = 0;
    for (const Ins& ins : code_) {
        if (ins.var >= 0) {
            stack[top++] = binding[static_cast<std::size_t>(ins.var)];
            continue;
        }
        top -= ins.arity;
        stack[top] = alg.apply(ins.op, std::span<const int>(stack + top,
                                                            static_cast<std::size_t>(ins.arity)));
        ++top;
    }
    return stack[0];
}

std::optional<IdentityCounterexample> check_identity(std::span<const FiniteAlgebra> algs,
                                                     const Term& lhs, const Term& rhs,
                                                     Exec exec) {
    std::set<std::string> vars = free_vars(lhs);
    for (const auto& v : free_vars(rhs)) vars.insert(v);
    const std::vector<std::string> order(vars.begin(), vars.end());
    for (std::size_t ai = 0; ai < algs.size(); ++ai) {
        if (!algs[ai].same_signature(algs[0]))
            throw SignatureMismatch("check_identity over mixed signatures");
        auto code = kernels::identity_violation(algs[ai], lhs, rhs, order, exec);
        if (!code) continue;
        std::vector<int64_t> radices(order.size(), algs[ai].size);
        std::vector<int> digits = unpack_tuple(*code, radices);
        Environment env;
        for (std::size_t i = 0; i < order.size(); ++i) env[order[i]] = digits[i];
        return IdentityCounterexample{ai, std::move(env)};
    }
    return std::nullopt;
}

} // namespace ualg
