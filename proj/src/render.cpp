#include <string>

#include "hyperfold/notation.hpp"

namespace hyperfold::notation {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void render_to(std::string& out, const Expr& e);

// Operands of chains and caret arrows must be atoms.
void render_atom(std::string& out, const Expr& e) {
    if (std::holds_alternative<NatLit>(e.node)) {
        render_to(out, e);
        return;
    }
    out += '(';
    render_to(out, e);
    out += ')';
}

void render_args(std::string& out, const char* name, std::initializer_list<const Expr*> args) {
    out += name;
    out += '(';
    bool first = true;
    for (const Expr* a : args) {
        if (!first) out += ',';
        first = false;
        render_to(out, *a);
    }
    out += ')';
}

void render_to(std::string& out, const Expr& e) {
    std::visit(overloaded{
                   [&](const NatLit& n) { out += n.value.to_string(); },
                   [&](const Ack& a) { render_args(out, "ack", {&*a.m, &*a.n}); },
                   [&](const Knuth& k) {
                       const auto* level = std::get_if<NatLit>(&k.level->node);
                       if (level != nullptr && level->value >= Natural{1} && level->value <= Natural{4}) {
                           render_atom(out, *k.a);
                           out.append(level->value.to_u64(), '^');
                           render_atom(out, *k.b);
                       } else {
                           render_args(out, "knuth", {&*k.a, &*k.level, &*k.b});
                       }
                   },
                   [&](const ChainE& c) {
                       for (std::size_t i = 0; i < c.items.size(); ++i) {
                           if (i > 0) out += "->";
                           render_atom(out, c.items[i]);
                       }
                   },
                   [&](const ConwayCall& c) {
                       out += "conway(";
                       for (std::size_t i = 0; i < c.items.size(); ++i) {
                           if (i > 0) out += ',';
                           render_to(out, c.items[i]);
                       }
                       out += ')';
                   },
               },
               e.node);
}

} // namespace

std::string render(const Expr& e) {
    std::string out;
    render_to(out, e);
    return out;
}

} // namespace hyperfold::notation
