#pragma once

// Text syntax for hyperoperation expressions:
//
//   expr  := chain | arrow | call | atom
//   chain := atom ("->" atom)+
//   arrow := atom "^"+ atom              k carets = Knuth level k
//   call  := "ack" "(" expr "," expr ")"
//          | "knuth" "(" expr "," expr "," expr ")"
//          | "conway" "(" [expr ("," expr)*] ")"
//   atom  := natural-literal | "(" expr ")"
//
// Arrows do not associate: "2^^3^^4" and "2^3->4" are errors.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperfold/budget.hpp"
#include "hyperfold/hyperops.hpp"
#include "hyperfold/natural.hpp"

namespace hyperfold::notation {

inline constexpr std::size_t kMaxLiteralDigits = 100'000;
inline constexpr std::size_t kMaxNesting = 256;

/// Heap cell with value semantics, for recursive variants.
template <class T>
class Box {
public:
    Box(T value) : p_{std::make_unique<T>(std::move(value))} {} // NOLINT(google-explicit-constructor)
    Box(const Box& other) : p_{std::make_unique<T>(*other.p_)} {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other) p_ = std::make_unique<T>(*other.p_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    const T& operator*() const { return *p_; }
    const T* operator->() const { return p_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

private:
    std::unique_ptr<T> p_;
};

struct Expr;

struct NatLit {
    Natural value;
    friend bool operator==(const NatLit&, const NatLit&) = default;
};
struct Ack {
    Box<Expr> m, n;
    friend bool operator==(const Ack&, const Ack&) = default;
};
struct Knuth {
    Box<Expr> a, level, b;
    friend bool operator==(const Knuth&, const Knuth&) = default;
};
/// Written chain a->b->...; at least two items.
struct ChainE {
    std::vector<Expr> items;
    friend bool operator==(const ChainE&, const ChainE&) = default;
};
/// conway(...) with any number of items.
struct ConwayCall {
    std::vector<Expr> items;
    friend bool operator==(const ConwayCall&, const ConwayCall&) = default;
};

struct Expr {
    std::variant<NatLit, Ack, Knuth, ChainE, ConwayCall> node;
    friend bool operator==(const Expr&, const Expr&) = default;
};

Expr lit(Natural value);
Expr ack(Expr m, Expr n);
Expr knuth(Expr a, Expr level, Expr b);
Expr chain(std::vector<Expr> items); // throws std::invalid_argument for fewer than 2 items
Expr conway(std::vector<Expr> items);

struct SourcePos {
    std::size_t offset = 0; // bytes from the start of the text
    std::size_t line = 1;
    std::size_t column = 1;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

    const SourcePos& pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
    std::string found_;
};

Expr parse(std::string_view text);

/// Canonical text; parse(render(e)) == e.
std::string render(const Expr& e);

enum class Form { Reference, Primitive, Both };

const char* to_string(Form form);

/// Raised in Form::Both when the two evaluators disagree.
class MismatchError : public std::runtime_error {
public:
    MismatchError(const std::string& what, EvalStats stats) : std::runtime_error(what), stats_{stats} {}
    const EvalStats& stats() const { return stats_; }

private:
    EvalStats stats_;
};

/// Eager bottom-up evaluation; one budget covers the whole tree. With
/// Form::Both each node is computed by both evaluators, each metered
/// against its own copy of the budget, and the reported stats are the
/// componentwise maximum.
Evaluation evaluate(const Expr& e, Form form, Budget budget = {});

} // namespace hyperfold::notation
