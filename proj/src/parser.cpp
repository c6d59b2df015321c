#include <algorithm>
#include <sstream>

#include "hyperfold/notation.hpp"

namespace hyperfold::notation {

Expr lit(Natural value) { return Expr{NatLit{std::move(value)}}; }
Expr ack(Expr m, Expr n) { return Expr{Ack{std::move(m), std::move(n)}}; }
Expr knuth(Expr a, Expr level, Expr b) { return Expr{Knuth{std::move(a), std::move(level), std::move(b)}}; }
Expr chain(std::vector<Expr> items) {
    if (items.size() < 2) throw std::invalid_argument("a written chain needs at least two items");
    return Expr{ChainE{std::move(items)}};
}
Expr conway(std::vector<Expr> items) { return Expr{ConwayCall{std::move(items)}}; }

namespace {

std::string describe(const SourcePos& pos, const std::vector<std::string>& expected, const std::string& found) {
    std::ostringstream os;
    os << "parse error at line " << pos.line << ", column " << pos.column << " (offset " << pos.offset
       << "): expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
        os << expected[i];
    }
    os << ", found " << found;
    return os.str();
}

} // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : std::runtime_error(describe(pos, expected, found)),
      pos_{pos},
      expected_{std::move(expected)},
      found_{std::move(found)} {}

namespace {

enum class Tok { Number, Arrow, Caret, LParen, RParen, Comma, Ident, End };

struct Token {
    Tok kind;
    std::string_view text;
    SourcePos pos;
};

const char* const kNumber = "number";
const char* const kOpen = "'('";
const char* const kClose = "')'";
const char* const kComma = "','";
const char* const kArrow = "'->'";
const char* const kCaret = "'^'";
const char* const kEnd = "end of input";

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_{text} {}

    Token next() {
        skip_space();
        const SourcePos start = pos_;
        if (pos_.offset >= text_.size()) return {Tok::End, {}, start};
        const char c = text_[pos_.offset];
        if (c >= '0' && c <= '9') {
            std::size_t end = pos_.offset;
            while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') ++end;
            const std::size_t len = end - pos_.offset;
            if (len > kMaxLiteralDigits)
                throw ParseError(start, {"number of at most " + std::to_string(kMaxLiteralDigits) + " digits"},
                                 "number of " + std::to_string(len) + " digits");
            return take(Tok::Number, len, start);
        }
        if (is_alpha(c)) {
            std::size_t end = pos_.offset;
            while (end < text_.size() && (is_alpha(text_[end]) || (text_[end] >= '0' && text_[end] <= '9'))) ++end;
            return take(Tok::Ident, end - pos_.offset, start);
        }
        switch (c) {
        case '^': return take(Tok::Caret, 1, start);
        case '(': return take(Tok::LParen, 1, start);
        case ')': return take(Tok::RParen, 1, start);
        case ',': return take(Tok::Comma, 1, start);
        case '-':
            if (pos_.offset + 1 < text_.size() && text_[pos_.offset + 1] == '>') return take(Tok::Arrow, 2, start);
            throw ParseError(start, {kArrow}, "'-'");
        default: {
            std::string shown = (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
                                    ? "'" + std::string(1, c) + "'"
                                    : "byte 0x" + hex(static_cast<unsigned char>(c));
            throw ParseError(start, {kNumber, kOpen, "ack", "knuth", "conway"}, shown);
        }
        }
    }

private:
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

    static std::string hex(unsigned char c) {
        const char* digits = "0123456789abcdef";
        return {digits[c >> 4], digits[c & 15]};
    }

    void skip_space() {
        while (pos_.offset < text_.size()) {
            const char c = text_[pos_.offset];
            if (c == '\n') {
                ++pos_.offset;
                ++pos_.line;
                pos_.column = 1;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_.offset;
                ++pos_.column;
            } else {
                break;
            }
        }
    }

    Token take(Tok kind, std::size_t len, SourcePos start) {
        pos_.offset += len;
        pos_.column += len;
        return {kind, text_.substr(start.offset, len), start};
    }

    std::string_view text_;
    SourcePos pos_;
};

std::string show(const Token& t) {
    switch (t.kind) {
    case Tok::End: return kEnd;
    case Tok::Number: return t.text.size() > 20 ? "number" : "number " + std::string{t.text};
    case Tok::Ident: return "'" + std::string{t.text} + "'";
    default: return "'" + std::string{t.text} + "'";
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_{text} { advance(); }

    Expr parse_all() {
        std::vector<std::string> follow;
        Expr e = expr(follow);
        if (cur_.kind != Tok::End) fail(with(follow, {kEnd}));
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(cur_.pos, std::move(expected), show(cur_));
    }

    static std::vector<std::string> with(std::vector<std::string> a, std::initializer_list<const char*> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p{parser} {
            if (++p.depth_ > kMaxNesting)
                throw ParseError(p.cur_.pos, {"at most " + std::to_string(kMaxNesting) + " levels of nesting"},
                                 show(p.cur_));
        }
        ~DepthGuard() { --p.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
    };

    // Parses one expr. On return `follow` lists the tokens that could have
    // extended it, so the caller can report a complete expected set.
    Expr expr(std::vector<std::string>& follow) {
        DepthGuard guard{*this};
        if (cur_.kind == Tok::Ident) {
            follow.clear();
            return call();
        }
        Expr first = atom();
        if (cur_.kind == Tok::Arrow) {
            std::vector<Expr> items;
            items.push_back(std::move(first));
            while (cur_.kind == Tok::Arrow) {
                advance();
                items.push_back(atom());
            }
            follow = {kArrow};
            return chain(std::move(items));
        }
        if (cur_.kind == Tok::Caret) {
            std::uint64_t carets = 0;
            while (cur_.kind == Tok::Caret) {
                ++carets;
                advance();
            }
            Expr b = atom();
            follow.clear();
            return knuth(std::move(first), lit(Natural{carets}), std::move(b));
        }
        follow = {kArrow, kCaret};
        return first;
    }

    Expr atom() {
        if (cur_.kind == Tok::Number) {
            auto value = Natural::from_decimal(cur_.text);
            advance();
            return lit(std::move(*value));
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            std::vector<std::string> follow;
            Expr inner = expr(follow);
            if (cur_.kind != Tok::RParen) fail(with(follow, {kClose}));
            advance();
            return inner;
        }
        fail({kNumber, kOpen});
    }

    Expr call() {
        const std::string_view name = cur_.text;
        std::size_t arity = 0;
        bool variadic = false;
        if (name == "ack") {
            arity = 2;
        } else if (name == "knuth") {
            arity = 3;
        } else if (name == "conway") {
            variadic = true;
        } else {
            fail({kNumber, kOpen, "ack", "knuth", "conway"});
        }
        advance();
        if (cur_.kind != Tok::LParen) fail({kOpen});
        advance();

        std::vector<Expr> args;
        if (!(variadic && cur_.kind == Tok::RParen)) {
            for (;;) {
                std::vector<std::string> follow;
                args.push_back(expr(follow));
                const bool more = variadic || args.size() < arity;
                const bool done = variadic || args.size() == arity;
                if (more && cur_.kind == Tok::Comma) {
                    advance();
                    continue;
                }
                if (done && cur_.kind == Tok::RParen) break;
                if (more && done) fail(with(follow, {kComma, kClose}));
                fail(with(follow, {more ? kComma : kClose}));
            }
        }
        advance();

        if (name == "ack") return ack(std::move(args[0]), std::move(args[1]));
        if (name == "knuth") return knuth(std::move(args[0]), std::move(args[1]), std::move(args[2]));
        return conway(std::move(args));
    }

    Lexer lexer_;
    Token cur_{};
    std::size_t depth_ = 0;
};

} // namespace

Expr parse(std::string_view text) { return Parser{text}.parse_all(); }

} // namespace hyperfold::notation
