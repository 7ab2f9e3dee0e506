#include "ringlab/grammar.hpp"

#include <cctype>
#include <limits>

#include <fmt/format.h>

namespace ringlab {

ParseError::ParseError(std::size_t column, const std::string& message)
    : RingError(fmt::format("parse error at column {}: {}", column, message)), column_(column) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SpecPtr parse() {
        auto result = expr();
        skip_space();
        if (pos_ < text_.size()) fail(fmt::format("unexpected '{}'", text_[pos_]));
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // Matches a literal, allowing whitespace between its characters.
    bool accept(std::string_view literal) {
        const auto saved = pos_;
        for (char c : literal) {
            if (peek() != c) {
                pos_ = saved;
                return false;
            }
            ++pos_;
        }
        return true;
    }

    void expect(std::string_view literal) {
        if (!accept(literal)) fail(fmt::format("expected '{}'", literal));
    }

    std::uint32_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + std::uint64_t(text_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) fail("integer too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(value);
    }

    std::vector<std::uint32_t> int_list() {
        std::vector<std::uint32_t> out;
        if (accept("{")) {
            if (accept("}")) return out;
            do out.push_back(integer());
            while (accept(","));
            expect("}");
            return out;
        }
        do out.push_back(integer());
        while (accept(","));
        return out;
    }

    // Builds a node, reporting constructor preconditions at `column`.
    template <class Fn>
    SpecPtr node_at(std::size_t column, Fn fn) {
        try {
            return fn();
        } catch (const PreconditionError& e) {
            throw ParseError(column, e.what());
        }
    }

    SpecPtr expr() {
        std::vector<SpecPtr> parts{term()};
        while (peek() == 'x') {
            ++pos_;
            parts.push_back(term());
        }
        return parts.size() == 1 ? parts.front() : spec::product(std::move(parts));
    }

    SpecPtr term() {
        auto base = atom();
        while (true) {
            const auto column = pos_ + 1;
            if (!accept("[")) break;
            expect("x]/(x^");
            const auto n = integer();
            expect(")");
            base = node_at(column, [&] { return spec::poly_mod(base, n); });
        }
        return base;
    }

    SpecPtr bracketed() {
        expect("(");
        auto inner = expr();
        expect(")");
        return inner;
    }

    SpecPtr atom() {
        skip_space();
        const auto column = pos_ + 1;
        if (accept("Triv(")) {
            auto base = expr();
            expect(")");
            return spec::trivial_ext(base);
        }
        if (accept("Op(")) {
            auto base = expr();
            expect(")");
            return spec::opposite(base);
        }
        if (accept("Corner(")) {
            auto base = expr();
            expect(",");
            const auto e = integer();
            expect(")");
            return spec::corner(base, e);
        }
        if (accept("Ideal(") || accept("Quot(")) {
            const bool ideal = text_.substr(column - 1, 1) == "I";
            auto base = expr();
            expect(",");
            auto gens = int_list();
            expect(")");
            return ideal ? spec::ideal_ring(base, std::move(gens)) : spec::quotient(base, std::move(gens));
        }
        if (accept("Z")) {
            const auto n = integer();
            return node_at(column, [&] { return spec::zn(n); });
        }
        if (accept("M")) {
            const auto k = integer();
            auto base = bracketed();
            return node_at(column, [&] { return spec::matrix(k, base); });
        }
        if (accept("T")) {
            const auto k = integer();
            auto base = bracketed();
            return node_at(column, [&] { return spec::triangular(k, base); });
        }
        if (peek() == '(') return bracketed();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        fail(fmt::format("unexpected '{}'", text_[pos_]));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SpecPtr parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace ringlab
