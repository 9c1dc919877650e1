#pragma once

// Recursive-descent parser for the small polynomial expression language shared by
// class expressions, Hodge polynomials and the jet engine's input polynomials:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ['^' ['+'|'-'] digits]
//   atom   := integer | identifier | '(' expr ')'
//
// The value type and the meaning of identifiers and exponents are supplied by a builder:
//
//   Value constant(const Integer&);
//   Value identifier(std::string_view name, std::size_t pos);
//   Value power(const Value& base, long exponent, std::string_view bare_identifier, std::size_t pos);
//
// `bare_identifier` is the identifier name when the base was a single identifier, empty otherwise.

#include "core.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

namespace motivic {

template <class Builder>
class ExpressionParser {
public:
    using Value = decltype(std::declval<Builder&>().constant(Integer{}));

    ExpressionParser(std::string_view text, Builder& builder) : text_(text), builder_(builder) {}

    Value parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Value acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Value term() {
        Value acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Value unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Value power() {
        skip_ws();
        std::string_view bare;
        Value base = atom(bare);
        skip_ws();
        std::size_t caret = pos_;
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        return builder_.power(base, negative ? -e : e, bare, caret);
    }

    Value atom(std::string_view& bare) {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return builder_.constant(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            bare = text_.substr(start, pos_ - start);
            return builder_.identifier(bare, start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    Builder& builder_;
    std::size_t pos_ = 0;
};

template <class Builder>
auto parse_expression(std::string_view text, Builder& builder) {
    return ExpressionParser<Builder>(text, builder).parse();
}

}  // namespace motivic
