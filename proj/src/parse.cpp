#include "hypersect/parse.hpp"

#include "hypersect/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace hypersect {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

    MultiPoly parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
        const Integer e = integer_literal("exponent");
        if (e > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", start);
        return pow(base, static_cast<unsigned>(e.get_ui()));
    }

    MultiPoly primary() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (is_digit(c)) {
            Integer num = integer_literal("number");
            Integer den = 1;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                const std::size_t at = pos_;
                den = integer_literal("denominator");
                if (den == 0) throw ParseError("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            return MultiPoly::constant(vars_, q);
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                throw ParseError("unknown variable '" + name + "'", start);
            return MultiPoly::variable(vars_, name);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Integer integer_literal(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) throw ParseError(std::string("expected ") + what, start);
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

VarList parse_var_list(std::string_view text) {
    VarList out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty() || !is_ident_start(item[0]) || !std::all_of(item.begin(), item.end(), is_ident_char))
            throw ParseError("invalid variable name", start);
        if (std::find(out.begin(), out.end(), item) != out.end())
            throw ParseError("duplicate variable '" + std::string(item) + "'", start);
        out.emplace_back(item);
        start = comma + 1;
    }
    return out;
}

}  // namespace hypersect
