#include "homomesy/formula.hpp"

#include <cctype>
#include <vector>

#include "homomesy/errors.hpp"
#include "homomesy/permutation.hpp"

namespace homomesy {

namespace {

std::int64_t integer_of(const Rational& r, const char* what) {
    if (!r.is_integer())
        throw MalformedFormula(std::string(what) + " needs an integer, got " + r.str());
    return r.num();
}

std::int64_t floor_of(const Rational& r) {
    const std::int64_t q = r.num() / r.den();
    // Integer division truncates toward zero; fix up negatives.
    return r.num() % r.den() != 0 && r.num() < 0 ? q - 1 : q;
}

Rational binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return Rational(0);
    Rational result(1);
    for (std::int64_t i = 1; i <= b; ++i)
        result = result * Rational(a - b + i) / Rational(i);
    return result;
}

Rational harmonic(std::int64_t k) {
    if (k < 0) throw MalformedFormula("H() needs a nonnegative integer");
    Rational sum;
    for (std::int64_t j = 1; j <= k; ++j) sum += Rational(1, j);
    return sum;
}

class Parser {
public:
    Parser(const std::string& text, const std::map<std::string, Rational>& vars)
        : text_(text), vars_(vars) {}

    Rational run() {
        Rational value = expression();
        skip_space();
        if (pos_ != text_.size())
            throw MalformedFormula("unexpected trailing input at '" + text_.substr(pos_) +
                                   "' in \"" + text_ + "\"");
        return value;
    }

private:
    // expression := term (('+' | '-') term)*
    Rational expression() {
        Rational value = term();
        while (true) {
            skip_space();
            if (consume('+'))
                value += term();
            else if (consume('-'))
                value -= term();
            else
                return value;
        }
    }

    // term := factor (('*' | '/') factor)*
    Rational term() {
        Rational value = factor();
        while (true) {
            skip_space();
            if (consume('*'))
                value *= factor();
            else if (consume('/'))
                value /= factor();
            else
                return value;
        }
    }

    // factor := '-' factor | power
    Rational factor() {
        skip_space();
        if (consume('-')) return -factor();
        return power();
    }

    // power := postfix ('^' factor)?   (right-associative)
    Rational power() {
        Rational base = postfix();
        skip_space();
        if (!consume('^')) return base;
        const std::int64_t exponent = integer_of(factor(), "exponent of ^");
        if (exponent < 0) throw MalformedFormula("negative exponent in \"" + text_ + "\"");
        Rational value(1);
        for (std::int64_t i = 0; i < exponent; ++i) value *= base;
        return value;
    }

    // postfix := primary '!'*
    Rational postfix() {
        Rational value = primary();
        while (true) {
            skip_space();
            if (!consume('!')) return value;
            value = Rational(factorial(static_cast<int>(integer_of(value, "operand of !"))));
        }
    }

    Rational primary() {
        skip_space();
        if (pos_ >= text_.size()) throw MalformedFormula("unexpected end of \"" + text_ + "\"");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Rational value = expression();
            expect(')');
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Rational(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                name.push_back(text_[pos_]);
                ++pos_;
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '(') return call(name);
            auto it = vars_.find(name);
            if (it == vars_.end())
                throw MalformedFormula("unknown name \"" + name + "\" in \"" + text_ + "\"");
            return it->second;
        }
        throw MalformedFormula("unexpected character '" + std::string(1, c) + "' in \"" +
                               text_ + "\"");
    }

    Rational call(const std::string& name) {
        expect('(');
        std::vector<Rational> args;
        args.push_back(expression());
        skip_space();
        while (consume(',')) args.push_back(expression());
        expect(')');
        auto arity = [&](std::size_t want) {
            if (args.size() != want)
                throw MalformedFormula(name + "() takes " + std::to_string(want) +
                                       " argument(s) in \"" + text_ + "\"");
        };
        if (name == "floor") {
            arity(1);
            return Rational(floor_of(args[0]));
        }
        if (name == "ceil") {
            arity(1);
            return Rational(-floor_of(-args[0]));
        }
        if (name == "binom") {
            arity(2);
            return binomial(integer_of(args[0], "binom()"), integer_of(args[1], "binom()"));
        }
        if (name == "H") {
            arity(1);
            return harmonic(integer_of(args[0], "H()"));
        }
        throw MalformedFormula("unknown function \"" + name + "\" in \"" + text_ + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_space();
        if (!consume(c))
            throw MalformedFormula("expected '" + std::string(1, c) + "' in \"" + text_ + "\"");
    }

    const std::string& text_;
    const std::map<std::string, Rational>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Rational eval_formula(const std::string& text, const std::map<std::string, Rational>& vars) {
    return Parser(text, vars).run();
}

}  // namespace homomesy
