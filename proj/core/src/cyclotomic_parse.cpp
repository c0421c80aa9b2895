// Recursive-descent parser for cyclotomic literals.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'E(' uint ')' ('^' int)? | '(' expr ')' | '-' factor
//   rational := uint ('/' uint)?
//
// Whitespace is insignificant. Operands over different conductors are
// rebased onto their lcm.

#include <cctype>
#include <numeric>

#include "nsct/cyclotomic.hpp"
#include "nsct/error.hpp"

namespace nsct {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    CycNum parse() {
        CycNum v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character", {"'+'", "'-'", "'*'", "end of input"});
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
        std::string msg = what + " at offset " + std::to_string(pos_);
        if (!expected.empty()) {
            msg += "; expected one of:";
            for (const auto& e : expected) msg += " " + e;
        }
        throw ParseError(msg, pos_, std::move(expected));
    }

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

    void expect(char c) {
        if (!accept(c)) fail("missing token", {std::string("'") + c + "'"});
    }

    static void unify(CycNum& a, CycNum& b) {
        if (a.conductor() == b.conductor() || a.is_rational() || b.is_rational()) return;
        const unsigned l = std::lcm(a.conductor(), b.conductor());
        a = a.rebase(l);
        b = b.rebase(l);
    }

    CycNum expr() {
        CycNum acc = term();
        for (;;) {
            if (accept('+')) {
                CycNum rhs = term();
                unify(acc, rhs);
                acc += rhs;
            } else if (accept('-')) {
                CycNum rhs = term();
                unify(acc, rhs);
                acc -= rhs;
            } else {
                return acc;
            }
        }
    }

    CycNum term() {
        CycNum acc = factor();
        while (accept('*')) {
            CycNum rhs = factor();
            unify(acc, rhs);
            acc *= rhs;
        }
        return acc;
    }

    BigInt uint_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number", {"digit"});
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    CycNum factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input", {"number", "'E('", "'('", "'-'"});
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            CycNum v = expr();
            expect(')');
            return v;
        }
        if (c == 'E') {
            ++pos_;
            expect('(');
            const std::size_t at = pos_;
            BigInt m = uint_literal();
            if (m == 0 || m > 100000) {
                pos_ = at;
                fail("root-of-unity order out of range", {"positive integer"});
            }
            expect(')');
            long long k = 1;
            if (accept('^')) {
                const bool neg = accept('-');
                BigInt e = uint_literal();
                const BigInt reduced = e % m;
                k = reduced.convert_to<long long>();
                if (neg) k = -k;
            }
            return root_of_unity(m.convert_to<unsigned>(), k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = uint_literal();
            if (accept('/')) {
                const std::size_t at = pos_;
                BigInt den = uint_literal();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator", {"nonzero integer"});
                }
                return CycNum(Rational(num, den));
            }
            return CycNum(Rational(num));
        }
        fail("unexpected character", {"number", "'E('", "'('", "'-'"});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_cyc(std::string_view text) { return Parser(text).parse(); }

}  // namespace nsct
