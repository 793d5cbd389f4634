#include "ckq/parser.hpp"

#include <cctype>

namespace ckq {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

    ExprPoly equation() {
        ExprPoly lhs = expr();
        expect('=');
        ExprPoly rhs = expr();
        end();
        return lhs - rhs;
    }

    ExprPoly whole() {
        ExprPoly e = expr();
        end();
        return e;
    }

private:
    const std::string& s_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void end() {
        if (peek() != '\0') fail("unexpected trailing input");
    }

    ExprPoly scalar(const ScalarExpr& c) {
        ExprPoly p;
        p.add(Word{}, c);
        return p;
    }
    ScalarExpr one() const { return ScalarExpr::constant(ctx_.params, 1); }

    static bool is_scalar(const ExprPoly& p) {
        for (const auto& [w, c] : p.terms())
            if (!w.empty()) return false;
        return true;
    }
    ScalarExpr as_scalar(const ExprPoly& p) {
        if (!is_scalar(p)) fail("expected a scalar");
        return p.is_zero() ? ScalarExpr(ctx_.params) : p.terms().begin()->second;
    }

    ExprPoly expr() {
        ExprPoly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    ExprPoly term() {
        ExprPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                ScalarExpr d = as_scalar(unary());
                try {
                    acc = scale(acc, d.pow(-1));
                } catch (const std::invalid_argument& e) {
                    fail(std::string("cannot divide: ") + e.what());
                }
            } else {
                return acc;
            }
        }
    }

    ExprPoly unary() {
        if (accept('-')) return scale(unary(), ScalarExpr::constant(ctx_.params, -1));
        if (accept('+')) return unary();
        return power();
    }

    int integer() {
        bool neg = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        int v = std::stoi(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    ExprPoly power() {
        ExprPoly base = primary();
        if (!accept('^')) return base;
        int e = accept('(') ? [&] {
            int x = integer();
            expect(')');
            return x;
        }() : integer();
        if (is_scalar(base)) {
            try {
                return scalar(as_scalar(base).pow(e));
            } catch (const std::invalid_argument& ex) {
                fail(ex.what());
            }
        }
        if (e < 0) fail("negative power of a generator");
        ExprPoly r = scalar(one());
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }

    ExprPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPoly e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPoly a = expr();
            expect(',');
            ExprPoly b = expr();
            expect(']');
            return a * b - b * a;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return scalar(ScalarExpr::constant(ctx_.params, GaussianRational(Rational(s_.substr(start, pos_ - start)))));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);

        if (id == "i") return scalar(ScalarExpr::constant(ctx_.params, GaussianRational::i()));
        if (id == "v") return scalar(ScalarExpr::v(ctx_.params));
        if (id == "J") return scalar(ScalarExpr::monomial(ctx_.J));
        if (id == "cosh" || id == "sinh" || id == "tanh") {
            expect('(');
            ScalarExpr arg = as_scalar(expr());
            expect(')');
            return scalar(trig(id, arg));
        }
        if (id.size() > 1 && id[0] == 'j' && std::isdigit(static_cast<unsigned char>(id[1]))) {
            std::size_t k = std::stoul(id.substr(1));
            if (k < 1 || k > ctx_.params) fail("parameter " + id + " out of range");
            return scalar(ScalarExpr::monomial(JMonomial::single(ctx_.params, k)));
        }
        if (ctx_.alphabet) {
            int g = ctx_.alphabet->find(id);
            if (g >= 0) return letter(g, one());
        }
        fail("unknown symbol '" + id + "'");
    }

    ScalarExpr trig(const std::string& f, const ScalarExpr& arg) {
        Atom::Kind kind = f == "cosh" ? Atom::Kind::Cosh : f == "sinh" ? Atom::Kind::Sinh : Atom::Kind::Tanh;
        if (arg.is_zero()) return ScalarExpr::atom(kind, 0, JMonomial(ctx_.params));
        if (!arg.is_single_term()) fail(f + " argument must be a single c*J*v term");
        const auto& [k, c] = *arg.terms().begin();
        if (k.vpow != 1 || !k.atoms.empty() || !k.mono.is_nonnegative()) fail(f + " argument must be c*J*v");
        return ScalarExpr::atom(kind, c, k.mono);
    }
};

}  // namespace

ExprPoly parse_expression(const std::string& text, const ParseContext& ctx) { return Parser(text, ctx).whole(); }

ExprPoly parse_equation(const std::string& text, const ParseContext& ctx) { return Parser(text, ctx).equation(); }

}  // namespace ckq
