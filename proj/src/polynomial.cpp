#include "lgb/polynomial.hpp"

#include <cctype>

namespace lgb {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ == s_.size();
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    long number()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stol(s_.substr(start, pos_ - start));
    }
    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    Monomial::Entry factor()
    {
        skip_ws();
        Var v;
        if (peek('x')) {
            ++pos_;
            expect('[');
            long i = number();
            expect(',');
            long j = number();
            expect(']');
            if (i < 1 || i > 255 || j < 1 || j > 255) fail("index out of range");
            v = make_var(static_cast<int>(i), static_cast<int>(j));
        } else if (peek('y')) {
            ++pos_;
            long k = number();
            if (k < 0 || k > 255) fail("index out of range");
            v = make_var(0, static_cast<int>(k));
        } else {
            fail("expected a variable");
        }
        std::uint32_t e = 1;
        if (peek('^')) {
            ++pos_;
            e = static_cast<std::uint32_t>(number());
        }
        return {v, e};
    }

    Monomial monomial()
    {
        std::vector<Monomial::Entry> es;
        es.push_back(factor());
        while (peek('*')) {
            ++pos_;
            es.push_back(factor());
        }
        return Monomial::from_entries(std::move(es));
    }

    // term := coef ['*' monomial] | monomial
    Polynomial<Rational>::Term term()
    {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            mpq_class q(digits());
            if (peek('/')) {
                ++pos_;
                q = mpq_class(mpz_class(q.get_num()), mpz_class(digits()));
                q.canonicalize();
            }
            Monomial m;
            if (peek('*')) {
                ++pos_;
                m = monomial();
            }
            return {m, Rational(q)};
        }
        return {monomial(), Rational(1)};
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what +
                                    " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Monomial parse_monomial(const std::string& text)
{
    Parser p(text);
    p.skip_ws();
    if (p.peek('1')) {
        p.expect('1');
        if (!p.done()) p.fail("trailing input");
        return {};
    }
    auto m = p.monomial();
    if (!p.done()) p.fail("trailing input");
    return m;
}

Polynomial<Rational> parse_polynomial(const std::string& text)
{
    Parser p(text);
    if (p.peek('0')) {
        p.expect('0');
        if (p.done()) return {};
        p.fail("trailing input");
    }
    std::vector<Polynomial<Rational>::Term> terms;
    bool negative = false;
    if (p.peek('-')) {
        p.expect('-');
        negative = true;
    }
    while (true) {
        auto t = p.term();
        if (negative) t.second = -t.second;
        terms.push_back(std::move(t));
        if (p.done()) break;
        if (p.peek('+')) {
            p.expect('+');
            negative = false;
        } else if (p.peek('-')) {
            p.expect('-');
            negative = true;
        } else {
            p.fail("expected '+' or '-'");
        }
    }
    return Polynomial<Rational>::from_terms(std::move(terms));
}

} // namespace lgb
