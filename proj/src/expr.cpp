#include "ics/expr.hpp"

#include <cctype>

namespace ics {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    PosetExpr parse() {
        PosetExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(pos_, message);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        if (pos_ - start > 9) fail("integer too large");
        long long v = std::stoll(text_.substr(start, pos_ - start));
        if (v < 1) {
            pos_ = start;
            fail("integers must be at least 1");
        }
        return v;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a constructor name");
        return text_.substr(start, pos_ - start);
    }

    PosetExpr expr() {
        skip_ws();
        std::size_t at = pos_;
        std::string name = identifier();
        PosetExpr e;
        if (name == "chain" || name == "antichain" || name == "divisor") {
            e.kind = name == "chain"       ? PosetExpr::Kind::chain
                     : name == "antichain" ? PosetExpr::Kind::antichain
                                           : PosetExpr::Kind::divisor;
            expect('(');
            e.ints.push_back(integer());
            expect(')');
            if (e.kind == PosetExpr::Kind::divisor && e.ints[0] < 2) {
                pos_ = at;
                fail("divisor requires an argument of at least 2");
            }
        } else if (name == "osum" || name == "dsum") {
            e.kind = name == "osum" ? PosetExpr::Kind::osum : PosetExpr::Kind::dsum;
            expect('(');
            do {
                if (peek_digit()) {
                    PosetExpr child;
                    child.kind = PosetExpr::Kind::antichain;
                    child.ints.push_back(integer());
                    e.children.push_back(std::move(child));
                } else {
                    e.children.push_back(expr());
                }
            } while (accept(','));
            expect(')');
        } else if (name == "prod") {
            expect('(');
            e.kind = PosetExpr::Kind::prod;
            do {
                e.children.push_back(expr());
            } while (accept(','));
            expect(')');
            if (e.children.size() < 2) {
                pos_ = at;
                fail("prod requires at least two factors");
            }
        } else if (name == "diamonds") {
            expect('(');
            e.kind = PosetExpr::Kind::diamonds;
            e.ints.push_back(integer());
            expect(',');
            e.ints.push_back(integer());
            expect(')');
            if (e.ints[0] < 3 || e.ints[0] % 2 == 0 || e.ints[1] < 2) {
                pos_ = at;
                fail("diamonds requires an odd first argument >= 3 and a second >= 2");
            }
        } else {
            pos_ = at;
            fail("unknown constructor '" + name + "'");
        }
        return e;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

PosetExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string pretty(const PosetExpr& e) {
    auto joined = [](const PosetExpr& parent, bool bare_antichains) {
        std::string s;
        for (std::size_t i = 0; i < parent.children.size(); ++i) {
            const PosetExpr& c = parent.children[i];
            if (i) s += ",";
            if (bare_antichains && c.kind == PosetExpr::Kind::antichain)
                s += std::to_string(c.ints[0]);
            else
                s += pretty(c);
        }
        return s;
    };
    switch (e.kind) {
        case PosetExpr::Kind::chain: return "chain(" + std::to_string(e.ints[0]) + ")";
        case PosetExpr::Kind::antichain:
            return "antichain(" + std::to_string(e.ints[0]) + ")";
        case PosetExpr::Kind::divisor:
            return "divisor(" + std::to_string(e.ints[0]) + ")";
        case PosetExpr::Kind::osum: return "osum(" + joined(e, true) + ")";
        case PosetExpr::Kind::dsum: return "dsum(" + joined(e, true) + ")";
        case PosetExpr::Kind::prod: return "prod(" + joined(e, false) + ")";
        case PosetExpr::Kind::diamonds:
            return "diamonds(" + std::to_string(e.ints[0]) + "," +
                   std::to_string(e.ints[1]) + ")";
    }
    return "?";
}

Poset evaluate(const PosetExpr& e) {
    auto parts = [&] {
        std::vector<Poset> ps;
        ps.reserve(e.children.size());
        for (const auto& c : e.children) ps.push_back(evaluate(c));
        return ps;
    };
    switch (e.kind) {
        case PosetExpr::Kind::chain: return chain(static_cast<int>(e.ints[0]));
        case PosetExpr::Kind::antichain: return antichain(static_cast<int>(e.ints[0]));
        case PosetExpr::Kind::divisor: return divisor_poset(e.ints[0]);
        case PosetExpr::Kind::osum: return ordinal_sum(parts());
        case PosetExpr::Kind::dsum: return disjoint_union(parts());
        case PosetExpr::Kind::prod: return product(parts());
        case PosetExpr::Kind::diamonds:
            return stacked_diamond(static_cast<int>(e.ints[0]),
                                   static_cast<int>(e.ints[1]));
    }
    throw std::logic_error("evaluate: unhandled expression kind");
}

} // namespace ics
