#include "doctest.h"

#include "ics/expr.hpp"
#include "ics/closed_forms.hpp"

using namespace ics;

TEST_CASE("parses every constructor") {
    CHECK(structurally_equal(evaluate(parse_expr("chain(4)")), chain(4)));
    CHECK(structurally_equal(evaluate(parse_expr("antichain(3)")), antichain(3)));
    CHECK(structurally_equal(evaluate(parse_expr("osum(2,3,1,4)")),
                             ordinal_sum_of_antichains({2, 3, 1, 4})));
    CHECK(structurally_equal(evaluate(parse_expr("dsum(chain(2),chain(2))")),
                             disjoint_union({chain(2), chain(2)})));
    CHECK(structurally_equal(evaluate(parse_expr("prod(chain(2),chain(5))")),
                             product(chain(2), chain(5))));
    CHECK(structurally_equal(evaluate(parse_expr("prod(chain(2),chain(2),chain(3))")),
                             product({chain(2), chain(2), chain(3)})));
    CHECK(structurally_equal(evaluate(parse_expr("diamonds(5,2)")), stacked_diamond(5, 2)));
    CHECK(structurally_equal(evaluate(parse_expr("divisor(48)")),
                             product(chain(2), chain(5))));
}

TEST_CASE("bare integers in sums abbreviate antichains") {
    PosetExpr a = parse_expr("osum(2,3)");
    PosetExpr b = parse_expr("osum(antichain(2),antichain(3))");
    CHECK(a == b);
    CHECK(structurally_equal(evaluate(parse_expr("osum(chain(2),3)")),
                             ordinal_sum({chain(2), antichain(3)})));
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_expr(" osum( 2 , chain( 3 ) ) ") == parse_expr("osum(2,chain(3))"));
}

TEST_CASE("pretty printing round trips") {
    for (const char* text :
         {"chain(7)", "antichain(1)", "osum(2,3,1,4)", "osum(chain(2),3,prod(chain(2),chain(2)))",
          "dsum(2,2)", "prod(chain(2),chain(5))", "prod(chain(2),chain(2),chain(3))",
          "diamonds(7,3)", "divisor(60)"}) {
        CAPTURE(text);
        PosetExpr e = parse_expr(text);
        CHECK(parse_expr(pretty(e)) == e);
        CHECK(pretty(parse_expr(pretty(e))) == pretty(e));
    }
}

TEST_CASE("syntax errors carry the failure position") {
    for (auto [text, pos] : std::vector<std::pair<const char*, std::size_t>>{
             {"chain(", 6},      // missing integer
             {"chain(3", 7},     // missing paren
             {"pineapple(3)", 0},
             {"chain(3)x", 8},   // trailing garbage
             {"prod(chain(2))", 0},
             {"osum(2,,3)", 7}}) {
        CAPTURE(text);
        try {
            parse_expr(text);
            FAIL_CHECK("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
        }
    }
}

TEST_CASE("bound violations are rejected") {
    CHECK_THROWS_AS(parse_expr("chain(0)"), ParseError);
    CHECK_THROWS_AS(parse_expr("divisor(1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("diamonds(4,2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("diamonds(5,1)"), ParseError);
}

TEST_CASE("parsed posets feed the rest of the library") {
    Poset p = evaluate(parse_expr("prod(chain(2),chain(2))"));
    CHECK(enumerate_ics(p).size() == 13);
}
