#include "doctest.h"

#include "contalg/format.hpp"
#include "contalg/parse.hpp"
#include "contalg/report.hpp"

using namespace contalg;

TEST_CASE("ring expression parsing") {
  RingExpr e = parse_ring_expr("Z6");
  CHECK(e.kind == RingKind::Zn);
  CHECK(e.n == 6);

  e = parse_ring_expr("Z2[y]/(y^2+y+1)");
  CHECK(e.kind == RingKind::UnivarQuot);
  CHECK(e.var == "y");
  CHECK(e.monic == std::vector<std::uint32_t>{1, 1, 1});

  e = parse_ring_expr("Z2[u,v]@3 x Z4");
  REQUIRE(e.kind == RingKind::Product);
  CHECK(e.left->kind == RingKind::TruncLocal);
  CHECK(e.left->vars == std::vector<std::string>{"u", "v"});
  CHECK(e.left->trunc == 3);
  CHECK(e.left->extra.empty());
  CHECK(e.right->kind == RingKind::Zn);
  CHECK(e.right->n == 4);

  e = parse_ring_expr("Z2[u,v]@3/(u*v, u^2)");
  REQUIRE(e.extra.size() == 2);
  CHECK(e.extra[0] == std::vector<std::uint32_t>{1, 1});
  CHECK(e.extra[1] == std::vector<std::uint32_t>{2, 0});
}

TEST_CASE("whitespace and the multiplication sign") {
  CHECK(parse_ring_expr(" Z2  x Z3 ") == parse_ring_expr("Z2xZ3"));
  CHECK(parse_ring_expr("Z2 \xc3\x97 Z3") == parse_ring_expr("Z2 x Z3"));
}

TEST_CASE("product associativity and parens") {
  RingExpr left = parse_ring_expr("Z2 x Z3 x Z5");
  CHECK(left.left->kind == RingKind::Product);  // left-associative
  RingExpr right = parse_ring_expr("Z2 x (Z3 x Z5)");
  CHECK(right.right->kind == RingKind::Product);
  CHECK(!(left == right));
  CHECK(parse_ring_expr(print_ring_expr(right)) == right);
}

TEST_CASE("expression round-trips") {
  for (auto text : {"Z6", "Z2[y]/(y^2+y+1)", "Z2[y]/(y^2)", "Z2[u,v]@3",
                    "Z2[u,v]@3/(u*v)", "Z2[u,v]@3 x Z4", "Z2 x Z3 x Z5"}) {
    RingExpr e = parse_ring_expr(text);
    CHECK(print_ring_expr(e) == text);
    CHECK(parse_ring_expr(print_ring_expr(e)) == e);
  }
}

TEST_CASE("construction text reparses to the same ring") {
  for (auto text : {"Z6", "Z2[y]/(y^2)", "Z2[u,v]@3 x Z4"}) {
    RingPtr r = ring_from_text(text);
    CHECK(r->construction().text == text);
    RingPtr again = ring_from_text(r->construction().text);
    CHECK(again->order() == r->order());
  }
}

TEST_CASE("syntax errors carry position and expectation") {
  try {
    parse_ring_expr("Z6 + Z4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(e.expected() == "end of input");
  }
  CHECK_THROWS_AS(parse_ring_expr("Z"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Q5"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Z2[y]/(y^2"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Z2[u,v]/(u)"), ParseError);

  // syntactically fine, semantically rejected (non-monic modulus)
  RingExpr e = parse_ring_expr("Z4[y]/(2*y^2+1)");
  CHECK_THROWS_AS(build_ring(e), InvalidParameter);
}

TEST_CASE("polynomial literals") {
  RingPtr r4 = make_zn(4);
  MRElem f = parse_poly_literal("2*X^1 + 2", r4);
  CHECK(f.term_count() == 2);
  CHECK(poly_to_string(f) == "2*X+2");

  RingPtr r22 = ring_from_text("Z2 x Z2");
  MRElem g = parse_poly_literal("(1,0)*X + (0,1)", r22);
  CHECK(g.term_count() == 2);
  CHECK(g.terms.at({1}) == *r22->index_of("(1,0)"));
  CHECK(g.terms.at({0}) == *r22->index_of("(0,1)"));

  RingPtr ruv = ring_from_text("Z2[u,v]@3");
  MRElem h = parse_poly_literal("(u)*X + (v)", ruv);
  CHECK(h.terms.at({1}) == *ruv->index_of("u"));

  CHECK(parse_poly_literal("0", r4).is_zero());
  CHECK(parse_poly_literal("X^2", r4).terms.at({2}) == 1);
  CHECK_THROWS_AS(parse_poly_literal("7*X", r4), ParseError);
  CHECK_THROWS_AS(parse_poly_literal("2*X^", r4), ParseError);
}

TEST_CASE("literals over several free variables and table monoids") {
  RingPtr r = make_zn(4);
  MonoidPtr m2 = Monoid::free_comm(2);
  MRElem f = parse_poly_literal("3*X1^2*X2 + X2 + 1", r, m2);
  CHECK(f.terms.at({2, 1}) == 3);
  CHECK(f.terms.at({0, 1}) == 1);
  CHECK(f.terms.at({0, 0}) == 1);
  CHECK(parse_poly_literal(poly_to_string(f), r, m2) == f);

  MonoidPtr c3 = Monoid::cyclic(3);
  MRElem g = parse_poly_literal("2*X^2 + X^1 + 3", r, c3);
  CHECK(g.terms.at({2}) == 2);
  CHECK(g.terms.at({0}) == 3);
  CHECK(parse_poly_literal(poly_to_string(g), r, c3) == g);
}

TEST_CASE("printed polynomials reparse to the same value") {
  for (auto expr : {"Z6", "Z2 x Z2", "Z2[y]/(y^2)"}) {
    RingPtr r = ring_from_text(expr);
    MonoidPtr m = Monoid::free_comm(1);
    PolyEnum en(r, m, 2);
    for (std::size_t i = 0; i < en.count(); ++i) {
      MRElem f = en.at(i);
      CHECK(parse_poly_literal(poly_to_string(f), r) == f);
    }
  }
}

TEST_CASE("parse_element") {
  RingPtr r = make_zn(6);
  CHECK(parse_element("3", *r) == 3);
  CHECK(parse_element(" 3 ", *r) == 3);
  RingPtr p = ring_from_text("Z2 x Z3");
  CHECK(parse_element("(1,2)", *p) == *p->index_of("(1,2)"));
  CHECK_THROWS_AS(parse_element("9", *r), ParseError);
}

TEST_CASE("reports serialize deterministically") {
  RingPtr r = make_zn(6);
  Limits lim;
  Json a = ring_report(r, {2}, lim);
  Json b = ring_report(r, {2}, lim);
  CHECK(a.dump(2) == b.dump(2));
  CHECK(a["ring"] == "Z6");
  CHECK(a["zdDegree"]["degree"] == 2);
  CHECK(a["primal"] == false);
  CHECK(a["gammaDiameter"] == 2);
  CHECK(a["predictedExtensionDiameter"] == 2);
  // field order is fixed by construction
  auto it = a.begin();
  CHECK(it.key() == "ring");
}

TEST_CASE("outcome serialization") {
  CheckOutcome o = CheckOutcome::verified("demo", 7, 2, "note");
  Json j = outcome_to_json(o);
  CHECK(j["verdict"] == "Verified");
  CHECK(j["cases"] == 7);
  CHECK(j["degree"] == 2);
  CHECK(verdict_name(Verdict::Refuted) == std::string("Refuted"));
  CHECK(verdict_name(Verdict::Inconclusive) == std::string("Inconclusive"));
}
