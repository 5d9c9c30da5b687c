#include <doctest.h>

#include <random>

#include "girard/builtins.hpp"
#include "girard/logic.hpp"

using namespace girard;

namespace {

Formula atom(const std::string& name) {
  Formula f;
  f.kind = Formula::Kind::Atom;
  f.atom = name;
  return f;
}

Formula binary(Formula::Kind kind, Formula l, Formula r) {
  Formula f;
  f.kind = kind;
  f.lhs = std::make_unique<Formula>(std::move(l));
  f.rhs = std::make_unique<Formula>(std::move(r));
  return f;
}

Formula neg(Formula inner) {
  Formula f;
  f.kind = Formula::Kind::Neg;
  f.lhs = std::make_unique<Formula>(std::move(inner));
  return f;
}

// Seeded random formulas over a fixed atom pool.
Formula random_formula(std::mt19937_64& rng, int depth) {
  int pick = static_cast<int>(rng() % (depth <= 0 ? 5 : 8));
  switch (pick) {
    case 0:
      return atom("a");
    case 1:
      return atom("b" + std::to_string(rng() % 3));
    case 2: {
      Formula f;
      f.kind = Formula::Kind::One;
      return f;
    }
    case 3: {
      Formula f;
      f.kind = static_cast<int>(rng() % 2) ? Formula::Kind::Bottom
                                           : Formula::Kind::Zero;
      return f;
    }
    case 4: {
      Formula f;
      f.kind = Formula::Kind::Top;
      return f;
    }
    case 5:
      return neg(random_formula(rng, depth - 1));
    case 6:
      return binary(Formula::Kind::Tensor, random_formula(rng, depth - 1),
                    random_formula(rng, depth - 1));
    default:
      return binary(Formula::Kind::Par, random_formula(rng, depth - 1),
                    random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parser shapes") {
  SUBCASE("tensor with a negated atom") {
    Formula f = parse_formula("a * ~a");
    CHECK(f == binary(Formula::Kind::Tensor, atom("a"), neg(atom("a"))));
  }
  SUBCASE("par is left-associative") {
    Formula f = parse_formula("a | b | c");
    CHECK(f == binary(Formula::Kind::Par,
                      binary(Formula::Kind::Par, atom("a"), atom("b")),
                      atom("c")));
  }
  SUBCASE("parentheses and literals") {
    Formula one;
    one.kind = Formula::Kind::One;
    Formula f = parse_formula("a * (b | 1)");
    CHECK(f == binary(Formula::Kind::Tensor, atom("a"),
                      binary(Formula::Kind::Par, atom("b"), std::move(one))));
  }
  SUBCASE("postfix negation") {
    CHECK(parse_formula("a^") == neg(atom("a")));
    CHECK(parse_formula("a^^") == neg(neg(atom("a"))));
    CHECK(parse_formula("~a^") == neg(neg(atom("a"))));
  }
  SUBCASE("unicode aliases") {
    CHECK(parse_formula("a ⊗ b") ==
          binary(Formula::Kind::Tensor, atom("a"), atom("b")));
    CHECK(parse_formula("a ⅋ b") ==
          binary(Formula::Kind::Par, atom("a"), atom("b")));
  }
  SUBCASE("precedence: neg > tensor > par") {
    Formula f = parse_formula("~a * b | c");
    CHECK(f == binary(Formula::Kind::Par,
                      binary(Formula::Kind::Tensor, neg(atom("a")), atom("b")),
                      atom("c")));
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("a * ("), ParseError);
  try {
    parse_formula("a * (");
  } catch (const ParseError& e) {
    CHECK(e.column == 6);
  }
  try {
    parse_formula("a ? b");
  } catch (const ParseError& e) {
    CHECK(e.column == 3);
    CHECK(std::string(e.what()).find("unknown token") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("~"), ParseError);
}

TEST_CASE("printer round-trips") {
  for (const char* text : {"a * ~a", "a | b | c", "a * (b | 1)", "~(a * b)",
                           "top | (0 * bot)", "~~a", "a | (b | c)"}) {
    Formula f = parse_formula(text);
    CHECK(parse_formula(print_formula(f)) == f);
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_formula(rng, 4);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("evaluation in the rosenthal model of the two-chain") {
  LogicModel m = builtin_model("rosenthal-chain2");
  REQUIRE(m.q.size() == 4);
  Formula unit_times_a = parse_formula("1 * a");
  Formula dneg = parse_formula("~~a");
  for (int a = 0; a < m.q.size(); ++a) {
    Valuation v{{"a", a}};
    CHECK(eval_formula(unit_times_a, m, v) == a);
    CHECK(eval_formula(dneg, m, v) == a);
  }
  Formula lhs = parse_formula("~(a * b)");
  Formula rhs = parse_formula("~b | ~a");
  for (int a = 0; a < m.q.size(); ++a)
    for (int b = 0; b < m.q.size(); ++b) {
      Valuation v{{"a", a}, {"b", b}};
      CHECK(eval_formula(lhs, m, v) == eval_formula(rhs, m, v));
    }
}

TEST_CASE("validity and tautologies") {
  Formula excluded = parse_formula("a | ~a");
  Formula contradiction = parse_formula("a * ~a");
  for (const auto& name : corpus_model_names()) {
    CAPTURE(name);
    LogicModel m = builtin_model(name);
    CHECK(is_valid(parse_formula("1"), m, {}));
    CHECK(is_tautology(excluded, m).tautology);
  }
  // a * ~a has a falsifying valuation in the rosenthal model of Sub Z4.
  LogicModel z4 = builtin_model("rosenthal-subz4");
  TautologyResult r = is_tautology(contradiction, z4);
  CHECK_FALSE(r.tautology);
  REQUIRE(r.counterexample.has_value());
  CHECK_FALSE(is_valid(contradiction, z4, *r.counterexample));
}

TEST_CASE("validity-level cyclicity") {
  LogicModel m = builtin_model("rosenthal-subz4");
  int d = m.dualizer;
  for (int a = 0; a < m.q.size(); ++a)
    for (int b = 0; b < m.q.size(); ++b)
      CHECK(m.q.lat().leq(m.q.mul(a, b), d) ==
            m.q.lat().leq(m.q.mul(b, a), d));
}

TEST_CASE("double negation elimination to depth three") {
  std::mt19937_64 rng(11);
  LogicModel m = builtin_model("rosenthal-chain2");
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, 3);
    Formula nn = neg(neg(f.clone()));
    std::vector<std::string> atoms = collect_atoms(f);
    // All valuations over the collected atoms.
    std::vector<int> assign(atoms.size(), 0);
    while (true) {
      Valuation v;
      for (size_t j = 0; j < atoms.size(); ++j) v[atoms[j]] = assign[j];
      CHECK(eval_formula(nn, m, v) == eval_formula(f, m, v));
      size_t pos = 0;
      while (pos < assign.size() && assign[pos] == m.q.size() - 1)
        assign[pos++] = 0;
      if (pos == assign.size()) break;
      ++assign[pos];
    }
  }
}

TEST_CASE("De Morgan across the corpus models") {
  Formula lhs = parse_formula("~(a * b)");
  Formula rhs = parse_formula("~b | ~a");
  for (const auto& name : corpus_model_names()) {
    LogicModel m = builtin_model(name);
    for (int a = 0; a < m.q.size(); ++a)
      for (int b = 0; b < m.q.size(); ++b) {
        Valuation v{{"a", a}, {"b", b}};
        CHECK(eval_formula(lhs, m, v) == eval_formula(rhs, m, v));
      }
  }
}

TEST_CASE("tautology budget") {
  LogicModel m = builtin_model("rosenthal-subz6");  // 16 elements
  Formula f = parse_formula("a1 | a2 | a3 | a4 | a5 | a6");
  Budget tight;
  tight.sup_map_candidates = 1000;
  CHECK_THROWS_AS(is_tautology(f, m, tight), BudgetError);
}

TEST_CASE("models must be Girard") {
  Quantale q = builtin_quantale("chain2");
  CHECK_THROWS_AS(LogicModel(q, q.lat().top()), std::invalid_argument);
  CHECK_NOTHROW(LogicModel(builtin_quantale("chain2"),
                           builtin_quantale("chain2").lat().bottom()));
}

TEST_CASE("missing atom assignments are reported") {
  LogicModel m = builtin_model("rosenthal-chain2");
  CHECK_THROWS_AS(eval_formula(parse_formula("a * b"), m, {{"a", 0}}),
                  std::invalid_argument);
}
