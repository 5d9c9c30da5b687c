#include <doctest.h>

#include "girard/builtins.hpp"
#include "girard/io.hpp"

using namespace girard;

TEST_CASE("lattice text round-trips the corpus") {
  for (const auto& name : builtin_lattice_names()) {
    FiniteLattice l = builtin_lattice(name);
    FiniteLattice back = parse_lattice_text(lattice_to_text(l));
    CHECK(back == l);
  }
}

TEST_CASE("lattice text accepts comments and blank lines") {
  FiniteLattice l = parse_lattice_text(
      "# a diamond\n"
      "elements: 0 a b 1\n"
      "\n"
      "covers: 0<a, 0<b   # lower covers\n"
      "covers: a<1, b<1\n");
  CHECK(l.size() == 4);
  CHECK(l.join(l.index_of("a"), l.index_of("b")) == l.index_of("1"));
}

TEST_CASE("lattice text errors") {
  CHECK_THROWS_WITH_AS(parse_lattice_text("covers: a<b\n"),
                       "missing elements line", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_lattice_text("elements: a b\ncovers: a<x\n"),
      "unknown element 'x' in covers", std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_text("elements: a b\nelements: c\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_text("elements: x y\nco vers: x<y\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_text(""), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_lattice_text("elements: 0 a b 1\ncovers: 0<a, 0<b\n"),
      std::invalid_argument);
}

TEST_CASE("quantale text round-trips") {
  for (const auto* name : {"chain2", "subz4", "subz6", "endo-chain3"}) {
    Quantale q = builtin_quantale(name);
    ParsedQuantale back = parse_quantale_text(quantale_to_text(q));
    CHECK(back.q.lat() == q.lat());
    CHECK(back.q.mul_table() == q.mul_table());
    CHECK_FALSE(back.dualizer.has_value());
  }
  // Dualizer lines survive the round trip.
  Quantale z4 = sub_ring_quantale(4);
  ParsedQuantale back =
      parse_quantale_text(quantale_to_text(z4, z4.lat().bottom()));
  REQUIRE(back.dualizer.has_value());
  CHECK(*back.dualizer == z4.lat().bottom());
}

TEST_CASE("quantale text requires a total multiplication") {
  try {
    parse_quantale_text(
        "elements: 0 1\n"
        "covers: 0<1\n"
        "mul: 1*1=1, 1*0=0, 0*1=0\n");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("0*0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quantale_text("elements: 0 1\ncovers: 0<1\n"
                                      "mul: 1*1=x\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_quantale_text("elements: 0 1\ncovers: 0<1\n"
                                      "mul: broken\n"),
                  std::invalid_argument);
}

TEST_CASE("invalid quantale tables are rejected at parse time") {
  // Multiplication violating distributivity: m*m=1 on the three-chain.
  CHECK_THROWS_AS(parse_quantale_text(
                      "elements: 0 m 1\n"
                      "covers: 0<m, m<1\n"
                      "mul: 0*0=0, 0*m=0, 0*1=0, m*0=0, m*m=1, m*1=0, "
                      "1*0=0, 1*m=0, 1*1=0\n"),
                  std::invalid_argument);
}

TEST_CASE("couple text round-trips") {
  for (Couple k : {zero_couple(sub_ring_quantale(4)),
                   identity_couple(builtin_quantale("chain2")),
                   cs_couple(builtin_lattice_ptr("chain3")).couple}) {
    Couple back = parse_couple_text(couple_to_text(k));
    CHECK(back.c.lat() == k.c.lat());
    CHECK(back.q.lat() == k.q.lat());
    CHECK(back.c.mul_table() == k.c.mul_table());
    CHECK(back.q.mul_table() == k.q.mul_table());
    CHECK(back.phi.table == k.phi.table);
    CHECK(back.actl_ == k.actl_);
    CHECK(back.actr_ == k.actr_);
    CHECK(back.dualizer == k.dualizer);
    CHECK(validate_couple(back).ok());
  }
}

TEST_CASE("couple text errors") {
  CHECK_THROWS_AS(parse_couple_text("elements: a\n"), std::invalid_argument);
  // Missing actl entries.
  std::string text =
      "[C]\nelements: 0 1\ncovers: 0<1\n"
      "mul: 0*0=0, 0*1=0, 1*0=0, 1*1=1\n"
      "[Q]\nelements: 0 1\ncovers: 0<1\n"
      "mul: 0*0=0, 0*1=0, 1*0=0, 1*1=1\n"
      "[couple]\nphi: 0 -> 0\nphi: 1 -> 1\n";
  CHECK_THROWS_AS(parse_couple_text(text), std::invalid_argument);
}

TEST_CASE("files can be written and read back") {
  std::string path = "/tmp/girard_io_test.lat";
  write_file(path, lattice_to_text(builtin_lattice("n5")));
  CHECK(parse_lattice_text(read_file(path)) == builtin_lattice("n5"));
  CHECK_THROWS_AS(read_file("/tmp/girard_definitely_missing.lat"),
                  std::invalid_argument);
}
