#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "lnr/hvchecks.hpp"

using namespace lnr;

namespace {
OutcomeTable random_table(SplitMix64& g, std::size_t rows) {
  std::vector<OutcomeEntry> entries(rows);
  double sum = 0;
  for (auto& e : entries) {
    e.weight = g.next_double(0.05, 1.0);
    sum += e.weight;
    e.a = g.next_double() < 0.5 ? -1 : 1;
    e.b = g.next_double() < 0.5 ? -1 : 1;
    e.b2 = g.next_double() < 0.5 ? -1 : 1;
  }
  for (auto& e : entries) e.weight /= sum;
  return OutcomeTable(std::move(entries));
}
}  // namespace

TEST_CASE("pointwise identity holds exactly for all four outcome pairs") {
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      CHECK(check_pointwise_identity(a, b));
    }
  }
  CHECK_THROWS_AS(check_pointwise_identity(0, 1), std::domain_error);
  CHECK_THROWS_AS(check_pointwise_identity(1, 2), std::domain_error);
  CHECK_THROWS_AS(check_pointwise_identity(-2, -1), std::domain_error);
}

TEST_CASE("outcome table validation") {
  CHECK_THROWS_AS(OutcomeTable(std::vector<OutcomeEntry>{}), std::domain_error);
  CHECK_THROWS_AS(OutcomeTable({{0.0, 1, 1, 1}, {1.0, 1, 1, 1}}), std::domain_error);
  CHECK_THROWS_AS(OutcomeTable({{-0.5, 1, 1, 1}, {1.5, 1, 1, 1}}), std::domain_error);
  CHECK_THROWS_AS(OutcomeTable({{0.9, 1, 1, 1}}), std::domain_error);
  CHECK_THROWS_AS(OutcomeTable({{1.0, 0, 1, 1}}), std::domain_error);
  CHECK_THROWS_AS(OutcomeTable({{1.0, 1, 2, 1}}), std::domain_error);

  const double third = 1.0 / 3.0;
  CHECK_NOTHROW(OutcomeTable({{third, 1, 1, 1}, {third, -1, 1, -1}, {third, 1, -1, -1}}));
}

TEST_CASE("subensemble inequality saturates on a single row") {
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      const OutcomeTable t({{1.0, a, b, 1}});
      const SubensembleReport r = check_subensemble_inequality(t);
      CHECK(r.holds);
      CHECK(r.lhs_plus == r.rhs_plus);
      CHECK(r.lhs_minus == r.rhs_minus);
    }
  }
}

TEST_CASE("subensemble inequality on a mixed table") {
  const OutcomeTable t({{0.5, 1, 1, 1}, {0.5, -1, 1, 1}});
  const SubensembleReport r = check_subensemble_inequality(t);
  CHECK(r.holds);
  CHECK(r.lhs_plus == 1.0);   // |0 + 1|
  CHECK(r.lhs_minus == 1.0);  // |0 - 1|
  CHECK(r.rhs_plus == 1.0);   // 1 + 0
  CHECK(r.rhs_minus == 1.0);  // 1 - 0
}

TEST_CASE("triangle step saturates on single rows") {
  {
    const OutcomeTable t({{1.0, 1, 1, 1}});
    const TriangleStepReport r = check_triangle_step(t);
    CHECK(r.holds);
    CHECK(r.lhs_plus == 2.0);
    CHECK(r.rhs_plus == 2.0);
    CHECK(r.lhs_minus == 0.0);
    CHECK(r.rhs_minus == 0.0);
  }
  {
    const OutcomeTable t({{1.0, 1, 1, -1}});
    const TriangleStepReport r = check_triangle_step(t);
    CHECK(r.holds);
    CHECK(r.lhs_plus == 0.0);
    CHECK(r.rhs_plus == 0.0);
    CHECK(r.lhs_minus == 2.0);
    CHECK(r.rhs_minus == 2.0);
  }
}

TEST_CASE("both inequalities hold on random weighted tables") {
  SplitMix64 g = substream(51u, 0u);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t rows = 1 + static_cast<std::size_t>(g.next_double(0.0, 10.0));
    const OutcomeTable t = random_table(g, rows);
    const SubensembleReport se = check_subensemble_inequality(t);
    const TriangleStepReport tr = check_triangle_step(t);
    CHECK(se.holds);
    CHECK(tr.holds);
    CHECK(se.rhs_plus >= -1e-12);
    CHECK(se.rhs_minus >= -1e-12);
    CHECK(tr.rhs_plus >= -1e-12);
    CHECK(tr.rhs_minus >= -1e-12);
  }
}

TEST_CASE("csv loader accepts padding, CR line ends, and +1") {
  std::istringstream in(
      "weight, A, B, B2\r\n"
      "0.25, +1, 1, -1\r\n"
      "\r\n"
      " 0.75 , -1 , -1 , +1 \r\n");
  const OutcomeTable t = load_outcome_table_csv(in);
  REQUIRE(t.entries().size() == 2);
  CHECK(t.entries()[0].weight == 0.25);
  CHECK(t.entries()[0].a == 1);
  CHECK(t.entries()[0].b == 1);
  CHECK(t.entries()[0].b2 == -1);
  CHECK(t.entries()[1].weight == 0.75);
  CHECK(t.entries()[1].a == -1);
  CHECK(t.entries()[1].b2 == 1);
}

TEST_CASE("csv loader rejects malformed input") {
  auto load = [](const char* text) {
    std::istringstream in(text);
    return load_outcome_table_csv(in);
  };
  CHECK_THROWS_AS(load(""), std::domain_error);
  CHECK_THROWS_AS(load("w,A,B,B2\n1.0,1,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n1.0,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n1.0,1,1,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\nabc,1,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n0.5x,1,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n1.0,3,1,1\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n"), std::domain_error);
  CHECK_THROWS_AS(load("weight,A,B,B2\n0.5,1,1,1\n"), std::domain_error);
}

TEST_CASE("csv loader round-trips a table built in memory") {
  SplitMix64 g = substream(51u, 1u);
  const OutcomeTable t = random_table(g, 6);
  std::ostringstream out;
  out << "weight,A,B,B2\n";
  out.precision(17);
  for (const auto& e : t.entries()) {
    out << e.weight << "," << e.a << "," << e.b << "," << e.b2 << "\n";
  }
  std::istringstream in(out.str());
  const OutcomeTable u = load_outcome_table_csv(in);
  REQUIRE(u.entries().size() == t.entries().size());
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    CHECK(u.entries()[i].weight == t.entries()[i].weight);
    CHECK(u.entries()[i].a == t.entries()[i].a);
    CHECK(u.entries()[i].b == t.entries()[i].b);
    CHECK(u.entries()[i].b2 == t.entries()[i].b2);
  }
}
