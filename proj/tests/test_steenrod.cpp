#include <chrono>

#include "doctest.h"
#include "srchroma/errors.hpp"
#include "srchroma/steenrod.hpp"
#include "support/algebra_util.hpp"
#include "support/oracles.hpp"

using namespace srchroma;
using testutil::gen;
using testutil::mono;

namespace {

FamilySpec fam(Family f, Residue p, std::vector<unsigned> v) { return FamilySpec{f, p, std::move(v)}; }

}  // namespace

TEST_CASE("table basics and unstability") {
  auto cx = free_polynomial({{"x", 4}});
  auto t = SteenrodTable::zero(cx, 3);
  auto x = gen(cx, 3, "x");
  CHECK(t.get(0, 0) == x);
  CHECK(t.get(0, 2) == x * x * x);
  CHECK(t.get(0, 3).is_zero());
  CHECK(t.get(0, 1).is_zero());
  CHECK_THROWS_AS(t.set(0, 2, x), ContractError);
  CHECK_THROWS_AS(t.set(0, 1, x), ContractError);  // wrong degree
  CHECK_THROWS_AS(SteenrodTable(cx, 2), ContractError);
  SteenrodTable empty(cx, 3);
  CHECK_THROWS_AS(empty.get(0, 1), IncompleteTableError);
}

TEST_CASE("cartan_extend examples") {
  auto cx = free_polynomial({{"x", 4}, {"y", 8}});
  const Residue p = 3;
  auto t = SteenrodTable::zero(cx, p);
  auto x = gen(cx, p, "x"), y = gen(cx, p, "y");
  t.set(0, 1, y);
  CHECK(cartan_extend(t, x * y + y, 0) == x * y + y);
  CHECK(cartan_extend(t, y, 4) == y * y * y);
  CHECK(cartan_extend(t, x * x, 1) == (x * y).scaled(2));
  SteenrodTable partial(cx, p);
  try {
    cartan_extend(partial, x * y, 1);
    FAIL("expected an incomplete-table error");
  } catch (const IncompleteTableError& e) {
    CHECK(e.k() == 1);
  }
}

TEST_CASE("total operation is multiplicative") {
  std::mt19937_64 rng(12);
  const Residue p = 3;
  auto cx = free_polynomial({{"a", 4}, {"b", 6}, {"c", 8}});
  for (int trial = 0; trial < 30; ++trial) {
    SteenrodTable t(cx, p);
    for (std::size_t g = 0; g < cx->generator_count(); ++g)
      for (unsigned k = 1; k < t.top(g); ++k) t.set(g, k, testutil::random_homogeneous(rng, cx, p, t.target_degree(g, k)));
    const unsigned bound = default_degree_bound(p);
    auto a = testutil::random_homogeneous(rng, cx, p, 2 * static_cast<unsigned>(2 + rng() % 5));
    auto b = testutil::random_homogeneous(rng, cx, p, 2 * static_cast<unsigned>(2 + rng() % 5));
    auto lhs = total_operation(t, a * b, bound);
    auto rhs = total_operation(t, a, bound) * total_operation(t, b, bound);
    AlgebraElement trunc(cx, p);
    for (const auto& [m, c] : rhs.terms())
      if (m.degree() <= bound) trunc.add_term(m, c);
    CHECK(lhs == trunc);
  }
}

TEST_CASE("check_relations examples") {
  const Residue p = 3;
  auto cx = free_polynomial({{"x", 4}});
  auto t = SteenrodTable::zero(cx, p);
  // Consistent on the generator; x^2 already needs P^1(x) != 0.
  auto zero_rep = check_relations(t, RelationSet{}, default_degree_bound(p));
  REQUIRE_FALSE(zero_rep.violations.empty());
  for (const auto& v : zero_rep.violations) CHECK(v.instance != "P^1P^3(x)");
  CHECK(zero_rep.violations[0].instance == "P^1P^3(x^2)");

  auto y = free_polynomial({{"y", 8}});
  auto ty = SteenrodTable::zero(y, p);
  auto rep = check_relations(ty, RelationSet{}, default_degree_bound(p));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].instance == "P^1P^3(y)");
  CHECK(rep.violations[0].lhs.is_zero());
  CHECK(format_element(rep.violations[0].rhs) == "1 * y^3");
  CHECK(check_relations_parallel(ty, RelationSet{}, default_degree_bound(p)).violations.size() == 1);
}

TEST_CASE("adem relation coefficients") {
  // P^1 P^1 = 2 P^2 and P^1 P^p = P^{p+1}.
  auto cx = free_polynomial({{"x", 12}});
  auto inst = relation_instances(*cx, 3, RelationSet{false, true, false}, 24);
  bool saw11 = false, saw13 = false;
  for (const auto& r : inst) {
    if (r.name == "P^1P^1(x)") {
      saw11 = true;
      REQUIRE(r.rhs.size() == 1);
      CHECK(r.rhs[0].coeff == 2);
      CHECK(r.rhs[0].outer == 2);
      CHECK(r.rhs[0].inner == 0);
    }
    if (r.name == "P^1P^3(x)") {
      saw13 = true;
      REQUIRE(r.rhs.size() == 1);
      CHECK(r.rhs[0].coeff == 1);
      CHECK(r.rhs[0].outer == 4);
    }
  }
  CHECK(saw11);
  CHECK(saw13);
  CHECK(RelationSet::parse("p1pp,adem").to_string() == "p1pp,adem");
  CHECK_THROWS_AS(RelationSet::parse("bogus"), ContractError);
}

TEST_CASE("ideal preservation") {
  const Residue p = 3;
  auto cx = make_complex(fam(Family::B, 0, {1}), complete_graph(3));
  auto t = SteenrodTable::zero(cx, p);
  CHECK(check_ideal_preservation(t).ok());
  auto x = gen(cx, p, "x1^(1)"), y1 = gen(cx, p, "y_1");
  t.set(cx->generator_index("y_1"), 1, x * y1);
  CHECK(check_ideal_preservation(t).ok());
  t.set(cx->generator_index("y_1"), 1, x * x * x);
  auto rep = check_ideal_preservation(t);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].generator == "y_1");
}

TEST_CASE("table text round trip") {
  const Residue p = 3;
  auto cx = make_complex(fam(Family::B, 0, {2}), complete_graph(3));
  auto t = SteenrodTable::zero(cx, p);
  t.set(0, 1, gen(cx, p, "y_1") + gen(cx, p, "x2^(1)") * gen(cx, p, "x1^(1)"));
  auto back = SteenrodTable::parse(cx, p, t.serialize());
  CHECK(back == t);
  CHECK(back.serialize() == t.serialize());
  CHECK(t.serialize().find("P^1(x1^(1)) = 1 * x1^(1) * x2^(1) + 1 * y_1\n") != std::string::npos);
  CHECK_THROWS_AS(SteenrodTable::parse(cx, p, "P^1(y_9) = 0"), ParseError);
  CHECK_THROWS_AS(SteenrodTable::parse(cx, p, "P^2(x1^(1)) = 0"), ParseError);
  CHECK_THROWS_AS(SteenrodTable::parse(cx, p, "garbage"), ParseError);
}

TEST_CASE("search: proof algebras at p = 3") {
  auto a = search_action(free_polynomial({{"y", 8}}), 3);
  CHECK_FALSE(a.found);
  CHECK(a.scope().find("degree bound 24") != std::string::npos);
  auto b = search_action(free_polynomial({{"x", 4}, {"y1", 8}, {"y2", 8}}), 3);
  CHECK_FALSE(b.found);
  MESSAGE("B at p=3: unknowns " << b.unknowns << ", equations " << b.equations << ", nodes " << b.nodes);
}

TEST_CASE("search: proof algebras at p = 5") {
  auto t0 = std::chrono::steady_clock::now();
  auto a = search_action(free_polynomial({{"x1", 8}, {"y", 12}}), 5);
  CHECK_FALSE(a.found);
  auto b = search_action(free_polynomial({{"x1", 4}, {"x2", 8}, {"y1", 12}, {"y2", 12}}), 5);
  CHECK_FALSE(b.found);
  MESSAGE("B at p=5: unknowns " << b.unknowns << ", equations " << b.equations << ", nodes " << b.nodes << ", "
                                << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
}

TEST_CASE("search: free algebra without obstruction") {
  // Z/3[x], |x| = 4: the zero table works.
  auto r = search_action(free_polynomial({{"x", 4}}), 3);
  REQUIRE(r.found);
  CHECK(check_relations(*r.table, r.relations, r.degree_bound).ok());
  CHECK_THROWS_AS(search_action(free_polynomial({{"x", 4}}), 2), ContractError);
}

TEST_CASE("decompose_pp") {
  const Residue p = 3;
  auto cx = make_complex(fam(Family::B, 0, {2}), complete_graph(3));
  auto t = SteenrodTable::zero(cx, p);
  const std::size_t y1 = cx->generator_index("y_1");
  auto d0 = decompose_pp(t, 0);
  CHECK(d0.leading.is_zero());
  CHECK(d0.middle.is_zero());
  CHECK(d0.mixed.empty());

  auto x1 = gen(cx, p, "x1^(1)"), x2 = gen(cx, p, "x2^(1)");
  auto Y1 = gen(cx, p, "y_1"), Y2 = gen(cx, p, "y_2"), Y3 = gen(cx, p, "y_3");
  t.set(y1, 3, Y1 * Y1 * x1);
  auto d1 = decompose_pp(t, 0);
  CHECK(d1.leading == FpVector(p, {1, 0}));
  CHECK(d1.middle.is_zero());
  CHECK(d1.mixed.empty());

  auto value = Y1 * x1 * x1 * x1 + Y2 * Y3 * x2 + Y1 * Y1 * x2.scaled(2);
  t.set(y1, 3, value);
  auto d2 = decompose_pp(t, 0);
  CHECK(d2.leading == FpVector(p, {0, 2}));
  CHECK(d2.middle == Y1 * x1 * x1 * x1);
  REQUIRE(d2.mixed.size() == 1);
  CHECK(d2.mixed.at({1, 2}) == x2);
  CHECK(d2.recombine(*cx, 0) == value);

  t.set(y1, 3, x1 * x1 * x1 * x1 * x1);
  CHECK_THROWS_AS(decompose_pp(t, 0), ContractError);
}

TEST_CASE("coloring_from_action cokernels") {
  const Residue p = 3;
  auto set_g = [&](SteenrodTable& t, const std::shared_ptr<const JoinComplex>& cx, Vertex v, std::size_t xi) {
    auto y = AlgebraElement::generator(cx, p, cx->graph_generator(v));
    t.set(cx->graph_generator(v), 3, y * y * AlgebraElement::generator(cx, p, xi));
  };
  auto k3 = make_complex(fam(Family::B, 0, {3}), complete_graph(3));
  auto t = SteenrodTable::zero(k3, p);
  for (Vertex v = 0; v < 3; ++v) set_g(t, k3, v, v);
  auto rep = coloring_from_action(t);
  CHECK(rep.all_nonzero());
  CHECK(verify_span_coloring(complete_graph(3), rep.as_span_coloring(p)));

  auto c4 = make_complex(fam(Family::B, 0, {1}), cycle_graph(4));
  auto t4 = SteenrodTable::zero(c4, p);
  for (Vertex v = 0; v < 4; ++v) set_g(t4, c4, v, 0);
  CHECK(coloring_from_action(t4).zero_cokernel.size() == 4);

  // C5 with g(y_i) = e_{i mod 2 + 1}: compare with direct span checks.
  auto c5 = make_complex(fam(Family::B, 0, {2}), cycle_graph(5));
  auto t5 = SteenrodTable::zero(c5, p);
  for (Vertex v = 0; v < 5; ++v) set_g(t5, c5, v, (v + 1) % 2);
  auto r5 = coloring_from_action(t5);
  const Graph cycle = cycle_graph(5);
  for (Vertex v = 0; v < 5; ++v) {
    std::vector<oracle::Vec> nb;
    for (auto u : cycle.neighbors(v)) nb.push_back(r5.g.assignment[u].coords());
    const bool in = oracle::in_span(nb, r5.g.assignment[v].coords(), p);
    CHECK(in == (std::find(r5.zero_cokernel.begin(), r5.zero_cokernel.end(), v) != r5.zero_cokernel.end()));
  }
  CHECK_FALSE(r5.all_nonzero());

  auto path = make_complex(fam(Family::B, 0, {1}), path_graph(3));
  CHECK_THROWS_AS(coloring_from_action(SteenrodTable::zero(path, p)), ContractError);
}

TEST_CASE("necessary condition") {
  auto k3 = necessary_condition(fam(Family::B, 0, {3}), complete_graph(3));
  CHECK(k3.status == NecessaryStatus::Pass);
  CHECK(k3.span_chromatic <= 3);
  auto edge = necessary_condition(fam(Family::B, 0, {1}), path_graph(2));
  CHECK(edge.status == NecessaryStatus::Fail);
  CHECK(edge.span_chromatic == 2);
  CHECK(edge.to_text(path_graph(2)).find("s_3chi=2 > bound=1") != std::string::npos);
  auto empty = necessary_condition(fam(Family::Ap, 5, {1, 0, 0, 0}), edgeless_graph(3));
  CHECK(empty.status == NecessaryStatus::Pass);
  CHECK(necessary_condition(fam(Family::A, 0, {1, 1, 1}), complete_graph(3)).status == NecessaryStatus::NotApplicable);
  auto a2 = necessary_parameters(fam(Family::A, 0, {2, 1}));
  REQUIRE(a2);
  CHECK(a2->first == 3);
  CHECK(a2->second == 2);
}
