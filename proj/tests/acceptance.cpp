// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. Pass criterion numbers as arguments to run a
// subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "srchroma/realizability.hpp"
#include "srchroma/span_coloring.hpp"
#include "srchroma/steenrod.hpp"
#include "support/algebra_util.hpp"
#include "support/oracles.hpp"

using namespace srchroma;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// Every graph on at most max_n vertices, one per isomorphism class.
std::vector<Graph> all_graphs_up_to_iso(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const auto canon = oracle::canonical_mask(n, mask);
      if (seen.insert(canon).second) out.push_back(oracle::graph_from_mask(n, canon));
    }
  }
  return out;
}

// 1. span chromatic numbers against exhaustive projective assignment.
Outcome criterion1() {
  const auto t0 = Clock::now();
  const auto graphs = oracle::connected_graphs_up_to_iso(5);
  std::size_t checked = 0, mismatches = 0;
  for (const auto& g : graphs)
    for (Residue p : {2u, 3u}) {
      const auto got = span_chromatic_number(g, p);
      const auto want = oracle::span_chromatic(g, p);
      ++checked;
      if (got.span_chromatic_number != want || !verify_span_coloring(g, got.witness)) ++mismatches;
    }
  const double t = seconds_since(t0);
  return {mismatches == 0 && t < 300.0, std::to_string(graphs.size()) + " connected graphs, " + std::to_string(checked) +
                                            " comparisons, " + std::to_string(mismatches) + " mismatches, " +
                                            fmt_seconds(t) + " (limit 300 s)"};
}

// 2. s_p chi <= chi.
Outcome criterion2() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::size_t violations = 0, checks = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 8, density(rng));
    const auto chi = chromatic_number(g).chromatic_number;
    if (chi != oracle::chromatic(g)) ++violations;
    for (Residue p : {2u, 3u, 5u}) {
      ++checks;
      if (span_chromatic_number(g, p).span_chromatic_number > chi) ++violations;
    }
  }
  return {violations == 0, "200 graphs, " + std::to_string(checks) + " checks, " + std::to_string(violations) +
                               " violations"};
}

Outcome exhaust(const std::vector<std::pair<std::vector<std::pair<std::string, unsigned>>, std::string>>& algebras,
                Residue p, double limit) {
  SearchOptions opt;
  opt.relations = RelationSet{true, false, false};
  bool ok = true;
  std::string detail;
  for (const auto& [gens, name] : algebras) {
    const auto t0 = Clock::now();
    const auto r = search_action(free_polynomial(gens), p, opt);
    const double t = seconds_since(t0);
    const bool good = !r.found && t < limit;
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + name + ": " + (r.found ? "found" : "exhausted") + " (" + r.scope() +
              "), " + std::to_string(r.nodes) + " nodes, " + fmt_seconds(t);
  }
  return {ok, detail};
}

// 3. proof algebras at p = 3.
Outcome criterion3() {
  return exhaust({{{{"y", 8}}, "Z/3[y]"}, {{{"x", 4}, {"y1", 8}, {"y2", 8}}, "Z/3[x,y1,y2]"}}, 3, 60.0);
}

// 4. proof algebras at p = 5.
Outcome criterion4() {
  const auto t0 = Clock::now();
  auto o = exhaust({{{{"x1", 8}, {"y", 12}}, "A"}, {{{"x1", 4}, {"x2", 8}, {"y1", 12}, {"y2", 12}}, "B"}}, 5, 600.0);
  const double t = seconds_since(t0);
  o.pass = o.pass && t < 600.0;
  o.detail += "; total " + fmt_seconds(t) + " (limit 600 s)";
  return o;
}

// 5. coloring partitions verify under both schemes.
Outcome criterion5() {
  const auto graphs = all_graphs_up_to_iso(6);
  std::size_t checks = 0, failures = 0;
  for (const auto& g : graphs) {
    const auto chi = chromatic_number(g);
    const auto n = static_cast<unsigned>(chi.chromatic_number);
    for (Residue p : {3u, 5u}) {
      const auto a = build_complex({Family::Ap, p, std::vector<unsigned>(p - 1, n)}, g);
      const auto b = build_complex({Family::Bp, p, std::vector<unsigned>((p - 1) / 2, n)}, g);
      checks += 2;
      if (!verify_partition(a, partition_from_coloring(a, chi.witness), Scheme::A, p)) ++failures;
      if (!verify_partition(b, partition_from_coloring(b, chi.witness), Scheme::B, p)) ++failures;
    }
  }
  return {failures == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(checks) + " partitions, " +
                             std::to_string(failures) + " failures"};
}

// 6. decomposition search against the closed-form inequality systems.
Outcome criterion6() {
  std::size_t len2 = 0, len4 = 0, bad2 = 0, bad4 = 0;
  for (unsigned s1 = 0; s1 <= 8; ++s1)
    for (unsigned s2 = 0; s2 <= 8; ++s2)
      for (unsigned c = 0; c <= 8; ++c) {
        ++len2;
        if (decompose_s({s1, s2}, c).has_value() != (s1 >= s2 && s1 >= c)) ++bad2;
      }
  for (unsigned s1 = 0; s1 <= 6; ++s1)
    for (unsigned s2 = 0; s2 <= 6; ++s2)
      for (unsigned s3 = 0; s3 <= 6; ++s3)
        for (unsigned s4 = 0; s4 <= 6; ++s4)
          for (unsigned c = 0; c <= 6; ++c) {
            bool expect = s1 >= s3 && s3 >= c && s2 >= s4 && s1 >= s2 && s3 >= s4;
            if (c > s4) expect = expect && s1 - s2 >= c - s4;
            ++len4;
            const auto d = decompose_s({s1, s2, s3, s4}, c);
            if (d.has_value() != expect || (d && !is_valid_decomposition({s1, s2, s3, s4}, *d, c))) ++bad4;
          }
  return {bad2 == 0 && bad4 == 0, "length 2: " + std::to_string(len2) + " cases, " + std::to_string(bad2) +
                                      " discrepancies; length 4: " + std::to_string(len4) + " cases, " +
                                      std::to_string(bad4) + " discrepancies"};
}

// 7. the two non-examples.
Outcome criterion7() {
  const Graph k3 = complete_graph(3);
  bool ok = true;
  std::string detail;
  const std::vector<std::pair<std::vector<unsigned>, DegreeMultiset>> cases{{{1, 1}, {4, 6, 8, 8}},
                                                                            {{2, 3}, {4, 4, 6, 6, 6, 8, 8}}};
  for (const auto& [s, want] : cases) {
    const FamilySpec spec{Family::A, 0, s};
    const auto v = check_realizable(spec, k3);
    const bool good = v.status == Verdict::CertifiedNotRealizable && v.face_multiset && *v.face_multiset == want &&
                      !multiset_decomposable(*v.face_multiset, DegreeMultisetFamily::anderson_grodal());
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + spec.describe() + " with K3: " + verdict_name(v.status) + " via " +
              (v.face_multiset ? format_multiset(*v.face_multiset) : std::string("no multiset"));
  }
  return {ok, detail};
}

// 8. ring axioms, face reduction, Cartan multiplicativity.
Outcome criterion8() {
  std::mt19937_64 rng(88);
  std::size_t ring_fail = 0;
  auto cx = make_complex({Family::A, 0, {2, 1}}, parse_graph("v a\nv b\nv c\nv d\ne a b\ne b c\ne c d\ne a c"));
  for (int i = 0; i < 1000; ++i) {
    const Residue p = i % 2 ? 5 : 3;
    auto deg = [&] { return 2 * static_cast<unsigned>(1 + rng() % 10); };
    auto a = testutil::random_homogeneous(rng, cx, p, deg());
    auto b = testutil::random_homogeneous(rng, cx, p, deg());
    auto c = testutil::random_homogeneous(rng, cx, p, deg());
    const auto ab = a * b;
    bool good = (ab * c == a * (b * c)) && ab == b * a;
    if (!ab.is_zero()) good = good && ab.is_homogeneous() && *ab.degree() == *a.degree() + *b.degree();
    if (!good) ++ring_fail;
  }

  std::size_t complexes = 0, monomials = 0, face_fail = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const auto k = build_complex({Family::A, 0, {1}}, oracle::graph_from_mask(n, mask));
      ++complexes;
      const std::size_t gens = k.generator_count();
      std::vector<std::uint16_t> e(gens, 0);
      while (true) {
        ++monomials;
        if (reduce_monomial(k, Monomial::from_exponents(k, e)).has_value() != testutil::face_oracle(k, e)) ++face_fail;
        std::size_t i = 0;
        while (i < gens && ++e[i] == 3) e[i++] = 0;
        if (i == gens) break;
      }
    }
  }

  std::size_t cartan_fail = 0;
  const Residue p = 3;
  const unsigned bound = default_degree_bound(p);
  auto free = free_polynomial({{"a", 4}, {"b", 6}, {"c", 8}});
  for (int table = 0; table < 50; ++table) {
    SteenrodTable t(free, p);
    for (std::size_t g = 0; g < free->generator_count(); ++g)
      for (unsigned k = 1; k < t.top(g); ++k)
        t.set(g, k, testutil::random_homogeneous(rng, free, p, t.target_degree(g, k)));
    for (int pair = 0; pair < 10; ++pair) {
      auto a = testutil::random_homogeneous(rng, free, p, 2 * static_cast<unsigned>(2 + rng() % 6));
      auto b = testutil::random_homogeneous(rng, free, p, 2 * static_cast<unsigned>(2 + rng() % 6));
      const auto lhs = total_operation(t, a * b, bound);
      const auto rhs = total_operation(t, a, bound) * total_operation(t, b, bound);
      AlgebraElement trunc(free, p);
      for (const auto& [m, c] : rhs.terms())
        if (m.degree() <= bound) trunc.add_term(m, c);
      if (!(lhs == trunc)) ++cartan_fail;
    }
  }
  return {ring_fail == 0 && face_fail == 0 && cartan_fail == 0,
          "1000 products: " + std::to_string(ring_fail) + " failures; " + std::to_string(complexes) + " complexes, " +
              std::to_string(monomials) + " monomials: " + std::to_string(face_fail) +
              " failures; 500 Cartan pairs to degree " + std::to_string(bound) + ": " + std::to_string(cartan_fail) +
              " failures"};
}

// 9. Found tables on B instances give span colorings.
Outcome criterion9() {
  struct Instance {
    FamilySpec spec;
    Graph g;
    std::string name;
  };
  const std::vector<Instance> instances{
      {{Family::B, 3, {1}}, cycle_graph(4), "B(1,C4)"},      {{Family::B, 3, {2}}, cycle_graph(4), "B(2,C4)"},
      {{Family::B, 3, {2}}, complete_graph(3), "B(2,K3)"},   {{Family::B, 3, {3}}, complete_graph(3), "B(3,K3)"},
      {{Family::B, 3, {2}}, cycle_graph(5), "B(2,C5)"},      {{Family::B, 3, {3}}, cycle_graph(5), "B(3,C5)"},
      {{Family::B, 3, {4}}, complete_graph(4), "B(4,K4)"},   {{Family::Bp, 5, {1, 0}}, cycle_graph(4), "B_5((1,0),C4)"},
      {{Family::Bp, 5, {2, 0}}, cycle_graph(4), "B_5((2,0),C4)"},
  };
  std::size_t found = 0, zero = 0;
  std::string detail;
  for (const auto& inst : instances) {
    const auto cx = make_complex(inst.spec, inst.g);
    const auto r = search_action(cx, cx->spec().p);
    std::string line = inst.name + " " + (r.found ? "found" : "exhausted");
    if (r.found) {
      ++found;
      const auto rep = coloring_from_action(*r.table);
      const bool span_ok = verify_span_coloring(inst.g, rep.as_span_coloring(cx->spec().p));
      if (!rep.all_nonzero() || !span_ok) ++zero;
      line += rep.all_nonzero() ? " nonzero" : " ZERO-COKERNEL";
    }
    detail += (detail.empty() ? "" : ", ") + line;
  }
  return {found > 0 && zero == 0,
          std::to_string(found) + " tables, " + std::to_string(zero) + " with a zero cokernel: " + detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"span chromatic oracle equivalence", criterion1},
      {"sandwich s_p chi <= chi", criterion2},
      {"proof algebras exhausted at p = 3", criterion3},
      {"proof algebras exhausted at p = 5", criterion4},
      {"coloring partitions verify", criterion5},
      {"decomposition equivalences", criterion6},
      {"non-example certification", criterion7},
      {"algebra kernel properties", criterion8},
      {"Found tables give nonzero cokernels", criterion9},
  };
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.detail << "] (" << fmt_seconds(seconds_since(t0)) << ")" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures;
}
