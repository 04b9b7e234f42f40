#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "levelnum/errors.hpp"
#include "levelnum/leveling.hpp"

namespace levelnum {
namespace {

using testing::family;

Spine ring(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    seq[static_cast<std::size_t>(i)] = i;
  }
  return Spine(seq);
}

std::size_t index_of(const ConflictGraph& cg, std::vector<int> attachments) {
  for (std::size_t i = 0; i < cg.fragments.size(); ++i) {
    if (cg.fragments[i].attachments == attachments) {
      return i;
    }
  }
  throw std::logic_error("no such fragment");
}

void expect_verified(const Graph& g, const LevelResult& r) {
  if (r.value.is_infinite()) {
    EXPECT_FALSE(r.certificate.has_value());
    return;
  }
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->k, r.value.get());
  const CertificateCheck check = verify_certificate(g, *r.certificate);
  EXPECT_TRUE(check.ok) << check.reason << "\n" << render_edge_list(g);
}

TEST(LevelValueType, InfinityOrdersLast) {
  EXPECT_LT(LevelValue(1000), LevelValue::infinite());
  EXPECT_EQ(to_string(LevelValue::infinite()), "inf");
  EXPECT_EQ(to_string(LevelValue(3)), "3");
  EXPECT_TRUE(LevelValue::infinite().is_infinite());
}

TEST(SpineLevel, Examples) {
  EXPECT_EQ(spine_level_number(family("K4"), ring(4)).value, LevelValue(2));
  EXPECT_EQ(spine_level_number(family("C6"), ring(6)).value, LevelValue(0));
  EXPECT_EQ(spine_level_number(family("K5"), ring(5)).value, LevelValue(3));
  EXPECT_THROW(spine_level_number(family("K3,3"), ring(6)), InvalidInput);
}

TEST(SpineLevel, CrossedTreeIsNotAdmissible) {
  const Graph g = testing::with_edges(Graph(6, family("C4").edges()),
                                      {Edge(4, 0), Edge(4, 2), Edge(5, 1), Edge(5, 3), Edge(4, 5)});
  EXPECT_TRUE(spine_level_number(g, ring(4)).value.is_infinite());
  // The literal test admits the fragment, but no certificate can place it.
  SolveOptions literal;
  literal.disk_test = DiskTest::fragment_only;
  EXPECT_TRUE(spine_level_number(g, ring(4), literal).value.is_infinite());
}

TEST(HamiltonianLevel, Examples) {
  EXPECT_EQ(hamiltonian_level_number(family("K4")).value, LevelValue(2));
  EXPECT_EQ(hamiltonian_level_number(family("K3,3")).value, LevelValue(3));
  const LevelResult m16 = hamiltonian_level_number(family("M16"));
  EXPECT_EQ(m16.value, LevelValue(3));
  EXPECT_EQ(m16.exactness, Exactness::exact);
  expect_verified(family("M16"), m16);
  EXPECT_TRUE(hamiltonian_level_number(family("K4,3")).value.is_infinite());
  EXPECT_THROW(hamiltonian_level_number(Graph(4, {Edge(0, 1), Edge(2, 3)})), InvalidInput);
}

TEST(Level, Examples) {
  const LevelResult k4 = level_number(family("K4"));
  EXPECT_EQ(k4.value, LevelValue(1));
  expect_verified(family("K4"), k4);
  const LevelResult glued = level_number(testing::two_k33_joined());
  EXPECT_TRUE(glued.value.is_infinite());
  EXPECT_EQ(glued.exactness, Exactness::exact);
  EXPECT_EQ(level_number(family("K5,2")).value, LevelValue(1));
  EXPECT_TRUE(level_number(family("P4")).value.is_infinite());
}

TEST(Level, CapMakesAnUpperBound) {
  SolveOptions capped;
  capped.cycle_cap = 5;
  const LevelResult r = level_number(family("K6"), capped);
  EXPECT_EQ(r.exactness, Exactness::upper_bound);
  EXPECT_GE(r.value, LevelValue(3));
  expect_verified(family("K6"), r);
  // Reaching the floor of one level settles the search even when capped.
  capped.cycle_cap = 1;
  EXPECT_EQ(level_number(family("K4"), capped).exactness, Exactness::exact);
}

TEST(Level, ResultDoesNotDependOnWorkers) {
  for (const char* name : {"K6", "K3,3", "M8", "K4,3"}) {
    SolveOptions one;
    SolveOptions many;
    many.workers = 4;
    const Graph g = family(name);
    const LevelResult a = level_number(g, one);
    const LevelResult b = level_number(g, many);
    EXPECT_EQ(a.value, b.value) << name;
    EXPECT_EQ(a.certificate, b.certificate) << name;
    const LevelResult c = hamiltonian_level_number(g, one);
    const LevelResult d = hamiltonian_level_number(g, many);
    EXPECT_EQ(c.value, d.value) << name;
    EXPECT_EQ(c.certificate, d.certificate) << name;
  }
}

TEST(Decide, HamiltonianGraphsAreLeveled) {
  for (const Graph& g : testing::connected_graphs(7)) {
    if (!all_hamiltonian_cycles(g).empty()) {
      const LeveledDecision d = has_leveled_embedding(g);
      ASSERT_TRUE(d.answer);
      ASSERT_TRUE(d.witness && is_cycle_of(g, *d.witness));
    }
  }
}

TEST(Decide, TreesAndGluedK33AreNot) {
  EXPECT_FALSE(has_leveled_embedding(family("P4")).answer);
  EXPECT_FALSE(has_leveled_embedding(Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)})).answer);
  const LeveledDecision glued = has_leveled_embedding(testing::two_k33_joined());
  EXPECT_FALSE(glued.answer);
  EXPECT_FALSE(glued.witness.has_value());
}

TEST(Decide, AgreesWithLevelNumberOnCorpus) {
  for (const Graph& g : testing::connected_graphs(6)) {
    ASSERT_EQ(has_leveled_embedding(g).answer, level_number(g).value.is_finite()) << render_edge_list(g);
  }
}

TEST(Relayer, ConflictingDiagonalsStay) {
  const ConflictGraph cg = conflict_graph(family("K4"), ring(4));
  const LevelCertificate out = relayer(LevelCertificate{ring(4), {1, 2}, 2}, cg);
  EXPECT_EQ(out.levels, (std::vector<int>{1, 2}));
  EXPECT_EQ(out.k, 2);
}

TEST(Relayer, IndependentChordsDropToLevelOne) {
  const Spine s = ring(5);
  const ConflictGraph cg = conflict_graph(testing::with_edges(family("C5"), {Edge(0, 2), Edge(2, 4)}), s);
  const LevelCertificate out = relayer(LevelCertificate{s, {1, 2}, 2}, cg);
  EXPECT_EQ(out.levels, (std::vector<int>{1, 1}));
  EXPECT_EQ(out.k, 1);
}

TEST(Relayer, FourFragmentStack) {
  // f1 = (0,2) and f2 = (4,6) are independent, f3 = (1,3) crosses f1 and
  // f4 = (2,4) crosses only f3.
  const Spine s = ring(8);
  const ConflictGraph cg =
      conflict_graph(testing::with_edges(family("C8"), {Edge(0, 2), Edge(4, 6), Edge(1, 3), Edge(2, 4)}), s);
  const std::size_t f1 = index_of(cg, {0, 2});
  const std::size_t f2 = index_of(cg, {4, 6});
  const std::size_t f3 = index_of(cg, {1, 3});
  const std::size_t f4 = index_of(cg, {2, 4});
  LevelCertificate stacked{s, std::vector<int>(4), 4};
  stacked.levels[f1] = 1;
  stacked.levels[f2] = 2;
  stacked.levels[f3] = 3;
  stacked.levels[f4] = 4;
  const LevelCertificate out = relayer(stacked, cg);
  EXPECT_EQ(out.levels[f1], 1);
  EXPECT_EQ(out.levels[f2], 1);
  EXPECT_EQ(out.levels[f3], 2);
  EXPECT_EQ(out.levels[f4], 3);
  EXPECT_EQ(out.k, 3);
}

TEST(Relayer, RejectsImproperColoring) {
  const ConflictGraph cg = conflict_graph(family("K4"), ring(4));
  EXPECT_THROW(relayer(LevelCertificate{ring(4), {1, 1}, 1}, cg), InvalidInput);
  EXPECT_THROW(relayer(LevelCertificate{ring(4), {1}, 1}, cg), InvalidInput);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_min_levels(family("K4"), ring(4)), LevelValue(2));
  EXPECT_EQ(brute_force_min_levels(family("C5"), ring(5)), LevelValue(0));
  const Graph k33 = family("K3,3");
  EXPECT_EQ(brute_force_min_levels(k33, all_hamiltonian_cycles(k33).front()), LevelValue(3));
  EXPECT_THROW(brute_force_min_levels(family("K7"), ring(7), 12), SizeLimitExceeded);
}

TEST(BruteForce, MatchesSolverOnEveryCycleOfSmallGraphs) {
  for (const Graph& g : testing::connected_graphs(7)) {
    for (const Spine& s : all_cycles(g).spines) {
      if (fragments(g, s).size() > 10) {
        continue;  // only dense 7-vertex graphs; the acceptance suite covers <= 6 vertices in full
      }
      ASSERT_EQ(spine_level_number(g, s).value, brute_force_min_levels(g, s)) << render_edge_list(g);
    }
  }
}

TEST(Certificates, EverySolverResultVerifiesOnCorpus) {
  for (const Graph& g : testing::connected_graphs(7)) {
    expect_verified(g, level_number(g));
    expect_verified(g, hamiltonian_level_number(g));
  }
}

TEST(Certificates, VerifierRejectsBrokenCertificates) {
  const Graph k4 = family("K4");
  const Spine s = ring(4);
  EXPECT_TRUE(verify_certificate(k4, LevelCertificate{s, {1, 2}, 2}).ok);
  EXPECT_FALSE(verify_certificate(k4, LevelCertificate{s, {1, 1}, 1}).ok);       // conflict inside a level
  EXPECT_FALSE(verify_certificate(k4, LevelCertificate{s, {1, 3}, 3}).ok);       // level 2 empty
  EXPECT_FALSE(verify_certificate(k4, LevelCertificate{s, {1, 2}, 3}).ok);       // wrong k
  EXPECT_FALSE(verify_certificate(k4, LevelCertificate{s, {1}, 1}).ok);          // missing fragment
  EXPECT_FALSE(verify_certificate(k4, LevelCertificate{s, {0, 1}, 1}).ok);       // level 0
  EXPECT_FALSE(verify_certificate(family("C4"), LevelCertificate{Spine({0, 2, 1, 3}), {}, 0}).ok);

  // Two independent chords may not sit on separate levels: the upper one
  // crosses over nothing.
  const Spine five = ring(5);
  const Graph fan = testing::with_edges(family("C5"), {Edge(0, 2), Edge(2, 4)});
  EXPECT_TRUE(verify_certificate(fan, LevelCertificate{five, {1, 1}, 1}).ok);
  EXPECT_FALSE(verify_certificate(fan, LevelCertificate{five, {1, 2}, 2}).ok);

  // A fragment that fits no disk.
  const Graph crossed = testing::with_edges(Graph(6, family("C4").edges()),
                                            {Edge(4, 0), Edge(4, 2), Edge(5, 1), Edge(5, 3), Edge(4, 5)});
  EXPECT_FALSE(verify_certificate(crossed, LevelCertificate{s, {1}, 1}).ok);
}

TEST(Properties, HamiltonianLevelTracksPlanarityOnCorpus) {
  for (const Graph& g : testing::connected_graphs(6)) {
    const LevelResult h = hamiltonian_level_number(g);
    if (h.value.is_infinite()) {
      continue;
    }
    const LevelResult l = level_number(g);
    ASSERT_LE(l.value, h.value);
    ASSERT_EQ(h.value <= LevelValue(2), is_planar(g)) << render_edge_list(g);
    ASSERT_EQ(h.value <= LevelValue(1), is_outerplanar(g)) << render_edge_list(g);
  }
}

TEST(Properties, OneLevelExactlyForPlanarGraphsWithFragments) {
  for (const Graph& g : testing::connected_graphs(7)) {
    const LevelResult l = level_number(g);
    if (l.value.is_infinite() || l.value == LevelValue(0)) {
      continue;
    }
    ASSERT_EQ(l.value == LevelValue(1), is_planar(g)) << render_edge_list(g);
  }
}

TEST(Properties, CompleteGraphRecursion) {
  for (int n = 5; n <= 8; ++n) {
    const LevelResult l = level_number(family("K" + std::to_string(n)));
    const LevelResult h = hamiltonian_level_number(family("K" + std::to_string(n - 1)));
    EXPECT_LE(l.value.get(), h.value.get() + 1) << n;
  }
}

}  // namespace
}  // namespace levelnum
