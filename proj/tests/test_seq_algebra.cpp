#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "peanofill/seq_algebra.hpp"

using namespace peanofill;

namespace {

Region box(double x0, double y0, double x1, double y1) {
  return Region(ConvexRegion::rectangle(x0, y0, x1, y1));
}

// Regular soul sequence from a nested chain c1 ⊆ c2 ⊆ ... (doubled cells with
// forward/backward difference disturbances).
SoulSequence doubled_population(const std::vector<ConvexRegion>& chain) {
  SoulSequence out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ConvexRegion prev = (i == 0) ? ConvexRegion() : intersect(chain[i], chain[i - 1]);
    ConvexRegion next = (i + 1 == chain.size()) ? chain[i] : intersect(chain[i], chain[i + 1]);
    Soul odd = prev.empty() ? Soul::whole(chain[i]) : Soul::with_remainder(chain[i], prev);
    Soul even = Soul::with_remainder(chain[i], next);
    out.souls.push_back(odd);
    out.souls.push_back(even);
  }
  return out;
}

std::vector<ConvexRegion> band_chain(int n) {
  std::vector<ConvexRegion> chain;
  for (int i = 1; i <= n; ++i) {
    chain.push_back(ConvexRegion::rectangle(0, 0, i * 1.0 / n, 1.0));
  }
  return chain;
}

}  // namespace

TEST_CASE("delta forward and backward") {
  Region A = box(0, 0, 1, 1);
  Region B = box(0, 0, 2, 1);
  SetSequence seq({A, A, B});
  SetSequence fwd = delta(seq, DeltaDirection::Forward);
  CHECK(fwd.at1(1).empty());
  CHECK(fwd.at1(2).empty());
  CHECK(!fwd.at1(3).empty());
  CHECK(fwd.at1(3).area() == doctest::Approx(1.0));
  CHECK(fwd.at1(3).contains({1.5, 0.5}));
  CHECK(!fwd.at1(3).contains({0.5, 0.5}, -1e-9));

  SetSequence one({A});
  CHECK(delta(one, DeltaDirection::Forward).at1(1).empty());

  SetSequence constant({B, B, B});
  SetSequence bwd = delta(constant, DeltaDirection::Backward);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(bwd.at1(k).empty());
}

TEST_CASE("restrict masks") {
  Region A = box(0, 0, 1, 1), B = box(1, 0, 2, 1), C = box(2, 0, 3, 1), D = box(3, 0, 4, 1);
  SetSequence s({A, B, C, D});
  SetSequence odd = restrict(s, IndexMask::odd());
  CHECK(!odd.at1(1).empty());
  CHECK(odd.at1(2).empty());
  CHECK(!odd.at1(3).empty());
  CHECK(odd.at1(4).empty());

  SetSequence none = restrict(SetSequence({A, B}), IndexMask::explicit_set({}));
  CHECK(none.at1(1).empty());
  CHECK(none.at1(2).empty());

  SetSequence mid = restrict(SetSequence({A, B, C}), IndexMask::explicit_set({2}));
  CHECK(mid.at1(1).empty());
  CHECK(!mid.at1(2).empty());
  CHECK(mid.at1(3).empty());

  CHECK_THROWS_AS(restrict(s, IndexMask::explicit_set({5})), std::out_of_range);
}

TEST_CASE("ends") {
  Region A = box(0, 0, 1, 1), B = box(1, 0, 2, 1), C = box(2, 0, 3, 1);
  auto [f1, l1] = ends(SetSequence({A, B, C}));
  CHECK(fingerprint(f1) == fingerprint(A));
  CHECK(fingerprint(l1) == fingerprint(C));
  auto [f2, l2] = ends(SetSequence({A}));
  CHECK(fingerprint(f2) == fingerprint(l2));
  auto [f3, l3] = ends(SetSequence({Region(), B}));
  CHECK(f3.empty());
  CHECK(!l3.empty());
  CHECK_THROWS_AS(ends(SetSequence()), std::invalid_argument);
}

TEST_CASE("precedes alternatives") {
  std::size_t n = 2;
  SetSequence empty_q = SetSequence::empties(n);
  SetSequence anything({box(0, 0, 1, 1), box(5, 5, 6, 6)});
  SetSequence bases({box(-1, -1, 7, 7), box(-1, -1, 7, 7)});
  CHECK(precedes(empty_q, anything, bases));  // vacuous

  SetSequence q({box(0, 0, 1, 1), Region()});
  SetSequence r({Region(), box(5, 0, 6, 1)});
  CHECK(precedes(q, r, bases));  // separated

  // Overlapping but unequal, no covering entries in between: fails.
  SetSequence q2({box(0, 0, 1, 1), Region()});
  SetSequence r2({Region(), box(0.5, 0, 1.5, 1)});
  SetSequence s2 = SetSequence::empties(2);
  PrecedesResult pr = precedes_check(q2, r2, s2);
  CHECK(!pr.holds);
  CHECK(pr.k == 1);
  CHECK(pr.l == 2);

  // Covering alternative: q(1) inside s(2).
  SetSequence q3({box(0, 0, 1, 1), Region(), Region()});
  SetSequence r3({Region(), Region(), box(0.5, 0, 1.5, 1)});
  SetSequence s3({Region(), box(-0.5, -0.5, 2, 2), Region()});
  CHECK(precedes(q3, r3, s3));

  CHECK_THROWS_AS(precedes(SetSequence::empties(2), SetSequence::empties(3),
                           SetSequence::empties(2)),
                  std::invalid_argument);
}

TEST_CASE("anti_order expands blocks with alternating reversal") {
  auto mk = [](double a, double b) { return SetSequence({box(a, 0, a + 0.5, 1), box(b, 0, b + 0.5, 1)}); };
  SetSequence s1 = mk(1, 2), s2 = mk(3, 4), s3 = mk(5, 6);
  SetSequence out = anti_order(std::vector<SetSequence>{s1, s2, s3});
  REQUIRE(out.length() == 6);
  CHECK(fingerprint(out.at1(1)) == fingerprint(s1.at1(1)));
  CHECK(fingerprint(out.at1(2)) == fingerprint(s1.at1(2)));
  CHECK(fingerprint(out.at1(3)) == fingerprint(s2.at1(2)));  // reversed block
  CHECK(fingerprint(out.at1(4)) == fingerprint(s2.at1(1)));
  CHECK(fingerprint(out.at1(5)) == fingerprint(s3.at1(1)));
  CHECK(fingerprint(out.at1(6)) == fingerprint(s3.at1(2)));

  SetSequence single = anti_order(std::vector<SetSequence>{s1});
  CHECK(fingerprint(single.at1(1)) == fingerprint(s1.at1(1)));

  SetSequence len1a({box(0, 0, 1, 1)}), len1b({box(2, 0, 3, 1)});
  SetSequence plain = anti_order(std::vector<SetSequence>{len1a, len1b});
  CHECK(fingerprint(plain.at1(2)) == fingerprint(len1b.at1(1)));
}

TEST_CASE("otimes intersects pointwise") {
  ConvexRegion big = ConvexRegion::rectangle(-10, -10, 10, 10);
  SetSequence s({box(0, 0, 1, 1), box(2, 0, 3, 1)});
  SetSequence all = otimes(big, s);
  CHECK(fingerprint(all.at1(1)) == fingerprint(s.at1(1)));
  SetSequence none = otimes(ConvexRegion(), s);
  CHECK(none.at1(1).empty());
  CHECK(none.at1(2).empty());
  ConvexRegion half = ConvexRegion::rectangle(-10, -10, 0.5, 10);
  SetSequence clipped = otimes(half, SetSequence({box(0, 0, 1, 1), box(0, 0, 1, 1)}));
  CHECK(clipped.at1(1).area() == doctest::Approx(0.5));
  CHECK(clipped.at1(2).area() == doctest::Approx(0.5));
}

TEST_CASE("oplus merges unions") {
  SetSequence r({box(0, 0, 1, 1), Region()});
  SetSequence zero = SetSequence::empties(2);
  SetSequence same = oplus(r, zero);
  CHECK(fingerprint(same.at1(1)) == fingerprint(r.at1(1)));

  // Disjoint-support interleave.
  SetSequence a({box(0, 0, 1, 1), Region()});
  SetSequence b({Region(), box(2, 0, 3, 1)});
  SetSequence inter = oplus(a, b);
  CHECK(!inter.at1(1).empty());
  CHECK(!inter.at1(2).empty());

  // Overlapping convex union certified by the hull.
  SetSequence c({box(0, 0, 1, 1)});
  SetSequence d({box(0.5, 0, 1.5, 1)});
  std::vector<bool> cert;
  SetSequence merged = oplus(c, d, &cert);
  CHECK(cert[0]);
  CHECK(merged.at1(1).area() == doctest::Approx(1.5).epsilon(1e-6));

  // Far-apart union is not convex: certification fails.
  SetSequence e({box(0, 0, 1, 1)});
  SetSequence f({box(3, 0, 4, 1)});
  oplus(e, f, &cert);
  CHECK(!cert[0]);

  CHECK_THROWS_AS(oplus(SetSequence::empties(1), SetSequence::empties(2)),
                  std::invalid_argument);
}

TEST_CASE("relate kinds") {
  SetSequence r({box(0, 0, 1, 1), Region()});
  SetSequence zero = SetSequence::empties(2);
  CHECK(relate(SeqRelation::Orthogonal, r, zero));
  CHECK(relate(SeqRelation::Equiv, r, r));
  SetSequence rev({Region(), box(0, 0, 1, 1)});
  CHECK(relate(SeqRelation::RevEquiv, r, rev));
  CHECK(relate(SeqRelation::Equiv, r, rev));  // one nonempty entry each
  SetSequence two_a({box(0, 0, 1, 1), box(2, 0, 3, 1)});
  SetSequence two_b({box(2, 0, 3, 1), box(0, 0, 1, 1)});
  CHECK(!relate(SeqRelation::Equiv, two_a, two_b));
  CHECK(relate(SeqRelation::RevEquiv, two_a, two_b));
  CHECK(relate(SeqRelation::Before, r, rev));
  CHECK(!relate(SeqRelation::Before, two_a, two_a));
  SetSequence far_a({box(0, 0, 1, 1), Region()});
  SetSequence far_b({Region(), box(5, 0, 6, 1)});
  CHECK(relate(SeqRelation::Far, far_a, far_b));
  SetSequence near_b({Region(), box(0.5, 0, 1.5, 1)});
  CHECK(!relate(SeqRelation::Far, far_a, near_b));
  // Embeds: padded sequence embeds the compact one.
  SetSequence padded({Region(), box(0, 0, 1, 1), Region(), box(2, 0, 3, 1)});
  SetSequence compact({box(0, 0, 1, 1), box(2, 0, 3, 1)});
  CHECK(relate(SeqRelation::Embeds, padded, compact));
}

TEST_CASE("shift_embed places blocks") {
  SetSequence p({box(0, 0, 1, 1), box(2, 0, 3, 1)});
  SetSequence s1 = shift_embed(p, 1, +1, 2);
  REQUIRE(s1.length() == 4);
  CHECK(fingerprint(s1.at1(1)) == fingerprint(p.at1(1)));
  CHECK(fingerprint(s1.at1(2)) == fingerprint(p.at1(2)));
  CHECK(s1.at1(3).empty());
  SetSequence s2 = shift_embed(p, 1, -1, 2);
  CHECK(fingerprint(s2.at1(1)) == fingerprint(p.at1(2)));
  CHECK(fingerprint(s2.at1(2)) == fingerprint(p.at1(1)));
  SetSequence s3 = shift_embed(p, 2, +1, 2);
  CHECK(s3.at1(1).empty());
  CHECK(fingerprint(s3.at1(3)) == fingerprint(p.at1(1)));
  CHECK_THROWS_AS(shift_embed(p, 3, 1, 2), std::out_of_range);
}

TEST_CASE("corollary 3.2.5.A: equivalence transports to shifted embeddings") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int it = 0; it < 20; ++it) {
    double w = 0.2 + 0.5 * u(rng);
    Region A = box(0, 0, w, 1);
    Region B = box(w + 1, 0, w + 2, 1);
    SetSequence p({A, Region(), B, Region()});
    SetSequence q({Region(), A, Region(), B});
    REQUIRE(relate(SeqRelation::Equiv, p, q));
    int K = 1 + static_cast<int>(u(rng) * 2);
    int L = 1 + static_cast<int>(u(rng) * 2);
    SetSequence pe = shift_embed(p, K, +1, 3);
    SetSequence qe = shift_embed(q, L, -1, 3);
    CHECK(relate(SeqRelation::RevEquiv, pe, qe));
  }
}

TEST_CASE("validate regular and the lemma 3.1.3a decomposition agree") {
  SoulSequence pop = doubled_population(band_chain(4));
  ValidationReport rep = validate_regular(pop, 1e-7);
  CHECK(rep.pass);
  CHECK(regular_decomposition_holds(pop, 1e-7));

  // Odd length fails with the M-odd witness.
  SoulSequence odd = pop;
  odd.souls.pop_back();
  ValidationReport rep2 = validate_regular(odd, 1e-7);
  CHECK(!rep2.pass);
  CHECK(rep2.detail == "M odd");

  // Tampered disturbance breaks both formulations.
  SoulSequence bad = pop;
  bad.souls[2] = Soul::whole(bad.souls[2].base());
  ValidationReport rep3 = validate_regular(bad, 1e-7);
  CHECK(!rep3.pass);
  CHECK(!regular_decomposition_holds(bad, 1e-7));
}

TEST_CASE("regular sequences concatenate when ends match") {
  auto chain1 = band_chain(3);
  SoulSequence a = doubled_population(chain1);
  // Second regular sequence starting at the first's last base.
  std::vector<ConvexRegion> chain2{chain1.back(), ConvexRegion::rectangle(0, 0, 1.2, 1.0)};
  SoulSequence b = doubled_population(chain2);
  SoulSequence joined = concat(a, b);
  CHECK(validate_regular(joined, 1e-7).pass);
}

TEST_CASE("population of souls implies population of sets") {
  SoulSequence pop = doubled_population(band_chain(5));
  CHECK(validate_population_of_souls(pop, 1e-7).pass);
  std::vector<ConvexRegion> bases;
  for (const Soul& s : pop.souls) bases.push_back(s.base());
  ValidationReport rep = validate_population_of_sets(bases, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.measured <= 1e-6);
}

TEST_CASE("lemma 3.1.7 conditions hold on validated populations") {
  SoulSequence pop = doubled_population(band_chain(5));
  REQUIRE(validate_population_of_souls(pop, 1e-7).pass);
  SetSequence bases = pop.bases();
  std::size_t M = bases.length();
  for (std::size_t K = 1; K < M; ++K) {
    // 1) adjacent intersection nonempty
    ConvexRegion lens = intersect(bases.at1(K).outer(), bases.at1(K + 1).outer());
    CHECK(lens.area() > kEpsArea);
    // 2) forward/backward differences separated
    Region fwd = difference_region(bases.at1(K), bases.at1(K + 1));
    Region bwd = difference_region(bases.at1(K + 1), bases.at1(K));
    if (!fwd.empty() && !bwd.empty()) CHECK(separation(fwd, bwd) > kEpsSep);
  }
}

TEST_CASE("population_of_sets rejects a gap") {
  std::vector<ConvexRegion> cells{ConvexRegion::rectangle(0, 0, 1, 1),
                                  ConvexRegion::rectangle(2, 0, 3, 1)};
  ValidationReport rep = validate_population_of_sets(cells, 1e-6);
  CHECK(!rep.pass);
}

TEST_CASE("anti_order commutes with base/disturbance projection") {
  SoulSequence p1 = doubled_population(band_chain(3));
  SoulSequence p2 = doubled_population(band_chain(3));
  std::vector<SoulSequence> blocks{p1, p2};
  SoulSequence joined = anti_order(blocks);
  SetSequence joined_bases = joined.bases();
  SetSequence base_blocks = anti_order(std::vector<SetSequence>{p1.bases(), p2.bases()});
  REQUIRE(joined_bases.length() == base_blocks.length());
  for (std::size_t k = 1; k <= joined_bases.length(); ++k) {
    CHECK(fingerprint(joined_bases.at1(k)) == fingerprint(base_blocks.at1(k)));
  }
}

TEST_CASE("validate dust/anti-dust/filling on hand-built offspring") {
  // Two parents sharing base and remainder: offspring built as nested chains.
  ConvexRegion base = ConvexRegion::rectangle(0, 0, 1, 1);
  ConvexRegion rem = ConvexRegion::rectangle(0, 0, 0.9, 1.0);
  Soul parent = Soul::with_remainder(base, rem);

  std::vector<ConvexRegion> chain{ConvexRegion::rectangle(0, 0, 0.5, 1), rem, base};
  SoulSequence off = doubled_population(chain);
  std::vector<ParentOffspring> pairs{{parent, off}, {parent, off}};
  CHECK(validate_dust(pairs, 1e-6).pass);
  CHECK(validate_anti_dust(pairs, 1e-6).pass);
  CHECK(validate_filling(pairs, 1e-4).pass);

  // Breaking coverage breaks the filling.
  SoulSequence off_bad = off;
  off_bad.souls.pop_back();
  off_bad.souls.pop_back();
  std::vector<ParentOffspring> bad{{parent, off_bad}};
  CHECK(!validate_filling(bad, 1e-4).pass);
}

TEST_CASE("validate refinement") {
  std::vector<ConvexRegion> parents{ConvexRegion::rectangle(0, 0, 1, 1)};
  std::vector<ConvexRegion> children{ConvexRegion::rectangle(0, 0, 0.6, 1),
                                     ConvexRegion::rectangle(0.4, 0, 1, 1)};
  CHECK(validate_refinement(parents, children, 2, 1e-6).pass);
  std::vector<ConvexRegion> short_children{ConvexRegion::rectangle(0, 0, 0.4, 1),
                                           ConvexRegion::rectangle(0.6, 0, 1, 1)};
  CHECK(!validate_refinement(parents, short_children, 2, 1e-3).pass);
  CHECK(!validate_refinement(parents, children, 3, 1e-6).pass);
}
