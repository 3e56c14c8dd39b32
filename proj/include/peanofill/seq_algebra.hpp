#pragma once
// Souls, set sequences and the sequence calculus: difference operators,
// index masks, the precedence relation, anti-order, products/sums, and the
// validator that turns the structural definitions (regular, consistent,
// population, dust/anti-dust/filling, refinement) into executable checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "peanofill/geometry.hpp"

namespace peanofill {

// Pair (base, disturbance) with base and base-minus-disturbance convex.
// The convex remainder is stored; the disturbance is the closed difference
// base \ remainder.
class Soul {
 public:
  Soul() = default;
  static Soul whole(ConvexRegion base);  // empty disturbance
  static Soul with_remainder(ConvexRegion base, ConvexRegion remainder);

  const ConvexRegion& base() const { return base_; }
  const ConvexRegion& remainder() const { return remainder_; }
  Region disturbance() const;
  bool disturbance_empty() const;

 private:
  ConvexRegion base_;
  ConvexRegion remainder_;
};

struct SetSequence {
  std::vector<Region> entries;

  SetSequence() = default;
  explicit SetSequence(std::vector<Region> e) : entries(std::move(e)) {}
  static SetSequence of_regions(std::vector<ConvexRegion> regions);
  static SetSequence empties(std::size_t n) { return SetSequence(std::vector<Region>(n)); }

  std::size_t length() const { return entries.size(); }
  const Region& at1(std::size_t k) const { return entries.at(k - 1); }  // 1-based
  Region& at1(std::size_t k) { return entries.at(k - 1); }
  SetSequence reversed() const;
};

struct SoulSequence {
  std::vector<Soul> souls;

  SoulSequence() = default;
  explicit SoulSequence(std::vector<Soul> s) : souls(std::move(s)) {}
  std::size_t length() const { return souls.size(); }

  SetSequence bases() const;
  SetSequence disturbances() const;
  SoulSequence reversed() const;
};

struct IndexMask {
  enum class Kind { Odd, Even, Explicit };
  Kind kind = Kind::Odd;
  std::vector<int> indices;  // 1-based, used when kind == Explicit

  static IndexMask odd() { return {Kind::Odd, {}}; }
  static IndexMask even() { return {Kind::Even, {}}; }
  static IndexMask explicit_set(std::vector<int> idx) { return {Kind::Explicit, std::move(idx)}; }
  bool selects(int k) const;  // 1-based position
};

enum class DeltaDirection { Forward, Backward };

// Closed difference a \ b as a Region; exact when both entries are convex.
Region difference_region(const Region& a, const Region& b);

// s(k) = t(k) \ t(k-1) (forward; s(1) = empty) or t(k) \ t(k+1) (backward).
SetSequence delta(const SetSequence& seq, DeltaDirection dir);

// Entries outside the mask replaced by the empty region; throws on an
// explicit index out of range.
SetSequence restrict(const SetSequence& seq, const IndexMask& mask);

std::pair<Region, Region> ends(const SetSequence& seq);  // (first, last)

// Relation q ≺_s r: every nonempty pair k < l is equal, separated, or one
// side is covered by the union s([k+1, l-1]).
struct PrecedesResult {
  bool holds = true;
  int k = -1;
  int l = -1;
  std::string detail;
};
PrecedesResult precedes_check(const SetSequence& q, const SetSequence& r, const SetSequence& s,
                              double tol = 1e-6);
bool precedes(const SetSequence& q, const SetSequence& r, const SetSequence& s);

// Block concatenation with every second block reversed.
SetSequence anti_order(const std::vector<SetSequence>& seqs);
SoulSequence anti_order(const std::vector<SoulSequence>& seqs);

// r(i) = rbar ∩ s(i), exact on Region entries.
SetSequence otimes(const ConvexRegion& rbar, const SetSequence& s);

// Pointwise union. Unions of two nonempty entries are realized as certified
// convex hulls; `certified` (when provided) records per-entry success.
SetSequence oplus(const SetSequence& r, const SetSequence& s,
                  std::vector<bool>* certified = nullptr);

enum class SeqRelation { Orthogonal, Before, Far, Embeds, Equiv, RevEquiv };
bool relate(SeqRelation kind, const SetSequence& r, const SetSequence& s, double tol = 1e-6);

// p (or its reversal for sign -1) placed into block K of an all-empty
// sequence of total_blocks blocks.
SetSequence shift_embed(const SetSequence& p, int block_index, int sign, int total_blocks);

// --- validator --------------------------------------------------------------

struct ValidationReport {
  std::string criterion;
  bool pass = true;
  std::vector<int> witness_indices;
  std::string detail;
  double tol = 0.0;
  double measured = 0.0;

  std::string to_json() const;
};

ValidationReport validate_soul(const Soul& s, double tol);
ValidationReport validate_regular(const SoulSequence& seq, double tol);
ValidationReport validate_consistent(const SoulSequence& seq, double tol);
ValidationReport validate_population_of_souls(const SoulSequence& seq, double tol);

// Every contiguous union of entries is convex: max over ranges [K,L] of
// hull-area minus union-area stays within tol. Exact areas (prefix sums over
// the pairwise-overlap structure) with a structural pre-check.
ValidationReport validate_population_of_sets(const std::vector<ConvexRegion>& entries, double tol);

// Offspring functional axioms over sampled (parent, offspring) pairs.
using ParentOffspring = std::pair<Soul, SoulSequence>;
ValidationReport validate_dust(const std::vector<ParentOffspring>& pairs, double tol);
ValidationReport validate_anti_dust(const std::vector<ParentOffspring>& pairs, double tol);
ValidationReport validate_filling(const std::vector<ParentOffspring>& pairs, double tol);

// t(K) = union of the K-th block of m_prime children.
ValidationReport validate_refinement(const std::vector<ConvexRegion>& parents,
                                     const std::vector<ConvexRegion>& children, int m_prime,
                                     double tol);

// Lemma 3.1.3(a) reformulation of regularity, used as a cross-check.
bool regular_decomposition_holds(const SoulSequence& seq, double tol);

// Concatenation of soul sequences (no checks).
SoulSequence concat(const SoulSequence& a, const SoulSequence& b);

}  // namespace peanofill
