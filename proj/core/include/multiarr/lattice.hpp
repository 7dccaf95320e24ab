#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multiarr/multiarr2.hpp"

namespace multiarr {

/// Finite window {m : 0 <= m(H) <= cap(H), |m| <= total_cap} of the
/// multiplicity lattice of a fixed arrangement.
class LatticeRegion {
 public:
  LatticeRegion(Arrangement2 arrangement, std::vector<int> caps, std::optional<int> total_cap = std::nullopt);

  const Arrangement2& arrangement() const { return arrangement_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::optional<int>& total_cap() const { return total_cap_; }

  /// Number of points of the cap box, ignoring the total cap.
  std::size_t box_size() const;
  bool contains(const Multiplicity& m) const;
  // Box indices run in lexicographic order, last coordinate fastest.
  std::size_t box_index(const Multiplicity& m) const;
  Multiplicity box_point(std::size_t index) const;

 private:
  Arrangement2 arrangement_;
  std::vector<int> caps_;
  std::optional<int> total_cap_;
};

/// Every point of the region exactly once, lexicographically.
std::vector<Multiplicity> enumerate_multiplicities(const LatticeRegion& region);
void for_each_multiplicity(const LatticeRegion& region, const std::function<void(const Multiplicity&)>& fn);

int lattice_distance(const Multiplicity& a, const Multiplicity& b);

struct LatticeClassification {
  enum class Kind { ZeroDelta, FiniteComponent, InfiniteComponent };
  Kind kind = Kind::ZeroDelta;
  std::optional<std::size_t> hyperplane;  // K for InfiniteComponent
  int delta = 0;

  std::string to_string() const;
};

/// Combinatorial part of the classification, given Delta(m).
LatticeClassification classify_with_delta(const Multiplicity& m, int delta);
LatticeClassification classify(const Arrangement2& a, const Multiplicity& m);

inline bool in_finite_part(const Multiplicity& m, int delta) {
  return classify_with_delta(m, delta).kind == LatticeClassification::Kind::FiniteComponent;
}

/// Points mu >= 0 with d(center, mu) < radius, lexicographically.
std::vector<Multiplicity> open_ball(const Multiplicity& center, int radius);

/// Lattice neighbors at distance 1 that stay nonnegative, lexicographically.
std::vector<Multiplicity> lattice_neighbors(const Multiplicity& m);

/// Delta(mu), or nullopt when unavailable (e.g. outside a precomputed table).
using DeltaOracle = std::function<std::optional<int>(const Multiplicity&)>;

/// Greedy Delta-ascent inside the finite part: move to the neighbor with the
/// largest Delta increase, lexicographically smallest among ties, until none
/// increases. Returns nullopt if the oracle runs out or max_steps is hit.
std::optional<Multiplicity> ascend_to_peak(const Multiplicity& start, const DeltaOracle& delta, int max_steps);

struct ComponentMember {
  Multiplicity m;
  int delta = 0;
};

struct ComponentReport {
  Multiplicity peak;
  int peak_delta = 0;
  std::vector<ComponentMember> members;  // the open ball around the peak
  bool laws_hold = true;                 // ball membership and linear Delta law
  std::vector<std::string> violations;
};

/// Finds the peak of the finite component containing m by greedy ascent and
/// re-verifies the ball description and the linear Delta law on every member.
ComponentReport component_of(const Arrangement2& a, const Multiplicity& m, int max_steps = 10000);

/// Exponents for every point of a region, computed data-parallel.
class DeltaTable {
 public:
  DeltaTable(LatticeRegion region, unsigned jobs = 0);

  const LatticeRegion& region() const { return region_; }
  const Arrangement2& arrangement() const { return region_.arrangement(); }

  std::optional<Exponents2> exponents_of(const Multiplicity& m) const;
  std::optional<int> delta_of(const Multiplicity& m) const;
  /// Table lookup inside the region, direct computation outside.
  int delta_anywhere(const Multiplicity& m) const;

  const std::vector<Multiplicity>& points() const { return points_; }
  const Exponents2& exponents_at(std::size_t point) const { return exps_[point]; }

 private:
  LatticeRegion region_;
  std::vector<Multiplicity> points_;
  std::vector<Exponents2> exps_;
  std::vector<long> slot_;  // box index -> position in points_, or -1
};

enum class VerdictStatus { Pass, Fail, ExpectedViolation };
std::string to_string(VerdictStatus s);

struct VerificationReport {
  std::string name;
  VerdictStatus status = VerdictStatus::Pass;
  bool characteristic_zero = true;
  bool hypotheses_hold = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> parity_failures;  // Delta != |m| mod 2
  std::vector<std::string> notes;

  bool passed() const { return status != VerdictStatus::Fail; }
};

/// |Delta(m1) - Delta(m2)| = 1 for every pair at distance 1 in the region.
VerificationReport verify_lemma_one(const DeltaTable& table);
VerificationReport verify_lemma_one(const LatticeRegion& region, unsigned jobs = 0);

struct LimitReport {
  VerificationReport report;
  int bound = 0;  // h - 2
  std::size_t balanced_points = 0;
  std::vector<Multiplicity> maximizers;  // balanced points with Delta = h - 2
};

/// Delta(m) <= h - 2 for every balanced m in the region.
LimitReport verify_theorem_limit(const DeltaTable& table);
LimitReport verify_theorem_limit(const LatticeRegion& region, unsigned jobs = 0);

struct ComponentSummary {
  Multiplicity peak;
  int peak_delta = 0;
  std::size_t size = 0;
  enum class State { Verified, Clipped, Failed } state = State::Verified;
  std::string detail;
};

struct StrReport {
  VerificationReport report;
  std::vector<ComponentSummary> components;
  std::size_t verified = 0;
  std::size_t clipped = 0;
  // Number of finite-part points adjacent to an infinite-component point;
  // nonzero would mean connectivity inside Lambda' and Lambda_0 disagree.
  std::size_t cross_adjacencies = 0;
};

/// Components of the finite part are balls around a unique peak with the
/// linear Delta law; components whose closed ball leaves the region are
/// reported as clipped.
StrReport verify_theorem_str(const DeltaTable& table);
StrReport verify_theorem_str(const LatticeRegion& region, unsigned jobs = 0);

}  // namespace multiarr
