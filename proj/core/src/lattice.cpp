#include "multiarr/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "multiarr/parallel.hpp"

namespace multiarr {

namespace {

constexpr std::size_t kMaxListed = 20;

void note_counterexample(std::vector<std::string>& list, std::string text) {
  if (list.size() < kMaxListed) list.push_back(std::move(text));
}

}  // namespace

LatticeRegion::LatticeRegion(Arrangement2 arrangement, std::vector<int> caps, std::optional<int> total_cap)
    : arrangement_(std::move(arrangement)), caps_(std::move(caps)), total_cap_(total_cap) {
  if (caps_.size() != arrangement_.size()) throw PreconditionError("one cap per line is required");
  for (int c : caps_) {
    if (c < 0) throw PreconditionError("caps must be nonnegative");
  }
  if (total_cap_ && *total_cap_ < 0) throw PreconditionError("total cap must be nonnegative");
}

std::size_t LatticeRegion::box_size() const {
  std::size_t n = 1;
  for (int c : caps_) n *= static_cast<std::size_t>(c) + 1;
  return n;
}

bool LatticeRegion::contains(const Multiplicity& m) const {
  if (m.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (m[i] < 0 || m[i] > caps_[i]) return false;
  }
  return !total_cap_ || m.total() <= *total_cap_;
}

std::size_t LatticeRegion::box_index(const Multiplicity& m) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) idx = idx * (static_cast<std::size_t>(caps_[i]) + 1) + static_cast<std::size_t>(m[i]);
  return idx;
}

Multiplicity LatticeRegion::box_point(std::size_t index) const {
  std::vector<int> v(caps_.size());
  for (std::size_t i = caps_.size(); i-- > 0;) {
    const auto radix = static_cast<std::size_t>(caps_[i]) + 1;
    v[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return Multiplicity(std::move(v));
}

void for_each_multiplicity(const LatticeRegion& region, const std::function<void(const Multiplicity&)>& fn) {
  const std::size_t n = region.box_size();
  for (std::size_t i = 0; i < n; ++i) {
    Multiplicity m = region.box_point(i);
    if (region.contains(m)) fn(m);
  }
}

std::vector<Multiplicity> enumerate_multiplicities(const LatticeRegion& region) {
  std::vector<Multiplicity> out;
  for_each_multiplicity(region, [&](const Multiplicity& m) { out.push_back(m); });
  return out;
}

int lattice_distance(const Multiplicity& a, const Multiplicity& b) {
  if (a.size() != b.size()) throw PreconditionError("distance between multiplicities of different length");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

std::string LatticeClassification::to_string() const {
  switch (kind) {
    case Kind::ZeroDelta:
      return "ZERO_DELTA";
    case Kind::FiniteComponent:
      return "FINITE_COMPONENT";
    case Kind::InfiniteComponent:
      return "INFINITE_COMPONENT(" + std::to_string(*hyperplane) + ")";
  }
  return "?";
}

LatticeClassification classify_with_delta(const Multiplicity& m, int delta) {
  if (auto k = dominant_hyperplane(m)) return {LatticeClassification::Kind::InfiniteComponent, k, delta};
  if (delta == 0) return {LatticeClassification::Kind::ZeroDelta, std::nullopt, 0};
  return {LatticeClassification::Kind::FiniteComponent, std::nullopt, delta};
}

LatticeClassification classify(const Arrangement2& a, const Multiplicity& m) {
  return classify_with_delta(m, delta(a, m));
}

std::vector<Multiplicity> open_ball(const Multiplicity& center, int radius) {
  std::vector<Multiplicity> out;
  if (radius <= 0) return out;
  std::vector<int> cur(center.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == center.size()) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::max(0, center[i] - budget); v <= center[i] + budget; ++v) {
      cur[i] = v;
      rec(i + 1, budget - std::abs(v - center[i]));
    }
  };
  rec(0, radius - 1);
  return out;
}

std::vector<Multiplicity> lattice_neighbors(const Multiplicity& m) {
  std::vector<Multiplicity> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int step : {-1, 1}) {
      if (m[i] + step < 0) continue;
      Multiplicity n = m;
      n[i] += step;
      out.push_back(std::move(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Multiplicity> ascend_to_peak(const Multiplicity& start, const DeltaOracle& delta, int max_steps) {
  Multiplicity cur = start;
  auto cur_delta = delta(cur);
  if (!cur_delta || !in_finite_part(cur, *cur_delta)) return std::nullopt;
  for (int step = 0; step < max_steps; ++step) {
    std::optional<Multiplicity> best;
    int best_delta = *cur_delta;
    for (const auto& n : lattice_neighbors(cur)) {
      auto d = delta(n);
      if (!d) return std::nullopt;
      if (!in_finite_part(n, *d)) continue;
      if (*d > best_delta) {
        best = n;
        best_delta = *d;
      }
    }
    if (!best) return cur;
    cur = std::move(*best);
    cur_delta = best_delta;
  }
  return std::nullopt;
}

ComponentReport component_of(const Arrangement2& a, const Multiplicity& m, int max_steps) {
  const auto cls = classify(a, m);
  if (cls.kind != LatticeClassification::Kind::FiniteComponent) {
    throw PreconditionError("m=" + m.to_string() + " is not in a finite component (" + cls.to_string() + ")");
  }
  std::map<Multiplicity, int> cache;
  DeltaOracle oracle = [&](const Multiplicity& mu) -> std::optional<int> {
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    const int d = delta(a, mu);
    cache.emplace(mu, d);
    return d;
  };
  auto peak = ascend_to_peak(m, oracle, max_steps);
  if (!peak) {
    throw PreconditionError("Delta-ascent from " + m.to_string() + " did not settle within " +
                            std::to_string(max_steps) + " steps");
  }

  ComponentReport report;
  report.peak = *peak;
  report.peak_delta = *oracle(*peak);
  for (const auto& mu : open_ball(report.peak, report.peak_delta)) {
    const int d = *oracle(mu);
    const int expected = report.peak_delta - lattice_distance(report.peak, mu);
    report.members.push_back({mu, d});
    if (d != expected) {
      report.laws_hold = false;
      note_counterexample(report.violations, "Delta" + mu.to_string() + "=" + std::to_string(d) + ", expected " +
                                                 std::to_string(expected));
    }
    if (!in_finite_part(mu, d)) {
      report.laws_hold = false;
      note_counterexample(report.violations, mu.to_string() + " lies in the ball but outside the finite part");
    }
  }
  // The boundary sphere must not belong to the finite part, otherwise the
  // component would be larger than the ball.
  for (const auto& mu : report.members) {
    for (const auto& n : lattice_neighbors(mu.m)) {
      if (lattice_distance(report.peak, n) != report.peak_delta) continue;
      const int d = *oracle(n);
      if (in_finite_part(n, d)) {
        report.laws_hold = false;
        note_counterexample(report.violations, n.to_string() + " extends the component beyond the ball");
      }
    }
  }
  return report;
}

DeltaTable::DeltaTable(LatticeRegion region, unsigned jobs) : region_(std::move(region)) {
  points_ = enumerate_multiplicities(region_);
  exps_.assign(points_.size(), Exponents2{});
  slot_.assign(region_.box_size(), -1);
  for (std::size_t i = 0; i < points_.size(); ++i) slot_[region_.box_index(points_[i])] = static_cast<long>(i);
  const Arrangement2& a = region_.arrangement();
  parallel_for(points_.size(), jobs, [&](std::size_t i) { exps_[i] = exponents(a, points_[i]); });
}

std::optional<Exponents2> DeltaTable::exponents_of(const Multiplicity& m) const {
  if (!region_.contains(m)) return std::nullopt;
  const long s = slot_[region_.box_index(m)];
  if (s < 0) return std::nullopt;
  return exps_[static_cast<std::size_t>(s)];
}

std::optional<int> DeltaTable::delta_of(const Multiplicity& m) const {
  auto e = exponents_of(m);
  if (!e) return std::nullopt;
  return e->delta();
}

int DeltaTable::delta_anywhere(const Multiplicity& m) const {
  if (auto d = delta_of(m)) return *d;
  return delta(region_.arrangement(), m);
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass:
      return "PASS";
    case VerdictStatus::Fail:
      return "FAIL";
    case VerdictStatus::ExpectedViolation:
      return "EXPECTED-VIOLATION";
  }
  return "?";
}

namespace {

VerificationReport start_report(std::string name, const DeltaTable& table) {
  VerificationReport r;
  r.name = std::move(name);
  r.characteristic_zero = table.arrangement().field().is_rational();
  if (!r.characteristic_zero) {
    r.notes.push_back("field " + table.arrangement().field().name() + " has positive characteristic");
  }
  return r;
}

void check_parity(VerificationReport& r, const DeltaTable& table) {
  for (std::size_t i = 0; i < table.points().size(); ++i) {
    const auto& m = table.points()[i];
    const int d = table.exponents_at(i).delta();
    if ((d - m.total()) % 2 != 0) note_counterexample(r.parity_failures, m.to_string());
  }
}

void finish(VerificationReport& r) {
  const bool violated = !r.counterexamples.empty() || !r.parity_failures.empty();
  if (!violated) {
    r.status = VerdictStatus::Pass;
  } else if (!r.hypotheses_hold || !r.characteristic_zero) {
    r.status = VerdictStatus::ExpectedViolation;
  } else {
    r.status = VerdictStatus::Fail;
  }
}

}  // namespace

VerificationReport verify_lemma_one(const DeltaTable& table) {
  VerificationReport r = start_report("lemma-one", table);
  const auto& region = table.region();
  for (std::size_t i = 0; i < table.points().size(); ++i) {
    const auto& m = table.points()[i];
    const int d = table.exponents_at(i).delta();
    for (std::size_t h = 0; h < m.size(); ++h) {
      Multiplicity up = m;
      up[h] += 1;
      if (!region.contains(up)) continue;
      const int du = *table.delta_of(up);
      ++r.checked;
      if (std::abs(du - d) != 1) {
        note_counterexample(r.counterexamples, m.to_string() + " -> " + up.to_string() + ": Delta " + std::to_string(d) +
                                                   " -> " + std::to_string(du));
      }
    }
  }
  check_parity(r, table);
  finish(r);
  return r;
}

VerificationReport verify_lemma_one(const LatticeRegion& region, unsigned jobs) {
  return verify_lemma_one(DeltaTable(region, jobs));
}

LimitReport verify_theorem_limit(const DeltaTable& table) {
  LimitReport out;
  out.report = start_report("theorem-limit", table);
  const auto h = static_cast<int>(table.arrangement().size());
  out.bound = h - 2;
  if (h <= 2) {
    out.report.hypotheses_hold = false;
    out.report.notes.push_back("the bound needs more than two lines");
  }
  for (std::size_t i = 0; i < table.points().size(); ++i) {
    const auto& m = table.points()[i];
    if (!is_balanced(m)) continue;
    ++out.balanced_points;
    ++out.report.checked;
    const int d = table.exponents_at(i).delta();
    if (d > out.bound) {
      note_counterexample(out.report.counterexamples,
                          m.to_string() + ": Delta=" + std::to_string(d) + " > " + std::to_string(out.bound));
    } else if (d == out.bound) {
      out.maximizers.push_back(m);
    }
  }
  check_parity(out.report, table);
  finish(out.report);
  return out;
}

LimitReport verify_theorem_limit(const LatticeRegion& region, unsigned jobs) {
  return verify_theorem_limit(DeltaTable(region, jobs));
}

StrReport verify_theorem_str(const DeltaTable& table) {
  StrReport out;
  out.report = start_report("theorem-str", table);
  const auto& region = table.region();
  const auto& points = table.points();

  auto finite = [&](const Multiplicity& m) {
    auto d = table.delta_of(m);
    return d && in_finite_part(m, *d);
  };

  for (const auto& m : points) {
    if (!finite(m)) continue;
    for (const auto& n : lattice_neighbors(m)) {
      auto d = table.delta_of(n);
      if (d && classify_with_delta(n, *d).kind == LatticeClassification::Kind::InfiniteComponent) {
        ++out.cross_adjacencies;
        break;
      }
    }
  }
  if (out.cross_adjacencies > 0) {
    out.report.notes.push_back(std::to_string(out.cross_adjacencies) +
                               " finite-part points touch an infinite component; Lambda'-adjacency would merge them");
  }

  DeltaOracle oracle = [&](const Multiplicity& m) { return table.delta_of(m); };
  std::set<Multiplicity> seen;
  std::size_t component_index = 0;
  for (const auto& start : points) {
    if (!finite(start) || seen.count(start)) continue;
    std::vector<Multiplicity> comp;
    std::deque<Multiplicity> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Multiplicity cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& n : lattice_neighbors(cur)) {
        if (!region.contains(n) || seen.count(n) || !finite(n)) continue;
        seen.insert(n);
        queue.push_back(n);
      }
      comp.push_back(std::move(cur));
    }
    std::sort(comp.begin(), comp.end());

    int top = 0;
    for (const auto& m : comp) top = std::max(top, *table.delta_of(m));
    std::vector<Multiplicity> peaks;
    for (const auto& m : comp) {
      if (*table.delta_of(m) == top) peaks.push_back(m);
    }

    ComponentSummary summary;
    summary.peak = peaks.front();
    summary.peak_delta = top;
    summary.size = comp.size();

    bool enclosed = true;
    for (std::size_t h = 0; h < summary.peak.size(); ++h) {
      if (summary.peak[h] + top > region.caps()[h]) enclosed = false;
    }
    if (region.total_cap() && summary.peak.total() + top > *region.total_cap()) enclosed = false;

    if (!enclosed) {
      summary.state = ComponentSummary::State::Clipped;
      summary.detail = "closed ball of radius " + std::to_string(top) + " leaves the region";
      ++out.clipped;
      out.components.push_back(std::move(summary));
      ++component_index;
      continue;
    }

    ++out.report.checked;
    std::vector<std::string> problems;
    if (peaks.size() != 1) problems.push_back(std::to_string(peaks.size()) + " Delta-maximizers");
    const auto ball = open_ball(summary.peak, top);
    if (ball != comp) problems.push_back("component has " + std::to_string(comp.size()) + " points, ball has " + std::to_string(ball.size()));
    for (const auto& m : comp) {
      const int expected = top - lattice_distance(summary.peak, m);
      if (*table.delta_of(m) != expected) {
        problems.push_back("Delta" + m.to_string() + "=" + std::to_string(*table.delta_of(m)) + ", expected " + std::to_string(expected));
        break;
      }
    }
    // Unique peak must be reachable by greedy ascent from a few members.
    std::mt19937_64 rng(0x5eedULL + component_index);
    for (int probe = 0; probe < 3; ++probe) {
      const auto& from = comp[std::uniform_int_distribution<std::size_t>(0, comp.size() - 1)(rng)];
      auto reached = ascend_to_peak(from, oracle, static_cast<int>(comp.size()) + 1);
      if (!reached || !(*reached == summary.peak)) {
        problems.push_back("ascent from " + from.to_string() + " ends at " + (reached ? reached->to_string() : "nowhere"));
      }
    }

    if (problems.empty()) {
      summary.state = ComponentSummary::State::Verified;
      ++out.verified;
    } else {
      summary.state = ComponentSummary::State::Failed;
      summary.detail = problems.front();
      note_counterexample(out.report.counterexamples, "component at " + summary.peak.to_string() + ": " + problems.front());
    }
    out.components.push_back(std::move(summary));
    ++component_index;
  }
  check_parity(out.report, table);
  finish(out.report);
  return out;
}

StrReport verify_theorem_str(const LatticeRegion& region, unsigned jobs) {
  return verify_theorem_str(DeltaTable(region, jobs));
}

}  // namespace multiarr
