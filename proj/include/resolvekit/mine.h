// Copyright 2026 The ResolveKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESOLVEKIT_MINE_H_
#define RESOLVEKIT_MINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "resolvekit/sbm.h"

namespace resolvekit {

// A point of the lattice N_0^c: how many nodes to draw from each community.
// Its level is the sum of the entries.
class Allocation {
 public:
  Allocation() = default;
  // Throws InvalidInputError on a negative entry.
  explicit Allocation(std::vector<std::int64_t> counts);
  static Allocation Zero(std::size_t c) { return Allocation(std::vector<std::int64_t>(c, 0)); }

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t level() const;

  Allocation Plus(std::size_t i) const;
  // Requires (*this)[i] > 0.
  Allocation Minus(std::size_t i) const;

  // Componentwise x <= y.
  bool DominatedBy(const Allocation& other) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

struct AllocationHash {
  std::size_t operator()(const Allocation& a) const noexcept;
};

// Reverse lexicographic order: x precedes y iff x == y or x_i > y_i at the
// first index where they differ. (h, 0, ..., 0) is the first point of a
// level and (0, ..., 0, h) the last.
bool PrecedesOrEqual(const Allocation& x, const Allocation& y);

// Subtracts 1 from the leftmost positive entry. Throws InvalidInputError on
// the zero allocation.
Allocation Downward(const Allocation& k);
// Adds 1 to the first entry.
Allocation Upward(const Allocation& k);
// Successor of k within its level under PrecedesOrEqual, or nullopt for the
// last point (0, ..., 0, h).
std::optional<Allocation> NextPoint(const Allocation& k);

// f(k) memoized on the allocation. Entries are clamped to the community sizes
// before evaluation: at most n_i nodes can be drawn from community i, and the
// clamped objective stays monotone so lattice pruning remains sound.
class CachedObjective {
 public:
  explicit CachedObjective(const SbmParams& params);

  double operator()(const Allocation& k);
  std::uint64_t evaluations() const { return evaluations_; }
  const SbmParams& params() const { return *params_; }

  // Every cache miss in evaluation order, when recording is enabled.
  void RecordEvaluations(std::vector<Allocation>* sink) { sink_ = sink; }

 private:
  const SbmParams* params_;
  CollisionBound bound_;
  std::unordered_map<Allocation, double, AllocationHash> cache_;
  std::uint64_t evaluations_ = 0;
  std::vector<Allocation>* sink_ = nullptr;
};

// Greedy ascent from the origin: while f(x) > alpha, step along the unit
// vector giving the smallest f(x + e_i), lowest index on ties, never
// exceeding n_i in any coordinate. Throws InfeasibleError up front if even
// (n_1, ..., n_c) has f > alpha.
Allocation ForwardGreedy(const SbmParams& params, double alpha);
Allocation ForwardGreedy(CachedObjective& f, double alpha);

// Greedy descent: repeatedly takes the feasible decrement x - e_i with the
// largest f, until no decrement stays feasible. Requires f(x) <= alpha.
Allocation BackwardGreedy(const SbmParams& params, double alpha, Allocation x);
Allocation BackwardGreedy(CachedObjective& f, double alpha, Allocation x);

struct MineSolution {
  Allocation allocation;
  double f_value = 0.0;
  double alpha = 0.0;
  std::uint64_t evaluations = 0;
  bool feasible = false;
};

// Minimizes the level of k subject to f(k) <= alpha. Seeds with forward then
// backward greedy search, then walks lower levels in reverse lexicographic
// order: a feasible point y moves the search to Downward(y), an infeasible
// one to NextPoint(y). Any point skipped this way is dominated by an
// infeasible point, so the last feasible point has minimum level.
// When evaluated is non-null it receives every distinct point evaluated.
MineSolution Mine(const SbmParams& params, double alpha,
                  std::vector<Allocation>* evaluated = nullptr);

// Test oracle: enumerates levels 0, 1, ..., level_cap completely and returns
// the first feasible point. Throws SizeCapError if the levels hold more
// than 10^7 points in total, or if no point up to level_cap is feasible.
MineSolution ExhaustiveMin(const SbmParams& params, double alpha, std::int64_t level_cap);

}  // namespace resolvekit

#endif  // RESOLVEKIT_MINE_H_
