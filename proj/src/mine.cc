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

#include "resolvekit/mine.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "resolvekit/error.h"
#include "resolvekit/rng.h"

namespace resolvekit {
namespace {

constexpr double kMaxExhaustivePoints = 1e7;

std::vector<std::int64_t> Clamped(const SbmParams& params, const Allocation& k) {
  std::vector<std::int64_t> out(k.counts().begin(), k.counts().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], params.size(i));
  return out;
}

}  // namespace

Allocation::Allocation(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (auto v : counts_) {
    if (v < 0) throw InvalidInputError("allocation entries must be >= 0");
  }
}

std::int64_t Allocation::level() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

Allocation Allocation::Plus(std::size_t i) const {
  Allocation out = *this;
  ++out.counts_[i];
  return out;
}

Allocation Allocation::Minus(std::size_t i) const {
  if (counts_[i] == 0) throw InvalidInputError("cannot decrement a zero entry");
  Allocation out = *this;
  --out.counts_[i];
  return out;
}

bool Allocation::DominatedBy(const Allocation& other) const {
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > other.counts_[i]) return false;
  }
  return true;
}

std::size_t AllocationHash::operator()(const Allocation& a) const noexcept {
  std::uint64_t h = a.size();
  for (auto v : a.counts()) h = Mix64(h ^ static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

bool PrecedesOrEqual(const Allocation& x, const Allocation& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return true;
}

Allocation Downward(const Allocation& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > 0) return k.Minus(i);
  }
  throw InvalidInputError("Downward is undefined on the zero allocation");
}

Allocation Upward(const Allocation& k) {
  if (k.size() == 0) throw InvalidInputError("Upward needs at least one coordinate");
  return k.Plus(0);
}

std::optional<Allocation> NextPoint(const Allocation& k) {
  const std::size_t c = k.size();
  if (c == 0) return std::nullopt;
  std::size_t i = c - 1;
  // Find the rightmost positive entry among the first c - 1.
  while (i > 0 && k[i - 1] == 0) --i;
  if (i == 0) return std::nullopt;
  --i;
  std::vector<std::int64_t> next(k.counts().begin(), k.counts().end());
  next[i] = k[i] - 1;
  next[i + 1] = (k[c - 1] == 0 ? k[i + 1] : k[c - 1]) + 1;
  for (std::size_t t = i + 2; t < c; ++t) next[t] = 0;
  return Allocation(std::move(next));
}

CachedObjective::CachedObjective(const SbmParams& params) : params_(&params), bound_(params) {}

double CachedObjective::operator()(const Allocation& k) {
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  const double value = bound_(Clamped(*params_, k));
  ++evaluations_;
  if (sink_ != nullptr) sink_->push_back(k);
  cache_.emplace(k, value);
  return value;
}

Allocation ForwardGreedy(const SbmParams& params, double alpha) {
  CachedObjective f(params);
  return ForwardGreedy(f, alpha);
}

Allocation ForwardGreedy(CachedObjective& f, double alpha) {
  const SbmParams& params = f.params();
  const std::size_t c = params.num_communities();
  const Allocation everything(std::vector<std::int64_t>(params.sizes().begin(), params.sizes().end()));
  if (!(f(everything) <= alpha)) {
    throw InfeasibleError("f(n_1, ..., n_c) = " + std::to_string(f(everything)) +
                          " exceeds alpha = " + std::to_string(alpha) +
                          "; no allocation is feasible");
  }
  Allocation x = Allocation::Zero(c);
  while (f(x) > alpha) {
    Allocation best = x;
    for (std::size_t i = 0; i < c; ++i) {
      if (x[i] >= params.size(i)) continue;
      Allocation step = x.Plus(i);
      if (f(step) < f(best)) best = std::move(step);
    }
    // Unreachable while (n_1, ..., n_c) is feasible: some uncapped
    // coordinate must still lower f.
    if (best == x) throw InfeasibleError("forward greedy search stalled above alpha");
    x = std::move(best);
  }
  return x;
}

Allocation BackwardGreedy(const SbmParams& params, double alpha, Allocation x) {
  CachedObjective f(params);
  return BackwardGreedy(f, alpha, std::move(x));
}

Allocation BackwardGreedy(CachedObjective& f, double alpha, Allocation x) {
  if (!(f(x) <= alpha)) throw InvalidInputError("backward greedy search needs a feasible start");
  for (bool moved = true; moved;) {
    moved = false;
    Allocation best = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      Allocation step = x.Minus(i);
      const double value = f(step);
      if (f(best) < value && value <= alpha) {
        best = std::move(step);
        moved = true;
      }
    }
    x = std::move(best);
  }
  return x;
}

MineSolution Mine(const SbmParams& params, double alpha, std::vector<Allocation>* evaluated) {
  CachedObjective f(params);
  f.RecordEvaluations(evaluated);
  Allocation x = ForwardGreedy(f, alpha);
  x = BackwardGreedy(f, alpha, std::move(x));
  if (x.level() > 0) {
    std::vector<std::int64_t> start(x.size(), 0);
    start[0] = x.level() - 1;
    std::optional<Allocation> y = Allocation(std::move(start));
    while (y) {
      if (f(*y) <= alpha) {
        x = *y;
        y = x.level() > 0 ? std::optional<Allocation>(Downward(x)) : std::nullopt;
      } else {
        y = NextPoint(*y);
      }
    }
  }
  return {x, f(x), alpha, f.evaluations(), true};
}

MineSolution ExhaustiveMin(const SbmParams& params, double alpha, std::int64_t level_cap) {
  const std::size_t c = params.num_communities();
  // Points on levels 0..cap: C(cap + c, c).
  double points = 1.0;
  for (std::size_t i = 1; i <= c; ++i) {
    points = points * static_cast<double>(level_cap + static_cast<std::int64_t>(i)) /
             static_cast<double>(i);
  }
  if (level_cap < 0 || points > kMaxExhaustivePoints) {
    throw SizeCapError("exhaustive search up to level " + std::to_string(level_cap) +
                       " would visit " + std::to_string(points) + " points");
  }
  const CollisionBound bound(params);
  std::uint64_t evaluations = 0;
  std::vector<std::int64_t> point(c, 0);
  std::optional<MineSolution> found;

  // Fills coordinates [index, c) with every composition of `remaining`.
  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t index,
                                                             std::int64_t remaining) {
    if (found) return;
    if (index + 1 == c) {
      point[index] = remaining;
      const Allocation k(point);
      const double value = bound(Clamped(params, k));
      ++evaluations;
      if (value <= alpha) found = MineSolution{k, value, alpha, 0, true};
      return;
    }
    for (std::int64_t v = remaining; v >= 0 && !found; --v) {
      point[index] = v;
      visit(index + 1, remaining - v);
    }
  };
  for (std::int64_t h = 0; h <= level_cap && !found; ++h) visit(0, h);
  if (!found) {
    throw SizeCapError("no feasible allocation up to level " + std::to_string(level_cap));
  }
  found->evaluations = evaluations;
  return *found;
}

}  // namespace resolvekit
