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

#ifndef RESOLVEKIT_PARALLEL_H_
#define RESOLVEKIT_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace resolvekit {

// Worker count: RESOLVEKIT_THREADS if set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t ThreadCount();

// Calls body(i) for every i in [0, count). Items are striped across up to
// ThreadCount() threads; body must only write to per-item state. The first
// exception thrown by any item is rethrown after all workers join.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace resolvekit

#endif  // RESOLVEKIT_PARALLEL_H_
