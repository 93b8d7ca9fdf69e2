/*
 * Copyright 2026 The mecdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace mecdec {

class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Cooperative time budget, polled at recursion boundaries.
struct Deadline {
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> at;

  static Deadline after(std::chrono::milliseconds budget) { return {Clock::now() + budget}; }

  void check() const {
    if (at && Clock::now() >= *at) throw DeadlineExceeded();
  }
};

}  // namespace mecdec
