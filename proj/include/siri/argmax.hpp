// Copyright 2026 The siri-bandits Authors.
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


#ifndef SIRI_ARGMAX_HPP_
#define SIRI_ARGMAX_HPP_

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace siri {

// Maintains argmax over per-arm scores under point updates. Ties resolve to
// the lowest index, matching a left-to-right strict-greater scan.
class ArgmaxTracker {
 public:
  explicit ArgmaxTracker(std::size_t size) : scores_(size) {}

  void set(std::size_t k, double score) {
    if (present_.size() <= k) present_.resize(k + 1, false);
    if (present_[k]) order_.erase({scores_[k], k});
    scores_[k] = score;
    present_[k] = true;
    order_.insert({score, k});
  }

  std::size_t best() const { return order_.begin()->second; }
  double best_score() const { return order_.begin()->first; }
  bool empty() const { return order_.empty(); }

 private:
  struct HigherFirst {
    bool operator()(const std::pair<double, std::size_t>& a,
                    const std::pair<double, std::size_t>& b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    }
  };

  std::vector<double> scores_;
  std::vector<bool> present_;
  std::set<std::pair<double, std::size_t>, HigherFirst> order_;
};

}  // namespace siri

#endif  // SIRI_ARGMAX_HPP_
