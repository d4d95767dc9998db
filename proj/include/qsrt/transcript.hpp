// Copyright 2026 The qsrtsim Authors
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

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace qsrt {
namespace engine {

// Fixed 6-significant-figure formatting used for every numeric field so that
// equal-seed runs serialize byte-identically.
inline std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct MeasurementRecord {
  int step = 0;       // 1-based chain step
  int freq_index = 0; // grid index, -1 for refinement trials
  double omega = 0.0;
  double t = 0.0;
  int outcome = 0;    // measured probe bit
  long iter = 0;      // running trial count within the step
};

struct StepSummary {
  int step = 0;
  double omega_star = 0.0;
  double e0 = 0.0;
  double p0 = 0.0;
  long iterations = 0;
  double bound_a2c2 = 0.0;  // first-order leakage bound for the step
};

class Transcript {
 public:
  void record(const MeasurementRecord& r) { records_.push_back(r); }
  void summarize(const StepSummary& s) { summaries_.push_back(s); }
  void clear() {
    records_.clear();
    summaries_.clear();
  }

  const std::vector<MeasurementRecord>& records() const { return records_; }
  const std::vector<StepSummary>& summaries() const { return summaries_; }

  // JSON lines: one record per measurement, then one per step summary.
  void write_jsonl(std::ostream& os) const {
    for (const auto& r : records_) {
      os << "{\"step\":" << r.step << ",\"freqIndex\":" << r.freq_index
         << ",\"omega\":" << fmt6(r.omega) << ",\"t\":" << fmt6(r.t)
         << ",\"outcome\":" << r.outcome << ",\"iter\":" << r.iter << "}\n";
    }
    for (const auto& s : summaries_) {
      os << "{\"step\":" << s.step << ",\"omegaStar\":" << fmt6(s.omega_star)
         << ",\"E0\":" << fmt6(s.e0) << ",\"p0\":" << fmt6(s.p0)
         << ",\"iterations\":" << s.iterations << "}\n";
    }
  }

  void write_csv(std::ostream& os) const {
    os << "step,E0,p0,iterations,boundA2C2\n";
    for (const auto& s : summaries_) {
      os << s.step << ',' << fmt6(s.e0) << ',' << fmt6(s.p0) << ','
         << s.iterations << ',' << fmt6(s.bound_a2c2) << '\n';
    }
  }

 private:
  std::vector<MeasurementRecord> records_;
  std::vector<StepSummary> summaries_;
};

}  // namespace engine
}  // namespace qsrt
