// Copyright 2026 The cclp Authors
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

#ifndef CCLP_RACE_HPP_
#define CCLP_RACE_HPP_

#include <map>
#include <string>
#include <vector>

#include "cclp/crossover.hpp"
#include "cclp/pdhg.hpp"
#include "cclp/standard_form.hpp"

namespace cclp {

enum class RaceMode { kBaseline, kConcurrent };

enum class RaceStatus {
  kSolved,
  kTimeLimit,
  kPdhgLimit,      // iteration budget exhausted, nobody won
  kNumericalError,
  kFailed,         // crossover failed everywhere
};

const char* to_string(RaceStatus status);

struct RaceConfig {
  Tolerances tol;
  RaceMode mode = RaceMode::kConcurrent;
  int worker_pool = 4;   // crossover threads set aside
  int pdhg_threads = 0;  // 0: derive from the machine via reserve_threads
  Scalar time_limit = 3600.0;  // seconds, whole race
  PdhgConfig pdhg;
  SimplexOptions simplex;
  std::ostream* event_log = nullptr;  // JSON lines, one per race event

  // Throws std::invalid_argument (pool must be >= 1 in concurrent mode,
  // tolerances must validate).
  void validate() const;
};

struct RaceEvent {
  std::string event;  // launch | finish | cancel | win
  std::string label;  // "1e-02" ... or "main"
  double t_ms = 0.0;
  std::string status;  // terminal status for finish events

  std::string to_json() const;
};

struct WorkerRecord {
  Scalar threshold = 0.0;
  double launch_s = 0.0;
  double finish_s = 0.0;
  CrossoverStatus status = CrossoverStatus::kCancelled;
  std::int64_t pivots = 0;
};

struct RaceOutcome {
  RaceStatus status = RaceStatus::kFailed;
  bool main_won = false;
  Scalar winning_threshold = 0.0;  // meaningful when a worker won
  std::string winner_label;        // "main" or the threshold label
  CrossoverResult final_result;    // standard-form space
  Iterate solution;                // original space
  Scalar objective = 0.0;          // original sense, offset included
  std::vector<WorkerRecord> workers;  // launched crossover workers
  PdhgStopReason pdhg_stop = PdhgStopReason::kIterationLimit;
  std::int64_t pdhg_iterations = 0;
  ResidualReport pdhg_report;
  std::vector<Scalar> thresholds;  // the launch schedule used
  double wall_s = 0.0;
  std::vector<RaceEvent> events;

  std::string to_json() const;
};

// Geometric launch ladder: eps_cross, eps_cross*decrement, ... while the
// value stays strictly above eps_rel. Products are accumulated in extended
// precision and snapped through a 15-digit decimal round-trip, so decimal
// inputs give exactly the decimal ladder (1e-2 -> 1e-3 -> 1e-4 -> 1e-5).
// The main-thread launch at eps_rel is implicit and not in the list.
std::vector<Scalar> schedule_thresholds(const Tolerances& tol);

// Splits a machine between PDHG and crossover: the crossover pool gets
// min(config.worker_pool, available - 1) threads, PDHG the rest (>= 1).
std::pair<int, int> reserve_threads(const RaceConfig& config,
                                    int available_cores);

// "1e-02" style label used in events, reports and histograms.
std::string threshold_label(Scalar threshold);

// Solves an LP by racing crossover workers against the PDHG iteration
// (concurrent mode) or by running PDHG to eps_rel followed by a single
// main-thread crossover (baseline mode). The first worker whose basic
// solution passes re-verification wins and every other worker, the main
// crossover, and the PDHG loop are cancelled. All spawned workers are
// joined before returning.
RaceOutcome run_race(const LinearProgram& lp, const RaceConfig& config);

// Deterministic simulation: a scripted residual trace stands in for PDHG
// and scripted durations for the crossover workers, all flowing through the
// same orchestration code as the real race.
struct SimWorker {
  double duration_s = 0.0;
  bool verifies = true;  // scripted re-verification verdict
};

struct RaceScript {
  std::vector<Scalar> residual_trace;  // maxresid before iteration k
  double seconds_per_iteration = 0.0;
  std::map<Scalar, SimWorker> workers;  // keyed by launch threshold
  SimWorker main_worker;
};

RaceOutcome run_race_simulated(const RaceScript& script,
                               const RaceConfig& config);

}  // namespace cclp

#endif  // CCLP_RACE_HPP_
