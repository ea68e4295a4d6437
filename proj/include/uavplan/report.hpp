// Copyright 2026 The uavplan Authors.
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

#include <map>
#include <string>

#include "uavplan/cyclical.hpp"
#include "uavplan/online.hpp"

namespace uavplan {

// All artifact text is deterministic for fixed inputs: full float precision,
// fixed key order, no clocks.

void write_trajectory_csv(const std::string &path, const Trajectory &t);
Trajectory read_trajectory_csv(const std::string &path);

void write_schedule_csv(const std::string &path, const CommSchedule &s);
CommSchedule read_schedule_csv(const std::string &path);

void write_sca_log_csv(const std::string &path, const ScaTrace &trace);
void write_search_trace_csv(const std::string &path,
                            const std::vector<PatternCandidate> &rows);
void write_fine_tune_csv(const std::string &path,
                         const std::vector<FineTuneRow> &rows);
void write_run_report_csv(const std::string &path, const RunReport &r);
void write_ensemble_csv(const std::string &path, const EnsembleSummary &s);

// summary.json payload helpers; values land under stable keys.
using Kv = std::map<std::string, double>;
void write_summary_json(const std::string &path, const std::string &kind,
                        const Kv &values,
                        const std::map<std::string, std::string> &notes = {});

// manifest.json records every effective parameter of a run.
void write_manifest(const std::string &dir, const std::string &command,
                    const std::map<std::string, std::string> &params);

// Declarative plot description for downstream rendering of the CSV series.
struct PlotSeries {
  std::string file;   // csv relative to the run dir
  std::string x, y;   // column names
  std::string label;
};
void write_plots_json(const std::string &path,
                      const std::vector<PlotSeries> &series,
                      const std::string &title);

std::string ensure_run_dir(const std::string &out,
                           const std::string &command,
                           const std::map<std::string, std::string> &params);

}  // namespace uavplan
