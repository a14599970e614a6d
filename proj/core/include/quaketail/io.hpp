// Copyright 2026 The quaketail Authors.
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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/evt.hpp"
#include "quaketail/ks.hpp"
#include "quaketail/level_curve.hpp"
#include "quaketail/parametric.hpp"
#include "quaketail/sim.hpp"

namespace quaketail {

using Json = nlohmann::ordered_json;

Json shock_json(const ShockRecord& s);
// {mainshock, aftershock_count, largest_aftershock|null, window:{L,T}}
Json event_json(const MainshockEvent& ev);

// {family, params, truncation, n, loglik}
Json fitted_json(const TruncExp& d, std::span<const double> data);
Json fitted_json(const GompertzFit& fit, std::size_t n);

Json ks_json(const KsResult& r);

Json model_json(const ParametricModel& m);
ParametricModel model_from_json(const Json& j);

// Includes the ranks and the tie-break seed/stream.
Json evt_fit_json(const EvtFit& fit);
EvtFit evt_fit_from_json(const Json& j);

Json law_json(const AftershockLaw& law);
AftershockLaw law_from_json(const Json& j);

// Pairs CSV: '#' comment lines, "# censor_threshold=<v>", header "x,y",
// then one row per pair with an empty y for censored aftershocks.
void write_pairs_csv(std::ostream& out, const CensoredPairs& pairs,
                     std::span<const std::string> comments = {});
CensoredPairs read_pairs_csv(std::istream& in);

// Long-format curve table: route,p,x,y,adjusted.
void write_curves_csv(std::ostream& out, const std::string& route,
                      std::span<const LevelCurve> curves, std::span<const std::string> comments = {});

// Shortest round-trip decimal for a double.
std::string format_number(double v);

}  // namespace quaketail
