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

#include "quaketail/catalog.hpp"
#include "quaketail/decluster.hpp"
#include "quaketail/distributions.hpp"
#include "quaketail/error.hpp"
#include "quaketail/evt.hpp"
#include "quaketail/io.hpp"
#include "quaketail/ks.hpp"
#include "quaketail/level_curve.hpp"
#include "quaketail/numeric.hpp"
#include "quaketail/parametric.hpp"
#include "quaketail/rng.hpp"
#include "quaketail/sim.hpp"
#include "quaketail/version.hpp"
