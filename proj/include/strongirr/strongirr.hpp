// Copyright 2026 The strongirr Authors
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

// Umbrella header for the library. The command-line front end lives in
// strongirr/cli.hpp and is not included here.

#pragma once

#include "strongirr/alexander.hpp"
#include "strongirr/factor.hpp"
#include "strongirr/families.hpp"
#include "strongirr/gcd.hpp"
#include "strongirr/groebner.hpp"
#include "strongirr/integer.hpp"
#include "strongirr/localize.hpp"
#include "strongirr/parse.hpp"
#include "strongirr/report.hpp"
#include "strongirr/ring.hpp"
#include "strongirr/strongcheck.hpp"
#include "strongirr/upoly.hpp"
#include "strongirr/verdict.hpp"
