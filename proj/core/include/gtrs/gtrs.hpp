// Copyright 2026 The gtrs Authors
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

#include "gtrs/canonicalize.hpp"
#include "gtrs/complex_embed.hpp"
#include "gtrs/errors.hpp"
#include "gtrs/generate.hpp"
#include "gtrs/instance.hpp"
#include "gtrs/oracle.hpp"
#include "gtrs/polynomial.hpp"
#include "gtrs/report.hpp"
#include "gtrs/secular.hpp"
#include "gtrs/solver_global.hpp"
#include "gtrs/solver_local.hpp"
#include "gtrs/spectral.hpp"
#include "gtrs/tolerances.hpp"
