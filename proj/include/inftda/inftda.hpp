// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFTDA_INFTDA_HPP_
#define INFTDA_INFTDA_HPP_

#include "inftda/chebyshev_projection.hpp"
#include "inftda/csv.hpp"
#include "inftda/data.hpp"
#include "inftda/discrete_gaussian.hpp"
#include "inftda/error.hpp"
#include "inftda/evaluation.hpp"
#include "inftda/rational.hpp"
#include "inftda/report_json.hpp"
#include "inftda/rng.hpp"
#include "inftda/topdown.hpp"

#endif  // INFTDA_INFTDA_HPP_
