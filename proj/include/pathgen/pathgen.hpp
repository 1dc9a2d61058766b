// Copyright 2026 The Pathgen Authors
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

#ifndef PATHGEN_PATHGEN_HPP_
#define PATHGEN_PATHGEN_HPP_

#include "pathgen/commands.hpp"
#include "pathgen/criteria.hpp"
#include "pathgen/error.hpp"
#include "pathgen/generators.hpp"
#include "pathgen/graph.hpp"
#include "pathgen/model.hpp"
#include "pathgen/random_model.hpp"
#include "pathgen/report.hpp"
#include "pathgen/requirements.hpp"
#include "pathgen/selection.hpp"

#endif  // PATHGEN_PATHGEN_HPP_
