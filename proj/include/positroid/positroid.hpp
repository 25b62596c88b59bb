// Copyright 2026 The Authors.
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

#ifndef POSITROID_POSITROID_HPP
#define POSITROID_POSITROID_HPP

#include "positroid/cells.hpp"
#include "positroid/core_sets.hpp"
#include "positroid/dep_graph.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/le_necklace.hpp"
#include "positroid/realize.hpp"

#endif  // POSITROID_POSITROID_HPP
