// Copyright 2026 The polaoam Authors
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

#include "polaoam/circuits.hpp"
#include "polaoam/elements.hpp"
#include "polaoam/error.hpp"
#include "polaoam/fock.hpp"
#include "polaoam/jones.hpp"
#include "polaoam/measurement.hpp"
#include "polaoam/modes.hpp"
#include "polaoam/pipeline_io.hpp"
#include "polaoam/witness.hpp"
