// Copyright 2026 The rankindep Authors
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

#pragma once

#include "rankindep/error.hpp"
#include "rankindep/generators.hpp"
#include "rankindep/hoeffding.hpp"
#include "rankindep/independence_test.hpp"
#include "rankindep/null_distribution.hpp"
#include "rankindep/permutation.hpp"
#include "rankindep/statistic.hpp"
#include "rankindep/sum_array.hpp"
#include "rankindep/tau_star.hpp"
#include "rankindep/wide_int.hpp"
