// Copyright 2026 The latcheck authors
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

#ifndef LATCHECK_LATCHECK_HPP
#define LATCHECK_LATCHECK_HPP

#include "latcheck/characterize.hpp"
#include "latcheck/combinatorics.hpp"
#include "latcheck/complexify.hpp"
#include "latcheck/funcalc.hpp"
#include "latcheck/generators.hpp"
#include "latcheck/instance_io.hpp"
#include "latcheck/lattice.hpp"
#include "latcheck/multilinear.hpp"
#include "latcheck/tolerance.hpp"
#include "latcheck/version.hpp"

#endif  // LATCHECK_LATCHECK_HPP
