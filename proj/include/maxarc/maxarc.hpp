/*
   Copyright 2026 The maxarc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXARC_MAXARC_HPP
#define MAXARC_MAXARC_HPP

#include "maxarc/analysis.hpp"
#include "maxarc/arcs.hpp"
#include "maxarc/bigint.hpp"
#include "maxarc/bitmatrix.hpp"
#include "maxarc/charsum.hpp"
#include "maxarc/code.hpp"
#include "maxarc/gf2m.hpp"
#include "maxarc/low_weight.hpp"

#endif  // MAXARC_MAXARC_HPP
