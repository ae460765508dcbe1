// Copyright 2026 The BMCP Solver Authors.
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

#ifndef BMCP_BMCP_HPP_
#define BMCP_BMCP_HPP_

#include "bmcp/greedy.hpp"
#include "bmcp/harness.hpp"
#include "bmcp/instance.hpp"
#include "bmcp/instgen.hpp"
#include "bmcp/neighbours.hpp"
#include "bmcp/oracle.hpp"
#include "bmcp/solution.hpp"
#include "bmcp/vdls.hpp"

#endif  // BMCP_BMCP_HPP_
