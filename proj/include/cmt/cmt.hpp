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

// Umbrella header.

#ifndef CMT_CMT_HPP_
#define CMT_CMT_HPP_

#include "cmt/colored_seq.hpp"
#include "cmt/error.hpp"
#include "cmt/families.hpp"
#include "cmt/field.hpp"
#include "cmt/generate.hpp"
#include "cmt/instance_io.hpp"
#include "cmt/matroid.hpp"
#include "cmt/oracle_verify.hpp"
#include "cmt/solver.hpp"

#endif  // CMT_CMT_HPP_
