// Copyright 2026 the lrpc authors.
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

#ifndef LRPC_LRPC_HPP_
#define LRPC_LRPC_HPP_

#include "lrpc/analysis.hpp"
#include "lrpc/channel.hpp"
#include "lrpc/code.hpp"
#include "lrpc/decoder.hpp"
#include "lrpc/ext_matrix.hpp"
#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"
#include "lrpc/random.hpp"
#include "lrpc/serialize.hpp"
#include "lrpc/simulator.hpp"
#include "lrpc/subspace.hpp"

#endif  // LRPC_LRPC_HPP_
