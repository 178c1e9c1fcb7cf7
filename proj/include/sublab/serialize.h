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

#ifndef SUBLAB_SERIALIZE_H_
#define SUBLAB_SERIALIZE_H_

#include <string>

#include "json.hpp"
#include "sublab/continuous.h"
#include "sublab/experiment.h"
#include "sublab/matroid.h"
#include "sublab/polytope.h"
#include "sublab/ratios.h"
#include "sublab/set_function.h"
#include "sublab/trace.h"
#include "sublab/verify.h"

namespace sublab {

using Json = nlohmann::json;

// Every object carries a "kind" tag. Doubles are written in shortest
// round-trip form, so parse(dump(x)) reproduces x bit for bit. Malformed
// input throws InvalidArgument.

Json ToJson(Subset s);
Subset SubsetFromJson(const Json& j);

// Custom, residual and tabulated functions throw InvalidArgument.
Json ToJson(const SetFunction& f);
SetFunctionPtr SetFunctionFromJson(const Json& j);

Json ToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j);

Json ToJson(const Polytope& p);
Polytope PolytopeFromJson(const Json& j);

Json ToJson(const QuadraticFunction& f);
QuadraticFunction QuadraticFromJson(const Json& j);

Json ToJson(const RatioMeasurement& r);
RatioMeasurement RatiosFromJson(const Json& j);

Json ToJson(const RunTrace& t);
RunTrace TraceFromJson(const Json& j);

Json ToJson(const ProblemInstance& instance);
ProblemInstance InstanceFromJson(const Json& j);

Json ToJson(const GuaranteeReport& r);
GuaranteeReport ReportFromJson(const Json& j);

// File helpers; ReadJsonFile throws InvalidArgument on I/O or parse errors.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace sublab

#endif  // SUBLAB_SERIALIZE_H_
