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

#include "sublab/serialize.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sublab/errors.h"

namespace sublab {
namespace {

// nlohmann type errors become InvalidArgument with some context.
template <typename Fn>
auto Guard(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
  }
}

void ExpectKind(const Json& j, const std::string& kind) {
  if (!j.is_object() || j.value("kind", std::string()) != kind) {
    throw InvalidArgument("expected a JSON object of kind " + kind);
  }
}

Json ToJson(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Vector VectorFromJson(const Json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(values.data(),
                                  static_cast<Eigen::Index>(values.size()));
}

Json ToJson(const Matrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    rows.push_back(ToJson(Vector(a.row(i).transpose())));
  }
  return rows;
}

Matrix MatrixFromJson(const Json& j, Eigen::Index n) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
    throw InvalidArgument("matrix must have one row per coordinate");
  }
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector row = VectorFromJson(j[i]);
    if (row.size() != n) throw InvalidArgument("matrix row has wrong length");
    a.row(i) = row.transpose();
  }
  return a;
}

Json ToJson(const RatioWitness& w) {
  return {{"value", w.value},
          {"has_witness", w.has_witness},
          {"first", ToJson(w.first)},
          {"second", ToJson(w.second)}};
}

RatioWitness WitnessFromJson(const Json& j) {
  RatioWitness w;
  w.value = j.at("value").get<double>();
  w.has_witness = j.at("has_witness").get<bool>();
  w.first = SubsetFromJson(j.at("first"));
  w.second = SubsetFromJson(j.at("second"));
  return w;
}

Json ToJson(const TraceStep& s) {
  Json j = {{"index", s.index},
            {"candidates", s.candidates},
            {"marginals", s.marginals},
            {"state", ToJson(s.state)},
            {"point", s.point},
            {"direction", s.direction},
            {"step", s.step},
            {"value", s.value},
            {"mask_bound", s.mask_bound}};
  j["chosen"] = s.chosen ? Json(*s.chosen) : Json(nullptr);
  return j;
}

TraceStep StepFromJson(const Json& j) {
  TraceStep s;
  s.index = j.at("index").get<int>();
  if (!j.at("chosen").is_null()) s.chosen = j.at("chosen").get<int>();
  s.candidates = j.at("candidates").get<std::vector<int>>();
  s.marginals = j.at("marginals").get<std::vector<double>>();
  s.state = SubsetFromJson(j.at("state"));
  s.point = j.at("point").get<std::vector<double>>();
  s.direction = j.at("direction").get<std::vector<double>>();
  s.step = j.at("step").get<double>();
  s.value = j.at("value").get<double>();
  s.mask_bound = j.at("mask_bound").get<double>();
  return s;
}

Provenance ProvenanceFromString(const std::string& s) {
  for (Provenance p : {Provenance::kProved, Provenance::kClaimedFlawed,
                       Provenance::kAuthorsConjecture}) {
    if (ToString(p) == s) return p;
  }
  throw InvalidArgument("unknown provenance: " + s);
}

Verdict VerdictFromString(const std::string& s) {
  for (Verdict v : {Verdict::kHolds, Verdict::kViolated, Verdict::kInconclusive}) {
    if (ToString(v) == s) return v;
  }
  throw InvalidArgument("unknown verdict: " + s);
}

}  // namespace

Json ToJson(Subset s) { return s.elements(); }

Subset SubsetFromJson(const Json& j) {
  return Guard("subset", [&] {
    Subset s;
    for (int u : j.get<std::vector<int>>()) {
      if (u < 0 || u >= kMaxGroundSize) {
        throw InvalidArgument("subset element out of range");
      }
      s = s.with(u);
    }
    return s;
  });
}

Json ToJson(const SetFunction& f) {
  switch (f.family()) {
    case SetFamily::kModular:
      return {{"kind", "modular"},
              {"weights", static_cast<const ModularFunction&>(f).weights()}};
    case SetFamily::kCoverage: {
      const auto& c = static_cast<const CoverageFunction&>(f);
      return {{"kind", "coverage"},
              {"covers", c.covers()},
              {"universe_weights", c.universe_weights()}};
    }
    case SetFamily::kCut: {
      const auto& c = static_cast<const CutFunction&>(f);
      Json edges = Json::array();
      for (const auto& e : c.edges()) edges.push_back({e.u, e.v, e.weight});
      return {{"kind", "cut"}, {"n", c.n()}, {"edges", edges}};
    }
    case SetFamily::kPerturbed: {
      const auto& p = static_cast<const PerturbedFunction&>(f);
      return {{"kind", "perturbed"},
              {"base", ToJson(p.base())},
              {"delta", p.delta()},
              {"seed", p.seed()},
              {"monotone_closure", p.monotone_closure()}};
    }
    default:
      throw InvalidArgument("set function family " +
                            std::string(ToString(f.family())) +
                            " is not serializable");
  }
}

SetFunctionPtr SetFunctionFromJson(const Json& j) {
  return Guard("set function", [&]() -> SetFunctionPtr {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "modular") {
      return std::make_shared<const ModularFunction>(
          j.at("weights").get<std::vector<double>>());
    }
    if (kind == "coverage") {
      return std::make_shared<const CoverageFunction>(
          j.at("covers").get<std::vector<std::uint64_t>>(),
          j.at("universe_weights").get<std::vector<double>>());
    }
    if (kind == "cut") {
      std::vector<WeightedEdge> edges;
      for (const auto& e : j.at("edges")) {
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                         e.at(2).get<double>()});
      }
      return std::make_shared<const CutFunction>(j.at("n").get<int>(),
                                                 std::move(edges));
    }
    if (kind == "perturbed") {
      auto base = std::dynamic_pointer_cast<const CoverageFunction>(
          SetFunctionFromJson(j.at("base")));
      if (!base) throw InvalidArgument("perturbed base must be coverage");
      return std::make_shared<const PerturbedFunction>(
          std::move(base), j.at("delta").get<double>(),
          j.at("seed").get<std::uint64_t>(),
          j.at("monotone_closure").get<bool>());
    }
    throw InvalidArgument("unknown set function kind: " + kind);
  });
}

Json ToJson(const Matroid& m) {
  Json j = {{"kind", "matroid"},
            {"family", std::string(ToString(m.family()))},
            {"n", m.n()}};
  switch (m.family()) {
    case MatroidFamily::kUniform:
      j["k"] = m.uniform_rank();
      break;
    case MatroidFamily::kPartition:
      j["block_of"] = m.block_of();
      j["caps"] = m.caps();
      break;
    case MatroidFamily::kGraphic: {
      j["vertices"] = m.vertices();
      Json edges = Json::array();
      for (const auto& e : m.edges()) edges.push_back({e.u, e.v});
      j["edges"] = edges;
      break;
    }
  }
  return j;
}

Matroid MatroidFromJson(const Json& j) {
  return Guard("matroid", [&] {
    ExpectKind(j, "matroid");
    const std::string family = j.at("family").get<std::string>();
    if (family == ToString(MatroidFamily::kUniform)) {
      return Matroid::Uniform(j.at("n").get<int>(), j.at("k").get<int>());
    }
    if (family == ToString(MatroidFamily::kPartition)) {
      return Matroid::Partition(j.at("block_of").get<std::vector<int>>(),
                                j.at("caps").get<std::vector<int>>());
    }
    if (family == ToString(MatroidFamily::kGraphic)) {
      std::vector<GraphEdge> edges;
      for (const auto& e : j.at("edges")) {
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      }
      return Matroid::Graphic(j.at("vertices").get<int>(), std::move(edges));
    }
    throw InvalidArgument("unknown matroid family: " + family);
  });
}

Json ToJson(const Polytope& p) {
  Json j = {{"kind", "polytope"},
            {"family", std::string(ToString(p.family()))},
            {"n", p.dim()}};
  switch (p.family()) {
    case PolytopeFamily::kBox:
      break;
    case PolytopeFamily::kCardinality:
      j["k"] = p.cardinality();
      break;
    case PolytopeFamily::kPartition:
      j["block_of"] = p.block_of();
      j["caps"] = p.caps();
      break;
    case PolytopeFamily::kKnapsack:
      j["costs"] = p.costs();
      j["budget"] = p.budget();
      break;
  }
  return j;
}

Polytope PolytopeFromJson(const Json& j) {
  return Guard("polytope", [&] {
    ExpectKind(j, "polytope");
    switch (PolytopeFamilyFromString(j.at("family").get<std::string>())) {
      case PolytopeFamily::kBox:
        return Polytope::Box(j.at("n").get<int>());
      case PolytopeFamily::kCardinality:
        return Polytope::Cardinality(j.at("n").get<int>(), j.at("k").get<int>());
      case PolytopeFamily::kPartition:
        return Polytope::Partition(j.at("block_of").get<std::vector<int>>(),
                                   j.at("caps").get<std::vector<int>>());
      case PolytopeFamily::kKnapsack:
        return Polytope::Knapsack(j.at("costs").get<std::vector<double>>(),
                                  j.at("budget").get<double>());
    }
    throw InvalidArgument("unknown polytope family");
  });
}

Json ToJson(const QuadraticFunction& f) {
  return {{"kind", std::string(f.kind())},
          {"b", ToJson(f.linear())},
          {"A", ToJson(f.interaction())},
          {"offset", f.offset()}};
}

QuadraticFunction QuadraticFromJson(const Json& j) {
  return Guard("quadratic", [&] {
    Vector b = VectorFromJson(j.at("b"));
    Matrix a = MatrixFromJson(j.at("A"), b.size());
    return QuadraticFunction::FromParts(
        QuadraticKindFromString(j.at("kind").get<std::string>()), std::move(b),
        std::move(a), j.at("offset").get<double>());
  });
}

Json ToJson(const RatioMeasurement& r) {
  return {{"kind", "ratios"},
          {"gamma", r.gamma},
          {"m", r.m},
          {"gamma_witness", ToJson(r.gamma_witness)},
          {"m_witness", ToJson(r.m_witness)},
          {"non_monotone", r.non_monotone}};
}

RatioMeasurement RatiosFromJson(const Json& j) {
  return Guard("ratios", [&] {
    ExpectKind(j, "ratios");
    RatioMeasurement r;
    r.gamma = j.at("gamma").get<double>();
    r.m = j.at("m").get<double>();
    r.gamma_witness = WitnessFromJson(j.at("gamma_witness"));
    r.m_witness = WitnessFromJson(j.at("m_witness"));
    r.non_monotone = j.at("non_monotone").get<bool>();
    return r;
  });
}

Json ToJson(const RunTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(ToJson(s));
  Json passes = Json::array();
  for (Subset p : t.passes) passes.push_back(ToJson(p));
  return {{"kind", "trace"},
          {"algorithm", t.algorithm},
          {"seed", t.seed},
          {"steps", steps},
          {"solution", ToJson(t.solution)},
          {"point", t.point},
          {"value", t.value},
          {"passes", passes},
          {"info", t.info}};
}

RunTrace TraceFromJson(const Json& j) {
  return Guard("trace", [&] {
    ExpectKind(j, "trace");
    RunTrace t;
    t.algorithm = j.at("algorithm").get<std::string>();
    t.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("steps")) t.steps.push_back(StepFromJson(s));
    t.solution = SubsetFromJson(j.at("solution"));
    t.point = j.at("point").get<std::vector<double>>();
    t.value = j.at("value").get<double>();
    for (const auto& p : j.at("passes")) t.passes.push_back(SubsetFromJson(p));
    t.info = j.at("info").get<std::map<std::string, double>>();
    return t;
  });
}

Json ToJson(const ProblemInstance& instance) {
  Json j = {{"kind", "instance"},
            {"id", instance.id},
            {"problem", instance.problem},
            {"k", instance.k}};
  if (instance.objective) j["objective"] = ToJson(*instance.objective);
  Json matroids = Json::array();
  for (const auto& m : instance.matroids) matroids.push_back(ToJson(m));
  j["matroids"] = matroids;
  if (instance.g) j["g"] = ToJson(*instance.g);
  if (instance.h) j["h"] = ToJson(*instance.h);
  if (instance.polytope) j["polytope"] = ToJson(*instance.polytope);
  if (instance.ratios) j["ratios"] = ToJson(*instance.ratios);
  if (instance.continuous_gamma) j["continuous_gamma"] = *instance.continuous_gamma;
  return j;
}

ProblemInstance InstanceFromJson(const Json& j) {
  return Guard("instance", [&] {
    ExpectKind(j, "instance");
    ProblemInstance out;
    out.id = j.at("id").get<std::string>();
    out.problem = j.at("problem").get<int>();
    out.k = j.at("k").get<int>();
    if (j.contains("objective")) out.objective = SetFunctionFromJson(j["objective"]);
    for (const auto& m : j.at("matroids")) out.matroids.push_back(MatroidFromJson(m));
    if (j.contains("g")) {
      out.g = std::make_shared<const QuadraticFunction>(QuadraticFromJson(j["g"]));
    }
    if (j.contains("h")) {
      out.h = std::make_shared<const QuadraticFunction>(QuadraticFromJson(j["h"]));
    }
    if (j.contains("polytope")) out.polytope = PolytopeFromJson(j["polytope"]);
    if (j.contains("ratios")) out.ratios = RatiosFromJson(j["ratios"]);
    if (j.contains("continuous_gamma")) {
      out.continuous_gamma = j["continuous_gamma"].get<double>();
    }
    return out;
  });
}

Json ToJson(const GuaranteeReport& r) {
  return {{"kind", "report"},
          {"instance_id", r.instance_id},
          {"algorithm_id", r.algorithm_id},
          {"bound_id", r.bound_id},
          {"provenance", std::string(ToString(r.provenance))},
          {"measured", r.measured},
          {"exact", r.exact},
          {"half_width", r.half_width},
          {"opt", r.opt},
          {"threshold", r.threshold},
          {"slack", r.slack},
          {"verdict", std::string(ToString(r.verdict))}};
}

GuaranteeReport ReportFromJson(const Json& j) {
  return Guard("report", [&] {
    ExpectKind(j, "report");
    GuaranteeReport r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.algorithm_id = j.at("algorithm_id").get<std::string>();
    r.bound_id = j.at("bound_id").get<std::string>();
    r.provenance = ProvenanceFromString(j.at("provenance").get<std::string>());
    r.measured = j.at("measured").get<double>();
    r.exact = j.at("exact").get<bool>();
    r.half_width = j.at("half_width").get<double>();
    r.opt = j.at("opt").get<double>();
    r.threshold = j.at("threshold").get<double>();
    r.slack = j.at("slack").get<double>();
    r.verdict = VerdictFromString(j.at("verdict").get<std::string>());
    return r;
  });
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("cannot parse " + path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(1) << '\n';
  if (!out) throw InvalidArgument("write failed: " + path);
}

}  // namespace sublab
