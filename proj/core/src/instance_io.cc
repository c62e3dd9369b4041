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

#include "noisysub/instance_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace noisysub {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

std::string TypeOf(const json& obj) {
  return Field(obj, "type").get<std::string>();
}

json FunctionToJson(const SetFunctionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const WeightedAdditiveQuadratic& f) {
            return json{{"type", "weighted_additive_quadratic"},
                        {"weights", f.weights},
                        {"cost", f.cost}};
          },
          [](const Coverage& f) {
            return json{{"type", "coverage"},
                        {"covers", f.covers},
                        {"item_weights", f.item_weights}};
          },
          [](const CutFunction& f) {
            json edges = json::array();
            for (const auto& e : f.edges) edges.push_back({e.u, e.v, e.weight});
            return json{{"type", "cut"},
                        {"num_vertices", f.num_vertices},
                        {"edges", edges}};
          },
          [](const Modular& f) {
            return json{{"type", "modular"}, {"weights", f.weights}};
          },
      },
      spec);
}

SetFunctionSpec FunctionFromJson(const json& j) {
  const std::string type = TypeOf(j);
  SetFunctionSpec spec;
  if (type == "weighted_additive_quadratic") {
    spec = WeightedAdditiveQuadratic{
        Field(j, "weights").get<std::vector<double>>(),
        Field(j, "cost").get<double>()};
  } else if (type == "coverage") {
    spec = Coverage{Field(j, "covers").get<std::vector<std::vector<int>>>(),
                    Field(j, "item_weights").get<std::vector<double>>()};
  } else if (type == "cut") {
    CutFunction f;
    f.num_vertices = Field(j, "num_vertices").get<int>();
    for (const json& e : Field(j, "edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw std::invalid_argument("cut edges must be [u, v, weight]");
      }
      f.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
    spec = std::move(f);
  } else if (type == "modular") {
    spec = Modular{Field(j, "weights").get<std::vector<double>>()};
  } else {
    throw std::invalid_argument("unknown function type \"" + type + "\"");
  }
  Validate(spec);
  return spec;
}

json MatroidToJson(const Matroid& m) {
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      return json{{"type", "uniform"}, {"n", m.ground_size()},
                  {"rank", m.uniform_rank()}};
    case Matroid::Kind::kPartition:
      return json{{"type", "partition"},
                  {"n", m.ground_size()},
                  {"parts", m.partition_parts()},
                  {"capacities", m.partition_capacities()}};
    case Matroid::Kind::kContracted:
      return json{{"type", "contracted"},
                  {"base", MatroidToJson(m.contracted_base())},
                  {"pinned", m.contracted_pinned().Elements()}};
  }
  throw std::logic_error("unreachable");
}

Matroid MatroidFromJson(const json& j) {
  const std::string type = TypeOf(j);
  if (type == "uniform") {
    return Matroid::Uniform(Field(j, "n").get<int>(), Field(j, "rank").get<int>());
  }
  if (type == "partition") {
    return Matroid::Partition(
        Field(j, "n").get<int>(),
        Field(j, "parts").get<std::vector<std::vector<int>>>(),
        Field(j, "capacities").get<std::vector<int>>());
  }
  if (type == "contracted") {
    Matroid base = MatroidFromJson(Field(j, "base"));
    const auto pinned = Field(j, "pinned").get<std::vector<int>>();
    return Matroid::Contract(base, ElementSet::Of(base.ground_size(), pinned));
  }
  throw std::invalid_argument("unknown matroid type \"" + type + "\"");
}

json NoiseToJson(const NoiseSpec& noise) {
  json j = std::visit(
      Overloaded{
          [](const GaussianNoise& g) {
            return json{{"type", "gaussian"}, {"variance", g.variance}};
          },
          [](const BoundedUniformNoise& u) {
            return json{{"type", "bounded_uniform"}, {"half_width", u.half_width}};
          },
          [](const ShiftedExponentialNoise& e) {
            return json{{"type", "shifted_exponential"}, {"rate", e.rate}};
          },
      },
      noise.distribution);
  j["clamp_negative"] = noise.clamp_negative;
  return j;
}

NoiseSpec NoiseFromJson(const json& j) {
  const std::string type = TypeOf(j);
  NoiseSpec noise;
  if (type == "gaussian") {
    noise.distribution = GaussianNoise{Field(j, "variance").get<double>()};
  } else if (type == "bounded_uniform") {
    noise.distribution = BoundedUniformNoise{Field(j, "half_width").get<double>()};
  } else if (type == "shifted_exponential") {
    noise.distribution = ShiftedExponentialNoise{Field(j, "rate").get<double>()};
  } else {
    throw std::invalid_argument("unknown noise type \"" + type + "\"");
  }
  noise.clamp_negative = j.value("clamp_negative", false);
  Validate(noise);
  return noise;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance is not valid JSON: ") +
                                e.what());
  }
  try {
    Instance instance{FunctionFromJson(Field(j, "function")), std::nullopt,
                      std::nullopt};
    if (j.contains("matroid")) {
      instance.matroid = MatroidFromJson(j.at("matroid"));
      if (instance.matroid->ground_size() != GroundSize(instance.function)) {
        throw std::invalid_argument("matroid and function ground sizes differ");
      }
    }
    if (j.contains("noise")) instance.noise = NoiseFromJson(j.at("noise"));
    return instance;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

std::string SerializeInstance(const Instance& instance) {
  json j;
  j["function"] = FunctionToJson(instance.function);
  if (instance.matroid.has_value()) j["matroid"] = MatroidToJson(*instance.matroid);
  if (instance.noise.has_value()) j["noise"] = NoiseToJson(*instance.noise);
  return j.dump(2) + "\n";
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void SaveInstance(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << SerializeInstance(instance);
}

}  // namespace noisysub
