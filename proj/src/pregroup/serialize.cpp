// Copyright 2026 The qnlp Authors
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

#include "qnlp/pregroup/serialize.hpp"

#include <json.hpp>

#include "qnlp/errors.hpp"

namespace qnlp {
namespace {

using ojson = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ojson type_ref(const PType& t) {
  ojson j;
  j["base"] = t.base.name();
  j["z"] = t.z;
  return j;
}

ojson type_list(const TypeSeq& seq) {
  ojson arr = ojson::array();
  for (const PType& t : seq) arr.push_back(type_ref(t));
  return arr;
}

ojson box_ref(const Box& box) {
  return std::visit(
      overloaded{
          [](const Word& w) {
            ojson j;
            j["kind"] = "word";
            j["token"] = w.token;
            j["dom"] = type_list(w.dom);
            j["cod"] = type_list(w.cod);
            return j;
          },
          [](const Cup& c) {
            ojson j;
            j["kind"] = "cup";
            j["base"] = c.base.name();
            j["z"] = c.z;
            return j;
          },
          [](const Cap& c) {
            ojson j;
            j["kind"] = "cap";
            j["base"] = c.base.name();
            j["z"] = c.z;
            return j;
          },
          [](const Spider& sp) {
            ojson j;
            j["kind"] = "spider";
            j["base"] = sp.base.name();
            j["z"] = sp.z;
            j["n_in"] = sp.n_in;
            j["n_out"] = sp.n_out;
            return j;
          },
          [](const Swap& sw) {
            ojson j;
            j["kind"] = "swap";
            j["left"] = type_ref(sw.left);
            j["right"] = type_ref(sw.right);
            return j;
          },
      },
      box);
}

// Schema-level access helpers; `path` is a JSON pointer used in messages.
const ojson& field(const ojson& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing key \"" + key + "\"");
  return *it;
}

std::string as_string(const ojson& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path + ": expected a string");
  return v.get<std::string>();
}

long long as_int(const ojson& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
  return v.get<long long>();
}

std::size_t as_count(const ojson& v, const std::string& path) {
  const long long x = as_int(v, path);
  if (x < 0) throw ParseError(path + ": expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

AtomicType base_of(const ojson& v, const std::string& path, const TypeRegistry& reg) {
  const std::string name = as_string(v, path);
  if (!reg.contains(name)) throw ParseError(path + ": unknown atomic type \"" + name + "\"");
  return AtomicType(name);
}

int winding(const ojson& v, const std::string& path) {
  return static_cast<int>(as_int(v, path));
}

PType read_type(const ojson& j, const std::string& path, const TypeRegistry& reg) {
  return PType{
      base_of(field(j, "base", path), path + "/base", reg),
      winding(field(j, "z", path), path + "/z")};
}

TypeSeq read_types(const ojson& j, const std::string& path, const TypeRegistry& reg) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  TypeSeq out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_type(j[i], path + "/" + std::to_string(i), reg));
  }
  return out;
}

Box read_box(const ojson& j, const std::string& path, const TypeRegistry& reg) {
  const std::string kind = as_string(field(j, "kind", path), path + "/kind");
  if (kind == "word") {
    return Word{
        as_string(field(j, "token", path), path + "/token"),
        read_types(field(j, "dom", path), path + "/dom", reg),
        read_types(field(j, "cod", path), path + "/cod", reg)};
  }
  if (kind == "cup" || kind == "cap") {
    AtomicType base = base_of(field(j, "base", path), path + "/base", reg);
    int z = winding(field(j, "z", path), path + "/z");
    if (kind == "cup") return Cup{base, z};
    return Cap{base, z};
  }
  if (kind == "spider") {
    return Spider{
        base_of(field(j, "base", path), path + "/base", reg),
        winding(field(j, "z", path), path + "/z"),
        as_count(field(j, "n_in", path), path + "/n_in"),
        as_count(field(j, "n_out", path), path + "/n_out")};
  }
  if (kind == "swap") {
    return Swap{
        read_type(field(j, "left", path), path + "/left", reg),
        read_type(field(j, "right", path), path + "/right", reg)};
  }
  throw ParseError(path + "/kind: unknown box kind \"" + kind + "\"");
}

}  // namespace

std::string to_json(const Diagram& d) {
  ojson j;
  j["dom"] = type_list(d.dom());
  j["cod"] = type_list(d.cod());
  ojson layers = ojson::array();
  for (const Layer& layer : d.layers()) {
    ojson l;
    l["box"] = box_ref(layer.box);
    l["offset"] = layer.offset;
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
  return j.dump();
}

Diagram from_json(std::string_view text, const TypeRegistry& registry) {
  ojson j;
  try {
    j = ojson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  const TypeSeq dom = read_types(field(j, "dom", ""), "/dom", registry);
  const TypeSeq cod = read_types(field(j, "cod", ""), "/cod", registry);
  const ojson& raw_layers = field(j, "layers", "");
  if (!raw_layers.is_array()) throw ParseError("/layers: expected an array");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < raw_layers.size(); ++i) {
    const std::string path = "/layers/" + std::to_string(i);
    layers.push_back(Layer{
        read_box(field(raw_layers[i], "box", path), path + "/box", registry),
        as_count(field(raw_layers[i], "offset", path), path + "/offset")});
  }
  if (auto err = check_types(dom, cod, layers)) throw ParseError("ill-typed diagram: " + *err);
  return Diagram(dom, cod, std::move(layers));
}

}  // namespace qnlp
