// Copyright 2026 The ctx Authors
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

#include <map>

#include "ctx/error.h"
#include "ctx/scenario.h"

namespace ctx {

namespace {

const std::map<std::string, const char *> &demos() {
    static const std::map<std::string, const char *> table = {
        {"mermin-square", R"({
  "schema": "ctx/1", "name": "mermin-square", "d": 2, "n": 2,
  "observables": ["XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"],
  "contexts": [["XI", "IX", "XX"], ["IZ", "ZI", "ZZ"], ["XZ", "ZX", "YY"],
               ["XI", "IZ", "XZ"], ["IX", "ZI", "ZX"], ["XX", "ZZ", "YY"]],
  "chains": {"square": [
    {"context": ["XI", "IX", "XX"]}, {"context": ["IZ", "ZI", "ZZ"]}, {"context": ["XZ", "ZX", "YY"]},
    {"context": ["XI", "IZ", "XZ"]}, {"context": ["IX", "ZI", "ZX"]}, {"context": ["XX", "ZZ", "YY"]}]},
  "symmetries": [
    {"name": "H1", "gates": [{"gate": "H", "wires": [0]}]},
    {"name": "SWAP", "gates": [{"gate": "SWAP", "wires": [0, 1]}]},
    {"name": "CNOT", "gates": [{"gate": "CNOT", "wires": [0, 1]}]}],
  "pauli_symmetries": true
})"},
        {"mermin-star", R"({
  "schema": "ctx/1", "name": "mermin-star", "d": 2, "n": 3,
  "observables": ["XII", "IXI", "IIX", "YII", "IYI", "IIY", "XXX", "XYY", "YXY", "YYX"],
  "contexts": [["XII", "IXI", "IIX", "XXX"], ["XII", "IYI", "IIY", "XYY"], ["YII", "IXI", "IIY", "YXY"],
               ["YII", "IYI", "IIX", "YYX"], ["XXX", "XYY", "YXY", "YYX"]],
  "chains": {"star": [
    {"context": ["XII", "IXI", "IIX"]}, {"context": ["XII", "IYI", "IIY"]}, {"context": ["YII", "IXI", "IIY"]},
    {"context": ["YII", "IYI", "IIX"]}, {"context": ["XXX", "XYY", "YXY"]}]},
  "symmetries": [
    {"name": "SWAP12", "gates": [{"gate": "SWAP", "wires": [0, 1]}]},
    {"name": "SWAP23", "gates": [{"gate": "SWAP", "wires": [1, 2]}]}],
  "pauli_symmetries": true
})"},
        {"decorated-star", R"({
  "schema": "ctx/1", "name": "decorated-star", "d": 2, "n": 3,
  "observables": ["XII", "IXI", "IIX", "YII", "IYI", "IIY", "XXX", "XYY", "YXY", "YYX", "IZZ"],
  "contexts": [["XII", "IXI", "IIX", "XXX"], ["YII", "IXI", "IIY", "YXY"], ["XXX", "XYY", "IZZ"],
               ["XII", "IYI", "IIY", "XYY"], ["YII", "IYI", "IIX", "YYX"], ["XXX", "XYY", "YXY", "YYX"]],
  "chains": {"f": [
    {"context": ["XII", "IXI", "IIX"]}, {"context": ["YII", "IXI", "IIY"]}, {"face": ["XXX", "XYY"]}]},
  "symmetries": [{"name": "A1A2", "gates": [{"gate": "A", "wires": [0]}, {"gate": "A", "wires": [1]}]}],
  "pauli_symmetries": true
})"},
        {"ghz-sd-star", R"({
  "schema": "ctx/1", "name": "ghz-sd-star", "d": 2, "n": 3,
  "observables": ["XII", "IXI", "IIX", "YII", "IYI", "IIY", "XXX", "XYY", "YXY", "YYX"],
  "state": [{"op": "XXX", "value": 0}, {"op": "XYY", "value": 1},
            {"op": "YXY", "value": 1}, {"op": "YYX", "value": 1}],
  "contexts": [["XII", "IXI", "IIX", "XXX"], ["YII", "IXI", "IIY", "YXY"],
               ["XII", "IYI", "IIY", "XYY"], ["YII", "IYI", "IIX", "YYX"]],
  "chains": {"four": [
    {"context": ["XII", "IXI", "IIX"]}, {"context": ["XII", "IYI", "IIY"]},
    {"context": ["YII", "IXI", "IIY"]}, {"context": ["YII", "IYI", "IIX"]}],
             "f": [{"context": ["XII", "IXI", "IIX"]}, {"context": ["YII", "IXI", "IIY"]}]},
  "symmetries": [
    {"name": "A1A2Y3", "gates": [{"gate": "A", "wires": [0]}, {"gate": "A", "wires": [1]}, {"gate": "Y", "wires": [2]}]},
    {"name": "SWAP12", "gates": [{"gate": "SWAP", "wires": [0, 1]}]},
    {"name": "SWAP23", "gates": [{"gate": "SWAP", "wires": [1, 2]}]}],
  "pauli_symmetries": true
})"},
        {"square-star", R"({
  "schema": "ctx/1", "name": "square-star", "d": 2, "n": 3, "complete": true,
  "observables": ["XII", "IXI", "IIX", "YII", "IYI", "IIY", "XXX", "XYY", "YXY", "YYX"],
  "chains": {
    "square": [
      {"context": ["XII", "IXI", "XXI"]}, {"context": ["IZI", "ZII", "ZZI"]}, {"context": ["XZI", "ZXI", "YYI"]},
      {"context": ["XII", "IZI", "XZI"]}, {"context": ["IXI", "ZII", "ZXI"]}, {"context": ["XXI", "ZZI", "YYI"]}],
    "star": [
      {"context": ["XII", "IXI", "IIX"]}, {"context": ["XII", "IYI", "IIY"]}, {"context": ["YII", "IXI", "IIY"]},
      {"context": ["YII", "IYI", "IIX"]}, {"context": ["XXX", "XYY", "YXY"]}]}
})"},
        {"ghz-mbqc", R"({
  "schema": "ctx/1", "name": "ghz-mbqc",
  "mbqc": {"n": 3, "resource": "GHZ", "angles": [[0, "pi/2"], [0, "pi/2"], [0, "pi/2"]],
           "Z": [[1, 1, 1]], "T": [[0, 0, 0], [0, 0, 0], [0, 0, 0]], "S": [[1, 0], [0, 1], [1, 1]]}
})"},
    };
    return table;
}

}  // namespace

std::vector<std::string> demo_names() {
    return {"mermin-square", "mermin-star", "decorated-star", "ghz-sd-star", "square-star", "ghz-mbqc"};
}

json demo_document(const std::string &name) {
    auto it = demos().find(name);
    if (it == demos().end()) {
        fail(ErrorKind::InvalidInput, "unknown demo '" + name + "'");
    }
    return json::parse(it->second);
}

}  // namespace ctx
