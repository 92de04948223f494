// Copyright 2026 The CPQC Authors
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

#include "cpqc/cond/text_format.hpp"

#include "cpqc/common/errors.hpp"
#include "cpqc/ir/text_format.hpp"

namespace cpqc::cond {

std::string serialize_conditional(const ConditionalCircuit& cc, std::span<const double> theta) {
  ir::ConditionalHeader header;
  for (const Register& r : cc.layout.registers) {
    header.sizes.push_back(r.size);
    header.steps.push_back(r.step);
  }
  header.target_size = cc.layout.target_size;
  return ir::serialize(cc.circuit, theta, header);
}

ConditionalDocument deserialize_conditional(std::string_view text) {
  ir::Document doc = ir::deserialize(text);
  if (!doc.conditional) throw ParseError("missing conditional section", 1, 1);
  ConditionalDocument out;
  for (std::size_t k = 0; k < doc.conditional->sizes.size(); ++k) {
    out.conditional.layout.registers.push_back(
        {doc.conditional->sizes[k], doc.conditional->steps[k]});
  }
  out.conditional.layout.target_size = doc.conditional->target_size;
  try {
    out.conditional.layout.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  if (out.conditional.layout.total_qubits() != doc.circuit.num_qubits ||
      doc.circuit.num_features != 0) {
    throw ParseError("conditional registers do not match num_qubits", 1, 1);
  }
  out.conditional.circuit = std::move(doc.circuit);
  out.theta = std::move(doc.theta);
  return out;
}

}  // namespace cpqc::cond
