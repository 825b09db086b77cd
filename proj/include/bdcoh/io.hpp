#pragma once

// JSON input and output.
//
//   group   {"cyclic": n} | {"product": [g, h, ...]} |
//           {"order": n, "mult": [[...]], "identity": i, "labels": [...]}
//   module  {"moduli": [...], "action": {g: matrix}, "mult": [[vec]], "unit": vec,
//            "automorphisms": bool}     (mult/unit make it an algebra)
//   matrix  [[...]] | {"matrix": [[...]]}
//   r       {"matrix": [image of each kernel generator], "kernel_generators": [...]}
//   ses     {"group", "A", "B", "iota", "pi", "s", "r"}
//   family  {"group", "A", "B", "pi", "s", "members": {g: {"iota", "r"} | "zero"}}
//   P_r tables, see read_instance
//
// Group elements in keys may be labels or decimal indices.

#include "bdcoh/bd.hpp"
#include "bdcoh/connecting.hpp"
#include "bdcoh/modules.hpp"
#include "bdcoh/report.hpp"

#include "json.hpp"

#include <string>

namespace bdcoh::io {

using json = nlohmann::json;

// Parses text, throwing MalformedInput on syntax errors.
json parse(const std::string& text);

GroupPtr read_group(const json& j);
// An AlgebraPtr (as a ModulePtr) when "mult" is present.
ModulePtr read_module(const json& j, const GroupPtr& group);
AlgebraPtr read_algebra(const json& j, const GroupPtr& group);
IntMatrix read_matrix(const json& j);
AdditiveMap read_map(const json& j, const Carrier& source, const Carrier& target);
Elt read_element_key(const std::string& key, const FiniteGroup& group);
// The group comes from j["group"] unless given.
ShortExactSequence read_ses(const json& j, GroupPtr group = nullptr);
ThetaFamily read_family(const json& j, GroupPtr group = nullptr);

json write_group(const FiniteGroup& g);
json write_module(const GModule& m);
json write_matrix(const IntMatrix& m);
json write_retraction(const SubgroupMap& r);
json write_ses(const ShortExactSequence& ses);
json write_family(const ThetaFamily& f);

json write_report(const Report& r);
// results entries of the CLI envelope: {check, status, witness?}
json report_results(const Report& r);

json write_summary(const DegreeSummary& s);

// {"modulus", "r", "cutoff", "degrees", "labels", "product", "bracket", "op", "unit"}
// with null for absent table entries; "op" and "unit" may be omitted.
GradedAlgebraInstance read_instance(const json& j);
json write_instance(const GradedAlgebraInstance& inst);

} // namespace bdcoh::io
