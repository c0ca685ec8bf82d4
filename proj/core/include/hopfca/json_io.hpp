#pragma once

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "hopfca/actions.hpp"
#include "hopfca/homology.hpp"

namespace hopfca {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

Json hopf_to_json(const HopfPtr& h);
HopfPtr hopf_from_json(const Json& j);

Json morphism_to_json(const HopfMorphism& f);
HopfMorphism morphism_from_json(const Json& j);

Json cw_to_json(const CWComplexData& kw);
CWComplexData cw_from_json(const Json& j);

SubcomplexSpec subcomplex_from_json(const Json& j);

Json fp_chain_to_json(const FpChainComplex& c);
FpChainComplex fp_chain_from_json(const Json& j);

Json action_to_json(const ActionSpec& spec);
/// Reads {"prime": p, "canonical": true} or {"prime": p, "table": [...]};
/// the base algebra is supplied separately.
ActionSpec action_from_json(const Json& j, const HopfPtr& base);

Json homology_result_to_json(const HomologyResult& r, bool emit_presentations);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace hopfca
