#pragma once

// JSON documents: RingSpec, modules, sequence files and report payloads.

#include <json.hpp>

#include "redhom/reducing.hpp"
#include "redhom/torsionfree.hpp"

namespace redhom {

using Json = nlohmann::ordered_json;

/// Accepts ideal generators as exponent vectors or strings like "x^2*y", and a
/// structure table either in full ("table") or as sparse "products".
RingSpec ring_spec_from_json(const Json& j);
Json ring_spec_to_json(const RingSpec& spec);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::uint32_t p);

/// {"dim": d, "actions": [one matrix per distinguished generator]} or
/// {"presentation": rows of Λ-entries, each a coefficient vector}.
Json module_to_json(const Module& m);
Module module_from_json(const AlgebraPtr& alg, const Json& j);

Json lambda_matrix_to_json(const LambdaMatrix& a);
Json free_complex_to_json(const FreeComplex& c);

/// SequenceFile: {"lo": int, "modules": [...], "maps": [...]} with maps[k]
/// the differential out of position lo+k+1.
Json module_complex_to_json(const ModuleComplex& c);
ModuleComplex module_complex_from_json(const AlgebraPtr& alg, const Json& j);

Json to_json(const ExtTable& t);
Json to_json(const ExactnessVerdict& v);
Json to_json(const TorsionfreeVerdict& v);
Json to_json(const GdimReport& r);
Json to_json(const GrowthEstimate& g);
Json to_json(const SearchLimits& l);
Json to_json(const SearchResult& r, const SearchLimits& l);
Json to_json(const Theorem3Verdict& v);
Json to_json(const Pushforward& p);
Json to_json(const InequalityCheck& c);
Json to_json(const Theorem4Report& r, const SearchLimits& l);
Json to_json(const GorensteinSideReport& r, const SearchLimits& l);
Json to_json(const ComplexityChain& c);

}  // namespace redhom
