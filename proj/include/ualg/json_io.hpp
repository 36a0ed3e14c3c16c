#pragma once

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"

#include "ualg/algebra.hpp"
#include "ualg/central.hpp"
#include "ualg/corpus.hpp"
#include "ualg/decompose.hpp"
#include "ualg/varieties.hpp"

namespace ualg {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const Json& j);

using AlgebraResolver = std::function<std::optional<FiniteAlgebra>(const std::string&)>;

Json to_json(const Homomorphism& h);
/// source/target are algebra names looked up through the resolver.
Homomorphism hom_from_json(const Json& j, const AlgebraResolver& resolve);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, int n);

Json to_json(const corpus::ContextSpec& c);
corpus::ContextSpec context_spec_from_json(const Json& j);

Json to_json(const CentralReport& r);
Json to_json(const DecompositionCertificate& c);
Json to_json(const PreservationReport& r);
Json to_json(const Verdict& v);
Json to_json(const EvidenceReport& r);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace ualg
