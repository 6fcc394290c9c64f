#pragma once

#include <string>

#include <json.hpp>

#include "ncbir/harness.hpp"

namespace ncbir {

// JSON encodings. Everything serializes losslessly: fractions as "num/den"
// strings, residues as integers, block matrices as nested row-major
// arrays. Output is canonical (keys sorted, fixed fraction rendering) so
// round trips are byte-exact.

nlohmann::json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const nlohmann::json& j);

nlohmann::json elem_to_json(const RingElem& x);
RingElem elem_from_json(const RingDescriptor& ring, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json hat_to_json(const HatParams& p);
HatParams hat_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const EquivWitness& w, const RingDescriptor& ring);
nlohmann::json domain_report_to_json(const DomainReport& r);
nlohmann::json suite_report_to_json(const Report& r);

// Canonical rendering used by the CLI: two-space indent, sorted keys,
// trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace ncbir
