#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "forcinglab/bnames.hpp"
#include "forcinglab/extensional.hpp"
#include "forcinglab/filters.hpp"
#include "forcinglab/language.hpp"
#include "forcinglab/semantics.hpp"

namespace forcinglab::io {

using Json = nlohmann::ordered_json;

Json read_document(const std::string& path);

// Readers reject malformed documents with a diagnostic naming the offending
// entry.
Poset poset_from_json(const Json& doc);
Signature signature_from_json(const Json& doc);
/// The "signature" field may be inline or a path, resolved relative to the
/// document's own directory when one is given.
AtomicValuation valuation_from_json(const Json& doc, RegularAlgebra algebra,
                                    bool regularize, const std::string& base_dir = "");
EpsStructure eps_from_json(const Json& doc);
DenseFamily dense_family_from_json(const Json& doc, const Poset& poset);
NameSystem name_system_from_json(const Json& doc, RegularAlgebra algebra,
                                 bool regularize);
std::vector<Formula> formulas_from_json(const Json& doc, const Signature& sig);

Json poset_to_json(const Poset& p);
Json eps_to_json(const EpsStructure& e);
Json name_system_to_json(const NameSystem& s);

}  // namespace forcinglab::io
