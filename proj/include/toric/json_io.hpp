#pragma once

#include <string>

#include <json.hpp>

#include "toric/batyrev.hpp"
#include "toric/bigint.hpp"
#include "toric/cohomology.hpp"
#include "toric/collections.hpp"
#include "toric/fan.hpp"
#include "toric/frobenius.hpp"
#include "toric/homology.hpp"
#include "toric/picard.hpp"

namespace toric {

using OJson = nlohmann::ordered_json;

/// Parse a file as JSON; throws Error with a readable message.
OJson load_json_file(const std::string& path);

/// Exact integers: values that fit int64 become JSON numbers, larger ones
/// decimal strings.
OJson bigint_to_json(const BigInt& v);

// ---- inputs ----
Fan fan_from_json(const OJson& j);
OJson fan_to_json(const Fan& fan);

bool looks_like_family_params(const OJson& j);    // has n and r keys
bool looks_like_pentagon_params(const OJson& j);  // has p key
FamilyParams family_params_from_json(const OJson& j);
PentagonParams pentagon_params_from_json(const OJson& j);

PrimComplex complex_from_json(const OJson& j);

/// Integer array of the given length; throws otherwise.
std::vector<std::int64_t> int_vector_from_json(const OJson& j,
                                               const char* what);

// ---- reports ----
OJson fan_check_to_json(const FanCheck& c);
OJson homology_to_json(const HomologyResult& h);
OJson forbidden_to_json(const ForbiddenData& d);
OJson split_to_json(const SplitResult& s);
OJson bondal_image_to_json(const BondalImage& img);
OJson ext_to_json(const ExtReport& e);
OJson collection_to_json(const OrderedCollection& coll);
OJson diff_to_json(const DiffSet& d);
OJson exceptional_to_json(const ExceptionalReport& r);
OJson koszul_to_json(const KoszulReport& r);
OJson counterexample_to_json(const CounterexampleReport& r);
OJson bondal_box_to_json(const BondalBoxReport& r);
OJson family_box_to_json(const FamilyBoxReport& r);

}  // namespace toric
