#pragma once

#include <string>

#include <json.hpp>

#include "moufang/associator.hpp"
#include "moufang/loop_table.hpp"
#include "moufang/series.hpp"
#include "moufang/subloops.hpp"
#include "moufang/symbolic.hpp"

namespace moufang {

using json = nlohmann::json;

json loop_to_json(const LoopTable& L);
LoopTable loop_from_json(const json& j);

// Shape-validating parse without the Latin/identity gate; for diagnostics.
LoopTable loop_from_file_unchecked(const std::string& path);

json verification_to_json(const VerificationReport& r);
json witness_to_json(const AssociatorWitness& w);
json scan_result_to_json(const IdentityScanResult& r);
json mask_to_json(const SubloopMask& m);
json coset_partition_to_json(const CosetPartition& p);
json quotient_to_json(const QuotientResult& q);
json series_to_json(const SeriesReport& r);
json predicate_to_json(const ClassPredicateResult& r);
json lemma16_witness_to_json(const Lemma16Witness& w);
json classification_to_json(const ClassificationReport& r);

// CLI envelope {"command", "status", "payload"}.
json command_outcome(const std::string& command, const std::string& status,
                     json payload);

}  // namespace moufang
