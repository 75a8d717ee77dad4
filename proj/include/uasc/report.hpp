#pragma once

#include <string>

#include "json.hpp"
#include "uasc/admissibility.hpp"
#include "uasc/discriminator.hpp"

namespace uasc {

using Json = nlohmann::ordered_json;

/// Machine-readable reports. Field names mirror the result structs in
/// snake case; certificate terms are printed in the quasi-identity grammar
/// so that reports re-parse and re-verify against the input algebras.
Json verdict_to_json(const Verdict& v);
Json classification_to_json(const Classification& c);
Json refute_to_json(const RefuteResult& r);
Json survey_to_json(const SurveyReport& r);

std::string verdict_to_text(const Verdict& v);
std::string classification_to_text(const Classification& c);

}  // namespace uasc
