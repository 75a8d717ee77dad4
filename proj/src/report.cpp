#include "uasc/report.hpp"

#include <sstream>

namespace uasc {

namespace {

Json assignment_to_json(const std::vector<std::pair<int, int>>& assignment) {
  Json j = Json::object();
  for (const auto& [var, val] : assignment)
    j["x" + std::to_string(var)] = val;
  return j;
}

Json substitution_to_json(const std::vector<std::pair<int, Term>>& subst) {
  Json j = Json::object();
  for (const auto& [var, term] : subst)
    j["x" + std::to_string(var)] = term.to_string();
  return j;
}

const char* disc_status_name(DiscStatus s) {
  switch (s) {
    case DiscStatus::found: return "found";
    case DiscStatus::none: return "none";
    default: return "unknown";
  }
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["asc"] = to_string(v.asc);
  j["asc_justification"] = v.asc_justification;
  j["sc"] = to_string(v.sc);
  j["sc_justification"] = v.sc_justification;
  j["is_discriminator_variety"] = v.is_discriminator_variety;
  j["discriminator_status"] = disc_status_name(v.discriminator_status);
  j["discriminator_term"] =
      v.discriminator_term ? Json(v.discriminator_term->to_string()) : Json();
  j["trivial_class"] = v.trivial_class;
  j["distinct_constants"] = v.distinct_constants;
  if (v.idempotent_in_f1) {
    j["idempotent_in_f1"] = Json::object();
    j["idempotent_in_f1"]["element"] = v.idempotent_in_f1->first;
    j["idempotent_in_f1"]["witness"] = v.idempotent_in_f1->second.to_string();
  } else {
    j["idempotent_in_f1"] = Json();
  }
  j["minimal_variety"] = to_string(v.minimal);
  if (v.minimality) {
    j["minimal_certificate"] = v.minimality->describe();
    if (v.minimality->counterexample) {
      const auto& ce = *v.minimality->counterexample;
      Json c = Json::object();
      c["sub_member"] = ce.sub_member;
      c["sub_universe"] = ce.sub_universe;
      c["member_without_embedding"] = ce.member_without_embedding;
      j["minimal_counterexample"] = std::move(c);
    }
  }
  if (v.refutation) j["refutation"] = v.refutation->to_string();
  if (v.consequence) {
    j["minimality_consequence"] = v.consequence->pass ? "pass" : "FAILURE";
    j["minimality_consequence_checks"] = v.consequence->checks;
  }
  if (!v.capacity_note.empty()) j["capacity_note"] = v.capacity_note;
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j = Json::object();
  j["valid_in_q"] = c.valid_in_q;
  j["admissible"] = c.admissible;
  switch (c.activity) {
    case Activity::active: j["activity"] = "active"; break;
    case Activity::passive: j["activity"] = "passive"; break;
    default: j["activity"] = "not-applicable"; break;
  }
  Json certs = Json::object();
  if (c.validity_counterexample) {
    certs["falsifying_member"] = c.validity_counterexample->member;
    certs["falsifying_assignment"] =
        assignment_to_json(c.validity_counterexample->assignment);
  }
  if (!c.admissibility_counterexample.empty())
    certs["falsifying_substitution"] =
        substitution_to_json(c.admissibility_counterexample);
  if (!c.activity_witness.empty())
    certs["premise_witness"] = substitution_to_json(c.activity_witness);
  j["certificates"] = std::move(certs);
  return j;
}

Json refute_to_json(const RefuteResult& r) {
  Json j = Json::object();
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json();
  j["search_exhausted"] = r.search_exhausted;
  j["candidates_examined"] = r.candidates_examined;
  return j;
}

Json survey_to_json(const SurveyReport& r) {
  Json j = Json::object();
  Json params = Json::object();
  params["size"] = r.params.size;
  params["arities"] = r.params.arities;
  params["samples"] = r.params.samples;
  params["seed"] = r.params.seed;
  params["free_element_cap"] = r.params.limits.free_element_cap;
  j["params"] = std::move(params);
  Json counts = Json::object();
  counts["total"] = r.total;
  counts["trivial"] = r.trivial;
  counts["disc_term_found"] = r.disc_term_found;
  counts["disc_term_none"] = r.disc_term_none;
  counts["disc_term_unknown"] = r.disc_term_unknown;
  counts["no_proper_nontrivial_subalgebra"] = r.no_proper_nontrivial_subalgebra;
  counts["sc_yes"] = r.sc_yes;
  counts["sc_no"] = r.sc_no;
  counts["sc_unknown"] = r.sc_unknown;
  counts["capacity_exceeded"] = r.capacity_exceeded;
  j["counts"] = std::move(counts);
  Json fractions = Json::object();
  auto frac = [&](int k) {
    return r.total ? static_cast<double>(k) / r.total : 0.0;
  };
  fractions["disc_term_found"] = frac(r.disc_term_found);
  fractions["no_proper_nontrivial_subalgebra"] =
      frac(r.no_proper_nontrivial_subalgebra);
  fractions["sc_yes"] = frac(r.sc_yes);
  j["fractions"] = std::move(fractions);
  return j;
}

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream out;
  out << "asc: " << to_string(v.asc) << " (" << v.asc_justification << ")\n";
  out << "sc: " << to_string(v.sc) << " (" << v.sc_justification << ")\n";
  out << "discriminator term: ";
  switch (v.discriminator_status) {
    case DiscStatus::found:
      out << v.discriminator_term->to_string();
      break;
    case DiscStatus::none:
      out << "none";
      break;
    default:
      out << "unknown";
      break;
  }
  out << "\n";
  if (v.idempotent_in_f1)
    out << "idempotent in F(1): element " << v.idempotent_in_f1->first
        << ", witness " << v.idempotent_in_f1->second.to_string() << "\n";
  else if (v.distinct_constants)
    out << "idempotent in F(1): impossible (two distinct constants)\n";
  out << "minimal variety: " << to_string(v.minimal);
  if (v.minimality) out << " (" << v.minimality->describe() << ")";
  out << "\n";
  if (v.refutation)
    out << "refutation: " << v.refutation->to_string() << "\n";
  if (v.consequence)
    out << "minimality consequence: " << (v.consequence->pass ? "pass" : "FAILURE")
        << " (" << v.consequence->checks << " checks)\n";
  if (!v.capacity_note.empty()) out << "note: " << v.capacity_note << "\n";
  return out.str();
}

std::string classification_to_text(const Classification& c) {
  std::string s;
  if (c.valid_in_q) {
    s = "valid, admissible, ";
    s += c.activity == Activity::active ? "active" : "passive";
  } else if (c.admissible) {
    s = c.activity == Activity::active ? "active" : "passive";
    s += "-admissible, not valid";
  } else {
    s = "not admissible, not valid";
  }
  return s;
}

}  // namespace uasc
