#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ffa/identities.hpp"

namespace ffa {

// Report schema: {"identity","q","mode","strategy","seed","tuples_checked",
// "rejected","failures","elapsed_ms","quarantined"}; an "error" key is added
// only when the check could not run.
nlohmann::ordered_json report_to_json(const VerifyReport& rep);
nlohmann::ordered_json reports_to_json(const std::vector<VerifyReport>& reps);

std::string reports_to_csv(const std::vector<VerifyReport>& reps);

// One-line human summary per report (used by `verify`).
std::string report_summary_line(const VerifyReport& rep);

// Header object echoed in every dump so results are interpretable without
// the tool: q, p, k, modulus, generator.
nlohmann::ordered_json field_header(const FieldTable& f);

nlohmann::ordered_json dump_dlog(const FieldTable& f);
nlohmann::ordered_json dump_binom(const FieldTable& f, const BinomialTable& bt);
nlohmann::ordered_json dump_chars(const FieldTable& f);

std::string table_to_csv(const nlohmann::ordered_json& dump);

nlohmann::ordered_json cyc_to_json(const CycNum& a);

}  // namespace ffa
