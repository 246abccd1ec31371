#pragma once

// Stable external formats for certificates: JSON objects and CSV rows.

#include "json.hpp"

#include <string>
#include <vector>

#include "pantslab/family.hpp"
#include "pantslab/intersection.hpp"

namespace pantslab {

nlohmann::ordered_json to_json(const ArcVector& arcs);
nlohmann::ordered_json to_json(const TwistTriple& t);
nlohmann::ordered_json to_json(const PairCertificate& cert);

std::string verdict_name(Verdict v);

std::string csv_header();
std::string csv_row(const PairCertificate& cert);

}  // namespace pantslab
