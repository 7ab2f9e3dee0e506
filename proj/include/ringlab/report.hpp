#pragma once

// Text, JSON and CSV renderings of classification reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/classify.hpp"

namespace ringlab {

/// {spec, order, properties{...}, counts{id, nil, unit, center, radical},
///  bounded_index, timings{}}. Not-applicable verdicts and counts are null;
/// timings stay empty unless requested.
nlohmann::ordered_json to_json(const ClassificationReport& report, bool with_timings = false);

std::string render_text(const ClassificationReport& report, bool with_timings = false);

inline constexpr const char* csv_header =
    "spec,order,wnc,clean,nilclean,exchange,pireg,spireg,sreg,abelian,uniq_e,uniq_q,|Id|,|Nil|,|U|,|J|,bidx";

std::string csv_row(const ClassificationReport& report);
std::string render_csv(const std::vector<ClassificationReport>& reports);
/// Aligned table with the CSV columns.
std::string render_table(const std::vector<ClassificationReport>& reports);

}  // namespace ringlab
