#pragma once

#include <string>

#include "germkit/descent.hpp"
#include "germkit/eisenstein.hpp"
#include "germkit/tower.hpp"

namespace germkit {

// All output goes through one canonical writer: sorted keys, two-space
// indent, rationals as "p/q" strings, series terms in graded-lex order,
// trailing newline. Re-serializing parsed output is byte-identical.

std::string canonical_json_text(const std::string& json_text);

std::string field_to_json(const NumberField& F);
NumberField field_from_json(const std::string& text);

std::string series_to_json(const Series& s);
Series series_from_json(const std::string& text, const Ring& ring);

std::string preparation_to_json(const PreparationResult& p);

std::string disc_record_to_json(const DiscriminantRecord& rec);

std::string tower_to_json(const Tower& t);
Tower tower_from_json(const std::string& text, const Ring& ring);
std::string tower_report_to_json(const TowerReport& r);

std::string eisenstein_to_json(const EisensteinResult& res);
EisensteinResult eisenstein_from_json(const std::string& text, const Ring& tring,
                                      const Ring& txring);
std::string eisenstein_report_to_json(const EisensteinReport& r);

} // namespace germkit
