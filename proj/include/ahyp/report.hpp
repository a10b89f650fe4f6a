#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ahyp/catalog.hpp"
#include "ahyp/criteria.hpp"
#include "ahyp/obstruction.hpp"

namespace ahyp {

/// Machine-readable reports. Every report starts with the keys
/// command, inputs, verdict, checks, witnesses (see docs/report.schema.json);
/// rationals are written as "p/q" strings, Weyl words as 1-based indices.
using Json = nlohmann::ordered_json;

Json info_report(const std::string& text, const ReductiveDescriptor& desc);
Json table1_report(int k_max);
Json catalog_proper_report(const std::string& g_text, const std::string& h_text,
                           const std::string& l_text, const ReductiveDescriptor& g,
                           const ReductiveDescriptor& h, const ReductiveDescriptor& l);
Json embedded_proper_report(const RootSystem& system, const std::string& ah_path,
                            const std::string& al_path, std::uint64_t cap, const Subspace& a_h,
                            const Subspace& a_l, const EmbeddedVerdict& verdict);
Json standard_form_report(const std::string& g_text, const std::string& h_text,
                          const StandardFormVerdict& verdict);

Json to_json(const RationalVector& v);
Json to_json(const Matrix& m);
Json to_json(const CandidateReport& c);

/// Canonical serialization: two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace ahyp
