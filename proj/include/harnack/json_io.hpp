#pragma once

#include <string>

#include "json.hpp"

#include "harnack/cayley.hpp"
#include "harnack/complex_matrix.hpp"
#include "harnack/conjectures.hpp"
#include "harnack/harnack.hpp"
#include "harnack/report.hpp"

namespace harnack {

/// Keys keep insertion order so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Matrix wire format: {"n": int, "re": [[...]], "im": [[...]]},
/// row-major; "im" omitted means a real matrix.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j); // throws ParseError

/// Reads and validates a matrix file. Throws ParseError with the path in
/// the message.
ComplexMatrix load_matrix_file(const std::string& path);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

Json tung_report_to_json(const TungReport& r);
Json bound_report_to_json(const BoundReport& r);
Json identity_residuals_to_json(const IdentityResiduals& r);
Json multi_matrix_report_to_json(const MultiMatrixReport& r);
Json cayley_report_to_json(const CayleyReport& r);
Json conjecture_record_to_json(const ConjectureRecord& r);
Json search_config_to_json(const SearchConfig& c);
Json search_summary_to_json(const SearchSummary& s);

Json check_result_to_json(const CheckResult& c);
CheckResult check_result_from_json(const Json& j);
Json run_report_to_json(const RunReport& r);
RunReport run_report_from_json(const Json& j);

} // namespace harnack
