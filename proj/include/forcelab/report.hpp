#pragma once

// JSON and text renderings of engine, solver and verification results.
// JSON keys follow the struct field names; vertex sets are sorted id arrays.

#include <string>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/solver.hpp"
#include "forcelab/verify.hpp"

namespace forcelab {

std::string to_json(const VertexSet& set);
std::string to_json(const ForcingTrace& trace, int indent = 2);
std::string to_json(const LeakCertificate& cert, int indent = 2);
/// {"status": "ok"|"fail", "leak_sets_tested" | "certificate", "trace"?}
std::string to_json(const LeakyCheck& check, const ForcingTrace* trace,
                    int indent = 2);
/// `elapsed_ms` is emitted only with include_timing.
std::string to_json(const SolveReport& report, bool include_timing = true,
                    int indent = 2);
std::string to_json(const ContainmentReport& report, int indent = 2);
std::string to_json(const ChainReport& report, int indent = 2);
std::string to_json(const std::vector<ClaimResult>& results, int indent = 2);

/// Parses the JSON forms back; used to replay certificates.
LeakCertificate leak_certificate_from_json(const std::string& text);
ForcingTrace forcing_trace_from_json(const std::string& text);

/// Columns padded to their widest cell, separated by two spaces.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

std::string to_table(const SolveReport& report);
std::string to_table(const ContainmentReport& report);
std::string to_table(const ChainReport& report);
std::string to_table(const std::vector<ClaimResult>& results);

/// "{0, 3, 5}"
std::string format_set(const VertexSet& set);

}  // namespace forcelab
