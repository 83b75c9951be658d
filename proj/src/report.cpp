#include "forcelab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace forcelab {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const VertexSet& s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

VertexSet set_from(const Json& arr) {
  VertexSet s;
  for (const auto& v : arr) s.insert(v.get<Vertex>());
  return s;
}

Json cert_json(const LeakCertificate& c) {
  return Json{{"leaks", set_json(c.leaks)}, {"stalled", set_json(c.stalled)}};
}

Json claim_json(const ClaimResult& r) {
  Json j;
  j["claim_id"] = r.id;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["status"] = to_string(r.status);
  const ClaimCertificate& c = r.certificate;
  Json cert = Json::object();
  if (c.witness) cert["witness"] = set_json(*c.witness);
  if (c.counterexample) cert["counterexample"] = cert_json(*c.counterexample);
  if (c.cardinality) cert["cardinality"] = *c.cardinality;
  if (c.candidates_tested) cert["candidates_tested"] = *c.candidates_tested;
  if (c.leak_sets_tested) cert["leak_sets_tested"] = *c.leak_sets_tested;
  if (c.bounds) cert["bounds"] = {c.bounds->first, c.bounds->second};
  if (c.containment)
    cert["containment"] = {{"B", set_json(c.containment->first)},
                           {"B_leaky", set_json(c.containment->second)}};
  j["certificate"] = cert.empty() ? Json(nullptr) : cert;
  return j;
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string format_set(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : set) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string to_json(const VertexSet& set) { return set_json(set).dump(); }

std::string to_json(const ForcingTrace& trace, int indent) {
  Json events = Json::array();
  for (const auto& e : trace.events)
    events.push_back({{"forcer", e.forcer}, {"forced", e.forced}});
  Json j{{"initial", set_json(trace.initial)},
         {"leaks", set_json(trace.leaks)},
         {"events", events},
         {"final", set_json(trace.final_set)}};
  return dump(j, indent);
}

std::string to_json(const LeakCertificate& cert, int indent) {
  return dump(cert_json(cert), indent);
}

std::string to_json(const LeakyCheck& check, const ForcingTrace* trace,
                    int indent) {
  Json j;
  j["status"] = check.ok() ? "ok" : "fail";
  if (check.ok())
    j["leak_sets_tested"] = check.stats.leak_sets;
  else
    j["certificate"] = cert_json(*check.certificate);
  if (trace != nullptr) j["trace"] = Json::parse(to_json(*trace, -1));
  return dump(j, indent);
}

std::string to_json(const SolveReport& r, bool include_timing, int indent) {
  Json j;
  j["graph"] = r.graph;
  j["leaks"] = r.leaks;
  j["status"] = r.exact() ? "exact" : "unknown";
  j["z_value"] = r.z_value ? Json(*r.z_value) : Json(nullptr);
  j["witness"] = r.witness ? set_json(*r.witness) : Json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["candidates_tested"] = r.candidates_tested;
  j["leak_sets_tested"] = r.stats.leak_sets;
  j["closures_evaluated"] = r.stats.closures;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return dump(j, indent);
}

std::string to_json(const ContainmentReport& r, int indent) {
  Json j;
  j["leaks"] = r.leaks;
  j["z0"] = r.z0;
  j["z_leaky"] = r.z_leaky;
  j["answer"] = r.answer ? "yes" : "no";
  if (r.witness)
    j["witness_pair"] = {{"B", set_json(r.witness->first)},
                         {"B_leaky", set_json(r.witness->second)}};
  else
    j["witness_pair"] = nullptr;
  j["count0"] = r.count0;
  j["count_leaky"] = r.count_leaky;
  return dump(j, indent);
}

std::string to_json(const ChainReport& r, int indent) {
  auto chain_json = [](const std::vector<VertexSet>& chain) {
    Json arr = Json::array();
    for (const auto& s : chain) arr.push_back(set_json(s));
    return arr;
  };
  Json j;
  j["max_leaks"] = r.max_leaks;
  j["z_values"] = r.z_values;
  j["counts"] = r.counts;
  j["nonstrict_exists"] = r.nonstrict_exists;
  j["nonstrict_chain"] =
      r.nonstrict_exists ? chain_json(r.nonstrict_chain) : Json(nullptr);
  j["strict_exists"] = r.strict_exists;
  j["strict_chain"] =
      r.strict_exists ? chain_json(r.strict_chain) : Json(nullptr);
  j["equal_levels"] = r.equal_levels;
  j["every_level_contains_lower"] = r.every_level_contains_lower;
  return dump(j, indent);
}

std::string to_json(const std::vector<ClaimResult>& results, int indent) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(claim_json(r));
  return dump(arr, indent);
}

LeakCertificate leak_certificate_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  return {set_from(j.at("leaks")), set_from(j.at("stalled"))};
}

ForcingTrace forcing_trace_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  ForcingTrace t;
  t.initial = set_from(j.at("initial"));
  t.leaks = set_from(j.at("leaks"));
  for (const auto& e : j.at("events"))
    t.events.push_back({e.at("forcer").get<Vertex>(),
                        e.at("forced").get<Vertex>()});
  t.final_set = set_from(j.at("final"));
  return t;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  };
  widen(header);
  for (const auto& row : rows) widen(row);

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < row.size() ? row[c] : "";
      out += cell;
      if (c + 1 < width.size()) out += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string to_table(const SolveReport& r) {
  std::vector<std::vector<std::string>> rows = {
      {"graph", r.graph},
      {"leaks", std::to_string(r.leaks)},
      {"status", r.exact() ? "exact" : "unknown"},
      {"z_value", r.z_value ? std::to_string(*r.z_value) : "-"},
      {"witness", r.witness ? format_set(*r.witness) : "-"},
      {"bounds", "[" + std::to_string(r.lower_bound) + ", " +
                     std::to_string(r.upper_bound) + "]"},
      {"candidates_tested", std::to_string(r.candidates_tested)},
      {"leak_sets_tested", std::to_string(r.stats.leak_sets)},
      {"closures_evaluated", std::to_string(r.stats.closures)},
  };
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
  rows.push_back({"elapsed_ms", ms.str()});
  return render_table({"field", "value"}, rows);
}

std::string to_table(const ContainmentReport& r) {
  std::vector<std::vector<std::string>> rows = {
      {"leaks", std::to_string(r.leaks)},
      {"z0", std::to_string(r.z0)},
      {"z_leaky", std::to_string(r.z_leaky)},
      {"answer", r.answer ? "yes" : "no"},
      {"B", r.witness ? format_set(r.witness->first) : "-"},
      {"B_leaky", r.witness ? format_set(r.witness->second) : "-"},
      {"count0", std::to_string(r.count0)},
      {"count_leaky", std::to_string(r.count_leaky)},
  };
  return render_table({"field", "value"}, rows);
}

std::string to_table(const ChainReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t l = 0; l < r.z_values.size(); ++l) {
    rows.push_back({
        std::to_string(l),
        std::to_string(r.z_values[l]),
        std::to_string(r.counts[l]),
        r.nonstrict_exists ? format_set(r.nonstrict_chain[l]) : "-",
        r.strict_exists ? format_set(r.strict_chain[l]) : "-",
        l == 0 ? "-" : (r.every_level_contains_lower[l - 1] ? "yes" : "no"),
    });
  }
  std::string out = render_table(
      {"leaks", "Z", "minimum_sets", "chain (subset)", "chain (proper)",
       "every_set_contains_lower"},
      rows);
  out += "nonstrict chain: ";
  out += r.nonstrict_exists ? "yes" : "no";
  out += "\nstrict chain: ";
  out += r.strict_exists ? "yes" : "no";
  if (!r.equal_levels.empty()) {
    out += " (proper inclusion impossible: Z equal at levels";
    for (auto l : r.equal_levels)
      out += " " + std::to_string(l) + "/" + std::to_string(l + 1);
    out += ")";
  }
  out += "\n";
  return out;
}

std::string to_table(const std::vector<ClaimResult>& results) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    rows.push_back({r.id, to_string(r.status), r.expected, r.computed});
    switch (r.status) {
      case ClaimStatus::kPass: ++pass; break;
      case ClaimStatus::kFail: ++fail; break;
      case ClaimStatus::kSkipped: ++skipped; break;
    }
  }
  std::string out =
      render_table({"claim", "status", "expected", "computed"}, rows);
  out += std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
         std::to_string(skipped) + " skipped\n";
  return out;
}

}  // namespace forcelab
