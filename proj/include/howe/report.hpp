#pragma once

// Machine-readable run reports. A report is a config echo, an ordered list
// of entries, and a computed summary. Every value is carried as a string
// (exact scalars verbatim, floats pre-formatted), which keeps the JSON and
// CSV writers structurally identical and makes output for a fixed
// configuration byte-reproducible.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace howe {

inline constexpr const char* kVersion = "0.1.0";

enum class EntryStatus { Pass, Fail, Skipped };

inline const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Pass: return "pass";
    case EntryStatus::Fail: return "fail";
    default: return "skipped";
  }
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct ReportEntry {
  std::string id;      // unique within the report
  std::string anchor;  // the algebraic statement or quantity the entry reports
  EntryStatus status = EntryStatus::Pass;
  std::string note;             // skip reason or failure diagnostic
  long first_fail_degree = -1;  // -1 when not applicable
  KeyValues data;

  ReportEntry& put(std::string key, std::string value) {
    data.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct ReportSummary {
  long total = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
};

struct Report {
  KeyValues config;
  std::vector<ReportEntry> entries;

  ReportEntry& add(std::string id, std::string anchor) {
    entries.push_back(ReportEntry{std::move(id), std::move(anchor),
                                  EntryStatus::Pass, "", -1, {}});
    return entries.back();
  }

  ReportSummary summary() const {
    ReportSummary s;
    s.total = static_cast<long>(entries.size());
    for (const ReportEntry& e : entries) {
      switch (e.status) {
        case EntryStatus::Pass: ++s.passed; break;
        case EntryStatus::Fail: ++s.failed; break;
        case EntryStatus::Skipped: ++s.skipped; break;
      }
    }
    return s;
  }

  bool all_pass() const { return summary().failed == 0; }
};

// Process exit code contract: 0 when no entry failed, 1 otherwise.
inline int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

// Shortest round-trippable decimal form, stable for a fixed double value.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

namespace detail_report {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

inline void json_pair(std::string& out, const char* indent, const std::string& key,
                      const std::string& value, bool last) {
  out += indent;
  out += '"';
  out += json_escape(key);
  out += "\": \"";
  out += json_escape(value);
  out += '"';
  if (!last) out += ',';
  out += '\n';
}

inline std::string csv_quote(const std::string& s) {
  bool needs = false;
  for (char ch : s)
    if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r') { needs = true; break; }
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

inline void csv_row(std::string& out, const std::string& section, const std::string& id,
                    const std::string& key, const std::string& value) {
  out += csv_quote(section);
  out += ',';
  out += csv_quote(id);
  out += ',';
  out += csv_quote(key);
  out += ',';
  out += csv_quote(value);
  out += '\n';
}

// The fields an entry exposes, in serialization order, with the same
// inclusion rules for both formats: note only when nonempty,
// first_fail_degree only when set.
inline KeyValues entry_fields(const ReportEntry& e) {
  KeyValues kv;
  kv.emplace_back("anchor", e.anchor);
  kv.emplace_back("status", status_name(e.status));
  if (!e.note.empty()) kv.emplace_back("note", e.note);
  if (e.first_fail_degree >= 0)
    kv.emplace_back("first_fail_degree", std::to_string(e.first_fail_degree));
  for (const auto& [k, v] : e.data) kv.emplace_back(k, v);
  return kv;
}

inline KeyValues summary_fields(const Report& r) {
  ReportSummary s = r.summary();
  KeyValues kv;
  kv.emplace_back("total", std::to_string(s.total));
  kv.emplace_back("passed", std::to_string(s.passed));
  kv.emplace_back("failed", std::to_string(s.failed));
  kv.emplace_back("skipped", std::to_string(s.skipped));
  kv.emplace_back("overall", s.failed == 0 ? "pass" : "fail");
  return kv;
}

}  // namespace detail_report

// JSON document with top-level keys config, entries, summary. All leaf
// values are strings; see the README for the schema.
inline std::string to_json(const Report& r) {
  using namespace detail_report;
  std::string out = "{\n  \"config\": {\n";
  for (std::size_t i = 0; i < r.config.size(); ++i)
    json_pair(out, "    ", r.config[i].first, r.config[i].second, i + 1 == r.config.size());
  out += "  },\n  \"entries\": [\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const ReportEntry& e = r.entries[i];
    out += "    {\n";
    KeyValues kv = entry_fields(e);
    json_pair(out, "      ", "id", e.id, false);
    for (std::size_t j = 0; j < kv.size(); ++j)
      json_pair(out, "      ", kv[j].first, kv[j].second, j + 1 == kv.size());
    out += (i + 1 == r.entries.size()) ? "    }\n" : "    },\n";
  }
  out += "  ],\n  \"summary\": {\n";
  KeyValues sm = summary_fields(r);
  for (std::size_t i = 0; i < sm.size(); ++i)
    json_pair(out, "    ", sm[i].first, sm[i].second, i + 1 == sm.size());
  out += "  }\n}\n";
  return out;
}

// Flat CSV with columns section,id,key,value carrying exactly the data of
// the JSON form: config rows, per-entry field rows in order, summary rows.
inline std::string to_csv(const Report& r) {
  using namespace detail_report;
  std::string out = "section,id,key,value\n";
  for (const auto& [k, v] : r.config) csv_row(out, "config", "", k, v);
  for (const ReportEntry& e : r.entries)
    for (const auto& [k, v] : entry_fields(e)) csv_row(out, "entry", e.id, k, v);
  for (const auto& [k, v] : detail_report::summary_fields(r)) csv_row(out, "summary", "", k, v);
  return out;
}

}  // namespace howe
