#include "treealign/log.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace treealign {

std::string trace_to_string(const Trace& trace) {
  std::string out = "<";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out += ',';
    out += trace[i];
  }
  out += '>';
  return out;
}

std::uint64_t EventLog::total_traces() const {
  std::uint64_t total = 0;
  for (const auto& v : variants) total += v.count;
  return total;
}

void EventLog::add(const Trace& trace, std::uint64_t count) {
  for (auto& v : variants) {
    if (v.trace == trace) {
      v.count += count;
      return;
    }
  }
  variants.push_back({trace, count});
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

bool valid_timestamp(const std::string& s) {
  // "YYYY-MM-DD HH:MM", optionally with ":SS".
  if (s.size() != 16 && s.size() != 19) return false;
  const std::string pattern = s.size() == 16 ? "dddd-dd-dd dd:dd" : "dddd-dd-dd dd:dd:dd";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == 'd') {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    } else if (s[i] != pattern[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

EventLog load_csv(const std::string& path, const std::string& case_column,
                  const std::string& activity_column,
                  const std::optional<std::string>& timestamp_column) {
  std::ifstream in(path);
  if (!in) throw LogFormatError("cannot open CSV file: " + path);

  std::string line;
  if (!std::getline(in, line)) return {};  // empty file -> empty log
  const auto header = split_csv_row(line);

  auto column_index = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw LogFormatError("missing column '" + name + "' in " + path);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t case_idx = column_index(case_column);
  const std::size_t act_idx = column_index(activity_column);
  std::optional<std::size_t> ts_idx;
  if (timestamp_column) ts_idx = column_index(*timestamp_column);

  struct Event {
    std::string activity;
    std::string timestamp;
  };
  std::vector<std::string> case_order;
  std::map<std::string, std::vector<Event>> cases;

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_row(line);
    const std::size_t needed = std::max({case_idx, act_idx, ts_idx.value_or(0)});
    if (fields.size() <= needed) {
      throw LogFormatError("row " + std::to_string(row) + ": too few columns in " + path);
    }
    Event ev;
    ev.activity = fields[act_idx];
    if (ts_idx) {
      ev.timestamp = fields[*ts_idx];
      if (!valid_timestamp(ev.timestamp)) {
        throw LogFormatError("row " + std::to_string(row) + ": unparseable timestamp '" +
                             ev.timestamp + "'");
      }
    }
    const std::string& case_id = fields[case_idx];
    auto [it, inserted] = cases.try_emplace(case_id);
    if (inserted) case_order.push_back(case_id);
    it->second.push_back(std::move(ev));
  }

  EventLog log;
  for (const auto& case_id : case_order) {
    auto& events = cases[case_id];
    if (ts_idx) {
      // Lexicographic comparison is chronological for this format; stable sort
      // keeps file order for equal timestamps.
      std::stable_sort(events.begin(), events.end(),
                       [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    }
    Trace trace;
    trace.reserve(events.size());
    for (auto& ev : events) trace.push_back(std::move(ev.activity));
    log.add(trace);
  }
  return log;
}

EventLog load_variants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LogFormatError("cannot open variants file: " + path);
  EventLog log;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto sep = line.find(';');
    if (sep == std::string::npos) {
      throw LogFormatError("line " + std::to_string(lineno) + ": expected 'count;activities'");
    }
    std::uint64_t count = 0;
    try {
      std::size_t consumed = 0;
      count = std::stoull(line.substr(0, sep), &consumed);
      if (consumed != sep) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw LogFormatError("line " + std::to_string(lineno) + ": invalid count");
    }
    if (count < 1) {
      throw LogFormatError("line " + std::to_string(lineno) + ": count must be >= 1");
    }
    Trace trace;
    const std::string rest = line.substr(sep + 1);
    if (!rest.empty()) {
      std::stringstream ss(rest);
      std::string activity;
      while (std::getline(ss, activity, ',')) trace.push_back(activity);
    }
    log.add(trace, count);
  }
  return log;
}

void save_variants(const EventLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LogFormatError("cannot write variants file: " + path);
  for (const auto& v : log.variants) {
    out << v.count << ';';
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
      if (i > 0) out << ',';
      out << v.trace[i];
    }
    out << '\n';
  }
}

}  // namespace treealign
