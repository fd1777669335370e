#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treealign/trace.hpp"

namespace treealign {

struct Variant {
  Trace trace;
  std::uint64_t count{1};
};

// Multiset of traces, deduplicated into variants with counts. Immutable once
// loaded; safe to share across threads.
struct EventLog {
  std::vector<Variant> variants;

  std::uint64_t total_traces() const;
  void add(const Trace& trace, std::uint64_t count = 1);
};

class LogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loads a CSV with a header row. Events are grouped by the case column and,
// if a timestamp column is given, sorted by timestamp (format
// "YYYY-MM-DD HH:MM"); ties and the no-timestamp case keep file order.
// Identical activity sequences are merged into one variant.
EventLog load_csv(const std::string& path, const std::string& case_column,
                  const std::string& activity_column,
                  const std::optional<std::string>& timestamp_column = std::nullopt);

// Line format: "count;a1,a2,...,an". Empty lines are skipped; a line with an
// empty activity list denotes the empty trace.
EventLog load_variants(const std::string& path);

void save_variants(const EventLog& log, const std::string& path);

}  // namespace treealign
