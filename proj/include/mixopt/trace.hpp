// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mixopt {

// One convergence record. The column set is fixed; the experiment CSVs are
// written exactly in this order.
struct TraceRow {
  std::string run_id;
  std::string method;
  int stage = 0;
  long iter = 0;
  double f_gap = 0.0;
  std::uint64_t grad_x_calls = 0;
  std::uint64_t grad_y_calls = 0;
  std::uint64_t hess_y_calls = 0;
  double delta = 0.0;
  double eps_tilde = 0.0;
};

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void row(const TraceRow& r) = 0;
};

class TraceBuffer final : public TraceSink {
 public:
  void row(const TraceRow& r) override { rows_.push_back(r); }
  const std::vector<TraceRow>& rows() const { return rows_; }
  void clear() { rows_.clear(); }

 private:
  std::vector<TraceRow> rows_;
};

extern const char* const kTraceCsvHeader;

std::string format_double(double v);
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);
std::vector<TraceRow> read_trace_csv(std::istream& is);

}  // namespace mixopt
