// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mixopt/errors.hpp"

namespace mixopt {

const char* const kTraceCsvHeader =
    "run_id,method,stage,iter,f_gap,grad_x_calls,grad_y_calls,hess_y_calls,"
    "delta,eps_tilde";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
  os << kTraceCsvHeader << '\n';
  for (const TraceRow& r : rows) {
    os << r.run_id << ',' << r.method << ',' << r.stage << ',' << r.iter << ','
       << format_double(r.f_gap) << ',' << r.grad_x_calls << ','
       << r.grad_y_calls << ',' << r.hess_y_calls << ','
       << format_double(r.delta) << ',' << format_double(r.eps_tilde) << '\n';
  }
}

std::vector<TraceRow> read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTraceCsvHeader) {
    throw ConfigError("trace CSV: missing or unexpected header row");
  }
  std::vector<TraceRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    TraceRow r;
    auto next = [&](const char* col) {
      if (!std::getline(ls, tok, ',')) {
        throw ConfigError(std::string("trace CSV: missing column ") + col);
      }
      return tok;
    };
    r.run_id = next("run_id");
    r.method = next("method");
    r.stage = std::stoi(next("stage"));
    r.iter = std::stol(next("iter"));
    r.f_gap = std::stod(next("f_gap"));
    r.grad_x_calls = std::stoull(next("grad_x_calls"));
    r.grad_y_calls = std::stoull(next("grad_y_calls"));
    r.hess_y_calls = std::stoull(next("hess_y_calls"));
    r.delta = std::stod(next("delta"));
    r.eps_tilde = std::stod(next("eps_tilde"));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace mixopt
