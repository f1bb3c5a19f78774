#pragma once

#include <ostream>
#include <string>

#include "sj/extended_scalar.hpp"
#include "sj/partition.hpp"

namespace sj {

enum class JobCommand { ComputeSJ, ComputeSI, ComputeSch, Verify, Table };
enum class OutputFormat { Text, Json };

struct JobSpec {
  JobCommand command = JobCommand::ComputeSJ;
  int n = 1;
  Partition lambda;
  ExtendedScalar t = ExtendedScalar::infinity();
  OutputFormat format = OutputFormat::Text;
  std::string suite;           // verify only
  int max_size = 6;            // verify/table
  unsigned long seed = 20240901;
};

// Executes the job, writing the document to `out` and diagnostics to `err`.
// Exit codes: 0 success, 1 verification failure or invalid request,
// 2 degenerate-parameter exhaustion.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace sj
