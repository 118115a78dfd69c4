#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellsum/power_sum.hpp"
#include "pellsum/report.hpp"

namespace pellsum {

enum class Suite { all, core, identities, sums, examples };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

// Grid limits for run_verify. Defaults are the full acceptance grids.
struct VerifyBounds {
  long three_way_n = 200;
  long pell_equation_n = 100;
  long symbolic_n = 40;
  long recurrence_m = 10;
  long recurrence_n = 50;
  long symbolic_recurrence_m = 4;
  long symbolic_recurrence_n = 10;
  long linearize_ell = 9;
  long linearize_n = 30;
  long symbolic_linearize_ell = 5;
  long symbolic_linearize_n = 6;
  long laurent_n = 12;
  long sums_m = 4;
  long sums_ell = 7;
  long sums_n = 60;
  // Reduced grids for a fast smoke run.
  static VerifyBounds quick();
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckRecord> records;

  bool failed() const;
  // 0 iff no record failed; discrepancy records count as passes.
  int exit_status() const { return failed() ? 1 : 0; }
};

// Runs every check in the suite. Independent cells run concurrently; records
// are always returned in the same order.
VerifyReport run_verify(Suite suite, const VerifyBounds& bounds = {});

// Individual check families, exposed for the acceptance suite.
std::vector<CheckRecord> verify_core(const VerifyBounds& bounds);
std::vector<CheckRecord> verify_identities(const VerifyBounds& bounds);
std::vector<CheckRecord> verify_sums(const VerifyBounds& bounds);

struct BenchRecord {
  std::string R;
  long m = 0;
  long ell = 0;
  long n = 0;
  std::int64_t closed_us = 0;
  std::int64_t brute_us = 0;
  std::uint64_t closed_mults = 0;
  std::uint64_t brute_mults = 0;
  bool equal = false;
};

// Times both routes for every request. Throws Error if any pair disagrees.
std::vector<BenchRecord> run_bench(const std::vector<PowerSumRequest<Rational>>& grid);

std::vector<PowerSumRequest<Rational>> default_bench_grid();

}  // namespace pellsum
