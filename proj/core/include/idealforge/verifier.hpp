#pragma once

// Runs registry checks and produces machine-readable reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealforge/registry.hpp"

namespace idealforge {

enum class Status { Pass, Fail, Skipped, Refused };

std::string to_string(Status s);

struct Report {
  std::string check_id;
  int n = 0;
  int d = 0;
  std::string field;
  Status status = Status::Skipped;
  std::optional<std::string> witness;
  std::optional<int> max_coeff_degree;
  double elapsed_ms = 0;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  FamilyParams params;
  /// Defaults to default_family_field(params).
  FieldPtr field;
  bool literal = false;
  bool force = false;
  std::uint64_t seed = 7;
  int trials = 200;
  /// Concurrent checks; 0 picks the hardware concurrency.
  unsigned width = 0;
};

/// (2,2), (2,3) and (3,2) are within the default budget.
bool within_budget(const FamilyParams& p);

Report verify_fact(const std::string& fact_id, int trials, std::uint64_t seed);
Report verify_identity(const std::string& check_id, const VerifyOptions& opts);
Report verify_membership(const VerifyOptions& opts, bool track_certificate = true);
Report verify_prime_list(const VerifyOptions& opts);
Report verify_count(const VerifyOptions& opts);

/// Runs one registered check of any kind.
Report run_check(const CheckDef& check, const VerifyOptions& opts);

/// Runs the named checks (all when `ids` is empty and `all` is set),
/// concurrently along the dependency DAG. A Fail upstream turns every
/// dependent check into Skipped. Reports come back in registry order.
std::vector<Report> run_suite(const std::vector<std::string>& ids, const VerifyOptions& opts);

/// JSON array of reports; with `timings` false, elapsed_ms is omitted.
std::string reports_to_json(const std::vector<Report>& reports, bool timings = true);

/// Exit status for a report list: 0 unless some report is Fail.
int exit_code(const std::vector<Report>& reports);

/// Searches h with I : h = P by repeated colon with elements of (J : P) \ J.
std::optional<Polynomial> colon_witness(const Ideal& i, const Ideal& p, int max_steps = 8);

}  // namespace idealforge
