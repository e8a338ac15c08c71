#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtm/complexity.hpp"

namespace gtm {

// One checked identity: what was compared and what came out.
struct ClaimRecord {
  std::string id;
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimRecord> records;

  bool pass() const;
};

// Extra coverage on top of the pinned windows each suite always runs.
struct VerifyOptions {
  std::vector<int> extra_m;
  std::vector<std::int64_t> extra_n;
  PrefixPolicy policy;
  int jobs = 1;
};

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& opt = {});

std::string verification_report_to_plain(const VerificationReport& rep);
std::string verification_report_to_json(const VerificationReport& rep);
std::string verification_report_to_csv(const VerificationReport& rep);

}  // namespace gtm
