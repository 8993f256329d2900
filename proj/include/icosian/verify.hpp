#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace icosian {

/// One comparison of an expected value against a computed one. `source`
/// says where the expectation comes from: "printed" (a published value),
/// "derived" (an independent count or brute-force oracle) or "identity".
/// A note starting with "reference-flag:" marks a published statement the
/// computation contradicts; such checks record the discrepancy and pass.
struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;
  std::string source;
};

struct Certificate {
  std::string suite;
  std::vector<Check> checks;

  bool overall() const;
  std::size_t flags() const;
};

/// table1, e8, groups, snub, dual, appendix.
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws BadParameter on an
/// unknown name.
std::vector<Certificate> run_suite(const std::string &name);

nlohmann::json to_json(const Certificate &c);

} // namespace icosian
