#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcgroups/collector.hpp"

namespace pcgroups {

  enum class Status { pass, fail, expected_fail, skipped };

  char const* to_string(Status s) noexcept;

  using ParamValue = std::variant<std::int64_t, std::string>;

  // Outcome of one verification. Witnesses are exponent vectors; a failing
  // report always carries at least one.
  struct CheckReport {
    std::string                                      name;
    std::vector<std::pair<std::string, ParamValue>>  params;
    Status                                           status = Status::pass;
    std::vector<std::vector<std::int64_t>>           witnesses;
    std::uint64_t                                    tested = 0;
    std::uint64_t                                    ms     = 0;
    // Human-readable detail for text output; not part of the JSON schema.
    std::vector<std::string>                         notes;
    // Set when the check stopped on a ResourceLimit.
    bool                                             resource_limited = false;

    void add_param(std::string key, ParamValue value) {
      params.emplace_back(std::move(key), std::move(value));
    }
    void add_witness(ExpVec const& x) {
      witnesses.emplace_back(x.begin(), x.end());
    }
    // Marks the report failed, recording the witnesses.
    void fail(std::vector<ExpVec> const& ws, std::string note = {});
  };

  // {"group", "p", "order_log_p", "checks": [...]}, keys in that order.
  std::string reports_to_json(std::string const&              group,
                              std::uint64_t                   p,
                              unsigned                        order_log_p,
                              std::vector<CheckReport> const& reports);

  std::string reports_to_text(std::string const&              group,
                              std::vector<CheckReport> const& reports);

}  // namespace pcgroups
