#include "pcgroups/consistency.hpp"

#include <algorithm>

namespace pcgroups {

  CheckReport check_consistency(GroupPtr const& group,
                                std::size_t     max_failures) {
    Group const& g = *group;
    std::size_t  n = g.num_gens();
    CheckReport  report;
    report.name = "consistency";
    max_failures = std::max<std::size_t>(max_failures, 1);
    report.add_param("max_failures", static_cast<std::int64_t>(max_failures));

    std::size_t failures = 0;
    auto        check    = [&](char kind, std::size_t k, std::size_t j,
                         std::size_t i, ExpVec const& lhs, ExpVec const& rhs) {
      ++report.tested;
      if (lhs == rhs) {
        return;
      }
      if (++failures > max_failures) {
        report.status = Status::fail;
        return;
      }
      std::string where = std::string("overlap (") + kind + ")";
      auto const& P     = g.presentation();
      if (kind == 'a') {
        where += " " + P.name(k) + "," + P.name(j) + "," + P.name(i);
      } else if (kind == 'd') {
        where += " " + P.name(i);
      } else {
        where += " " + P.name(j) + "," + P.name(i);
      }
      report.fail({lhs, rhs}, where + ": " + g.render(lhs)
                                  + " != " + g.render(rhs));
    };

    auto gen       = [&](std::size_t i) { return g.generator(i); };
    auto top_power = [&](std::size_t i) {
      return g.normal_form(g.presentation().power_relation(i));
    };
    auto almost = [&](std::size_t i) {
      ExpVec x = g.identity();
      x[i]     = static_cast<Exponent>(g.relative_order(i) - 1);
      return x;
    };

    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          ExpVec lhs = g.multiply(gen(k), g.multiply(gen(j), gen(i)));
          ExpVec rhs = g.multiply(g.multiply(gen(k), gen(j)), gen(i));
          check('a', k, j, i, lhs, rhs);
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        ExpVec lhs = g.multiply(top_power(j), gen(i));
        ExpVec rhs = g.multiply(almost(j), g.multiply(gen(j), gen(i)));
        check('b', 0, j, i, lhs, rhs);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        ExpVec lhs = g.multiply(gen(j), top_power(i));
        ExpVec rhs = g.multiply(g.multiply(gen(j), gen(i)), almost(i));
        check('c', 0, j, i, lhs, rhs);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      ExpVec lhs = g.multiply(gen(i), top_power(i));
      ExpVec rhs = g.multiply(top_power(i), gen(i));
      check('d', 0, 0, i, lhs, rhs);
    }
    report.add_param("failures", static_cast<std::int64_t>(failures));
    return report;
  }

  CheckReport check_consistency(Presentation const& P,
                                std::size_t         max_failures) {
    return check_consistency(Group::make(P), max_failures);
  }

}  // namespace pcgroups
