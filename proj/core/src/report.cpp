#include "pcgroups/report.hpp"

#include "json.hpp"

namespace pcgroups {

  char const* to_string(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::expected_fail:
        return "expected_fail";
      case Status::skipped:
        return "skipped";
    }
    return "unknown";
  }

  void CheckReport::fail(std::vector<ExpVec> const& ws, std::string note) {
    status = Status::fail;
    for (auto const& w : ws) {
      add_witness(w);
    }
    if (witnesses.empty()) {
      witnesses.emplace_back();
    }
    if (!note.empty()) {
      notes.push_back(std::move(note));
    }
  }

  std::string reports_to_json(std::string const&              group,
                              std::uint64_t                   p,
                              unsigned                        order_log_p,
                              std::vector<CheckReport> const& reports) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["group"]       = group;
    doc["p"]           = p;
    doc["order_log_p"] = order_log_p;
    ordered_json checks = ordered_json::array();
    for (auto const& r : reports) {
      ordered_json c;
      c["name"]          = r.name;
      ordered_json params = ordered_json::object();
      for (auto const& [k, v] : r.params) {
        std::visit([&](auto const& x) { params[k] = x; }, v);
      }
      c["params"]    = params;
      c["status"]    = to_string(r.status);
      c["witnesses"] = r.witnesses;
      c["tested"]    = r.tested;
      c["ms"]        = r.ms;
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
  }

  std::string reports_to_text(std::string const&              group,
                              std::vector<CheckReport> const& reports) {
    std::string out = "group " + group + "\n";
    for (auto const& r : reports) {
      std::string line = "  " + std::string(to_string(r.status));
      line.resize(16, ' ');
      line += r.name;
      if (!r.params.empty()) {
        line += " (";
        bool first = true;
        for (auto const& [k, v] : r.params) {
          if (!first) {
            line += ", ";
          }
          first = false;
          line += k + "=";
          std::visit(
              [&](auto const& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                             std::string>) {
                  line += x;
                } else {
                  line += std::to_string(x);
                }
              },
              v);
        }
        line += ")";
      }
      line += " tested=" + std::to_string(r.tested);
      out += line + "\n";
      for (auto const& n : r.notes) {
        out += "      " + n + "\n";
      }
      for (auto const& w : r.witnesses) {
        out += "      witness (";
        for (std::size_t i = 0; i < w.size(); ++i) {
          out += (i ? "," : "") + std::to_string(w[i]);
        }
        out += ")\n";
      }
    }
    return out;
  }

}  // namespace pcgroups
