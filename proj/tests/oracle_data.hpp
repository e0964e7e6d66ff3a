#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sflow/sflow.hpp"

namespace oracle {

struct Entry {
  sflow::Weight nu;
  sflow::Rational a_ns;
  sflow::Weight nu_r;
  sflow::Rational ell_r;
  sflow::Rational a_r;
};

struct Case {
  sflow::Family family;
  sflow::Rational k;
  sflow::RhoChoice rho;
  std::vector<Entry> weights;
};

/// Reference values produced by tests/oracle/derived_values.py.
inline std::vector<Case> load_derived() {
  std::ifstream in(std::string(SFLOW_ORACLE_DIR) + "/derived_values.json");
  const auto doc = nlohmann::json::parse(in);
  std::vector<Case> out;
  for (const auto& c : doc) {
    Case oc{sflow::parse_family(c["family"].get<std::string>()), sflow::Rational::parse(c["k"].get<std::string>()),
            sflow::parse_rho(c["rho"].get<std::string>()), {}};
    for (const auto& e : c["weights"]) {
      oc.weights.push_back({sflow::parse_weight(oc.family, e["nu"].get<std::string>()),
                            sflow::Rational::parse(e["a_ns"].get<std::string>()),
                            sflow::parse_weight(oc.family, e["nu_r"].get<std::string>()),
                            sflow::Rational::parse(e["ell_r"].get<std::string>()),
                            sflow::Rational::parse(e["a_r"].get<std::string>())});
    }
    out.push_back(std::move(oc));
  }
  return out;
}

}  // namespace oracle
