#include "zigzag/model/spec_io.hpp"

#include "zigzag/common/error.hpp"

namespace zigzag {

using nlohmann::json;

json spec_to_json(const LadderSpec& spec) {
  const auto& c = spec.couplings;
  return json{{"n_rungs", spec.n_rungs},
              {"spin", spec.spin.str()},
              {"boundary", to_string(spec.boundary)},
              {"couplings", {{"J", c.J}, {"Jp", c.Jp}, {"J2", c.J2}, {"J2p", c.J2p}}}};
}

namespace {

std::vector<double> coupling_array(const json& node, const char* key, int n) {
  if (!node.contains(key)) throw InvalidInput(std::string("missing couplings.") + key);
  const auto& v = node.at(key);
  if (v.is_number()) return std::vector<double>(static_cast<std::size_t>(n), v.get<double>());
  if (!v.is_array()) throw InvalidInput(std::string("couplings.") + key + " must be a number or an array");
  return v.get<std::vector<double>>();
}

}  // namespace

LadderSpec spec_from_json(const json& doc, const BuildOptions& opts) {
  try {
    int n = doc.at("n_rungs").get<int>();
    // spin given either as "spin": "3/2" (or a number) or as "twice_s": 3
    int twice_s = 0;
    if (doc.contains("spin")) {
      const auto& s = doc.at("spin");
      twice_s = SpinValue::parse(s.is_string() ? s.get<std::string>() : s.dump()).twice_s;
    } else {
      twice_s = doc.at("twice_s").get<int>();
    }
    Boundary b = parse_boundary(doc.value("boundary", std::string("periodic")));
    const auto& c = doc.at("couplings");
    CouplingPattern pat{coupling_array(c, "J", n), coupling_array(c, "Jp", n), coupling_array(c, "J2", n),
                        coupling_array(c, "J2p", n)};
    return build_spec(n, SpinValue::checked(twice_s), std::move(pat), b, opts);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed spec document: ") + e.what());
  }
}

}  // namespace zigzag
