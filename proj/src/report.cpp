#include "crossact/report.hpp"

#include <sstream>

namespace crossact {

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) j["witness"] = c.witness;
        arr.push_back(j);
    }
    return {{"checks", arr}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass  " : "FAIL  ") << c.name;
        if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace crossact
