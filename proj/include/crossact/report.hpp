#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace crossact {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing instance
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void append(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool passed(const std::string& name) const {
        const Check* c = find(name);
        return c && c->pass;
    }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Accumulates the first failure of one named check.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) : name_(std::move(name)) {}
    bool ok() const { return pass_; }
    void fail(const std::string& witness) {
        if (pass_) {
            pass_ = false;
            witness_ = witness;
        }
    }
    void expect(bool cond, const std::string& witness) {
        if (!cond) fail(witness);
    }
    void into(Report& r) const { r.add(name_, pass_, witness_); }

private:
    std::string name_;
    bool pass_ = true;
    std::string witness_;
};

}  // namespace crossact
