#pragma once

#include <map>
#include <string>
#include <vector>

namespace quintic {
namespace report {

enum class Status { Pass, Fail, Discrepancy, Inconclusive };
std::string status_name(Status s);

// Registry of claims a report entry may reference.  Every anchor is a fixed
// statement of the mathematical fact being checked; entries must use one of
// these ids.
const std::map<std::string, std::string>& claim_registry();
const std::string& claim_anchor(const std::string& id);

struct Entry {
    std::string claim_id;
    std::string anchor;
    Status status = Status::Pass;
    std::string details;
};

struct Report {
    std::string command;
    std::vector<Entry> entries;
    int version = 1;

    void add(const std::string& claim_id, Status st, const std::string& details);
    int passes() const;
    int fails() const;
    int discrepancies() const;
    int inconclusive() const;

    // exit status: 0 when no failure; discrepancies fail only in strict mode
    int exit_code(bool strict) const;

    std::string to_text() const;
    std::string to_json() const;  // stable key order
};

}  // namespace report
}  // namespace quintic
