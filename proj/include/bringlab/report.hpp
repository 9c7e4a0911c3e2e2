#pragma once

#include <string>

#include "json.hpp"

namespace bringlab {

using Json = nlohmann::ordered_json;

/// Outcome record of one certification. Failures carry the first
/// counterexample found in `witness`.
struct CertReport {
    std::string name;
    enum class Status { pass, fail, skipped } status = Status::fail;
    long precision_used = 0;
    std::string order_used;
    Json witness = Json::object();
    long millis = 0;

    bool ok() const { return status != Status::fail; }
    static const char* status_str(Status s);
    Json to_json() const;
    static CertReport from_json(const Json& j);
    std::string line() const;
};

}  // namespace bringlab
