#include "bringlab/report.hpp"

#include <sstream>

namespace bringlab {

const char* CertReport::status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

Json CertReport::to_json() const {
    Json j;
    j["name"] = name;
    j["status"] = status_str(status);
    j["precision_used"] = precision_used;
    j["order_used"] = order_used;
    j["witness"] = witness;
    j["millis"] = millis;
    return j;
}

CertReport CertReport::from_json(const Json& j) {
    CertReport r;
    r.name = j.at("name").get<std::string>();
    std::string st = j.at("status").get<std::string>();
    r.status = st == "pass" ? Status::pass : (st == "skipped" ? Status::skipped : Status::fail);
    r.precision_used = j.at("precision_used").get<long>();
    r.order_used = j.at("order_used").get<std::string>();
    r.witness = j.at("witness");
    r.millis = j.at("millis").get<long>();
    return r;
}

std::string CertReport::line() const {
    std::ostringstream os;
    os << "[" << (status == Status::pass ? "PASS" : status == Status::skipped ? "SKIP" : "FAIL")
       << "] " << name << " (prec=" << precision_used;
    if (!order_used.empty()) os << ", order=" << order_used;
    os << ", " << millis << " ms)";
    return os.str();
}

}  // namespace bringlab
