#include "doctest.h"

#include "bringlab/certificates.hpp"

using namespace bringlab;

TEST_CASE("report json round trip") {
    CertReport r;
    r.name = "demo";
    r.status = CertReport::Status::pass;
    r.precision_used = 120;
    r.order_used = "grevlex";
    r.witness["k"] = 3;
    r.millis = 17;
    CertReport back = CertReport::from_json(r.to_json());
    CHECK(back.name == r.name);
    CHECK(back.status == r.status);
    CHECK(back.precision_used == r.precision_used);
    CHECK(back.order_used == r.order_used);
    CHECK(back.witness == r.witness);
    CHECK(back.millis == r.millis);
}

TEST_CASE("unknown certificate") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_certificates("no-such-cert", cfg), UnknownCertificate);
    CHECK_THROWS_AS([] {
        RunConfig c;
        c.precision = 5;
        return run_certificates("theta-point", c);
    }(), Error);
}

TEST_CASE("offline crosscheck is skipped, never failed") {
    CertReport r = online_crosscheck(30, false);
    CHECK(r.status == CertReport::Status::skipped);
    CHECK(r.ok());
}

TEST_CASE("deterministic reports modulo timing") {
    RunConfig cfg;
    cfg.precision = 40;
    auto a = run_certificates("theta-point", cfg);
    auto b = run_certificates("theta-point", cfg);
    REQUIRE(a.size() == 1);
    Json ja = a[0].to_json(), jb = b[0].to_json();
    ja.erase("millis");
    jb.erase("millis");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("forced under-precision fails at least one certificate") {
    RunConfig cfg;
    cfg.precision = 10;
    auto reports = run_certificates("canonical-embedding", cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == CertReport::Status::fail);
}
