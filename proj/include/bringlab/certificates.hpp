#pragma once

#include <vector>

#include "bringlab/errors.hpp"
#include "bringlab/report.hpp"

namespace bringlab {

struct RunConfig {
    long precision = 120;          // >= 10
    std::string order = "grevlex";  // or "lex"
    std::string jmap_file;          // optional cross-check input
    std::string data_dir;           // curve records; defaults to the build-time path
    bool json = false;
    bool online = false;
    long pair_cap = 200000;
    long time_cap_seconds = 0;      // 0 = none
    int workers = 1;
    bool precision_from_env = false;

    static RunConfig from_environment();
    std::string curves_path() const;
};

/// Certificate names accepted by run().
const std::vector<std::string>& certificate_names();

/// Runs one named certification (or "all"). Unknown names throw
/// UnknownCertificate. "all" aggregates every certificate, ordered by name,
/// optionally executing them on `workers` threads.
std::vector<CertReport> run_certificates(const std::string& name, const RunConfig& cfg);

/// Advisory remote comparison of the level-50 q-expansions; network failures
/// surface as SKIPPED, never as suite failure.
CertReport online_crosscheck(long prec, bool enabled);

}  // namespace bringlab
