// curvelab: exact certification runner for the Bring-curve toolkit.
//
//   curvelab run <certificate> [flags]     run one certificate or "all"
//   curvelab list                          list certificate names
//
// Exit code 0 iff every executed certificate passes or is skipped.

#include <iostream>

#include "CLI11.hpp"

#include "bringlab/certificates.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact certification toolkit for the Bring-curve models"};
    app.require_subcommand(1);

    bringlab::RunConfig cfg = bringlab::RunConfig::from_environment();
    std::string cert;

    CLI::App* run = app.add_subcommand("run", "run a named certificate (or 'all')");
    run->add_option("certificate", cert, "certificate name")->required();
    run->add_option("--prec", cfg.precision, "working series precision (default 120)");
    run->add_option("--order", cfg.order, "monomial order: grevlex|lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    run->add_option("--jmap-file", cfg.jmap_file, "cross-check file with A = ..., B = ... lines");
    run->add_option("--data-dir", cfg.data_dir, "directory with curves.txt");
    run->add_flag("--json", cfg.json, "emit a JSON report array");
    run->add_flag("--online", cfg.online, "enable the remote q-expansion cross-check");
    run->add_option("--pair-cap", cfg.pair_cap, "Buchberger S-pair cap");
    run->add_option("--time-cap", cfg.time_cap_seconds, "advisory time cap in seconds");
    run->add_option("--workers", cfg.workers, "concurrent certificates for 'all'");

    CLI::App* list = app.add_subcommand("list", "list certificate names");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const auto& n : bringlab::certificate_names()) std::cout << n << "\n";
        std::cout << "all\n";
        return 0;
    }

    try {
        std::vector<bringlab::CertReport> reports = bringlab::run_certificates(cert, cfg);
        bool failed = false;
        if (cfg.json) {
            bringlab::Json arr = bringlab::Json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : reports) {
                std::cout << r.line() << "\n";
                if (r.status == bringlab::CertReport::Status::fail)
                    std::cout << "       witness: " << r.witness.dump() << "\n";
            }
        }
        for (const auto& r : reports)
            failed = failed || r.status == bringlab::CertReport::Status::fail;
        return failed ? 1 : 0;
    } catch (const bringlab::UnknownCertificate& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known certificates:";
        for (const auto& n : bringlab::certificate_names()) std::cerr << " " << n;
        std::cerr << " all\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
