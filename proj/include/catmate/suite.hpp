#pragma once

#include "catmate/workspace.hpp"

#include <string>
#include <vector>

namespace catmate {

enum class CheckStatus { Pass, Fail, Undecided, Skipped };
const char* status_name(CheckStatus s);

struct CheckRecord {
    std::string id;
    std::string anchor;  // the statement the check exercises
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    double runtime_ms = 0;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;

    std::size_t count(CheckStatus s) const;
    // 1 on any failure, else 2 on any undecided check, else 0
    int exit_code() const;
};

struct SuiteConfig {
    int bound = -1;  // localization word bound, -1 for the default
    Budget budget{10000, 100000};
    std::vector<std::string> probes{"One", "Arrow", "WalkingIso"};
    // hocolim suite: index shapes I and evaluation categories Jcat
    std::vector<std::string> shapes{"Span"};
    std::vector<std::string> jcats{"Arrow"};
    // bc suite: colimit-against-evaluation squares (C, I, Jcat)
    std::vector<std::vector<std::string>> colimit_squares{{"FS2", "Span", "Arrow"}};
    std::size_t max_categories_objects = 3;  // mates and bc squares
    std::size_t max_squares = 400;           // per pair of rows
};

extern const char* const kSuites[];  // null-terminated
bool is_suite(const std::string& name);

// Runs the named suite (or "all") over every applicable entity of ws.
Report run_suite(const Workspace& ws, const std::string& suite, const SuiteConfig& config = {});

constexpr int kReportSchemaVersion = 1;
std::string report_json(const Report& r, const SuiteConfig& config, bool with_runtime = true);
std::string report_text(const Report& r);

} // namespace catmate
