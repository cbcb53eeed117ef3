#include "catmate/errors.hpp"
#include "catmate/suite.hpp"
#include "catmate/workspace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace catmate;

namespace {

constexpr int kUsage = 3;

Workspace load(const std::vector<std::string>& files) {
    Workspace ws;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::runtime_error("cannot read " + f);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            parse_into(ws, buf.str());
        } catch (const Error& e) {
            throw std::runtime_error(f + ": " + e.what());
        }
    }
    return ws;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catmate: finite category checks"};
    app.require_subcommand(1);

    std::vector<std::string> files;

    auto* validate = app.add_subcommand("validate", "parse and validate description files");
    validate->add_option("files", files, "description files")->required()->check(CLI::ExistingFile);

    std::string cat_name, out_file;
    int bound = -1;
    auto* localize_cmd = app.add_subcommand("localize", "localize a relative category");
    localize_cmd->add_option("files", files, "description files")->required()->check(CLI::ExistingFile);
    localize_cmd->add_option("--cat", cat_name, "relative category, or category with W = isos")->required();
    localize_cmd->add_option("--bound", bound, "word length bound");
    localize_cmd->add_option("--out", out_file, "write Ho as a category description");

    std::string suite, report = "text";
    std::size_t budget = 0;
    std::vector<std::string> probes;
    auto* check = app.add_subcommand("check", "run a check suite");
    check->add_option("files", files, "description files")->required()->check(CLI::ExistingFile);
    check->add_option("--suite", suite, "mates, bc, localization, derived, hocolim or all")
        ->required()
        ->check([](const std::string& s) { return is_suite(s) ? std::string() : "unknown suite " + s; });
    check->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
    check->add_option("--budget", budget, "morphism budget for constructed categories");
    check->add_option("--probes", probes, "probe categories")->delimiter(',');
    check->add_option("--bound", bound, "localization word bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kUsage;
    }

    Workspace ws;
    try {
        ws = load(files);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    if (*validate) {
        std::cout << ws.categories.size() << " categories, " << ws.relcats.size() << " relative categories, "
                  << ws.functors.size() << " functors, " << ws.nats.size() << " transformations, "
                  << ws.adjunctions.size() << " adjunctions, " << ws.retractions.size() << " retractions\n";
        return 0;
    }

    if (*localize_cmd) {
        RelCat rc;
        try {
            rc = relcat_named(ws, cat_name);
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            return kUsage;
        }
        LocalizeOptions opt;
        opt.bound = bound;
        auto res = localize(rc, opt);
        if (!res.exact()) {
            std::cout << rc.name << ": undecided at bound " << res.bound << "\n";
            return 2;
        }
        std::cout << rc.name << ": exact at bound " << res.bound << ", " << res.ho->num_objects() << " objects, "
                  << res.ho->num_morphisms() << " morphisms\n";
        auto text = serialize_category(*res.ho);
        if (out_file.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_file);
            if (!out) {
                std::cerr << "cannot write " << out_file << "\n";
                return kUsage;
            }
            out << text;
        }
        return 0;
    }

    SuiteConfig cfg;
    cfg.bound = bound;
    if (budget) cfg.budget.max_morphisms = budget;
    if (!probes.empty()) cfg.probes = probes;
    auto r = run_suite(ws, suite, cfg);
    std::cout << (report == "json" ? report_json(r, cfg) : report_text(r));
    return r.exit_code();
}
