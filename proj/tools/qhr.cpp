#include <CLI11.hpp>

#include <iostream>

#include "qhr/cli.hpp"

namespace {

std::vector<int> parse_offsets(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    using namespace qhr;
    CLI::App app{"Nilpotent orbits, pyramids and reduction data for sl_N"};
    app.require_subcommand(1);

    bool as_json = false, as_tikz = false, as_ascii = false, quiet = false;
    app.add_flag("--json", as_json, "emit the JSON report");
    app.add_flag("--tikz", as_tikz, "emit standalone TikZ source");
    app.add_flag("--ascii", as_ascii, "emit an ASCII grid");
    app.add_flag("--quiet", quiet, "suppress summaries");

    std::string lam_text, mu_text, offsets_text;
    int n = 0, max_n = 8;

    auto* orbits = app.add_subcommand("orbits", "partitions of N with their cover relations");
    orbits->add_option("N", n)->required();
    auto* adjacent = app.add_subcommand("adjacent", "adjacency and box-move test");
    auto* path = app.add_subcommand("path", "adjacent chain between comparable orbits");
    auto* reduce = app.add_subcommand("reduce", "reduction datum for a box move");
    auto* chain = app.add_subcommand("chain", "reduction data along the adjacent chain");
    auto* star = app.add_subcommand("check-star", "bigrading certificate for a box move");
    for (auto* sub : {adjacent, path, reduce, chain, star}) {
        sub->add_option("lambda", lam_text)->required();
        sub->add_option("mu", mu_text)->required();
    }
    auto* screen = app.add_subcommand("screenings", "classical screening coefficients");
    screen->add_option("lambda", lam_text)->required();
    screen->add_option("mu", mu_text);
    screen->add_option("--offsets", offsets_text, "x of the rightmost box of each row");
    auto* render = app.add_subcommand("render", "draw a pyramid");
    render->add_option("lambda", lam_text)->required();
    render->add_option("--offsets", offsets_text, "x of the rightmost box of each row");
    auto* verify = app.add_subcommand("verify-all", "certify every box move up to a size");
    verify->add_option("--max-n", max_n, "largest N")->check(CLI::Range(1, cli::max_n_bound));
    for (auto* sub : {orbits, adjacent, path, reduce, chain, star, screen, render, verify}) {
        sub->add_flag("--json", as_json, "emit the JSON report");
        sub->add_flag("--tikz", as_tikz, "emit standalone TikZ source");
        sub->add_flag("--ascii", as_ascii, "emit an ASCII grid");
        sub->add_flag("--quiet", quiet, "suppress summaries");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (int(as_json) + int(as_tikz) + int(as_ascii) > 1) {
        std::cerr << "error: choose at most one of --json, --tikz, --ascii\n";
        return 2;
    }
    const auto format = as_json ? cli::Format::json : as_tikz ? cli::Format::tikz : as_ascii ? cli::Format::ascii : cli::Format::text;
    const std::string verb = app.get_subcommands().front()->get_name();

    cli::Report report;
    try {
        std::optional<std::vector<int>> offsets;
        if (!offsets_text.empty()) offsets = parse_offsets(offsets_text);
        if (verb == "orbits") {
            report = cli::orbits(n);
        } else if (verb == "render") {
            report = cli::render_verb(Partition::parse(lam_text), offsets);
        } else if (verb == "verify-all") {
            report = cli::verify_all(max_n, cli::worker_count());
        } else if (verb == "screenings") {
            std::optional<Partition> mu;
            if (!mu_text.empty()) mu = Partition::parse(mu_text);
            report = cli::screenings(Partition::parse(lam_text), mu, offsets);
        } else {
            const auto lam = Partition::parse(lam_text);
            const auto mu = Partition::parse(mu_text);
            if (verb == "adjacent") report = cli::adjacent(lam, mu);
            if (verb == "path") report = cli::path(lam, mu);
            if (verb == "reduce") report = cli::reduce(lam, mu);
            if (verb == "chain") report = cli::chain(lam, mu);
            if (verb == "check-star") report = cli::check_star_verb(lam, mu);
        }
        std::cout << cli::emit(report, format, quiet);
    } catch (const std::exception& e) {
        report = cli::error_report(verb, e.what());
        if (format == cli::Format::json)
            std::cout << cli::emit(report, format, quiet);
        else
            std::cerr << report.summary;
    }
    if (report.status != "pass" && format != cli::Format::json && !quiet) std::cerr << "status: " << report.status << "\n";
    return report.exit_code();
}
