#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgw/gamma.hpp"
#include "sgw/report.hpp"
#include "sgw/semigroup.hpp"
#include "sgw/sweep.hpp"
#include "sgw/tableau.hpp"
#include "sgw/tree.hpp"
#include "sgw/weights.hpp"

namespace {

sgw::Semigroup semigroup_from_flags(const std::vector<int>& gens, const std::vector<int>& gaps) {
    if (!gens.empty() && !gaps.empty())
        sgw::fail(sgw::errc::invalid_argument, "pass either --gens or --gaps, not both");
    if (!gens.empty()) return sgw::Semigroup::from_generators(gens);
    if (!gaps.empty()) return sgw::Semigroup::from_gaps(gaps);
    sgw::fail(sgw::errc::invalid_argument, "one of --gens or --gaps is required");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) sgw::fail(sgw::errc::invalid_argument, "cannot open " + out_path + " for writing");
    f << text;
}

int cmd_analyze(const std::vector<int>& gens, const std::vector<int>& gaps,
                std::optional<int> gamma, int gamma_max, bool json, const std::string& out) {
    const sgw::Semigroup s = semigroup_from_flags(gens, gaps);
    if (json)
        write_output(sgw::analyze_json(s, gamma, gamma_max).dump(2) + "\n", out);
    else
        write_output(sgw::analyze_text(s, gamma, gamma_max), out);
    return 0;
}

int cmd_count(int genus_max, int threads, const std::vector<int>& gammas, bool json) {
    sgw::EnumerateOptions opt;
    opt.genus_max = genus_max;
    opt.threads = threads;
    opt.count_gammas = gammas;
    const auto stats = sgw::enumerate(opt, [](const sgw::TreeNode&) {});
    if (json) {
        nlohmann::json j;
        j["per_genus"] = stats.per_genus;
        j["total_nodes"] = stats.total_nodes;
        j["wall_seconds"] = stats.wall_seconds;
        j["nodes_per_second"] = stats.nodes_per_second;
        j["threads"] = stats.threads;
        for (size_t i = 0; i < stats.gammas.size(); ++i)
            j["gamma_per_genus"][std::to_string(stats.gammas[i])] = stats.gamma_per_genus[i];
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "genus counts (0.." << genus_max << "):\n";
    for (size_t g = 0; g < stats.per_genus.size(); ++g)
        std::cout << "  " << g << ": " << stats.per_genus[g] << "\n";
    for (size_t i = 0; i < stats.gammas.size(); ++i) {
        std::cout << "gamma=" << stats.gammas[i] << " hyperelliptic counts:\n";
        for (size_t g = 0; g < stats.gamma_per_genus[i].size(); ++g)
            std::cout << "  " << g << ": " << stats.gamma_per_genus[i][g] << "\n";
    }
    std::cout << stats.total_nodes << " semigroups in " << stats.wall_seconds << "s ("
              << static_cast<uint64_t>(stats.nodes_per_second) << " nodes/s, "
              << stats.threads << " threads)\n";
    return 0;
}

int cmd_verify(int gamma_max, int genus_max, int threads, bool json,
               const std::string& csv_path, const std::string& out) {
    sgw::SweepConfig cfg;
    cfg.gamma_max = gamma_max;
    cfg.genus_max = genus_max;
    cfg.threads = threads;
    const sgw::SweepResult result = sgw::run_sweep(cfg);

    if (!csv_path.empty()) write_output(sgw::sweep_csv(result), csv_path);
    if (json) {
        write_output(sgw::sweep_json(result).dump(2) + "\n", out);
    } else {
        std::string text;
        for (const auto& r : result.records) {
            text += "gamma=" + std::to_string(r.gamma) + " g=" + std::to_string(r.g) +
                    " population=" + std::to_string(r.population);
            if (r.vacuous()) {
                text += " (vacuous)\n";
                continue;
            }
            text += " W_K[" + std::to_string(r.min_w_k) + "," + std::to_string(r.max_w_k) +
                    "] W_S[" + std::to_string(r.min_w_s) + "," + std::to_string(r.max_w_s) + "]";
            if (r.bounds_checked)
                text += " bounds_K[" + std::to_string(r.lower_k) + "," +
                        std::to_string(r.upper_k) + "]";
            if (!r.violations.empty())
                text += " VIOLATIONS=" + std::to_string(r.violations.size());
            text += "\n";
            for (const auto& v : r.violations) text += "    ! " + v + "\n";
        }
        text += "total violations: " + std::to_string(result.total_violations) + " over " +
                std::to_string(result.total_population) + " members in " +
                std::to_string(result.wall_seconds) + "s\n";
        write_output(text, out);
    }
    return result.total_violations == 0 ? 0 : 1;
}

int cmd_render(const std::vector<int>& gens, const std::vector<int>& gaps,
               const std::string& mode_name, bool diff_min, const std::string& format,
               std::optional<int> gamma, const std::string& out) {
    const sgw::Semigroup s = semigroup_from_flags(gens, gaps);
    const sgw::TableauMode mode =
        mode_name == "K" ? sgw::TableauMode::K : sgw::TableauMode::S;
    const sgw::PathTableau t = sgw::path_of(s);

    std::optional<sgw::PathTableau> diff;
    if (diff_min) {
        int gm;
        if (gamma) {
            gm = *gamma;
        } else {
            const auto detected = sgw::detect_gammas(s, 8);
            if (detected.size() != 1)
                sgw::fail(sgw::errc::invalid_argument,
                          "--diff-min needs --gamma when detection is ambiguous");
            gm = detected.front();
        }
        diff = sgw::path_of(sgw::make_minimizer(gm, s.genus()));
    }

    if (format == "svg")
        write_output(sgw::render_svg(t, mode, diff ? &*diff : nullptr), out);
    else
        write_output(sgw::render_ascii(t, mode), out);
    return 0;
}

int cmd_enumerate(int genus_max, std::optional<int> genus, std::optional<int> gamma,
                  int threads, const std::string& out) {
    std::ostringstream lines;
    auto emit = [&](const sgw::TreeNode& n) {
        const auto gaps = n.gap_list();
        for (size_t i = 0; i < gaps.size(); ++i) lines << (i ? " " : "") << gaps[i];
        lines << "\n";
    };
    if (gamma) {
        if (!genus)
            sgw::fail(sgw::errc::invalid_argument, "--gamma streaming requires --genus");
        sgw::enumerate_gamma_hyperelliptic(*gamma, *genus, emit, threads);
    } else {
        sgw::EnumerateOptions opt;
        opt.genus_max = genus ? *genus : genus_max;
        opt.threads = 1;  // keep the stream in depth-first order
        const bool exact = genus.has_value();
        sgw::enumerate(opt, [&](const sgw::TreeNode& n) {
            if (!exact || n.genus() == *genus) emit(n);
        });
    }
    write_output(lines.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup weight invariants, enumeration and verification"};
    app.require_subcommand(1);

    std::vector<int> gens, gaps, gammas;
    std::optional<int> gamma, genus;
    int gamma_max = 4, genus_max = 10, threads = 1;
    bool json = false, diff_min = false;
    std::string out, csv, mode = "S", format = "ascii";

    auto* analyze = app.add_subcommand("analyze", "weights and certificates of one semigroup");
    analyze->add_option("--gens", gens, "generators (comma separated)")->delimiter(',');
    analyze->add_option("--gaps", gaps, "gap set (comma separated)")->delimiter(',');
    analyze->add_option("--gamma", gamma, "gamma to certify and bound-check");
    analyze->add_option("--gamma-max", gamma_max, "certificate scan limit");
    analyze->add_flag("--json", json, "JSON output");
    analyze->add_option("--out", out, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "bound/identity verification sweep");
    verify->add_option("--gamma-max", gamma_max, "largest gamma")->required();
    verify->add_option("--genus-max", genus_max, "largest genus")->required();
    verify->add_option("--threads", threads, "worker threads");
    verify->add_flag("--json", json, "JSON output");
    verify->add_option("--csv", csv, "write per-member CSV to file");
    verify->add_option("--out", out, "write to file instead of stdout");

    auto* count = app.add_subcommand("count", "per-genus population counts");
    count->add_option("--genus-max", genus_max, "largest genus")->required();
    count->add_option("--threads", threads, "worker threads");
    count->add_option("--gamma", gammas, "also tally gamma-hyperelliptic counts")
        ->delimiter(',');
    count->add_flag("--json", json, "JSON output");

    auto* render = app.add_subcommand("render", "Dyck-path tableau rendering");
    render->add_option("--gens", gens, "generators")->delimiter(',');
    render->add_option("--gaps", gaps, "gap set")->delimiter(',');
    render->add_option("--mode", mode, "S or K")->check(CLI::IsMember({"S", "K"}));
    render->add_flag("--diff-min", diff_min, "diff against the minimal-weight staircase");
    render->add_option("--gamma", gamma, "gamma for --diff-min");
    render->add_option("--format", format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", out, "write to file instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "stream gap sets, one per line");
    enumerate->add_option("--genus-max", genus_max, "stream all semigroups of genus <= N");
    enumerate->add_option("--genus", genus, "restrict the stream to genus == N");
    enumerate->add_option("--gamma", gamma, "stream the gamma-hyperelliptic population");
    enumerate->add_option("--threads", threads, "worker threads (gamma streaming only)");
    enumerate->add_option("--out", out, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(gens, gaps, gamma, gamma_max, json, out);
        if (*verify) return cmd_verify(gamma_max, genus_max, threads, json, csv, out);
        if (*count) return cmd_count(genus_max, threads, gammas, json);
        if (*render) return cmd_render(gens, gaps, mode, diff_min, format, gamma, out);
        if (*enumerate) return cmd_enumerate(genus_max, genus, gamma, threads, out);
    } catch (const sgw::error& e) {
        std::cerr << "error (" << sgw::errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
