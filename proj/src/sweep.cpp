#include "sgw/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "sgw/gamma.hpp"
#include "sgw/tree.hpp"
#include "sgw/weights.hpp"

namespace sgw {

namespace {

std::string gap_string(const std::vector<int>& gaps) {
    std::string out = "{";
    for (size_t i = 0; i < gaps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(gaps[i]);
    }
    return out + "}";
}

struct CellLocal {
    uint64_t population = 0;
    long long min_w_k = 0, max_w_k = 0, min_w_s = 0, max_w_s = 0;
    std::vector<std::vector<int>> min_attainers, max_attainers;
    std::vector<std::string> violations;
    std::vector<MemberRow> members;
};

void fold_min(long long w, const std::vector<int>& gaps, long long& best,
              std::vector<std::vector<int>>& attainers, bool first) {
    if (first || w < best) {
        best = w;
        attainers.assign(1, gaps);
    } else if (w == best) {
        attainers.push_back(gaps);
    }
}

void fold_max(long long w, const std::vector<int>& gaps, long long& best,
              std::vector<std::vector<int>>& attainers, bool first) {
    if (first || w > best) {
        best = w;
        attainers.assign(1, gaps);
    } else if (w == best) {
        attainers.push_back(gaps);
    }
}

void merge_extreme_min(CellLocal& into, const CellLocal& from) {
    if (from.population == 0) return;
    if (into.population == 0 || from.min_w_k < into.min_w_k) {
        into.min_w_k = from.min_w_k;
        into.min_attainers = from.min_attainers;
    } else if (from.min_w_k == into.min_w_k) {
        into.min_attainers.insert(into.min_attainers.end(), from.min_attainers.begin(),
                                  from.min_attainers.end());
    }
}

void merge_extreme_max(CellLocal& into, const CellLocal& from) {
    if (from.population == 0) return;
    if (into.population == 0 || from.max_w_k > into.max_w_k) {
        into.max_w_k = from.max_w_k;
        into.max_attainers = from.max_attainers;
    } else if (from.max_w_k == into.max_w_k) {
        into.max_attainers.insert(into.max_attainers.end(), from.max_attainers.begin(),
                                  from.max_attainers.end());
    }
}

} // namespace

std::vector<std::string> identity_violations(const Semigroup& s, int gamma) {
    std::vector<std::string> out;
    const int g = s.genus();
    const long long ws = s_weight(s);
    const long long wk = k_weight(s);
    const std::string tag = gap_string(s.gaps()) + " (gamma=" + std::to_string(gamma) + "): ";

    if (g >= 1 && wk != ws + 2LL * g - 1 - s.frobenius())
        out.push_back(tag + "W_K != W_S + 2g-1-frobenius");
    if ((wk == ws) != s.is_symmetric())
        out.push_back(tag + "W_K == W_S does not match symmetry");
    if (ws + total_ramification(s) != 1LL * g * g)
        out.push_back(tag + "W_S + R != g^2");
    try {
        const long long rk = k_ramification(s, gamma);
        if (wk + rk != 1LL * g * (g - 1))
            out.push_back(tag + "W_K + R_K != g(g-1)");
    } catch (const error& e) {
        out.push_back(tag + e.what());
    }
    return out;
}

namespace {

SweepRecord analyze_cell(int gamma, int g, int threads, int split_depth) {
    SweepRecord rec;
    rec.gamma = gamma;
    rec.g = g;
    rec.bounds_checked = g >= 2 * gamma + 1;
    if (rec.bounds_checked) {
        const long long base = binom2(g - 2 * gamma);
        rec.lower_k = base + 2LL * gamma;
        rec.upper_k = base + 2LL * gamma * gamma;
        rec.lower_s = base;
        rec.upper_s = base + 2LL * gamma * gamma;
    }

    EnumerateOptions opt;
    opt.genus_max = g;
    opt.threads = threads;
    opt.split_depth = split_depth;
    opt.gamma_filter = gamma;

    auto make_local = [] { return CellLocal{}; };
    auto visit = [&](CellLocal& local, const TreeNode& node) {
        const Semigroup s = node.semigroup();
        const auto gaps = s.gaps();
        MemberRow row;
        row.gaps = gaps;
        row.genus = s.genus();
        row.frobenius = s.frobenius();
        row.multiplicity = s.multiplicity();
        row.symmetric = s.is_symmetric();
        row.w_s = s_weight(s);
        row.w_k = k_weight(s);
        row.ramification = total_ramification(s);
        row.k_odd_tail = odd_tail_count(s);

        for (auto& v : identity_violations(s, gamma)) local.violations.push_back(std::move(v));
        try {
            row.r_k = k_ramification(s, gamma);
        } catch (const error&) {
            row.r_k = 0;  // already reported by identity_violations
        }

        if (rec.bounds_checked) {
            const BoundCheck b = check_bounds(s, gamma);
            row.bounds_checked = true;
            row.lower_k = b.lower_k;
            row.upper_k = b.upper_k;
            row.lower_s = b.lower_s;
            row.upper_s = b.upper_s;
            row.within_k = b.within_k;
            row.within_s = b.within_s;
            row.attains_min_k = b.attains_min_k;
            row.attains_max_k = b.attains_max_k;
            if (!b.within_k)
                local.violations.push_back(gap_string(gaps) + ": W_K=" + std::to_string(b.w_k) +
                                           " outside [" + std::to_string(b.lower_k) + "," +
                                           std::to_string(b.upper_k) + "]");
            if (!b.within_s)
                local.violations.push_back(gap_string(gaps) + ": W_S=" + std::to_string(b.w_s) +
                                           " outside [" + std::to_string(b.lower_s) + "," +
                                           std::to_string(b.upper_s) + "]");
        }

        const bool first = local.population == 0;
        fold_min(row.w_k, gaps, local.min_w_k, local.min_attainers, first);
        fold_max(row.w_k, gaps, local.max_w_k, local.max_attainers, first);
        if (first || row.w_s < local.min_w_s) local.min_w_s = row.w_s;
        if (first || row.w_s > local.max_w_s) local.max_w_s = row.w_s;
        local.population += 1;
        local.members.push_back(std::move(row));
    };

    CellLocal total;
    auto merge = [&](CellLocal&& local, int /*subtree*/) {
        merge_extreme_min(total, local);
        merge_extreme_max(total, local);
        if (local.population > 0) {
            if (total.population == 0) {
                total.min_w_s = local.min_w_s;
                total.max_w_s = local.max_w_s;
            } else {
                total.min_w_s = std::min(total.min_w_s, local.min_w_s);
                total.max_w_s = std::max(total.max_w_s, local.max_w_s);
            }
        }
        total.population += local.population;
        for (auto& v : local.violations) total.violations.push_back(std::move(v));
        for (auto& m : local.members) total.members.push_back(std::move(m));
    };

    enumerate_reduce(opt, make_local, visit, merge);

    // canonical order: results must not depend on worker scheduling
    std::sort(total.members.begin(), total.members.end(),
              [](const MemberRow& a, const MemberRow& b) { return a.gaps < b.gaps; });
    std::sort(total.violations.begin(), total.violations.end());

    rec.population = total.population;
    rec.violations = std::move(total.violations);
    rec.members = std::move(total.members);
    if (rec.population > 0) {
        rec.min_w_k = total.min_w_k;
        rec.max_w_k = total.max_w_k;
        rec.min_w_s = total.min_w_s;
        rec.max_w_s = total.max_w_s;
        std::sort(total.min_attainers.begin(), total.min_attainers.end());
        std::sort(total.max_attainers.begin(), total.max_attainers.end());
        rec.min_attainers = std::move(total.min_attainers);
        rec.max_attainers = std::move(total.max_attainers);
    }

    // attainment flags against the closed-form constructions
    if (rec.bounds_checked && rec.population > 0) {
        rec.lower_attained = rec.min_w_k == rec.lower_k;
        rec.upper_attained = rec.max_w_k == rec.upper_k;
    }
    if (g >= 3 * gamma + 1) {
        try {
            const auto mz = make_minimizer(gamma, g).gaps();
            rec.minimizer_construction_ok = true;
            rec.minimizer_in_min_attainers =
                rec.lower_attained &&
                std::find(rec.min_attainers.begin(), rec.min_attainers.end(), mz) !=
                    rec.min_attainers.end();
        } catch (const error&) {
        }
    }
    try {
        const auto s0 = make_maximizer(gamma, g).gaps();
        rec.maximizer_construction_ok = true;
        rec.max_attainers_exactly_s0 =
            rec.upper_attained && rec.max_attainers.size() == 1 && rec.max_attainers[0] == s0;
    } catch (const error&) {
    }

    // Remark cells: sharp minima at g = 2*gamma+1 (2*gamma) and g = 2*gamma
    // (2*gamma - 1)
    if (g == 2 * gamma + 1)
        rec.remark_expected_min = 2LL * gamma;
    else if (g == 2 * gamma && gamma >= 1)
        rec.remark_expected_min = 2LL * gamma - 1;
    if (rec.remark_expected_min && rec.population > 0) {
        rec.remark_checked = true;
        rec.remark_ok = rec.min_w_k == *rec.remark_expected_min;
        if (!rec.remark_ok)
            rec.violations.push_back("remark: observed min W_K " + std::to_string(rec.min_w_k) +
                                     " != " + std::to_string(*rec.remark_expected_min));
    }

    // multiplicity-4 subpopulation against the Proposition spectrum
    if (gamma >= 1 && g >= 3 * gamma) {
        rec.prop2.applicable = true;
        rec.prop2.spectrum = prop2_spectrum(gamma, g);
        std::map<long long, std::vector<std::vector<int>>> family_by_value;
        for (int k = 1; k <= gamma + 1; ++k) {
            try {
                const auto fam = make_prop2_member(gamma, g, k).gaps();
                rec.prop2.family_in_range.push_back(k);
                rec.prop2.family_gaps.push_back(fam);
                family_by_value[rec.prop2.spectrum[static_cast<size_t>(k - 1)].second]
                    .push_back(fam);
            } catch (const error&) {
            }
        }
        for (auto& [value, gaps] : family_by_value) std::sort(gaps.begin(), gaps.end());

        std::set<long long> spectrum_values;
        for (const auto& [k, v] : rec.prop2.spectrum) spectrum_values.insert(v);
        const long long max_value = binom2(g - 2 * gamma) + 2LL * gamma * gamma;
        const long long nonmax_lo = binom2(g - 2 * gamma) + 1LL * gamma * gamma + gamma;
        const long long nonmax_hi =
            binom2(g - 2 * gamma) + 2LL * (1LL * gamma * gamma - gamma) + 2;

        std::map<long long, std::vector<std::vector<int>>> attainers_by_value;
        for (const auto& m : rec.members) {
            if (m.multiplicity != 4) continue;
            rec.prop2.mult4_population += 1;
            if (!spectrum_values.count(m.w_k))
                rec.violations.push_back("prop2: " + gap_string(m.gaps) + " W_K=" +
                                         std::to_string(m.w_k) + " outside spectrum");
            else
                attainers_by_value[m.w_k].push_back(m.gaps);
            if (m.w_k != max_value && (m.w_k < nonmax_lo || m.w_k > nonmax_hi))
                rec.violations.push_back("prop2: nonmaximal " + gap_string(m.gaps) + " W_K=" +
                                         std::to_string(m.w_k) + " outside [" +
                                         std::to_string(nonmax_lo) + "," +
                                         std::to_string(nonmax_hi) + "]");
        }
        for (auto& [value, gaps] : attainers_by_value) {
            std::sort(gaps.begin(), gaps.end());
            const auto fam = family_by_value.find(value);
            if (fam == family_by_value.end()) continue;  // construction out of range
            if (gaps != fam->second)
                rec.violations.push_back("prop2: attainers of W_K=" + std::to_string(value) +
                                         " differ from the four-generator family");
        }
    }
    return rec;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    if (config.gamma_max < 0 || config.genus_max < 1)
        fail(errc::invalid_argument, "run_sweep: gamma_max >= 0 and genus_max >= 1 required");
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult result;
    result.config = config;
    for (int gamma = 0; gamma <= config.gamma_max; ++gamma) {
        for (int g = 2 * gamma; g <= config.genus_max; ++g) {
            auto rec = analyze_cell(gamma, g, config.threads, config.split_depth);
            result.total_violations += rec.violations.size();
            result.total_population += rec.population;
            result.records.push_back(std::move(rec));
        }
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

nlohmann::json sweep_json(const SweepResult& result, bool include_runtime) {
    nlohmann::json j;
    j["config"] = {{"gamma_max", result.config.gamma_max},
                   {"genus_max", result.config.genus_max},
                   {"threads", result.config.threads},
                   {"split_depth", result.config.split_depth}};
    j["total_violations"] = result.total_violations;
    j["total_population"] = result.total_population;
    if (include_runtime) j["wall_seconds"] = result.wall_seconds;
    j["records"] = nlohmann::json::array();
    for (const auto& r : result.records) {
        nlohmann::json rj;
        rj["gamma"] = r.gamma;
        rj["g"] = r.g;
        rj["population"] = r.population;
        rj["vacuous"] = r.vacuous();
        if (!r.vacuous()) {
            rj["min_w_k"] = r.min_w_k;
            rj["max_w_k"] = r.max_w_k;
            rj["min_w_s"] = r.min_w_s;
            rj["max_w_s"] = r.max_w_s;
            rj["min_attainers"] = r.min_attainers;
            rj["max_attainers"] = r.max_attainers;
        } else {
            rj["min_w_k"] = nullptr;
            rj["max_w_k"] = nullptr;
            rj["min_w_s"] = nullptr;
            rj["max_w_s"] = nullptr;
            rj["min_attainers"] = nlohmann::json::array();
            rj["max_attainers"] = nlohmann::json::array();
        }
        if (r.bounds_checked)
            rj["bounds"] = {{"lower_k", r.lower_k},
                            {"upper_k", r.upper_k},
                            {"lower_s", r.lower_s},
                            {"upper_s", r.upper_s}};
        else
            rj["bounds"] = nullptr;
        rj["lower_attained"] = r.lower_attained;
        rj["upper_attained"] = r.upper_attained;
        rj["minimizer_construction_ok"] = r.minimizer_construction_ok;
        rj["minimizer_in_min_attainers"] = r.minimizer_in_min_attainers;
        rj["maximizer_construction_ok"] = r.maximizer_construction_ok;
        rj["max_attainers_exactly_s0"] = r.max_attainers_exactly_s0;
        if (r.remark_expected_min)
            rj["remark"] = {{"expected_min", *r.remark_expected_min},
                            {"checked", r.remark_checked},
                            {"ok", r.remark_ok}};
        else
            rj["remark"] = nullptr;
        if (r.prop2.applicable) {
            nlohmann::json pj;
            pj["mult4_population"] = r.prop2.mult4_population;
            pj["spectrum"] = nlohmann::json::array();
            for (const auto& [k, v] : r.prop2.spectrum)
                pj["spectrum"].push_back({{"k", k}, {"w_k", v}});
            pj["family_in_range"] = r.prop2.family_in_range;
            pj["family_gaps"] = r.prop2.family_gaps;
            rj["prop2"] = pj;
        } else {
            rj["prop2"] = nullptr;
        }
        rj["violations"] = r.violations;
        j["records"].push_back(std::move(rj));
    }
    return j;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "gamma,g,gaps,genus,frobenius,multiplicity,symmetric,w_s,w_k,r,r_k,k_odd_tail,"
           "lower_k,upper_k,lower_s,upper_s,within_k,within_s,attains_min_k,attains_max_k\n";
    for (const auto& rec : result.records) {
        for (const auto& m : rec.members) {
            out << rec.gamma << ',' << rec.g << ',';
            for (size_t i = 0; i < m.gaps.size(); ++i) out << (i ? " " : "") << m.gaps[i];
            out << ',' << m.genus << ',' << m.frobenius << ',' << m.multiplicity << ','
                << (m.symmetric ? 1 : 0) << ',' << m.w_s << ',' << m.w_k << ','
                << m.ramification << ',' << m.r_k << ',' << m.k_odd_tail << ',';
            if (m.bounds_checked)
                out << m.lower_k << ',' << m.upper_k << ',' << m.lower_s << ',' << m.upper_s
                    << ',' << (m.within_k ? 1 : 0) << ',' << (m.within_s ? 1 : 0) << ','
                    << (m.attains_min_k ? 1 : 0) << ',' << (m.attains_max_k ? 1 : 0);
            else
                out << ",,,,,,,";
            out << '\n';
        }
    }
    return out.str();
}

} // namespace sgw
