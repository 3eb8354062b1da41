#include "recon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recon/balls.hpp"
#include "recon/codefamilies.hpp"
#include "recon/confusability.hpp"
#include "recon/reconstruct.hpp"
#include "recon/syndelta.hpp"
#include "recon/verifier.hpp"

namespace recon::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchema = "recon-ds/v1";

struct ResidueFlags {
    long long s0 = 0, s1 = 0, s2 = 0, h0 = 0, h1 = 0;
    long long g1 = 0, g2 = 0, g3 = 0, g1p = 0, g2p = 0, g3p = 0;
    int t = 0, tprime = 2;
    long long P = 0, l = 0;
    std::string eps = "1/18";

    void attach(CLI::App* cmd) {
        cmd->add_option("--s0", s0, "weight residue mod 4");
        cmd->add_option("--s1", s1, "first-order VT residue");
        cmd->add_option("--s2", s2, "second-order VT residue");
        cmd->add_option("--h0", h0, "psi-weight residue mod 7");
        cmd->add_option("--h1", h1, "psi VT residue");
        cmd->add_option("--g1", g1, "odd block-pair residue, k=1");
        cmd->add_option("--g2", g2, "odd block-pair residue, k=2");
        cmd->add_option("--g3", g3, "odd block-pair residue, k=3");
        cmd->add_option("--g1p", g1p, "even block-pair residue, k=1");
        cmd->add_option("--g2p", g2p, "even block-pair residue, k=2");
        cmd->add_option("--g3p", g3p, "even block-pair residue, k=3");
        cmd->add_option("--t", t, "run-length cap t (0 = default)");
        cmd->add_option("--tprime", tprime, "period cap t'");
        cmd->add_option("--P", P, "block length P (0 = family default)");
        cmd->add_option("--l", l, "balance window l (0 = default)");
        cmd->add_option("--eps", eps, "balance slack as a fraction p/q");
    }

    CodeSpec build(Family f, int n) const {
        CodeSpec spec = CodeSpec::make(f, n);
        spec.s0 = s0;
        spec.s1 = s1;
        spec.s2 = s2;
        spec.h0 = h0;
        spec.h1 = h1;
        spec.g = {g1, g2, g3};
        spec.gp = {g1p, g2p, g3p};
        spec.t = t;
        spec.t_prime = tprime;
        spec.P = P;
        spec.l = l;
        auto slash = eps.find('/');
        if (slash == std::string::npos) throw ParamOutOfRange("--eps expects a fraction p/q");
        spec.eps_num = std::stoll(eps.substr(0, slash));
        spec.eps_den = std::stoll(eps.substr(slash + 1));
        spec.validate();
        return spec;
    }
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

ordered_json report_json(const VerifyReport& r) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["params"] = r.params;
    j["pairs_scanned"] = r.pairs_scanned;
    j["max_observed"] = r.max_observed;
    j["bound"] = r.bound;
    j["direction"] = r.at_least ? "at_least" : "at_most";
    j["passed"] = r.passed;
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(ordered_json{{"x", w.x.str()}, {"y", w.y.str()}, {"note", w.note}});
    j["witnesses"] = ws;
    j["wall_time_s"] = r.wall_time_s;
    return j;
}

void print_report_line(const VerifyReport& r, std::ostream& out) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_id
        << " n=" << r.n_lo << (r.n_hi != r.n_lo ? ".." + std::to_string(r.n_hi) : "")
        << " observed=" << r.max_observed
        << (r.at_least ? " >= " : " <= ") << "bound=" << r.bound
        << " scanned=" << r.pairs_scanned << "\n";
}

std::vector<BinSeq> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamOutOfRange("cannot open " + path);
    std::vector<BinSeq> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(BinSeq::from_string(line));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reconstruction codes for one deletion plus one substitution"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- ball ----
    auto* ball_cmd = app.add_subcommand("ball", "print an error ball, one sequence per line");
    std::string ball_bits, ball_type = "ds";
    ball_cmd->add_option("bits", ball_bits, "source sequence")->required();
    ball_cmd->add_option("--type", ball_type, "ds | del | sub")->check(CLI::IsMember({"ds", "del", "sub"}));
    ball_cmd->callback([&] {
        BinSeq x = BinSeq::from_string(ball_bits);
        BallView b = ball_type == "del" ? deletion_ball(x)
                    : ball_type == "sub" ? substitution_ball(x)
                                         : ds_ball(x);
        for (const BinSeq& e : b.elements) out << e.str() << "\n";
    });

    // ---- intersect ----
    auto* int_cmd = app.add_subcommand("intersect", "intersect two error balls");
    std::string int_x, int_y;
    bool int_partition = false, int_json = false;
    int_cmd->add_option("x", int_x, "first sequence")->required();
    int_cmd->add_option("y", int_y, "second sequence")->required();
    int_cmd->add_flag("--partition", int_partition, "emit the eighteen-subset decomposition as JSON");
    int_cmd->add_flag("--json", int_json, "JSON output");
    int_cmd->callback([&] {
        BinSeq x = BinSeq::from_string(int_x), y = BinSeq::from_string(int_y);
        BallView b = ds_intersection(x, y);
        if (int_partition) {
            SubsetPartition part = subset_partition(x, y);
            ordered_json j;
            j["schema"] = kSchema;
            ordered_json bsets, esets;
            for (int k = 1; k <= 18; ++k) {
                ordered_json elems = ordered_json::array();
                for (const BinSeq& z : part.subsets[static_cast<std::size_t>(k)]) elems.push_back(z.str());
                bsets[std::to_string(k)] = elems;
                ordered_json pairs = ordered_json::array();
                for (auto [dx, dy] : part.epairs[static_cast<std::size_t>(k)])
                    pairs.push_back(ordered_json::array({dx, dy}));
                esets[std::to_string(k)] = pairs;
            }
            j["B"] = bsets;
            j["E"] = esets;
            j["union_size"] = part.united.size();
            j["ball_intersection_size"] = b.size();
            out << j.dump(2) << "\n";
        } else if (int_json) {
            ordered_json j;
            j["schema"] = kSchema;
            ordered_json elems = ordered_json::array();
            for (const BinSeq& e : b.elements) elems.push_back(e.str());
            j["elements"] = elems;
            j["size"] = b.size();
            out << j.dump(2) << "\n";
        } else {
            for (const BinSeq& e : b.elements) out << e.str() << "\n";
            out << "size " << b.size() << "\n";
        }
    });

    // ---- enumerate ----
    auto* enum_cmd = app.add_subcommand("enumerate", "list all codewords of one code");
    std::string enum_family = "c14", enum_out;
    int enum_n = 0;
    ResidueFlags enum_res;
    enum_cmd->add_option("--family", enum_family, "code family")->required();
    enum_cmd->add_option("--n", enum_n, "sequence length")->required();
    enum_cmd->add_option("--out", enum_out, "output file (default stdout)");
    enum_res.attach(enum_cmd);
    enum_cmd->callback([&] {
        CodeSpec spec = enum_res.build(family_from_name(enum_family), enum_n);
        std::vector<BinSeq> code = enumerate_code(spec);
        if (enum_out.empty()) {
            for (const BinSeq& w : code) out << w.str() << "\n";
        } else {
            std::ofstream f(enum_out);
            if (!f) throw ParamOutOfRange("cannot open " + enum_out);
            for (const BinSeq& w : code) f << w.str() << "\n";
            out << code.size() << " codewords -> " << enum_out << "\n";
        }
    });

    // ---- stats ----
    auto* stats_cmd = app.add_subcommand("stats", "best-residue code sizes and redundancy");
    std::string stats_family = "c14", stats_range = "8..14";
    bool stats_json = false;
    stats_cmd->add_option("--family", stats_family, "code family")->required();
    stats_cmd->add_option("--n-range", stats_range, "length range a..b");
    stats_cmd->add_flag("--json", stats_json, "JSON output");
    stats_cmd->callback([&] {
        auto [lo, hi] = parse_range(stats_range);
        Family f = family_from_name(stats_family);
        ordered_json rows = ordered_json::array();
        if (!stats_json) out << "n\tsize\tredundancy\tresidues\n";
        for (int n = lo; n <= hi; ++n) {
            RedundancyRow row = best_residues(f, n);
            if (stats_json) {
                ordered_json j;
                j["n"] = row.n;
                j["best_residues"] = row.best_residues;
                j["code_size"] = row.code_size;
                j["redundancy"] = row.redundancy;
                rows.push_back(j);
            } else {
                out << row.n << "\t" << row.code_size << "\t" << row.redundancy << "\t[";
                for (std::size_t i = 0; i < row.best_residues.size(); ++i)
                    out << (i ? "," : "") << row.best_residues[i];
                out << "]\n";
            }
        }
        if (stats_json) {
            ordered_json j;
            j["schema"] = kSchema;
            j["family"] = stats_family;
            j["rows"] = rows;
            out << j.dump(2) << "\n";
        }
    });

    // ---- delta ----
    auto* delta_cmd = app.add_subcommand("delta", "syndrome-delta decomposition of a confusable quadruple");
    std::string delta_x, delta_y;
    int delta_dx = 0, delta_ex = 0, delta_dy = 0, delta_ey = 0;
    bool delta_json = false;
    delta_cmd->add_option("--x", delta_x, "first sequence")->required();
    delta_cmd->add_option("--y", delta_y, "second sequence")->required();
    delta_cmd->add_option("--dx", delta_dx, "deletion index in x")->required();
    delta_cmd->add_option("--ex", delta_ex, "substitution index in x (0 = none)");
    delta_cmd->add_option("--dy", delta_dy, "deletion index in y")->required();
    delta_cmd->add_option("--ey", delta_ey, "substitution index in y (0 = none)");
    delta_cmd->add_flag("--json", delta_json, "JSON output");
    delta_cmd->callback([&] {
        BinSeq x = BinSeq::from_string(delta_x), y = BinSeq::from_string(delta_y);
        DeltaBreakdown br = delta_psi_decomposition(x, y, delta_dx, delta_ex, delta_dy, delta_ey);
        if (delta_json) {
            ordered_json j;
            j["schema"] = kSchema;
            j["eta_x"] = br.eta_x;
            j["eta_y"] = br.eta_y;
            j["boundary_x"] = br.boundary_x;
            j["boundary_y"] = br.boundary_y;
            j["middle_sum"] = br.middle_sum;
            j["total"] = br.total;
            j["n_del_x"] = br.n_del_x;
            j["n_del_y"] = br.n_del_y;
            j["n_sub_x"] = br.n_sub_x;
            j["n_sub_y"] = br.n_sub_y;
            out << j.dump(2) << "\n";
        } else {
            out << "eta_x " << br.eta_x << "\neta_y " << br.eta_y
                << "\nboundary_x " << br.boundary_x << "\nboundary_y " << br.boundary_y
                << "\nmiddle_sum " << br.middle_sum << "\ntotal " << br.total << "\n";
        }
    });

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand("simulate", "channel + reconstruction round trips");
    std::string sim_family = "c14";
    int sim_n = 12, sim_reads = 14, sim_trials = 100;
    std::uint64_t sim_seed = 0;
    bool sim_json = false;
    sim_cmd->add_option("--family", sim_family, "code family")->required();
    sim_cmd->add_option("--n", sim_n, "sequence length")->required();
    sim_cmd->add_option("--reads", sim_reads, "reads per trial N")->required();
    sim_cmd->add_option("--trials", sim_trials, "number of trials");
    sim_cmd->add_option("--seed", sim_seed, "rng seed");
    sim_cmd->add_flag("--json", sim_json, "JSON output");
    sim_cmd->callback([&] {
        Family f = family_from_name(sim_family);
        std::mt19937_64 rng(sim_seed);
        int failures = 0, skipped = 0;
        for (int trial = 0; trial < sim_trials; ++trial) {
            std::uint64_t v = rng() & ((std::uint64_t{1} << sim_n) - 1);
            BinSeq x = BinSeq::from_rank(v, sim_n);
            CodeSpec probe = CodeSpec::make(f, sim_n);
            if (!structural_ok(x, probe)) { ++skipped; continue; }
            CodeSpec spec = spec_for_member(f, x);
            ReadSet rs;
            try {
                rs = sample_reads(x, sim_reads, rng());
            } catch (const BallTooSmall&) {
                ++skipped;
                continue;
            }
            try {
                if (decode(rs, spec, sim_reads) != x) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        if (sim_json) {
            ordered_json j;
            j["schema"] = kSchema;
            j["family"] = sim_family;
            j["n"] = sim_n;
            j["reads"] = sim_reads;
            j["trials"] = sim_trials;
            j["seed"] = sim_seed;
            j["skipped"] = skipped;
            j["failures"] = failures;
            out << j.dump(2) << "\n";
        } else {
            out << "trials " << sim_trials << " skipped " << skipped << " failures " << failures << "\n";
        }
        if (failures > 0) rc = 1;
    });

    // ---- decode ----
    auto* dec_cmd = app.add_subcommand("decode", "reconstruct a codeword from reads");
    std::string dec_family = "c14", dec_file;
    int dec_n = 0;
    ResidueFlags dec_res;
    dec_cmd->add_option("--family", dec_family, "code family")->required();
    dec_cmd->add_option("--n", dec_n, "sequence length")->required();
    dec_cmd->add_option("--reads-file", dec_file, "file of reads, one per line")->required();
    dec_res.attach(dec_cmd);
    dec_cmd->callback([&] {
        CodeSpec spec = dec_res.build(family_from_name(dec_family), dec_n);
        ReadSet rs;
        rs.n = dec_n;
        rs.reads = read_lines(dec_file);
        std::sort(rs.reads.begin(), rs.reads.end());
        rs.reads.erase(std::unique(rs.reads.begin(), rs.reads.end()), rs.reads.end());
        rs.claimed_N = static_cast<int>(rs.reads.size());
        try {
            out << decode(rs, spec, rs.claimed_N).str() << "\n";
        } catch (const NoCandidate& e) {
            err << "decode: " << e.what() << "\n";
            rc = 1;
        } catch (const Ambiguous& e) {
            err << "decode: " << e.what() << "\n";
            rc = 1;
        }
    });

    // ---- verify ----
    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite = "all", ver_family, ver_range, ver_json_path;
    int ver_n = 0, ver_jobs = 1, ver_N = 0, ver_trials = 100;
    std::uint64_t ver_seed = 1;
    std::uint64_t ver_samples = 100000;
    long long ver_P = 4;
    ver_cmd->add_option("--suite", ver_suite, "bounds | structural | delta | counts | observations | pbounded | reconstruction | all");
    ver_cmd->add_option("--family", ver_family, "family for the bounds/reconstruction suites (or 'all')");
    ver_cmd->add_option("--n", ver_n, "single length");
    ver_cmd->add_option("--n-range", ver_range, "length range a..b");
    ver_cmd->add_option("--N", ver_N, "reads bound N (default per family)");
    ver_cmd->add_option("--jobs", ver_jobs, "worker threads");
    ver_cmd->add_option("--seed", ver_seed, "rng seed");
    ver_cmd->add_option("--samples", ver_samples, "sampled quadruples for the delta suite");
    ver_cmd->add_option("--trials", ver_trials, "trials per codeword for the reconstruction suite");
    ver_cmd->add_option("--P", ver_P, "window bound for the pbounded suite");
    ver_cmd->add_option("--json", ver_json_path, "write the full report list to this file");
    ver_cmd->callback([&] {
        int lo = ver_n, hi = ver_n;
        if (!ver_range.empty()) std::tie(lo, hi) = parse_range(ver_range);
        if (lo == 0) { lo = 8; hi = 10; }
        std::vector<VerifyReport> reports;

        auto default_N = [](Family f) {
            switch (f) {
                case Family::C14: case Family::C1: return 14;
                case Family::C11: return 11;
                case Family::C9: return 9;
                case Family::CL: return 5;
                default: return 18;
            }
        };

        if (ver_suite == "bounds" || ver_suite == "all") {
            if (ver_family.empty() || ver_family == "all") {
                reports.push_back(verify_bound(std::nullopt, ver_N ? ver_N : 18, lo, hi, ver_jobs));
            } else {
                Family f = family_from_name(ver_family);
                reports.push_back(verify_bound(f, ver_N ? ver_N : default_N(f), lo, hi, ver_jobs));
            }
        }
        if (ver_suite == "structural" || ver_suite == "all") {
            auto rs = verify_structure(lo, hi, ver_jobs);
            reports.insert(reports.end(), rs.begin(), rs.end());
        }
        if (ver_suite == "delta" || ver_suite == "all") {
            reports.push_back(verify_delta(std::min(hi, 8), 20, ver_samples, ver_seed, ver_jobs));
        }
        if (ver_suite == "counts" || ver_suite == "all") {
            auto rs = verify_counts(lo, hi, lo, hi, lo, hi);
            reports.insert(reports.end(), rs.begin(), rs.end());
        }
        if (ver_suite == "observations" || ver_suite == "all") {
            reports.push_back(verify_observations(lo, hi));
        }
        if (ver_suite == "pbounded" || ver_suite == "all") {
            reports.push_back(verify_pbounded(ver_P, lo, hi, ver_jobs));
        }
        if (ver_suite == "reconstruction") {
            Family f = family_from_name(ver_family.empty() ? "c14" : ver_family);
            reports.push_back(verify_reconstruction(f, ver_N ? ver_N : default_N(f), lo, hi,
                                                    ver_trials, ver_seed, ver_jobs));
        }

        bool all_passed = true;
        for (const auto& r : reports) {
            print_report_line(r, out);
            all_passed = all_passed && r.passed;
        }
        if (!ver_json_path.empty()) {
            ordered_json j;
            j["schema"] = kSchema;
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            j["reports"] = arr;
            std::ofstream f(ver_json_path);
            if (!f) throw ParamOutOfRange("cannot open " + ver_json_path);
            f << j.dump(2) << "\n";
        }
        if (!all_passed) rc = 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace recon::cli
