#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "qdvol/cache.hpp"
#include "qdvol/genfun.hpp"
#include "qdvol/oracle.hpp"
#include "qdvol/table.hpp"
#include "qdvol/volume.hpp"

using nlohmann::json;
using namespace qdvol;

namespace {

// "4/3 · π^2", "π^4", "2/3" for exponent 0.
std::string pretty_pi(const PiPoly& v) {
    auto [exp, coeff] = v.single_term();
    if (exp == 0) return rat_str(coeff);
    std::string pi = "π^" + std::to_string(exp);
    if (coeff == Rational(1)) return pi;
    return rat_str(coeff) + " · " + pi;
}

json pi_json(const PiPoly& v) {
    auto [exp, coeff] = v.single_term();
    json j;
    j["num"] = coeff.get_num().get_str();
    j["den"] = coeff.get_den().get_str();
    j["pi_power"] = exp;
    return j;
}

StratumSignature parse_stratum_or_exit(const std::string& text) {
    auto sig = parse_signature(text);
    if (!sig) {
        std::cerr << "error: cannot parse stratum '" << text
                  << "' (expected e.g. \"2,-1^2\")\n";
        std::exit(2);
    }
    auto reason = signature_invalid_reason(*sig);
    if (!reason.empty()) {
        std::cerr << "error: invalid stratum '" << text << "': " << reason << "\n";
        std::exit(2);
    }
    return *sig;
}

WeightVariant parse_variant(const std::string& s) {
    return s == "printed" ? WeightVariant::Printed : WeightVariant::Frobenius;
}

void print_series(const StratumSignature& sig, int terms, WeightVariant wv,
                  bool connected, bool use_json) {
    ProfilePair p = to_profile(sig);
    QSeries s = connected ? zconnected_series_cached(p, terms, wv)
                          : zprime_series(p, terms, wv);
    if (use_json) {
        json j;
        j["stratum"] = format_signature(sig);
        j["kind"] = connected ? "connected" : "all";
        j["order"] = s.order;
        json coeffs = json::array();
        for (int i = 0; i <= s.order; ++i)
            coeffs.push_back(rat_str(s.coeff(i)));
        j["coeffs"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Masur-Veech volumes of strata of quadratic differentials"};
    app.require_subcommand(1);

    std::string stratum, convention = "aez", method = "auto", variant = "frobenius";
    std::string table_path;
    int terms = 12, max_weight = 6, max_degree = 6, estimate_d = 10;
    long sums_scale = 1;
    bool use_json = false;
    bool cache_clear_flag = false;

    app.add_flag("--json", use_json, "machine-readable JSON output");

    auto* c_volume = app.add_subcommand("volume", "exact volume of a stratum");
    c_volume->add_option("--stratum", stratum, "singularity orders, e.g. \"2,-1^2\"")->required();
    c_volume->add_option("--convention", convention, "eo | aez")
        ->check(CLI::IsMember({"eo", "aez"}));
    c_volume->add_option("--method", method, "auto | character-sum | closed-form")
        ->check(CLI::IsMember({"auto", "character-sum", "closed-form"}));
    c_volume->add_option("--weight-variant", variant, "frobenius | printed (debug)")
        ->check(CLI::IsMember({"frobenius", "printed"}));
    c_volume->add_option("--max-weight", max_weight, "character-sum weight cap");

    auto* c_series = app.add_subcommand("series", "q-series of all-cover counts Z'");
    c_series->add_option("--stratum", stratum)->required();
    c_series->add_option("--terms", terms, "truncation order in q");
    c_series->add_option("--weight-variant", variant)
        ->check(CLI::IsMember({"frobenius", "printed"}));

    auto* c_conn = app.add_subcommand("connected", "q-series of connected-cover counts Z0");
    c_conn->add_option("--stratum", stratum)->required();
    c_conn->add_option("--terms", terms, "truncation order in q");
    c_conn->add_option("--weight-variant", variant)
        ->check(CLI::IsMember({"frobenius", "printed"}));

    auto* c_covers = app.add_subcommand("covers", "brute-force pillow cover counts (CSV)");
    c_covers->add_option("--stratum", stratum)->required();
    c_covers->add_option("--max-degree", max_degree, "largest cover degree (even, <= 8)");

    auto* c_estimate = app.add_subcommand("estimate", "lattice-count volume estimate");
    c_estimate->add_option("--stratum", stratum)->required();
    c_estimate->add_option("-D,--D", estimate_d, "partial sum over degrees 2..2D");

    auto* c_closed = app.add_subcommand("closed-form", "sphere / hyperelliptic closed forms");
    c_closed->add_option("--stratum", stratum)->required();

    auto* c_verify = app.add_subcommand("verify", "check a volume table against the pipeline");
    c_verify->add_option("--table", table_path, "CSV with dim,genus,stratum,num,den,pi_power")
        ->required();
    c_verify->add_option("--max-weight", max_weight, "character-sum weight cap");
    c_verify->add_option("--weight-variant", variant)
        ->check(CLI::IsMember({"frobenius", "printed"}));

    auto* c_sums = app.add_subcommand("validate-sums", "numeric checks of the sum identities");
    c_sums->add_option("--scale", sums_scale, "multiplier for every truncation bound");

    auto* c_cache = app.add_subcommand("cache", "show or clear the on-disk series cache");
    c_cache->add_flag("--clear", cache_clear_flag, "remove all cached entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    WeightVariant wv = parse_variant(variant);

    try {
        if (*c_volume) {
            StratumSignature sig = parse_stratum_or_exit(stratum);
            VolumeMethod m = VolumeMethod::Auto;
            if (method == "character-sum") m = VolumeMethod::CharacterSum;
            if (method == "closed-form") m = VolumeMethod::ClosedForm;
            VolumeResult res = compute_volume(sig, m, wv, max_weight);
            const PiPoly& value = (convention == "eo") ? res.eo : res.aez;
            if (use_json) {
                auto inv = invariants(to_profile(sig));
                json j = pi_json(value);
                j["stratum"] = format_signature(sig);
                j["convention"] = (convention == "eo") ? "EO" : "AEZ-numbered";
                j["method"] = res.method;
                j["dim"] = inv.dim_c;
                j["genus"] = inv.genus;
                j["g_eff"] = inv.g_eff;
                j["weight"] = inv.weight;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << pretty_pi(value) << "\n";
            }
        } else if (*c_series || *c_conn) {
            StratumSignature sig = parse_stratum_or_exit(stratum);
            print_series(sig, terms, wv, (bool)*c_conn, use_json);
        } else if (*c_covers) {
            StratumSignature sig = parse_stratum_or_exit(stratum);
            ProfilePair p = to_profile(sig);
            if (max_degree > 8) {
                std::cerr << "error: --max-degree is capped at 8\n";
                return 2;
            }
            std::cout << "degree,all,connected\n";
            for (int two_d = 2; two_d <= max_degree; two_d += 2) {
                CoverCount c = count_pillow_covers(p, two_d);
                std::cout << two_d << "," << rat_str(c.all) << ","
                          << rat_str(c.connected) << "\n";
            }
        } else if (*c_estimate) {
            StratumSignature sig = parse_stratum_or_exit(stratum);
            EstimateReport r = estimate_volume_from_counts(to_profile(sig), estimate_d);
            if (use_json) {
                json j;
                j["stratum"] = format_signature(sig);
                j["D"] = r.D;
                j["estimate"] = r.estimate;
                j["exact"] = r.exact;
                j["ratio"] = r.ratio;
                j["warning_small_d"] = r.warning_small_d;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "estimate Vol^EO = " << r.estimate << " (D = " << r.D << ")\n";
                if (r.exact != 0)
                    std::cout << "exact    Vol^EO = " << r.exact
                              << "  ratio = " << r.ratio << "\n";
                if (r.warning_small_d)
                    std::cerr << "warning: D too small for a meaningful estimate\n";
            }
        } else if (*c_closed) {
            StratumSignature sig = parse_stratum_or_exit(stratum);
            auto inv = invariants(to_profile(sig));
            bool printed = false;
            if (inv.genus == 0) {
                std::cout << "genus0: " << pretty_pi(genus0_volume(sig)) << "\n";
                printed = true;
            }
            if (auto hyp = hyperelliptic_component_volume(sig)) {
                std::cout << "hyperelliptic (labeled): " << pretty_pi(*hyp) << "\n";
                printed = true;
            }
            if (!printed) {
                std::cerr << "error: no closed form applies to "
                          << format_signature(sig) << "\n";
                return 1;
            }
        } else if (*c_verify) {
            auto rows = load_table(table_path);
            auto report = verify_table(rows, max_weight, wv);
            if (use_json) {
                json j;
                json out = json::array();
                for (const auto& rr : report.rows) {
                    json r;
                    r["row"] = serialize_table_row(rr.row);
                    r["status"] = rr.status;
                    r["computed"] = rr.computed;
                    r["detail"] = rr.detail;
                    out.push_back(std::move(r));
                }
                j["rows"] = std::move(out);
                j["pass"] = report.pass;
                j["fail"] = report.fail;
                j["conflict"] = report.conflict;
                j["skip"] = report.skip;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& rr : report.rows) {
                    std::cout << rr.status << " " << serialize_table_row(rr.row);
                    if (!rr.computed.empty()) std::cout << "  computed " << rr.computed;
                    std::cout << "\n";
                }
                std::cout << "pass " << report.pass << ", fail " << report.fail
                          << ", conflict " << report.conflict << ", skip "
                          << report.skip << "\n";
            }
            if (!report.ok()) return 1;
        } else if (*c_sums) {
            auto checks = validate_sum_identities(sums_scale);
            bool all_pass = true;
            if (use_json) {
                json out = json::array();
                for (const auto& c : checks) {
                    json j;
                    j["name"] = c.name;
                    j["lhs"] = c.lhs;
                    j["rhs"] = c.rhs;
                    j["rel_error"] = c.rel_error;
                    j["tolerance"] = c.tolerance;
                    j["pass"] = c.pass;
                    out.push_back(std::move(j));
                    all_pass = all_pass && c.pass;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& c : checks) {
                    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name
                              << "  rel_error " << c.rel_error << " (tol "
                              << c.tolerance << ")\n";
                    all_pass = all_pass && c.pass;
                }
            }
            if (!all_pass) return 1;
        } else if (*c_cache) {
            if (cache_clear_flag) {
                int n = cache_clear();
                std::cout << "removed " << n << " entries\n";
            } else {
                CacheStats st = cache_stats();
                std::cout << "dir: " << st.dir << "\nentries: " << st.entries
                          << "\nbytes: " << st.bytes << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
