#include <wtp/counting.hpp>
#include <wtp/moment_engine.hpp>
#include <wtp/simulator.hpp>
#include <wtp/transforms.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(tok);
    return out;
}

std::vector<int> parse_labels(const std::string& pattern, int p) {
    if (pattern == "same") return wtp::labels_same(p);
    if (pattern == "distinct") return wtp::labels_distinct(p);
    std::vector<int> ids;
    std::vector<std::string> names = split_csv(pattern);
    if (static_cast<int>(names.size()) != p)
        throw CLI::ValidationError("--labels", "need " + std::to_string(p) + " labels");
    std::vector<std::string> seen;
    for (const auto& name : names) {
        auto it = std::find(seen.begin(), seen.end(), name);
        if (it == seen.end()) {
            seen.push_back(name);
            it = std::prev(seen.end());
        }
        ids.push_back(static_cast<int>(it - seen.begin()));
    }
    return ids;
}

std::vector<wtp::Rational> parse_dims(const std::string& text, int p) {
    std::vector<wtp::Rational> dims;
    for (const auto& tok : split_csv(text)) dims.push_back(wtp::rational_from_string(tok));
    if (static_cast<int>(dims.size()) != p + 1)
        throw CLI::ValidationError("--dims", "need p+1 = " + std::to_string(p + 1) + " entries");
    return dims;
}

wtp::CumulantSequence parse_cumulant_spec(const std::string& text, int length) {
    if (text == "semicircle") return wtp::semicircle_cumulants(length);
    if (text == "free-poisson") return wtp::free_poisson_cumulants(length);
    if (text.rfind("mp:", 0) == 0)
        return wtp::mp_cumulants(wtp::rational_from_string(text.substr(3)), length);
    if (text.rfind("cumulants:", 0) == 0) {
        wtp::CumulantSequence c;
        for (const auto& tok : split_csv(text.substr(10)))
            c.values.push_back(wtp::rational_from_string(tok));
        if (c.length() < length) c.values.resize(static_cast<size_t>(length), wtp::Rational(0));
        return c;
    }
    throw CLI::ValidationError("--law", "unknown cumulant spec '" + text + "'");
}

std::map<int, wtp::CumulantSequence> per_label_cumulants(const std::vector<std::string>& laws,
                                                         const std::vector<int>& labels,
                                                         int length) {
    int p = static_cast<int>(labels.size());
    if (laws.size() != 1 && static_cast<int>(laws.size()) != p)
        throw CLI::ValidationError("--law", "give one law or one per factor");
    std::map<int, wtp::CumulantSequence> out;
    for (int l = 0; l < p; ++l) {
        const std::string& spec = laws.size() == 1 ? laws[0] : laws[static_cast<size_t>(l)];
        wtp::CumulantSequence parsed = parse_cumulant_spec(spec, length);
        auto [it, inserted] = out.emplace(labels[static_cast<size_t>(l)], parsed);
        if (!inserted && it->second.values != parsed.values)
            throw CLI::ValidationError("--law", "conflicting laws for one label");
    }
    return out;
}

void print_report(const wtp::Report& rep, std::ostream& os) {
    for (const auto& line : rep.lines) os << "  " << line << "\n";
}

/// Expands "--config file.json" into --key=value tokens for keys not already
/// present on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end() || std::next(it) == args.end()) return args;
    std::ifstream in(*std::next(it));
    if (!in) throw std::runtime_error("cannot open config file " + *std::next(it));
    json cfg = json::parse(in);
    std::vector<std::string> out(args.begin(), it);
    std::vector<std::string> tail(std::next(it, 2), args.end());
    out.insert(out.end(), tail.begin(), tail.end());
    for (auto& [key, value] : cfg.items()) {
        std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : out)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (given) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back(flag);
        } else if (value.is_string()) {
            out.push_back(flag + "=" + value.get<std::string>());
        } else {
            out.push_back(flag + "=" + value.dump());
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact limit moments of Wishart-type products of random-matrix blocks"};
    app.require_subcommand(1);

    auto* enumerate =
        app.add_subcommand("enumerate", "adapted noncrossing partitions of a word power");
    int e_p = 2, e_k = 1, e_cap = -1;
    std::string e_labels = "same";
    bool e_pairs = false, e_count = false;
    enumerate->add_option("--p", e_p, "number of factors")->required();
    enumerate->add_option("--k", e_k, "word power")->required();
    enumerate->add_option("--labels", e_labels, "same | distinct | comma list");
    enumerate->add_flag("--pairs", e_pairs, "pair partitions of the doubled word");
    enumerate->add_flag("--count", e_count, "print the count only");
    enumerate->add_option("--cap", e_cap, "enumeration cap override");
    enumerate->add_option("--config", "JSON config file")->type_name("FILE");

    auto* moment = app.add_subcommand("moment", "exact limit moment by enumeration");
    int m_p = 2, m_k = 1, m_cap = -1;
    std::string m_labels = "distinct", m_dims;
    std::vector<std::string> m_laws{"semicircle"};
    moment->add_option("--p", m_p)->required();
    moment->add_option("--k", m_k)->required();
    moment->add_option("--labels", m_labels, "same | distinct | comma list");
    moment->add_option("--dims", m_dims, "d_1..d_{p+1} as rationals, comma separated");
    moment->add_option("--law", m_laws,
                       "semicircle | free-poisson | mp:t | cumulants:r1,... (one or per factor)");
    moment->add_option("--cap", m_cap);
    moment->add_option("--config", "JSON config file")->type_name("FILE");

    auto* series = app.add_subcommand("series", "moment series of the independent-block model");
    int s_p = 1, s_K = 8;
    std::string s_labels = "distinct", s_dims;
    std::vector<std::string> s_laws{"semicircle"};
    series->add_option("--p", s_p)->required();
    series->add_option("--K", s_K, "truncation order");
    series->add_option("--labels", s_labels);
    series->add_option("--dims", s_dims);
    series->add_option("--law", s_laws);
    series->add_option("--config", "JSON config file")->type_name("FILE");

    auto* verify = app.add_subcommand("verify", "internal consistency suites");
    std::string v_suite = "all";
    int v_kmax = 3, v_K = 8, v_instances = 5;
    std::uint64_t v_seed = 1;
    verify->add_option("--suite", v_suite, "all | cross | dependent | factorization");
    verify->add_option("--kmax", v_kmax, "moment orders checked by cross validation");
    verify->add_option("--K", v_K, "series truncation order");
    verify->add_option("--instances", v_instances, "random instances per suite");
    verify->add_option("--seed", v_seed);
    verify->add_option("--config", "JSON config file")->type_name("FILE");

    auto* simulate = app.add_subcommand("simulate", "finite-n Monte Carlo check");
    std::string sim_blocks, sim_labels = "distinct", sim_dims;
    std::vector<std::string> sim_laws{"semicircle"};
    int sim_trials = 100, sim_kmax = 2;
    std::uint64_t sim_seed = 1;
    double sim_rel_tol = 0.08;
    bool sim_csv = false, sim_no_exact = false;
    simulate->add_option("--blocks", sim_blocks, "block sizes n_1..n_{p+1}")->required();
    simulate->add_option("--labels", sim_labels);
    simulate->add_option("--law", sim_laws,
                         "per label: semicircle | free-poisson | mp:t | spectrum:a,b,...");
    simulate->add_option("--dims", sim_dims, "dims for the exact side (default n_j/n_1)");
    simulate->add_option("--trials", sim_trials);
    simulate->add_option("--kmax", sim_kmax);
    simulate->add_option("--seed", sim_seed);
    simulate->add_option("--rel-tol", sim_rel_tol);
    simulate->add_flag("--csv", sim_csv, "CSV rows instead of JSON");
    simulate->add_flag("--no-exact", sim_no_exact, "skip the exact comparison");
    simulate->add_option("--config", "JSON config file")->type_name("FILE");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config(std::move(args));
        std::vector<const char*> cargs{argv[0]};
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), const_cast<char**>(cargs.data()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            std::vector<int> labels = parse_labels(e_labels, e_p);
            json out;
            if (e_pairs) {
                auto pairs = wtp::enumerate_pair_adapted(e_p, e_k, labels, e_cap);
                out["word"] = wtp::format_word(wtp::make_Wtilde(e_p, labels),
                                               [](int u) { return std::to_string(u); });
                out["count"] = pairs.size();
                if (!e_count) {
                    json list = json::array();
                    for (const auto& s : pairs)
                        list.push_back(wtp::format_partition(s.as_partition()));
                    out["partitions"] = list;
                }
            } else {
                auto parts = wtp::enumerate_adapted(wtp::make_W(e_p, labels), e_k, e_cap);
                out["word"] = wtp::format_word(wtp::make_W(e_p, labels),
                                               [](int u) { return std::to_string(u); });
                out["count"] = parts.size();
                if (!e_count) {
                    json list = json::array();
                    for (const auto& s : parts) list.push_back(wtp::format_partition(s));
                    out["partitions"] = list;
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*moment) {
            std::vector<int> labels = parse_labels(m_labels, m_p);
            std::vector<wtp::Rational> dims =
                m_dims.empty() ? std::vector<wtp::Rational>(static_cast<size_t>(m_p) + 1, 1)
                               : parse_dims(m_dims, m_p);
            auto params = wtp::ModelParams::make(
                m_p, dims, labels, per_label_cumulants(m_laws, labels, 2 * m_p * m_k));
            wtp::MomentResult res = wtp::limit_moment_enumerative(m_k, params, m_cap);
            json monomials = json::array();
            for (const auto& [expv, coeff] : res.monomials)
                monomials.push_back({{"exponents", expv}, {"coefficient", coeff.get_str()}});
            json out{{"k", m_k}, {"moment", res.moment.get_str()}, {"monomials", monomials}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*series) {
            std::vector<int> labels = parse_labels(s_labels, s_p);
            std::vector<wtp::Rational> dims =
                s_dims.empty() ? std::vector<wtp::Rational>(static_cast<size_t>(s_p) + 1, 1)
                               : parse_dims(s_dims, s_p);
            auto params = wtp::ModelParams::make(s_p, dims, labels,
                                                 per_label_cumulants(s_laws, labels, 2 * s_K));
            wtp::FormalPowerSeries psi = wtp::solve_psi_independent(params, s_K);
            json coeffs = json::array();
            for (int i = 0; i <= psi.order(); ++i) coeffs.push_back(psi[i].get_str());
            json out{{"K", s_K}, {"psi", coeffs}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*verify) {
            bool pass = true;
            auto run = [&](const std::string& name, const wtp::Report& rep) {
                std::cout << "suite " << name << "\n";
                print_report(rep, std::cout);
                pass = pass && rep.pass;
            };
            wtp::Rng rng(v_seed, 0);
            auto rand_rat = [&](bool nonzero) {
                long num = static_cast<long>(rng.uniform() * 9) - 4;
                if (nonzero && num == 0) num = 1;
                long den = 1 + static_cast<long>(rng.uniform() * 4);
                return wtp::make_rational(num, den);
            };
            auto rand_cumulants = [&](int length) {
                wtp::CumulantSequence c;
                for (int i = 1; i <= length; ++i) c.values.push_back(rand_rat(i == 2));
                return c;
            };
            auto rand_dims = [&](int p) {
                std::vector<wtp::Rational> d;
                for (int i = 0; i <= p; ++i) {
                    long num = 1 + static_cast<long>(rng.uniform() * 6);
                    long den = 1 + static_cast<long>(rng.uniform() * 3);
                    d.push_back(wtp::make_rational(num, den));
                }
                return d;
            };

            bool all = v_suite == "all";
            if (all || v_suite == "cross") {
                for (int inst = 0; inst < v_instances; ++inst) {
                    for (int p = 1; p <= 2; ++p) {
                        int len = 4 * p * v_kmax;
                        auto labels = wtp::labels_distinct(p);
                        std::map<int, wtp::CumulantSequence> cums;
                        for (int u : labels) cums[u] = rand_cumulants(len);
                        auto params = wtp::ModelParams::make(p, rand_dims(p), labels, cums);
                        run("cross p=" + std::to_string(p) + " instance " + std::to_string(inst),
                            wtp::cross_validate(v_kmax, params));
                    }
                }
                auto fp = wtp::ModelParams::make(2, {1, 1, 1}, wtp::labels_same(2),
                                                 {{0, wtp::free_poisson_cumulants(4 * v_kmax)}});
                run("cross dependent free-poisson", wtp::cross_validate(v_kmax, fp));
            }
            if (all || v_suite == "dependent") {
                run("dependent semicircle", wtp::verify_dependent_functional_equation(wtp::semicircle(2 * v_K), v_K));
                run("dependent free-poisson", wtp::verify_dependent_functional_equation(wtp::free_poisson(2 * v_K), v_K));
                for (int inst = 0; inst < v_instances; ++inst) {
                    auto nu = wtp::distribution_from_cumulants(rand_cumulants(2 * v_K).values);
                    run("dependent random " + std::to_string(inst), wtp::verify_dependent_functional_equation(nu, v_K));
                }
            }
            if (all || v_suite == "factorization") {
                for (int inst = 0; inst < v_instances; ++inst) {
                    for (int p = 1; p <= 2; ++p) {
                        auto labels = wtp::labels_distinct(p);
                        std::map<int, wtp::CumulantSequence> cums;
                        for (int u : labels) cums[u] = rand_cumulants(4 * v_K);
                        auto params = wtp::ModelParams::make(p, rand_dims(p), labels, cums);
                        run("factorization p=" + std::to_string(p) + " instance " + std::to_string(inst),
                            wtp::verify_single_factor_decomposition(params, v_K));
                    }
                }
            }
            std::cout << (pass ? "verify: PASS" : "verify: FAIL") << "\n";
            return pass ? 0 : kExitVerifyFail;
        }

        if (*simulate) {
            wtp::EnsembleSpec spec;
            for (const auto& tok : split_csv(sim_blocks))
                spec.block_sizes.push_back(std::stoi(tok));
            int p = static_cast<int>(spec.block_sizes.size()) - 1;
            if (p < 1) throw CLI::ValidationError("--blocks", "need at least two blocks");
            spec.labels = parse_labels(sim_labels, p);
            if (sim_laws.size() != 1 && static_cast<int>(sim_laws.size()) != p)
                throw CLI::ValidationError("--law", "give one law or one per factor");
            std::map<int, std::string> law_text;
            for (int l = 0; l < p; ++l) {
                const std::string& text =
                    sim_laws.size() == 1 ? sim_laws[0] : sim_laws[static_cast<size_t>(l)];
                auto [it, inserted] = law_text.emplace(spec.labels[static_cast<size_t>(l)], text);
                if (!inserted && it->second != text)
                    throw CLI::ValidationError("--law", "conflicting laws for one label");
                spec.laws.emplace(spec.labels[static_cast<size_t>(l)],
                                  wtp::SpectralLaw::parse(text));
            }
            spec.trials = sim_trials;
            spec.seed = sim_seed;
            spec.validate();

            json rows = json::array();
            bool pass = true;
            if (sim_no_exact) {
                wtp::SimulationResult sim = wtp::empirical_wishart_moments(spec, sim_kmax);
                for (int k = 1; k <= sim_kmax; ++k) {
                    const auto& e = sim.moments[static_cast<size_t>(k) - 1];
                    rows.push_back({{"k", k}, {"estimate", e.estimate}, {"stderr", e.stderr_}});
                }
            } else {
                std::vector<wtp::Rational> dims;
                if (sim_dims.empty()) {
                    for (int b : spec.block_sizes)
                        dims.push_back(wtp::make_rational(b, spec.block_sizes[0]));
                } else {
                    dims = parse_dims(sim_dims, p);
                }
                std::map<int, wtp::CumulantSequence> cums;
                for (int l = 0; l < p; ++l)
                    cums.emplace(spec.labels[static_cast<size_t>(l)],
                                 spec.laws.at(spec.labels[static_cast<size_t>(l)])
                                     .cumulants(2 * p * sim_kmax));
                auto params = wtp::ModelParams::make(p, dims, spec.labels, cums);
                wtp::ConvergenceReport rep =
                    wtp::convergence_report(spec, params, sim_kmax, sim_rel_tol);
                for (const auto& row : rep.rows)
                    rows.push_back({{"k", row.k},
                                    {"estimate", row.estimate},
                                    {"stderr", row.stderr_},
                                    {"exact", row.exact},
                                    {"pass", row.pass}});
                pass = rep.pass;
            }
            if (sim_csv) {
                std::cout << "k,estimate,stderr,exact,pass\n";
                for (const auto& row : rows) {
                    std::cout << row["k"] << "," << row["estimate"].dump() << ","
                              << row["stderr"].dump() << ","
                              << (row.contains("exact") ? row["exact"].dump() : "") << ","
                              << (row.contains("pass") ? row["pass"].dump() : "") << "\n";
                }
            } else {
                json out{{"rows", rows}, {"pass", pass}};
                std::cout << out.dump(2) << "\n";
            }
            return pass ? 0 : kExitVerifyFail;
        }
    } catch (const wtp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
