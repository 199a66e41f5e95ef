// schurkit: exact partition/tableau combinatorics, integer linear algebra,
// Schur/Weyl modules, Schur complexes, and symbolic geometry on flag
// varieties, with deterministic text or JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schurkit/bott.hpp"
#include "schurkit/partitions.hpp"
#include "schurkit/schur_complexes.hpp"
#include "schurkit/schur_weyl.hpp"
#include "schurkit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace schurkit;

namespace {

/// Parse "1,2;3,4" into a matrix (rows separated by ';').
Mat parse_mat(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::size_t cols = 0;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Int> entries;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) entries.emplace_back(Int(cell));
        if (!rows.empty() && entries.size() != cols)
            throw CLI::ValidationError("--rho", "ragged matrix rows");
        cols = entries.size();
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw CLI::ValidationError("--rho", "empty matrix");
    Mat m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

json module_json(const PresentedModule& mod) {
    json j;
    j["free_rank"] = mod.free_rank;
    j["torsion"] = json::array();
    for (const auto& t : mod.torsion) j["torsion"].push_back(t.str());
    j["text"] = mod.to_text();
    return j;
}

json suite_json(const SuiteReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.pass();
    j["elapsed_ms"] = rep.elapsed_ms;
    j["cases"] = json::array();
    for (const auto& c : rep.cases) {
        json cj;
        cj["inputs"] = c.inputs;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["pass"] = c.pass;
        j["cases"].push_back(cj);
    }
    return j;
}

void emit(const std::string& format, const json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int worker_count() {
    if (const char* env = std::getenv("SCHURKIT_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"schurkit: exact Schur/Weyl module and Schur complex calculator"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // schur / weyl ------------------------------------------------------
    std::string shape_text, action = "rank";
    int rank_r = 0;
    auto add_module_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--shape", shape_text, "skew shape, e.g. 3,2,1/1")->required();
        cmd->add_option("--rank", rank_r, "rank of the base free module")->required();
        if (name == "schur")
            cmd->add_option("action", action, "rank | basis")
                ->check(CLI::IsMember({"rank", "basis"}));
        else
            cmd->add_option("action", action, "rank")->check(CLI::IsMember({"rank"}));
        return cmd;
    };
    CLI::App* schur = add_module_cmd("schur", "Schur module of a free module");
    CLI::App* weyl = add_module_cmd("weyl", "Weyl module of a free module");

    // lr ---------------------------------------------------------------
    std::string mu_text, tau_text, lambda_text;
    CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,tau}");
    lr->add_option("--mu", mu_text)->required();
    lr->add_option("--tau", tau_text)->required();
    lr->add_option("--lambda", lambda_text)->required();

    // skew-decompose ----------------------------------------------------
    CLI::App* skewd = app.add_subcommand("skew-decompose",
                                         "decompose a skew Schur module into straight shapes");
    skewd->add_option("--shape", shape_text, "skew shape, e.g. 3,2,1/1")->required();

    // schur-complex / homology ------------------------------------------
    std::string rho_text;
    int zero_m = -1, zero_n = -1;
    auto add_complex_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--shape", shape_text, "skew shape, e.g. 3,2,1/1")->required();
        cmd->add_option("--rho", rho_text, "matrix of rho, rows separated by ';', e.g. 1,0;0,2");
        cmd->add_option("--m", zero_m, "source rank (zero map shortcut)");
        cmd->add_option("--n", zero_n, "target rank (zero map shortcut)");
        return cmd;
    };
    CLI::App* scomplex =
        add_complex_cmd("schur-complex", "degreewise ranks of the Schur complex of rho");
    CLI::App* homology_cmd =
        add_complex_cmd("homology", "homology of the Schur complex of rho");

    // bott --------------------------------------------------------------
    std::string weight_text, dd_text;
    int grass_d = -1, char_p = -1;
    bool have_char = false;
    CLI::App* bott = app.add_subcommand("bott", "symbolic pushforward of a line bundle weight");
    bott->add_option("--weight", weight_text, "integer weight, e.g. 3,1,0,2")->required();
    bott->add_option("--dd", dd_text, "partial flag block boundaries, e.g. 2,3");
    bott->add_option("--grass", grass_d, "Grassmannian block size d");
    bott->add_option("--char", char_p, "characteristic for the modular variant")
        ->each([&](const std::string&) { have_char = true; });

    // verify ------------------------------------------------------------
    std::string suite_name;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name, "suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*schur || *weyl) {
            SkewShape shape = SkewShape::parse(shape_text);
            Variant v = *schur ? Variant::Schur : Variant::Weyl;
            if (action == "rank") {
                long long r = module_rank(shape, rank_r, v);
                json j;
                j["shape"] = shape.to_text();
                j["rank"] = r;
                emit(format, j, std::to_string(r) + "\n");
            } else {
                // basis: the column-strict tableaux indexing the standard basis
                auto tabs = enumerate_ssyt(shape, rank_r);
                json j;
                j["shape"] = shape.to_text();
                j["rank"] = static_cast<long long>(tabs.size());
                j["basis"] = json::array();
                std::ostringstream os;
                for (const auto& t : tabs) {
                    json rows = json::array();
                    for (std::size_t i = 0; i < shape.outer().length(); ++i) {
                        json row = json::array();
                        for (int c = shape.inner().at(i); c < shape.outer().at(i); ++c)
                            row.push_back(t.entries.at({static_cast<int>(i), c}));
                        rows.push_back(row);
                        for (const auto& e : row) os << e.get<int>() << " ";
                        os << "| ";
                    }
                    j["basis"].push_back(rows);
                    os << "\n";
                }
                emit(format, j, os.str());
            }
        } else if (*lr) {
            long long c = lr_coefficient(Partition::parse(mu_text), Partition::parse(tau_text),
                                         Partition::parse(lambda_text));
            json j;
            j["coefficient"] = c;
            emit(format, j, std::to_string(c) + "\n");
        } else if (*skewd) {
            SkewShape shape = SkewShape::parse(shape_text);
            auto taus = skew_decomposition(shape);
            json j;
            j["shape"] = shape.to_text();
            j["summands"] = json::array();
            std::ostringstream os;
            for (const auto& tau : taus) {
                j["summands"].push_back(tau.to_csv());
                os << tau.to_text() << "\n";
            }
            emit(format, j, os.str());
        } else if (*scomplex || *homology_cmd) {
            SkewShape shape = SkewShape::parse(shape_text);
            Mat rho;
            if (!rho_text.empty())
                rho = parse_mat(rho_text);
            else if (zero_m >= 0 && zero_n >= 0)
                rho = Mat(zero_n, zero_m);
            else
                throw CLI::ValidationError("--rho", "need --rho or both --m and --n");
            if (*scomplex) {
                SchurComplex sc = schur_complex(shape, rho);
                json j;
                j["shape"] = shape.to_text();
                j["ranks"] = json::array();
                std::ostringstream os;
                for (int k = sc.complex.lo(); k <= sc.complex.hi(); ++k) {
                    j["ranks"].push_back(sc.complex.rank(k));
                    os << "degree " << k << ": rank " << sc.complex.rank(k) << "\n";
                }
                emit(format, j, os.str());
            } else {
                auto H = derived_schur_homology(shape, rho);
                json j;
                j["shape"] = shape.to_text();
                j["homology"] = json::array();
                std::ostringstream os;
                for (std::size_t k = 0; k < H.size(); ++k) {
                    j["homology"].push_back(module_json(H[k]));
                    os << "H_" << k << " = " << H[k].to_text() << "\n";
                }
                emit(format, j, os.str());
            }
        } else if (*bott) {
            Weight w = parse_ints(weight_text);
            if (have_char) {
                Report rep = char_p_variant(w, char_p);
                json j;
                j["answer"] = "char-p";
                j["lines"] = rep.lines;
                emit(format, j, rep.to_text());
            } else {
                BottAnswer ans;
                if (!dd_text.empty())
                    ans = partial_flag_bott(w, parse_ints(dd_text));
                else if (grass_d >= 0) {
                    GrassWeight gw;
                    gw.n = static_cast<int>(w.size());
                    gw.d = grass_d;
                    std::vector<int> alpha(w.begin(), w.begin() + grass_d);
                    std::vector<int> beta(w.begin() + grass_d, w.end());
                    gw.alpha = Partition(alpha);
                    gw.beta = Partition(beta);
                    ans = grassmann_bott(gw);
                } else
                    ans = bott_algorithm(w);
                json j;
                if (ans.zero)
                    j["answer"] = "zero";
                else {
                    j["answer"] = "twist";
                    j["partition"] = ans.partition;
                    j["shift"] = ans.shift;
                    j["negative_flag"] = ans.negative_flag;
                }
                emit(format, j, ans.to_text() + "\n");
            }
        } else if (*verify) {
            std::vector<std::string> names =
                suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
            std::vector<SuiteReport> reports(names.size());
            int workers = worker_count();
            if (workers > 1 && names.size() > 1) {
                std::vector<std::future<SuiteReport>> futs;
                for (const auto& n : names)
                    futs.push_back(std::async(std::launch::async,
                                              [n] { return run_suite(n); }));
                for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
            } else {
                for (std::size_t i = 0; i < names.size(); ++i) {
                    std::cerr << "running suite " << names[i] << "...\n";
                    reports[i] = run_suite(names[i]);
                }
            }
            bool all_pass = true;
            json j = json::array();
            std::ostringstream os;
            for (const auto& rep : reports) {
                all_pass = all_pass && rep.pass();
                j.push_back(suite_json(rep));
                os << rep.to_text();
            }
            emit(format, j, os.str());
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
