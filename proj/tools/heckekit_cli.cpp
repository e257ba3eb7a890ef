// heckekit command-line front end.
#include "heckekit/arith.hpp"
#include "heckekit/eisenstein.hpp"
#include "heckekit/error.hpp"
#include "heckekit/identities.hpp"
#include "heckekit/kloosterman.hpp"
#include "heckekit/matgroup.hpp"
#include "heckekit/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdlib>
#include <future>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace heckekit;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

// Bad input detected after CLI11 parsing; reported like a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string num(std::int64_t x) { return std::to_string(x); }

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string mat_str(const IntMat2& m) {
    return "[[" + num(m.a) + "," + num(m.b) + "],[" + num(m.c) + "," + num(m.d) + "]]";
}

json mat_json(const IntMat2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

void csv_out(const Table& t) {
    auto line = [](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
            if (i) std::cout << ',';
            if (quote) {
                std::cout << '"';
                for (char ch : cells[i]) {
                    if (ch == '"') std::cout << '"';
                    std::cout << ch;
                }
                std::cout << '"';
            } else {
                std::cout << cells[i];
            }
        }
        std::cout << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

struct Output {
    std::string format;
    void emit(const std::string& command, const json& params, const json& payload, const Table& table) const {
        if (format == "csv") {
            csv_out(table);
            return;
        }
        json env;
        env["command"] = command;
        env["params"] = params;
        env["format"] = "json";
        env["payload"] = payload;
        std::cout << env.dump(2) << '\n';
    }
};

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("cannot read complex number '" + s + "' (expected RE or RE,IM)");
    }
}

// "w" or "u/w"
Cusp parse_cusp(const std::string& tok, std::int64_t q) {
    try {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) return {q, std::stoll(tok), 1};
        return {q, std::stoll(tok.substr(slash + 1)), std::stoll(tok.substr(0, slash))};
    } catch (const std::logic_error&) {
        throw UsageError("cannot read cusp '" + tok + "' (expected w or u/w)");
    }
}

json parse_param_value(const std::string& v) {
    json j = json::parse(v, nullptr, false);
    if (!j.is_discarded()) return j;
    if (v.find(',') != std::string::npos) {
        j = json::parse("[" + v + "]", nullptr, false);
        if (!j.is_discarded()) return j;
    }
    return v;
}

std::string default_format() {
    const char* env = std::getenv("HECKEKIT_FORMAT");
    if (env && (std::string(env) == "json" || std::string(env) == "csv")) return env;
    return "json";
}

json report_json(const VerificationReport& r, bool timing) {
    json j = r.to_json();
    if (!timing) j["wall_ms"] = 0;
    return j;
}

std::vector<std::string> report_row(const VerificationReport& r, bool timing) {
    return {r.id,         r.pass ? "true" : "false", num(r.max_abs_error), num(r.tol), num(r.N), std::to_string(r.seed),
            num(timing ? r.wall_ms : 0.0)};
}

const std::vector<std::string> kReportHeader{"id", "pass", "max_abs_error", "tol", "N", "seed", "wall_ms"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heckekit: cusps, Kloosterman sums, Eisenstein series and identity checks for Gamma_0(q)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = default_format();
    std::optional<double> g_tol;
    std::optional<std::int64_t> g_trunc;
    app.add_option("--format", format, "output format (default from HECKEKIT_FORMAT, else json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", g_tol, "tolerance override");
    app.add_option("--trunc", g_trunc, "truncation override");

    // cusps
    auto* cusps = app.add_subcommand("cusps", "canonical cusps of Gamma_0(q) with widths and scaling matrices");
    std::int64_t cq = 0;
    cusps->add_option("q", cq, "level")->required()->check(CLI::PositiveNumber);

    // kloosterman
    auto* kl = app.add_subcommand("kloosterman", "cusp-pair Kloosterman sums per modulus index");
    std::int64_t kq = 0, km = 0, kn = 0, kcmax = 10;
    std::string kcusps = "1,1", kmethod = "brute", kconv = "shifted";
    kl->add_option("q", kq, "level")->required()->check(CLI::PositiveNumber);
    kl->add_option("m", km, "first frequency")->required();
    kl->add_option("n", kn, "second frequency")->required();
    kl->add_option("--cusps", kcusps, "cusp pair as w1,w2 or u1/w1,u2/w2");
    kl->add_option("--cmax", kcmax, "largest modulus index")->check(CLI::PositiveNumber);
    kl->add_option("--method", kmethod, "brute | closed | factor")->check(CLI::IsMember({"brute", "closed", "factor"}));
    kl->add_option("--convention", kconv, "plain | shifted (brute only)")->check(CLI::IsMember({"plain", "shifted"}));

    // eisenstein
    auto* ei = app.add_subcommand("eisenstein", "constant term phi or the n-th Fourier coefficient");
    std::int64_t eq = 0, ew1 = 0, ew2 = 0;
    std::optional<std::int64_t> en;
    std::string es = "1.6,0.7";
    ei->add_option("q", eq, "square-free level")->required()->check(CLI::PositiveNumber);
    ei->add_option("w1", ew1, "first cusp denominator")->required();
    ei->add_option("w2", ew2, "second cusp denominator")->required();
    ei->add_option("--s", es, "RE,IM");
    ei->add_option("--n", en, "coefficient index (omit for phi)");

    // scattering
    auto* sc = app.add_subcommand("scattering", "scattering matrix and its unitarity residual");
    std::int64_t sq = 0;
    std::string ss = "0.5,3";
    sc->add_option("q", sq, "square-free level")->required()->check(CLI::PositiveNumber);
    sc->add_option("--s", ss, "RE,IM");

    // verify
    auto* ve = app.add_subcommand("verify", "run one identity check");
    std::string vid;
    std::vector<std::string> vparams;
    std::uint64_t vseed = 0;
    bool vtiming = false;
    ve->add_option("id", vid, "identity id")->required();
    ve->add_option("--param", vparams, "k=v, repeatable; v is JSON or a comma list");
    ve->add_option("--seed", vseed, "seed for parameter draws");
    ve->add_flag("--timing", vtiming, "report real wall time (otherwise 0)");

    // verify-all
    auto* va = app.add_subcommand("verify-all", "run every identity check on its defaults");
    std::string vfilter;
    std::uint64_t vaseed = 0;
    bool vatiming = false;
    int vjobs = 1;
    va->add_option("--filter", vfilter, "substring of the id");
    va->add_option("--seed", vaseed, "seed for parameter draws");
    va->add_flag("--timing", vatiming, "report real wall time (otherwise 0)");
    va->add_option("--jobs", vjobs, "worker threads")->check(CLI::Range(1, 64));

    // moment
    auto* mo = app.add_subcommand("moment", "weighted fourth moment by both quadrature paths");
    double mT = 3.0, mheight = 400.0;
    std::string mcoeffs = "1";
    mo->add_option("--T", mT, "Gaussian width")->check(CLI::PositiveNumber);
    mo->add_option("--coeffs", mcoeffs, "a1,a2,... coefficients of A(s)");
    mo->add_option("--height", mheight, "height cap")->check(CLI::PositiveNumber);

    auto* li = app.add_subcommand("list", "list identity ids and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const Output out{format};
    try {
        if (*cusps) {
            json payload = json::array();
            Table t{{"cusp", "u", "w", "width", "pi"}, {}};
            for (const auto& c : enumerate_cusps(cq)) {
                const auto sd = scaling_data(c, Convention::PLAIN);
                payload.push_back({{"cusp", c.str()}, {"u", c.u}, {"w", c.w}, {"width", sd.width}, {"pi", mat_json(sd.pi_matrix)}});
                t.rows.push_back({c.str(), num(c.u), num(c.w), num(sd.width), mat_str(sd.pi_matrix)});
            }
            out.emit("cusps", {{"q", cq}}, payload, t);
            return kOk;
        }

        if (*kl) {
            const auto comma = kcusps.find(',');
            if (comma == std::string::npos) throw UsageError("--cusps expects two cusps separated by a comma");
            const Cusp a = parse_cusp(kcusps.substr(0, comma), kq), b = parse_cusp(kcusps.substr(comma + 1), kq);
            const Convention conv = kconv == "plain" ? Convention::PLAIN : Convention::SHIFTED;
            json payload = json::array();
            Table t{{"c", "re", "im"}, {}};
            const std::int64_t cmax = g_trunc.value_or(kcmax);
            auto row = [&](std::int64_t c, cplx v) {
                payload.push_back({{"c", c}, {"value", cjson(v)}});
                t.rows.push_back({num(c), num(v.real()), num(v.imag())});
            };
            if (kmethod == "brute") {
                for (std::int64_t c = 1; c <= cmax; ++c)
                    row(c, general_kloosterman_bruteforce({kq, a, b, conv, km, kn, c}));
            } else if (kmethod == "closed") {
                if (a.u != 1 || b.u != 1) throw UsageError("--method closed takes cusps of the form 1/w");
                const std::int64_t guard = std::gcd(a.v(), b.w) * std::gcd(a.w, b.v());
                const std::int64_t step = std::gcd(a.w, b.w);
                for (std::int64_t r = 1; step * r <= cmax; ++r)
                    if (std::gcd(r, guard) == 1) row(step * r, general_kloosterman_squarefree(kq, a.w, b.w, km, kn, r));
            } else {
                for (std::int64_t c = 1; c <= cmax; ++c) row(c, kloosterman_factorize(kq, a, b, km, kn, c).product());
            }
            out.emit("kloosterman",
                     {{"q", kq}, {"m", km}, {"n", kn}, {"cusps", {a.str(), b.str()}}, {"cmax", cmax}, {"method", kmethod},
                      {"convention", kmethod == "factor" ? "plain" : kconv}},
                     payload, t);
            return kOk;
        }

        if (*ei) {
            const cplx s = parse_complex(es);
            json params{{"q", eq}, {"w1", ew1}, {"w2", ew2}, {"s", cjson(s)}};
            if (en) {
                params["n"] = *en;
                const auto c = eisen_coeff(*en, s, eq, ew1, ew2);
                out.emit("eisenstein", params, {{"bracket", cjson(c.bracket)}, {"coefficient", cjson(c.assembled)}},
                         {{"quantity", "re", "im"},
                          {{"bracket", num(c.bracket.real()), num(c.bracket.imag())},
                           {"coefficient", num(c.assembled.real()), num(c.assembled.imag())}}});
            } else {
                const cplx p = eisen_phi(s, eq, ew1, ew2);
                out.emit("eisenstein", params, {{"phi", cjson(p)}}, {{"quantity", "re", "im"}, {{"phi", num(p.real()), num(p.imag())}}});
            }
            return kOk;
        }

        if (*sc) {
            const cplx s = parse_complex(ss);
            const auto m = scattering_matrix(s, sq);
            const double res = unitarity_residual(s, sq);
            json entries = json::array();
            Table t{{"row_w", "col_w", "re", "im"}, {}};
            for (std::size_t i = 0; i < m.order.size(); ++i) {
                json r = json::array();
                for (std::size_t j = 0; j < m.order.size(); ++j) {
                    r.push_back(cjson(m.entries[i][j]));
                    t.rows.push_back({num(m.order[i]), num(m.order[j]), num(m.entries[i][j].real()), num(m.entries[i][j].imag())});
                }
                entries.push_back(r);
            }
            t.header.push_back("unitarity_residual");
            for (auto& r : t.rows) r.push_back(num(res));
            out.emit("scattering", {{"q", sq}, {"s", cjson(s)}},
                     {{"order", m.order}, {"entries", entries}, {"unitarity_residual", res}}, t);
            return kOk;
        }

        if (*ve) {
            json params = json::object();
            for (const auto& kv : vparams) {
                const auto eq_pos = kv.find('=');
                if (eq_pos == std::string::npos || eq_pos == 0) throw UsageError("--param expects k=v, got '" + kv + "'");
                params[kv.substr(0, eq_pos)] = parse_param_value(kv.substr(eq_pos + 1));
            }
            if (g_tol) params["tol"] = *g_tol;
            if (g_trunc) params["N"] = *g_trunc;
            const auto r = verify(vid, params, vseed);
            out.emit("verify", {{"id", vid}, {"params", params}, {"seed", vseed}}, report_json(r, vtiming),
                     {kReportHeader, {report_row(r, vtiming)}});
            return r.pass ? kOk : kFail;
        }

        if (*va) {
            std::vector<std::string> ids;
            for (const auto& info : list_identities())
                if (info.id.find(vfilter) != std::string::npos) ids.push_back(info.id);
            json params = json::object();
            if (g_tol) params["tol"] = *g_tol;
            if (g_trunc) params["N"] = *g_trunc;
            // Each slot holds a report or an error message; order follows the registry.
            struct Slot {
                std::optional<VerificationReport> rep;
                std::string error;
            };
            std::vector<Slot> slots(ids.size());
            auto run = [&](std::size_t i) {
                try {
                    slots[i].rep = verify(ids[i], params, vaseed);
                } catch (const std::exception& e) {
                    slots[i].error = e.what();
                }
            };
            std::vector<std::future<void>> workers;
            std::atomic<std::size_t> next{0};
            for (int w = 0; w < vjobs; ++w)
                workers.push_back(std::async(std::launch::async, [&] {
                    for (std::size_t i = next++; i < ids.size(); i = next++) run(i);
                }));
            for (auto& f : workers) f.get();

            bool all = true;
            json reports = json::array();
            Table t{kReportHeader, {}};
            t.header.push_back("error");
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (slots[i].rep) {
                    all = all && slots[i].rep->pass;
                    reports.push_back(report_json(*slots[i].rep, vatiming));
                    auto row = report_row(*slots[i].rep, vatiming);
                    row.push_back("");
                    t.rows.push_back(row);
                } else {
                    all = false;
                    reports.push_back({{"id", ids[i]}, {"pass", false}, {"error", slots[i].error}});
                    t.rows.push_back({ids[i], "false", "", "", "", std::to_string(vaseed), "", slots[i].error});
                }
            }
            out.emit("verify-all", {{"filter", vfilter}, {"seed", vaseed}, {"overrides", params}},
                     {{"all_pass", all}, {"count", ids.size()}, {"reports", reports}}, t);
            return all ? kOk : kFail;
        }

        if (*mo) {
            std::vector<cplx> alpha;
            std::stringstream ss_(mcoeffs);
            for (std::string tok; std::getline(ss_, tok, ',');) {
                try {
                    std::size_t used = 0;
                    alpha.emplace_back(std::stod(tok, &used), 0.0);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::logic_error&) {
                    throw UsageError("cannot read coefficient '" + tok + "'");
                }
            }
            const double tol = g_tol.value_or(1e-8);
            const auto m = moment_quadrature(WeightSpec::gaussian_t(mT), alpha, mheight, tol);
            json coeffs = json::array();
            for (auto a : alpha) coeffs.push_back(a.real());
            out.emit("moment", {{"T", mT}, {"coeffs", coeffs}, {"height", mheight}, {"tol", tol}},
                     {{"rearranged", m.rearranged},
                      {"direct", m.direct},
                      {"difference", m.difference()},
                      {"tail_bound", m.tail_bound},
                      {"cutoff", m.cutoff}},
                     {{"rearranged", "direct", "difference", "tail_bound", "cutoff"},
                      {{num(m.rearranged), num(m.direct), num(m.difference()), num(m.tail_bound), num(m.cutoff)}}});
            return kOk;
        }

        if (*li) {
            json payload = json::array();
            Table t{{"id", "description", "default_N", "default_tol", "params"}, {}};
            for (const auto& info : list_identities()) {
                json schema = json::array();
                std::string names;
                for (const auto& p : info.schema) {
                    schema.push_back({{"name", p.name}, {"default", p.default_value}, {"help", p.help}});
                    names += (names.empty() ? "" : " ") + p.name;
                }
                payload.push_back({{"id", info.id},
                                   {"description", info.description},
                                   {"default_N", info.default_N},
                                   {"default_tol", info.default_tol},
                                   {"params", schema}});
                t.rows.push_back({info.id, info.description, num(info.default_N), num(info.default_tol), names});
            }
            out.emit("list", json::object(), payload, t);
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << " (see `heckekit list`)\n";
        return kUsage;
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidModulus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConventionUnavailable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kOk;
}
