// Command-line front end: compute the graded multiplicity series, run
// formula-vs-oracle sweeps, emit projective-cover decompositions and
// multiplicity tables.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 hypothesis violation.

#include <CLI11.hpp>

#include <stmult/errors.hpp>
#include <stmult/formulas.hpp>
#include <stmult/kostka.hpp>
#include <stmult/oracles.hpp>
#include <stmult/pim.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace stmult;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

struct Output {
    std::string format = "json"; // json | csv | pretty
    std::string path;            // empty -> stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream f(path);
            if (!f) throw std::invalid_argument("cannot open output file: " + path);
            f << text;
            if (!text.empty() && text.back() != '\n') f << '\n';
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", out.path, "Write output to FILE instead of stdout");
}

std::string series_json(const GroupParams& P, const LaurentSeries& s, const std::string& theorem,
                        bool conjecture, const Weight* target = nullptr) {
    std::ostringstream os;
    std::string body = s.to_json(); // {"shift":..,"trunc":..,"coeffs":[..]}
    body.pop_back();                // strip '}' and extend
    os << body << ",\"n\":" << P.n << ",\"p\":" << P.p << ",\"r\":" << P.r << ",\"q\":" << P.q
       << ",\"theorem\":\"" << theorem << "\",\"conjecture\":" << (conjecture ? "true" : "false");
    if (target) {
        os << ",\"target\":[";
        for (std::size_t i = 0; i < target->size(); ++i) {
            if (i) os << ',';
            os << (*target)[i];
        }
        os << ']';
    }
    os << '}';
    return os.str();
}

std::string series_csv(const LaurentSeries& s) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (long long a = std::min<long long>(0, s.shift()); a <= s.trunc(); ++a)
        os << a << ',' << s.coefficient_at(a).str() << '\n';
    return os.str();
}

std::string series_pretty(const GroupParams& P, const LaurentSeries& s, const std::string& theorem,
                          bool conjecture) {
    std::ostringstream os;
    os << P.describe() << "  [" << theorem << "]";
    if (conjecture) os << "  (CONJECTURE)";
    os << "\n" << s.to_string() << "\n";
    return os.str();
}

void emit_series(const Output& out, const GroupParams& P, const LaurentSeries& s,
                 const std::string& theorem, bool conjecture, const Weight* target = nullptr) {
    if (out.format == "json")
        out.write(series_json(P, s, theorem, conjecture, target));
    else if (out.format == "csv")
        out.write(series_csv(s));
    else
        out.write(series_pretty(P, s, theorem, conjecture));
}

struct FactorFlags {
    std::string factor = "wedge";
    int m = -1;
    int ell = -1;
    std::string nu_text;
    std::string mu_text;
    bool m_given = false, ell_given = false, nu_given = false, mu_given = false;
};

void add_factor_flags(CLI::App* cmd, FactorFlags& ff) {
    cmd->add_option("--factor", ff.factor, "Tensor factor kind")
        ->check(CLI::IsMember({"wedge", "wedge-dual", "wedgenu", "wedgenu-dual", "simple",
                               "simple-dual", "powerdet", "none"}));
    cmd->add_option("--m", ff.m, "Exterior power degree (wedge factors)")
        ->each([&ff](const std::string&) { ff.m_given = true; });
    cmd->add_option("--ell", ff.ell, "Tensor power (powerdet factor)")
        ->each([&ff](const std::string&) { ff.ell_given = true; });
    cmd->add_option("--nu", ff.nu_text, "Partition, comma separated (wedgenu factors)")
        ->each([&ff](const std::string&) { ff.nu_given = true; });
    cmd->add_option("--mu", ff.mu_text, "Partition, comma separated (simple factors)")
        ->each([&ff](const std::string&) { ff.mu_given = true; });
}

TensorFactor build_factor(const FactorFlags& ff) {
    auto need = [](bool given, const char* flag, const char* factor) {
        if (!given)
            throw CLI::ValidationError(std::string("--") + flag + " is required for --factor " +
                                       factor);
    };
    if (ff.factor == "wedge") {
        need(ff.m_given, "m", "wedge");
        return TensorFactor::wedge(ff.m);
    }
    if (ff.factor == "wedge-dual") {
        need(ff.m_given, "m", "wedge-dual");
        return TensorFactor::wedge_dual(ff.m);
    }
    if (ff.factor == "wedgenu") {
        need(ff.nu_given, "nu", "wedgenu");
        return TensorFactor::wedge_nu(parse_partition(ff.nu_text));
    }
    if (ff.factor == "wedgenu-dual") {
        need(ff.nu_given, "nu", "wedgenu-dual");
        return TensorFactor::wedge_nu_dual(parse_partition(ff.nu_text));
    }
    if (ff.factor == "simple") {
        need(ff.mu_given, "mu", "simple");
        return TensorFactor::simple(parse_partition(ff.mu_text));
    }
    if (ff.factor == "simple-dual") {
        need(ff.mu_given, "mu", "simple-dual");
        return TensorFactor::simple_dual(parse_partition(ff.mu_text));
    }
    if (ff.factor == "powerdet") {
        need(ff.ell_given, "ell", "powerdet");
        return TensorFactor::power_det(ff.ell);
    }
    return TensorFactor::none();
}

// ------------------------------------------------------------------ verify

struct VerifyCell {
    TensorFactor factor;
    Partition nu; // oracle-side wedge parts
    long long k;
    bool o1_applicable;
};

bool o1_in_domain(const GroupParams& P, const Partition& nu, long long k) {
    long long kr = P.det_reduce(k);
    if (nu.length() <= 1) return true; // single part: both twist branches derived
    return kr >= 1 && kr + nu.length() <= P.q - 1;
}

int run_verify(const GroupParams& P, const FactorFlags& ff, bool factor_given,
               std::optional<long long> k_opt, long long amax, bool inject_fault) {
    std::vector<VerifyCell> cells;
    auto k_values = [&](long long lo, long long hi) {
        std::vector<long long> ks;
        if (k_opt) {
            ks.push_back(*k_opt);
        } else {
            for (long long k = lo; k <= hi; ++k) ks.push_back(k);
        }
        return ks;
    };

    if (!factor_given || ff.factor == "wedge" || ff.factor == "none") {
        std::vector<int> ms;
        if (factor_given && ff.m_given) {
            ms.push_back(ff.m);
        } else if (factor_given && ff.factor == "none") {
            ms.push_back(0);
        } else {
            for (int m = 0; m <= P.n; ++m) ms.push_back(m);
        }
        for (int m : ms)
            for (long long k : k_values(1, P.q - 1)) {
                Partition nu = m > 0 ? Partition{m} : Partition{};
                cells.push_back({TensorFactor::wedge(m), nu, k, o1_in_domain(P, nu, k)});
            }
    } else if (ff.factor == "wedgenu") {
        if (!ff.nu_given) throw CLI::ValidationError("--nu is required for --factor wedgenu");
        Partition nu = parse_partition(ff.nu_text);
        for (long long k : k_values(1, P.q - 1 - nu.length())) {
            cells.push_back({TensorFactor::wedge_nu(nu), nu, k, o1_in_domain(P, nu, k)});
        }
    } else if (ff.factor == "powerdet") {
        if (!ff.ell_given) throw CLI::ValidationError("--ell is required for --factor powerdet");
        std::vector<int> ones(static_cast<std::size_t>(ff.ell), 1);
        Partition nu{ones};
        for (long long k : k_values(1, P.q - 1))
            cells.push_back({TensorFactor::power_det(ff.ell), nu, k, o1_in_domain(P, nu, k)});
    } else {
        throw CLI::ValidationError("verify sweeps cover the factors with counting oracles: "
                                   "wedge, wedgenu, powerdet, none");
    }

    bool all_pass = true;
    bool fault_pending = inject_fault;
    for (const auto& cell : cells) {
        auto f = steinberg_series(P, cell.factor, cell.k, amax);
        bool cell_ok = true;
        for (long long a = 0; a <= amax && cell_ok; ++a) {
            Int formula = f.series.coefficient_at(a);
            if (fault_pending && a == amax / 2) {
                formula += 1; // harness self-test hook
                fault_pending = false;
            }
            OracleQuery query(P, a, cell.nu, cell.k);
            long long o2 = pieri_count(query);
            bool ok = formula == o2;
            long long o1 = -1;
            if (cell.o1_applicable) {
                o1 = lattice_count(query);
                ok = ok && formula == o1;
            }
            if (!ok) {
                cell_ok = false;
                all_pass = false;
                std::cout << "FAIL " << cell.factor.describe() << " k=" << cell.k << " a=" << a
                          << ": formula=" << formula.str() << " o2=" << o2;
                if (cell.o1_applicable) std::cout << " o1=" << o1;
                std::cout << "\n";
            }
        }
        if (cell_ok)
            std::cout << "PASS " << cell.factor.describe() << " k=" << cell.k
                      << (cell.o1_applicable ? " [formula=o1=o2]" : " [formula=o2]") << "\n";
        if (!cell_ok) {
            std::cout << "verification failed; stopping at first failing cell\n";
            return kExitMismatch;
        }
    }
    std::cout << "all " << cells.size() << " cells PASS (degrees 0.." << amax << ")\n";
    return all_pass ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Steinberg-module multiplicities in the symmetric algebra of the "
                 "natural GL_n(q)-module, with counting oracles"};
    app.require_subcommand(1);

    int n = 0;
    long long p = 0;
    int r = 1;
    app.add_option("--n", n, "Rank n")->required();
    app.add_option("--p", p, "Characteristic p (prime)")->required();
    app.add_option("--r", r, "Power r, q = p^r");

    // series ----------------------------------------------------------------
    auto* series = app.add_subcommand("series", "One graded multiplicity series");
    FactorFlags sf;
    add_factor_flags(series, sf);
    long long s_k = 0;
    long long s_trunc = 40;
    std::string s_comp;
    series->add_option("--k", s_k, "Determinant twist");
    series->add_option("--trunc", s_trunc, "Truncation degree");
    series->add_option("--comp", s_comp,
                       "Composition multiplicity in S^*(V) instead of a Steinberg multiplicity")
        ->check(CLI::IsMember({"wedge", "monomial-desc", "monomial-asc"}));
    Output s_out;
    add_output_flags(series, s_out);

    // bigraded ---------------------------------------------------------------
    auto* bigraded = app.add_subcommand("bigraded", "Bi-graded multiplicity over (t, s)");
    long long b_k = 0, b_trunc = 40;
    bigraded->add_option("--k", b_k, "Determinant twist");
    bigraded->add_option("--trunc", b_trunc, "Truncation degree");
    Output b_out;
    add_output_flags(bigraded, b_out);

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Formula-vs-oracle sweep");
    FactorFlags vf;
    add_factor_flags(verify, vf);
    long long v_amax = 0;
    std::optional<long long> v_k;
    bool v_fault = false;
    verify->add_option("--amax", v_amax, "Highest symmetric degree to check")->required();
    long long v_k_raw = 0;
    auto* v_k_opt = verify->add_option("--k", v_k_raw, "Restrict to one determinant twist");
    verify->add_flag("--inject-fault", v_fault, "Corrupt one coefficient (harness self-test)");

    // pim --------------------------------------------------------------------
    auto* pim = app.add_subcommand("pim", "Projective cover decomposition of St (x) wedge^nu (x) Det^k");
    std::string p_nu;
    long long p_k = 0;
    bool p_dual = false;
    pim->add_option("--nu", p_nu, "Partition, comma separated");
    pim->add_option("--k", p_k, "Determinant twist");
    pim->add_flag("--dual", p_dual, "Decompose St (x) wedge^nu(V)^* (x) Det^k instead");
    Output p_out;
    add_output_flags(pim, p_out);

    // coinv ------------------------------------------------------------------
    auto* coinv = app.add_subcommand("coinv", "Composition multiplicity in the coinvariant algebra");
    std::string c_mu;
    long long c_k = 0;
    int c_part = 1;
    coinv->add_option("--mu", c_mu, "Partition, comma separated");
    coinv->add_option("--k", c_k, "Determinant twist");
    coinv->add_option("--part", c_part, "1: target (q-1)rho - mu + k.omega_n; 2: (q-1)rho + w0.mu + k.omega_n")
        ->check(CLI::IsMember({1, 2}));
    Output c_out;
    add_output_flags(coinv, c_out);

    // table ------------------------------------------------------------------
    auto* table = app.add_subcommand("table", "CSV table of wedge series over m = 0..n");
    long long t_k = 0, t_trunc = 40;
    table->add_option("--k", t_k, "Determinant twist");
    table->add_option("--trunc", t_trunc, "Truncation degree");
    Output t_out;
    add_output_flags(table, t_out);

    // socle-conjecture ---------------------------------------------------------
    auto* socle = app.add_subcommand("socle-conjecture",
                                     "Conjectured multiplicity of L(mu) (x) Det^k in the socle");
    std::string so_mu;
    long long so_k = 0, so_trunc = 40;
    socle->add_option("--mu", so_mu, "Partition, comma separated");
    socle->add_option("--k", so_k, "Determinant twist");
    socle->add_option("--trunc", so_trunc, "Truncation degree");
    Output so_out;
    add_output_flags(socle, so_out);

    try {
        app.parse(argc, argv);
        GroupParams P(n, p, r);

        if (series->parsed()) {
            if (!s_comp.empty()) {
                CompTarget target = s_comp == "wedge"
                                        ? CompTarget::wedge_weight(sf.m, s_k)
                                        : (s_comp == "monomial-desc"
                                               ? CompTarget::monomial_desc(parse_partition(sf.mu_text), s_k)
                                               : CompTarget::monomial_asc(parse_partition(sf.mu_text), s_k));
                if (s_comp == "wedge" && !sf.m_given)
                    throw CLI::ValidationError("--m is required for --comp wedge");
                if (s_comp != "wedge" && !sf.mu_given)
                    throw CLI::ValidationError("--mu is required for --comp " + s_comp);
                auto cs = composition_series(P, target, s_trunc);
                emit_series(s_out, P, cs.series, cs.formula, false, &cs.target);
            } else {
                auto f = steinberg_series(P, build_factor(sf), s_k, s_trunc);
                emit_series(s_out, P, f.series, f.formula, false);
            }
            return kExitOk;
        }

        if (bigraded->parsed()) {
            BiSeries big = steinberg_bigraded(P, b_k, b_trunc);
            if (b_out.format == "csv") {
                std::ostringstream os;
                os << "t_degree,s_degree,coefficient\n";
                for (const auto& [key, c] : big.coeffs())
                    os << key.first << ',' << key.second << ',' << c.str() << '\n';
                b_out.write(os.str());
            } else if (b_out.format == "json") {
                std::ostringstream os;
                os << "{\"trunc_t\":" << big.trunc_t() << ",\"max_s\":" << big.max_s()
                   << ",\"terms\":[";
                bool first = true;
                for (const auto& [key, c] : big.coeffs()) {
                    if (!first) os << ',';
                    first = false;
                    os << "[" << key.first << ',' << key.second << ',' << c.str() << ']';
                }
                os << "],\"conjecture\":false}";
                b_out.write(os.str());
            } else {
                std::ostringstream os;
                os << P.describe() << " bi-graded, s-slices:\n";
                for (int s = 0; s <= big.max_s(); ++s)
                    os << "s^" << s << ": " << bi_slice(big, s).to_string() << "\n";
                b_out.write(os.str());
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            if (v_k_opt->count() > 0) v_k = v_k_raw;
            bool factor_given = verify->count("--factor") > 0;
            return run_verify(P, vf, factor_given, v_k, v_amax, v_fault);
        }

        if (pim->parsed()) {
            auto d = pim_decompose(P, parse_partition(p_nu), p_k, p_dual);
            Partition nu = parse_partition(p_nu);
            Int expected = steinberg_dim(P);
            for (int part : nu.parts()) expected *= binomial(P.n, part);
            if (p_out.format == "csv") {
                std::ostringstream os;
                os << "weight,mult,dim\n";
                for (const auto& e : d.entries)
                    os << weight_to_string(e.weight) << ',' << e.mult.str() << ',' << e.dim.str()
                       << '\n';
                p_out.write(os.str());
            } else {
                std::ostringstream os;
                os << "[";
                for (std::size_t i = 0; i < d.entries.size(); ++i) {
                    const auto& e = d.entries[i];
                    if (i) os << ',';
                    os << "{\"weight\":[";
                    for (std::size_t j = 0; j < e.weight.size(); ++j) {
                        if (j) os << ',';
                        os << e.weight[j];
                    }
                    os << "],\"mult\":" << e.mult.str() << ",\"dim\":" << e.dim.str() << "}";
                }
                os << "]\n";
                os << "total_dim=" << d.total_dim().str() << " expected=" << expected.str()
                   << (d.total_dim() == expected ? " OK" : " MISMATCH");
                p_out.write(os.str());
            }
            return d.total_dim() == expected ? kExitOk : kExitMismatch;
        }

        if (coinv->parsed()) {
            CompTarget target = c_part == 1 ? CompTarget::monomial_desc(parse_partition(c_mu), c_k)
                                            : CompTarget::monomial_asc(parse_partition(c_mu), c_k);
            auto res = coinvariant_multiplicity(P, target);
            Weight mu_shifted = weight_from_partition(parse_partition(c_mu), P.n);
            for (long long& x : mu_shifted) x += P.det_reduce(c_k);
            Int expected = pim_dim(P, mu_shifted);
            long long lo = res.poly.is_zero() ? 0 : res.poly.min_exp();
            long long hi = res.poly.is_zero() ? 0 : res.poly.max_exp();
            if (c_out.format == "csv") {
                std::ostringstream os;
                os << "degree,coefficient\n";
                for (long long e = lo; e <= hi; ++e)
                    os << e << ',' << res.poly.coeff(e).str() << '\n';
                c_out.write(os.str());
            } else {
                std::ostringstream os;
                os << "{\"shift\":" << lo << ",\"trunc\":" << hi << ",\"coeffs\":[";
                for (long long e = lo; e <= hi; ++e) {
                    if (e > lo) os << ',';
                    os << res.poly.coeff(e).str();
                }
                os << "],\"value_at_1\":" << res.value_at_one.str()
                   << ",\"pim_dim\":" << expected.str() << ",\"target\":[";
                for (std::size_t j = 0; j < res.target.size(); ++j) {
                    if (j) os << ',';
                    os << res.target[j];
                }
                os << "],\"match\":" << (res.value_at_one == expected ? "true" : "false") << "}";
                c_out.write(os.str());
            }
            return res.value_at_one == expected ? kExitOk : kExitMismatch;
        }

        if (table->parsed()) {
            std::ostringstream os;
            os << "factor,m,k,degree,coefficient\n";
            for (int m = 0; m <= P.n; ++m) {
                auto f = steinberg_series(P, TensorFactor::wedge(m), t_k, t_trunc);
                for (long long a = 0; a <= t_trunc; ++a)
                    os << "wedge," << m << ',' << t_k << ',' << a << ','
                       << f.series.coefficient_at(a).str() << '\n';
            }
            t_out.write(os.str());
            return kExitOk;
        }

        if (socle->parsed()) {
            Partition mu = parse_partition(so_mu);
            LaurentSeries s = socle_conjecture_series(P, mu, so_k, so_trunc);
            bool conjecture = !(mu.empty() && P.det_reduce(so_k) == 0);
            emit_series(so_out, P, s, "socle-series", conjecture);
            return kExitOk;
        }

        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
