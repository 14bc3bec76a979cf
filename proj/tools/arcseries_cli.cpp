// Command-line front end: Hilbert series of focussed jet algebras, the
// partition identities they encode, and the cross-checking suites.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcseries/arc_ideals.hpp"
#include "arcseries/groebner.hpp"
#include "arcseries/partitions.hpp"
#include "arcseries/poly_text.hpp"
#include "arcseries/rr_recursion.hpp"
#include "arcseries/series.hpp"
#include "arcseries/verify.hpp"

namespace {

using namespace arcs;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string series_to_text(const TruncatedSeries& s) {
    std::string out;
    auto power = [](std::uint32_t k) {
        if (k == 0) return std::string();
        if (k == 1) return std::string("t");
        return "t^" + std::to_string(k);
    };
    for (std::uint32_t k = 0; k <= s.truncation(); ++k) {
        if (sgn(s[k]) == 0) continue;
        Int mag = abs(s[k]);
        if (out.empty())
            out += sgn(s[k]) < 0 ? "-" : "";
        else
            out += sgn(s[k]) < 0 ? " - " : " + ";
        std::string p = power(k);
        if (mag != 1 || p.empty()) {
            out += mag.get_str();
            if (!p.empty()) out += "*";
        }
        out += p;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(s.truncation() + 1) + ")";
}

void print_series(const TruncatedSeries& s, const std::string& format) {
    if (format == "text")
        std::cout << series_to_text(s) << "\n";
    else if (format == "json")
        std::cout << series_to_json(s) << "\n";
    else
        std::cout << series_to_csv(s);
}

MonomialOrder order_of(const std::string& tag) { return order_from_tag(tag); }

int g_exit = 0;

struct NfoldArgs {
    std::uint32_t n = 2;
    std::uint32_t trunc = 10;
    std::optional<std::uint32_t> weight_bound;
    std::string method = "groebner";
    std::string format = "text";
    std::string order = "weight-revlex";
    bool verify = false;
};

void run_nfold(const NfoldArgs& a) {
    std::uint32_t bound = a.weight_bound.value_or(a.trunc);
    MonomialOrder order = order_of(a.order);
    auto groebner_route = [&] {
        return hp_focussed(nfold_spec(a.n, bound), a.trunc, order);
    };
    auto combinatorial_route = [&] {
        std::vector<VarId> vars;
        for (std::uint32_t i = 1; i <= a.trunc; ++i) vars.push_back(yvar(i));
        return standard_monomial_series(nfold_leading_ideal(a.n, a.trunc), vars,
                                        a.trunc);
    };
    auto product_route = [&] { return closed_form_hp(NFold{a.n}, a.trunc); };

    TruncatedSeries s = a.method == "groebner"      ? groebner_route()
                        : a.method == "combinatorial" ? combinatorial_route()
                                                      : product_route();
    if (a.verify) {
        TruncatedSeries g = groebner_route();
        TruncatedSeries comb = combinatorial_route();
        TruncatedSeries prod = product_route();
        if (!(g == comb) || !(g == prod)) {
            std::cerr << "route mismatch: the three series disagree\n";
            g_exit = 1;
            return;
        }
    }
    print_series(s, a.format);
}

struct HpArgs {
    std::string spec_path;
    std::uint32_t trunc = 10;
    std::string cache_dir;
    std::string format = "text";
    std::string order = "weight-revlex";
};

void run_hp(const HpArgs& a) {
    IdealSpec spec = ideal_spec_from_json(read_file(a.spec_path));
    MonomialOrder order = order_of(a.order);
    std::string hash = spec_hash(spec, order);

    std::optional<TruncatedBasis> basis;
    std::filesystem::path cache_file;
    if (!a.cache_dir.empty())
        cache_file = std::filesystem::path(a.cache_dir) / (hash + ".json");
    if (!cache_file.empty() && std::filesystem::exists(cache_file)) {
        try {
            StoredBasis stored =
                basis_from_json(read_file(cache_file.string()));
            if (stored.spec_hash == hash &&
                stored.basis.weight_bound == spec.weight_bound &&
                stored.basis.order == order)
                basis = std::move(stored.basis);
        } catch (const std::invalid_argument&) {
            // unreadable cache entry: recompute and overwrite it below
        }
    }
    if (!basis) {
        basis = buchberger_truncated(jet_generators(spec, order),
                                     spec.weight_bound, order);
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_file.parent_path());
            write_file(cache_file.string(), basis_to_json(*basis, hash));
        }
    }
    print_series(hp_from_basis(spec, *basis, a.trunc), a.format);
}

struct GroebnerArgs {
    std::string spec_path;
    std::optional<std::uint32_t> weight_bound;
    std::string cache_dir;
    std::string format = "text";
    std::string order = "weight-revlex";
};

void run_groebner(const GroebnerArgs& a) {
    IdealSpec spec = ideal_spec_from_json(read_file(a.spec_path));
    if (a.weight_bound) spec.weight_bound = *a.weight_bound;
    MonomialOrder order = order_of(a.order);
    std::string hash = spec_hash(spec, order);
    TruncatedBasis basis = buchberger_truncated(jet_generators(spec, order),
                                                spec.weight_bound, order);
    if (!a.cache_dir.empty()) {
        std::filesystem::path file =
            std::filesystem::path(a.cache_dir) / (hash + ".json");
        std::filesystem::create_directories(
            std::filesystem::path(a.cache_dir));
        write_file(file.string(), basis_to_json(basis, hash));
    }
    if (a.format == "json") {
        std::cout << basis_to_json(basis, hash) << "\n";
    } else {
        for (const Polynomial& g : basis.elements)
            std::cout << to_string(g) << "\n";
    }
}

struct GordonArgs {
    std::uint32_t k = 2;
    std::uint32_t max_n = 100;
    std::string format = "text";
};

void run_gordon(const GordonArgs& a) {
    GordonReport r = gordon_check(a.k, a.max_n);
    if (a.format == "json") {
        std::cout << gordon_report_json(r) << "\n";
    } else {
        std::cout << "k=" << r.k << " maxN=" << r.max_n
                  << (r.ok ? " ok" : " FAILED at n=" +
                                         std::to_string(*r.first_failure))
                  << "\n";
    }
    if (!r.ok) g_exit = 1;
}

struct RecursionArgs {
    std::uint32_t d_max = 10;
    std::uint32_t trunc = 10;
    std::string format = "text";
};

void run_recursion(const RecursionArgs& a) {
    AndrewsBaxter ab = andrews_baxter(a.d_max, a.trunc);
    if (!ab.converged) {
        std::cerr << "not converged: need dmax >= trunc + 3 (dmax="
                  << a.d_max << ", trunc=" << a.trunc << ")\n";
        g_exit = 1;
        return;
    }
    print_series(ab.limit(), a.format);
}

struct BellArgs {
    std::uint32_t i = 1;
    std::uint32_t j = 1;
};

void run_bell(const BellArgs& a) { std::cout << to_string(bell(a.i, a.j)) << "\n"; }

struct VerifyArgs {
    std::string suite = "all";
    std::string format = "text";
};

void run_verify(const VerifyArgs& a) {
    std::vector<CheckResult> results = run_verify_suite(a.suite);
    bool all_ok = true;
    if (a.format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const CheckResult& r = results[i];
            if (i) out += ",";
            out += std::string("{\"name\":\"") + r.name + "\",\"ok\":" +
                   (r.ok ? "true" : "false") + "}";
            all_ok = all_ok && r.ok;
        }
        std::cout << out << "]\n";
    } else {
        for (const CheckResult& r : results) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(2);
            line << (r.ok ? "PASS" : "FAIL") << " " << r.name << " ("
                 << r.seconds << "s): " << r.detail;
            std::cout << line.str() << "\n";
            all_ok = all_ok && r.ok;
        }
    }
    if (!all_ok) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert series of focussed jet algebras"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};
    const std::vector<std::string> orders{"weight-revlex", "weight-lex"};

    NfoldArgs nfold;
    CLI::App* c_nfold =
        app.add_subcommand("nfold", "series of the n-fold point on a line");
    c_nfold->add_option("-n,--multiplicity", nfold.n, "multiplicity (>= 2)");
    c_nfold->add_option("--trunc", nfold.trunc, "truncation order");
    c_nfold->add_option("--weight-bound", nfold.weight_bound,
                        "Groebner weight bound (default: truncation)");
    c_nfold->add_option("--method", nfold.method, "route to compute")
        ->check(CLI::IsMember({"groebner", "combinatorial", "product"}));
    c_nfold->add_option("--format", nfold.format, "output format")
        ->check(CLI::IsMember(formats));
    c_nfold->add_option("--order", nfold.order, "monomial order")
        ->check(CLI::IsMember(orders));
    c_nfold->add_flag("--verify", nfold.verify,
                      "compute all three routes and require agreement");
    c_nfold->callback([&] { run_nfold(nfold); });

    HpArgs hp;
    CLI::App* c_hp = app.add_subcommand(
        "hp", "series of a focussed jet algebra from an ideal file");
    c_hp->add_option("--spec", hp.spec_path, "ideal description file")
        ->required();
    c_hp->add_option("--trunc", hp.trunc, "truncation order");
    c_hp->add_option("--cache-dir", hp.cache_dir,
                     "directory for cached bases");
    c_hp->add_option("--format", hp.format, "output format")
        ->check(CLI::IsMember(formats));
    c_hp->add_option("--order", hp.order, "monomial order")
        ->check(CLI::IsMember(orders));
    c_hp->callback([&] { run_hp(hp); });

    GroebnerArgs gb;
    CLI::App* c_gb = app.add_subcommand(
        "groebner", "weight-truncated Groebner basis of an ideal file");
    c_gb->add_option("--spec", gb.spec_path, "ideal description file")
        ->required();
    c_gb->add_option("--weight-bound", gb.weight_bound,
                     "override the file's weight bound");
    c_gb->add_option("--cache-dir", gb.cache_dir,
                     "directory to store the basis in");
    c_gb->add_option("--format", gb.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c_gb->add_option("--order", gb.order, "monomial order")
        ->check(CLI::IsMember(orders));
    c_gb->callback([&] { run_groebner(gb); });

    GordonArgs gordon;
    CLI::App* c_gordon = app.add_subcommand(
        "gordon", "compare residue counts with multiplicity-window counts");
    c_gordon->add_option("-k,--modulus-index", gordon.k, "family index (>= 2)");
    c_gordon->add_option("--max", gordon.max_n, "largest size checked");
    c_gordon->add_option("--format", gordon.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c_gordon->callback([&] { run_gordon(gordon); });

    RecursionArgs rec;
    CLI::App* c_rec = app.add_subcommand(
        "recursion", "solve the coupled series recurrences");
    c_rec->add_option("--dmax", rec.d_max, "how far to run the recurrences");
    c_rec->add_option("--trunc", rec.trunc, "truncation order");
    c_rec->add_option("--format", rec.format, "output format")
        ->check(CLI::IsMember(formats));
    c_rec->callback([&] { run_recursion(rec); });

    BellArgs bell_args;
    CLI::App* c_bell =
        app.add_subcommand("bell", "partial Bell polynomial in y1, y2, ...");
    c_bell->add_option("-i", bell_args.i, "weight")->required();
    c_bell->add_option("-j", bell_args.j, "number of parts")->required();
    c_bell->callback([&] { run_bell(bell_args); });

    VerifyArgs verify;
    CLI::App* c_verify =
        app.add_subcommand("verify", "run the cross-validation suites");
    c_verify->add_option("suite", verify.suite,
                         "suite name or 'all'");
    c_verify->add_option("--format", verify.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    c_verify->callback([&] { run_verify(verify); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
