// Command-line frontend: spectra, classification, eigenfunctions, the
// forward map of the one-node family, and the single-node inverse problem.
//
// Exit codes: 0 success, 1 usage/parse/validation trouble, 2 numerical
// failure or classifier inconsistency.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diracsl/classify.hpp"
#include "diracsl/errors.hpp"
#include "diracsl/inverse.hpp"
#include "diracsl/problem_io.hpp"
#include "diracsl/shooting.hpp"

namespace {

using namespace diracsl;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write file '" + path + "'");
    out << content;
    if (!out) throw domain_error("failed while writing '" + path + "'");
}

std::vector<double> split_doubles(const std::string& text, char sep, const char* what) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        const std::string piece = text.substr(start, pos - start);
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw domain_error(std::string(what) + ": '" + piece + "' is not a number");
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

void parse_window(const std::string& text, double& lo, double& hi) {
    const std::vector<double> v = split_doubles(text, ':', "window");
    if (v.size() != 2 || !(v[0] < v[1])) {
        throw domain_error("window must be LO:HI with LO < HI");
    }
    lo = v[0];
    hi = v[1];
}

std::vector<double> parse_grid(const std::string& text) {
    const std::vector<double> v = split_doubles(text, ':', "grid");
    if (v.size() != 3) throw domain_error("grid must be LO:HI:N");
    const double lo = v[0], hi = v[1];
    const double nd = v[2];
    if (!(nd >= 2.0) || nd != std::floor(nd) || nd > 1e7) {
        throw domain_error("grid point count must be an integer >= 2");
    }
    if (!(lo < hi)) throw domain_error("grid must satisfy LO < HI");
    const int n = static_cast<int>(nd);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

std::string method_name(SpectrumMethod m) {
    return m == SpectrumMethod::tridiag ? "tridiag" : "charpoly";
}

int run(int argc, char** argv) {
    CLI::App app{"Dirichlet spectra of -y'' + q y = lambda sum m_i delta(x - t_i) y on [0,1]"};
    app.require_subcommand(1);

    std::string problem_path, potential_path, data_path, out_path;
    std::string method = "auto";
    std::string window_text, grid_text;
    double lambda = 0.0;
    int samples = 0;
    bool csv_output = false;
    bool force = false;

    auto* sp = app.add_subcommand("spectrum", "Classify and list the eigenvalues");
    sp->add_option("--problem", problem_path, "problem JSON file")->required();
    sp->add_option("--method", method, "auto|charpoly|tridiag|oracle")
        ->check(CLI::IsMember({"auto", "charpoly", "tridiag", "oracle"}));
    sp->add_flag("--csv", csv_output, "emit eigenvalue,residual CSV instead of JSON");
    sp->add_option("--window", window_text, "scan window LO:HI (oracle method)");
    sp->add_option("--samples", samples, "scan sample count (oracle method)");

    auto* cl = app.add_subcommand("classify", "Report the hypothesis booleans and margins");
    cl->add_option("--problem", problem_path, "problem JSON file")->required();

    auto* cp = app.add_subcommand("charpoly", "Print characteristic polynomial coefficients");
    cp->add_option("--problem", problem_path, "problem JSON file")->required();

    auto* ef = app.add_subcommand("eigenfunction", "Sample an eigenfunction to CSV");
    ef->add_option("--problem", problem_path, "problem JSON file")->required();
    ef->add_option("--lambda", lambda, "eigenvalue")->required();
    ef->add_option("--samples", samples, "number of sample points (default 201)");
    ef->add_option("--out", out_path, "output CSV path")->required();

    auto* fm = app.add_subcommand("forward-map", "Tabulate lambda(t) for one unit mass");
    fm->add_option("--potential", potential_path, "potential JSON file")->required();
    fm->add_option("--grid", grid_text, "evaluation grid LO:HI:N")->required();
    fm->add_option("--out", out_path, "output CSV path")->required();

    auto* inv = app.add_subcommand("inverse", "Recover q from a sampled eigenvalue curve");
    inv->add_option("--data", data_path, "input t,lambda CSV")->required();
    inv->add_option("--out", out_path, "output x,q CSV")->required();
    inv->add_flag("--force", force, "recover even if validation fails");

    auto* vs = app.add_subcommand("validate-sl", "Screen a curve for spectrum-likeness");
    vs->add_option("--data", data_path, "input t,lambda CSV")->required();

    auto* orc = app.add_subcommand("oracle", "Scan the shooting miss function for roots");
    orc->add_option("--problem", problem_path, "problem JSON file")->required();
    orc->add_option("--window", window_text, "scan window LO:HI")->required();
    orc->add_option("--samples", samples, "scan sample count (default 2001)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    if (sp->parsed()) {
        const ProblemFile pf = parse_problem_file(read_file(problem_path));
        const FundamentalBasis basis = build_basis(pf.potential, pf.tolerances);
        SpectrumReport report;
        if (method == "oracle") {
            report.hypotheses = check_hypotheses(basis, pf.weight, pf.tolerances);
            report.method = "oracle";
            if (report.hypotheses.h1) {
                report.classification = "all_complex";
            } else {
                report.classification = "finite";
                double lo, hi;
                if (window_text.empty()) {
                    const double half = default_scan_halfwidth(pf.weight);
                    lo = -half;
                    hi = half;
                } else {
                    parse_window(window_text, lo, hi);
                }
                report.eigenvalues = scan_spectrum(pf.potential, pf.weight, lo, hi,
                                                   samples > 0 ? samples : 2001,
                                                   pf.tolerances);
            }
        } else {
            SpectrumMethod pref = SpectrumMethod::auto_select;
            if (method == "charpoly") pref = SpectrumMethod::charpoly;
            if (method == "tridiag") pref = SpectrumMethod::tridiag;
            const Classification cls =
                classify_spectrum(basis, pf.weight, pf.tolerances, pref);
            report.hypotheses = cls.hypotheses;
            report.classification = cls.spectrum.all_complex ? "all_complex" : "finite";
            report.eigenvalues = cls.spectrum.eigenvalues;
            report.method = method_name(cls.method_used);
        }
        for (double ev : report.eigenvalues) {
            report.residuals.push_back(std::abs(miss(pf.potential, pf.weight, ev,
                                                     pf.tolerances)));
        }
        if (csv_output) {
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
                rows.push_back({report.eigenvalues[i], report.residuals[i]});
            }
            std::cout << emit_csv(rows, "eigenvalue,residual");
        } else {
            std::cout << serialize_report(report);
        }
        return 0;
    }

    if (cl->parsed()) {
        const ProblemFile pf = parse_problem_file(read_file(problem_path));
        const FundamentalBasis basis = build_basis(pf.potential, pf.tolerances);
        const Classification cls = classify_spectrum(basis, pf.weight, pf.tolerances);
        std::cout << serialize_hypotheses(
            cls.hypotheses, cls.spectrum.all_complex ? "all_complex" : "finite");
        return 0;
    }

    if (cp->parsed()) {
        const ProblemFile pf = parse_problem_file(read_file(problem_path));
        const FundamentalBasis basis = build_basis(pf.potential, pf.tolerances);
        const RealPolynomial p = characteristic_polynomial(basis, pf.weight);
        const std::vector<double> bounds = characteristic_magnitude_bounds(basis, pf.weight);
        const RealPolynomial reduced = p.reduced_against(bounds, pf.tolerances.zero_det);
        nlohmann::json doc;
        doc["coefficients"] = p.coeffs();
        doc["reduced"] = reduced.coeffs();
        doc["degenerate"] = reduced.is_zero();
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (ef->parsed()) {
        const ProblemFile pf = parse_problem_file(read_file(problem_path));
        const FundamentalBasis basis = build_basis(pf.potential, pf.tolerances);
        const Eigenfunction fn = eigenfunction(basis, pf.weight, lambda, pf.tolerances);
        const int n = samples > 0 ? samples : 201;
        if (n < 2) throw domain_error("samples must be at least 2");
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < n; ++i) {
            const double x = static_cast<double>(i) / (n - 1);
            rows.push_back({x, fn.value(x)});
        }
        write_file(out_path, emit_csv(rows, "x,E"));
        return 0;
    }

    if (fm->parsed()) {
        const Potential q = parse_potential_json(read_file(potential_path));
        const std::vector<double> grid = parse_grid(grid_text);
        if (!(grid.front() > 0.0 && grid.back() < 1.0)) {
            throw domain_error("forward-map grid must lie strictly inside (0, 1)");
        }
        const FundamentalBasis basis = build_basis(q);
        std::vector<std::vector<double>> rows;
        for (double t : grid) rows.push_back({t, forward_lambda(basis, t)});
        write_file(out_path, emit_csv(rows, "t,lambda"));
        return 0;
    }

    if (inv->parsed()) {
        const SpectralData data = parse_spectral_csv(read_file(data_path));
        const SpectrumLikeFunction f = SpectrumLikeFunction::sampled(data.ts, data.lambdas);
        const Potential recovered = recover_potential(f, data.ts, force);
        const auto& rep = std::get<SampledPotential>(recovered.repr());
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 1; i + 1 < rep.xs.size(); ++i) {
            rows.push_back({rep.xs[i], rep.qs[i]});
        }
        write_file(out_path, emit_csv(rows, "x,q"));
        return 0;
    }

    if (vs->parsed()) {
        const SpectralData data = parse_spectral_csv(read_file(data_path));
        const SpectrumLikeFunction f = SpectrumLikeFunction::sampled(data.ts, data.lambdas);
        std::cout << serialize_validation(validate_spectrum_like(f));
        return 0;
    }

    if (orc->parsed()) {
        const ProblemFile pf = parse_problem_file(read_file(problem_path));
        double lo, hi;
        parse_window(window_text, lo, hi);
        const std::vector<double> roots =
            scan_spectrum(pf.potential, pf.weight, lo, hi, samples > 0 ? samples : 2001,
                          pf.tolerances);
        nlohmann::json doc;
        doc["window"] = {lo, hi};
        doc["samples"] = samples > 0 ? samples : 2001;
        doc["roots"] = roots;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const tridiagonal_unavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const inconsistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zero_eigenvalue_regime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const empty_spectrum_signal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
