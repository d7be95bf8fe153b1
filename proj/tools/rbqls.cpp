#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "rbq/io.hpp"
#include "rbq/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

using nlohmann::json;
using namespace rbq;

json report_common(const SolveReport& report) {
    json doc;
    doc["residual"] = report.residual;
    doc["consistent"] = report.consistent;
    doc["unique"] = report.unique;
    doc["nullspace_dim"] = report.nullspace_dim;
    return doc;
}

std::string text_report(const json& doc) {
    std::ostringstream out;
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << std::left << std::setw(static_cast<int>(width)) << it.key() << "  ";
        if (it.value().is_number_float())
            out << std::scientific << std::setprecision(16) << it.value().get<double>();
        else
            out << it.value().dump();
        out << "\n";
    }
    return out.str();
}

void write_reports(const std::filesystem::path& dir, const json& doc) {
    std::ofstream jf(dir / "report.json");
    jf << doc.dump(1) << "\n";
    std::ofstream tf(dir / "report.txt");
    tf << text_report(doc);
}

int cmd_solve(const std::string& problem_path, double tol, const std::string& out_dir,
              const std::string& format) {
    LoadedProblem problem;
    try {
        problem = load_problem_file(problem_path);
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }

    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    SolveOptions opts;
    opts.tol = tol;
    json doc;
    try {
        switch (problem.family) {
            case ProblemFamily::Multi: {
                SolveReport report = solve_multi(*problem.multi, opts);
                doc = report_common(report);
                doc["family"] = "multi";
                json files = json::array();
                for (std::size_t i = 0; i < report.solutions.size(); ++i) {
                    std::string name = "X" + std::to_string(i + 1) + ".json";
                    save_matrix_file(dir / name, report.solutions[i]);
                    files.push_back(name);
                }
                doc["solutions"] = files;
                break;
            }
            case ProblemFamily::Transpose: {
                SolveReport report = solve_transpose(*problem.transpose, opts);
                doc = report_common(report);
                doc["family"] = "transpose";
                save_matrix_file(dir / "X.json", report.solutions[0]);
                doc["solutions"] = json::array({"X.json"});
                break;
            }
            case ProblemFamily::Coupled: {
                SolveReport report = solve_coupled(*problem.coupled, opts);
                doc = report_common(report);
                doc["family"] = "coupled";
                save_matrix_file(dir / "X.json", report.solutions[0]);
                doc["solutions"] = json::array({"X.json"});
                break;
            }
            case ProblemFamily::Pdiep: {
                SolveReport report = pdiep(*problem.eigendata, *problem.structure, opts);
                doc = report_common(report);
                doc["family"] = "pdiep";
                save_matrix_file(dir / "M.json", report.solutions[0]);
                doc["solutions"] = json::array({"M.json"});
                doc["eigenpair_residuals"] =
                    pdiep_residuals(report.solutions[0], *problem.eigendata);
                break;
            }
            case ProblemFamily::Gpdiep: {
                PencilSolution sol = gpdiep(*problem.eigendata, *problem.structure, opts);
                doc["family"] = "gpdiep";
                doc["nullspace_dim"] = sol.nullspace_dim;
                doc["nontrivial"] = sol.nontrivial;
                if (sol.nontrivial) {
                    save_matrix_file(dir / "M.json", sol.m_left);
                    save_matrix_file(dir / "N.json", sol.n_right);
                    doc["solutions"] = json::array({"M.json", "N.json"});
                    doc["eigenpair_residuals"] = sol.residuals;
                    doc["normalization"] = sol.normalization;
                } else {
                    doc["message"] = "no nontrivial structured pencil";
                }
                break;
            }
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return kExitNumerical;
    }

    write_reports(dir, doc);
    if (format == "json")
        std::cout << doc.dump(1) << "\n";
    else
        std::cout << text_report(doc);
    return kExitOk;
}

int cmd_repro(const std::string& id, std::uint64_t seed) {
    ReproResult result;
    try {
        result = run_example(id, seed);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return kExitNumerical;
    }
    std::cout << render_report(result);
    return result.pass() ? kExitOk : kExitNumerical;
}

int cmd_structure(const std::string& kind_name, Index n, const std::string& field,
                  const std::string& constraint, bool full) {
    auto kind = structure_kind_from_string(kind_name);
    if (!kind) {
        std::cerr << "error: unsupported kind '" << kind_name << "'\n";
        return kExitValidation;
    }
    try {
        RealMatrix basis;
        if (*kind == StructureKind::Custom) {
            if (constraint.empty()) {
                std::cerr << "error: custom kind needs --constraint FILE\n";
                return kExitValidation;
            }
            RBQMatrix c = load_matrix_file(constraint);
            if (field.empty()) {
                basis = kernel_basis(c.re1());
            } else {
                auto mask = field_mask_from_string(field);
                if (!mask) {
                    std::cerr << "error: unknown field '" << field << "'\n";
                    return kExitValidation;
                }
                basis = LStructure::custom(c.re1(), *mask, n, n).basis();
            }
        } else if (field.empty()) {
            basis = basis_real(*kind, n);
        } else {
            auto mask = field_mask_from_string(field);
            if (!mask) {
                std::cerr << "error: unknown field '" << field << "'\n";
                return kExitValidation;
            }
            basis = LStructure::make(*kind, *mask, n).basis();
        }
        std::cout << "kind " << to_string(*kind) << ", n " << n << ": basis " << basis.rows()
                  << " x " << basis.cols() << ", rank " << numerical_rank(basis) << "\n";
        if (full) {
            Eigen::IOFormat fmt(Eigen::StreamPrecision, Eigen::DontAlignCols, " ", "\n");
            std::cout << basis.format(fmt) << "\n";
        }
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured least-squares solver for commutative quaternion matrix equations"};
    app.require_subcommand(1);

    std::string problem_path, out_dir = ".", format = "text";
    double tol = 1e-10;
    auto* solve = app.add_subcommand("solve", "solve a problem file");
    solve->add_option("problem", problem_path, "problem JSON file")->required();
    solve->add_option("--tol", tol, "consistency/uniqueness tolerance");
    solve->add_option("--out", out_dir, "output directory");
    solve->add_option("--format", format, "stdout report format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string example_id;
    std::uint64_t seed = rbq::kDefaultReproSeed;
    auto* repro = app.add_subcommand("repro", "run a built-in reference problem");
    repro->add_option("id", example_id, "reference id (6.1 .. 6.6)")->required();
    repro->add_option("--seed", seed, "random seed for generated coefficients");

    std::string kind_name, field, constraint;
    rbq::Index n = 0;
    bool full = false;
    auto* structure = app.add_subcommand("structure", "inspect a structure basis matrix");
    structure->add_option("kind", kind_name, "structure kind")->required();
    structure->add_option("n", n, "matrix order")->required()->check(CLI::PositiveNumber);
    structure->add_option("--field", field, "lift over a field mask (rbq|complex|real)");
    structure->add_option("--constraint", constraint, "constraint matrix file for custom kind");
    structure->add_flag("--full", full, "print the full basis content");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (solve->parsed()) return cmd_solve(problem_path, tol, out_dir, format);
    if (repro->parsed()) return cmd_repro(example_id, seed);
    return cmd_structure(kind_name, n, field, constraint, full);
}
