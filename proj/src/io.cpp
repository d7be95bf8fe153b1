#include "rbq/io.hpp"

#include <fstream>
#include <json.hpp>

namespace rbq {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw IoError(path.string() + ": " + err.what());
    }
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& key,
                       const std::string& what) {
    throw IoError(path.string() + ": key '" + key + "': " + what);
}

Index require_dim(const json& doc, const std::filesystem::path& path, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        fail(path, key, "missing or non-integer");
    auto v = doc[key].get<Index>();
    if (v < 1) fail(path, key, "must be >= 1");
    return v;
}

RealMatrix parse_component(const json& arr, Index m, Index n,
                           const std::filesystem::path& path, const std::string& key) {
    if (!arr.is_array() || static_cast<Index>(arr.size()) != m)
        fail(path, key, "expected " + std::to_string(m) + " rows");
    RealMatrix out(m, n);
    for (Index i = 0; i < m; ++i) {
        const json& row = arr[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n)
            fail(path, key, "row " + std::to_string(i + 1) + " does not have " +
                                std::to_string(n) + " entries");
        for (Index j = 0; j < n; ++j) {
            const json& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number())
                fail(path, key, "row " + std::to_string(i + 1) + " holds a non-number");
            out(i, j) = v.get<double>();
        }
    }
    return out;
}

json dump_component(const RealMatrix& x) {
    json rows = json::array();
    for (Index i = 0; i < x.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

LStructure parse_structure(const json& doc, const std::filesystem::path& path,
                           const std::filesystem::path& base, const std::string& key);

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& ref) {
    std::filesystem::path p(ref);
    return p.is_absolute() ? p : base / p;
}

RBQMatrix load_matrix_ref(const json& doc, const std::filesystem::path& path,
                          const std::filesystem::path& base, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_string())
        fail(path, key, "missing matrix file reference");
    return load_matrix_file(resolve(base, doc[key].get<std::string>()));
}

LStructure parse_structure(const json& doc, const std::filesystem::path& path,
                           const std::filesystem::path& base, const std::string& key) {
    if (!doc.is_object()) fail(path, key, "structure descriptor must be an object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) fail(path, key + ".kind", "missing");
    auto kind = structure_kind_from_string(doc["kind"].get<std::string>());
    if (!kind) fail(path, key + ".kind", "unknown kind '" + doc["kind"].get<std::string>() + "'");
    FieldMask mask = FieldMask::RBQ;
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) fail(path, key + ".field", "must be a string");
        auto parsed = field_mask_from_string(doc["field"].get<std::string>());
        if (!parsed) fail(path, key + ".field", "unknown field '" + doc["field"].get<std::string>() + "'");
        mask = *parsed;
    }
    Index m, n;
    if (doc.contains("m")) {
        m = require_dim(doc, path, "m");
        n = require_dim(doc, path, "n");
    } else {
        n = require_dim(doc, path, "n");
        m = n;
    }
    try {
        if (*kind == StructureKind::Custom) {
            if (!doc.contains("constraint") || !doc["constraint"].is_string())
                fail(path, key + ".constraint", "custom structure needs a constraint matrix file");
            RBQMatrix c = load_matrix_file(resolve(base, doc["constraint"].get<std::string>()));
            return LStructure::custom(c.re1(), mask, m, n);
        }
        return LStructure::make(*kind, mask, m, n);
    } catch (const std::invalid_argument& err) {
        fail(path, key, err.what());
    }
}

EigenData parse_eigendata(const json& doc, const std::filesystem::path& path,
                          const std::filesystem::path& base, FieldMask mask) {
    if (!doc.is_object()) fail(path, "eigendata", "must be an object");
    if (!doc.contains("lambdas") || !doc["lambdas"].is_array())
        fail(path, "eigendata.lambdas", "missing array");
    const json& lam = doc["lambdas"];
    ComplexVector lambdas(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const json& v = lam[i];
        if (v.is_number()) {
            lambdas(static_cast<Index>(i)) = v.get<double>();
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            lambdas(static_cast<Index>(i)) = {v[0].get<double>(), v[1].get<double>()};
        } else {
            fail(path, "eigendata.lambdas", "entry " + std::to_string(i + 1) +
                                                " must be a number or an [re, im] pair");
        }
    }
    RBQMatrix phi = load_matrix_ref(doc, path, base, "vectors");
    try {
        return EigenData(lambdas, phi.z1(), mask);
    } catch (const std::invalid_argument& err) {
        fail(path, "eigendata", err.what());
    }
}

} // namespace

RBQMatrix load_matrix_file(const std::filesystem::path& path) {
    json doc = read_json(path);
    if (!doc.is_object()) throw IoError(path.string() + ": top level must be an object");
    Index m = require_dim(doc, path, "m");
    Index n = require_dim(doc, path, "n");
    auto component = [&](const char* key) {
        if (!doc.contains(key)) return RealMatrix(RealMatrix::Zero(m, n));
        return parse_component(doc[key], m, n, path, key);
    };
    if (!doc.contains("re1")) fail(path, "re1", "missing");
    return RBQMatrix::from_parts(component("re1"), component("im1"), component("re2"),
                                 component("im2"));
}

void save_matrix_file(const std::filesystem::path& path, const RBQMatrix& z) {
    json doc;
    doc["m"] = z.rows();
    doc["n"] = z.cols();
    doc["re1"] = dump_component(z.re1());
    if (!z.im1().isZero(0.0)) doc["im1"] = dump_component(z.im1());
    if (!z.re2().isZero(0.0)) doc["re2"] = dump_component(z.re2());
    if (!z.im2().isZero(0.0)) doc["im2"] = dump_component(z.im2());
    std::ofstream out(path);
    if (!out) throw IoError(path.string() + ": cannot write file");
    out << doc.dump(1) << "\n";
}

LoadedProblem load_problem_file(const std::filesystem::path& path) {
    json doc = read_json(path);
    if (!doc.is_object()) throw IoError(path.string() + ": top level must be an object");
    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
    if (!doc.contains("family") || !doc["family"].is_string()) fail(path, "family", "missing");
    const std::string family = doc["family"].get<std::string>();

    LoadedProblem out;
    if (family == "multi") {
        out.family = ProblemFamily::Multi;
        if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
            fail(path, "terms", "need a non-empty array");
        MultiTermProblem prob;
        std::size_t idx = 0;
        for (const json& term : doc["terms"]) {
            ++idx;
            const std::string key = "terms[" + std::to_string(idx) + "]";
            if (!term.is_object()) fail(path, key, "must be an object");
            if (!term.contains("structure")) fail(path, key + ".structure", "missing");
            prob.terms.push_back({load_matrix_ref(term, path, base, "A"),
                                  load_matrix_ref(term, path, base, "B"),
                                  parse_structure(term["structure"], path, base,
                                                  key + ".structure")});
        }
        prob.e = load_matrix_ref(doc, path, base, "E");
        out.multi = std::move(prob);
    } else if (family == "transpose") {
        out.family = ProblemFamily::Transpose;
        if (!doc.contains("structure")) fail(path, "structure", "missing");
        LStructure structure = parse_structure(doc["structure"], path, base, "structure");
        TransposeProblem prob{{}, {}, structure, RBQMatrix()};
        if (doc.contains("terms"))
            for (const json& term : doc["terms"])
                prob.direct_terms.emplace_back(load_matrix_ref(term, path, base, "A"),
                                               load_matrix_ref(term, path, base, "B"));
        if (doc.contains("transpose_terms"))
            for (const json& term : doc["transpose_terms"])
                prob.transpose_terms.emplace_back(load_matrix_ref(term, path, base, "C"),
                                                  load_matrix_ref(term, path, base, "D"));
        if (prob.direct_terms.empty() && prob.transpose_terms.empty())
            fail(path, "terms", "need at least one direct or transpose term");
        prob.e = load_matrix_ref(doc, path, base, "E");
        out.transpose = std::move(prob);
    } else if (family == "coupled") {
        out.family = ProblemFamily::Coupled;
        if (!doc.contains("structure")) fail(path, "structure", "missing");
        LStructure structure = parse_structure(doc["structure"], path, base, "structure");
        CoupledProblem prob{{}, structure};
        if (!doc.contains("equations") || !doc["equations"].is_array() || doc["equations"].empty())
            fail(path, "equations", "need a non-empty array");
        for (const json& eq : doc["equations"])
            prob.equations.push_back({load_matrix_ref(eq, path, base, "A"),
                                      load_matrix_ref(eq, path, base, "B"),
                                      load_matrix_ref(eq, path, base, "E")});
        out.coupled = std::move(prob);
    } else if (family == "pdiep" || family == "gpdiep") {
        out.family = family == "pdiep" ? ProblemFamily::Pdiep : ProblemFamily::Gpdiep;
        if (!doc.contains("structure")) fail(path, "structure", "missing");
        LStructure structure = parse_structure(doc["structure"], path, base, "structure");
        if (!doc.contains("eigendata")) fail(path, "eigendata", "missing");
        out.eigendata = parse_eigendata(doc["eigendata"], path, base, structure.mask());
        out.structure = std::move(structure);
    } else {
        fail(path, "family", "unknown family '" + family + "'");
    }
    return out;
}

} // namespace rbq
