#include "lsdc/json_io.hpp"

#include <fstream>

namespace lsdc {

namespace {

using nlohmann::json;

json matrix_entries(const FqMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

FqMatrix parse_entries(const Field& f, const json& j, const std::string& what) {
    if (!j.is_array()) throw IoError(what + ": expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    FqMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw IoError(what + ": ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= f.q())
                throw IoError(what + ": entry at (" + std::to_string(r) + "," +
                              std::to_string(c) + ") is not a residue in [0," +
                              std::to_string(f.q()) + ")");
            m(r, c) = e.get<std::uint32_t>();
        }
    }
    return m;
}

Field parse_field(const json& j) {
    if (!j.contains("q") || !j["q"].is_number_unsigned())
        throw IoError("missing or non-integer field size q");
    try {
        return Field(j["q"].get<std::uint32_t>());
    } catch (const DomainError& e) {
        throw IoError(std::string("bad field size: ") + e.what());
    }
}

std::uint64_t parse_dim(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_unsigned())
        throw IoError(std::string("missing or non-integer dimension ") + name);
    std::uint64_t v = j[name].get<std::uint64_t>();
    if (v == 0) throw IoError(std::string(name) + " must be positive");
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError(what + ": malformed JSON");
    return j;
}

} // namespace

json matrix_to_json(const FqMatrix& m) {
    json j;
    j["q"] = m.field().q();
    j["matrix"] = matrix_entries(m);
    return j;
}

FqMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw IoError("matrix file: expected {\"q\", \"matrix\"}");
    Field f = parse_field(j);
    return parse_entries(f, j["matrix"], "matrix");
}

FqMatrix load_matrix(const std::string& path) {
    return matrix_from_json(parse_text(slurp(path), path));
}

void save_matrix(const FqMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

json scheme_to_json(const Scheme& s) {
    json j;
    j["q"] = s.field.q();
    j["K"] = s.K;
    j["N"] = s.N;
    j["L"] = s.L;
    j["T"] = s.T;
    j["F"] = matrix_entries(s.F);
    j["D"] = matrix_entries(s.D);
    j["E"] = matrix_entries(s.E);
    j["provenance"] = {{"strategy", s.provenance.strategy},
                       {"seed", s.provenance.seed},
                       {"radius", s.provenance.radius},
                       {"rounds", s.provenance.rounds},
                       {"repaired", s.provenance.repaired},
                       {"raw_gamma", s.provenance.raw_gamma},
                       {"notes", s.provenance.notes}};
    return j;
}

Scheme scheme_from_json(const json& j) {
    if (!j.is_object()) throw IoError("scheme file: expected an object");
    Field f = parse_field(j);
    std::uint64_t K = parse_dim(j, "K"), N = parse_dim(j, "N"),
                  L = parse_dim(j, "L"), T = parse_dim(j, "T");
    for (const char* m : {"F", "D", "E"})
        if (!j.contains(m))
            throw IoError(std::string("scheme file: missing matrix ") + m);
    FqMatrix F = parse_entries(f, j["F"], "F");
    FqMatrix D = parse_entries(f, j["D"], "D");
    FqMatrix E = parse_entries(f, j["E"], "E");
    if (F.rows() != K || F.cols() != L) throw IoError("F is not K x L");
    if (D.rows() != K || D.cols() != N * T) throw IoError("D is not K x N*T");
    if (E.rows() != N * T || E.cols() != L) throw IoError("E is not N*T x L");
    Scheme s{f, K, N, L, T, std::move(F), std::move(D), std::move(E),
             Provenance{}};
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        if (!p.is_object()) throw IoError("provenance must be an object");
        s.provenance.strategy = p.value("strategy", std::string());
        s.provenance.seed = p.value("seed", kDefaultSeed);
        s.provenance.radius = p.value("radius", -1);
        s.provenance.rounds = p.value("rounds", 0u);
        s.provenance.repaired = p.value("repaired", false);
        s.provenance.raw_gamma = p.value("raw_gamma", std::string());
        s.provenance.notes = p.value("notes", std::string());
    }
    return s;
}

std::string scheme_to_string(const Scheme& s) {
    return scheme_to_json(s).dump(2) + "\n";
}

Scheme scheme_from_string(const std::string& text) {
    return scheme_from_json(parse_text(text, "scheme"));
}

Scheme load_scheme(const std::string& path) {
    return scheme_from_json(parse_text(slurp(path), path));
}

void save_scheme(const Scheme& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << scheme_to_string(s);
}

} // namespace lsdc
