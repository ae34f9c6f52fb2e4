#include "model_file.hpp"

#include <fstream>

#include "json.hpp"

namespace histoq::cli {

namespace {

using nlohmann::json;

cdouble parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput(where + ": complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

CVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InvalidInput(where + ": expected a nonempty array");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

CMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InvalidInput(where + ": expected a nonempty array of rows");
    const std::size_t rows = j.size();
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_path = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != rows)
            throw InvalidInput(row_path + ": matrix must be square");
        for (std::size_t c = 0; c < rows; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                parse_complex(j[r][c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

Projector parse_projector(const json& j, Eigen::Index dim, const std::string& where) {
    if (j.contains("matrix")) {
        CMatrix m = parse_matrix(j["matrix"], where + ".matrix");
        if (m.rows() != dim) throw InvalidInput(where + ".matrix: dimension mismatch with the state");
        try {
            return Projector(std::move(m));
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + ".matrix: " + e.what());
        }
    }
    if (j.contains("span")) {
        const json& span = j["span"];
        if (!span.is_array() || span.empty())
            throw InvalidInput(where + ".span: expected a nonempty array of vectors");
        std::vector<CVector> vs;
        for (std::size_t i = 0; i < span.size(); ++i) {
            vs.push_back(parse_vector(span[i], where + ".span[" + std::to_string(i) + "]"));
            if (vs.back().size() != dim)
                throw InvalidInput(where + ".span: vector dimension mismatch with the state");
        }
        try {
            return make_projector(std::span<const CVector>(vs));
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + ".span: " + e.what());
        }
    }
    throw InvalidInput(where + ": needs either \"matrix\" or \"span\"");
}

}  // namespace

HistorySet ModelFile::build_history_set() const {
    std::vector<TimedDecomposition> timed;
    timed.reserve(decompositions.size());
    for (std::size_t i = 0; i < decompositions.size(); ++i)
        timed.push_back({&decompositions[i], times[i]});
    return full_chain_set(std::span<const TimedDecomposition>(timed), h);
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("model file: cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("model file: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("model file: top level must be an object");
    if (!doc.contains("state")) throw InvalidInput("model file: missing \"state\"");

    CVector state = parse_vector(doc["state"], "state");
    const Eigen::Index dim = state.size();
    const double norm = state.norm();
    if (norm < 1e-14) throw InvalidInput("state: zero vector");
    StateVector psi = StateVector::normalized(state);

    CMatrix h_matrix = CMatrix::Zero(dim, dim);
    if (doc.contains("hamiltonian")) {
        h_matrix = parse_matrix(doc["hamiltonian"], "hamiltonian");
        if (h_matrix.rows() != dim)
            throw InvalidInput("hamiltonian: dimension mismatch with the state");
    }
    Hamiltonian h = [&] {
        try {
            return Hamiltonian(std::move(h_matrix));
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string("hamiltonian: ") + e.what());
        }
    }();

    if (!doc.contains("decompositions") || !doc["decompositions"].is_array() ||
        doc["decompositions"].empty())
        throw InvalidInput("model file: missing nonempty \"decompositions\" array");

    std::vector<ProjectiveDecomposition> decomps;
    std::vector<double> times;
    std::vector<std::string> dec_labels;
    for (std::size_t d = 0; d < doc["decompositions"].size(); ++d) {
        const std::string where = "decompositions[" + std::to_string(d) + "]";
        const json& jd = doc["decompositions"][d];
        if (!jd.is_object()) throw InvalidInput(where + ": expected an object");
        if (!jd.contains("time") || !jd["time"].is_number())
            throw InvalidInput(where + ": missing numeric \"time\"");
        if (!jd.contains("projectors") || !jd["projectors"].is_array() || jd["projectors"].empty())
            throw InvalidInput(where + ": missing nonempty \"projectors\" array");

        std::vector<Projector> ps;
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < jd["projectors"].size(); ++k) {
            const std::string pw = where + ".projectors[" + std::to_string(k) + "]";
            const json& jp = jd["projectors"][k];
            if (!jp.is_object()) throw InvalidInput(pw + ": expected an object");
            ps.push_back(parse_projector(jp, dim, pw));
            labels.push_back(jp.value("label", std::to_string(k)));
        }
        try {
            decomps.emplace_back(std::move(ps), std::move(labels));
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + ": " + e.what());
        }
        times.push_back(jd["time"].get<double>());
        dec_labels.push_back(jd.value("label", std::to_string(d)));
    }
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw InvalidInput("decompositions: times must be strictly increasing");

    return ModelFile{std::move(psi), std::move(h), std::move(decomps), std::move(times),
                     std::move(dec_labels)};
}

}  // namespace histoq::cli
