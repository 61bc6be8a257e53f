#include "ssekit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ssekit {

namespace {

using nlohmann::json;

json matrix_to_json(const RatMatrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw parse_error("matrix document needs rows, cols and entries fields");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw parse_error("matrix rows/cols must be nonnegative integers");
    const size_t rows = j["rows"].get<size_t>();
    const size_t cols = j["cols"].get<size_t>();
    if (rows == 0 || cols == 0)
        throw parse_error("matrix dimensions must be positive");
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw parse_error("matrix entries must be an array of " + std::to_string(rows) +
                          " rows");
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw parse_error("matrix row " + std::to_string(i) + " must have " +
                              std::to_string(cols) + " entries");
        for (size_t jc = 0; jc < cols; ++jc) {
            const json& e = row[jc];
            if (!e.is_string())
                throw parse_error("matrix entries must be rational strings");
            m(i, jc) = Rat::from_string(e.get<std::string>());
        }
    }
    return m;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error("document is not valid JSON");
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw error("cannot write '" + path + "'");
    out << text;
}

} // namespace

std::string serialize_matrix(const RatMatrix& m) {
    return matrix_to_json(m).dump(2) + "\n";
}

RatMatrix parse_matrix(const std::string& text) {
    return matrix_from_json(parse_document(text));
}

RatMatrix read_matrix_file(const std::string& path) {
    return parse_matrix(read_text_file(path));
}

void write_matrix_file(const std::string& path, const RatMatrix& m) {
    write_text_file(path, serialize_matrix(m));
}

ChainDocument ChainDocument::wrap(std::string description, const SseChain& chain) {
    ChainDocument doc;
    doc.description = std::move(description);
    doc.declared_lag = chain.lag();
    doc.declared_size = chain.size();
    if (chain.is_trivial())
        doc.initial = chain.first();
    else
        doc.steps = chain.steps();
    return doc;
}

SseChain ChainDocument::to_chain() const {
    if (steps.empty()) {
        if (!initial)
            throw parse_error("lag-0 chain document is missing its initial matrix");
        return SseChain::trivial(*initial);
    }
    return SseChain::from_steps(steps);
}

std::string serialize_chain(const ChainDocument& doc) {
    json steps = json::array();
    for (const EsseStep& s : doc.steps)
        steps.push_back(json{{"A", matrix_to_json(s.A)},
                             {"B", matrix_to_json(s.B)},
                             {"U", matrix_to_json(s.U)},
                             {"V", matrix_to_json(s.V)}});
    json j{{"description", doc.description},
           {"declared_lag", doc.declared_lag},
           {"declared_size", doc.declared_size},
           {"steps", std::move(steps)}};
    if (doc.initial)
        j["initial"] = matrix_to_json(*doc.initial);
    return j.dump(2) + "\n";
}

ChainDocument parse_chain(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("steps") || !j.contains("declared_lag") ||
        !j.contains("declared_size"))
        throw parse_error("chain document needs steps, declared_lag and declared_size");
    ChainDocument doc;
    doc.description = j.value("description", std::string());
    if (!j["declared_lag"].is_number_unsigned() ||
        !j["declared_size"].is_number_unsigned())
        throw parse_error("declared_lag and declared_size must be nonnegative integers");
    doc.declared_lag = j["declared_lag"].get<size_t>();
    doc.declared_size = j["declared_size"].get<size_t>();
    if (j.contains("initial"))
        doc.initial = matrix_from_json(j["initial"]);
    const json& steps = j["steps"];
    if (!steps.is_array())
        throw parse_error("steps must be an array");
    for (size_t s = 0; s < steps.size(); ++s) {
        const json& st = steps[s];
        if (!st.is_object() || !st.contains("A") || !st.contains("B") ||
            !st.contains("U") || !st.contains("V"))
            throw parse_error("step " + std::to_string(s) + " needs A, B, U, V");
        doc.steps.push_back(EsseStep{matrix_from_json(st["A"]), matrix_from_json(st["B"]),
                                     matrix_from_json(st["U"]), matrix_from_json(st["V"])});
    }
    return doc;
}

ChainDocument read_chain_file(const std::string& path) {
    return parse_chain(read_text_file(path));
}

void write_chain_file(const std::string& path, const ChainDocument& doc) {
    write_text_file(path, serialize_chain(doc));
}

} // namespace ssekit
