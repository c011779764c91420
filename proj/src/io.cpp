// Copyright 2026 The entdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entdist::io {

namespace {

using nlohmann::json;

std::string where(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // e.byte points one past the offending character.
        throw Error(source + ": malformed JSON at " + where(text, e.byte > 0 ? e.byte - 1 : 0));
    }
}

cplx complex_at(const json &j, const std::string &field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(field + ": expected [re, im]");
    }
    const cplx z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(field + ": non-finite value");
    }
    return z;
}

void check_schema(const json &j, const std::string &source) {
    if (j.contains("schema_version") &&
        (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kSchemaVersion)) {
        throw Error(source + ": schema_version must be " + std::to_string(kSchemaVersion));
    }
}

json complex_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

} // namespace

PureState parse_state(const std::string &text, const std::string &source) {
    const json j = parse(text, source);
    if (!j.is_object()) {
        throw Error(source + ": expected an object with \"amplitudes\"");
    }
    check_schema(j, source);
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw Error(source + ": field \"amplitudes\" missing or not an array");
    }
    const json &a = j["amplitudes"];
    std::vector<cplx> amps;
    amps.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        amps.push_back(complex_at(a[k], source + ": amplitudes[" + std::to_string(k) + "]"));
    }
    // "num_qubits" is accepted as an alias of "qubits".
    const char *count_key = j.contains("qubits") ? "qubits" : "num_qubits";
    if (j.contains(count_key)) {
        if (!j[count_key].is_number_integer()) {
            throw Error(source + ": field \"" + count_key + "\" must be an integer");
        }
        const int m = j[count_key].get<int>();
        if (m < 1 || m > 30 || amps.size() != dim_of(m)) {
            throw Error(source + ": " + count_key + " = " + std::to_string(m) + " does not match " +
                        std::to_string(amps.size()) + " amplitudes");
        }
    }
    double norm2 = 0.0;
    for (const cplx &z : amps) {
        norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > tol::kLoadNorm) {
        throw Error(source + ": squared norm " + format_double(norm2) +
                    " is not 1 within 1e-6");
    }
    try {
        return PureState::normalized(std::move(amps));
    } catch (const Error &e) {
        throw Error(source + ": " + e.what());
    }
}

PureState load_state(const std::string &path) {
    return parse_state(read_file(path), path);
}

std::string state_to_json(const PureState &state) {
    json amps = json::array();
    for (const cplx &z : state.amplitudes()) {
        amps.push_back(complex_json(z));
    }
    const json j = {{"schema_version", kSchemaVersion},
                    {"qubits", state.num_qubits()},
                    {"amplitudes", amps}};
    return j.dump(2) + "\n";
}

DensityMatrix parse_density(const std::string &text, const std::string &source) {
    const json doc = parse(text, source);
    const json *m = &doc;
    if (doc.is_object()) {
        check_schema(doc, source);
        if (!doc.contains("rho")) {
            throw Error(source + ": field \"rho\" missing");
        }
        m = &doc["rho"];
    }
    if (!m->is_array() || m->empty()) {
        throw Error(source + ": rho must be a non-empty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(m->size());
    Eigen::MatrixXcd rho(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const json &row = (*m)[static_cast<std::size_t>(r)];
        const std::string rf = source + ": rho[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw Error(rf + ": expected " + std::to_string(n) + " entries");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            rho(r, c) = complex_at(row[static_cast<std::size_t>(c)],
                                   rf + "[" + std::to_string(c) + "]");
        }
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kLoadNorm) {
        throw Error(source + ": rho is not Hermitian (deviation " + format_double(herm) + ")");
    }
    const cplx tr = rho.trace();
    if (std::abs(tr - 1.0) > tol::kLoadNorm) {
        throw Error(source + ": trace " + format_double(tr.real()) + " is not 1 within 1e-6");
    }
    const Eigen::MatrixXcd fixed = 0.5 * (rho + rho.adjoint()) / tr.real();
    try {
        return DensityMatrix(fixed);
    } catch (const Error &e) {
        throw Error(source + ": " + e.what());
    }
}

DensityMatrix load_density(const std::string &path) {
    return parse_density(read_file(path), path);
}

std::string density_to_json(const DensityMatrix &rho) {
    json rows = json::array();
    const Eigen::MatrixXcd &m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        rows.push_back(row);
    }
    const json j = {{"schema_version", kSchemaVersion}, {"rho", rows}};
    return j.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace entdist::io
