/*
 * Copyright (C) 2026 The petriproof Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "petriproof/incidence.hpp"

#include <sstream>

#include "json.hpp"
#include "petriproof/error.hpp"

namespace petriproof {

namespace {

const char* kSections[] = {"FORWARD", "BACKWARD", "COMBINED", "INHIBITION"};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

const IncidenceMatrix<int>& section(const IncidenceMatrices<int>& m, int i) {
    switch (i) {
        case 0: return m.forward;
        case 1: return m.backward;
        case 2: return m.combined;
        default: return m.inhibition;
    }
}

IncidenceMatrix<int>& section(IncidenceMatrices<int>& m, int i) {
    return const_cast<IncidenceMatrix<int>&>(section(static_cast<const IncidenceMatrices<int>&>(m), i));
}

}  // namespace

std::string to_csv(const IncidenceMatrices<int>& m) {
    std::ostringstream os;
    for (int s = 0; s < 4; ++s) {
        if (s) os << "\n";
        os << kSections[s] << "\n";
        os << "place";
        for (auto& c : m.col_labels) os << "," << csv_field(c);
        os << "\n";
        auto& mat = section(m, s);
        for (Eigen::Index r = 0; r < mat.rows(); ++r) {
            os << csv_field(m.row_labels[static_cast<std::size_t>(r)]);
            for (Eigen::Index c = 0; c < mat.cols(); ++c) os << "," << mat(r, c);
            os << "\n";
        }
    }
    return os.str();
}

std::string to_json(const IncidenceMatrices<int>& m, const std::string& model) {
    nlohmann::ordered_json j;
    j["model"] = model;
    j["places"] = m.row_labels;
    j["transitions"] = m.col_labels;
    const char* keys[] = {"forward", "backward", "combined", "inhibition"};
    for (int s = 0; s < 4; ++s) {
        auto& mat = section(m, s);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Eigen::Index r = 0; r < mat.rows(); ++r) {
            std::vector<int> row;
            for (Eigen::Index c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
            rows.push_back(row);
        }
        j[keys[s]] = rows;
    }
    return j.dump(2) + "\n";
}

IncidenceMatrices<int> parse_incidence_csv(const std::string& text) {
    IncidenceMatrices<int> m;
    std::istringstream is(text);
    std::string line;
    int current = -1;
    bool header = false;
    std::vector<std::vector<int>> rows[4];
    std::vector<std::string> labels[4];
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int sec = -1;
        for (int s = 0; s < 4; ++s)
            if (line == kSections[s]) sec = s;
        if (sec >= 0) {
            current = sec;
            header = true;
            continue;
        }
        if (current < 0) throw SyntaxError(lineno, 1, "section name");
        auto cells = split_csv(line);
        if (header) {
            std::vector<std::string> cols(cells.begin() + 1, cells.end());
            if (current == 0) m.col_labels = cols;
            else if (cols != m.col_labels) throw SyntaxError(lineno, 1, "matching transition header");
            header = false;
            continue;
        }
        labels[current].push_back(cells[0]);
        std::vector<int> row;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            try {
                row.push_back(std::stoi(cells[i]));
            } catch (const std::exception&) {
                throw SyntaxError(lineno, static_cast<int>(i) + 1, "integer cell");
            }
        }
        if (row.size() != m.col_labels.size()) throw SyntaxError(lineno, 1, "one cell per transition");
        rows[current].push_back(row);
    }
    m.row_labels = labels[0];
    for (int s = 0; s < 4; ++s) {
        if (labels[s] != m.row_labels) throw Error(ErrorCode::InvalidDefinition, "sections disagree on place rows");
        auto& mat = section(m, s);
        mat.resize(static_cast<Eigen::Index>(rows[s].size()), static_cast<Eigen::Index>(m.col_labels.size()));
        for (std::size_t r = 0; r < rows[s].size(); ++r)
            for (std::size_t c = 0; c < rows[s][r].size(); ++c)
                mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[s][r][c];
    }
    return m;
}

std::vector<std::string> compare_incidence(const IncidenceMatrices<int>& expected, const IncidenceMatrices<int>& actual) {
    std::vector<std::string> diffs;
    if (expected.row_labels != actual.row_labels) diffs.push_back("place rows differ");
    if (expected.col_labels != actual.col_labels) diffs.push_back("transition columns differ");
    if (!diffs.empty()) return diffs;
    for (int s = 0; s < 4; ++s) {
        auto& e = section(expected, s);
        auto& a = section(actual, s);
        if (e.rows() != a.rows() || e.cols() != a.cols()) {
            diffs.push_back(std::string(kSections[s]) + ": shape differs");
            continue;
        }
        for (Eigen::Index r = 0; r < e.rows(); ++r)
            for (Eigen::Index c = 0; c < e.cols(); ++c)
                if (e(r, c) != a(r, c))
                    diffs.push_back(std::string(kSections[s]) + " [" + expected.row_labels[static_cast<std::size_t>(r)] +
                                    "][" + expected.col_labels[static_cast<std::size_t>(c)] + "]: expected " +
                                    std::to_string(e(r, c)) + ", got " + std::to_string(a(r, c)));
    }
    return diffs;
}

}  // namespace petriproof
