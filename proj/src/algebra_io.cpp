/*
 * Copyright 2026 commutator-kit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ckit/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ckit {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing key \"" + key + "\"");
    return *it;
}

std::size_t as_count(const json& v, const std::string& what) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(what + " must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character
        auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, col);
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");

    const std::size_t n = as_count(require(doc, "size", "algebra"), "\"size\"");
    if (n == 0) throw ParseError("universe must be nonempty");

    const json& ops_json = require(doc, "ops", "algebra");
    if (!ops_json.is_array()) throw ParseError("\"ops\" must be an array");

    std::vector<Operation> ops;
    for (std::size_t i = 0; i < ops_json.size(); ++i) {
        const json& o = ops_json[i];
        const std::string where = "ops[" + std::to_string(i) + "]";
        if (!o.is_object()) throw ParseError(where + " must be an object");
        const json& name = require(o, "name", where);
        if (!name.is_string()) throw ParseError(where + ".name must be a string");
        Operation f;
        f.name = name.get<std::string>();
        f.arity = as_count(require(o, "arity", where), where + ".arity");
        const json& table = require(o, "table", where);
        if (!table.is_array()) throw ParseError(where + ".table must be an array");
        f.table.reserve(table.size());
        for (const json& e : table) {
            if (!e.is_number_integer() || e.get<long long>() < 0 ||
                e.get<unsigned long long>() > 0xffffffffULL) {
                throw ParseError(where + ".table entries must be nonnegative integers");
            }
            f.table.push_back(e.get<Element>());
        }
        ops.push_back(std::move(f));
    }
    return make_algebra(n, std::move(ops));
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read algebra file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string serialize_algebra(const FiniteAlgebra& algebra) {
    nlohmann::ordered_json doc;
    doc["size"] = algebra.size();
    doc["ops"] = nlohmann::ordered_json::array();
    for (const auto& f : algebra.ops()) {
        nlohmann::ordered_json o;
        o["name"] = f.name;
        o["arity"] = f.arity;
        o["table"] = f.table;
        doc["ops"].push_back(std::move(o));
    }
    return doc.dump();
}

}  // namespace ckit
