/*
   Copyright 2026 The matfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "matfield/spec_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace matfield {

namespace {

using nlohmann::json;

std::pair<int, int> lineColumn(const std::string& text, size_t offset) {
    int line = 1, col = 1;
    for (size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void failAt(const std::string& text, const std::string& needle, const std::string& message) {
    size_t pos = needle.empty() ? std::string::npos : text.find(needle);
    auto [line, col] = pos == std::string::npos ? std::pair<int, int>{0, 0} : lineColumn(text, pos);
    std::ostringstream os;
    os << message;
    if (line > 0) os << " (line " << line << ", column " << col << ")";
    throw SpecParseError(os.str(), line, col);
}

GaussianRational scalarFromJson(const json& j, const std::string& text, const std::string& where) {
    if (j.is_string()) {
        try {
            return GaussianRational::parse(j.get<std::string>());
        } catch (const InputError& e) {
            failAt(text, "\"" + j.get<std::string>() + "\"", where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return GaussianRational(Rational(mpz_class(j.dump(), 10)));
    failAt(text, "", where + ": scalar literals must be strings under the shared grammar"
                           " (floats are not accepted)");
}

} // namespace

SpecFileData parseSpecText(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = lineColumn(text, e.byte);
        throw SpecParseError(std::string("spec parse error: ") + e.what() + " (line " +
                                 std::to_string(line) + ", column " + std::to_string(col) + ")",
                             line, col);
    }
    if (!doc.is_object()) failAt(text, "", "spec file must be a JSON object");
    static const std::set<std::string> known = {"name", "rank", "field", "bracket", "generators"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (known.find(it.key()) == known.end()) failAt(text, "\"" + it.key() + "\"", "unknown key '" + it.key() + "'");
    for (const char* required : {"name", "rank", "field", "generators"})
        if (!doc.contains(required)) failAt(text, "", std::string("missing key '") + required + "'");

    SpecFileData out;
    if (!doc["name"].is_string()) failAt(text, "\"name\"", "'name' must be a string");
    out.name = doc["name"].get<std::string>();
    if (!doc["rank"].is_number_integer()) failAt(text, "\"rank\"", "'rank' must be an integer");
    out.rank = doc["rank"].get<int>();
    if (out.rank < 2) failAt(text, "\"rank\"", "'rank' must be at least 2");

    if (!doc["field"].is_string()) failAt(text, "\"field\"", "'field' must be a string");
    auto mode = modeFromName(doc["field"].get<std::string>());
    if (!mode) failAt(text, "\"" + doc["field"].get<std::string>() + "\"",
                      "unknown field '" + doc["field"].get<std::string>() + "'");
    out.mode = *mode;

    if (doc.contains("bracket")) {
        if (!doc["bracket"].is_string()) failAt(text, "\"bracket\"", "'bracket' must be a string");
        auto br = bracketFromName(doc["bracket"].get<std::string>());
        if (!br) failAt(text, "\"" + doc["bracket"].get<std::string>() + "\"",
                        "unknown bracket '" + doc["bracket"].get<std::string>() + "'");
        out.bracket = *br;
    }

    const json& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) failAt(text, "\"generators\"", "'generators' must be a non-empty array");
    for (size_t g = 0; g < gens.size(); ++g) {
        const json& mat = gens[g];
        std::string where = "generator " + std::to_string(g);
        if (!mat.is_array() || static_cast<int>(mat.size()) != out.rank)
            failAt(text, "", where + " must have exactly rank=" + std::to_string(out.rank) + " rows");
        std::vector<std::vector<GaussianRational>> rows;
        for (size_t r = 0; r < mat.size(); ++r) {
            const json& row = mat[r];
            if (!row.is_array() || static_cast<int>(row.size()) != out.rank)
                failAt(text, "", where + ", row " + std::to_string(r) + " must have exactly rank=" +
                                     std::to_string(out.rank) + " entries");
            std::vector<GaussianRational> entries;
            for (size_t c = 0; c < row.size(); ++c)
                entries.push_back(scalarFromJson(row[c], text,
                                                 where + ", row " + std::to_string(r) + ", column " +
                                                     std::to_string(c)));
            rows.push_back(std::move(entries));
        }
        out.generators.push_back(Matrix::fromRows(rows));
    }
    return out;
}

SpecFileData loadSpecFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseSpecText(buf.str());
}

Matrix parseMatrixLiteral(const std::string& text) {
    size_t pos = 0;
    auto skipWs = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skipWs();
        if (pos >= text.size() || text[pos] != c)
            throw InputError("bad matrix literal: expected '" + std::string(1, c) + "' in " + text);
        ++pos;
    };
    std::vector<std::vector<GaussianRational>> rows;
    expect('[');
    while (true) {
        expect('[');
        std::vector<GaussianRational> row;
        while (true) {
            skipWs();
            size_t start = pos;
            while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
            row.push_back(GaussianRational::parse(text.substr(start, pos - start)));
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skipWs();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skipWs();
    if (pos != text.size()) throw InputError("bad matrix literal: trailing characters in " + text);
    return Matrix::fromRows(rows);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string_view triStateName(TriState t) {
    switch (t) {
        case TriState::Yes: return "YES";
        case TriState::No: return "NO";
        case TriState::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string_view divisionName(DivisionResult::Status s) {
    switch (s) {
        case DivisionResult::Status::Yes: return "YES";
        case DivisionResult::Status::No: return "NO";
        case DivisionResult::Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string capsLine(const EngineCaps& caps) {
    std::ostringstream os;
    os << "max-dim=" << caps.maxDim << " max-rounds=" << caps.maxRounds
       << " witness-budget=" << caps.witnessBudget << " degree-cap=" << caps.degreeCap;
    return os.str();
}

json capsJson(const EngineCaps& caps) {
    json j;
    j["max_dim"] = caps.maxDim;
    j["max_rounds"] = caps.maxRounds;
    j["witness_budget"] = caps.witnessBudget;
    j["degree_cap"] = caps.degreeCap;
    return j;
}

} // namespace

std::string verdictString(const Classification& cls) {
    if (!cls.closed) return "NOT CLOSED AT CAPS (partial dim " + std::to_string(cls.closureDim) + ")";
    std::ostringstream os;
    if (cls.field) {
        os << "FIELD (" << cls.division.certificate->str() << ")";
        return os.str();
    }
    if (cls.division.status == DivisionResult::Status::Yes) {
        os << "DIVISION RING (" << cls.division.certificate->str() << ")";
        return os.str();
    }
    std::string base;
    if (!cls.unit) base = "NON-UNITAL ALGEBRA";
    else if (cls.commutative) base = "COMMUTATIVE RING";
    else base = "RING";
    if (cls.zeroDivisors == TriState::Yes) {
        os << base << " WITH ZERO DIVISORS (" << cls.zeroDivisorWitness->str() << ")";
    } else if (cls.division.status == DivisionResult::Status::Unknown) {
        os << base << " (division undecided within budget)";
    } else {
        os << base;
    }
    return os.str();
}

std::string renderClassificationText(const std::string& name, const Classification& cls) {
    std::ostringstream os;
    os << "algebra: " << name << "\n";
    os << "mode: " << modeName(cls.basis.mode()) << "\n";
    os << "closed: " << (cls.closed ? "yes" : "no") << " (dim " << cls.closureDim << ")\n";
    if (!cls.closed && cls.escapedProduct)
        os << "escaped-product: " << cls.escapedProduct->str() << "\n";
    if (cls.closed) {
        os << "unit: " << (cls.unit ? cls.unit->str() : "none") << "\n";
        os << "commutative: " << (cls.commutative ? "yes" : "no");
        if (cls.noncommutingWitness) os << " (" << cls.noncommutingWitness->str() << ")";
        os << "\n";
        os << "radical-dim: " << cls.radicalDim << "\n";
        os << "zero-divisors: " << triStateName(cls.zeroDivisors);
        if (cls.zeroDivisorWitness) os << " (" << cls.zeroDivisorWitness->str() << ")";
        os << "\n";
        os << "division: " << divisionName(cls.division.status);
        if (cls.division.certificate) os << " (" << cls.division.certificate->str() << ")";
        if (cls.division.witness) os << " (" << cls.division.witness->str() << ")";
        os << "\n";
        os << "field: " << (cls.field ? "yes" : "no") << "\n";
    }
    os << "verdict: " << verdictString(cls) << "\n";
    return os.str();
}

std::string renderClassificationJson(const std::string& name, const Classification& cls) {
    json j;
    j["name"] = name;
    j["mode"] = std::string(modeName(cls.basis.mode()));
    j["closed"] = cls.closed;
    j["closure_dim"] = cls.closureDim;
    j["escaped_product"] = cls.escapedProduct ? cls.escapedProduct->str() : "";
    j["unit"] = cls.unit ? cls.unit->str() : "";
    j["commutative"] = cls.commutative;
    j["noncommuting_witness"] = cls.noncommutingWitness ? cls.noncommutingWitness->str() : "";
    j["radical_dim"] = cls.radicalDim;
    j["zero_divisors"] = std::string(triStateName(cls.zeroDivisors));
    j["zero_divisor_witness"] = cls.zeroDivisorWitness ? cls.zeroDivisorWitness->str() : "";
    j["division"] = std::string(divisionName(cls.division.status));
    j["division_certificate"] = cls.division.certificate ? cls.division.certificate->str() : "";
    j["division_witness"] = cls.division.witness ? cls.division.witness->str() : "";
    j["field"] = cls.field;
    j["verdict"] = verdictString(cls);
    json basis = json::array();
    for (const auto& b : cls.basis.elements()) basis.push_back(b.str());
    j["basis"] = basis;
    return j.dump(2) + "\n";
}

std::string renderClosureText(const std::string& name, const ClosureResult& closure, Bracket bracket) {
    std::ostringstream os;
    os << "algebra: " << name << "\n";
    os << "bracket: " << bracketName(bracket) << "\n";
    os << "closed: " << (closure.closed ? "yes" : "no") << " (rounds " << closure.rounds << ")\n";
    os << "dim: " << closure.basis.dim() << "\n";
    if (!closure.closed && closure.escaped)
        os << "escaped-product: " << closure.escaped->str() << "\n";
    os << "basis:\n";
    for (int k = 0; k < closure.basis.dim(); ++k)
        os << "  b" << k << " = " << closure.basis.element(k).str() << "\n";
    if (closure.closed) {
        StructureConstants table = structureConstants(closure.basis, bracket);
        os << renderTableText(closure.basis, table);
    }
    return os.str();
}

namespace {

std::string combinationString(const std::vector<GaussianRational>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].isZero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs[k].str() << ")*b" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string renderTableText(const Basis& basis, const StructureConstants& table) {
    std::ostringstream os;
    os << "table:\n";
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j)
            os << "  b" << i << "*b" << j << " = " << combinationString(table.at(i, j)) << "\n";
    return os.str();
}

std::string renderTableCsv(const Basis& basis, const StructureConstants& table) {
    std::ostringstream os;
    os << "i,j";
    for (int k = 0; k < basis.dim(); ++k) os << ",c" << k;
    os << "\n";
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j) {
            os << i << "," << j;
            for (int k = 0; k < basis.dim(); ++k) os << "," << table.at(i, j)[static_cast<size_t>(k)].str();
            os << "\n";
        }
    return os.str();
}

std::string renderReportText(const Report& report) {
    std::ostringstream os;
    os << "matfield claim suite report\n";
    os << "suite-version: " << report.suiteVersion << "\n";
    os << "caps: " << capsLine(report.caps) << "\n";
    std::string rule(100, '-');
    os << rule << "\n";
    os << pad("claim", 7) << pad("check", 26) << pad("mode", 9) << pad("outcome", 18) << "detail\n";
    os << rule << "\n";
    for (const Verdict& v : report.rows) {
        std::ostringstream detail;
        detail << v.ref << " | " << v.detail;
        if (!v.witness.empty()) detail << " | witness: " << v.witness;
        if (!v.certificate.empty()) detail << " | certificate: " << v.certificate;
        std::string outcome(outcomeName(v.outcome));
        if (v.outcome != v.expected)
            outcome += " [expected " + std::string(outcomeName(v.expected)) + "]";
        os << pad(v.claimId, 7) << pad(v.check, 26) << pad(std::string(modeName(v.mode)), 9)
           << pad(outcome, 18) << detail.str() << "\n";
    }
    os << rule << "\n";
    os << "checks: " << report.rows.size() << " | holds: " << report.holds
       << " | refuted: " << report.refuted << " | unknown: " << report.unknown
       << " | not-interpretable: " << report.notInterpretable
       << " | expected-mismatches: " << report.mismatches << "\n";
    return os.str();
}

std::string renderReportJson(const Report& report) {
    json j;
    j["suite_version"] = report.suiteVersion;
    j["caps"] = capsJson(report.caps);
    json rows = json::array();
    for (const Verdict& v : report.rows) {
        json r;
        r["claim_id"] = v.claimId;
        r["check"] = v.check;
        r["mode"] = std::string(modeName(v.mode));
        r["outcome"] = std::string(outcomeName(v.outcome));
        r["expected"] = std::string(outcomeName(v.expected));
        r["paper_ref"] = v.ref;
        r["detail"] = v.detail;
        r["witness"] = v.witness;
        r["certificate"] = v.certificate;
        r["elapsed_ms"] = v.elapsedMs;
        rows.push_back(std::move(r));
    }
    j["claims"] = rows;
    json summary;
    summary["checks"] = report.rows.size();
    summary["holds"] = report.holds;
    summary["refuted"] = report.refuted;
    summary["unknown"] = report.unknown;
    summary["not_interpretable"] = report.notInterpretable;
    summary["expected_mismatches"] = report.mismatches;
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

} // namespace matfield
