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

// matfield: exact classification of matrix number systems.
//
// Exit codes: 0 success / expectations met; 1 claim or golden mismatch,
// or a non-closed table; 2 input or parse error; 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matfield/claims.hpp"
#include "matfield/spec_io.hpp"

namespace {

using namespace matfield;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCaps = 3;

FieldMode parseModeFlag(const std::string& name) {
    auto m = modeFromName(name);
    if (!m) throw InputError("unknown field mode: " + name);
    return *m;
}

Bracket parseBracketFlag(const std::string& name) {
    auto b = bracketFromName(name);
    if (!b) throw InputError("unknown bracket: " + name);
    return *b;
}

struct CapsFlags {
    int maxDim = EngineCaps{}.maxDim;
    int maxRounds = EngineCaps{}.maxRounds;
    int budget = EngineCaps{}.witnessBudget;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-dim", maxDim, "closure dimension cap");
        cmd->add_option("--max-rounds", maxRounds, "closure round cap");
        cmd->add_option("--budget", budget, "witness search budget");
    }
    EngineCaps caps() const {
        EngineCaps c;
        c.maxDim = maxDim;
        c.maxRounds = maxRounds;
        c.witnessBudget = budget;
        return c;
    }
};

int cmdClassify(const std::string& specPath, const std::string& fieldOverride,
                const std::string& format, const CapsFlags& flags) {
    SpecFileData spec = loadSpecFile(specPath);
    if (!fieldOverride.empty()) spec.mode = parseModeFlag(fieldOverride);
    if (spec.bracket != Bracket::Mul)
        throw InputError("classify requires bracket=mul (got " +
                         std::string(bracketName(spec.bracket)) + ")");
    Classification cls = classify(spec.toAlgebraSpec(), flags.caps());
    if (format == "json")
        std::cout << renderClassificationJson(spec.name, cls);
    else
        std::cout << renderClassificationText(spec.name, cls);
    return cls.closed ? kExitOk : kExitCaps;
}

int cmdClosure(const std::string& specPath, const std::string& bracketOverride,
               const std::string& format, const CapsFlags& flags) {
    SpecFileData spec = loadSpecFile(specPath);
    if (!bracketOverride.empty()) spec.bracket = parseBracketFlag(bracketOverride);
    ClosureResult closure = closeUnder(spec.toAlgebraSpec(), flags.caps());
    if (format == "json") {
        nlohmann::json j;
        j["name"] = spec.name;
        j["bracket"] = std::string(bracketName(spec.bracket));
        j["mode"] = std::string(modeName(spec.mode));
        j["closed"] = closure.closed;
        j["dim"] = closure.basis.dim();
        j["rounds"] = closure.rounds;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& b : closure.basis.elements()) basis.push_back(b.str());
        j["basis"] = basis;
        j["escaped_product"] = closure.escaped ? closure.escaped->str() : "";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << renderClosureText(spec.name, closure, spec.bracket);
    }
    return closure.closed ? kExitOk : kExitCaps;
}

int cmdWitness(const std::string& specPath, const std::string& kind, const std::string& format,
               const CapsFlags& flags) {
    SpecFileData spec = loadSpecFile(specPath);
    ClosureResult closure = closeUnder(spec.toAlgebraSpec(), flags.caps());
    if (!closure.closed) {
        std::cout << "closure cap exceeded at dim " << closure.basis.dim() << "\n";
        return kExitCaps;
    }
    std::optional<Witness> witness;
    std::string none;
    if (kind == "zero-divisor") {
        witness = findZeroDivisor(closure.basis, flags.caps(), spec.generators);
        if (witness && !verifyZeroDivisor(closure.basis, *witness))
            throw Error("internal: witness failed re-verification");
        none = "none found within budget";
    } else if (kind == "noncommuting") {
        auto comm = isCommutative(closure.basis);
        witness = comm.witness;
        if (witness && !verifyNoncommuting(closure.basis, *witness))
            throw Error("internal: witness failed re-verification");
        none = "none: the algebra is commutative";
    } else {
        throw InputError("unknown witness kind: " + kind);
    }
    if (format == "json") {
        nlohmann::json j;
        j["name"] = spec.name;
        j["kind"] = kind;
        j["found"] = witness.has_value();
        j["witness"] = witness ? witness->str() : "";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (witness ? witness->str() : none) << "\n";
    }
    return kExitOk;
}

int cmdTable(const std::string& specPath, const std::string& format) {
    SpecFileData spec = loadSpecFile(specPath);
    Basis basis = spanBasis(spec.generators, spec.mode);
    try {
        StructureConstants table = structureConstants(basis, spec.bracket);
        std::cout << (format == "csv" ? renderTableCsv(basis, table) : renderTableText(basis, table));
        return kExitOk;
    } catch (const NotClosedError& e) {
        std::cout << "not closed: " << e.witness().str() << "\n";
        return kExitMismatch;
    }
}

int cmdCheckPaper(const std::vector<std::string>& claimIds, const std::vector<std::string>& modes,
                  const std::string& format, const std::string& goldenPath) {
    std::optional<std::set<std::string>> idFilter;
    if (!claimIds.empty()) {
        idFilter.emplace(claimIds.begin(), claimIds.end());
        for (const auto& id : *idFilter) {
            bool known = false;
            for (const auto& c : builtinClaims()) known = known || c.id == id;
            if (!known) throw InputError("unknown claim id: " + id);
        }
    }
    std::optional<std::set<FieldMode>> modeFilter;
    if (!modes.empty()) {
        modeFilter.emplace();
        for (const auto& m : modes) modeFilter->insert(parseModeFlag(m));
    }
    Report report = runAll(idFilter, modeFilter);
    std::string text = renderReportText(report);
    if (format == "json")
        std::cout << renderReportJson(report);
    else
        std::cout << text;

    if (!goldenPath.empty()) {
        std::ifstream in(goldenPath, std::ios::binary);
        if (!in) throw InputError("cannot read golden report: " + goldenPath);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != text) {
            std::istringstream a(buf.str()), b(text);
            std::string la, lb;
            std::cerr << "golden mismatch:\n";
            while (std::getline(a, la) || std::getline(b, lb)) {
                if (la != lb) {
                    if (!la.empty()) std::cerr << "- " << la << "\n";
                    if (!lb.empty()) std::cerr << "+ " << lb << "\n";
                }
                la.clear();
                lb.clear();
            }
            return kExitMismatch;
        }
    }
    return report.mismatches == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matfield: exact arithmetic workbench for matrix number systems"};
    app.require_subcommand(1);

    std::string specPath, fieldOverride, bracketOverride, format = "text", kind = "zero-divisor";
    std::string goldenPath;
    std::vector<std::string> claimIds, modes;
    CapsFlags flags;

    auto* classifyCmd = app.add_subcommand("classify", "classify the algebra generated by a spec file");
    classifyCmd->add_option("spec", specPath, "algebra spec file")->required();
    classifyCmd->add_option("--field", fieldOverride, "override the coefficient field mode");
    classifyCmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    flags.attach(classifyCmd);

    auto* closureCmd = app.add_subcommand("closure", "compute the bracket closure and its table");
    closureCmd->add_option("spec", specPath, "algebra spec file")->required();
    closureCmd->add_option("--bracket", bracketOverride, "mul|comm|anticomm");
    closureCmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    flags.attach(closureCmd);

    auto* witnessCmd = app.add_subcommand("witness", "search for a refutation witness");
    witnessCmd->add_option("spec", specPath, "algebra spec file")->required();
    witnessCmd->add_option("--kind", kind, "zero-divisor|noncommuting")
        ->check(CLI::IsMember({"zero-divisor", "noncommuting"}));
    witnessCmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    flags.attach(witnessCmd);

    auto* tableCmd = app.add_subcommand("table", "print the structure-constant table of the span");
    tableCmd->add_option("spec", specPath, "algebra spec file")->required();
    tableCmd->add_option("--format", format, "text|csv")->check(CLI::IsMember({"text", "csv"}));

    auto* checkCmd = app.add_subcommand("check-paper", "run the built-in claim catalog");
    checkCmd->add_option("--claims", claimIds, "comma-separated claim ids")->delimiter(',');
    checkCmd->add_option("--modes", modes, "comma-separated field modes")->delimiter(',');
    checkCmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    checkCmd->add_option("--golden", goldenPath, "golden report to byte-compare against");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classifyCmd)) return cmdClassify(specPath, fieldOverride, format, flags);
        if (app.got_subcommand(closureCmd)) return cmdClosure(specPath, bracketOverride, format, flags);
        if (app.got_subcommand(witnessCmd)) return cmdWitness(specPath, kind, format, flags);
        if (app.got_subcommand(tableCmd)) return cmdTable(specPath, format);
        if (app.got_subcommand(checkCmd)) return cmdCheckPaper(claimIds, modes, format, goldenPath);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
