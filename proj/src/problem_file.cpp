#include "boolsolve/problem_file.hpp"

#include "boolsolve/errors.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace boolsolve {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InvalidProblem("line " + std::to_string(line) + ": " + what);
}

std::vector<Entry> entries(std::string_view text) {
    std::vector<Entry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto hash = line.find('#');
        const std::string_view content = trim(line.substr(0, hash));
        if (content.empty()) continue;
        if (line.front() == ' ' || line.front() == '\t') {
            if (out.empty()) fail(line_no, "continuation line without a key");
            out.back().value += '\n';
            out.back().value += content;
            continue;
        }
        const auto colon = content.find(':');
        if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
        out.push_back({std::string(trim(content.substr(0, colon))),
                       std::string(trim(content.substr(colon + 1))), line_no});
    }
    return out;
}

}  // namespace

std::vector<std::string> parse_atom_list(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    for (const auto& a : out) {
        if (!is_identifier(a)) throw InvalidProblem("'" + a + "' is not an identifier");
    }
    return out;
}

ProblemFile parse_problem(std::string_view text) {
    ProblemFile out;
    std::optional<Formula> formula;
    bool have_unknowns = false;
    std::map<std::string, std::size_t> seen;
    for (const auto& e : entries(text)) {
        if (!seen.emplace(e.key, e.line).second) fail(e.line, "duplicate key '" + e.key + "'");
        try {
            if (e.key == "unknowns") {
                out.problem.unknowns = parse_atom_list(e.value);
                have_unknowns = true;
            } else if (e.key == "parameters") {
                out.problem.parameters = parse_atom_list(e.value);
            } else if (e.key == "forbid") {
                const auto atoms = parse_atom_list(e.value);
                out.problem.forbidden = AtomSet(atoms.begin(), atoms.end());
            } else if (e.key.starts_with("forbid(") && e.key.ends_with(")")) {
                const std::string p = e.key.substr(7, e.key.size() - 8);
                if (!is_identifier(p)) fail(e.line, "'" + p + "' is not an identifier");
                const auto atoms = parse_atom_list(e.value);
                out.component_forbid[p] = AtomSet(atoms.begin(), atoms.end());
            } else if (e.key == "formula") {
                formula = parse(e.value);
            } else {
                fail(e.line, "unknown key '" + e.key + "'");
            }
        } catch (const ParseError& err) {
            fail(e.line, std::string("formula ") + err.what());
        } catch (const InvalidProblem& err) {
            const std::string what = err.what();
            if (what.starts_with("line ")) throw;
            fail(e.line, what);
        }
    }
    if (!have_unknowns) throw InvalidProblem("missing 'unknowns:'");
    if (!formula) throw InvalidProblem("missing 'formula:'");
    out.problem.formula = *formula;
    for (const auto& [p, atoms] : out.component_forbid) {
        if (std::find(out.problem.unknowns.begin(), out.problem.unknowns.end(), p) ==
            out.problem.unknowns.end()) {
            fail(seen.at("forbid(" + p + ")"), "'" + p + "' is not an unknown");
        }
    }
    out.problem.validate();
    return out;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidProblem("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace boolsolve
