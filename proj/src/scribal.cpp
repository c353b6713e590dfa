#include "susa/scribal.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "susa/numtheory.hpp"
#include "susa/sexagesimal.hpp"

namespace susa::scribal {

const char* opcode_name(Opcode op) {
    switch (op) {
        case Opcode::Multiply: return "Multiply";
        case Opcode::Reciprocal: return "Reciprocal";
        case Opcode::Halve: return "Halve";
        case Opcode::Square: return "Square";
        case Opcode::SquareRoot: return "SquareRoot";
        case Opcode::Add: return "Add";
        case Opcode::Subtract: return "Subtract";
        case Opcode::Hold: return "Hold";
        case Opcode::Recall: return "Recall";
        case Opcode::Put: return "Put";
    }
    return "?";
}

Opcode opcode_from_name(const std::string& name) {
    static const std::map<std::string, Opcode> table = {
        {"Multiply", Opcode::Multiply},   {"Reciprocal", Opcode::Reciprocal},
        {"Halve", Opcode::Halve},         {"Square", Opcode::Square},
        {"SquareRoot", Opcode::SquareRoot}, {"Add", Opcode::Add},
        {"Subtract", Opcode::Subtract},   {"Hold", Opcode::Hold},
        {"Recall", Opcode::Recall},       {"Put", Opcode::Put},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw Error(ErrorCode::BadProcedure, "unknown opcode '" + name + "'");
    return it->second;
}

std::size_t opcode_arity(Opcode op) {
    switch (op) {
        case Opcode::Multiply:
        case Opcode::Add:
        case Opcode::Subtract:
            return 2;
        case Opcode::Recall:
            return 0;
        default:
            return 1;
    }
}

Trace execute(const Procedure& proc, const Bindings& inputs) {
    Trace trace;
    trace.procedure = proc.name;
    trace.inputs = inputs;

    auto input_value = [&](const std::string& name,
                           std::size_t at) -> const ExactNumber& {
        for (const auto& [n, v] : inputs)
            if (n == name)
                return v;
        throw ExecError(ErrorCode::UnboundReference,
                        "input '" + name + "' is not bound", at,
                        at < proc.steps.size() ? proc.steps[at].note.line : "");
    };

    std::map<std::string, ExactNumber> registers;
    std::vector<ExactNumber> results;
    results.reserve(proc.steps.size());

    for (std::size_t i = 0; i < proc.steps.size(); ++i) {
        const Step& step = proc.steps[i];
        if (step.operands.size() != opcode_arity(step.opcode))
            throw ExecError(ErrorCode::BadProcedure,
                            std::string("wrong operand count for ") +
                                opcode_name(step.opcode),
                            i, step.note.line);

        std::vector<ExactNumber> values;
        values.reserve(step.operands.size());
        for (const Operand& op : step.operands) {
            if (const auto* lit = std::get_if<LiteralOperand>(&op)) {
                values.push_back(lit->value);
            } else if (const auto* ref = std::get_if<StepRefOperand>(&op)) {
                if (ref->index >= i)
                    throw ExecError(ErrorCode::UnboundReference,
                                    "step reference does not point backwards", i,
                                    step.note.line);
                values.push_back(results[ref->index]);
            } else {
                values.push_back(input_value(std::get<InputOperand>(op).name, i));
            }
        }

        ExactNumber result;
        try {
            switch (step.opcode) {
                case Opcode::Multiply: result = values[0] * values[1]; break;
                case Opcode::Add: result = values[0] + values[1]; break;
                case Opcode::Subtract: result = checked_sub(values[0], values[1]); break;
                case Opcode::Reciprocal: result = reciprocal(values[0]); break;
                case Opcode::Halve: result = halve(values[0]); break;
                case Opcode::Square: result = square(values[0]); break;
                case Opcode::SquareRoot: result = sqrt_exact(values[0]); break;
                case Opcode::Hold:
                    result = values[0];
                    if (step.target.empty())
                        throw Error(ErrorCode::BadProcedure, "Hold without register");
                    registers.insert_or_assign(step.target, result);
                    break;
                case Opcode::Recall: {
                    auto it = registers.find(step.target);
                    if (it == registers.end())
                        throw Error(ErrorCode::UnboundReference,
                                    "register '" + step.target +
                                        "' read before any Hold");
                    result = it->second;
                    break;
                }
                case Opcode::Put: result = values[0]; break;
            }
        } catch (const ExecError&) {
            throw;
        } catch (const Error& e) {
            throw ExecError(e.code(),
                            std::string(e.what()) + " (step " + std::to_string(i) +
                                (step.note.line.empty() ? ""
                                                        : ", line " + step.note.line) +
                                ")",
                            i, step.note.line);
        }

        results.push_back(result);
        trace.entries.push_back(TraceEntry{i, step, std::move(values), result});

        if (step.opcode == Opcode::Put && !step.target.empty())
            trace.outputs.emplace_back(step.target, result);
    }

    for (const auto& [name, index] : proc.outputs) {
        if (index >= results.size())
            throw Error(ErrorCode::BadProcedure,
                        "output '" + name + "' references a missing step");
        trace.outputs.emplace_back(name, results[index]);
    }
    return trace;
}

CompareReport compare_trace(
    const Trace& actual,
    const std::vector<std::pair<std::string, ExactNumber>>& expected) {
    CompareReport report;
    std::size_t cursor = 0;
    for (const auto& [label, value] : expected) {
        bool found = false;
        for (std::size_t i = cursor; i < actual.entries.size(); ++i) {
            if (actual.entries[i].step.note.line == label) {
                const ExactNumber& got = actual.entries[i].result;
                report.items.push_back({label, value, got, got == value});
                if (got != value)
                    report.pass = false;
                cursor = i + 1;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorCode::UnknownLabel,
                        "no trace entry labeled '" + label + "'");
    }
    return report;
}

namespace {

nlohmann::ordered_json value_json(const ExactNumber& v) {
    nlohmann::ordered_json j;
    try {
        j["sexagesimal"] = format_sexagesimal(v);
    } catch (const Error&) {
        // Irregular denominator: rational field only.
    }
    j["rational"] = v.to_string();
    return j;
}

} // namespace

std::string to_json(const Trace& trace) {
    nlohmann::ordered_json doc;
    doc["procedure"] = trace.procedure;
    doc["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [name, v] : trace.inputs)
        doc["inputs"][name] = value_json(v);
    doc["steps"] = nlohmann::ordered_json::array();
    for (const TraceEntry& entry : trace.entries) {
        nlohmann::ordered_json s;
        s["index"] = entry.index;
        s["opcode"] = opcode_name(entry.step.opcode);
        s["operands"] = nlohmann::ordered_json::array();
        for (const ExactNumber& v : entry.operand_values)
            s["operands"].push_back(value_json(v));
        s["result"] = value_json(entry.result);
        if (!entry.step.note.line.empty())
            s["line"] = entry.step.note.line;
        if (!entry.step.note.sic.empty())
            s["sic"] = entry.step.note.sic;
        if (entry.step.note.reconstructed)
            s["reconstructed"] = true;
        if (!entry.step.target.empty())
            s["target"] = entry.step.target;
        doc["steps"].push_back(std::move(s));
    }
    doc["outputs"] = nlohmann::ordered_json::object();
    for (const auto& [name, v] : trace.outputs)
        doc["outputs"][name] = value_json(v);
    return doc.dump(2) + "\n";
}

} // namespace susa::scribal
