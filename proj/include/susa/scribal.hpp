#ifndef SUSA_SCRIBAL_HPP
#define SUSA_SCRIBAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "susa/exact.hpp"

namespace susa::scribal {

/// Opcodes mirror the scribal vocabulary: i-shi (multiply), igi-n (reciprocal),
/// he-pe (halve), nigin (square), ib-si (square root), dah (add), zi (subtract),
/// "let it hold your head" (hold/recall), gar (put down).
enum class Opcode {
    Multiply,
    Reciprocal,
    Halve,
    Square,
    SquareRoot,
    Add,
    Subtract,
    Hold,
    Recall,
    Put,
};

const char* opcode_name(Opcode op);
Opcode opcode_from_name(const std::string& name);
std::size_t opcode_arity(Opcode op);

struct LiteralOperand { ExactNumber value; };
struct StepRefOperand { std::size_t index; }; // must point backwards
struct InputOperand { std::string name; };

using Operand = std::variant<LiteralOperand, StepRefOperand, InputOperand>;

struct Annotation {
    std::string line;          // tablet line label, e.g. "L7b"
    std::string sic;           // the tablet's erroneous printed value, if any
    bool reconstructed = false; // step supplied by the analysis, not the tablet
};

struct Step {
    Opcode opcode;
    std::vector<Operand> operands;
    std::string target; // register name for Hold/Recall, binding name for Put
    Annotation note;
};

/// Straight-line program over ExactNumber values. No control flow.
struct Procedure {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<Step> steps;
    std::vector<std::pair<std::string, std::size_t>> outputs; // name -> step index
    std::string notes;
};

struct TraceEntry {
    std::size_t index;
    Step step;
    std::vector<ExactNumber> operand_values;
    ExactNumber result;
};

struct Trace {
    std::string procedure;
    std::vector<std::pair<std::string, ExactNumber>> inputs;
    std::vector<TraceEntry> entries;
    std::vector<std::pair<std::string, ExactNumber>> outputs;
};

/// Execution failure with the offending step pinned down.
class ExecError : public Error {
public:
    ExecError(ErrorCode code, std::string what, std::size_t step_index,
              std::string line)
        : Error(code, std::move(what)), step_index_(step_index),
          line_(std::move(line)) {}

    std::size_t step_index() const { return step_index_; }
    const std::string& line() const { return line_; }

private:
    std::size_t step_index_;
    std::string line_;
};

using Bindings = std::vector<std::pair<std::string, ExactNumber>>;

/// Runs the procedure with exact arithmetic. Subtract is scribal (checked),
/// Reciprocal and SquareRoot come from numtheory. Pure: identical calls give
/// identical traces.
Trace execute(const Procedure& proc, const Bindings& inputs);

struct CompareItem {
    std::string label;
    ExactNumber expected;
    ExactNumber actual;
    bool match;
};

struct CompareReport {
    bool pass = true;
    std::vector<CompareItem> items;
};

/// Matches expected (label, value) pairs against trace entries by line label,
/// in order, consuming each entry at most once. Unknown labels are errors.
CompareReport compare_trace(const Trace& actual,
                            const std::vector<std::pair<std::string, ExactNumber>>& expected);

/// Deterministic JSON document: fixed key order, numerals as canonical
/// sexagesimal text plus a "p/q" rational field. Values with an irregular
/// denominator carry the rational field only.
std::string to_json(const Trace& trace);

} // namespace susa::scribal

#endif
