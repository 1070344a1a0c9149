#include "boolsolve/formula.hpp"

#include <string>

namespace boolsolve {

namespace {

// Binding strength, loosest first. Quantifiers bind loosest of all: their
// body extends as far right as possible.
enum Prec : int { kQuant = 0, kIff = 1, kImplies = 2, kOr = 3, kAnd = 4, kNot = 5, kAtom = 6 };

int prec_of(const Formula& f) {
    switch (f.kind()) {
        case Kind::Iff:
            return kIff;
        case Kind::Implies:
            return kImplies;
        case Kind::Or:
            return kOr;
        case Kind::And:
            return kAnd;
        case Kind::Not:
            return kNot;
        case Kind::Exists:
        case Kind::Forall:
            return kQuant;
        default:
            return kAtom;
    }
}

const char* op_of(Kind kind) {
    switch (kind) {
        case Kind::Iff:
            return " <-> ";
        case Kind::Implies:
            return " -> ";
        case Kind::Or:
            return " | ";
        case Kind::And:
            return " & ";
        default:
            return "";
    }
}

class Printer {
public:
    std::string out;

    // `min_prec` is the loosest operator allowed bare at this position;
    // `rightmost` says nothing follows this subformula inside its group.
    void emit(const Formula& f, int min_prec, bool rightmost) {
        const int p = prec_of(f);
        bool parens = false;
        if (f.is_quantifier()) {
            parens = !rightmost;
        } else {
            parens = p < min_prec;
        }
        if (parens) {
            out += '(';
            emit_bare(f, true);
            out += ')';
        } else {
            emit_bare(f, rightmost);
        }
    }

private:
    void emit_bare(const Formula& f, bool rightmost) {
        switch (f.kind()) {
            case Kind::Top:
                out += "true";
                return;
            case Kind::Bot:
                out += "false";
                return;
            case Kind::Atom:
                out += f.name();
                return;
            case Kind::Not:
                out += '~';
                emit(f.operand(), kNot, rightmost);
                return;
            case Kind::Exists:
            case Kind::Forall:
                out += f.kind() == Kind::Exists ? "exists " : "forall ";
                out += f.name();
                out += " . ";
                emit(f.body(), kQuant, true);
                return;
            case Kind::Implies:
                emit(f.lhs(), kImplies + 1, false);
                out += op_of(f.kind());
                emit(f.rhs(), kImplies, rightmost);
                return;
            case Kind::Iff:
            case Kind::Or:
            case Kind::And: {
                const int p = prec_of(f);
                emit(f.lhs(), p, false);
                out += op_of(f.kind());
                emit(f.rhs(), p + 1, rightmost);
                return;
            }
        }
    }
};

}  // namespace

std::string print(const Formula& f) {
    Printer printer;
    printer.emit(f, kQuant, true);
    return std::move(printer.out);
}

}  // namespace boolsolve
