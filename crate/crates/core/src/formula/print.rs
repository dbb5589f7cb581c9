use super::{Connective, Formula};

const ATOM: u8 = 7;
const UNARY: u8 = 6;

fn binding(kind: Connective) -> u8 {
    match kind {
        Connective::And | Connective::Nand => 5,
        Connective::Xor => 4,
        Connective::Or | Connective::Nor => 3,
        Connective::Implies
        | Connective::ConverseImplies
        | Connective::NonImplies
        | Connective::ConverseNonImplies => 2,
        Connective::Equiv => 1,
        Connective::Maj => ATOM,
    }
}

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Const(_) | Formula::Var(_) => ATOM,
        Formula::Not(_) => UNARY,
        Formula::Apply(kind, operands) if uses_call_form(*kind, operands.len()) => ATOM,
        Formula::Apply(kind, _) => binding(*kind),
    }
}

fn uses_call_form(kind: Connective, operands: usize) -> bool {
    match kind {
        Connective::Maj => true,
        Connective::Nand | Connective::Nor => operands != 2,
        _ => false,
    }
}

pub(super) fn format(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Const(false) => out.push('F'),
        Formula::Const(true) => out.push('T'),
        Formula::Var(name) => out.push_str(name),
        Formula::Not(inner) => {
            out.push('!');
            write_operand(inner, UNARY - 1, out);
        }
        Formula::Apply(kind, operands) if uses_call_form(*kind, operands.len()) => {
            out.push_str(match kind {
                Connective::Maj => "maj",
                Connective::Nand => "nand",
                _ => "nor",
            });
            out.push('(');
            for (i, op) in operands.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write(op, out);
            }
            out.push(')');
        }
        Formula::Apply(kind, operands) => {
            let lvl = binding(*kind);
            let sym = kind.symbol().unwrap_or_default();
            for (i, op) in operands.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                    out.push_str(sym);
                    out.push(' ');
                }
                // operands at the same level are grouped so they stay separate nodes
                write_operand(op, lvl, out);
            }
        }
    }
}

fn write_operand(f: &Formula, parent: u8, out: &mut String) {
    if level(f) <= parent {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}
