//! Canonical printing. The output re-parses to an identical AST.

use std::fmt::Write;

use super::ast::*;

/// Width above which a top-level conjunction or disjunction is broken into
/// one operand per line.
const WRAP_WIDTH: usize = 80;

/// Prints one annotated formula, terminated by `.` but not by a newline.
pub fn print_unit(unit: &AnnotatedFormula) -> String {
    let lang = unit.language;
    let body = match &unit.body {
        UnitBody::Formula(f) => print_body(f, lang),
        UnitBody::Type(decl) => format!("{}: {}", decl.symbol, print_type(&decl.ty)),
        UnitBody::Logic(l) => print_logic(l),
    };
    let mut out = format!("{}({},{},\n    {}", lang.keyword(), unit.name, unit.role, body);
    if let Some(src) = &unit.source {
        write!(out, ",\n    {}", src).unwrap();
        if let Some(info) = &unit.useful_info {
            write!(out, ",\n    {}", info).unwrap();
        }
    }
    out.push_str(" ).");
    out
}

/// Prints units separated by newlines, with a trailing newline.
pub fn print_units<'a>(units: impl IntoIterator<Item = &'a AnnotatedFormula>) -> String {
    let mut out = String::new();
    for u in units {
        out.push_str(&print_unit(u));
        out.push('\n');
    }
    out
}

fn print_body(f: &Formula, lang: Language) -> String {
    let flat = print_formula(f, lang);
    if flat.len() <= WRAP_WIDTH {
        return flat;
    }
    if let Formula::Binary { op, .. } = f {
        if op.is_associative() {
            let mut items = Vec::new();
            let mut cur = f;
            while let Formula::Binary { op: o, lhs, rhs } = cur {
                if o != op {
                    break;
                }
                items.push(right_operand(rhs, lang));
                cur = lhs;
            }
            items.push(operand(cur, *op, lang));
            items.reverse();
            return format!("( {} )", items.join(&format!("\n    {} ", op.glyph())));
        }
    }
    flat
}

pub fn print_formula(f: &Formula, lang: Language) -> String {
    let mut out = String::new();
    formula(&mut out, f, lang);
    out
}

pub fn print_term(t: &Term, lang: Language) -> String {
    let mut out = String::new();
    term(&mut out, t, lang);
    out
}

pub fn print_type(t: &TypeExpr) -> String {
    match t {
        TypeExpr::Named(n) => n.clone(),
        TypeExpr::Product(items) => {
            let parts: Vec<String> = items.iter().map(print_type).collect();
            format!("( {} )", parts.join(" * "))
        }
        TypeExpr::Arrow(lhs, rhs) => {
            let l = match lhs.as_ref() {
                TypeExpr::Arrow(..) => format!("( {} )", print_type(lhs)),
                _ => print_type(lhs),
            };
            format!("{} > {}", l, print_type(rhs))
        }
    }
}

pub fn print_logic(l: &LogicTerm) -> String {
    match l {
        LogicTerm::Word(w) => w.clone(),
        LogicTerm::Assign(a, b) => {
            let lhs = match a.as_ref() {
                LogicTerm::Assign(..) => format!("( {} )", print_logic(a)),
                _ => print_logic(a),
            };
            format!("{} == {}", lhs, print_logic(b))
        }
        LogicTerm::List(items) => {
            let parts: Vec<String> = items.iter().map(print_logic).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

/// Operand of a binary connective: nested binaries are parenthesized except
/// the left operand of a chain of the same associative connective.
fn operand(f: &Formula, parent: Connective, lang: Language) -> String {
    let mut out = String::new();
    match f {
        Formula::Binary { op, .. } if *op == parent && parent.is_associative() => {
            formula(&mut out, f, lang);
            return out;
        }
        Formula::Binary { .. } | Formula::Quantified { .. } => {
            out.push_str("( ");
            formula(&mut out, f, lang);
            out.push_str(" )");
        }
        Formula::Equality { .. } | Formula::HoApply { .. } => formula(&mut out, f, lang),
        _ => unit(&mut out, f, lang),
    }
    out
}

fn right_operand(f: &Formula, lang: Language) -> String {
    let mut out = String::new();
    match f {
        Formula::Binary { .. } | Formula::Quantified { .. } => {
            out.push_str("( ");
            formula(&mut out, f, lang);
            out.push_str(" )");
        }
        Formula::Equality { .. } | Formula::HoApply { .. } => formula(&mut out, f, lang),
        _ => unit(&mut out, f, lang),
    }
    out
}

fn formula(out: &mut String, f: &Formula, lang: Language) {
    match f {
        Formula::Binary { op, lhs, rhs } => {
            out.push_str(&operand(lhs, *op, lang));
            write!(out, " {} ", op.glyph()).unwrap();
            out.push_str(&right_operand(rhs, lang));
        }
        Formula::Equality { lhs, rhs, negated } => {
            eq_side(out, lhs, lang);
            out.push_str(if *negated { " != " } else { " = " });
            eq_side(out, rhs, lang);
        }
        Formula::HoApply { func, arg } => {
            apply_operand(out, func, lang);
            out.push_str(" @ ");
            apply_operand(out, arg, lang);
        }
        _ => unit(out, f, lang),
    }
}

/// Prints `f` so that it parses back as a unitary formula.
fn unit(out: &mut String, f: &Formula, lang: Language) {
    match f {
        Formula::Truth(true) => out.push_str("$true"),
        Formula::Truth(false) => out.push_str("$false"),
        Formula::Quantified {
            quantifier,
            vars,
            body,
        } => {
            out.push_str(match quantifier {
                Quantifier::Forall => "! ",
                Quantifier::Exists => "? ",
            });
            var_list(out, vars);
            out.push_str(" : ");
            unit(out, body, lang);
        }
        Formula::Not(body) => {
            out.push_str("~ ");
            unit(out, body, lang);
        }
        Formula::Atom { predicate, args } => application(out, predicate, args, lang),
        Formula::Defined { predicate, args } => application(out, predicate, args, lang),
        Formula::InWorld { world, body } => {
            out.push_str("$in_world(");
            term(out, world, lang);
            out.push_str(", ");
            formula(out, body, lang);
            out.push(')');
        }
        Formula::Modal { op, body } => {
            write!(out, "{{${}}} @ ( ", op.name()).unwrap();
            formula(out, body, lang);
            out.push_str(" )");
        }
        Formula::Binary { .. } | Formula::Equality { .. } | Formula::HoApply { .. } => {
            out.push_str("( ");
            formula(out, f, lang);
            out.push_str(" )");
        }
    }
}

fn var_list(out: &mut String, vars: &[TypedVar]) {
    out.push('[');
    for (i, v) in vars.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&v.name);
        if let Some(ty) = &v.ty {
            write!(out, ": {}", print_type(ty)).unwrap();
        }
    }
    out.push(']');
}

fn application(out: &mut String, symbol: &str, args: &[Term], lang: Language) {
    out.push_str(symbol);
    if args.is_empty() {
        return;
    }
    out.push('(');
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        term(out, a, lang);
    }
    out.push(')');
}

fn eq_side(out: &mut String, t: &Term, lang: Language) {
    match t {
        Term::Apply(..) => {
            out.push_str("( ");
            term(out, t, lang);
            out.push_str(" )");
        }
        _ => term(out, t, lang),
    }
}

fn apply_operand(out: &mut String, t: &Term, lang: Language) {
    match t {
        Term::Apply(..) => {
            out.push_str("( ");
            term(out, t, lang);
            out.push_str(" )");
        }
        _ => term(out, t, lang),
    }
}

fn term(out: &mut String, t: &Term, lang: Language) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Func { symbol, args } | Term::Defined { symbol, args } => {
            application(out, symbol, args, lang)
        }
        Term::Distinct(s) => write!(out, "\"{}\"", s).unwrap(),
        Term::Number(n) => out.push_str(&n.text),
        Term::Apply(f, a) => {
            apply_operand(out, f, lang);
            out.push_str(" @ ");
            apply_operand(out, a, lang);
        }
        Term::Lambda { vars, body } => {
            out.push_str("( ^ ");
            var_list(out, vars);
            out.push_str(" : ");
            match body.as_ref() {
                Term::Apply(..) => {
                    out.push_str("( ");
                    term(out, body, lang);
                    out.push_str(" )");
                }
                _ => term(out, body, lang),
            }
            out.push_str(" )");
        }
        Term::Formula(f) => match f.as_ref() {
            Formula::Truth(_) => unit(out, f, lang),
            _ => {
                out.push_str("( ");
                formula(out, f, lang);
                out.push_str(" )");
            }
        },
    }
}
