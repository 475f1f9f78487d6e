use std::fmt::Write;

use semicong::geometry::Variety;
use semicong::SemiringTable;

use super::{Carrier, CongruenceValue, Script, SystemValue, Value};

/// Renders a script in normal form: one declaration per line (explicit
/// tables span several), congruences as full partitions, systems with
/// explicit variable indices. Parsing the output gives back an equal
/// [`Script`].
pub fn print_script(s: &Script) -> String {
    let mut out = String::new();
    for d in &s.decls {
        let name = &d.name;
        match &d.value {
            Value::Semiring(Carrier::Naturals) => {
                writeln!(out, "semiring {name} builtin naturals end")
            }
            Value::Semiring(Carrier::Finite {
                builtin: Some(b), ..
            }) => writeln!(out, "semiring {name} builtin {b} end"),
            Value::Semiring(Carrier::Finite {
                table,
                builtin: None,
            }) => {
                out.push_str(&print_table(name, table));
                Ok(())
            }
            Value::Congruence { on, value } => {
                let body = match value {
                    CongruenceValue::Finite(c) => c.display(table_of(s, on)),
                    CongruenceValue::Naturals(m) => format!("mod {}", m.modulus()),
                };
                writeln!(out, "congruence {name} on {on} = {body}")
            }
            Value::Ideal { on, ideal } => {
                let t = table_of(s, on);
                let members: Vec<&str> = ideal.members().iter().map(|&a| t.label(a)).collect();
                writeln!(out, "ideal {name} on {on} = {{{}}}", members.join(" "))
            }
            Value::Variety { on, variety } => writeln!(
                out,
                "variety {name} on {on} vars {} = {}",
                variety.num_vars(),
                points_inline(table_of(s, on), variety)
            ),
            Value::System {
                over,
                within,
                system,
            } => {
                let (n, body) = match system {
                    SystemValue::Finite(t) => (t.num_vars(), t.display()),
                    SystemValue::Naturals(t) => (t.num_vars(), t.display()),
                };
                writeln!(
                    out,
                    "system {name} over {over} in {within} vars {n} = \"{body}\""
                )
            }
        }
        .expect("writing to a String");
    }
    out
}

fn table_of<'a>(s: &'a Script, name: &str) -> &'a SemiringTable {
    match s.carrier(name) {
        Ok(Carrier::Finite { table, .. }) => table,
        _ => panic!("declarations refer to finite semirings declared earlier"),
    }
}

fn points_inline(t: &SemiringTable, y: &Variety) -> String {
    if y.is_empty() {
        return "none".into();
    }
    let pts: Vec<String> = y
        .points()
        .iter()
        .map(|p| {
            let c: Vec<&str> = p.iter().map(|&a| t.label(a)).collect();
            format!("({})", c.join(", "))
        })
        .collect();
    pts.join(" ")
}

/// An explicit semiring block. Entries below the diagonal are written only
/// where they differ from their mirror image.
pub fn print_table(name: &str, t: &SemiringTable) -> String {
    let mut out = format!("semiring {name}\n  elements {}\n", t.labels().join(" "));
    let _ = writeln!(out, "  zero {}", t.label(t.zero()));
    let _ = writeln!(out, "  one {}", t.label(t.one()));
    for (op, f) in [
        (
            "add",
            SemiringTable::add as fn(&SemiringTable, usize, usize) -> usize,
        ),
        ("mul", SemiringTable::mul),
    ] {
        for a in t.elements() {
            for b in t.elements() {
                if a > b && f(t, a, b) == f(t, b, a) {
                    continue;
                }
                let _ = writeln!(
                    out,
                    "  {op} {} {} = {}",
                    t.label(a),
                    t.label(b),
                    t.label(f(t, a, b))
                );
            }
        }
    }
    out.push_str("end\n");
    out
}
