//! The workbench script language.
//!
//! ```text
//! semiring A builtin zmod 6 end
//! semiring N builtin naturals end
//! semiring S
//!   elements 0 a 1
//!   zero 0  one 1
//!   add a a = 1   mul a a = a   ...
//! end
//! congruence r on A = {0 2 4}{1 3 5}
//! congruence s on A = pairs 0~3, 1~4
//! congruence m on N = mod 5
//! ideal J on A = {0 3}
//! variety Y on A vars 2 = (0, 1) (2, 3)
//! system T over A in A vars 1 = "x^2 = 4"
//! ```
//!
//! Whitespace and line breaks are insignificant; `#` starts a comment.
//! Every name must be declared before it is used.

mod cursor;
pub mod expr;
pub mod lexer;
mod print;

use std::collections::{BTreeSet, HashSet};

use semicong::congruence::generated_congruence;
use semicong::geometry::window::{NatCongruence, NatSystem};
use semicong::geometry::{PairSystem, Variety};
use semicong::polynomial::EmbeddedSemiring;
use semicong::semiring::{Ideal, Naturals};
use semicong::{Builtin, Congruence, PairRelation, Partition, SemiringTable};

use cursor::Cursor;
use expr::{build, parse_pairs, variable_index};
use lexer::tokenize;

use crate::error::{CliError, Location, Result};

pub use print::{print_script, print_table};

const KEYWORDS: &[&str] = &[
    "semiring",
    "builtin",
    "elements",
    "zero",
    "one",
    "add",
    "mul",
    "end",
    "congruence",
    "on",
    "pairs",
    "mod",
    "ideal",
    "variety",
    "vars",
    "none",
    "system",
    "over",
    "in",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    /// A finite table, remembering the builtin it came from.
    Finite {
        table: SemiringTable,
        builtin: Option<Builtin>,
    },
    /// `ℤ≥0`, available only in window mode.
    Naturals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceValue {
    Finite(Congruence),
    Naturals(NatCongruence),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemValue {
    Finite(Box<PairSystem>),
    Naturals(NatSystem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Semiring(Carrier),
    Congruence {
        on: String,
        value: CongruenceValue,
    },
    Ideal {
        on: String,
        ideal: Ideal,
    },
    Variety {
        on: String,
        variety: Variety,
    },
    System {
        over: String,
        within: String,
        system: SystemValue,
    },
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Semiring(_) => "semiring",
            Value::Congruence { .. } => "congruence",
            Value::Ideal { .. } => "ideal",
            Value::Variety { .. } => "variety",
            Value::System { .. } => "system",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub name: String,
    pub value: Value,
}

/// A resolved script: declarations in source order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub decls: Vec<Decl>,
}

/// A parsed script plus diagnostics meant for stderr.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub script: Script,
    pub notices: Vec<String>,
}

impl Script {
    fn find(&self, name: &str) -> Option<&Value> {
        self.decls.iter().find(|d| d.name == name).map(|d| &d.value)
    }

    /// `at` is the script location of the reference, `None` for names given
    /// on the command line.
    fn lookup(&self, name: &str, kind: &'static str, at: Option<Location>) -> Result<&Value> {
        match (self.find(name), at) {
            (Some(v), _) if v.kind() == kind => Ok(v),
            (Some(v), Some(at)) => Err(CliError::syntax(
                at,
                format!("`{name}` is a {}, not a {kind}", v.kind()),
            )),
            (Some(v), None) => Err(CliError::Usage(format!(
                "`{name}` is a {}, not a {kind}",
                v.kind()
            ))),
            (None, Some(at)) => Err(CliError::Undefined {
                at,
                name: name.to_string(),
            }),
            (None, None) => Err(CliError::Usage(format!("undefined name `{name}`"))),
        }
    }

    pub fn carrier(&self, name: &str) -> Result<&Carrier> {
        self.carrier_at(name, None)
    }

    fn carrier_at(&self, name: &str, at: Option<Location>) -> Result<&Carrier> {
        match self.lookup(name, "semiring", at)? {
            Value::Semiring(c) => Ok(c),
            _ => unreachable!(),
        }
    }

    pub fn congruence(&self, name: &str) -> Result<(&str, &CongruenceValue)> {
        match self.lookup(name, "congruence", None)? {
            Value::Congruence { on, value } => Ok((on, value)),
            _ => unreachable!(),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<(&str, &Ideal)> {
        match self.lookup(name, "ideal", None)? {
            Value::Ideal { on, ideal } => Ok((on, ideal)),
            _ => unreachable!(),
        }
    }

    pub fn variety(&self, name: &str) -> Result<(&str, &Variety)> {
        match self.lookup(name, "variety", None)? {
            Value::Variety { on, variety } => Ok((on, variety)),
            _ => unreachable!(),
        }
    }

    /// `(over, in, system)`.
    pub fn system(&self, name: &str) -> Result<(&str, &str, &SystemValue)> {
        match self.lookup(name, "system", None)? {
            Value::System {
                over,
                within,
                system,
            } => Ok((over, within, system)),
            _ => unreachable!(),
        }
    }
}

fn is_reserved(w: &str) -> bool {
    KEYWORDS.contains(&w) || variable_index(w).is_some()
}

pub fn parse_script(text: &str) -> Result<Parsed> {
    let end = {
        let line = text.lines().count().max(1);
        let col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Location { line, col }
    };
    let mut p = Parser {
        c: Cursor::new(tokenize(text, Location { line: 1, col: 1 })?, end),
        script: Script::default(),
        notices: Vec::new(),
        declared: HashSet::new(),
    };
    while !p.c.is_done() {
        p.declaration()?;
    }
    Ok(Parsed {
        script: p.script,
        notices: p.notices,
    })
}

/// Parses a command-line pair list such as `0~2, 1~3` against `t`.
pub fn parse_pair_list(
    text: &str,
    t: &SemiringTable,
    semiring: &str,
) -> Result<Vec<(usize, usize)>> {
    let end = Location {
        line: 1,
        col: text.chars().count() + 1,
    };
    let mut p = Parser {
        c: Cursor::new(tokenize(text, Location { line: 1, col: 1 })?, end),
        script: Script::default(),
        notices: Vec::new(),
        declared: HashSet::new(),
    };
    let pairs = p.pair_list(t, semiring)?;
    if !p.c.is_done() {
        return Err(p.c.unexpected("`,` or the end of the pair list"));
    }
    Ok(pairs)
}

struct Parser {
    c: Cursor,
    script: Script,
    notices: Vec<String>,
    declared: HashSet<String>,
}

impl Parser {
    fn declaration(&mut self) -> Result<()> {
        let (kw, at) = self.c.word("a declaration")?;
        match kw.as_str() {
            "semiring" => self.semiring(),
            "congruence" => self.congruence(),
            "ideal" => self.ideal(),
            "variety" => self.variety(),
            "system" => self.system(),
            _ => Err(CliError::syntax(
                at,
                format!("expected `semiring`, `congruence`, `ideal`, `variety` or `system`, found `{kw}`"),
            )),
        }
    }

    fn new_name(&mut self) -> Result<String> {
        let (name, at) = self.c.word("a name")?;
        if is_reserved(&name) {
            return Err(CliError::syntax(at, format!("`{name}` is reserved")));
        }
        if self.declared.contains(&name) {
            return Err(CliError::syntax(
                at,
                format!("`{name}` is already declared"),
            ));
        }
        Ok(name)
    }

    fn declare(&mut self, name: String, value: Value) {
        self.declared.insert(name.clone());
        self.script.decls.push(Decl { name, value });
    }

    fn carrier_ref(&mut self) -> Result<(String, Carrier)> {
        let (name, at) = self.c.word("a semiring name")?;
        let carrier = self.script.carrier_at(&name, Some(at))?.clone();
        Ok((name, carrier))
    }

    fn finite_ref(&mut self, what: &str) -> Result<(String, SemiringTable)> {
        let at = self.c.at();
        match self.carrier_ref()? {
            (name, Carrier::Finite { table, .. }) => Ok((name, table)),
            (name, Carrier::Naturals) => Err(CliError::syntax(
                at,
                format!("{what} needs a finite semiring, `{name}` is the naturals"),
            )),
        }
    }

    fn element(&mut self, t: &SemiringTable, semiring: &str) -> Result<usize> {
        let (label, at) = self.c.word("an element")?;
        t.element(&label).ok_or(CliError::UnknownElement {
            at,
            label,
            semiring: semiring.to_string(),
        })
    }

    fn semiring(&mut self) -> Result<()> {
        let name = self.new_name()?;
        let carrier = if self.c.eat_word("builtin") {
            let (kind, at) = self.c.word("a builtin kind")?;
            let param = match self.c.peek_word() {
                Some(w) if w != "end" => {
                    let (n, at) = self.c.number("a builtin parameter")?;
                    Some(
                        usize::try_from(n)
                            .map_err(|_| CliError::syntax(at, "parameter too large"))?,
                    )
                }
                _ => None,
            };
            if kind == "naturals" {
                if param.is_some() {
                    return Err(CliError::syntax(at, "builtin naturals takes no parameter"));
                }
                Carrier::Naturals
            } else {
                let b = Builtin::parse(&kind, param)
                    .map_err(|source| CliError::Invalid { at, source })?;
                let table = b
                    .build()
                    .map_err(|source| CliError::Invalid { at, source })?;
                Carrier::Finite {
                    table: table.with_name(name.clone()),
                    builtin: Some(b),
                }
            }
        } else {
            Carrier::Finite {
                table: self.explicit_table(&name)?,
                builtin: None,
            }
        };
        self.c.expect_keyword("end")?;
        self.declare(name, Value::Semiring(carrier));
        Ok(())
    }

    fn explicit_table(&mut self, name: &str) -> Result<SemiringTable> {
        let start = self.c.at();
        self.c.expect_keyword("elements")?;
        let mut labels: Vec<String> = Vec::new();
        while let Some(w) = self.c.peek_word() {
            if KEYWORDS.contains(&w) {
                break;
            }
            let (label, at) = self.c.word("an element label")?;
            if is_reserved(&label) {
                return Err(CliError::syntax(at, format!("`{label}` is reserved")));
            }
            if labels.contains(&label) {
                return Err(CliError::syntax(
                    at,
                    format!("element `{label}` listed twice"),
                ));
            }
            labels.push(label);
        }
        if labels.is_empty() {
            return Err(self.c.unexpected("an element label"));
        }
        let id = |p: &mut Parser, labels: &[String]| -> Result<usize> {
            let (label, at) = p.c.word("an element")?;
            labels
                .iter()
                .position(|l| *l == label)
                .ok_or(CliError::UnknownElement {
                    at,
                    label,
                    semiring: name.to_string(),
                })
        };
        let n = labels.len();
        let mut zero = None;
        let mut one = None;
        let mut tables: [Vec<Option<usize>>; 2] = [vec![None; n * n], vec![None; n * n]];
        loop {
            let at = self.c.at();
            match self.c.peek_word().map(str::to_string).as_deref() {
                Some("zero") => {
                    self.c.next();
                    zero = Some(id(self, &labels)?);
                }
                Some("one") => {
                    self.c.next();
                    one = Some(id(self, &labels)?);
                }
                Some(op @ ("add" | "mul")) => {
                    let k = usize::from(op == "mul");
                    self.c.next();
                    let a = id(self, &labels)?;
                    let b = id(self, &labels)?;
                    self.c.expect_sym('=')?;
                    let v = id(self, &labels)?;
                    match tables[k][a * n + b] {
                        Some(old) if old != v => {
                            return Err(CliError::syntax(
                                at,
                                format!("conflicting entries for {op} {} {}", labels[a], labels[b]),
                            ))
                        }
                        _ => tables[k][a * n + b] = Some(v),
                    }
                }
                _ => break,
            }
        }
        let end = self.c.at();
        let zero =
            zero.ok_or_else(|| CliError::syntax(start, format!("semiring {name} has no `zero`")))?;
        let one =
            one.ok_or_else(|| CliError::syntax(start, format!("semiring {name} has no `one`")))?;
        let mut rows: Vec<Vec<Vec<usize>>> = Vec::new();
        for (k, op) in ["add", "mul"].iter().enumerate() {
            let t = &tables[k];
            let mut table = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    table[a][b] = t[a * n + b].or(t[b * n + a]).ok_or_else(|| {
                        CliError::syntax(
                            end,
                            format!("missing entry {op} {} {}", labels[a], labels[b]),
                        )
                    })?;
                }
            }
            rows.push(table);
        }
        let mul = rows.pop().unwrap();
        let add = rows.pop().unwrap();
        SemiringTable::from_tables(name, labels, add, mul, zero, one)
            .map_err(|source| CliError::Invalid { at: start, source })
    }

    fn congruence(&mut self) -> Result<()> {
        let name = self.new_name()?;
        self.c.expect_keyword("on")?;
        let (on, carrier) = self.carrier_ref()?;
        self.c.expect_sym('=')?;
        let at = self.c.at();
        let value = match carrier {
            Carrier::Naturals => {
                self.c.expect_keyword("mod")?;
                let (m, _) = self.c.number("a modulus")?;
                CongruenceValue::Naturals(NatCongruence::new(m))
            }
            Carrier::Finite { table, .. } => {
                if self.c.eat_word("pairs") {
                    let pairs = self.pair_list(&table, &on)?;
                    let r = PairRelation::from_pairs(table.size(), pairs)
                        .map_err(|source| CliError::Invalid { at, source })?;
                    let g = generated_congruence(&table, &r)
                        .map_err(|source| CliError::Invalid { at, source })?;
                    let closure = Partition::from_equivalence(&r.equivalence_closure())
                        .expect("an equivalence");
                    if closure != *g.partition() {
                        self.notices.push(format!(
                            "notice: {at}: congruence {name}: generation enlarged the pairs to {}",
                            g.display(&table)
                        ));
                    }
                    CongruenceValue::Finite(g)
                } else {
                    let blocks = self.blocks(&table, &on)?;
                    let p = Partition::from_blocks(table.size(), &blocks)
                        .ok_or_else(|| CliError::syntax(at, "an element appears in two classes"))?;
                    let c = Congruence::from_partition(&table, p)
                        .map_err(|source| CliError::Invalid { at, source })?;
                    CongruenceValue::Finite(c)
                }
            }
        };
        self.declare(name, Value::Congruence { on, value });
        Ok(())
    }

    fn pair_list(&mut self, t: &SemiringTable, on: &str) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        loop {
            let a = self.element(t, on)?;
            self.c.expect_sym('~')?;
            let b = self.element(t, on)?;
            out.push((a, b));
            if !self.c.eat_sym(',') {
                return Ok(out);
            }
        }
    }

    /// `{a b}{c}…`; unmentioned elements become singleton classes.
    fn blocks(&mut self, t: &SemiringTable, on: &str) -> Result<Vec<Vec<usize>>> {
        let mut blocks = Vec::new();
        if !self.c.peek_sym('{') {
            return Err(self.c.unexpected("`{`, `pairs` or `mod`"));
        }
        while self.c.eat_sym('{') {
            let mut block = Vec::new();
            while !self.c.eat_sym('}') {
                block.push(self.element(t, on)?);
            }
            blocks.push(block);
        }
        let seen: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        blocks.extend(t.elements().filter(|a| !seen.contains(a)).map(|a| vec![a]));
        Ok(blocks)
    }

    fn ideal(&mut self) -> Result<()> {
        let name = self.new_name()?;
        self.c.expect_keyword("on")?;
        let (on, table) = self.finite_ref("an ideal")?;
        self.c.expect_sym('=')?;
        let at = self.c.at();
        self.c.expect_sym('{')?;
        let mut members = BTreeSet::new();
        while !self.c.eat_sym('}') {
            members.insert(self.element(&table, &on)?);
        }
        let ideal =
            Ideal::new(&table, members).map_err(|source| CliError::Invalid { at, source })?;
        self.declare(name, Value::Ideal { on, ideal });
        Ok(())
    }

    fn vars(&mut self) -> Result<usize> {
        self.c.expect_keyword("vars")?;
        let (n, at) = self.c.number("a variable count")?;
        match usize::try_from(n) {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Arity {
                at,
                msg: format!("variable count must be at least 1, got {n}"),
            }),
        }
    }

    fn variety(&mut self) -> Result<()> {
        let name = self.new_name()?;
        self.c.expect_keyword("on")?;
        let (on, table) = self.finite_ref("a variety")?;
        let n = self.vars()?;
        self.c.expect_sym('=')?;
        let mut points = Vec::new();
        if !self.c.eat_word("none") {
            if !self.c.peek_sym('(') {
                return Err(self.c.unexpected("`(` or `none`"));
            }
            while self.c.peek_sym('(') {
                let at = self.c.at();
                self.c.next();
                let mut p = vec![self.element(&table, &on)?];
                while self.c.eat_sym(',') {
                    p.push(self.element(&table, &on)?);
                }
                self.c.expect_sym(')')?;
                if p.len() != n {
                    return Err(CliError::Arity {
                        at,
                        msg: format!("point has {} coordinates, expected {n}", p.len()),
                    });
                }
                points.push(p);
            }
        }
        let variety = Variety::new(n, points).expect("arity checked");
        self.declare(name, Value::Variety { on, variety });
        Ok(())
    }

    fn system(&mut self) -> Result<()> {
        let name = self.new_name()?;
        self.c.expect_keyword("over")?;
        let over_at = self.c.at();
        let (over, a) = self.carrier_ref()?;
        self.c.expect_keyword("in")?;
        let (within, b) = self.carrier_ref()?;
        let n = self.vars()?;
        self.c.expect_sym('=')?;
        let (text, quote) = self.c.string("a quoted system")?;
        let exprs = parse_pairs(&text, quote)?;
        let system = match (a, b) {
            (Carrier::Naturals, Carrier::Naturals) => {
                let constant = |w: &str, at: Location| -> Result<u64> {
                    w.parse().map_err(|_| CliError::UnknownElement {
                        at,
                        label: w.to_string(),
                        semiring: over.clone(),
                    })
                };
                let mut pairs = Vec::new();
                for (f, g) in &exprs {
                    pairs.push((
                        build(f, &Naturals, n, &constant)?,
                        build(g, &Naturals, n, &constant)?,
                    ));
                }
                SystemValue::Naturals(
                    NatSystem::new(n, pairs)
                        .map_err(|source| CliError::Invalid { at: quote, source })?,
                )
            }
            (Carrier::Finite { table: a, .. }, Carrier::Finite { table: b, .. }) => {
                let ctx = if over == within {
                    EmbeddedSemiring::identity(a.clone())
                } else {
                    EmbeddedSemiring::find(a.clone(), b).map_err(|source| CliError::Invalid {
                        at: over_at,
                        source,
                    })?
                };
                let constant = |w: &str, at: Location| -> Result<usize> {
                    a.element(w).ok_or_else(|| CliError::UnknownElement {
                        at,
                        label: w.to_string(),
                        semiring: over.clone(),
                    })
                };
                let mut pairs = Vec::new();
                for (f, g) in &exprs {
                    pairs.push((build(f, &a, n, &constant)?, build(g, &a, n, &constant)?));
                }
                SystemValue::Finite(Box::new(
                    PairSystem::new(ctx, n, pairs)
                        .map_err(|source| CliError::Invalid { at: quote, source })?,
                ))
            }
            _ => {
                return Err(CliError::syntax(
                    over_at,
                    "a system over the naturals must also live in the naturals",
                ))
            }
        };
        self.declare(
            name,
            Value::System {
                over,
                within,
                system,
            },
        );
        Ok(())
    }
}
