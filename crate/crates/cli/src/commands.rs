use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use semicong::congruence::{
    classify, enumerate_congruences, generated_congruence, generated_congruence_literal,
    ideal_congruence_maps, nil_relations, principal_relation, quotient, radical, radical_alt,
    search_maximal_nonprime, spectrum, witness_chain, zariski_closed, SearchConfig, SpectrumKind,
    DEFAULT_MAX_SIZE,
};
use semicong::geometry::window::{
    window_hom_count, window_nullstellensatz, window_zero_set, NatCongruence, NatSystem,
    WindowNullstellensatzConfig, DEFAULT_WINDOW,
};
use semicong::geometry::{
    closure, hom_count, materialize_topology, nullstellensatz_check, star_union, vanishing,
    zero_set, NullstellensatzConfig, PairSystem, Variety,
};
use semicong::polynomial::{EmbeddedSemiring, FunctionBounds, FunctionSemiring};
use semicong::semiring::{classify_semiring, validate_axioms};
use semicong::{Congruence, Error, PairRelation, SemiringTable};

use crate::error::{CliError, Result};
use crate::script::{
    parse_pair_list, parse_script, print_script, print_table, Carrier, CongruenceValue, Script,
    SystemValue,
};

#[derive(Debug, Parser)]
#[command(
    name = "semicong",
    version,
    about = "Workbench for congruences of finite commutative semirings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a script in normal form.
    Print { script: PathBuf },
    /// Check every semiring axiom on a declared table.
    Axioms { script: PathBuf, semiring: String },
    /// Semidomain, semifield, additive annihilation, additive idempotence.
    ClassifySemiring { script: PathBuf, semiring: String },
    /// List every congruence in canonical order.
    Congruences {
        script: PathBuf,
        semiring: String,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// The congruence generated by a pair list such as "0~2, 1~3", with witness chains.
    Generate {
        script: PathBuf,
        semiring: String,
        pairs: String,
    },
    /// Intersection of two congruences.
    Meet {
        script: PathBuf,
        rho: String,
        sigma: String,
    },
    /// Least congruence containing both.
    Join {
        script: PathBuf,
        rho: String,
        sigma: String,
    },
    /// The radical of a congruence and its additive saturation.
    Radical { script: PathBuf, congruence: String },
    /// Nilpotent relations of a semiring.
    Nil { script: PathBuf, semiring: String },
    /// Primality, maximality and radical flags of a congruence.
    Classify { script: PathBuf, congruence: String },
    /// Congruences of one kind.
    Spectrum {
        script: PathBuf,
        semiring: String,
        #[arg(long, default_value = "prime")]
        kind: SpectrumKind,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// The prime congruences containing a congruence.
    Vco {
        script: PathBuf,
        congruence: String,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// The Zariski closed subsets of the prime spectrum.
    TopologySpec {
        script: PathBuf,
        semiring: String,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// The quotient semiring, printed as a script block.
    Quotient { script: PathBuf, congruence: String },
    /// The congruence of an ideal and the ideal of a congruence.
    IdealMaps {
        script: PathBuf,
        ideal: String,
        congruence: String,
    },
    /// The principal relation of a pair and the congruences around it.
    Principal {
        script: PathBuf,
        semiring: String,
        a: String,
        b: String,
    },
    /// The zero set of a system.
    Variety {
        script: PathBuf,
        system: String,
        #[command(flatten)]
        geo: GeometryArgs,
    },
    /// The closure of a set of points.
    Closure {
        script: PathBuf,
        variety: String,
        #[command(flatten)]
        fun: FunctionArgs,
    },
    /// Irreducibility of a set of points.
    Irreducible {
        script: PathBuf,
        variety: String,
        #[command(flatten)]
        fun: FunctionArgs,
    },
    /// The congruence of functions vanishing on a set of points.
    Vanishing {
        script: PathBuf,
        variety: String,
        #[command(flatten)]
        fun: FunctionArgs,
        /// Report membership of each pair of this system.
        #[arg(long)]
        system: Option<String>,
    },
    /// Zero set of the twisted product of two systems against the union of their zero sets.
    StarUnion {
        script: PathBuf,
        first: String,
        second: String,
        #[arg(long)]
        rho: Option<String>,
    },
    /// Compare the radical side with the vanishing side on capped polynomials.
    Nullstellensatz {
        script: PathBuf,
        system: String,
        #[command(flatten)]
        geo: GeometryArgs,
        #[arg(long)]
        degree_cap: Option<u32>,
    },
    /// Count points up to the congruence and algebra maps into the quotient.
    HomCount {
        script: PathBuf,
        system: String,
        #[command(flatten)]
        geo: GeometryArgs,
    },
    /// Seeded random searches.
    Search {
        #[command(subcommand)]
        what: Search,
    },
}

#[derive(Debug, Subcommand)]
pub enum Search {
    /// Look for maximal congruences that are not prime.
    MaximalNonprime {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct GeometryArgs {
    /// Congruence on the target semiring (identity by default).
    #[arg(long)]
    pub rho: Option<String>,
    /// Window bound for systems over the naturals.
    #[arg(long)]
    pub window: Option<u64>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct FunctionArgs {
    /// Congruence on the target semiring (identity by default).
    #[arg(long)]
    pub rho: Option<String>,
    /// Coefficient semiring, embedded in the target (the target by default).
    #[arg(long)]
    pub over: Option<String>,
}

trait Context<T> {
    fn ctx(self, command: &'static str) -> Result<T>;
}

impl<T> Context<T> for std::result::Result<T, Error> {
    fn ctx(self, command: &'static str) -> Result<T> {
        self.map_err(|source| CliError::Domain { command, source })
    }
}

fn load(path: &PathBuf) -> Result<Script> {
    let text = std::fs::read_to_string(path)?;
    let parsed = parse_script(&text)?;
    for n in &parsed.notices {
        eprintln!("{n}");
    }
    Ok(parsed.script)
}

fn table<'a>(s: &'a Script, name: &str, command: &'static str) -> Result<&'a SemiringTable> {
    match s.carrier(name)? {
        Carrier::Finite { table, .. } => Ok(table),
        Carrier::Naturals => Err(CliError::Domain {
            command,
            source: Error::Window(format!(
                "`{name}` is the naturals; only window-mode systems accept it"
            )),
        }),
    }
}

fn valid_table<'a>(s: &'a Script, name: &str, command: &'static str) -> Result<&'a SemiringTable> {
    let t = table(s, name, command)?;
    t.require_valid().ctx(command)?;
    Ok(t)
}

/// A finite congruence with the semiring it lives on.
fn congruence<'a>(
    s: &'a Script,
    name: &str,
    command: &'static str,
) -> Result<(&'a str, &'a SemiringTable, &'a Congruence)> {
    let (on, value) = s.congruence(name)?;
    let t = valid_table(s, on, command)?;
    match value {
        CongruenceValue::Finite(c) => Ok((on, t, c)),
        CongruenceValue::Naturals(_) => unreachable!("a finite carrier holds finite congruences"),
    }
}

fn element(t: &SemiringTable, semiring: &str, label: &str) -> Result<usize> {
    t.element(label)
        .ok_or_else(|| CliError::Usage(format!("`{label}` is not an element of {semiring}")))
}

/// `--rho` on `within`, or the identity.
fn rho_on(
    s: &Script,
    rho: &Option<String>,
    within: &str,
    size: usize,
    command: &'static str,
) -> Result<Congruence> {
    match rho {
        None => Ok(Congruence::identity(size)),
        Some(name) => {
            let (on, _, c) = congruence(s, name, command)?;
            if on != within {
                return Err(CliError::Usage(format!(
                    "`{name}` is a congruence on {on}, expected one on {within}"
                )));
            }
            Ok(c.clone())
        }
    }
}

fn nat_rho(s: &Script, rho: &Option<String>, within: &str) -> Result<NatCongruence> {
    match rho {
        None => Ok(NatCongruence::identity()),
        Some(name) => match s.congruence(name)? {
            (on, CongruenceValue::Naturals(m)) if on == within => Ok(*m),
            (on, _) => Err(CliError::Usage(format!(
                "`{name}` is a congruence on {on}, expected one on {within}"
            ))),
        },
    }
}

enum System<'a> {
    Finite { within: &'a str, t: &'a PairSystem },
    Naturals { within: &'a str, t: &'a NatSystem },
}

fn system<'a>(s: &'a Script, name: &str, command: &'static str) -> Result<System<'a>> {
    let (over, within, value) = s.system(name)?;
    Ok(match value {
        SystemValue::Finite(t) => {
            valid_table(s, over, command)?;
            valid_table(s, within, command)?;
            System::Finite { within, t }
        }
        SystemValue::Naturals(t) => System::Naturals { within, t },
    })
}

fn no_window(window: Option<u64>) -> Result<()> {
    match window {
        Some(_) => Err(CliError::Usage(
            "--window applies only to systems over the naturals".into(),
        )),
        None => Ok(()),
    }
}

fn function_space(
    s: &Script,
    within: &str,
    fun: &FunctionArgs,
    num_vars: usize,
    command: &'static str,
) -> Result<FunctionSemiring> {
    let b = valid_table(s, within, command)?;
    let ctx = match &fun.over {
        None => EmbeddedSemiring::identity(b.clone()),
        Some(a) if a == within => EmbeddedSemiring::identity(b.clone()),
        Some(a) => {
            EmbeddedSemiring::find(valid_table(s, a, command)?.clone(), b.clone()).ctx(command)?
        }
    };
    FunctionSemiring::new(&ctx, num_vars, FunctionBounds::default()).ctx(command)
}

fn points_lines(b: &SemiringTable, y: &Variety, out: &mut Vec<String>) {
    out.extend(y.display(b).lines().map(str::to_string));
}

fn points_inline(b: &SemiringTable, y: &Variety) -> String {
    if y.is_empty() {
        return "none".into();
    }
    y.display(b).lines().collect::<Vec<_>>().join(" ")
}

fn flag(key: &str, v: bool) -> String {
    format!("{key}={v}")
}

/// Runs one subcommand and returns its stdout.
pub fn run(command: &Command) -> Result<String> {
    let lines = dispatch(command)?;
    let mut out = lines.join("\n");
    if !out.is_empty() && !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn dispatch(command: &Command) -> Result<Vec<String>> {
    match command {
        Command::Print { script } => Ok(vec![print_script(&load(script)?)]),
        Command::Axioms { script, semiring } => {
            let s = load(script)?;
            let t = table(&s, semiring, "axioms")?;
            let report = validate_axioms(t);
            let mut out = vec![flag("passed", report.passed)];
            for v in &report.violations {
                let w: Vec<&str> = v.witness.iter().map(|&a| t.label(a)).collect();
                out.push(format!(
                    "violation {} witness={}",
                    v.axiom.name(),
                    w.join(" ")
                ));
            }
            Ok(out)
        }
        Command::ClassifySemiring { script, semiring } => {
            let s = load(script)?;
            let f = classify_semiring(valid_table(&s, semiring, "classify-semiring")?);
            Ok(vec![
                flag("semidomain", f.semidomain),
                flag("semifield", f.semifield),
                flag("additive_annihilation", f.additive_annihilation),
                flag("additively_idempotent", f.additively_idempotent),
            ])
        }
        Command::Congruences {
            script,
            semiring,
            max_size,
        } => {
            let s = load(script)?;
            let t = valid_table(&s, semiring, "congruences")?;
            let all = enumerate_congruences(t, *max_size).ctx("congruences")?;
            let mut out = vec![format!("count={}", all.len())];
            out.extend(all.iter().map(|c| c.display(t)));
            Ok(out)
        }
        Command::Generate {
            script,
            semiring,
            pairs,
        } => generate(&load(script)?, semiring, pairs),
        Command::Meet { script, rho, sigma } | Command::Join { script, rho, sigma } => {
            let is_meet = matches!(command, Command::Meet { .. });
            let name = if is_meet { "meet" } else { "join" };
            let s = load(script)?;
            let (on, t, r) = congruence(&s, rho, name)?;
            let (on2, _, g) = congruence(&s, sigma, name)?;
            if on != on2 {
                return Err(CliError::Usage(format!(
                    "`{rho}` lives on {on} but `{sigma}` on {on2}"
                )));
            }
            if is_meet {
                Ok(vec![format!("meet={}", r.meet(g).ctx(name)?.display(t))])
            } else {
                let j = r.join(t, g).ctx(name)?;
                let agrees = j == r.join_generated(t, g).ctx(name)?;
                Ok(vec![
                    format!("join={}", j.display(t)),
                    flag("generated_agrees", agrees),
                ])
            }
        }
        Command::Radical {
            script,
            congruence: name,
        } => {
            let s = load(script)?;
            let (_, t, r) = congruence(&s, name, "radical")?;
            let root = radical(t, r).ctx("radical")?;
            let plus = r.plus_saturate(t).ctx("radical")?;
            let alt = radical_alt(t, r).ctx("radical")?;
            Ok(vec![
                format!("rho={}", r.display(t)),
                format!("radical={}", root.display(t)),
                format!("plus={}", plus.display(t)),
                flag("radical_alt_agrees", alt == root),
            ])
        }
        Command::Nil { script, semiring } => {
            let s = load(script)?;
            let t = valid_table(&s, semiring, "nil")?;
            let n = nil_relations(t).ctx("nil")?;
            let pairs: Vec<String> = n
                .r_nil
                .pairs()
                .filter(|p| p.left != p.right)
                .map(|p| format!("{}~{}", t.label(p.left), t.label(p.right)))
                .collect();
            Ok(vec![
                format!(
                    "r_nil={}",
                    if pairs.is_empty() {
                        "id".into()
                    } else {
                        pairs.join(", ")
                    }
                ),
                format!("rho_nil={}", n.rho_nil.display(t)),
                format!("generated={}", n.generated.display(t)),
                flag("reduced", n.reduced),
                flag("strongly_reduced", n.strongly_reduced),
            ])
        }
        Command::Classify {
            script,
            congruence: name,
        } => {
            let s = load(script)?;
            let (_, t, r) = congruence(&s, name, "classify")?;
            let c = classify(t, r).ctx("classify")?;
            let mut out = vec![format!("congruence={}", r.display(t))];
            out.extend(c.flags().iter().map(|(k, v)| flag(k, *v)));
            Ok(out)
        }
        Command::Spectrum {
            script,
            semiring,
            kind,
            max_size,
        } => {
            let s = load(script)?;
            let t = valid_table(&s, semiring, "spectrum")?;
            let spec = spectrum(t, *kind, *max_size).ctx("spectrum")?;
            let mut out = vec![format!("kind={kind} count={}", spec.len())];
            out.extend(spec.iter().map(|c| c.display(t)));
            Ok(out)
        }
        Command::Vco {
            script,
            congruence: name,
            max_size,
        } => {
            let s = load(script)?;
            let (_, t, r) = congruence(&s, name, "vco")?;
            let v = zariski_closed(t, r, *max_size).ctx("vco")?;
            let mut out = vec![format!("count={}", v.len())];
            out.extend(v.iter().map(|c| c.display(t)));
            Ok(out)
        }
        Command::TopologySpec {
            script,
            semiring,
            max_size,
        } => topology_spec(&load(script)?, semiring, *max_size),
        Command::Quotient {
            script,
            congruence: name,
        } => {
            let s = load(script)?;
            let (on, t, r) = congruence(&s, name, "quotient")?;
            let (q, proj) = quotient(t, r).ctx("quotient")?;
            let map: Vec<String> = t
                .elements()
                .map(|a| format!("{}:{}", t.label(a), q.label(proj[a])))
                .collect();
            Ok(vec![
                print_table(&format!("{on}_mod_{name}"), &q)
                    .trim_end()
                    .to_string(),
                format!("# projection {}", map.join(" ")),
            ])
        }
        Command::IdealMaps {
            script,
            ideal,
            congruence: name,
        } => {
            let s = load(script)?;
            let (on, j) = s.ideal(ideal)?;
            let (on2, t, sigma) = congruence(&s, name, "ideal-maps")?;
            if on != on2 {
                return Err(CliError::Usage(format!(
                    "`{ideal}` lives on {on} but `{name}` on {on2}"
                )));
            }
            let (rho_j, i_sigma) = ideal_congruence_maps(t, j, sigma).ctx("ideal-maps")?;
            let (rho_i_sigma, i_rho_j) =
                ideal_congruence_maps(t, &i_sigma, &rho_j).ctx("ideal-maps")?;
            let set = |i: &semicong::semiring::Ideal| {
                let m: Vec<&str> = i.members().iter().map(|&a| t.label(a)).collect();
                format!("{{{}}}", m.join(" "))
            };
            Ok(vec![
                format!("rho_J={}", rho_j.display(t)),
                format!("I_sigma={}", set(&i_sigma)),
                format!("I_rho_J={}", set(&i_rho_j)),
                format!("rho_I_sigma={}", rho_i_sigma.display(t)),
                flag("J_within_I_rho_J", j.is_subset(&i_rho_j)),
                flag("rho_I_sigma_within_sigma", rho_i_sigma.is_subset(sigma)),
            ])
        }
        Command::Principal {
            script,
            semiring,
            a,
            b,
        } => {
            let s = load(script)?;
            let t = valid_table(&s, semiring, "principal")?;
            let (x, y) = (element(t, semiring, a)?, element(t, semiring, b)?);
            let (r, plus) = principal_relation(t, x, y).ctx("principal")?;
            let single = PairRelation::from_pairs(t.size(), [(x, y)]).ctx("principal")?;
            let generated = generated_congruence(t, &single).ctx("principal")?;
            let generated_plus = generated.plus_saturate(t).ctx("principal")?;
            Ok(vec![
                format!("relation_pairs={}", r.len()),
                format!("generated={}", generated.display(t)),
                format!("relation_plus={}", plus.display(t)),
                format!("generated_plus={}", generated_plus.display(t)),
                flag(
                    "relation_within_generated",
                    r.is_subset(&generated.to_relation()),
                ),
                flag("generated_within_relation_plus", generated.is_subset(&plus)),
                flag(
                    "relation_plus_within_generated_plus",
                    plus.is_subset(&generated_plus),
                ),
            ])
        }
        Command::Variety {
            script,
            system: name,
            geo,
        } => {
            let s = load(script)?;
            match system(&s, name, "variety")? {
                System::Finite { within, t } => {
                    no_window(geo.window)?;
                    let b = t.ctx().target();
                    let rho = rho_on(&s, &geo.rho, within, b.size(), "variety")?;
                    let z = zero_set(t, &rho).ctx("variety")?;
                    let mut out = vec![format!("points={}", z.len())];
                    points_lines(b, &z, &mut out);
                    Ok(out)
                }
                System::Naturals { within, t } => {
                    let rho = nat_rho(&s, &geo.rho, within)?;
                    let window = geo.window.unwrap_or(DEFAULT_WINDOW);
                    let z = window_zero_set(t, &rho, window).ctx("variety")?;
                    let mut out = vec![format!("points={}", z.len())];
                    for p in &z {
                        let c: Vec<String> = p.iter().map(u64::to_string).collect();
                        out.push(format!("({})", c.join(", ")));
                    }
                    out.push(format!("verified for all values <= {window}"));
                    Ok(out)
                }
            }
        }
        Command::Closure {
            script,
            variety,
            fun,
        } => {
            let s = load(script)?;
            let (within, y) = s.variety(variety)?;
            let fs = function_space(&s, within, fun, y.num_vars(), "closure")?;
            let b = fs.target();
            let rho = rho_on(&s, &fun.rho, within, b.size(), "closure")?;
            let cl = closure(&fs, y, &rho).ctx("closure")?;
            let prime = classify(b, &rho).ctx("closure")?.prime;
            let mut out = vec![
                flag("rho_prime", prime),
                flag("closed", cl == *y),
                format!("points={}", cl.len()),
            ];
            points_lines(b, &cl, &mut out);
            Ok(out)
        }
        Command::Irreducible {
            script,
            variety,
            fun,
        } => {
            let s = load(script)?;
            let (within, y) = s.variety(variety)?;
            let fs = function_space(&s, within, fun, y.num_vars(), "irreducible")?;
            let rho = rho_on(&s, &fun.rho, within, fs.target().size(), "irreducible")?;
            let top = materialize_topology(&fs, &rho).ctx("irreducible")?;
            let v = vanishing(&fs, y, &rho).ctx("irreducible")?;
            Ok(vec![
                flag("irreducible", top.is_irreducible(y)),
                flag("vanishing_prime", v.is_prime(&fs, &rho).ctx("irreducible")?),
            ])
        }
        Command::Vanishing {
            script,
            variety,
            fun,
            system: sys,
        } => {
            let s = load(script)?;
            let (within, y) = s.variety(variety)?;
            let fs = function_space(&s, within, fun, y.num_vars(), "vanishing")?;
            let rho = rho_on(&s, &fun.rho, within, fs.target().size(), "vanishing")?;
            let v = vanishing(&fs, y, &rho).ctx("vanishing")?;
            let prime = match v.is_prime(&fs, &rho) {
                Ok(p) => p.to_string(),
                Err(e @ Error::BoundExceeded { .. }) => {
                    eprintln!("vanishing: primality not decided: {e}");
                    "unknown".into()
                }
                Err(e) => return Err(e).ctx("vanishing"),
            };
            let mut out = vec![
                format!("functions={}", fs.len()),
                format!("classes={}", v.num_classes()),
                format!("prime={prime}"),
            ];
            if let Some(name) = sys {
                let System::Finite { t, .. } = system(&s, name, "vanishing")? else {
                    return Err(CliError::Usage(format!(
                        "`{name}` is a system over the naturals"
                    )));
                };
                let a = t.ctx().coeff();
                if t.ctx() != fs.ctx() || t.num_vars() != fs.arity() {
                    return Err(CliError::Usage(format!(
                        "`{name}` does not live in the function semiring of `{variety}`"
                    )));
                }
                for (f, g) in t.pairs() {
                    let member = v.contains(&fs, f, g).ctx("vanishing")?;
                    out.push(format!(
                        "member {} = {}: {member}",
                        f.display(a),
                        g.display(a)
                    ));
                }
            }
            Ok(out)
        }
        Command::StarUnion {
            script,
            first,
            second,
            rho,
        } => {
            let s = load(script)?;
            let (System::Finite { within, t: t1 }, System::Finite { within: w2, t: t2 }) = (
                system(&s, first, "star-union")?,
                system(&s, second, "star-union")?,
            ) else {
                return Err(CliError::Usage(
                    "star-union needs two finite systems".into(),
                ));
            };
            if within != w2 || t1.ctx() != t2.ctx() {
                return Err(CliError::Usage(format!(
                    "`{first}` and `{second}` live in different semirings"
                )));
            }
            let b = t1.ctx().target();
            let rho = rho_on(&s, rho, within, b.size(), "star-union")?;
            let r = star_union(t1, t2, &rho).ctx("star-union")?;
            Ok(vec![
                flag("rho_prime", r.rho_prime),
                flag("equal", r.equal()),
                format!("direct={}", points_inline(b, &r.direct)),
                format!("union={}", points_inline(b, &r.union)),
            ])
        }
        Command::Nullstellensatz {
            script,
            system: name,
            geo,
            degree_cap,
        } => {
            let s = load(script)?;
            match system(&s, name, "nullstellensatz")? {
                System::Finite { within, t } => {
                    no_window(geo.window)?;
                    let b = t.ctx().target();
                    let rho = rho_on(&s, &geo.rho, within, b.size(), "nullstellensatz")?;
                    let fs =
                        FunctionSemiring::new(t.ctx(), t.num_vars(), FunctionBounds::default())
                            .ctx("nullstellensatz")?;
                    let mut cfg = NullstellensatzConfig::default();
                    if let Some(d) = degree_cap {
                        cfg.degree_cap = *d;
                    }
                    let report =
                        nullstellensatz_check(&fs, t, &rho, &cfg).ctx("nullstellensatz")?;
                    Ok(report.lines(t.ctx().coeff()))
                }
                System::Naturals { within, t } => {
                    let rho = nat_rho(&s, &geo.rho, within)?;
                    let mut cfg = WindowNullstellensatzConfig::default();
                    if let Some(w) = geo.window {
                        cfg.window = w;
                    }
                    if let Some(d) = degree_cap {
                        cfg.degree_cap = *d;
                    }
                    Ok(window_nullstellensatz(t, &rho, &cfg)
                        .ctx("nullstellensatz")?
                        .lines())
                }
            }
        }
        Command::HomCount {
            script,
            system: name,
            geo,
        } => {
            let s = load(script)?;
            match system(&s, name, "hom-count")? {
                System::Finite { within, t } => {
                    no_window(geo.window)?;
                    let rho = rho_on(&s, &geo.rho, within, t.ctx().target().size(), "hom-count")?;
                    let h = hom_count(t, &rho).ctx("hom-count")?;
                    Ok(vec![
                        format!("points={} homs={}", h.points, h.homs),
                        flag("agree", h.agree()),
                    ])
                }
                System::Naturals { within, t } => {
                    let rho = nat_rho(&s, &geo.rho, within)?;
                    let window = geo.window.unwrap_or(DEFAULT_WINDOW);
                    let h = window_hom_count(t, &rho, window).ctx("hom-count")?;
                    let mut out = vec![h.line()];
                    if !h.complete {
                        out.push(format!(
                            "warning window {window} misses some residues mod {}",
                            rho.modulus()
                        ));
                    }
                    Ok(out)
                }
            }
        }
        Command::Search {
            what:
                Search::MaximalNonprime {
                    seed,
                    count,
                    max_size,
                },
        } => {
            let report = search_maximal_nonprime(&SearchConfig::new(*seed, *count, *max_size))
                .ctx("search")?;
            Ok(report.lines())
        }
    }
}

fn generate(s: &Script, semiring: &str, pairs: &str) -> Result<Vec<String>> {
    let t = valid_table(s, semiring, "generate")?;
    let r =
        PairRelation::from_pairs(t.size(), parse_pair_list(pairs, t, semiring)?).ctx("generate")?;
    let g = generated_congruence(t, &r).ctx("generate")?;
    let literal = generated_congruence_literal(t, &r).ctx("generate")?;
    let mut out = vec![
        format!("congruence={}", g.display(t)),
        flag("literal_agrees", g == literal),
    ];
    for class in g.classes() {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                let chain = witness_chain(t, &r, a, b)
                    .ctx("generate")?
                    .expect("pair lies in the generated congruence");
                let mut line = format!("chain {}~{}: {}", t.label(a), t.label(b), t.label(a));
                for link in &chain.links {
                    let arrow = if link.forward { "->" } else { "<-" };
                    line.push_str(&format!(" {arrow} {}", t.label(link.to)));
                }
                out.push(line);
            }
        }
    }
    Ok(out)
}

fn topology_spec(s: &Script, semiring: &str, max_size: usize) -> Result<Vec<String>> {
    let t = valid_table(s, semiring, "topology-spec")?;
    let primes = spectrum(t, SpectrumKind::Prime, max_size).ctx("topology-spec")?;
    let closed: BTreeSet<Vec<usize>> = enumerate_congruences(t, max_size)
        .ctx("topology-spec")?
        .iter()
        .map(|sigma| {
            (0..primes.len())
                .filter(|&i| sigma.is_subset(&primes[i]))
                .collect()
        })
        .collect();
    let mut sets: Vec<Vec<usize>> = closed.iter().cloned().collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let as_set = |v: &[usize]| -> BTreeSet<usize> { v.iter().copied().collect() };
    let is_closed = |x: BTreeSet<usize>| closed.contains(&x.into_iter().collect::<Vec<_>>());
    let mut unions = true;
    let mut intersections = true;
    for x in &sets {
        for y in &sets {
            unions &= is_closed(as_set(x).union(&as_set(y)).copied().collect());
            intersections &= is_closed(as_set(x).intersection(&as_set(y)).copied().collect());
        }
    }
    let mut out = vec![format!("points={}", primes.len())];
    out.extend(
        primes
            .iter()
            .enumerate()
            .map(|(i, p)| format!("p{i} {}", p.display(t))),
    );
    out.push(format!("closed_sets={}", sets.len()));
    for set in &sets {
        let names: Vec<String> = set.iter().map(|i| format!("p{i}")).collect();
        out.push(format!("closed {{{}}}", names.join(" ")));
    }
    out.push(flag("union_closed", unions));
    out.push(flag("intersection_closed", intersections));
    Ok(out)
}
