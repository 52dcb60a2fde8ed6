//! Command definitions and dispatch onto the kernel.

use std::collections::BTreeSet;

use clap::{Args, Subcommand, ValueEnum};
use iterhopf::arith::{
    dim_bound, preset_borel, preset_cyclotomic, preset_q, unramified_certificate, Place, Verdict,
};
use iterhopf::ideal::{collect_letters, relation_ideal_member};
use iterhopf::iterint::{
    antipode, cobracket, coproduct, delta_m, normalize, path_compose, reduced_coproduct, reverse,
    shuffle_product, word_lc,
};
use iterhopf::numeric::{li_value, shuffle_check, shuffle_residual, stuffle_check, stuffle_residual};
use iterhopf::path::{coproduct_pairing_check, TruncAut};
use iterhopf::polylog::{depth, depth2_cobracket, dihedral_kernel, word_to_li, LiSym, ZetaMode, ZetaSym};
use iterhopf::series::{series_coproduct_marked, series_coproduct_raw, series_coproduct_special, TensorSeries};
use iterhopf::tree::{enumerate_trees, omega, tree_map_lc};
use iterhopf::{Dec, Error, IterWord, LinComb, Wedge2, Q};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::emit::{self, Format, Output};
use crate::parse::{parse, parse_dec, parse_decs, ExprAst, Factor, Sign, SyntaxError};

/// Largest weight accepted by commands whose output grows exponentially.
pub const MAX_WEIGHT: usize = 10;

/// Errors surfaced by the CLI: syntax errors exit with 2, domain errors with 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Syntax(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Motivic,
    FormalZeta1,
}

impl From<Mode> for ZetaMode {
    fn from(m: Mode) -> ZetaMode {
        match m {
            Mode::Motivic => ZetaMode::Motivic,
            Mode::FormalZeta1 => ZetaMode::FormalZeta1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Raw,
    Marked,
    Special,
}

/// Flags shared by every command.
#[derive(Clone, Debug, Args)]
pub struct Options {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation degree for series and automorphism oracles.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Treatment of depth-one zetas.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Motivic)]
    pub mode: Mode,
    /// Seed for randomized oracles.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Weight guard for ideal membership.
    #[arg(long, global = true)]
    pub max_weight: Option<usize>,
    /// Comma-separated alphabet for ideal membership and automorphism oracles.
    #[arg(long, global = true, value_delimiter = ',')]
    pub alphabet: Vec<String>,
    /// Dimension preset: `Q`, `borel:r1,r2,u` or `cyc:N`.
    #[arg(long, global = true, default_value = "Q")]
    pub preset: String,
    /// Primes of interest for `ramified`; all primes when absent.
    #[arg(long, global = true, value_delimiter = ',')]
    pub prime: Vec<BigInt>,
    /// Tolerance for numeric commands.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Generating-series formula for `series-coproduct`.
    #[arg(long, global = true, value_enum, default_value_t = Variant::Marked)]
    pub variant: Variant,
}

#[derive(Clone, Debug, Subcommand)]
#[command(rename_all = "kebab-case")]
pub enum Command {
    /// Full coproduct of an expression.
    Coproduct { expr: String },
    /// Coproduct minus the primitive part.
    Reduced { expr: String },
    /// Cobracket on indecomposables.
    Cobracket { expr: String },
    /// Iterated coproduct of a single word.
    Deltam { word: String },
    /// Shuffle product of two words with common endpoints.
    Shuffle { u: String, v: String },
    /// Path composition of a word through a point.
    ComposePath { word: String, point: String },
    /// Path reversal of a word.
    Reverse { word: String },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// Unit and loop relations.
    Normalize { expr: String },
    /// Tree map of an expression.
    Treemap { expr: String },
    /// Plane trees with the given arc decorations.
    Trees { decs: String },
    /// Sum over trees and linear extensions of vertex functions.
    Omega { decs: String },
    /// Coproduct of the generating series on the given decorations.
    SeriesCoproduct { decs: String },
    /// Depth of an expression.
    Depth { expr: String },
    /// Cobracket of a depth-two polylogarithm value.
    Depth2Cobracket { m: u32, n: u32, a: String, b: String },
    /// Cobracket of a multiple zeta value of depth at most two.
    ZetaDelta {
        #[arg(required = true)]
        ns: Vec<u32>,
    },
    /// Dihedral relations against the double zeta cobracket kernel.
    DihedralKernel { weight: u32 },
    /// Unramified certificate for an alphabet.
    Ramified { decs: String },
    /// Graded dimension bound of a tensor algebra preset.
    Dimbound { n: usize },
    /// Numeric value of a polylogarithm expression.
    #[command(allow_negative_numbers = true)]
    Eval { expr: String },
    /// Numeric stuffle identity for `Li_n(x) Li_m(y)`.
    #[command(allow_negative_numbers = true)]
    StuffleCheck { n: u32, m: u32, x: f64, y: f64 },
    /// Numeric shuffle identity for two polylogarithms.
    ShuffleCheck { u: String, v: String },
    /// Membership in the relation ideal.
    IdealMember { expr: String },
    /// Group-law pairing oracle against random automorphisms.
    AutOracle { word: String },
}

/// Evaluates an expression into the word algebra.
pub fn to_lincomb(e: &ExprAst) -> CliResult<LinComb> {
    let mut out = LinComb::zero();
    for (sign, t) in &e.terms {
        let mut prod = LinComb::scalar(t.coeff.clone().unwrap_or_else(|| Q::from_integer(1.into())));
        for f in &t.factors {
            prod = prod.mul(&factor_lincomb(f)?);
        }
        match sign {
            Sign::Plus => out.add_assign(&prod),
            Sign::Minus => out.sub_assign(&prod),
        }
    }
    Ok(out)
}

fn factor_lincomb(f: &Factor) -> CliResult<LinComb> {
    Ok(match f {
        Factor::Word { a0, letters, a_end } => word_lc(&IterWord::new(a0.clone(), letters.clone(), a_end.clone())),
        Factor::Li { ns, xs } => LiSym::new(ns.clone(), xs.clone())?.to_lc()?,
        Factor::Zeta(ns) => word_lc(&ZetaSym { ns: ns.clone() }.to_word()),
        Factor::Paren(e) => to_lincomb(e)?,
    })
}

fn expr(s: &str) -> CliResult<LinComb> {
    to_lincomb(&parse(s)?)
}

fn guarded_expr(s: &str) -> CliResult<LinComb> {
    let x = expr(s)?;
    if x.max_weight() > MAX_WEIGHT {
        return Err(Error::InstanceTooLarge(format!("weight {} exceeds {}", x.max_weight(), MAX_WEIGHT)).into());
    }
    Ok(x)
}

/// A single word, written as `I(...)` or `zeta(...)`.
fn word(s: &str) -> CliResult<IterWord> {
    match parse(s)?.as_factor() {
        Some(Factor::Word { a0, letters, a_end }) => Ok(IterWord::new(a0.clone(), letters.clone(), a_end.clone())),
        Some(Factor::Zeta(ns)) => Ok(ZetaSym { ns: ns.clone() }.to_word()),
        _ => Err(Error::InvalidArgument(format!("'{}' is not a single word I(...)", s)).into()),
    }
}

/// A single polylogarithm, written as `Li[...](...)` or as a word from 0 to 1.
fn li(s: &str) -> CliResult<(i64, LiSym)> {
    match parse(s)?.as_factor() {
        Some(Factor::Li { ns, xs }) => Ok((1, LiSym::new(ns.clone(), xs.clone())?)),
        Some(Factor::Word { a0, letters, a_end }) => {
            Ok(word_to_li(&IterWord::new(a0.clone(), letters.clone(), a_end.clone()))?)
        }
        _ => Err(Error::InvalidArgument(format!("'{}' is not a single polylogarithm", s)).into()),
    }
}

fn rational_args(xs: &[Dec]) -> CliResult<Vec<f64>> {
    xs.iter()
        .map(|x| {
            x.as_rat()
                .map(iterhopf::dec::to_f64)
                .ok_or_else(|| Error::InvalidArgument(format!("numeric evaluation needs rational arguments, got {}", x)).into())
        })
        .collect()
}

/// Value and absolute error bound.
fn eval_expr(e: &ExprAst, tol: f64) -> CliResult<(f64, f64)> {
    let (mut v, mut err) = (0.0f64, 0.0f64);
    for (sign, t) in &e.terms {
        let c = t.coeff.as_ref().map(iterhopf::dec::to_f64).unwrap_or(1.0);
        let (mut pv, mut pe) = (c, 0.0f64);
        for f in &t.factors {
            let (fv, fe) = eval_factor(f, tol)?;
            pe = pv.abs() * fe + fv.abs() * pe + pe * fe;
            pv *= fv;
        }
        v += if *sign == Sign::Minus { -pv } else { pv };
        err += pe;
    }
    Ok((v, err))
}

fn eval_factor(f: &Factor, tol: f64) -> CliResult<(f64, f64)> {
    let value = |sign: i64, li: &LiSym| -> CliResult<(f64, f64)> {
        let r = li_value(&li.ns, &rational_args(&li.xs)?, tol)?;
        Ok((sign as f64 * r.value, r.error_bound))
    };
    match f {
        Factor::Li { ns, xs } => value(1, &LiSym::new(ns.clone(), xs.clone())?),
        Factor::Word { a0, letters, a_end } => {
            let (sign, l) = word_to_li(&IterWord::new(a0.clone(), letters.clone(), a_end.clone()))?;
            value(sign, &l)
        }
        Factor::Zeta(ns) => value(1, &LiSym::new(ns.clone(), vec![Dec::one(); ns.len()])?),
        Factor::Paren(e) => eval_expr(e, tol),
    }
}

fn preset(name: &str, n: usize) -> CliResult<Vec<u64>> {
    let bad = || Error::InvalidArgument(format!("unknown preset '{}'; use Q, borel:r1,r2,u or cyc:N", name));
    if name == "Q" {
        return Ok(preset_q(n));
    }
    if let Some(rest) = name.strip_prefix("borel:") {
        let v: Vec<u64> = rest.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
        return match v.as_slice() {
            [r1, r2, u] => Ok(preset_borel(*r1, *r2, *u, n)),
            _ => Err(bad().into()),
        };
    }
    if let Some(rest) = name.strip_prefix("cyc:") {
        let big_n: u32 = rest.trim().parse().map_err(|_| bad())?;
        return Ok(preset_cyclotomic(big_n, n)?);
    }
    Err(bad().into())
}

fn series_output(s: &TensorSeries) -> Output {
    let items = s
        .terms()
        .map(|(e, t)| {
            let ex: Vec<String> = e.iter().map(|k| k.to_string()).collect();
            let body = emit::tensor(t);
            let mono_latex: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("t_{{{}}}", i) } else { format!("t_{{{}}}^{{{}}}", i, k) })
                .collect();
            let mono_latex = if mono_latex.is_empty() { "1".to_string() } else { mono_latex.join(" ") };
            Output {
                text: format!("[{}]: {}", ex.join(","), body.text),
                latex: format!("{}: {}", mono_latex, body.latex),
                json: json!({ "exponents": e, "tensor": body.json }),
            }
        })
        .collect();
    Output::lines(items)
}

fn bool_output(b: bool) -> Output {
    Output::plain(b.to_string(), Value::Bool(b))
}

fn check_output(holds: bool, residual: f64) -> Output {
    Output::plain(format!("{} (residual {:e})", holds, residual), json!({ "holds": holds, "residual": residual }))
}

fn size_guard(what: &str, n: usize, max: usize) -> CliResult<()> {
    if n > max {
        return Err(Error::InstanceTooLarge(format!("{} {} exceeds {}", what, n, max)).into());
    }
    Ok(())
}

fn alphabet_flag(opts: &Options) -> CliResult<Option<Vec<Dec>>> {
    if opts.alphabet.is_empty() {
        return Ok(None);
    }
    Ok(Some(opts.alphabet.iter().map(|s| parse_dec(s)).collect::<Result<_, _>>()?))
}

/// Runs one command.
pub fn run(cmd: &Command, opts: &Options) -> CliResult<Output> {
    let mode: ZetaMode = opts.mode.into();
    Ok(match cmd {
        Command::Coproduct { expr } => emit::tensor(&coproduct(&guarded_expr(expr)?)),
        Command::Reduced { expr } => emit::tensor(&reduced_coproduct(&guarded_expr(expr)?)),
        Command::Cobracket { expr } => emit::wedge(&cobracket(&guarded_expr(expr)?)),
        Command::Deltam { word: w } => {
            let w = word(w)?;
            size_guard("weight", w.weight(), 7)?;
            emit::tensor(&delta_m(&w))
        }
        Command::Shuffle { u, v } => emit::lincomb(&shuffle_product(&word(u)?, &word(v)?)?),
        Command::ComposePath { word: w, point } => emit::lincomb(&path_compose(&word(w)?, &parse_dec(point)?)),
        Command::Reverse { word: w } => emit::lincomb(&reverse(&word(w)?)),
        Command::Antipode { expr } => emit::lincomb(&antipode(&guarded_expr(expr)?)),
        Command::Normalize { expr: e } => emit::lincomb(&normalize(&expr(e)?)),
        Command::Treemap { expr } => emit::lincomb(&tree_map_lc(&guarded_expr(expr)?)),
        Command::Trees { decs } => {
            let ds = parse_decs(decs)?;
            if ds.len() < 2 {
                return Err(Error::InvalidArgument("a tree needs at least two arc decorations".into()).into());
            }
            size_guard("arc count", ds.len(), 12)?;
            let items = enumerate_trees(&ds)
                .iter()
                .map(|t| Output { text: t.to_string(), latex: t.latex(), json: Value::String(t.to_string()) })
                .collect();
            Output::lines(items)
        }
        Command::Omega { decs } => {
            let ds = parse_decs(decs)?;
            if ds.len() < 3 {
                return Err(Error::InvalidArgument("omega needs at least three decorations".into()).into());
            }
            size_guard("weight", ds.len() - 2, 6)?;
            let o = omega(&ds);
            let mut out = emit::tensor(&o.tensor);
            out.json["raw_terms"] = json!(o.raw_terms);
            out.json["degenerate"] = json!(o.degenerate);
            out
        }
        Command::SeriesCoproduct { decs } => {
            let ds = parse_decs(decs)?;
            let d = opts.degree.unwrap_or(4);
            if ds.len() < 2 {
                return Err(Error::InvalidArgument("a series needs two endpoints".into()).into());
            }
            size_guard("weight", ds.len() - 2 + d, MAX_WEIGHT)?;
            let s = match opts.variant {
                Variant::Raw => series_coproduct_raw(&ds, d),
                Variant::Marked => series_coproduct_marked(&ds, d),
                Variant::Special => {
                    if !ds[0].is_zero() {
                        return Err(Error::InvalidArgument("the special formula needs the start point 0".into()).into());
                    }
                    series_coproduct_special(&ds[1..], d)
                }
            };
            series_output(&s)
        }
        Command::Depth { expr: e } => {
            let d = depth(&expr(e)?);
            Output::plain(d.to_string(), json!(d))
        }
        Command::Depth2Cobracket { m, n, a, b } => {
            emit::wedge(&depth2_cobracket(*m, *n, &parse_dec(a)?, &parse_dec(b)?, mode)?)
        }
        Command::ZetaDelta { ns } => match ns.as_slice() {
            [n] if *n > 0 => emit::wedge(&Wedge2::zero()),
            [m, n] if *m > 0 && *n > 0 => emit::wedge(&depth2_cobracket(*m, *n, &Dec::one(), &Dec::one(), mode)?),
            _ => return Err(Error::InvalidArgument("zeta-delta takes one or two positive indices".into()).into()),
        },
        Command::DihedralKernel { weight } => {
            let r = dihedral_kernel(*weight)?;
            let row = |v: &Vec<Q>| format!("[{}]", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
            let basis: Vec<String> = r.basis.iter().map(|(a, b)| format!("({},{})", a, b)).collect();
            let mut text = vec![
                format!(
                    "weight {}: kernel dimension {}, relation rank {}, relations in kernel {}, kernel equals relations {}",
                    r.weight,
                    r.kernel.len(),
                    r.relation_rank,
                    r.relations_in_kernel,
                    r.kernel_equals_relations
                ),
                format!("basis {}", basis.join(" ")),
            ];
            text.extend(r.kernel.iter().map(row));
            let rows = |m: &Vec<Vec<Q>>| m.iter().map(|v| v.iter().map(emit::rational).collect::<Vec<_>>()).collect::<Vec<_>>();
            Output::plain(
                text.join("\n"),
                json!({
                    "weight": r.weight,
                    "basis": r.basis,
                    "kernel": rows(&r.kernel),
                    "relations": rows(&r.relations),
                    "relation_rank": r.relation_rank,
                    "relations_in_kernel": r.relations_in_kernel,
                    "kernel_equals_relations": r.kernel_equals_relations,
                }),
            )
        }
        Command::Ramified { decs } => {
            let ds = parse_decs(decs)?;
            let place = if opts.prime.is_empty() { Place::AllPrimes } else { Place::Primes(opts.prime.clone()) };
            let r = unramified_certificate(&ds, &place)?;
            let certified = r.verdict == Verdict::CertifiedUnramified;
            let mut text = vec![if certified {
                "certified unramified".to_string()
            } else {
                let ps: Vec<String> = r.witness_primes().iter().map(|p| p.to_string()).collect();
                format!("not certified at {}", ps.join(", "))
            }];
            let triple = |(i, j, k): (usize, usize, usize)| [&ds[i], &ds[j], &ds[k]].map(|d| d.to_string());
            let mut wit = Vec::new();
            for w in &r.witnesses {
                let t = triple(w.triple);
                text.push(format!("({}) at {}: valuation {}", t.join(", "), w.prime, w.valuation));
                wit.push(json!({ "triple": t, "prime": w.prime.to_string(), "valuation": emit::rational(&w.valuation) }));
            }
            Output::plain(text.join("\n"), json!({ "certified": certified, "witnesses": wit }))
        }
        Command::Dimbound { n } => {
            let dims = preset(&opts.preset, *n)?;
            let b = dim_bound(&dims, *n)?;
            Output::plain(b.to_string(), json!({ "n": n, "preset": opts.preset, "bound": b.to_string() }))
        }
        Command::Eval { expr } => {
            let (v, err) = eval_expr(&parse(expr)?, opts.tol)?;
            Output::plain(format!("{} (error <= {:e})", v, err), json!({ "value": v, "error_bound": err }))
        }
        Command::StuffleCheck { n, m, x, y } => {
            let holds = stuffle_check(*n, *m, *x, *y, opts.tol.max(1e-9))?;
            check_output(holds, stuffle_residual(*n, *m, *x, *y, opts.tol)?)
        }
        Command::ShuffleCheck { u, v } => {
            let ((_, lu), (_, lv)) = (li(u)?, li(v)?);
            let holds = shuffle_check(&lu, &lv, opts.tol.max(1e-9))?;
            check_output(holds, shuffle_residual(&lu, &lv, opts.tol)?)
        }
        Command::IdealMember { expr: e } => {
            let x = expr(e)?;
            let alphabet = match alphabet_flag(opts)? {
                Some(a) => a,
                None => {
                    let mut set = BTreeSet::new();
                    collect_letters(&x, &mut set);
                    set.into_iter().collect()
                }
            };
            let w = opts.max_weight.unwrap_or_else(|| x.max_weight());
            bool_output(relation_ideal_member(&x, &alphabet, w)?)
        }
        Command::AutOracle { word: s } => {
            let w = word(s)?;
            let alphabet = match alphabet_flag(opts)? {
                Some(a) => a,
                None => w.decorations().into_iter().collect::<BTreeSet<_>>().into_iter().collect(),
            };
            let d = opts.degree.unwrap_or(w.weight()).max(w.weight());
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let f = TruncAut::random(&alphabet, d, &mut rng)?;
            let g = TruncAut::random(&alphabet, d, &mut rng)?;
            bool_output(coproduct_pairing_check(&w, &f, &g)?)
        }
    })
}
