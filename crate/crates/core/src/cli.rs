//! Command-line front end.
//!
//! [`run`] never touches the process: it returns the exit code together with
//! the stdout and stderr text, so the whole interface is testable in-process.
//! Exit codes: [`EXIT_OK`], [`EXIT_PARSE`] for malformed arguments,
//! [`EXIT_DOMAIN`] for mathematical errors and [`EXIT_VERIFY_FAILED`] when a
//! relation sweep finds a failing identity.

use std::ffi::OsString;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::cone_series::{expand, verify_expansion, RationalCone, RationalFn};
use crate::error::Error;
use crate::hecke_rat::{verify_relations, HeckeAlgebra, HeckeElement, HeckeTermJson};
use crate::root_data::{AffineJson, AffineWeylElement, ConeConvention, FormConvention, LaffVector, RootData};
use crate::two_local::{
    check_prime, coset_invariant, pairing_via_valuation, residue_to_string, tame_symbol, Matrix2D, Scalar2D, Subgroup,
};
use crate::weyl_heisenberg::{hw_mul, HWElement, HWJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dihecke", version, about = "Exact computations with affine Weyl groups, tame symbols, cone series and rational Hecke algebras")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Root datum: a preset (A1, A2, A3, B2, G2) or a JSON file holding a Cartan matrix.
    #[arg(long = "type", global = true, env = "DIHECKE_TYPE", default_value = "A1")]
    ty: String,
    /// Residue characteristic for two-dimensional local field commands.
    #[arg(long, global = true, default_value_t = 3)]
    p: u32,
    #[arg(long, global = true, value_enum, default_value_t = ConeArg::Level)]
    cone_convention: ConeArg,
    /// Default truncation order for series.
    #[arg(long, global = true, default_value_t = 8)]
    trunc: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConeArg {
    Level,
    Theta,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Affine Weyl group arithmetic.
    #[command(subcommand)]
    Weyl(WeylOp),
    /// Heisenberg-Weyl group arithmetic.
    #[command(subcommand)]
    Heis(HeisOp),
    /// Tame symbol of two elements of F_p((t1))((t2)).
    Tame {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Double coset index of a matrix in D_i \ SL_2 / D_j.
    Coset {
        #[arg(long)]
        mat: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Expands a rational function in a cone.
    Expand {
        #[arg(long = "fn", allow_hyphen_values = true)]
        func: String,
        /// JSON generator list, `Q+` or `Q(<affine element>)`.
        #[arg(long)]
        cone: String,
        #[arg(long = "N")]
        n: Option<u32>,
    },
    /// Rational Hecke algebra arithmetic.
    #[command(subcommand)]
    Hecke(HeckeOp),
    /// Checks the defining relations of the Hecke generators.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        /// Random samples for the shift law.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Negative control: flip the level of the affine simple root.
        #[arg(long)]
        mutate_a0: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WeylOp {
    /// Product `x y` of two affine elements such as `s0 s1` or `t[1] s1`
    Mul { x: String, y: String },
    /// Coxeter length
    Len { x: String },
    /// Lexicographically least reduced word
    Word { x: String },
}

#[derive(Subcommand, Debug)]
enum HeisOp {
    /// Product of two elements written `z^c t1[..] t2[..] <word>` or as JSON
    Mul { g: String, h: String },
}

#[derive(Subcommand, Debug)]
enum HeckeOp {
    /// Product of two Hecke elements, e.g. `T0 T1` or a JSON term list
    Mul {
        a: String,
        b: String,
    },
    /// Action of a Hecke element on a rational function of the torus
    Apply {
        a: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// The operator `tau_w`, the product of generators along a reduced word of `w`
    Tau {
        w: String,
        /// Shift `[a, l_1, ..., l_n]` applied first.
        #[arg(long)]
        l: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse { argument: Option<&'static str>, err: Error },
    Domain(Error),
    Verify(Doc),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Tags an input-stage error with the argument it came from.
fn input<T>(argument: &'static str, r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|err| Failure::Parse { argument: Some(argument), err })
}

struct Doc {
    json: Value,
    pretty: String,
}

struct Config {
    rd: RootData,
    p: u32,
    convention: ConeConvention,
    trunc: u32,
    seed: u64,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
            }
            let err = json!({"error": "ParseError", "message": e.to_string().trim_end()});
            return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: format!("{err}\n") };
        }
    };
    let pretty = cli.global.pretty;
    let render = |d: &Doc| if pretty { format!("{}\n", d.pretty.trim_end()) } else { format!("{}\n", d.json) };
    match config(&cli.global).and_then(|cfg| dispatch(cli.cmd, &cfg)) {
        Ok(doc) => Outcome { code: EXIT_OK, stdout: render(&doc), stderr: String::new() },
        Err(Failure::Verify(doc)) => Outcome { code: EXIT_VERIFY_FAILED, stdout: render(&doc), stderr: String::new() },
        Err(Failure::Parse { argument, err }) => {
            Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: format!("{}\n", error_json(&err, argument)) }
        }
        Err(Failure::Domain(err)) => {
            Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("{}\n", error_json(&err, None)) }
        }
    }
}

fn error_json(err: &Error, argument: Option<&str>) -> Value {
    let mut v = json!({"error": err.kind(), "message": err.to_string()});
    if let Some(a) = argument {
        v["argument"] = json!(a);
    }
    if let Error::Parse { line, column, .. } = err {
        v["line"] = json!(line);
        v["column"] = json!(column);
    }
    v
}

fn config(g: &GlobalArgs) -> Result<Config, Failure> {
    let rd = input("type", load_root_data(&g.ty))?;
    input("p", check_prime(g.p))?;
    let convention = match g.cone_convention {
        ConeArg::Level => ConeConvention::Level,
        ConeArg::Theta => ConeConvention::Theta,
    };
    Ok(Config { rd, p: g.p, convention, trunc: g.trunc, seed: g.seed })
}

fn load_root_data(ty: &str) -> crate::Result<RootData> {
    if let Ok(rd) = RootData::preset(ty) {
        return Ok(rd);
    }
    let path = Path::new(ty);
    if !path.is_file() {
        return Err(Error::Invalid(format!("{ty:?} is neither a known preset nor a Cartan matrix file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let cartan: Vec<Vec<i64>> = json_input(&text)?;
    RootData::new(cartan, FormConvention::default())
}

fn json_input<T: DeserializeOwned>(src: &str) -> crate::Result<T> {
    serde_json::from_str(src).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

fn looks_like_json(src: &str) -> bool {
    src.trim_start().starts_with(['{', '['])
}

fn parse_affine(rd: &RootData, src: &str) -> crate::Result<AffineWeylElement> {
    if looks_like_json(src) {
        rd.affine_from_json(&json_input::<AffineJson>(src)?)
    } else {
        rd.parse_affine(src)
    }
}

fn affine_text(rd: &RootData, x: &AffineWeylElement) -> String {
    let w = rd.reduced_word(x);
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn parse_hw(rd: &RootData, src: &str) -> crate::Result<HWElement> {
    if looks_like_json(src) {
        HWElement::from_json(rd, &json_input::<HWJson>(src)?)
    } else {
        HWElement::parse(rd, src)
    }
}

/// A JSON term list, or a product of `T<i>` generators (`1` for the unit).
fn parse_hecke(alg: &HeckeAlgebra, src: &str) -> crate::Result<HeckeElement> {
    if looks_like_json(src) {
        return alg.from_json(&json_input::<Vec<HeckeTermJson>>(src)?);
    }
    let mut word = Vec::new();
    let mut col = 1;
    for tok in src.split(' ') {
        match tok {
            "" | "1" => {}
            _ => {
                let i = tok
                    .strip_prefix('T')
                    .and_then(|i| i.parse::<usize>().ok())
                    .filter(|&i| i <= alg.root_data().rank())
                    .ok_or_else(|| Error::Parse {
                        line: 1,
                        column: col,
                        message: format!("expected `T<i>` with i in 0..={}, found {tok:?}", alg.root_data().rank()),
                    })?;
                word.push(i);
            }
        }
        col += tok.len() + 1;
    }
    alg.tau_word(&word)
}

fn hecke_doc(alg: &HeckeAlgebra, a: &HeckeElement) -> Doc {
    let rd = alg.root_data();
    let pretty = if a.is_zero() {
        "0".to_string()
    } else {
        a.terms().iter().map(|(x, f)| format!("({f}) [{}]", affine_text(rd, x))).collect::<Vec<_>>().join("\n")
    };
    Doc { json: json!(alg.to_json(a)), pretty }
}

fn parse_cone(cfg: &Config, src: &str) -> crate::Result<RationalCone> {
    let s = src.trim();
    if s == "Q+" {
        return cfg.rd.dominant_affine_cone(cfg.convention);
    }
    if let Some(inner) = s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        let x = cfg.rd.parse_affine(inner).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse { line, column: column + 2, message },
            e => e,
        })?;
        return cfg.rd.cone_q(&x, cfg.convention);
    }
    RationalCone::from_generators(&json_input::<Vec<Vec<i64>>>(s)?)
}

fn dispatch(cmd: Cmd, cfg: &Config) -> Result<Doc, Failure> {
    let rd = &cfg.rd;
    Ok(match cmd {
        Cmd::Weyl(op) => {
            let (x, y) = match &op {
                WeylOp::Mul { x, y } => (input("x", parse_affine(rd, x))?, Some(input("y", parse_affine(rd, y))?)),
                WeylOp::Len { x } | WeylOp::Word { x } => (input("x", parse_affine(rd, x))?, None),
            };
            match op {
                WeylOp::Mul { .. } => {
                    let z = x.mul(&y.unwrap());
                    let j = rd.affine_to_json(&z);
                    let pretty = format!("{}  (length {})", affine_text(rd, &z), j.length);
                    Doc { json: json!(j), pretty }
                }
                WeylOp::Len { .. } => {
                    let n = rd.length(&x);
                    Doc { json: json!({"length": n}), pretty: n.to_string() }
                }
                WeylOp::Word { .. } => {
                    let w = rd.reduced_word(&x);
                    Doc { json: json!({"word": w}), pretty: affine_text(rd, &x) }
                }
            }
        }
        Cmd::Heis(HeisOp::Mul { g, h }) => {
            let g = input("g", parse_hw(rd, &g))?;
            let h = input("h", parse_hw(rd, &h))?;
            let gh = hw_mul(rd, &g, &h);
            let pretty = gh.display(rd).to_string();
            Doc { json: json!(gh.to_json(rd)), pretty }
        }
        Cmd::Tame { f, g } => {
            let f = input("f", Scalar2D::parse(&f, cfg.p))?;
            let g = input("g", Scalar2D::parse(&g, cfg.p))?;
            let symbol = residue_to_string(&tame_symbol(&f, &g)?);
            let pairing = pairing_via_valuation(&f, &g)?;
            let pretty = format!("{{f, g}} = {symbol}\npairing = {pairing}");
            Doc { json: json!({"symbol": symbol, "pairing": pairing}), pretty }
        }
        Cmd::Coset { mat, i, j } => {
            let m = input("mat", Matrix2D::parse(&mat, cfg.p))?;
            let di = input("i", Subgroup::from_index(i))?;
            let dj = input("j", Subgroup::from_index(j))?;
            let red = coset_invariant(&m, di, dj)?;
            let idx = red.index;
            let pretty = format!(
                "translation = [{}, {}]\nfinite = {}\nrepresentative = {}\nleft = {}\nright = {}",
                idx.translation[0],
                idx.translation[1],
                json!(idx.finite).as_str().unwrap_or_default(),
                red.representative,
                red.left,
                red.right
            );
            Doc { json: json!(idx), pretty }
        }
        Cmd::Expand { func, cone, n } => {
            let q = input("cone", parse_cone(cfg, &cone))?;
            let r = input("fn", RationalFn::parse(&func, q.dim()))?;
            let n = i64::from(n.unwrap_or(cfg.trunc));
            let s = expand(&r, &q, n)?;
            let verified = verify_expansion(&r, &s);
            let dump = s.to_dump();
            let mut pretty = format!("{r}\n  in cone {:?}, shift {:?}, order {n}\n", dump.cone, dump.shift);
            for t in &dump.terms {
                pretty.push_str(&format!("  t{:?}: {}\n", t.exponent, t.coeff));
            }
            pretty.push_str(&format!("verified = {verified}"));
            Doc { json: json!({"series": dump, "verified": verified}), pretty }
        }
        Cmd::Hecke(op) => {
            let alg = HeckeAlgebra::new(rd.clone());
            match op {
                HeckeOp::Mul { a, b } => {
                    let a = input("a", parse_hecke(&alg, &a))?;
                    let b = input("b", parse_hecke(&alg, &b))?;
                    hecke_doc(&alg, &alg.mul(&a, &b))
                }
                HeckeOp::Apply { a, f } => {
                    let a = input("a", parse_hecke(&alg, &a))?;
                    let f = input("f", RationalFn::parse(&f, alg.dim()))?;
                    let out = alg.apply(&a, &f).to_string();
                    Doc { json: json!({"result": out}), pretty: out }
                }
                HeckeOp::Tau { w, l } => {
                    let w = input("w", parse_affine(rd, &w))?;
                    let l = match l {
                        None => LaffVector::zero(rd.rank()),
                        Some(src) => {
                            let v: Vec<i64> = input("l", json_input(&src))?;
                            if v.len() != alg.dim() {
                                return Err(Failure::Parse {
                                    argument: Some("l"),
                                    err: Error::Dimension { expected: alg.dim(), got: v.len() },
                                });
                            }
                            LaffVector::from_slice(&v)
                        }
                    };
                    hecke_doc(&alg, &alg.tau_l(&w, &l))
                }
            }
        }
        Cmd::Verify { max_length, samples, mutate_a0 } => {
            let alg = if mutate_a0 { HeckeAlgebra::with_mutated_a0(rd.clone()) } else { HeckeAlgebra::new(rd.clone()) };
            let report = verify_relations(&alg, max_length, samples, cfg.seed);
            let mut pretty = String::new();
            for (family, checks) in [
                ("quadratic", &report.quadratic),
                ("braid", &report.braid),
                ("reduced_word", &report.reduced_word),
                ("shift_law", &report.shift_law),
            ] {
                let failed = checks.iter().filter(|c| !c.pass).count();
                pretty.push_str(&format!("{family}: {} checks, {failed} failed\n", checks.len()));
                for c in checks.iter().filter(|c| !c.pass) {
                    pretty.push_str(&format!("  FAIL {}\n", c.name));
                }
            }
            let doc = Doc { json: json!(report.summary()), pretty };
            if !report.passed() {
                return Err(Failure::Verify(doc));
            }
            doc
        }
    })
}
