//! The `twistvoa` command line. JSON goes to stdout by default, `--pretty` switches to
//! readable text. Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Monomial, Poly, PuiseuxSeries, Rat};
use crate::characters::{self as ch, apply_spectral_flow, evaluate, CharExpr, FlowData, Specialization, Var, VarValue};
use crate::error::{MathError, Result};
use crate::fusion::{self, Level, ModuleLabel};
use crate::io::{self, pretty_series, Config};
use crate::mlde::{mlde_apply, mlde_fit, Group, MldeOp};
use crate::modforms::{self, ThetaKind, TwistPair};
use crate::uea::{self, is_singular, zhu_twisted_image, Gen, Mode};

pub const DEFAULT_TRUNC: i64 = 24;
pub const DEFAULT_EPS_DEGREE: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "twistvoa", version, about = "Exact characters, MLDEs and fusion rules for affine vertex algebras")]
pub struct Cli {
    /// Series truncation: results are exact below q^TRUNC.
    #[arg(long, global = true)]
    pub trunc: Option<i64>,
    /// Number of ε-orders kept when taking z → 1 limits.
    #[arg(long, global = true)]
    pub eps_degree: Option<usize>,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// TOML file with `trunc` and `eps_degree` defaults.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jacobi theta function ϑ_kind(z; q^modulus) at z = e^{2πi·phase} q^exp.
    Theta {
        #[arg(long, default_value_t = 1)]
        kind: u8,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        phase: Rat,
        #[arg(long = "exp", default_value = "0", allow_hyphen_values = true)]
        exp: Rat,
        #[arg(long, default_value = "1")]
        modulus: Rat,
        /// Evaluate the product form instead of the sum.
        #[arg(long)]
        product: bool,
    },
    /// Dedekind eta η(q^scale).
    Eta {
        #[arg(long, default_value = "1")]
        scale: Rat,
    },
    /// 𝔼_k, the twisted 𝔼_k[e^{2πiλ}; ϑ], or Θ̄_{r,s} with --bar.
    Eisenstein {
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Rat>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        theta_phase: Rat,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        theta_exp: Rat,
        /// `r,s` for the Θ̄_{r,s} basis forms.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        bar: Option<Vec<u32>>,
    },
    /// Character of a module as a q-series (or its expression with --expr).
    Char {
        family: String,
        #[command(flatten)]
        params: CharParams,
        /// Print the symbolic expression instead of evaluating it.
        #[arg(long)]
        expr: bool,
    },
    /// Apply an operator file to series and report whether it annihilates them.
    MldeVerify {
        #[arg(long)]
        op: PathBuf,
        #[command(flatten)]
        source: SeriesSource,
        /// Check through q^THROUGH (default: as far as the output is known).
        #[arg(long, allow_hyphen_values = true)]
        through: Option<Rat>,
    },
    /// Fit the monic operator of the given order annihilating the series.
    MldeFit {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "gamma0-2")]
        group: Group,
        #[command(flatten)]
        source: SeriesSource,
    },
    /// Fusion products at level -2 + p/q.
    Fusion {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// The full table of covered products.
        #[arg(long)]
        all: bool,
        /// Use the bimodule oracle instead of the closed forms.
        #[arg(long)]
        oracle: bool,
        /// Read untwisted `L(j)` labels in the twisted convention.
        #[arg(long)]
        twisted_labels: bool,
        /// Two labels such as `L(-2/3)` or `sigma^{-1/2}(L(0))`.
        #[arg(allow_hyphen_values = true)]
        labels: Vec<String>,
    },
    /// Zhu-algebra polynomials and their roots.
    Zhu {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Verlinde matrices against the closed-form table at k = -4/3.
    Verlinde,
    /// Test whether a PBW vector file is singular.
    SingularCheck {
        file: PathBuf,
        /// Raising modes such as `e0,f1` (default depends on the module).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        raising: Option<Vec<String>>,
    },
    /// Image of a weight-zero vacuum vector in the twisted Zhu algebra.
    ZhuImage { file: PathBuf },
    /// Expand the U(L0) reduction identities at small parameters.
    Ul0 {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        kappa: u32,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        d: u32,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct CharParams {
    #[arg(long)]
    pub u: Option<i64>,
    #[arg(long)]
    pub j: Option<i64>,
    #[arg(long)]
    pub module: Option<String>,
    /// sl2: a rational l; sl3: half-lambda1 | third-rho; d4: 1 | 3 | 4 | minus-half-lambda2.
    #[arg(long, allow_hyphen_values = true)]
    pub flow: Option<String>,
    /// Values for z1, z2, ...: `1`, `q^a` or `lim:c` (z → 1 along (1+ε)^c).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub z: Vec<String>,
    /// Value for y, `1` by default.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SeriesSource {
    /// JSON series files (a single series or an array).
    #[arg(long)]
    pub series: Vec<PathBuf>,
    /// A character family, as for `char`.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: CharParams,
}

struct Settings {
    trunc: Rat,
    eps_degree: usize,
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Output {
        Output { json, text, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> MathError {
    MathError::Parse(msg.into())
}

fn parse_var_value(s: &str) -> Result<VarValue> {
    let s = s.trim();
    if s == "1" {
        return Ok(VarValue::Drop);
    }
    if let Some(c) = s.strip_prefix("lim:") {
        return Ok(VarValue::Limit(c.parse()?));
    }
    if let Some(e) = s.strip_prefix("q^") {
        let e = e.trim_start_matches('(').trim_end_matches(')');
        return Ok(VarValue::Value(Monomial::q(e.parse()?)));
    }
    Err(usage(format!("variable value {s:?}: expected 1, q^a or lim:c")))
}

fn int_param(v: Option<i64>, name: &str, family: &str) -> Result<i64> {
    v.ok_or_else(|| usage(format!("family {family} needs --{name}")))
}

/// The named characters a family/parameter choice denotes; omitted indices enumerate.
fn build_chars(family: &str, p: &CharParams) -> Result<Vec<(String, CharExpr)>> {
    let sl2_flow = |e: CharExpr| -> Result<CharExpr> {
        match &p.flow {
            Some(l) => apply_spectral_flow(&e, &FlowData::sl2(&l.parse()?)),
            None => Ok(e),
        }
    };
    let mut out = Vec::new();
    match family {
        "sl2-boundary" | "sl2-boundary-twisted" => {
            let u = int_param(p.u, "u", family)?;
            let twisted = family.ends_with("twisted");
            if twisted && p.flow.is_some() {
                return Err(usage("the twisted family already carries its flow"));
            }
            let js: Vec<i64> = match p.j {
                Some(j) => vec![j],
                None if twisted => (0..=(u - 1) / 2).collect(),
                None => (0..u).collect(),
            };
            for j in js {
                let e = if twisted { ch::sl2_boundary_twisted(u, j)? } else { sl2_flow(ch::sl2_boundary(u, j)?)? };
                out.push((format!("{family}(u={u}, j={j})"), e));
            }
        }
        "sl2-half" | "sl2-half-twisted" => {
            let mods = match &p.module {
                Some(m) => vec![m.clone()],
                None => vec!["L0".into(), "L1".into()],
            };
            for m in mods {
                let which: ch::HalfModule = m.parse()?;
                let e = if family.ends_with("twisted") { ch::sl2_half_twisted(which) } else { sl2_flow(ch::sl2_half(which))? };
                out.push((format!("{family}({m})"), e));
            }
        }
        "sl3" => {
            let m = p.module.clone().unwrap_or_else(|| "vac".into());
            let e = ch::sl3_boundary(m.parse()?);
            let e = match p.flow.as_deref() {
                None => e,
                Some("half-lambda1") => apply_spectral_flow(&e, &ch::a2_flow_half_lambda1())?,
                Some("third-rho") => apply_spectral_flow(&e, &ch::a2_flow_third_rho())?,
                Some(f) => return Err(usage(format!("unknown sl3 flow {f:?}"))),
            };
            out.push((format!("sl3({m})"), e));
        }
        "d4" => {
            let m = p.module.clone().unwrap_or_else(|| "vac".into());
            let e = ch::d4_char(m.parse()?);
            let e = match p.flow.as_deref() {
                None => e,
                Some("minus-half-lambda2") => apply_spectral_flow(&e, &ch::d4_flow_minus_half_lambda2())?,
                Some(i) => {
                    let i: u8 = i.parse().map_err(|_| usage(format!("unknown d4 flow {i:?}")))?;
                    apply_spectral_flow(&e, &ch::d4_flow(i)?)?
                }
            };
            out.push((format!("d4({m})"), e));
        }
        f => return Err(usage(format!("unknown family {f:?}"))),
    }
    Ok(out)
}

fn specialization(e: &CharExpr, family: &str, p: &CharParams, s: &Settings) -> Result<Specialization> {
    let mut sp = Specialization::new(s.trunc.clone()).with_eps_degree(s.eps_degree);
    let zs: Vec<u8> = e.variables().into_iter().filter_map(|v| if let Var::Z(i) = v { Some(i) } else { None }).collect();
    let defaults: Vec<String> = match family {
        "sl3" => vec!["lim:1".into(), "lim:2".into()],
        "d4" => ["lim:1", "lim:2", "lim:3", "lim:5"].iter().map(|s| s.to_string()).collect(),
        _ => vec![],
    };
    let given = if p.z.is_empty() { &defaults } else { &p.z };
    for &i in &zs {
        let raw = match given.len() {
            0 => "1",
            1 => given[0].as_str(),
            _ => given.get(i as usize - 1).ok_or_else(|| usage(format!("no value given for z{i}")))?.as_str(),
        };
        sp = sp.set(Var::Z(i), parse_var_value(raw)?);
    }
    sp = sp.set(Var::Y, parse_var_value(p.y.as_deref().unwrap_or("1"))?);
    Ok(sp)
}

fn load_series(src: &SeriesSource, s: &Settings) -> Result<Vec<(String, PuiseuxSeries)>> {
    let mut out = Vec::new();
    for path in &src.series {
        for (k, f) in io::read_series(path)?.into_iter().enumerate() {
            out.push((format!("{}[{k}]", path.display()), f));
        }
    }
    match src.family.as_deref() {
        Some("bp") => out.push(("bp".into(), ch::bp_flowed_char())),
        Some(fam) => {
            for (name, e) in build_chars(fam, &src.params)? {
                let sp = specialization(&e, fam, &src.params, s)?;
                out.push((name, evaluate(&e, &sp)?));
            }
        }
        None => {}
    }
    if out.is_empty() {
        return Err(usage("no series given: use --series FILE or --family"));
    }
    Ok(out)
}

/// `D^(3) - 7/450 Theta(0,2) D^(1) - ...`.
pub fn pretty_operator(op: &MldeOp) -> String {
    let mut s = format!("D^({})", op.order);
    for t in &op.coeffs {
        let (sign, mag) = if t.weight.is_negative() { ("-", -&t.weight) } else { ("+", t.weight.clone()) };
        s.push_str(&format!(" {sign} {mag} {}", t.basis));
        if t.at > 0 {
            s.push_str(&format!(" D^({})", t.at));
        }
    }
    s
}

fn parse_mode(s: &str) -> Result<Mode> {
    let s = s.trim();
    let mut chars = s.chars();
    let g = match chars.next() {
        Some('e') => Gen::E,
        Some('f') => Gen::F,
        Some('h') => Gen::H,
        _ => return Err(usage(format!("raising mode {s:?}"))),
    };
    let n = chars.as_str().trim_matches(|c| c == '[' || c == ']' || c == '(' || c == ')');
    Ok((g, n.parse().map_err(|_| usage(format!("raising mode {s:?}")))?))
}

fn poly_json(p: &Poly) -> Value {
    json!({ "display": p.to_string(), "coeffs": p })
}

fn level_of(level: &Rat) -> Result<Level> {
    let t = level + &Rat::int(2);
    let (p, q) = (t.numer(), t.denom());
    let p: i64 = p.try_into().map_err(|_| usage("level out of range"))?;
    let q: i64 = q.try_into().map_err(|_| usage("level out of range"))?;
    Level::new(p, q)
}

fn series_out(name: Option<&str>, f: &PuiseuxSeries) -> (Value, String) {
    let text = match name {
        Some(n) => format!("{n}: {}", pretty_series(f)),
        None => pretty_series(f),
    };
    (serde_json::to_value(f).expect("serializable"), text)
}

fn run_command(cmd: &Command, s: &Settings) -> Result<Output> {
    Ok(match cmd {
        Command::Theta { kind, phase, exp, modulus, product } => {
            let kind = ThetaKind::from_index(*kind)?;
            let arg = Monomial::new(phase.clone(), exp.clone());
            let f = if *product {
                modforms::jacobi_theta_product(kind, &arg, modulus, &s.trunc)?
            } else {
                modforms::jacobi_theta(kind, &arg, modulus, &s.trunc)?
            };
            let (j, t) = series_out(None, &f);
            Output::new(j, t)
        }
        Command::Eta { scale } => {
            let (j, t) = series_out(None, &modforms::eta_scaled(scale, &s.trunc));
            Output::new(j, t)
        }
        Command::Eisenstein { k, lambda, theta_phase, theta_exp, bar } => {
            let f = match (bar, lambda) {
                (Some(rs), _) => modforms::theta_bar(rs[0], rs[1], &s.trunc),
                (None, Some(l)) => {
                    let tw = TwistPair { lambda: l.clone(), theta: Monomial::new(theta_phase.clone(), theta_exp.clone()) };
                    modforms::twisted_eisenstein(*k, &tw, &s.trunc)?
                }
                (None, None) => modforms::eisenstein(*k, &s.trunc)?,
            };
            let (j, t) = series_out(None, &f);
            Output::new(j, t)
        }
        Command::Char { family, params, expr } => {
            if family == "bp" {
                let (j, t) = series_out(Some("bp"), &ch::bp_flowed_char());
                return Ok(Output::new(j, t));
            }
            let chars = build_chars(family, params)?;
            let mut js = Vec::new();
            let mut ts = Vec::new();
            for (name, e) in &chars {
                if *expr {
                    js.push(serde_json::to_value(e).expect("serializable"));
                    ts.push(format!("{name}: {}", io::to_json(e)));
                } else {
                    let f = evaluate(e, &specialization(e, family, params, s)?)?;
                    let (j, t) = series_out(Some(name), &f);
                    js.push(j);
                    ts.push(t);
                }
            }
            let json = if js.len() == 1 { js.pop().unwrap() } else { Value::Array(js) };
            Output::new(json, ts.join("\n"))
        }
        Command::MldeVerify { op, source, through } => {
            let op = io::read_operator(op)?;
            let mut rows = Vec::new();
            let mut text = vec![pretty_operator(&op)];
            let mut ok = true;
            for (name, f) in load_series(source, s)? {
                let r = mlde_apply(&op, &f)?;
                let known = r.trunc().cloned().unwrap_or_else(|| s.trunc.clone());
                let upto = through.clone().unwrap_or(known.clone());
                if upto > known {
                    return Err(MathError::TruncationExhausted(format!(
                        "operator output known only below q^{known}, asked through q^{upto}"
                    )));
                }
                let killed = r.truncate(&upto).is_zero();
                ok &= killed;
                text.push(format!("{name}: {} below q^{upto}", if killed { "annihilated" } else { "NOT annihilated" }));
                rows.push(json!({ "name": name, "through": upto, "annihilated": killed,
                                  "residual_valuation": r.truncate(&upto).valuation() }));
            }
            Output { json: json!({ "operator": op, "results": rows }), text: text.join("\n"), ok }
        }
        Command::MldeFit { order, group, source } => {
            let sols: Vec<PuiseuxSeries> = load_series(source, s)?.into_iter().map(|(_, f)| f).collect();
            let op = mlde_fit(&sols, *order, *group)?;
            Output::new(serde_json::to_value(&op).expect("serializable"), pretty_operator(&op))
        }
        Command::Fusion { p, q, all, oracle, twisted_labels, labels } => {
            let lvl = Level::new(*p, *q)?;
            if *all {
                let mut table = fusion::fusion_table(&lvl)?;
                if *oracle {
                    for row in &mut table.pairs {
                        let r = fusion::oracle_fuse(&lvl, &row.a, &row.b)?;
                        row.display = format!("{} x {} = {}", row.a.display(&lvl), row.b.display(&lvl), r.display(&lvl));
                        row.result = r.summands;
                    }
                }
                let text = table.pairs.iter().map(|r| r.display.clone()).collect::<Vec<_>>().join("\n");
                Output::new(serde_json::to_value(&table).expect("serializable"), text)
            } else {
                let [a, b] = labels.as_slice() else {
                    return Err(usage("fusion needs two labels or --all"));
                };
                let a = ModuleLabel::parse(&lvl, a, *twisted_labels)?;
                let b = ModuleLabel::parse(&lvl, b, *twisted_labels)?;
                let r = if *oracle { fusion::oracle_fuse(&lvl, &a, &b)? } else { fusion::fuse(&lvl, &a, &b)? };
                let display = format!("{} x {} = {}", a.display(&lvl), b.display(&lvl), r.display(&lvl));
                Output::new(
                    json!({ "level": lvl, "a": a, "b": b, "result": r.summands, "display": display }),
                    display,
                )
            }
        }
        Command::Zhu { p, q } => {
            let lvl = Level::new(*p, *q)?;
            let (u, t) = (lvl.zhu_polynomial(false), lvl.zhu_polynomial(true));
            let text = format!(
                "level {lvl}\nuntwisted roots {:?}\ntwisted roots {:?}",
                lvl.zhu_roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                lvl.twisted_zhu_roots().iter().map(|r| r.to_string()).collect::<Vec<_>>()
            );
            Output::new(
                json!({ "level": lvl, "untwisted_roots": lvl.zhu_roots(), "twisted_roots": lvl.twisted_zhu_roots(),
                        "untwisted_polynomial": poly_json(&u), "twisted_polynomial": poly_json(&t) }),
                text,
            )
        }
        Command::Verlinde => {
            let t = fusion::verlinde_check()?;
            let ints = t.verlinde_integral();
            let mut text = vec![fusion::VERLINDE_CONTRACTION.to_string()];
            for (a, c) in t.closed_form.iter().enumerate() {
                let v = ints.as_ref().map(|m| format!("{:?}", m[a])).unwrap_or_else(|| "non-integral".into());
                text.push(format!("N_{a}: closed form {c:?}  Verlinde {v}"));
            }
            Output::new(
                json!({ "contraction": fusion::VERLINDE_CONTRACTION, "closed_form": t.closed_form,
                        "verlinde": ints, "verlinde_exact": t.verlinde }),
                text.join("\n"),
            )
        }
        Command::SingularCheck { file, raising } => {
            let v = io::read_vector(file)?;
            let e = v.element();
            let modes: Vec<Mode> = match raising {
                Some(r) => r.iter().map(|m| parse_mode(m)).collect::<Result<_>>()?,
                None => v.module.default_raising(),
            };
            let sing = is_singular(&e, &v.module, Some(&modes))?;
            let images: Vec<Value> = modes
                .iter()
                .map(|&(g, n)| json!({ "mode": format!("{}[{n}]", g.symbol()), "image": uea::apply_mode(g, n, &e, &v.module).to_string() }))
                .collect();
            let text = format!("{e}\nsingular: {sing}");
            Output { json: json!({ "module": v.module, "vector": e.to_string(), "singular": sing, "images": images }), text, ok: true }
        }
        Command::ZhuImage { file } => {
            let v = io::read_vector(file)?;
            if v.module.kind != uea::ModuleKind::Vacuum {
                return Err(usage("zhu-image needs a vacuum-module vector (|vac: ...>)"));
            }
            let lvl = level_of(&v.module.level)?;
            let img = zhu_twisted_image(&v.element(), &lvl)?;
            let roots = lvl.twisted_zhu_roots();
            let exact = img.vanishes_exactly_at(&roots);
            let pieces: Vec<Value> = img.pieces.iter().map(|(m, p)| json!({ "monomial": m.to_string(), "image": p.to_string() })).collect();
            let text = format!(
                "{}\n{}\nproportional to the twisted Zhu polynomial: {exact}",
                img.pieces.iter().map(|(m, p)| format!("[{m}] = {p}")).collect::<Vec<_>>().join("\n"),
                img.polynomial
            );
            Output::new(
                json!({ "level": lvl, "polynomial": poly_json(&img.polynomial), "pieces": pieces,
                        "twisted_roots": roots, "proportional_to_twisted_zhu": exact }),
                text,
            )
        }
        Command::Ul0 { p, q, n, kappa, a, b, d } => {
            let lvl = Level::new(*p, *q)?;
            let r = uea::ul0_reduce(*a, *b, *d, *n, *kappa, &lvl)?;
            let text = format!(
                "E1: {} | closed {} | agree {}\nE2 ({}): {} | closed {} | agree {}",
                r.e1_expanded,
                r.e1_closed,
                r.e1_agrees(),
                r.e2_branch,
                r.e2_expanded,
                r.e2_closed,
                r.e2_agrees()
            );
            let ok = r.e1_agrees() && r.e2_agrees();
            Output { json: json!({ "report": r, "e1_agrees": r.e1_agrees(), "e2_agrees": r.e2_agrees() }), text, ok }
        }
    })
}

fn exit_code(e: &MathError) -> i32 {
    match e {
        MathError::Parse(_) | MathError::OutOfRange(_) => 2,
        _ => 1,
    }
}

/// Runs a parsed command line, printing to stdout/stderr, and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let config = match cli.config.as_deref().map(Config::load).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let settings = Settings {
        trunc: Rat::int(cli.trunc.or(config.trunc).unwrap_or(DEFAULT_TRUNC)),
        eps_degree: cli.eps_degree.or(config.eps_degree).unwrap_or(DEFAULT_EPS_DEGREE),
    };
    match run_command(&cli.command, &settings) {
        Ok(out) => {
            if cli.pretty {
                println!("{}", out.text);
            } else {
                println!("{}", out.json);
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `argv` (including the program name) and runs it.
pub fn main_with_args<I: IntoIterator<Item = String>>(args: I) -> i32 {
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mlde::BasisForm;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("twistvoa").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn negative_flow_is_a_value() {
        let c = parse(&["char", "sl2-boundary", "--u", "3", "--j", "1", "--flow", "-1/2", "--z", "1", "--y", "1", "--trunc", "12"]);
        assert_eq!(c.trunc, Some(12));
        let Command::Char { params, .. } = c.command else { panic!() };
        assert_eq!(params.flow.as_deref(), Some("-1/2"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(main_with_args(["twistvoa", "fusion", "--p", "2"].map(String::from)), 2);
        assert_eq!(main_with_args(["twistvoa", "fusion", "--p", "2", "--q", "4", "--all"].map(String::from)), 2);
    }

    #[test]
    fn var_values() {
        assert_eq!(parse_var_value("1").unwrap(), VarValue::Drop);
        assert_eq!(parse_var_value("lim:-3").unwrap(), VarValue::Limit(Rat::int(-3)));
        assert_eq!(parse_var_value("q^1/3").unwrap(), VarValue::Value(Monomial::q(Rat::new(1, 3))));
        assert!(parse_var_value("z").is_err());
    }

    #[test]
    fn operator_rendering() {
        let op = MldeOp::new(2, Group::Gamma0Two).term(0, BasisForm::ThetaBar(1, 1), Rat::new(-1, 96));
        assert_eq!(pretty_operator(&op), "D^(2) - 1/96 Theta(1,1)");
    }
}
