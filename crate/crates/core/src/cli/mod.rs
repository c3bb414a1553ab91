//! Request dispatch, JSON payloads and Singular-style text rendering.

mod parse;

pub use parse::{parse_form_n, parse_poly, parse_tpoly};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{fmt_rational, parse_rational, render_coefficient, FormN, FormNm1, MultiPoly, TFrac, TPoly, WeightedVars};
use crate::brieskorn::{ReductionResult, TameContext, Witness, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::gauss_manin::{char_s, squarefree_s, GaussManin};
use crate::mhs::{self, render_grid, DBetaMode};
use crate::picard_fuchs::pfeq_with;

/// Environment variable overriding the degree watchdog.
pub const MAX_DEGREE_ENV: &str = "GMHODGE_MAX_DEGREE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Okbase,
    Abeta,
    S,
    SqfreeS,
    Linear,
    Linearp,
    Nabla,
    Nablamat,
    Dbeta,
    Imk,
    Changebase,
    Pfeq,
    Muldf,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Okbase => "okbase",
            Command::Abeta => "abeta",
            Command::S => "s",
            Command::SqfreeS => "sqfree-s",
            Command::Linear => "linear",
            Command::Linearp => "linearp",
            Command::Nabla => "nabla",
            Command::Nablamat => "nablamat",
            Command::Dbeta => "dbeta",
            Command::Imk => "imk",
            Command::Changebase => "changebase",
            Command::Pfeq => "pfeq",
            Command::Muldf => "muldf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub poly: String,
    pub vars: Vec<String>,
    /// Defaults to all ones.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub command: Command,
    /// `P` for top forms, or `c_0; …; c_n` for `linearp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(default)]
    pub generic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterate: Option<usize>,
}

impl Request {
    pub fn new(poly: &str, vars: &[&str], command: Command) -> Self {
        Request {
            poly: poly.into(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            weights: None,
            command,
            form: None,
            s: None,
            generic: false,
            iterate: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

/// Invariants of the context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Info {
    pub mu: usize,
    pub d: u64,
    pub a_beta: Vec<String>,
}

/// Rational function as numerator and denominator coefficient arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frac {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct X0Json {
    pub coeff: Vec<String>,
    pub x0: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRowJson {
    pub weight: usize,
    pub level: usize,
    pub beta: String,
    pub iterate: usize,
    pub scalar: Frac,
    pub primitive: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Okbase { monomials: Vec<String> },
    Abeta { values: Vec<String> },
    Polynomial { coeffs: Vec<String> },
    Reduction { coeffs: Vec<Vec<String>>, witness: Vec<String> },
    Class { coords: Vec<Frac> },
    Connection { scale: Frac, body: Vec<Vec<Vec<String>>> },
    Dbeta { dbeta: Vec<i64>, exceptional: Vec<String>, mode: String },
    Imk { mid: Vec<Vec<String>>, top: Vec<Vec<String>> },
    Changebase { rows: Vec<BasisRowJson>, det: Vec<String> },
    Pfeq { coeffs: Vec<Vec<String>>, order: usize },
    Muldf { shifted: bool, entries: Vec<Vec<X0Json>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Response {
    pub command: Option<Command>,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<Info>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Payload>,
    #[serde(default)]
    pub diagnostics: Vec<Diagnostic>,
}

impl Response {
    fn failure(command: Option<Command>, info: Option<Info>, e: &Error) -> Self {
        Response {
            command,
            ok: false,
            info,
            result: None,
            diagnostics: vec![Diagnostic {
                severity: Severity::Error,
                message: e.to_string(),
            }],
        }
    }

    /// Process exit status: zero iff there are no error diagnostics.
    pub fn exit_code(&self) -> i32 {
        if self.diagnostics.iter().any(|d| d.severity == Severity::Error) {
            1
        } else {
            0
        }
    }
}

pub fn tpoly_json(p: &TPoly) -> Vec<String> {
    p.coeffs().iter().map(fmt_rational).collect()
}

pub fn tpoly_from_json(v: &[String]) -> Result<TPoly> {
    v.iter()
        .map(|s| parse_rational(s).ok_or_else(|| Error::BadRequest(format!("not a rational: {s}"))))
        .collect::<Result<Vec<_>>>()
        .map(TPoly::from_coeffs)
}

pub fn frac_json(f: &TFrac) -> Frac {
    Frac {
        num: tpoly_json(f.num()),
        den: tpoly_json(f.den()),
    }
}

pub fn frac_from_json(f: &Frac) -> Result<TFrac> {
    Ok(TFrac::new(tpoly_from_json(&f.num)?, tpoly_from_json(&f.den)?))
}

fn max_degree() -> Result<u64> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadRequest(format!("{MAX_DEGREE_ENV} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

/// Builds the tame context of a request.
pub fn context(req: &Request) -> Result<TameContext> {
    let weights = req.weights.clone().unwrap_or_else(|| vec![1; req.vars.len()]);
    let vars = WeightedVars::new(req.vars.clone(), weights)?;
    let f = parse_poly(&req.poly, vars.names())?;
    Ok(TameContext::new(f, vars)?.with_max_degree(max_degree()?))
}

fn info(ctx: &TameContext) -> Info {
    Info {
        mu: ctx.mu(),
        d: ctx.d(),
        a_beta: ctx.a_beta().iter().map(fmt_rational).collect(),
    }
}

/// Runs one request. Failures are reported in the response, never panicked.
pub fn run(req: &Request) -> Response {
    let ctx = match context(req) {
        Ok(c) => c,
        Err(e) => return Response::failure(Some(req.command), None, &e),
    };
    match dispatch(&ctx, req) {
        Ok(result) => Response {
            command: Some(req.command),
            ok: true,
            info: Some(info(&ctx)),
            result: Some(result),
            diagnostics: Vec::new(),
        },
        Err(e) => Response::failure(Some(req.command), Some(info(&ctx)), &e),
    }
}

fn form_top(ctx: &TameContext, req: &Request) -> Result<MultiPoly> {
    parse_poly(req.form.as_deref().unwrap_or("1"), ctx.vars().names())
}

fn gauss_manin<'a>(ctx: &'a TameContext, req: &Request) -> Result<GaussManin<'a>> {
    match &req.s {
        Some(s) => GaussManin::with_s(ctx, parse_tpoly(s)?),
        None => GaussManin::new(ctx),
    }
}

fn mode(req: &Request) -> DBetaMode {
    if req.generic {
        DBetaMode::Generic
    } else {
        DBetaMode::Tracked
    }
}

fn render_nm1(xi: &FormNm1, ctx: &TameContext) -> Vec<String> {
    let names = ctx.vars().names();
    xi.comps()
        .iter()
        .map(|((i, j), p)| format!("[{},{}] {}", names[*i], names[*j], p.render(names, ctx.alpha())))
        .collect()
}

fn render_witness(r: &ReductionResult, ctx: &TameContext) -> Vec<String> {
    let tag = |label: &str, lines: Vec<String>| -> Vec<String> {
        if lines.is_empty() {
            vec![format!("{label} 0")]
        } else {
            lines.into_iter().map(|l| format!("{label} {l}")).collect()
        }
    };
    match &r.witness {
        Witness::Second { xi } => tag("xi", render_nm1(xi, ctx)),
        Witness::Prime { xi, xi1 } => {
            let mut v = tag("xi", render_nm1(xi, ctx));
            v.extend(tag("xi1", render_nm1(xi1, ctx)));
            v
        }
        Witness::OneVarSecond { r } => vec![format!("r {}", r.render())],
        Witness::OneVarPrime { constant } => vec![format!("constant {}", constant.render())],
    }
}

fn dispatch(ctx: &TameContext, req: &Request) -> Result<Payload> {
    let names = ctx.vars().names();
    Ok(match req.command {
        Command::Okbase => Payload::Okbase {
            monomials: ctx.basis().render(names),
        },
        Command::Abeta => Payload::Abeta {
            values: ctx.a_beta().iter().map(fmt_rational).collect(),
        },
        Command::S => Payload::Polynomial {
            coeffs: tpoly_json(&char_s(ctx)),
        },
        Command::SqfreeS => Payload::Polynomial {
            coeffs: tpoly_json(&squarefree_s(ctx)),
        },
        Command::Linear => {
            let r = ctx.reduce_top(&form_top(ctx, req)?)?;
            Payload::Reduction {
                coeffs: r.coeffs.iter().map(tpoly_json).collect(),
                witness: render_witness(&r, ctx),
            }
        }
        Command::Linearp => {
            let text = req
                .form
                .as_deref()
                .ok_or_else(|| Error::BadRequest("linearp needs --form with `;`-separated components".into()))?;
            let w = FormN::from_comps(parse_form_n(text, names)?);
            let r = ctx.reduce_n(&w)?;
            Payload::Reduction {
                coeffs: r.coeffs.iter().map(tpoly_json).collect(),
                witness: render_witness(&r, ctx),
            }
        }
        Command::Nabla => {
            let gm = gauss_manin(ctx, req)?;
            let class = gm.class_of_top(&form_top(ctx, req)?)?;
            let out = gm.nabla_iter(&class, req.iterate.unwrap_or(1))?;
            Payload::Class {
                coords: out.coords.iter().map(frac_json).collect(),
            }
        }
        Command::Nablamat => {
            let m = gauss_manin(ctx, req)?.nablamat();
            Payload::Connection {
                scale: frac_json(&m.scale),
                body: m.body.iter().map(|r| r.iter().map(tpoly_json).collect()).collect(),
            }
        }
        Command::Dbeta => {
            let db = mhs::dbeta(ctx, mode(req))?;
            Payload::Dbeta {
                dbeta: db.dbeta.clone(),
                exceptional: tpoly_json(&db.exceptional),
                mode: if req.generic { "generic" } else { "tracked" }.into(),
            }
        }
        Command::Imk => {
            let db = mhs::dbeta(ctx, mode(req))?;
            let r = mhs::imk(ctx, &db).render(ctx);
            Payload::Imk {
                mid: r[0].clone(),
                top: r[1].clone(),
            }
        }
        Command::Changebase => {
            let gm = gauss_manin(ctx, req)?;
            let db = mhs::dbeta(ctx, mode(req))?;
            let b = mhs::changebase(&gm, &db)?;
            Payload::Changebase {
                rows: b
                    .rows
                    .iter()
                    .map(|r| BasisRowJson {
                        weight: r.weight,
                        level: r.level,
                        beta: ctx.basis().monomials()[r.beta].render(names),
                        iterate: r.iterate,
                        scalar: frac_json(&r.scalar),
                        primitive: r.primitive.iter().map(tpoly_json).collect(),
                    })
                    .collect(),
                det: tpoly_json(&b.det),
            }
        }
        Command::Pfeq => {
            let gm = gauss_manin(ctx, req)?;
            let eq = pfeq_with(&gm, &form_top(ctx, req)?)?;
            Payload::Pfeq {
                coeffs: eq.padded.iter().map(tpoly_json).collect(),
                order: eq.order,
            }
        }
        Command::Muldf => {
            let m = mhs::muldf(ctx, req.generic);
            Payload::Muldf {
                shifted: req.generic,
                entries: m
                    .entries
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|e| X0Json {
                                coeff: tpoly_json(&e.coeff),
                                x0: e.exponent,
                            })
                            .collect()
                    })
                    .collect(),
            }
        }
    })
}

/// Runs newline-delimited JSON requests concurrently, preserving input order.
/// Blank lines are skipped; a malformed line yields an error response.
pub fn batch(input: &str) -> Vec<Response> {
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    lines
        .par_iter()
        .map(|line| match serde_json::from_str::<Request>(line) {
            Ok(req) => run(&req),
            Err(e) => Response::failure(None, None, &Error::BadRequest(e.to_string())),
        })
        .collect()
}

fn cell(v: &[String]) -> String {
    tpoly_from_json(v).map_or_else(|_| "?".into(), |p| render_coefficient(&p))
}

fn frac_cell(f: &Frac) -> String {
    frac_from_json(f).map_or_else(|_| "?".into(), |x| x.render())
}

fn singular_list(sets: &[Vec<String>], indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    for (i, set) in sets.iter().enumerate() {
        out.push_str(&format!("{pad}[{}]:\n", i + 1));
        for (j, m) in set.iter().enumerate() {
            out.push_str(&format!("{pad}   [{}]:\n", j + 1));
            out.push_str(&format!("{pad}      {m}\n"));
        }
    }
}

/// Transcript-style rendering of a response.
pub fn render_text(resp: &Response) -> String {
    if !resp.ok {
        return resp
            .diagnostics
            .iter()
            .map(|d| format!("error: {}\n", d.message))
            .collect();
    }
    let Some(result) = &resp.result else {
        return String::new();
    };
    match result {
        Payload::Okbase { monomials } => format!("{}\n", monomials.join(" ")),
        Payload::Abeta { values } => format!("{}\n", values.join(",")),
        Payload::Polynomial { coeffs } => format!("{}\n", cell(coeffs)),
        Payload::Reduction { coeffs, witness } => {
            let mut s = coeffs.iter().map(|c| cell(c)).collect::<Vec<_>>().join(",");
            s.push('\n');
            for w in witness {
                s.push_str(w);
                s.push('\n');
            }
            s
        }
        Payload::Class { coords } => {
            format!("{}\n", coords.iter().map(frac_cell).collect::<Vec<_>>().join(","))
        }
        Payload::Connection { scale, body } => {
            let cells: Vec<Vec<String>> = body.iter().map(|r| r.iter().map(|c| cell(c)).collect()).collect();
            format!("{}\n \n{}", frac_cell(scale), render_grid(&cells))
        }
        Payload::Dbeta { dbeta, .. } => format!(
            "{}\n",
            dbeta.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        ),
        Payload::Imk { mid, top } => {
            let mut s = String::from("[1]:\n");
            singular_list(mid, 3, &mut s);
            s.push_str("[2]:\n");
            singular_list(top, 3, &mut s);
            s
        }
        Payload::Changebase { rows, det } => {
            let scalars: Vec<String> = rows.iter().map(|r| frac_cell(&r.scalar)).collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.primitive.iter().map(|c| cell(c)).collect())
                .collect();
            format!("{}\n \n{}{}\n", scalars.join(","), render_grid(&cells), cell(det))
        }
        Payload::Pfeq { coeffs, .. } => coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("_[1,{}]={}\n", i + 1, cell(c)))
            .collect(),
        Payload::Muldf { entries, .. } => {
            let m = mhs::X0Matrix {
                entries: entries
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|e| mhs::X0Entry {
                                coeff: tpoly_from_json(&e.coeff).unwrap_or_else(|_| TPoly::zero()),
                                exponent: e.x0,
                            })
                            .collect()
                    })
                    .collect(),
            };
            m.render()
        }
    }
}
