use clap::{Args, Subcommand, ValueEnum};
use lambda_schur::lambda_rings::LambdaRing;
use lambda_schur::rationality::{
    counterexample_ring, factor_into_lines, hankel_det, is_determinantally_rational, is_schur_rational,
    reconstruct_rational, separation, LineFactorization, RationalPair, SeriesOracle,
};
use lambda_schur::scalar::{Domain, Native, Ring};
use lambda_schur::{Error, MPoly, Partition, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::output::{status, t_polynomial, Outcome};
use crate::rings::{parse_ring_arg, with_ring, CliRing, RingSpec};

#[derive(Args, Clone, Default)]
pub struct Source {
    /// Comma-separated coefficients `r_0, r_1, …` (integers or `a/b`).
    #[arg(long, conflicts_with_all = ["from_element", "input"])]
    coeffs: Option<String>,
    /// `ring:element`; the series is `λ_t` of the element.
    #[arg(long, conflicts_with = "input")]
    from_element: Option<String>,
    /// Use `σ_t` instead of `λ_t` with `--from-element`.
    #[arg(long)]
    sigma: bool,
    /// JSON file (or `-`) with `ring` and either `coefficients` or `element`.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand)]
pub enum SeriesOp {
    /// `det(r_{n+i+j})_{i,j=1..m}`.
    Hankel {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Checks that the `m×m` Hankel determinants vanish past `n0`.
    Detrat {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n0: usize,
        #[arg(long = "N")]
        n_max: usize,
    },
    /// Checks `s_π(f) = 0` for all `π ⊇ μ` whose coefficients lie within `N`.
    Schurrat {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        mu: Partition,
        #[arg(long = "N")]
        n_max: usize,
    },
    /// Finds `f = p/q` with `deg q < m`, `deg p < n0`.
    Reconstruct {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n0: usize,
        /// Last coefficient used; defaults to `n0 + 2m` or all given ones.
        #[arg(long = "N")]
        n_max: Option<usize>,
    },
    /// Factors `p/q` over `Q` into line elements.
    Lines {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// The series `Σ x_n tⁿ` of the ring `R_m`.
    Counterexample {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Check::Both)]
        check: Check,
        #[arg(long = "N", default_value_t = 16)]
        n_max: usize,
        #[arg(long, default_value = "[2,2]")]
        mu: Partition,
        /// Variables `x_n` with `n` above this are treated as unknown.
        #[arg(long, default_value_t = 24)]
        index_cap: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Both,
    Detrat,
    Schurrat,
}

enum Loaded {
    Coeffs { ring: Option<RingSpec>, coeffs: Vec<String> },
    Element { ring: RingSpec, elem: String, sigma: bool },
}

#[derive(Deserialize)]
struct InputFile {
    ring: Option<Value>,
    coefficients: Option<Vec<Value>>,
    element: Option<String>,
    selector: Option<String>,
}

fn load(src: &Source, cap: usize) -> Result<Loaded> {
    if let Some(c) = &src.coeffs {
        return Ok(Loaded::Coeffs {
            ring: None,
            coeffs: c.split(',').map(|s| s.trim().to_string()).collect(),
        });
    }
    if let Some(fe) = &src.from_element {
        let (ring, elem) = fe
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("expected ring:element, got {:?}", fe)))?;
        return Ok(Loaded::Element {
            ring: parse_ring_arg(ring, cap)?,
            elem: elem.to_string(),
            sigma: src.sigma,
        });
    }
    let Some(path) = &src.input else {
        return Err(Error::Parse("give --coeffs, --from-element or --input".into()));
    };
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("reading stdin: {}", e)))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {}: {}", path, e)))?
    };
    let input: InputFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("series JSON: {}", e)))?;
    let ring = match &input.ring {
        None => None,
        Some(Value::String(s)) => Some(parse_ring_arg(s, cap)?),
        Some(v) => Some(parse_ring_arg(&v.to_string(), cap)?),
    };
    let sigma = match input.selector.as_deref() {
        None | Some("lambda") => src.sigma,
        Some("sigma") => true,
        Some(s) => return Err(Error::Parse(format!("unknown selector {:?}", s))),
    };
    match (input.coefficients, input.element, ring) {
        (Some(cs), None, ring) => Ok(Loaded::Coeffs {
            ring,
            coeffs: cs
                .into_iter()
                .map(|v| match v {
                    Value::String(s) => s,
                    v => v.to_string(),
                })
                .collect(),
        }),
        (None, Some(elem), Some(ring)) => Ok(Loaded::Element { ring, elem, sigma }),
        (None, Some(_), None) => Err(Error::Parse("an element needs a ring".into())),
        _ => Err(Error::Parse("give exactly one of coefficients and element".into())),
    }
}

fn parse_scalars<T: std::str::FromStr>(coeffs: &[String]) -> Result<Vec<T>> {
    coeffs
        .iter()
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", s))))
        .collect()
}

/// Ways of showing an element of the coefficient ring.
struct View<'a, E> {
    show: &'a dyn Fn(&E) -> String,
    json: &'a dyn Fn(&E) -> Value,
}

pub fn run(op: SeriesOp, cap: usize) -> Result<Outcome> {
    let source = match &op {
        SeriesOp::Lines { p, q } => return lines(p, q),
        SeriesOp::Counterexample {
            m,
            check,
            n_max,
            mu,
            index_cap,
        } => return counterexample(*m, *check, *n_max, mu, *index_cap),
        SeriesOp::Hankel { source, .. }
        | SeriesOp::Detrat { source, .. }
        | SeriesOp::Schurrat { source, .. }
        | SeriesOp::Reconstruct { source, .. } => source,
    };
    match load(source, cap)? {
        Loaded::Coeffs { ring: None, coeffs } => {
            if coeffs.iter().any(|c| c.contains('/')) {
                let f = SeriesOracle::from_coeffs(Native::<BigRational>::new(), parse_scalars(&coeffs)?)?;
                on_domain(&f, &plain_view(), &op, coeffs.len() - 1, |p| Some(p.clone()))
            } else {
                let f = SeriesOracle::from_coeffs(Native::<BigInt>::new(), parse_scalars(&coeffs)?)?;
                on_domain(&f, &plain_view(), &op, coeffs.len() - 1, |p| Some(p.to_rational()))
            }
        }
        Loaded::Coeffs { ring: Some(spec), coeffs } => {
            with_ring!(&spec.ring, r => {
                let values = coeffs.iter().map(|c| r.parse_elem(c)).collect::<Result<Vec<_>>>()?;
                let known = values.len() - 1;
                dispatch(r, SeriesOracle::from_coeffs(r.clone(), values)?, &op, known)
            })
        }
        Loaded::Element { ring: spec, elem, sigma } => {
            with_ring!(&spec.ring, r => {
                let x = r.parse_elem(&elem)?;
                let f = if sigma {
                    SeriesOracle::sigma_t(r.clone(), x)?
                } else {
                    SeriesOracle::lambda_t(r.clone(), x)?
                };
                dispatch(r, f, &op, r.degree_cap())
            })
        }
    }
}

fn plain_view<T: ToString>() -> View<'static, T> {
    View {
        show: &|c: &T| c.to_string(),
        json: &|c: &T| json!(c.to_string()),
    }
}

/// Runs `op` on a series with coefficients in a presented ring.
/// Reconstruction needs a domain, which among presented rings only the
/// polynomial ones are.
fn dispatch<R: CliRing>(ring: &R, f: SeriesOracle<R>, op: &SeriesOp, known: usize) -> Result<Outcome> {
    let show = |x: &R::Elem| ring.render(x);
    let to_json = |x: &R::Elem| ring.to_json(x);
    let view = View {
        show: &show,
        json: &to_json,
    };
    if !matches!(op, SeriesOp::Reconstruct { .. }) {
        return on_series(&f, &view, op);
    }
    let n = reconstruct_window(op, known)?;
    let Some((poly, coeffs)) = ring.as_polynomials(f.coeffs(n)?) else {
        return Err(Error::Unsupported("reconstruction needs an integral domain; this ring is not one".into()));
    };
    let g = SeriesOracle::from_coeffs(Native::<MPoly<BigInt>>::new(), coeffs)?;
    let show = |x: &MPoly<BigInt>| poly.render(x);
    let to_json = |x: &MPoly<BigInt>| poly.to_json(x);
    let view = View {
        show: &show,
        json: &to_json,
    };
    on_domain(&g, &view, op, n, |_| None)
}

fn reconstruct_window(op: &SeriesOp, known: usize) -> Result<usize> {
    let SeriesOp::Reconstruct { m, n0, n_max, .. } = op else {
        unreachable!("only called for reconstruct")
    };
    Ok(match n_max {
        Some(n) => *n,
        None => known.max(n0 + 2 * m),
    })
}

/// Like [`on_series`], with reconstruction available.
fn on_domain<D: Domain>(
    f: &SeriesOracle<D>,
    view: &View<D::Elem>,
    op: &SeriesOp,
    known: usize,
    over_q: impl Fn(&RationalPair<D::Elem>) -> Option<RationalPair<BigRational>>,
) -> Result<Outcome> {
    let SeriesOp::Reconstruct { m, n0, .. } = op else {
        return on_series(f, view, op);
    };
    let n = reconstruct_window(op, known)?;
    let pair = match reconstruct_rational(f, *m, *n0, n) {
        Ok(pair) => pair,
        Err(Error::NoSolution) => {
            return Ok(Outcome::verdict(
                json!({ "m": m, "n0": n0, "N": n, "status": "FAIL", "pair": null }),
                format!("FAIL: no p/q with deg q < {} and deg p < {} matches through t^{}", m, n0, n),
                false,
            ))
        }
        Err(e) => return Err(e),
    };
    let ring = f.ring();
    let d = &pair.denominator;
    let side = |v: &[D::Elem]| t_polynomial(&v.iter().map(|c| (view.show)(c)).collect::<Vec<_>>());
    let (p, q) = (side(&pair.p), side(&pair.q));
    let bound = pair.schur_bound();
    let factored: Option<LineFactorization> = over_q(&pair).and_then(|r| factor_into_lines(&r).ok());
    let mut human = if ring.is_one(d) {
        format!("PASS: f = ({}) / ({})", p, q)
    } else {
        format!("PASS: f = ({}) / ({}), with p(0) = q(0) = {}", p, q, (view.show)(d))
    };
    human.push_str(&format!("\np = {}\nq = {}\nverified through t^{}\nSchur bound {}", p, q, n, bound));
    if let Some(lf) = &factored {
        human.push_str(&format!("\n{}", describe_lines(lf)));
    }
    let json = json!({
        "m": m,
        "n0": n0,
        "N": n,
        "status": "PASS",
        "pair": {
            "p": pair.p.iter().map(|c| (view.json)(c)).collect::<Vec<_>>(),
            "q": pair.q.iter().map(|c| (view.json)(c)).collect::<Vec<_>>(),
            "denominator": (view.json)(d),
            "display": { "p": p, "q": q },
        },
        "schur_bound": bound,
        "lines": factored,
    });
    Ok(Outcome::verdict(json, human, true))
}

fn on_series<R: Ring>(f: &SeriesOracle<R>, view: &View<R::Elem>, op: &SeriesOp) -> Result<Outcome> {
    match op {
        SeriesOp::Hankel { m, n, .. } => {
            let d = hankel_det(f, *m, *n)?;
            let shown = (view.show)(&d);
            Ok(Outcome::value(json!({ "m": m, "n": n, "value": (view.json)(&d), "display": shown }), shown))
        }
        SeriesOp::Detrat { m, n0, n_max, .. } => {
            let rep = is_determinantally_rational(f, *m, *n0, *n_max)?;
            let range = match (rep.offsets.first(), rep.offsets.last()) {
                (Some(a), Some(b)) => format!("{}..={}", a, b),
                _ => "none".to_string(),
            };
            let mut human = format!("{}: {}×{} Hankel determinants at offsets {}", status(rep.holds()), m, m, range);
            for (n, v) in &rep.witnesses {
                human.push_str(&format!("\n  offset {}: {}", n, (view.show)(v)));
            }
            let witnesses: Vec<Value> = rep
                .witnesses
                .iter()
                .map(|(n, v)| json!({ "offset": n, "value": (view.json)(v) }))
                .collect();
            Ok(Outcome::verdict(
                json!({ "m": m, "n0": n0, "N": n_max, "offsets": rep.offsets, "status": status(rep.holds()), "witnesses": witnesses }),
                human,
                rep.holds(),
            ))
        }
        SeriesOp::Schurrat { mu, n_max, .. } => {
            let rep = is_schur_rational(f, mu, *n_max)?;
            let mut human = format!(
                "{}: s_π(f) = 0 for the {} partitions π ⊇ {} within t^{}",
                status(rep.holds()),
                rep.checked,
                mu,
                n_max
            );
            if !rep.holds() {
                human = format!(
                    "FAIL: {} of {} partitions π ⊇ {} within t^{} have s_π(f) ≠ 0",
                    rep.witnesses.len(),
                    rep.checked,
                    mu,
                    n_max
                );
            }
            for (p, v) in &rep.witnesses {
                human.push_str(&format!("\n  s{}(f) = {}", p, (view.show)(v)));
            }
            let witnesses: Vec<Value> = rep
                .witnesses
                .iter()
                .map(|(p, v)| json!({ "partition": p, "value": (view.json)(v) }))
                .collect();
            Ok(Outcome::verdict(
                json!({ "mu": mu, "N": n_max, "checked": rep.checked, "status": status(rep.holds()), "witnesses": witnesses }),
                human,
                rep.holds(),
            ))
        }
        SeriesOp::Reconstruct { .. } => Err(Error::Unsupported(
            "reconstruction needs an integral domain; this ring is not one".into(),
        )),
        SeriesOp::Lines { .. } | SeriesOp::Counterexample { .. } => unreachable!("handled by run"),
    }
}

fn describe_lines(lf: &LineFactorization) -> String {
    let list = |v: &[BigRational]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        }
    };
    format!(
        "lines (roots α of 1 - αt) in p: {}\nlines in q: {}\nafter cancellation: p {} / q {}",
        list(&lf.lines_plus),
        list(&lf.lines_minus),
        list(&lf.net_plus),
        list(&lf.net_minus)
    )
}

fn lines(p: &str, q: &str) -> Result<Outcome> {
    let parse = |s: &str| -> Result<Vec<BigRational>> {
        parse_scalars(&s.split(',').map(|c| c.trim().to_string()).collect::<Vec<_>>())
    };
    let pair = RationalPair {
        p: parse(p)?,
        q: parse(q)?,
        denominator: BigRational::from_integer(BigInt::from(1)),
        verified_to: 0,
    };
    let lf = factor_into_lines(&pair)?;
    Ok(Outcome::value(serde_json::to_value(&lf).expect("factorization serializes"), describe_lines(&lf)))
}

fn counterexample(m: usize, check: Check, n_max: usize, mu: &Partition, index_cap: usize) -> Result<Outcome> {
    let witness_json = |ws: &[(Partition, MPoly<BigInt>)]| -> Vec<Value> {
        ws.iter().map(|(p, v)| json!({ "partition": p, "terms": v.terms().count() })).collect()
    };
    let hankel_line = |ok: bool| format!("detrat (m = {}): {}", m, status(ok));
    let schur_line = |ok: bool, n: usize, lac: Option<&Partition>| {
        let mut s = format!("schurrat (mu = {}): {}", mu, status(ok));
        if !ok {
            s.push_str(&format!(" ({} witnesses", n));
            if let Some(p) = lac {
                s.push_str(&format!("; diagonal witness {}, conjugate {}", p, p.conjugate()));
            }
            s.push(')');
        }
        s
    };
    match check {
        Check::Both => {
            let sep = separation(m, mu, n_max, index_cap)?;
            let pass = sep.separates();
            let human = format!(
                "{}\n{}\n{}: determinantally rational but not Schur-rational through t^{}",
                hankel_line(sep.hankel.holds()),
                schur_line(sep.schur.holds(), sep.schur.witnesses.len(), sep.lacunary.as_ref()),
                status(pass),
                n_max
            );
            Ok(Outcome::verdict(
                json!({
                    "m": m, "mu": mu, "N": n_max, "index_cap": index_cap,
                    "detrat": status(sep.hankel.holds()),
                    "schurrat": status(sep.schur.holds()),
                    "schur_checked": sep.schur.checked,
                    "witnesses": witness_json(&sep.schur.witnesses),
                    "lacunary": sep.lacunary,
                    "status": status(pass),
                }),
                human,
                pass,
            ))
        }
        Check::Detrat => {
            let (_, f) = counterexample_ring(m, index_cap)?;
            let rep = is_determinantally_rational(&f, m, 0, n_max)?;
            Ok(Outcome::verdict(
                json!({ "m": m, "N": n_max, "index_cap": index_cap, "detrat": status(rep.holds()), "offsets": rep.offsets, "status": status(rep.holds()) }),
                hankel_line(rep.holds()),
                rep.holds(),
            ))
        }
        Check::Schurrat => {
            let (_, f) = counterexample_ring(m, index_cap)?;
            let rep = is_schur_rational(&f, mu, n_max)?;
            Ok(Outcome::verdict(
                json!({
                    "m": m, "mu": mu, "N": n_max, "index_cap": index_cap,
                    "schurrat": status(rep.holds()),
                    "schur_checked": rep.checked,
                    "witnesses": witness_json(&rep.witnesses),
                    "status": status(rep.holds()),
                }),
                schur_line(rep.holds(), rep.witnesses.len(), None),
                rep.holds(),
            ))
        }
    }
}
