use clap::Subcommand;
use lambda_schur::lambda_rings::SchurQuotient;
use lambda_schur::schur::{antipode, coproduct, jacobi_trudi, omega, pieri_e, pieri_h, GenBasis};
use lambda_schur::{Error, Partition, Result, SymFunc};
use serde_json::json;

use crate::expr::{self, indexed, Expr};
use crate::output::Outcome;
use crate::rings::{symfunc_json, CliRing};

#[derive(Subcommand)]
pub enum SchurOp {
    /// Expands an expression such as `e2*e1 - s[2,1]`.
    Expand { expr: String },
    /// Product of two expressions.
    Mul { a: String, b: String },
    /// `e_p·s_π` or `h_p·s_π`.
    Pieri {
        #[arg(value_parser = ["e", "h"])]
        basis: String,
        p: usize,
        partition: Partition,
    },
    /// Jacobi-Trudi expansion of `s_π`.
    Jt {
        partition: Partition,
        #[arg(long, default_value = "h", value_parser = ["e", "h"])]
        basis: String,
    },
    /// Coproduct `Δ(f)`.
    Coproduct { expr: String },
    /// The involution `ω`.
    Omega { expr: String },
    /// The antipode `S = (−1)ⁿ ω` on degree `n`.
    Antipode { expr: String },
}

/// Degree bound read off the expression tree.
fn syntactic_degree(e: &Expr) -> usize {
    match e {
        Expr::Int(_) => 0,
        Expr::Schur(p) => p.weight(),
        Expr::Ident(name) => indexed(name).map_or(0, |(_, k)| k),
        Expr::Add(a, b) | Expr::Sub(a, b) => syntactic_degree(a).max(syntactic_degree(b)),
        Expr::Mul(a, b) => syntactic_degree(a) + syntactic_degree(b),
        Expr::Neg(a) => syntactic_degree(a),
    }
}

pub fn parse_symfunc(s: &str, cap: usize) -> Result<SymFunc> {
    let e = expr::parse(s)?;
    let d = syntactic_degree(&e);
    if d > cap {
        return Err(Error::DegreeCap { requested: d, cap });
    }
    let ring = SchurQuotient::free(cap);
    expr::eval(&ring, &e, &|a| ring.atom(a))
}

fn symfunc_outcome(input: serde_json::Value, f: &SymFunc) -> Outcome {
    Outcome::value(
        json!({ "input": input, "result": symfunc_json(f), "display": f.to_string() }),
        f.to_string(),
    )
}

pub fn run(op: SchurOp, cap: usize) -> Result<Outcome> {
    Ok(match op {
        SchurOp::Expand { expr } => symfunc_outcome(json!(expr), &parse_symfunc(&expr, cap)?),
        SchurOp::Mul { a, b } => {
            let (f, g) = (parse_symfunc(&a, cap)?, parse_symfunc(&b, cap)?);
            let d = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
            if d > cap {
                return Err(Error::DegreeCap { requested: d, cap });
            }
            symfunc_outcome(json!([a, b]), &f.multiply(&g))
        }
        SchurOp::Pieri { basis, p, partition } => {
            let d = p + partition.weight();
            if d > cap {
                return Err(Error::DegreeCap { requested: d, cap });
            }
            let f = if basis == "e" { pieri_e(p, &partition) } else { pieri_h(p, &partition) };
            symfunc_outcome(json!({ "basis": basis, "p": p, "partition": partition }), &f)
        }
        SchurOp::Jt { partition, basis } => {
            if partition.weight() > cap {
                return Err(Error::DegreeCap { requested: partition.weight(), cap });
            }
            let basis: GenBasis = basis.parse()?;
            let expansion = jacobi_trudi(&partition, basis);
            let terms: Vec<_> = expansion
                .terms
                .iter()
                .map(|(c, m)| json!({ "coeff": c.to_string(), "word": m.indices }))
                .collect();
            let display = expansion.to_string();
            Outcome::value(
                json!({ "partition": partition, "basis": basis, "terms": terms, "display": display }),
                display,
            )
        }
        SchurOp::Coproduct { expr } => {
            let f = parse_symfunc(&expr, cap)?;
            let t = coproduct(&f);
            let terms: Vec<_> = t
                .terms()
                .map(|((l, r), c)| json!({ "left": l, "right": r, "coeff": c.to_string() }))
                .collect();
            Outcome::value(json!({ "input": expr, "result": terms, "display": t.to_string() }), t.to_string())
        }
        SchurOp::Omega { expr } => symfunc_outcome(json!(expr), &omega(&parse_symfunc(&expr, cap)?)),
        SchurOp::Antipode { expr } => symfunc_outcome(json!(expr), &antipode(&parse_symfunc(&expr, cap)?)),
    })
}
