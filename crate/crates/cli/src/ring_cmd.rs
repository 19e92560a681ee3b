use clap::{Args, Subcommand};
use lambda_schur::lambda_rings::{
    apply_symfunc, check_bound, even_odd_analysis, hook_split, hook_split_negated, lambda_op, quotient_embedding,
    sigma_op, sum_bound_candidate, CandidateCheck,
};
use lambda_schur::{Error, Partition, Result};
use serde_json::{json, Value};

use crate::output::{status, Outcome};
use crate::rings::{parse_ring_arg, poly_json, symfunc_json, with_ring, AnyRing, CliRing};
use crate::schur_cmd::parse_symfunc;

#[derive(Args, Clone)]
pub struct Target {
    /// Preset (`quot:[2,1]`, `table:lambda2-3`, …), inline JSON, `-` or a JSON file.
    #[arg(long)]
    ring: String,
    /// Element expression, e.g. `gen`, `a1 + b1`, `2*x`.
    #[arg(long, default_value = "gen")]
    elem: String,
}

#[derive(Subcommand)]
pub enum RingOp {
    /// `λⁿ(x)`.
    Lambda {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// `σⁿ(x)`.
    Sigma {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// `φ(x)` for a symmetric function `φ`.
    Apply {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        phi: String,
    },
    /// Checks `s_π(x) = 0` for all `π ⊇ λ` with `|π| ≤ max`.
    Bound {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        max: usize,
    },
    /// Even and odd degrees of `x`, seen up to `max`.
    Evenodd {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        max: usize,
    },
    /// The map `Λ → Λ_m ⊗ Λ_{−n}` for a rectangle `β`, and its kernel.
    Embed {
        #[arg(long)]
        beta: Partition,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Splits an element with bound `(2,1)` after adjoining a line.
    Hooksplit {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        inj_degree: usize,
        /// Split `−x` instead.
        #[arg(long)]
        negate: bool,
    },
    /// Candidate bounds for `x + y` from bounds `λ` and `μ`.
    Sumbound {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        max: usize,
    },
}

pub fn run(op: RingOp, cap: usize) -> Result<Outcome> {
    match op {
        RingOp::Embed { beta, degree } => embed(&beta, degree, cap),
        RingOp::Sumbound { lambda, mu, max } => sumbound(&lambda, &mu, max),
        RingOp::Hooksplit {
            target,
            n_max,
            inj_degree,
            negate,
        } => {
            let spec = parse_ring_arg(&target.ring, cap)?;
            let AnyRing::Quot(ring) = &spec.ring else {
                return Err(Error::Precondition("hooksplit needs a Schur quotient ring (quot:[…] or sym)".into()));
            };
            let x = ring.parse_elem(&target.elem)?;
            let h = if negate {
                hook_split_negated(ring, &x, n_max, inj_degree)?
            } else {
                hook_split(ring, &x, n_max, inj_degree)?
            };
            let pass = h.holds();
            let human = format!(
                "{}: y = {} + a is even of degree {}; identities for n in 3..={}: {}; injective up to degree {}: {}; rank {}; x = {}",
                status(pass),
                h.element,
                h.y_even_degree.map_or("?".to_string(), |d| d.to_string()),
                n_max,
                if h.identity_failures.is_empty() { "ok".to_string() } else { format!("fail at {:?}", h.identity_failures) },
                h.injective_up_to,
                if h.injectivity_failures.is_empty() { "ok".to_string() } else { format!("fail at {:?}", h.injectivity_failures) },
                h.rank,
                h.virtual_sum(),
            );
            let json = json!({
                "ring": spec.label,
                "element": symfunc_json(&h.element),
                "status": status(pass),
                "y_even_degree": h.y_even_degree,
                "identities_checked": h.identities_checked,
                "identity_failures": h.identity_failures,
                "injective_up_to": h.injective_up_to,
                "injectivity_failures": h.injectivity_failures,
                "rank": h.rank,
                "virtual_sum": h.virtual_sum(),
                "lambda3_y": h.lambda3_y.iter().map(symfunc_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::verdict(json, human, pass))
        }
        RingOp::Lambda { ref target, .. }
        | RingOp::Sigma { ref target, .. }
        | RingOp::Apply { ref target, .. }
        | RingOp::Bound { ref target, .. }
        | RingOp::Evenodd { ref target, .. } => {
            let spec = parse_ring_arg(&target.ring, cap)?;
            let label = spec.label.clone();
            with_ring!(&spec.ring, r => on_element(r, &label, &target.elem, &op, cap))
        }
    }
}

fn on_element<R: CliRing>(ring: &R, label: &str, elem: &str, op: &RingOp, cap: usize) -> Result<Outcome> {
    let x = ring.parse_elem(elem)?;
    let base = |extra: Value| -> Value {
        let mut v = json!({ "ring": label, "element": ring.to_json(&x) });
        if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
            m.extend(e);
        }
        v
    };
    let value = |name: &str, y: R::Elem, extra: Value| -> Outcome {
        let shown = ring.render(&y);
        let mut j = base(extra);
        j["operation"] = json!(name);
        j["result"] = ring.to_json(&y);
        j["display"] = json!(shown);
        Outcome::value(j, shown)
    };
    Ok(match op {
        RingOp::Lambda { n, .. } => value("lambda", lambda_op(ring, &x, *n)?, json!({ "n": n })),
        RingOp::Sigma { n, .. } => value("sigma", sigma_op(ring, &x, *n)?, json!({ "n": n })),
        RingOp::Apply { phi, .. } => {
            let f = parse_symfunc(phi, cap)?;
            value("apply", apply_symfunc(ring, &f, &x)?, json!({ "phi": symfunc_json(&f) }))
        }
        RingOp::Bound { lambda, max, .. } => {
            let rep = check_bound(ring, &x, lambda, *max)?;
            let witnesses: Vec<Value> = rep
                .witnesses
                .iter()
                .map(|(p, v)| json!({ "partition": p, "value": ring.to_json(v), "display": ring.render(v) }))
                .collect();
            let mut human = format!("{}: bound {} up to weight {}", status(rep.holds), lambda, max);
            for (p, v) in &rep.witnesses {
                human.push_str(&format!("\n  witness {}: s{}(x) = {}", p, p, ring.render(v)));
            }
            Outcome::verdict(
                base(json!({ "bound": lambda, "up_to": max, "status": status(rep.holds), "witnesses": witnesses })),
                human,
                rep.holds,
            )
        }
        RingOp::Evenodd { max, .. } => {
            let rep = even_odd_analysis(ring, &x, *max)?;
            let show = |d: Option<usize>| d.map_or(format!("none up to {}", max), |d| d.to_string());
            Outcome::value(
                base(json!({ "even_degree": rep.even_degree, "odd_degree": rep.odd_degree, "up_to": max })),
                format!("even degree: {}\nodd degree: {}", show(rep.even_degree), show(rep.odd_degree)),
            )
        }
        _ => unreachable!("handled by run"),
    })
}

fn embed(beta: &Partition, degree: usize, cap: usize) -> Result<Outcome> {
    let f = quotient_embedding(beta, cap)?;
    let target = f.target();
    let names = |v: u32| target.name(v).unwrap_or("?").to_string();
    let images = f.lambda_images(degree)?;
    let mut reports = Vec::new();
    let mut human = Vec::new();
    let mut pass = true;
    for d in 0..=degree {
        let rep = f.kernel_report(d)?;
        pass &= rep.matches();
        human.push(format!(
            "degree {}: {} contained, {} outside, rank {}{}",
            d,
            rep.contained,
            rep.outside,
            rep.rank,
            if rep.matches() { "" } else { "  MISMATCH" }
        ));
        reports.push(serde_json::to_value(&rep).expect("report serializes"));
    }
    let (m, n) = f.degrees();
    let lam: Vec<Value> = images.iter().map(|p| poly_json(p, names)).collect();
    human.insert(0, format!("{}: kernel of Λ → Λ_{} ⊗ Λ_-{} is I_{} up to degree {}", status(pass), m, n, beta, degree));
    for (k, p) in images.iter().enumerate().skip(1) {
        human.push(format!("λ^{}(a1 + b1) = {}", k, p.display_with(names)));
    }
    Ok(Outcome::verdict(
        json!({ "beta": beta, "even_degree": m, "odd_degree": n, "status": status(pass), "kernel": reports, "lambda_images": lam }),
        human.join("\n"),
        pass,
    ))
}

fn candidate_json(c: &CandidateCheck) -> Value {
    json!({
        "candidate": c.candidate,
        "status": status(c.verified),
        "witnesses": c.witnesses,
    })
}

fn sumbound(lambda: &Partition, mu: &Partition, max: usize) -> Result<Outcome> {
    let rep = sum_bound_candidate(lambda, mu, max);
    let line = |name: &str, c: &CandidateCheck| {
        let mut s = format!("{} candidate {}: {}", name, c.candidate, status(c.verified));
        if let Some(w) = c.witnesses.first() {
            s.push_str(&format!(
                " (c^{}_{{{},{}}} ≠ 0; {} witnesses)",
                w.pi,
                w.alpha,
                w.beta,
                c.witnesses.len()
            ));
        }
        s
    };
    let human = format!(
        "bounds {} and {} up to weight {}\n{}\n{}",
        lambda,
        mu,
        max,
        line("componentwise", &rep.componentwise),
        line("weyl", &rep.weyl)
    );
    Ok(Outcome::verdict(
        json!({
            "lambda": lambda,
            "mu": mu,
            "up_to": max,
            "componentwise": candidate_json(&rep.componentwise),
            "weyl": candidate_json(&rep.weyl),
        }),
        human,
        rep.componentwise.verified,
    ))
}
