//! Acceptance criteria 1–14. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;

use lambda_schur::lambda_calculus::{composition_polynomial, LambdaSymbol};
use lambda_schur::lambda_rings::{
    check_bound, hook_split, hook_split_negated, lambda_op, negate_schur_identity, quotient_embedding, LambdaRing,
    PolyLambdaRing, SchurQuotient, TablePreset, TableRing,
};
use lambda_schur::partitions::{partitions_of, partitions_up_to};
use lambda_schur::rationality::{
    factor_into_lines, is_determinantally_rational, is_schur_rational, reconstruct_rational, separation, SeriesOracle,
};
use lambda_schur::scalar::{Native, Ring};
use lambda_schur::schur::{
    antipode, coproduct, counit, jacobi_trudi, monomial_expansion_oracle, omega, schur_polynomial, schur_product,
    GenBasis, SignedExpansion,
};
use lambda_schur::{MPoly, Partition, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn lr_oracle() -> Outcome {
    let n = 8;
    let mut pairs = 0;
    for a in 0..=8 {
        for b in 0..=(8 - a) {
            for mu in partitions_of(a) {
                for nu in partitions_of(b) {
                    let product: SymFunc = schur_product(&mu, &nu);
                    let lhs = monomial_expansion_oracle(&product, n);
                    let rhs = &schur_polynomial(&mu, n) * &schur_polynomial(&nu, n);
                    ensure!(lhs == rhs, "s{}·s{} disagrees with the polynomial product", mu, nu);
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{} pairs in {} variables", pairs, n))
}

fn jacobi_trudi_closure() -> Outcome {
    let all = partitions_up_to(8);
    for pi in &all {
        for basis in [GenBasis::H, GenBasis::E] {
            let back: SymFunc = jacobi_trudi(pi, basis).to_schur();
            ensure!(back == SymFunc::schur(pi.clone()), "{:?} expansion of s{} re-expands to {}", basis, pi, back);
        }
    }
    Ok(format!("{} partitions, both bases", all.len()))
}

type Triple = BTreeMap<(Partition, Partition, Partition), BigInt>;

fn coassociativity(f: &SymFunc) -> bool {
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in coproduct(f).terms() {
        for ((a1, a2), d) in coproduct(&SymFunc::schur(a.clone())).terms() {
            *left.entry((a1.clone(), a2.clone(), b.clone())).or_insert_with(BigInt::zero) += c * d;
        }
        for ((b1, b2), d) in coproduct(&SymFunc::schur(b.clone())).terms() {
            *right.entry((a.clone(), b1.clone(), b2.clone())).or_insert_with(BigInt::zero) += c * d;
        }
    }
    left.retain(|_, v| !v.is_zero());
    right.retain(|_, v| !v.is_zero());
    left == right
}

fn hopf_suite() -> Outcome {
    let mut elements: Vec<SymFunc> = (1..=6).map(SymFunc::e).collect();
    elements.extend(partitions_up_to(6).into_iter().map(SymFunc::schur));
    for f in &elements {
        ensure!(coassociativity(f), "Δ is not coassociative on {}", f);
        let unit = SymFunc::one().scale(&counit(f));
        let left = coproduct(f).map_legs(antipode, |x| x.clone()).contract();
        let right = coproduct(f).map_legs(|x| x.clone(), antipode).contract();
        ensure!(left == unit && right == unit, "antipode axiom fails on {}", f);
    }
    for f in &elements {
        for g in &elements {
            if f.degree().unwrap_or(0) + g.degree().unwrap_or(0) > 6 {
                continue;
            }
            ensure!(
                coproduct(&f.multiply(g)) == coproduct(f).multiply(&coproduct(g)),
                "Δ({}·{}) is not Δ({})Δ({})",
                f,
                g,
                f,
                g
            );
        }
    }
    // ω swaps h_n and e_n, so it sends det(h_{π_i−i+j}) to det(e_{π_i−i+j}) = s_π′.
    let all = partitions_up_to(8);
    for pi in &all {
        let h = jacobi_trudi(pi, GenBasis::H);
        let swapped = SignedExpansion {
            terms: h
                .terms
                .iter()
                .map(|(c, m)| {
                    let mut m = m.clone();
                    m.basis = GenBasis::E;
                    (c.clone(), m)
                })
                .collect(),
        };
        let image: SymFunc = swapped.to_schur();
        ensure!(image == SymFunc::schur(pi.conjugate()), "ω(s{}) is {} via e/h swap", pi, image);
        ensure!(omega(&SymFunc::schur(pi.clone())) == image, "omega(s{}) disagrees", pi);
    }
    Ok(format!("{} elements up to degree 6; ω on {} partitions", elements.len(), all.len()))
}

fn scholium() -> Outcome {
    use LambdaSymbol::X;
    let p23 = composition_polynomial(2, 3).map_err(|e| e.to_string())?;
    let expected = lambda_schur::lambda_calculus::LambdaPolynomial::from_terms([
        (big(1), vec![(X, 6, 1)]),
        (big(-1), vec![(X, 1, 1), (X, 5, 1)]),
        (big(1), vec![(X, 4, 1), (X, 2, 1)]),
    ]);
    ensure!(p23 == expected, "P(2,3) = {}", p23);
    let mut checked = 0;
    for m in 1..=8 {
        for n in 1..=8 / m {
            let poly = composition_polynomial(m, n).map_err(|e| e.to_string())?;
            ensure!(
                poly.max_index_per_term(X).iter().all(|i| i.is_some_and(|i| i >= n)),
                "P({},{}) has a monomial without λⁱx, i ≥ {}",
                m,
                n,
                n
            );
            // λᵐ(λⁿx) computed in Z[l_1..l_mn] against P(m,n)(λ¹x, …)
            let ring = PolyLambdaRing::split(m * n, m * n);
            let x = ring.universal_element();
            let xs = ring.lambda_values(&x, m * n).map_err(|e| e.to_string())?;
            let direct = lambda_op(&ring, &xs[n], m).map_err(|e| e.to_string())?;
            let via = poly.evaluate(&ring, &xs, &[]).map_err(|e| e.to_string())?;
            ensure!(direct == via, "P({},{}) disagrees with λ^{}(λ^{}x) on {} lines", m, n, m, n, m * n);
            checked += 1;
        }
    }
    Ok(format!("P(2,3) as printed; {} pairs (m,n) with mn ≤ 8", checked))
}

fn lambda21() -> Outcome {
    let ring = SchurQuotient::new(p(&[2, 1]), 8);
    let x = ring.generator();
    let y = lambda_op(&ring, &x, 2).map_err(|e| e.to_string())?;
    for i in 0..=3u32 {
        let yi = ring.pow(&y, i);
        let even = lambda_op(&ring, &x, 2 * i as usize).map_err(|e| e.to_string())?;
        let odd = lambda_op(&ring, &x, 2 * i as usize + 1).map_err(|e| e.to_string())?;
        ensure!(even == yi, "λ^{}(x) = {} is not y^{}", 2 * i, even, i);
        ensure!(odd == ring.mul(&x, &yi), "λ^{}(x) = {} is not x·y^{}", 2 * i + 1, odd, i);
    }
    let y2 = ring.mul(&y, &y);
    ensure!(y2 == ring.mul(&ring.mul(&x, &x), &y), "y² = {} is not x²y", y2);
    Ok(format!("y = λ²(x) = {}; y² = x²y = {}", y, y2))
}

fn kernel_22() -> Outcome {
    let f = quotient_embedding(&p(&[2, 2]), 8).map_err(|e| e.to_string())?;
    for d in 0..=8 {
        let rep = f.kernel_report(d).map_err(|e| e.to_string())?;
        ensure!(rep.matches(), "degree {}: {:?}", d, rep);
    }
    let t = f.target();
    let a = t.element("a1").map_err(|e| e.to_string())?;
    let b = t.element("b1").map_err(|e| e.to_string())?;
    let images = f.lambda_images(7).map_err(|e| e.to_string())?;
    for n in 0..=6u32 {
        let want = &(&a + &b) * &b.pow(n);
        ensure!(images[n as usize + 1] == want, "λ^{}(x) ↦ {:?}", n + 1, images[n as usize + 1]);
    }
    Ok("kernel is I_(2,2) in degrees 0..=8; λ^{n+1}(x) ↦ (a+b)bⁿ for n ≤ 6".into())
}

fn lambda23() -> Outcome {
    let ring = TableRing::new(TablePreset::Lambda23, 12);
    let x = ring.x();
    for i in 1..=3 {
        let even = lambda_op(&ring, &x, 2 * i).map_err(|e| e.to_string())?;
        let odd = lambda_op(&ring, &x, 2 * i + 1).map_err(|e| e.to_string())?;
        ensure!(ring.is_zero(&even), "λ^{}(x) = {}", 2 * i, ring.render(&even));
        ensure!(!ring.is_zero(&odd), "λ^{}(x) = 0", 2 * i + 1);
    }
    let fails = check_bound(&ring, &x, &p(&[1, 1]), 8).map_err(|e| e.to_string())?;
    ensure!(!fails.holds, "bound (1,1) holds");
    ensure!(fails.witnesses.iter().any(|(w, _)| *w == p(&[1, 1, 1])), "(1,1,1) is not a witness");
    let holds = check_bound(&ring, &x, &p(&[2, 2]), 8).map_err(|e| e.to_string())?;
    ensure!(holds.holds, "bound (2,2) fails at {:?}", holds.witnesses.first().map(|w| &w.0));
    Ok(format!("(1,1) fails with {} witnesses incl. (1,1,1); (2,2) holds to 8", fails.witnesses.len()))
}

fn hook_splitting() -> Outcome {
    let ring = SchurQuotient::new(p(&[2, 1]), 12);
    let x = ring.generator();
    let h = hook_split(&ring, &x, 6, 6).map_err(|e| e.to_string())?;
    ensure!(h.holds(), "split fails: {:?}", h);
    ensure!(h.identities_checked == vec![3, 4, 5, 6], "identities checked for {:?}", h.identities_checked);
    ensure!(h.injective_up_to >= 6, "injectivity checked to {}", h.injective_up_to);
    ensure!(h.rank == 1, "rank {}", h.rank);
    let neg = hook_split_negated(&ring, &x, 6, 6).map_err(|e| e.to_string())?;
    ensure!(neg.holds() && neg.rank == -1, "negated split: holds {}, rank {}", neg.holds(), neg.rank);
    Ok(format!("x = {}; −x split gives rank −1", h.virtual_sum()))
}

fn rationality_bridge() -> Outcome {
    let bounds = [p(&[2, 1]), p(&[2, 2]), p(&[3, 2])];
    let n = 10;
    let mut compared = 0;
    for lambda in &bounds {
        let ring = SchurQuotient::new(lambda.clone(), n);
        let x = ring.generator();
        let f = SeriesOracle::lambda_t(ring.clone(), x.clone()).map_err(|e| e.to_string())?;
        for mu in &bounds {
            let b = check_bound(&ring, &x, mu, n).map_err(|e| e.to_string())?;
            let s = is_schur_rational(&f, mu, n).map_err(|e| e.to_string())?;
            let bw: Vec<_> = b.witnesses.iter().map(|w| &w.0).collect();
            let sw: Vec<_> = s.witnesses.iter().map(|w| &w.0).collect();
            ensure!(b.holds == s.holds() && bw == sw, "Λ_{}, bound {}: check_bound {} vs minors {}", lambda, mu, b.holds, s.holds());
            ensure!(lambda != mu || b.holds, "generator of Λ_{} violates its bound", lambda);
            compared += 1;
        }
    }
    Ok(format!("{} (ring, bound) pairs agree to N = {}", compared, n))
}

fn separation_m2() -> Outcome {
    let mut missing = Vec::new();
    let mut count = 0;
    for w in 1..=4 {
        for mu in partitions_of(w) {
            let sep = separation(2, &mu, 16, 24).map_err(|e| e.to_string())?;
            ensure!(sep.hankel.holds(), "Hankel check fails for m = 2");
            ensure!(!sep.schur.holds(), "Schur check passes for μ = {}", mu);
            if sep.lacunary.is_none() {
                missing.push(mu.to_string());
            }
            count += 1;
        }
    }
    ensure!(
        missing.is_empty(),
        "Schur-rationality fails for all {} μ, but no lacunary witness with |π| ≤ 16 for μ in {}",
        count,
        missing.join(", ")
    );
    Ok(format!("all {} μ with |μ| ≤ 4 separated, each with a lacunary witness", count))
}

/// Coefficients of `p/q` to `t^n`, with `q(0) = 1`.
fn expand<R: Ring>(ring: &R, p: &[R::Elem], q: &[R::Elem], n: usize) -> Vec<R::Elem> {
    let mut r: Vec<R::Elem> = Vec::new();
    for k in 0..=n {
        let mut v = p.get(k).cloned().unwrap_or_else(|| ring.zero());
        for j in 1..q.len().min(k + 1) {
            v = ring.sub(&v, &ring.mul(&q[j], &r[k - j]));
        }
        r.push(v);
    }
    r
}

fn from_roots(roots: &[i64]) -> Vec<BigInt> {
    let mut acc = vec![big(1)];
    for &a in roots {
        let mut next = acc.clone();
        next.push(big(0));
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] -= c * a;
        }
        acc = next;
    }
    acc
}

fn borel() -> Outcome {
    let integer_cases: [(&[i64], &[i64]); 5] = [
        (&[], &[1]),
        (&[2], &[-1]),
        (&[3, -2], &[1, 5]),
        (&[1, 1, 4], &[2]),
        (&[-3], &[2, 2, -1]),
    ];
    let zz = Native::<BigInt>::new();
    for (plus, minus) in integer_cases {
        let (pp, qq) = (from_roots(plus), from_roots(minus));
        let (m, n0) = (qq.len(), pp.len());
        let n = n0 + 2 * m + 4;
        let f = SeriesOracle::from_coeffs(zz, expand(&zz, &pp, &qq, n)).map_err(|e| e.to_string())?;
        ensure!(is_determinantally_rational(&f, m, n0, n).map_err(|e| e.to_string())?.holds(), "Hankel minors survive for {:?}/{:?}", plus, minus);
        let pair = reconstruct_rational(&f, m, n0, n).map_err(|e| e.to_string())?;
        ensure!(pair.p == pp && pair.q == qq, "recovered {:?}/{:?} for roots {:?}/{:?}", pair.p, pair.q, plus, minus);
        let lines = factor_into_lines(&pair.to_rational()).map_err(|e| e.to_string())?;
        let as_q = |v: &[i64]| -> Vec<BigRational> {
            let mut r: Vec<BigRational> = v.iter().map(|&a| BigRational::from_integer(big(a))).collect();
            r.sort();
            r
        };
        let sorted = |mut v: Vec<BigRational>| {
            v.sort();
            v
        };
        ensure!(
            sorted(lines.lines_plus) == as_q(plus) && sorted(lines.lines_minus) == as_q(minus),
            "planted lines {:?}/{:?} not recovered",
            plus,
            minus
        );
    }
    let ring = Native::<MPoly<BigInt>>::new();
    let (a, b) = (MPoly::<BigInt>::var(0), MPoly::<BigInt>::var(1));
    let one = MPoly::<BigInt>::one();
    let c = |k: i64| MPoly::constant(big(k));
    let poly_cases: Vec<(Vec<MPoly<BigInt>>, Vec<MPoly<BigInt>>)> = vec![
        (vec![one.clone(), a.clone()], vec![one.clone(), -b.clone()]),
        (vec![one.clone()], vec![one.clone(), -(&a + &b), &a * &b]),
        (vec![one.clone(), c(2), &a * &b], vec![one.clone(), -a.clone()]),
        (vec![one.clone(), b.clone(), c(0), a.clone()], vec![one.clone(), c(1), c(0), -(&a * &a)]),
        (vec![one.clone(), &a - &b], vec![one.clone(), b.clone(), a.clone(), &b * &b]),
    ];
    for (pp, qq) in &poly_cases {
        let (m, n0) = (qq.len(), pp.len());
        let n = n0 + 2 * m + 2;
        let f = SeriesOracle::from_coeffs(ring, expand(&ring, pp, qq, n)).map_err(|e| e.to_string())?;
        ensure!(is_determinantally_rational(&f, m, n0, n).map_err(|e| e.to_string())?.holds(), "Hankel minors survive over Z[a,b]");
        let pair = reconstruct_rational(&f, m, n0, n).map_err(|e| e.to_string())?;
        ensure!(&pair.p == pp && &pair.q == qq, "over Z[a,b] recovered {:?}/{:?}", pair.p, pair.q);
    }
    Ok(format!("{} series over Z, {} over Z[a,b]", integer_cases.len(), poly_cases.len()))
}

fn sign_lemma() -> Outcome {
    let ring = PolyLambdaRing::free(8);
    let x = ring.universal_element();
    let mut unsigned_failures = Vec::new();
    let all = partitions_up_to(8);
    for pi in &all {
        let check = negate_schur_identity(&ring, &x, pi).map_err(|e| e.to_string())?;
        ensure!(check.signed_holds, "signed identity fails for {}", pi);
        if !check.unsigned_holds && pi.weight() % 2 == 1 {
            unsigned_failures.push(pi.clone());
        }
    }
    ensure!(!unsigned_failures.is_empty(), "the unsigned identity never fails");
    Ok(format!("signed holds on {} partitions; unsigned fails first at {}", all.len(), unsigned_failures[0]))
}

fn nilpotence() -> Outcome {
    let ring = TableRing::new(TablePreset::Nil, 12);
    let e = ring.x();
    ensure!(ring.is_zero(&ring.mul(&e, &e)), "s₁² ≠ 0");
    ensure!(!ring.is_zero(&e), "s₁ = 0");
    for d in 2..=6 {
        for pi in partitions_of(d) {
            ensure!(pi.contains(&p(&[2])) || pi.contains(&p(&[1, 1])), "s{} lies outside I_(2) + I_(1,1)", pi);
        }
    }
    for bound in [p(&[2]), p(&[1, 1])] {
        let rep = check_bound(&ring, &e, &bound, 6).map_err(|e| e.to_string())?;
        ensure!(rep.holds, "bound {} fails on ε", bound);
    }
    Ok("s₁² = 0; quotient basis is {1, s₁} through degree 6".into())
}

#[derive(serde::Deserialize)]
struct Case {
    name: String,
    args: Vec<String>,
    code: i32,
}

fn goldens() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../cli/tests/golden");
    let text = std::fs::read_to_string(dir.join("cases.json")).map_err(|e| e.to_string())?;
    let cases: Vec<Case> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    for case in &cases {
        let mut args = vec!["--format".to_string(), "json".to_string()];
        args.extend(case.args.iter().cloned());
        let run = lambda_schur_cli::invoke(args);
        ensure!(run.code == case.code, "{}: exit code {} ({})", case.name, run.code, run.stderr.trim());
        let want = std::fs::read_to_string(dir.join(format!("{}.json", case.name))).map_err(|e| e.to_string())?;
        ensure!(run.stdout == want, "{}: output differs from golden file", case.name);
    }
    Ok(format!("{} invocations byte-identical", cases.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("LR oracle equivalence", lr_oracle),
        ("Jacobi-Trudi closure", jacobi_trudi_closure),
        ("Hopf suite", hopf_suite),
        ("composition polynomial P(2,3) and index property", scholium),
        ("Λ_(2,1) relations", lambda21),
        ("kernel of the (2,2) embedding", kernel_22),
        ("λ-ring Λ_(2,2)/(λ^even) suite", lambda23),
        ("(2,1) splitting", hook_splitting),
        ("bound ⟺ Schur-rationality bridge", rationality_bridge),
        ("separation for R_2", separation_m2),
        ("rational reconstruction", borel),
        ("sign of the negation identity", sign_lemma),
        ("even-and-odd nilpotence", nilpotence),
        ("CLI golden files", goldens),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {}", msg))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({:.1} s): {}", i + 1, name, secs, detail),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({:.1} s): {}", i + 1, name, secs, reason);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
