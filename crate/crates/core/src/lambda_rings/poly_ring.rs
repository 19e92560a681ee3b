//! Polynomial λ-rings `Z[v_1, …, v_r]` whose variables are line elements,
//! negated line elements, or the λ-/σ-components of even and odd elements.
//!
//! This one presentation covers `Λ_n`, `Λ_{−n}`, their tensor products,
//! `Ω_n`, and `Λ` itself written in the elementary generators.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_cap, Error, Result};
use crate::lambda_calculus::{composition_polynomial_raw, product_polynomial_raw, series_from_lambdas, series_invert};
use crate::poly::{MPoly, Monomial};
use crate::scalar::Ring;

use super::{multiply_values, series_power, LambdaRing};

/// How a variable behaves under λ-operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `λ_t(ℓ) = 1 + ℓt`.
    Line,
    /// `σ_t(b) = 1 + bt`, so `λ_t(b) = 1/(1 − bt)`.
    NegLine,
    /// `λᵏ(a)` for the even element `a` of the given group.
    Even { group: usize, k: usize },
    /// `σᵏ(b)` for the odd element `b` of the given group.
    Odd { group: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Group {
    odd: bool,
    /// `None` for a free generator (components up to the cap).
    degree: Option<usize>,
    vars: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Line,
    NegLine,
    General,
}

/// A polynomial λ-ring over Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyLambdaRing {
    gens: BTreeMap<u32, (String, Generator)>,
    groups: Vec<Group>,
    next_var: u32,
    cap: usize,
}

impl PolyLambdaRing {
    /// Z with no variables.
    pub fn new(cap: usize) -> Self {
        PolyLambdaRing {
            gens: BTreeMap::new(),
            groups: Vec::new(),
            next_var: 0,
            cap,
        }
    }

    /// `Λ_n = Z[a_1..a_n]`.
    pub fn even(n: usize, cap: usize) -> Self {
        let mut r = Self::new(cap);
        r.add_even("a", Some(n));
        r
    }

    /// `Λ_{−n} = Z[b_1..b_n]`.
    pub fn odd(n: usize, cap: usize) -> Self {
        let mut r = Self::new(cap);
        r.add_odd("b", Some(n));
        r
    }

    /// `Λ_m ⊗ Λ_{−n} = Z[a_1..a_m, b_1..b_n]`.
    pub fn tensor(m: usize, n: usize, cap: usize) -> Self {
        let mut r = Self::new(cap);
        r.add_even("a", Some(m));
        r.add_odd("b", Some(n));
        r
    }

    /// `Ω_n = Z[l_1..l_n]`, every `l_i` a line element.
    pub fn split(n: usize, cap: usize) -> Self {
        let mut r = Self::new(cap);
        for i in 1..=n {
            r.add_line(&format!("l{}", i));
        }
        r
    }

    /// Λ as `Z[e_1..e_cap]`, with `e_k` stored as variable `k`.
    pub fn free(cap: usize) -> Self {
        let mut r = Self::new(cap);
        r.next_var = 1;
        r.add_even("e", None);
        r
    }

    pub fn add_line(&mut self, name: &str) -> u32 {
        self.push(name.to_string(), Generator::Line)
    }

    pub fn add_neg_line(&mut self, name: &str) -> u32 {
        self.push(name.to_string(), Generator::NegLine)
    }

    /// Adds `λ¹(a)..λ^d(a)` for a new even `a` of degree `d` (free when
    /// `None`), named `prefix1, prefix2, …`.
    pub fn add_even(&mut self, prefix: &str, degree: Option<usize>) -> Vec<u32> {
        self.add_group(prefix, degree, false)
    }

    /// Adds `σ¹(b)..σ^d(b)` for a new odd `b` of degree `d`.
    pub fn add_odd(&mut self, prefix: &str, degree: Option<usize>) -> Vec<u32> {
        self.add_group(prefix, degree, true)
    }

    fn add_group(&mut self, prefix: &str, degree: Option<usize>, odd: bool) -> Vec<u32> {
        let group = self.groups.len();
        let top = degree.unwrap_or(self.cap);
        let vars: Vec<u32> = (1..=top)
            .map(|k| {
                let g = if odd { Generator::Odd { group, k } } else { Generator::Even { group, k } };
                self.push(format!("{}{}", prefix, k), g)
            })
            .collect();
        self.groups.push(Group { odd, degree, vars: vars.clone() });
        vars
    }

    fn push(&mut self, name: String, g: Generator) -> u32 {
        let v = self.next_var;
        self.next_var += 1;
        self.gens.insert(v, (name, g));
        v
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Variable index of a named generator.
    pub fn var(&self, name: &str) -> Option<u32> {
        self.gens.iter().find(|(_, (n, _))| n == name).map(|(&v, _)| v)
    }

    pub fn name(&self, v: u32) -> Option<&str> {
        self.gens.get(&v).map(|(n, _)| n.as_str())
    }

    pub fn generator(&self, v: u32) -> Option<Generator> {
        self.gens.get(&v).map(|&(_, g)| g)
    }

    /// Variables in index order with their names.
    pub fn variables(&self) -> impl Iterator<Item = (u32, &str, Generator)> {
        self.gens.iter().map(|(&v, (n, g))| (v, n.as_str(), *g))
    }

    /// The element given by a named generator.
    pub fn element(&self, name: &str) -> Result<MPoly<BigInt>> {
        self.var(name)
            .map(MPoly::var)
            .ok_or_else(|| Error::Parse(format!("unknown generator {:?}", name)))
    }

    /// Sum of the degree-one generators: `a1 + b1` in a tensor presentation,
    /// `l1 + … + ln` in `Ω_n`.
    pub fn universal_element(&self) -> MPoly<BigInt> {
        let mut x = MPoly::zero();
        for g in &self.groups {
            if let Some(&v) = g.vars.first() {
                x.add_term(Monomial::var(v), BigInt::one());
            }
        }
        for (&v, (_, g)) in &self.gens {
            if matches!(g, Generator::Line | Generator::NegLine) {
                x.add_term(Monomial::var(v), BigInt::one());
            }
        }
        x
    }

    fn shape(&self, v: u32) -> Shape {
        match self.gens.get(&v).map(|&(_, g)| g) {
            Some(Generator::Line) => Shape::Line,
            Some(Generator::NegLine) => Shape::NegLine,
            Some(Generator::Even { group, k: 1 }) if self.groups[group].degree == Some(1) => Shape::Line,
            Some(Generator::Odd { group, k: 1 }) if self.groups[group].degree == Some(1) => Shape::NegLine,
            Some(_) => Shape::General,
            None => panic!("variable {} is not a generator of this ring", v),
        }
    }

    fn one_series(&self, n: usize) -> Vec<MPoly<BigInt>> {
        let mut s = vec![MPoly::zero(); n + 1];
        s[0] = MPoly::one();
        s
    }

    /// `[λ⁰(a), …, λ^top(a)]` for the even element of `group`.
    fn group_values(&self, group: usize, top: usize) -> Result<Vec<MPoly<BigInt>>> {
        let g = &self.groups[group];
        let mut vals = vec![MPoly::one()];
        for j in 1..=top {
            let v = match g.vars.get(j - 1) {
                Some(&var) => {
                    let sign = if g.odd && j % 2 == 1 { -BigInt::one() } else { BigInt::one() };
                    MPoly::term(Monomial::var(var), sign)
                }
                None if g.degree.is_some() => MPoly::zero(),
                None => return Err(Error::DegreeCap { requested: j, cap: self.cap }),
            };
            vals.push(v);
        }
        Ok(vals)
    }

    /// λ-series of a single variable of general shape.
    fn atom_series(&self, v: u32, n: usize) -> Result<Vec<MPoly<BigInt>>> {
        let (group, k, odd) = match self.generator(v) {
            Some(Generator::Even { group, k }) => (group, k, false),
            Some(Generator::Odd { group, k }) => (group, k, true),
            _ => unreachable!("line-shaped variables are handled separately"),
        };
        if k > 1 {
            check_cap(n * k, self.cap)?;
        }
        // for an odd group the values are those of the even element −b
        let vals = self.group_values(group, n * k)?;
        let mut s = vec![MPoly::one()];
        for m in 1..=n {
            s.push(composition_polynomial_raw(m, k).evaluate(self, &vals, &[])?);
        }
        if odd && k % 2 == 1 {
            // σᵏ(b) = −λᵏ(−b)
            let f = series_from_lambdas(self, s, n)?;
            s = series_invert(self, &f)?.into_coeffs();
        }
        Ok(s)
    }

    /// `λ_t(uv)` from `λ_t(u)` and `λ_t(v)`.
    fn product_series(&self, a: &[MPoly<BigInt>], b: &[MPoly<BigInt>], n: usize) -> Result<Vec<MPoly<BigInt>>> {
        let is_line = |s: &[MPoly<BigInt>]| s.iter().skip(2).all(|c| c.is_zero());
        if is_line(a) || is_line(b) {
            let (l, other) = if is_line(a) { (&a[1], b) } else { (&b[1], a) };
            let mut pw = MPoly::one();
            let mut out = Vec::with_capacity(n + 1);
            for c in other.iter().take(n + 1) {
                out.push(c * &pw);
                pw = &pw * l;
            }
            return Ok(out);
        }
        let mut out = vec![MPoly::one()];
        for k in 1..=n {
            out.push(product_polynomial_raw(k).evaluate(self, a, b)?);
        }
        Ok(out)
    }

    fn monomial_series(
        &self,
        m: &Monomial,
        n: usize,
        cache: &mut HashMap<u32, Vec<MPoly<BigInt>>>,
    ) -> Result<Vec<MPoly<BigInt>>> {
        let mut line_part = Monomial::one();
        let mut parity = 0u32;
        let mut general: Option<Vec<MPoly<BigInt>>> = None;
        for &(v, e) in m.pairs() {
            match self.shape(v) {
                Shape::Line => line_part = line_part.mul(&Monomial::var(v).pow(e)),
                Shape::NegLine => {
                    line_part = line_part.mul(&Monomial::var(v).pow(e));
                    parity += e;
                }
                Shape::General => {
                    if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(v) {
                        e.insert(self.atom_series(v, n)?);
                    }
                    let atom = &cache[&v];
                    for _ in 0..e {
                        general = Some(match general {
                            None => atom.clone(),
                            Some(prev) => self.product_series(&prev, atom, n)?,
                        });
                    }
                }
            }
        }
        // λ_t(1) = 1 + t
        let mut g = general.unwrap_or_else(|| {
            let mut s = self.one_series(n);
            if n >= 1 {
                s[1] = MPoly::one();
            }
            s
        });
        if parity % 2 == 1 {
            // λᵏ(−L·G) = (−L)ᵏ σᵏ(G) for a line L = −U
            let f = series_from_lambdas(self, g, n)?;
            g = crate::lambda_calculus::sigma_from_lambda(self, &f)?.into_coeffs();
        }
        let u = MPoly::term(line_part, BigInt::one());
        let mut pw = MPoly::one();
        for c in g.iter_mut() {
            *c = &*c * &pw;
            pw = &pw * &u;
        }
        Ok(g)
    }
}

impl Ring for PolyLambdaRing {
    type Elem = MPoly<BigInt>;

    fn zero(&self) -> MPoly<BigInt> {
        MPoly::zero()
    }
    fn one(&self) -> MPoly<BigInt> {
        MPoly::one()
    }
    fn from_int(&self, n: &BigInt) -> MPoly<BigInt> {
        MPoly::constant(n.clone())
    }
    fn add(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a + b
    }
    fn neg(&self, a: &MPoly<BigInt>) -> MPoly<BigInt> {
        -a.clone()
    }
    fn mul(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a * b
    }
    fn sub(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a - b
    }
    fn is_zero(&self, a: &MPoly<BigInt>) -> bool {
        a.is_zero()
    }
}

impl LambdaRing for PolyLambdaRing {
    fn degree_cap(&self) -> usize {
        self.cap
    }

    fn lambda_values(&self, x: &MPoly<BigInt>, n: usize) -> Result<Vec<MPoly<BigInt>>> {
        let mut cache = HashMap::new();
        let mut acc = self.one_series(n);
        for (m, c) in x.terms() {
            let s = self.monomial_series(m, n, &mut cache)?;
            let s = if c.is_one() { s } else { series_power(self, &s, c, n)? };
            acc = multiply_values(self, &acc, &s);
        }
        Ok(acc)
    }

    fn render(&self, x: &MPoly<BigInt>) -> String {
        x.display_with(|v| self.name(v).map_or_else(|| format!("v{}", v), str::to_string))
    }
}

/// The splitting `Λ_n ↪ Ω_n`, `a_k ↦ e_k(l_1, …, l_n)`.
///
/// Returns `Ω_n` and the image of `x`.
pub fn split_even(ring: &PolyLambdaRing, x: &MPoly<BigInt>) -> Result<(PolyLambdaRing, MPoly<BigInt>)> {
    let n = match ring.groups.as_slice() {
        [g] if !g.odd && g.degree.is_some() && ring.gens.len() == g.vars.len() => g.degree.unwrap_or(0),
        _ => {
            return Err(Error::Precondition(
                "splitting needs an element of Λ_n presented by its λ-components".into(),
            ))
        }
    };
    let target = PolyLambdaRing::split(n, ring.cap);
    let lines: Vec<u32> = (1..=n).map(|i| target.var(&format!("l{}", i)).expect("line")).collect();
    let vars = ring.groups[0].vars.clone();
    let image = x.substitute(|v| {
        let k = vars.iter().position(|&w| w == v).expect("variable of Λ_n") + 1;
        elementary_in(&lines, k)
    });
    Ok((target, image))
}

/// `e_k` of the given variables.
fn elementary_in(vars: &[u32], k: usize) -> MPoly<BigInt> {
    let mut out = MPoly::zero();
    let n = vars.len();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            let m = Monomial::from_pairs((0..n).filter(|i| mask >> i & 1 == 1).map(|i| (vars[i], 1)));
            out.add_term(m, BigInt::one());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_rings::{even_odd_analysis, lambda_op, sigma_op};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn line_and_negline() {
        let r = PolyLambdaRing::split(2, 8);
        let x = &r.element("l1").unwrap() + &r.element("l2").unwrap();
        assert_eq!(lambda_op(&r, &x, 2).unwrap(), &r.element("l1").unwrap() * &r.element("l2").unwrap());
        assert!(lambda_op(&r, &x, 3).unwrap().is_zero());
        let rep = even_odd_analysis(&r, &x, 8).unwrap();
        assert_eq!(rep.even_degree, Some(2));
        assert_eq!(rep.odd_degree, None);

        let o = PolyLambdaRing::odd(1, 8);
        let b = o.element("b1").unwrap();
        assert_eq!(lambda_op(&o, &b, 3).unwrap(), b.pow(3));
        assert!(sigma_op(&o, &b, 2).unwrap().is_zero());
        assert_eq!(even_odd_analysis(&o, &b, 8).unwrap().odd_degree, Some(1));
    }

    #[test]
    fn even_components() {
        let r = PolyLambdaRing::even(3, 12);
        let a1 = r.element("a1").unwrap();
        assert_eq!(lambda_op(&r, &a1, 2).unwrap(), r.element("a2").unwrap());
        assert!(lambda_op(&r, &a1, 4).unwrap().is_zero());
        // P_{2,2} = e1 e3 - e4 and a_4 = 0
        let p = lambda_op(&r, &r.element("a2").unwrap(), 2).unwrap();
        let expect = &a1 * &r.element("a3").unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn integers_are_binomial() {
        let r = PolyLambdaRing::new(6);
        assert_eq!(lambda_op(&r, &MPoly::constant(big(5)), 2).unwrap(), MPoly::constant(big(10)));
        assert_eq!(lambda_op(&r, &MPoly::constant(big(-2)), 3).unwrap(), MPoly::constant(big(-4)));
    }

    #[test]
    fn splitting() {
        let r = PolyLambdaRing::even(2, 8);
        let (omega, img) = split_even(&r, &r.element("a1").unwrap()).unwrap();
        let l1 = omega.element("l1").unwrap();
        let l2 = omega.element("l2").unwrap();
        assert_eq!(img, &l1 + &l2);
        let (_, img2) = split_even(&r, &r.element("a2").unwrap()).unwrap();
        assert_eq!(img2, &l1 * &l2);
        assert_eq!(lambda_op(&omega, &img, 2).unwrap(), img2);
        assert!(lambda_op(&omega, &img, 3).unwrap().is_zero());
    }
}
