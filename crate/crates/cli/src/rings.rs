//! Ring presentations accepted by `--ring`, and element parsing/rendering.

use std::collections::BTreeMap;

use lambda_schur::lambda_rings::{
    apply_symfunc, Binomial, LambdaRing, PolyLambdaRing, SchurQuotient, TablePreset, TableRing,
};
use lambda_schur::scalar::Native;
use lambda_schur::{Error, MPoly, Result, SymFunc};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::expr::{self, indexed, Expr};

pub enum AnyRing {
    Poly(PolyLambdaRing),
    Quot(SchurQuotient),
    Binomial(Binomial),
    Table(TableRing),
}

/// Runs `$body` with `$r` bound to the concrete ring.
macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::rings::AnyRing::Poly($r) => $body,
            $crate::rings::AnyRing::Quot($r) => $body,
            $crate::rings::AnyRing::Binomial($r) => $body,
            $crate::rings::AnyRing::Table($r) => $body,
        }
    };
}
pub(crate) use with_ring;

pub struct RingSpec {
    pub label: String,
    pub ring: AnyRing,
}

fn number(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad {} {:?}", what, s)))
}

/// Presets: `free`, `sym`, `even:n`, `odd:n`, `split:n`, `tensor:m,n`,
/// `quot:[λ]`, `binomial`, `binomial:r`, `table:lambda2-3`, `table:nil`.
pub fn parse_preset(s: &str, cap: usize) -> Result<RingSpec> {
    let (kind, arg) = match s.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (s, None),
    };
    let ring = match (kind, arg) {
        ("free", None) => AnyRing::Poly(PolyLambdaRing::free(cap)),
        ("sym", None) => AnyRing::Quot(SchurQuotient::free(cap)),
        ("even", Some(n)) => AnyRing::Poly(PolyLambdaRing::even(number(n, "degree")?, cap)),
        ("odd", Some(n)) => AnyRing::Poly(PolyLambdaRing::odd(number(n, "degree")?, cap)),
        ("split", Some(n)) => AnyRing::Poly(PolyLambdaRing::split(number(n, "degree")?, cap)),
        ("tensor", Some(mn)) => {
            let (m, n) = mn
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("tensor needs m,n, got {:?}", mn)))?;
            AnyRing::Poly(PolyLambdaRing::tensor(number(m, "degree")?, number(n, "degree")?, cap))
        }
        ("quot", Some(p)) => AnyRing::Quot(SchurQuotient::new(p.parse()?, cap)),
        ("binomial", None) => AnyRing::Binomial(Binomial::new(1, cap)),
        ("binomial", Some(r)) => AnyRing::Binomial(Binomial::new(number(r, "rank")?, cap)),
        ("table", Some(t)) => AnyRing::Table(TableRing::new(t.parse()?, cap)),
        _ => return Err(Error::Parse(format!("unknown ring preset {:?}", s))),
    };
    Ok(RingSpec {
        label: s.to_string(),
        ring,
    })
}

/// `{"kind": …, "params": {…}}`.
pub fn parse_presentation(v: &Value, cap: usize) -> Result<RingSpec> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("ring presentation needs a \"kind\"".into()))?;
    let params = v.get("params").cloned().unwrap_or(Value::Null);
    let uint = |key: &str| -> Result<usize> {
        params
            .get(key)
            .and_then(Value::as_u64)
            .map(|n| n as usize)
            .ok_or_else(|| Error::Parse(format!("{} presentation needs params.{}", kind, key)))
    };
    let string = |key: &str| -> Result<String> {
        params
            .get(key)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| Error::Parse(format!("{} presentation needs params.{}", kind, key)))
    };
    let preset = match kind {
        "free" => "free".to_string(),
        "sym" => "sym".to_string(),
        "even" => format!("even:{}", uint("n")?),
        "odd" => format!("odd:{}", uint("n")?),
        "split" => format!("split:{}", uint("n")?),
        "tensor" => format!("tensor:{},{}", uint("m")?, uint("n")?),
        "schur_quotient" => format!("quot:{}", string("bound")?),
        "binomial" => match params.get("rank") {
            Some(_) => format!("binomial:{}", uint("rank")?),
            None => "binomial".to_string(),
        },
        "table" => format!("table:{}", string("preset")?),
        "line_poly" => {
            return Err(Error::Unsupported(
                "line_poly presentations are available from the library only".into(),
            ))
        }
        _ => return Err(Error::Parse(format!("unknown ring kind {:?}", kind))),
    };
    parse_preset(&preset, cap)
}

/// A preset name, inline JSON, `-` for stdin, or a path to a JSON file.
pub fn parse_ring_arg(s: &str, cap: usize) -> Result<RingSpec> {
    let text = if s.trim_start().starts_with('{') {
        s.to_string()
    } else if s == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("reading stdin: {}", e)))?
    } else if s.ends_with(".json") {
        std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("reading {}: {}", s, e)))?
    } else {
        return parse_preset(s, cap);
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("ring JSON: {}", e)))?;
    parse_presentation(&v, cap)
}

/// What the CLI needs from a ring beyond [`LambdaRing`].
pub trait CliRing: LambdaRing + Sized {
    /// Resolves an identifier or Schur literal.
    fn atom(&self, e: &Expr) -> Result<Self::Elem>;

    fn to_json(&self, x: &Self::Elem) -> Value;

    /// The ring as a polynomial ring with the given elements, when it is one.
    fn as_polynomials(&self, _xs: Vec<Self::Elem>) -> Option<(&PolyLambdaRing, Vec<MPoly<BigInt>>)> {
        None
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let e = expr::parse(s)?;
        expr::eval(self, &e, &|a| self.atom(a))
    }
}

fn unknown(e: &Expr) -> Error {
    Error::Parse(format!("unknown atom {:?}", e))
}

/// Monomial → coefficient map with the given variable names.
pub fn poly_json(p: &MPoly<BigInt>, name: impl Fn(u32) -> String) -> Value {
    let map: BTreeMap<String, String> = p
        .terms()
        .map(|(m, c)| {
            let key = if m.is_one() { "1".to_string() } else { m.display_with(&name) };
            (key, c.to_string())
        })
        .collect();
    json!(map)
}

pub fn symfunc_json(f: &SymFunc) -> Value {
    serde_json::to_value(f).expect("SymFunc serializes")
}

impl CliRing for PolyLambdaRing {
    fn atom(&self, e: &Expr) -> Result<MPoly<BigInt>> {
        match e {
            Expr::Ident(name) if name == "gen" => Ok(self.universal_element()),
            Expr::Ident(name) => self.element(name),
            Expr::Schur(p) => apply_symfunc(self, &SymFunc::schur(p.clone()), &self.universal_element()),
            _ => Err(unknown(e)),
        }
    }

    fn to_json(&self, x: &MPoly<BigInt>) -> Value {
        poly_json(x, |v| self.name(v).unwrap_or("?").to_string())
    }

    fn as_polynomials(&self, xs: Vec<MPoly<BigInt>>) -> Option<(&PolyLambdaRing, Vec<MPoly<BigInt>>)> {
        Some((self, xs))
    }
}

impl CliRing for SchurQuotient {
    fn atom(&self, e: &Expr) -> Result<SymFunc> {
        let f = match e {
            Expr::Ident(name) if name == "gen" || name == "x" => self.generator(),
            Expr::Schur(p) => SymFunc::schur(p.clone()),
            Expr::Ident(name) => match indexed(name) {
                Some(('e', k)) => SymFunc::e(k),
                Some(('h', k)) => SymFunc::h(k),
                _ => return Err(unknown(e)),
            },
            _ => return Err(unknown(e)),
        };
        f.check_degree(self.degree_cap())?;
        Ok(self.reduce(&f))
    }

    fn to_json(&self, x: &SymFunc) -> Value {
        symfunc_json(x)
    }
}

impl CliRing for Binomial {
    fn atom(&self, e: &Expr) -> Result<Vec<BigInt>> {
        let unit = |i: usize| -> Result<Vec<BigInt>> {
            if i == 0 || i > self.rank() {
                return Err(unknown(e));
            }
            Ok((1..=self.rank()).map(|j| BigInt::from((j == i) as i64)).collect())
        };
        match e {
            Expr::Ident(name) if name == "gen" => unit(1),
            Expr::Ident(name) => match indexed(name) {
                Some(('u', i)) => unit(i),
                _ => Err(unknown(e)),
            },
            _ => Err(unknown(e)),
        }
    }

    fn to_json(&self, x: &Vec<BigInt>) -> Value {
        json!(x.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl CliRing for TableRing {
    fn atom(&self, e: &Expr) -> Result<MPoly<BigInt>> {
        match (self.preset(), e) {
            (_, Expr::Ident(name)) if name == "gen" || name == "x" => Ok(self.x()),
            (TablePreset::Nil, Expr::Ident(name)) if name == "s1" || name == "eps" => Ok(self.x()),
            (TablePreset::Lambda23, Expr::Ident(name)) if name == "b" => Ok(MPoly::var(1)),
            _ => Err(unknown(e)),
        }
    }

    /// Evaluates in `Z[x, b]` first: `b` alone lies outside the ring, so
    /// reducing partial products would lose terms such as `x·b·b`.
    fn parse_elem(&self, s: &str) -> Result<MPoly<BigInt>> {
        let e = expr::parse(s)?;
        let x = expr::eval(&Native::<MPoly<BigInt>>::new(), &e, &|a| self.atom(a))?;
        self.element(&x)
    }

    fn to_json(&self, x: &MPoly<BigInt>) -> Value {
        let nil = self.preset() == TablePreset::Nil;
        poly_json(x, |v| match (nil, v) {
            (true, _) => "s1".to_string(),
            (false, 0) => "x".to_string(),
            _ => "b".to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        for p in ["free", "sym", "even:2", "odd:3", "split:2", "tensor:1,1", "quot:[2,1]", "binomial", "binomial:2", "table:lambda2-3", "table:nil"] {
            assert!(parse_preset(p, 12).is_ok(), "{}", p);
        }
        assert!(matches!(parse_preset("quot:[2,", 12), Err(Error::Parse(_))));
        assert!(matches!(parse_preset("bogus", 12), Err(Error::Parse(_))));
    }

    #[test]
    fn presentation_json() {
        let v: Value = serde_json::from_str(r#"{"kind":"schur_quotient","params":{"bound":"[2,1]"}}"#).unwrap();
        assert_eq!(parse_presentation(&v, 12).unwrap().label, "quot:[2,1]");
        let v: Value = serde_json::from_str(r#"{"kind":"line_poly"}"#).unwrap();
        assert!(matches!(parse_presentation(&v, 12), Err(Error::Unsupported(_))));
    }

    #[test]
    fn elements() {
        let q = SchurQuotient::new("[2,1]".parse().unwrap(), 12);
        assert_eq!(q.parse_elem("gen*gen").unwrap(), SymFunc::schur("[2]".parse().unwrap()) + SymFunc::schur("[1,1]".parse().unwrap()));
        assert!(q.parse_elem("s[2,1]").unwrap().is_zero());
        let t = TableRing::new(TablePreset::Lambda23, 12);
        assert!(t.parse_elem("b").is_err());
        assert_eq!(t.to_json(&t.parse_elem("x*b*b + 2").unwrap()).to_string(), r#"{"1":"2","x*b^2":"1"}"#);
        let b = Binomial::new(2, 12);
        assert_eq!(b.parse_elem("3*u1 - u2").unwrap(), vec![BigInt::from(3), BigInt::from(-1)]);
    }
}
