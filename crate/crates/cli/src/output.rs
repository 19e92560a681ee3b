use lambda_schur::Error;
use serde_json::Value;

/// What a command produced: a JSON document, its human rendering, and an
/// optional PASS/FAIL verdict.
pub struct Outcome {
    pub json: Value,
    pub human: String,
    pub verdict: Option<bool>,
}

impl Outcome {
    pub fn value(json: Value, human: String) -> Self {
        Outcome {
            json,
            human,
            verdict: None,
        }
    }

    pub fn verdict(json: Value, human: String, pass: bool) -> Self {
        Outcome {
            json,
            human,
            verdict: Some(pass),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }
}

pub fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::DegreeCap { .. } => 3,
        _ => 4,
    }
}

/// `c_0 + c_1*t + …` from rendered coefficients.
pub fn t_polynomial(coeffs: &[String]) -> String {
    let terms: Vec<(String, String)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{}", k),
            };
            let compound = c.trim_start_matches('-').contains([' ', '+', '-']);
            let c = if compound && k > 0 { format!("({})", c) } else { c.clone() };
            (mono, c)
        })
        .collect();
    lambda_schur::poly::format_signed_sum(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_polynomials() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(t_polynomial(&s(&["1", "-1"])), "1 - t");
        assert_eq!(t_polynomial(&s(&["1", "0", "3"])), "1 + 3*t^2");
        assert_eq!(t_polynomial(&s(&["1", "a - b"])), "1 + (a - b)*t");
        assert_eq!(t_polynomial(&s(&["1", "a1"])), "1 + a1*t");
    }
}
