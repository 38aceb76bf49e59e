//! Field headers and the exact scalar text encoding.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{is_prime, BaseField, FieldKind, Poly, RatFunc, Scalar};
use crate::error::{Error, Result};

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
            FieldKind::Functions { base, var } => write!(f, "{base}({var})"),
        }
    }
}

fn parse_base(s: &str) -> Result<BaseField> {
    match s {
        "Q" | "QQ" | "rationals" => Ok(BaseField::Rationals),
        _ => {
            let digits = s
                .strip_prefix("F_")
                .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
                .or_else(|| s.strip_prefix("F"))
                .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
            let p: u64 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad characteristic in `{s}`")))?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            Ok(BaseField::Prime(p))
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    /// Accepts `Q`, `F_p`, `GF(p)`, `Q(q)`, `F_p(t)` and `q-generic` (= `Q(q)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q-generic" || s == "generic" {
            return Ok(FieldKind::functions(BaseField::Rationals, 'q'));
        }
        let is_gf = s.starts_with("GF(") && s.matches('(').count() == 1;
        if let Some(open) = s.rfind('(').filter(|_| !is_gf) {
            if s.ends_with(')') {
                let inner = &s[open + 1..s.len() - 1];
                let mut chars = inner.chars();
                if let (Some(var), None) = (chars.next(), chars.next()) {
                    if var.is_ascii_alphabetic() {
                        return Ok(FieldKind::functions(parse_base(&s[..open])?, var));
                    }
                }
                return Err(Error::Parse(format!("bad function field `{s}`")));
            }
        }
        Ok(parse_base(s)?.kind())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad number `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn numeric(kind: FieldKind, s: &str) -> Result<Scalar> {
    let r = parse_rational(s)?;
    let n = kind.from_bigint(r.numer());
    let d = kind.from_bigint(r.denom());
    n.checked_div(&d)
        .map_err(|_| Error::Parse(format!("`{s}` has a denominator divisible by the characteristic")))
}

fn coeff_list(base: FieldKind, s: &str) -> Result<Poly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a coefficient list, got `{s}`")))?;
    let coeffs = if inner.trim().is_empty() {
        vec![]
    } else {
        inner.split(',').map(|c| numeric(base, c)).collect::<Result<Vec<_>>>()?
    };
    Ok(Poly::new(base, coeffs))
}

impl FieldKind {
    /// Parses a scalar in the exact text encoding of this field.  Function
    /// fields also accept a bare numeric constant, the variable name, and a
    /// single coefficient list (a polynomial).
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldKind::Rationals | FieldKind::Prime(_) => numeric(self, s),
            FieldKind::Functions { base, var } => {
                let b = base.kind();
                if s.len() == var.len_utf8() && s.starts_with(var) {
                    return Ok(self.generator().expect("function field"));
                }
                if s.starts_with('[') {
                    let (num, den) = match s.find("]/[") {
                        Some(i) => (&s[..=i], &s[i + 2..]),
                        None => (s, "[1]"),
                    };
                    let num = coeff_list(b, num)?;
                    let den = coeff_list(b, den)?;
                    if den.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in `{s}`")));
                    }
                    return Ok(Scalar::Function(RatFunc::from_parts(num, den)));
                }
                Ok(self.embed(&numeric(b, s)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_headers_round_trip() {
        for s in ["Q", "F_7", "Q(q)", "F_5(t)"] {
            let k: FieldKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert_eq!("q-generic".parse::<FieldKind>().unwrap().to_string(), "Q(q)");
        assert_eq!("GF(7)".parse::<FieldKind>().unwrap(), FieldKind::Prime(7));
        assert!("F_8".parse::<FieldKind>().is_err());
        assert!("R".parse::<FieldKind>().is_err());
    }

    #[test]
    fn scalar_round_trip() {
        let k: FieldKind = "Q(q)".parse().unwrap();
        for s in ["[1/2,1]/[1]", "[-1]/[0,1]", "[0]/[1]", "[1,0,1]/[-1,0,1]"] {
            let x = k.parse_scalar(s).unwrap();
            assert_eq!(k.parse_scalar(&x.to_string()).unwrap(), x);
        }
        assert_eq!(k.parse_scalar("q").unwrap(), k.generator().unwrap());
        assert_eq!(k.parse_scalar("-1").unwrap(), k.from_i64(-1));
        assert_eq!(FieldKind::Prime(7).parse_scalar("-1/2").unwrap().to_string(), "3");
        assert!(FieldKind::Prime(7).parse_scalar("1/7").is_err());
        assert!(FieldKind::Rationals.parse_scalar("1/0").is_err());
        assert!(k.parse_scalar("[1]/[0]").is_err());
    }
}
