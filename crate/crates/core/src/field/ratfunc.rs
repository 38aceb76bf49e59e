use super::{BaseField, Poly, Scalar};

/// Element of `k(t)` as a reduced fraction: numerator and denominator are
/// coprime and the denominator is monic.  Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero(base: BaseField) -> RatFunc {
        RatFunc { num: Poly::zero(base.kind()), den: Poly::one(base.kind()) }
    }

    pub fn one(base: BaseField) -> RatFunc {
        RatFunc::constant(base.kind().one())
    }

    pub fn constant(c: Scalar) -> RatFunc {
        let kind = c.base_field().kind();
        match c {
            Scalar::Function(f) => f,
            c => RatFunc { num: Poly::constant(kind, c), den: Poly::one(kind) },
        }
    }

    pub fn variable(base: BaseField) -> RatFunc {
        RatFunc { num: Poly::x(base.kind()), den: Poly::one(base.kind()) }
    }

    pub fn polynomial(num: Poly) -> RatFunc {
        let den = Poly::one(num.field());
        RatFunc { num, den }
    }

    /// Builds `num/den` in canonical form; panics if `den` is zero.
    pub fn from_parts(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { den: Poly::one(num.field()), num };
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        RatFunc::normalized(num, den)
    }

    /// Assumes coprime inputs; only makes the denominator monic.
    fn normalized(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc { den: Poly::one(num.field()), num };
        }
        let l = den.leading().expect("nonzero denominator").clone();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.inv().expect("unit");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn base(&self) -> BaseField {
        self.num.field().base()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Laurent polynomial in t: the denominator is a power of t.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monic_monomial()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc::normalized(num, self.den.clone());
            }
            return RatFunc::from_parts(num, self.den.clone());
        }
        // with g = gcd(b, d), any common factor of the sum divides g
        let g = self.den.gcd(&other.den);
        let b_g = self.den.exact_div(&g);
        let d_g = other.den.exact_div(&g);
        let num = self.num.mul(&d_g).add(&other.num.mul(&b_g));
        let den = self.den.mul(&d_g);
        if g.is_one() {
            return RatFunc::normalized(num, den);
        }
        let h = num.gcd(&g);
        RatFunc::normalized(num.exact_div(&h), den.exact_div(&h))
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.base());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: self.den.clone() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&other.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&other.den.exact_div(&g1));
        RatFunc::normalized(num, den)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    /// Value at `t = x`, or `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) * &d.inv()?)
    }

    /// Exact text encoding `[n0,n1,...]/[d0,...]`.
    pub fn encode(&self) -> String {
        let list = |p: &Poly| {
            let items: Vec<String> = if p.is_zero() {
                vec!["0".into()]
            } else {
                p.coeffs().iter().map(|c| c.to_string()).collect()
            };
            format!("[{}]", items.join(","))
        };
        format!("{}/{}", list(&self.num), list(&self.den))
    }

    /// Readable form; Laurent polynomials are written with negative powers.
    pub fn pretty(&self, var: char) -> String {
        if self.den.is_one() {
            return self.num.pretty(var);
        }
        if self.den.is_monic_monomial() {
            let k = self.den.degree().unwrap_or(0) as i64;
            return laurent_pretty(&self.num, k, var);
        }
        let wrap = |p: &Poly| {
            let s = p.pretty(var);
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

fn laurent_pretty(num: &Poly, shift: i64, var: char) -> String {
    let mut out = String::new();
    for (i, c) in num.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 - shift;
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let term = if e == 0 {
            body
        } else if body == "1" {
            mono
        } else {
            format!("{body}*{mono}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(FieldKind::Rationals, c)
    }

    #[test]
    fn canonical_cancellation() {
        // (t-2)/(2t-4) = 1/2
        let f = RatFunc::from_parts(p(&[-2, 1]), p(&[-4, 2]));
        assert_eq!(f.as_constant(), Some(Scalar::rational(1, 2)));
        assert_eq!(f.encode(), "[1/2]/[1]");
    }

    #[test]
    fn sum_cancels_through_common_factor() {
        // 1/(t(t-1)) + 1/t = 1/(t-1)
        let a = RatFunc::from_parts(p(&[1]), p(&[0, -1, 1]));
        let b = RatFunc::from_parts(p(&[1]), p(&[0, 1]));
        assert_eq!(a.add(&b), RatFunc::from_parts(p(&[1]), p(&[-1, 1])));
    }

    #[test]
    fn laurent_rendering() {
        // -q^-1 = -1/q
        let f = RatFunc::from_parts(p(&[-1]), p(&[0, 1]));
        assert!(f.is_laurent());
        assert_eq!(f.pretty('q'), "-q^-1");
        let g = RatFunc::from_parts(p(&[1, 0, 1]), p(&[0, 1]));
        assert_eq!(g.pretty('q'), "q + q^-1");
    }
}
