use std::hash::{Hash, Hasher};

use super::{FieldKind, Scalar};

/// Dense univariate polynomial, coefficients in increasing degree, with no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, Debug)]
pub struct Poly {
    field: FieldKind,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.compatible(other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Poly {
    pub fn new(field: FieldKind, coeffs: Vec<Scalar>) -> Poly {
        let coeffs = coeffs.into_iter().map(|c| field.embed(&c)).collect();
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    fn raw(field: FieldKind, coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: FieldKind, coeffs: &[i64]) -> Poly {
        Poly::raw(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero(field: FieldKind) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldKind) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: FieldKind, c: Scalar) -> Poly {
        Poly::raw(field, vec![field.embed(&c)])
    }

    /// `c * X^deg`.
    pub fn monomial(field: FieldKind, c: Scalar, deg: usize) -> Poly {
        let mut coeffs = vec![field.zero(); deg];
        coeffs.push(field.embed(&c));
        Poly::raw(field, coeffs)
    }

    pub fn x(field: FieldKind) -> Poly {
        Poly::monomial(field, field.one(), 1)
    }

    /// `X - c`.
    pub fn linear(field: FieldKind, c: &Scalar) -> Poly {
        Poly::raw(field, vec![-field.embed(c), field.one()])
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Number of leading zero coefficients, i.e. the X-adic order.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// True for `X^k` exactly.
    pub fn is_monic_monomial(&self) -> bool {
        match self.coeffs.split_last() {
            Some((top, rest)) => top.is_one() && rest.iter().all(Scalar::is_zero),
            None => false,
        }
    }

    /// Divides by `X^k`; the caller guarantees `k <= low_order()`.
    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(k <= self.low_order() || self.is_zero());
        Poly::raw(self.field, self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::raw(self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::raw(self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        if c.is_one() {
            return self.clone();
        }
        Poly::raw(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::raw(self.field, out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.leading().expect("polynomial division by zero");
        let inv = dl.inv().expect("leading coefficient is a unit");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &(&c * b);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::raw(self.field, quot), Poly::raw(self.field, rem))
    }

    /// Exact quotient; debug-asserts the remainder vanishes.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        if d.is_monic_monomial() {
            return self.shift_down(d.coeffs.len() - 1);
        }
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one(self.field);
        }
        // X-power shortcut: common in Laurent-polynomial denominators
        for (m, p) in [(self, other), (other, self)] {
            if m.is_monic_monomial() {
                let k = (m.coeffs.len() - 1).min(p.low_order());
                return Poly::monomial(self.field, self.field.one(), k);
            }
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let g = self.gcd(other);
        self.exact_div(&g).mul(other).monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Synthetic division by `X - c`: returns (quotient, remainder).
    pub fn divide_linear(&self, c: &Scalar) -> (Poly, Scalar) {
        if self.is_zero() {
            return (self.clone(), self.field.zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![self.field.zero(); n - 1];
        let mut carry = self.field.zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &(&carry * c);
            if k == 0 {
                return (Poly::raw(self.field, quot), v);
            }
            quot[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of the root `c` and the cofactor: self = (X-c)^m * rest.
    pub fn strip_root(&self, c: &Scalar) -> (usize, Poly) {
        let mut m = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        loop {
            let (q, r) = cur.divide_linear(c);
            if !r.is_zero() {
                return (m, cur);
            }
            m += 1;
            cur = q;
        }
    }

    /// Substitutes a matrix-like value via Horner's rule with caller-supplied
    /// ring operations.
    pub fn eval_with<T: Clone>(&self, one: T, x: &T, add: impl Fn(&T, &T) -> T, mul: impl Fn(&T, &T) -> T, scale: impl Fn(&T, &Scalar) -> T) -> T {
        let mut acc = scale(&one, &self.field.zero());
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x), &scale(&one, c));
        }
        acc
    }

    /// Human-readable rendering with highest degree first.
    pub fn pretty(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.pretty(var);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !c.is_function() => (true, rest.to_string()),
                _ => (false, s),
            };
            let body = if c.is_function() && !body.starts_with('(') { format!("({body})") } else { body };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if i == 0 {
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
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qx(c: &[i64]) -> Poly {
        Poly::from_i64(FieldKind::Rationals, c)
    }

    #[test]
    fn divrem_and_gcd() {
        // (X-1)(X-2) and (X-1)(X+3)
        let a = qx(&[2, -3, 1]);
        let b = qx(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), qx(&[-1, 1]));
        let (q, r) = a.divrem(&qx(&[-1, 1]));
        assert_eq!(q, qx(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.lcm(&b), qx(&[6, -7, 0, 1]));
    }

    #[test]
    fn monomial_gcd_shortcut() {
        let t3 = qx(&[0, 0, 0, 1]);
        assert_eq!(t3.gcd(&qx(&[0, 0, 5, 1])), qx(&[0, 0, 1]));
        assert_eq!(qx(&[1, 1]).gcd(&t3), qx(&[1]));
    }

    #[test]
    fn root_multiplicity() {
        // 3(X-2)^2
        let p = qx(&[12, -12, 3]);
        let (m, rest) = p.strip_root(&Scalar::rational(2, 1));
        assert_eq!(m, 2);
        assert_eq!(rest, qx(&[3]));
    }

    #[test]
    fn pretty_output() {
        assert_eq!(qx(&[1, -1, 1]).pretty('q'), "q^2 - q + 1");
        assert_eq!(qx(&[0, 3]).pretty('X'), "3*X");
        assert_eq!(qx(&[]).pretty('X'), "0");
    }
}
