//! Exact scalars: rationals, prime fields and univariate rational function
//! fields over either, plus the discrete valuation ring used for modular
//! reduction.
//!
//! Every [`Scalar`] is kept in canonical form, so structural equality is
//! field equality.  Values of different fields never mix, except that a
//! constant of the base field may be combined with a rational function over
//! that base.

mod dvr;
mod poly;
mod prime;
mod quantum;
mod ratfunc;
mod text;

pub use dvr::DvrContext;
pub use poly::Poly;
pub use prime::{is_prime, Fp};
pub use quantum::quantum_integer;
pub use ratfunc::RatFunc;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a rational function field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

/// The field a scalar lives in.
///
/// The variable name of a rational function field only affects printing;
/// two function fields over the same base are arithmetically the same.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    Functions { base: BaseField, var: char },
}

impl BaseField {
    pub fn kind(self) -> FieldKind {
        match self {
            BaseField::Rationals => FieldKind::Rationals,
            BaseField::Prime(p) => FieldKind::Prime(p),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => p,
        }
    }
}

impl FieldKind {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(Error::Invalid(format!("{p} is not prime")))
        }
    }

    pub fn functions(base: BaseField, var: char) -> Self {
        FieldKind::Functions { base, var }
    }

    /// Base field of a function field; a numeric field is its own base.
    pub fn base(self) -> BaseField {
        match self {
            FieldKind::Rationals => BaseField::Rationals,
            FieldKind::Prime(p) => BaseField::Prime(p),
            FieldKind::Functions { base, .. } => base,
        }
    }

    pub fn is_function_field(self) -> bool {
        matches!(self, FieldKind::Functions { .. })
    }

    pub fn characteristic(self) -> u64 {
        self.base().characteristic()
    }

    pub fn var(self) -> Option<char> {
        match self {
            FieldKind::Functions { var, .. } => Some(var),
            _ => None,
        }
    }

    /// Same arithmetic, ignoring the printed variable name.
    pub fn compatible(self, other: FieldKind) -> bool {
        match (self, other) {
            (FieldKind::Functions { base: a, .. }, FieldKind::Functions { base: b, .. }) => a == b,
            (a, b) => a == b,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime(p) => {
                let r = n % BigInt::from(p);
                let r: i128 = r.try_into().expect("residue fits in i128");
                Scalar::Prime(Fp::new(r, p))
            }
            FieldKind::Functions { base, .. } => {
                Scalar::Function(RatFunc::constant(base.kind().from_bigint(n)))
            }
        }
    }

    /// `num / den` as an element of this field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        self.from_i64(num).checked_div(&d)
    }

    /// The transcendental generator of a function field.
    pub fn generator(self) -> Option<Scalar> {
        match self {
            FieldKind::Functions { base, .. } => Some(Scalar::Function(RatFunc::variable(base))),
            _ => None,
        }
    }

    /// Embeds a scalar of the base field (or of this field) into this field.
    pub fn embed(self, x: &Scalar) -> Scalar {
        match (self, x) {
            (FieldKind::Functions { base, .. }, Scalar::Rational(_) | Scalar::Prime(_)) => {
                assert_eq!(x.base_field(), base, "cannot embed {x:?} into {self:?}");
                Scalar::Function(RatFunc::constant(x.clone()))
            }
            _ => {
                assert!(x.kind_compatible(self), "cannot embed {x:?} into {self:?}");
                x.clone()
            }
        }
    }
}

/// Element of an exact field in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
    Function(RatFunc),
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn base_field(&self) -> BaseField {
        match self {
            Scalar::Rational(_) => BaseField::Rationals,
            Scalar::Prime(x) => BaseField::Prime(x.modulus()),
            Scalar::Function(f) => f.base(),
        }
    }

    pub fn is_function(&self) -> bool {
        matches!(self, Scalar::Function(_))
    }

    fn kind_compatible(&self, kind: FieldKind) -> bool {
        match (self, kind) {
            (Scalar::Rational(_), FieldKind::Rationals) => true,
            (Scalar::Prime(x), FieldKind::Prime(p)) => x.modulus() == p,
            (Scalar::Function(f), FieldKind::Functions { base, .. }) => f.base() == base,
            _ => false,
        }
    }

    /// Whether this scalar is an element of `kind`.
    pub fn belongs_to(&self, kind: FieldKind) -> bool {
        self.kind_compatible(kind)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(x) => x.is_zero(),
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime(x) => x.value() == 1 % x.modulus(),
            Scalar::Function(f) => f.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::zero()),
            Scalar::Prime(x) => Scalar::Prime(Fp::new(0, x.modulus())),
            Scalar::Function(f) => Scalar::Function(RatFunc::zero(f.base())),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Prime(x) => Scalar::Prime(Fp::new(1, x.modulus())),
            Scalar::Function(f) => Scalar::Function(RatFunc::one(f.base())),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime(x) => Scalar::Prime(x.inv()?),
            Scalar::Function(f) => Scalar::Function(f.inv()?),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 {
            self.inv().ok_or(Error::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_function(&self) -> Option<&RatFunc> {
        match self {
            Scalar::Function(f) => Some(f),
            _ => None,
        }
    }

    /// Canonical form is maintained by every constructor; this re-derives it.
    pub fn canonical(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(BigRational::new(r.numer().clone(), r.denom().clone())),
            Scalar::Prime(x) => Scalar::Prime(Fp::new(x.value() as i128, x.modulus())),
            Scalar::Function(f) => Scalar::Function(RatFunc::from_parts(f.numer().clone(), f.denom().clone())),
        }
    }

    /// Human readable rendering; function-field elements use `var`.
    pub fn pretty(&self, var: char) -> String {
        match self {
            Scalar::Function(f) => f.pretty(var),
            other => other.to_string(),
        }
    }

    /// Sort key used to order scalars deterministically (not a field order).
    pub fn sort_key(&self) -> String {
        self.to_string()
    }

    fn binary(&self, other: &Scalar, op: BinOp) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(match op {
                BinOp::Add => a.add(b),
                BinOp::Sub => a.sub(b),
                BinOp::Mul => a.mul(b),
            }),
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(match op {
                BinOp::Add => a.add(b),
                BinOp::Sub => a.sub(b),
                BinOp::Mul => a.mul(b),
            }),
            (Scalar::Function(a), c) => {
                let b = RatFunc::constant(c.clone());
                Scalar::Function(match op {
                    BinOp::Add => a.add(&b),
                    BinOp::Sub => a.sub(&b),
                    BinOp::Mul => a.mul(&b),
                })
            }
            (c, Scalar::Function(b)) => {
                let a = RatFunc::constant(c.clone());
                Scalar::Function(match op {
                    BinOp::Add => a.add(b),
                    BinOp::Sub => a.sub(b),
                    BinOp::Mul => a.mul(b),
                })
            }
            (a, b) => panic!("field mismatch: {a:?} and {b:?}"),
        }
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binary(rhs, $op)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binary(&rhs, $op)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.binary(rhs, $op)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.binary(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime(x) => Scalar::Prime(x.neg()),
            Scalar::Function(f) => Scalar::Function(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.binary(rhs, BinOp::Add);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.binary(rhs, BinOp::Sub);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.binary(rhs, BinOp::Mul);
    }
}

impl fmt::Display for Scalar {
    /// The exact text encoding used in JSON: `p/q` for rationals, a decimal
    /// residue for prime fields and `[c0,c1,...]/[d0,...]` (coefficients in
    /// increasing degree) for rational functions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime(x) => write!(f, "{x}"),
            Scalar::Function(g) => write!(f, "{}", g.encode()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn mixed_constant_and_function() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let t = k.generator().unwrap();
        let s = &t + &q(1, 2);
        assert_eq!(s.to_string(), "[1/2,1]/[1]");
        assert_eq!(&s - &t, k.from_ratio(1, 2).unwrap());
    }

    #[test]
    fn negative_power() {
        assert_eq!(q(2, 1).pow(-3).unwrap(), q(1, 8));
        assert!(q(0, 1).pow(-1).is_err());
        assert_eq!(q(0, 1).pow(0).unwrap(), q(1, 1));
    }

    #[test]
    fn prime_embedding_reduces() {
        let k = FieldKind::prime(7).unwrap();
        assert_eq!(k.from_i64(-1).to_string(), "6");
        assert_eq!(k.from_ratio(1, 2).unwrap().to_string(), "4");
        assert!(FieldKind::prime(9).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..9).prop_map(|(n, d)| q(n, d))
    }

    fn small_function() -> impl Strategy<Value = Scalar> {
        let k = FieldKind::functions(BaseField::Prime(5), 't');
        (
            proptest::collection::vec(0i64..5, 1..4),
            proptest::collection::vec(0i64..5, 1..3),
        )
            .prop_filter_map("nonzero denominator", move |(n, d)| {
                let num = Poly::new(BaseField::Prime(5).kind(), n.iter().map(|&c| FieldKind::Prime(5).from_i64(c)).collect());
                let den = Poly::new(BaseField::Prime(5).kind(), d.iter().map(|&c| FieldKind::Prime(5).from_i64(c)).collect());
                if den.is_zero() {
                    None
                } else {
                    let _ = k;
                    Some(Scalar::Function(RatFunc::from_parts(num, den)))
                }
            })
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn function_field_axioms(a in small_function(), b in small_function(), c in small_function()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            prop_assert_eq!(a.canonical(), a.clone());
            prop_assert_eq!(a.canonical().canonical(), a.canonical());
        }
    }
}
