use super::{BaseField, FieldKind, RatFunc, Scalar};
use crate::error::{Error, Result};

/// The localization `R` of `k[t, t^-1]` at `(t - q)`, inside `K = k(t)`,
/// together with the reduction map `R -> k`.
///
/// `q = 0` is accepted and means the localization of `k[t]` at `(t)`; the
/// Hecke construction rejects it separately since there `q` must be a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvrContext {
    base: BaseField,
    q: Scalar,
    var: char,
}

impl DvrContext {
    pub fn new(base: BaseField, q: Scalar, var: char) -> Result<Self> {
        if !q.belongs_to(base.kind()) {
            return Err(Error::Invalid(format!("specialization point {q} is not in the base field")));
        }
        Ok(DvrContext { base, q, var })
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    /// The residue field `k`.
    pub fn residue_field(&self) -> FieldKind {
        self.base.kind()
    }

    /// The fraction field `K = k(t)`.
    pub fn ambient(&self) -> FieldKind {
        FieldKind::functions(self.base, self.var)
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// The generic parameter `t` of `K`.
    pub fn parameter(&self) -> Scalar {
        self.ambient().generator().expect("function field")
    }

    fn as_ratfunc(&self, x: &Scalar) -> RatFunc {
        assert_eq!(x.base_field(), self.base, "scalar {x:?} is not over the DVR base field");
        RatFunc::constant(x.clone())
    }

    /// The `(t - q)`-adic valuation; `None` stands for the infinite valuation
    /// of zero.
    pub fn valuation(&self, x: &Scalar) -> Option<i64> {
        if x.is_zero() {
            return None;
        }
        let f = self.as_ratfunc(x);
        let (a, _) = f.numer().strip_root(&self.q);
        let (b, _) = f.denom().strip_root(&self.q);
        Some(a as i64 - b as i64)
    }

    pub fn is_unit(&self, x: &Scalar) -> bool {
        self.valuation(x) == Some(0)
    }

    pub fn in_maximal_ideal(&self, x: &Scalar) -> bool {
        self.valuation(x).is_none_or(|v| v > 0)
    }

    pub fn in_ring(&self, x: &Scalar) -> bool {
        self.valuation(x).is_none_or(|v| v >= 0)
    }

    /// The residue `x + pi` in `k`.
    pub fn reduce(&self, x: &Scalar) -> Result<Scalar> {
        if x.is_zero() {
            return Ok(self.base.kind().zero());
        }
        let f = self.as_ratfunc(x);
        let (a, num) = f.numer().strip_root(&self.q);
        let (b, den) = f.denom().strip_root(&self.q);
        match (a as i64 - b as i64).cmp(&0) {
            std::cmp::Ordering::Less => Err(Error::NotInRing(a as i64 - b as i64)),
            std::cmp::Ordering::Greater => Ok(self.base.kind().zero()),
            std::cmp::Ordering::Equal => {
                let d = den.eval(&self.q);
                Ok(&num.eval(&self.q) * &d.inv().expect("cofactor is a unit"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;
    use proptest::prelude::*;

    fn ctx() -> DvrContext {
        DvrContext::new(BaseField::Rationals, Scalar::rational(2, 1), 't').unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> Scalar {
        let k = FieldKind::Rationals;
        Scalar::Function(RatFunc::from_parts(Poly::from_i64(k, num), Poly::from_i64(k, den)))
    }

    #[test]
    fn valuation_examples() {
        let c = ctx();
        // 3(t-2)^2/(t+1)
        assert_eq!(c.valuation(&rf(&[12, -12, 3], &[1, 1])), Some(2));
        assert_eq!(c.valuation(&rf(&[1], &[1])), Some(0));
        assert_eq!(c.valuation(&rf(&[1], &[-2, 1])), Some(-1));
        assert_eq!(c.valuation(&rf(&[0], &[1])), None);
    }

    #[test]
    fn reduction_examples() {
        let c = ctx();
        assert_eq!(c.reduce(&rf(&[-2, 1], &[-2, 1])).unwrap(), Scalar::rational(1, 1));
        assert_eq!(c.reduce(&rf(&[1, 1], &[-3, 1])).unwrap(), Scalar::rational(-3, 1));
        assert_eq!(c.reduce(&rf(&[1], &[-2, 1])), Err(Error::NotInRing(-1)));
        // (t-2)/(t+1) lies in the maximal ideal
        assert_eq!(c.reduce(&rf(&[-2, 1], &[1, 1])).unwrap(), Scalar::rational(0, 1));
    }

    fn integral() -> impl Strategy<Value = Scalar> {
        // numerator arbitrary, denominator avoids the root t = 2
        (proptest::collection::vec(-5i64..5, 1..4), -4i64..4, 1i64..3).prop_filter_map(
            "denominator root at q",
            |(n, a, b)| {
                if 2 * b + a == 0 {
                    None
                } else {
                    Some(rf(&n, &[a, b]))
                }
            },
        )
    }

    proptest! {
        #[test]
        fn reduction_is_ring_morphism(x in integral(), y in integral()) {
            let c = ctx();
            let rx = c.reduce(&x).unwrap();
            let ry = c.reduce(&y).unwrap();
            prop_assert_eq!(c.reduce(&(&x * &y)).unwrap(), &rx * &ry);
            prop_assert_eq!(c.reduce(&(&x + &y)).unwrap(), &rx + &ry);
        }
    }
}
