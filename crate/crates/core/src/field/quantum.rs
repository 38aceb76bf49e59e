use super::Scalar;
use crate::error::{Error, Result};

/// `[k]_q = (q^k - 1)/(q - 1)`, and `k` when `q = 1`.
///
/// For negative `k` this is `-(q^k + q^(k+1) + ... + q^-1)`, so `[-1]_q = -q^-1`.
pub fn quantum_integer(k: i64, q: &Scalar) -> Result<Scalar> {
    let q_inv = q
        .inv()
        .ok_or_else(|| Error::Precondition("q must be invertible".into()))?;
    if q.is_one() {
        return Ok(&q.one_like() * &scalar_int(q, k));
    }
    let mut sum = q.zero_like();
    if k >= 0 {
        let mut pw = q.one_like();
        for _ in 0..k {
            sum += &pw;
            pw = &pw * q;
        }
        Ok(sum)
    } else {
        let mut pw = q_inv.clone();
        for _ in 0..(-k) {
            sum += &pw;
            pw = &pw * &q_inv;
        }
        Ok(-sum)
    }
}

fn scalar_int(like: &Scalar, k: i64) -> Scalar {
    match like {
        Scalar::Rational(_) => Scalar::rational(k, 1),
        Scalar::Prime(x) => Scalar::Prime(super::Fp::new(k as i128, x.modulus())),
        Scalar::Function(f) => f.base().kind().from_i64(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, FieldKind};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let q = k.generator().unwrap();
        let three = quantum_integer(3, &q).unwrap();
        assert_eq!(three, &(&k.one() + &q) + &(&q * &q));
        assert!(quantum_integer(0, &q).unwrap().is_zero());
        assert_eq!(quantum_integer(-1, &Scalar::rational(2, 1)).unwrap(), Scalar::rational(-1, 2));
        assert_eq!(quantum_integer(-3, &Scalar::rational(1, 1)).unwrap(), Scalar::rational(-3, 1));
        assert!(quantum_integer(1, &Scalar::rational(0, 1)).is_err());
    }

    #[test]
    fn closed_form_for_negative_k() {
        let q = Scalar::rational(3, 1);
        for k in -5..5 {
            let closed = (&q.pow(k).unwrap() - &q.one_like()) / (&q - &q.one_like());
            assert_eq!(quantum_integer(k, &q).unwrap(), closed);
        }
    }

    proptest! {
        #[test]
        fn additivity(a in -6i64..6, b in -6i64..6, n in 1i64..5, d in 1i64..4) {
            let k = FieldKind::functions(BaseField::Rationals, 'q');
            let generic = k.generator().unwrap();
            for q in [Scalar::rational(n, d), Scalar::rational(-n, d), generic] {
                let lhs = quantum_integer(a + b, &q).unwrap();
                let rhs = &quantum_integer(a, &q).unwrap()
                    + &(&q.pow(a).unwrap() * &quantum_integer(b, &q).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
