use std::fmt;

/// Residue class modulo a prime, stored reduced in `0..modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Fp {
    pub fn new(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Fp {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "prime field mismatch: F_{} vs F_{}",
            self.modulus, other.modulus
        );
    }

    pub fn add(&self, other: &Fp) -> Fp {
        self.check(other);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Fp {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }

    pub fn mul(&self, other: &Fp) -> Fp {
        self.check(other);
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp::new(s0, self.modulus))
    }

    /// Representative in `(-p/2, p/2]`, used when printing small residues.
    pub fn signed(&self) -> i128 {
        let v = self.value as i128;
        let p = self.modulus as i128;
        if 2 * v > p {
            v - p
        } else {
            v
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn inverse_mod_seven() {
        let two = Fp::new(2, 7);
        assert_eq!(two.inv().unwrap().value(), 4);
        assert_eq!(two.pow(3).value(), 1);
        assert!(Fp::new(0, 7).inv().is_none());
        assert_eq!(Fp::new(-1, 7).value(), 6);
    }
}
