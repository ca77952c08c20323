use crate::error::{Error, Result};

/// Residue of a prime field, always kept in `[0, p)`.
pub type Fp = u32;

/// A prime field F_p. Cheap to copy; every matrix and algebra carries one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: Self::DEFAULT_CHAR }
    }
}

impl PrimeField {
    pub const DEFAULT_CHAR: u32 = 32003;

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: Fp, b: Fp) -> Fp {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as Fp
    }

    #[inline]
    pub fn sub(self, a: Fp, b: Fp) -> Fp {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as Fp
        }
    }

    #[inline]
    pub fn neg(self, a: Fp) -> Fp {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Fp, b: Fp) -> Fp {
        ((a as u64 * b as u64) % self.p as u64) as Fp
    }

    /// `a + b*c`
    #[inline]
    pub fn mul_add(self, a: Fp, b: Fp, c: Fp) -> Fp {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as Fp
    }

    pub fn pow(self, mut a: Fp, mut e: u64) -> Fp {
        let mut r: Fp = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: Fp) -> Fp {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn from_i64(self, v: i64) -> Fp {
        v.rem_euclid(self.p as i64) as Fp
    }

    /// Symmetric representative in `(-p/2, p/2]`, used when printing coefficients.
    pub fn to_signed(self, a: Fp) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32001).is_err());
    }

    #[test]
    fn inverse_and_signed() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.to_signed(4), -1);
        assert_eq!(f.to_signed(2), 2);
        for a in 1..5 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
