use std::fmt;
use std::str::FromStr;

use super::field::Field;

/// Residue class modulo the prime `P`.
///
/// `P` must be prime and below 2^32 so that products fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P >= 2 && P < (1 << 32), "modulus out of range");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn plus(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }

    fn minus(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }

    fn times(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }

    fn negated(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.0 * b.0 % P;
        self.0 = if self.0 >= prod { self.0 - prod } else { self.0 + P - prod };
    }

    fn characteristic() -> u64 {
        P
    }

    fn field_name() -> String {
        format!("Fp {P}")
    }

    fn polynomial_roots(poly: &[Self]) -> Vec<Self> {
        super::poly::roots_mod_p(poly)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid residue literal `{0}`")]
pub struct ParseResidueError(pub String);

impl<const P: u64> FromStr for Fp<P> {
    type Err = ParseResidueError;

    /// Accepts integers and fractions `a/b` with `b` invertible mod `P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseResidueError(s.to_string());
        let t = s.trim();
        let parse_int = |x: &str| -> Result<Self, ParseResidueError> {
            let v: i128 = x.trim().parse().map_err(|_| err())?;
            Ok(Fp(v.rem_euclid(P as i128) as u64))
        };
        match t.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?.inverse().ok_or_else(err)?;
                Ok(parse_int(n)?.times(&d))
            }
            None => parse_int(t),
        }
    }
}

/// 2^31 - 1, the default modulus for fast enumeration runs.
pub type Fp31 = Fp<2_147_483_647>;

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn inverses_mod_seven() {
        for v in 1..7 {
            let x = F7::new(v);
            assert!(x.times(&x.inverse().unwrap()).is_one());
        }
        assert!(F7::zero().inverse().is_none());
    }

    #[test]
    fn parsing_reduces() {
        assert_eq!("-1".parse::<F7>().unwrap(), F7::new(6));
        assert_eq!("1/2".parse::<F7>().unwrap(), F7::new(4));
        assert!("1/7".parse::<F7>().is_err());
    }

    #[test]
    fn big_modulus_products_do_not_overflow() {
        let a = Fp31::new(2_147_483_646);
        assert_eq!(a.times(&a), Fp31::new(1));
    }
}
