use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// Scalars of an exact field.
///
/// Arithmetic goes through by-reference methods so that big-number
/// implementations avoid needless clones in elimination loops.
pub trait Field:
    Clone + PartialEq + Eq + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.minus(&a.times(b));
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }

    /// 0 for the rationals, p for F_p.
    fn characteristic() -> u64;

    /// Human-readable field name, e.g. `Q` or `Fp 101`.
    fn field_name() -> String;

    /// Distinct roots in this field of a nonzero polynomial (lowest degree first).
    /// May be incomplete when the search is too expensive.
    fn polynomial_roots(poly: &[Self]) -> Vec<Self>;

    fn div(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse().expect("division by zero"))
    }
}
