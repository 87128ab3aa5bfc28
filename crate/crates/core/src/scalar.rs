//! Exact elements `a + b·√d` of the quadratic fields Q, Q(√2) and Q(√5).
//!
//! Both coefficients are reduced big-integer fractions. A value whose surd
//! coefficient is zero always carries the rational tag, so equality and
//! hashing are plain structural comparisons and rational values mix freely
//! with either extension.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::text;

/// The square-free radicand `d` of the field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Field {
    #[default]
    Rational,
    Sqrt2,
    Sqrt5,
}

impl Field {
    pub fn radicand(self) -> u32 {
        match self {
            Field::Rational => 1,
            Field::Sqrt2 => 2,
            Field::Sqrt5 => 5,
        }
    }

    pub fn from_radicand(d: u32) -> Option<Field> {
        match d {
            1 => Some(Field::Rational),
            2 => Some(Field::Sqrt2),
            5 => Some(Field::Sqrt5),
            _ => None,
        }
    }

    /// The smallest field containing both, if the pair is compatible.
    pub fn join(self, other: Field) -> Result<Field> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (Field::Rational, b) => Ok(b),
            (a, Field::Rational) => Ok(a),
            (a, b) => Err(Error::FieldMismatch {
                left: a.radicand(),
                right: b.radicand(),
            }),
        }
    }
}

/// Exact scalar `rational + surd·√d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    rational: BigRational,
    surd: BigRational,
    field: Field,
}

impl QuadScalar {
    pub fn new(rational: BigRational, surd: BigRational, field: Field) -> Result<Self> {
        if field == Field::Rational && !surd.is_zero() {
            return Err(Error::Domain(
                "a rational scalar cannot carry a surd part".into(),
            ));
        }
        let field = if surd.is_zero() {
            Field::Rational
        } else {
            field
        };
        Ok(QuadScalar {
            rational,
            surd,
            field,
        })
    }

    pub fn from_rational(r: BigRational) -> Self {
        QuadScalar {
            rational: r,
            surd: BigRational::zero(),
            field: Field::Rational,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `(a_num/a_den) + (b_num/b_den)·√d`.
    pub fn surd(a_num: i64, a_den: i64, b_num: i64, b_den: i64, field: Field) -> Result<Self> {
        Self::new(
            BigRational::new(a_num.into(), a_den.into()),
            BigRational::new(b_num.into(), b_den.into()),
            field,
        )
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    /// Odd multiple of 1/2.
    pub fn is_half_odd(&self) -> bool {
        self.is_rational() && !self.rational.is_integer() && {
            let twice = &self.rational * BigRational::from_integer(BigInt::from(2));
            twice.is_integer()
        }
    }

    pub fn try_add(&self, rhs: &QuadScalar) -> Result<QuadScalar> {
        let field = self.field.join(rhs.field)?;
        Self::new(
            &self.rational + &rhs.rational,
            &self.surd + &rhs.surd,
            field,
        )
    }

    pub fn try_sub(&self, rhs: &QuadScalar) -> Result<QuadScalar> {
        self.try_add(&-rhs)
    }

    pub fn try_mul(&self, rhs: &QuadScalar) -> Result<QuadScalar> {
        let field = self.field.join(rhs.field)?;
        let d = BigRational::from_integer(BigInt::from(field.radicand()));
        // (a + b√d)(c + e√d) = (ac + bed) + (ae + bc)√d
        let rational = &self.rational * &rhs.rational + &self.surd * &rhs.surd * d;
        let surd = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        Self::new(rational, surd, field)
    }

    /// Galois conjugate `a − b√d`.
    pub fn galois_conj(&self) -> QuadScalar {
        QuadScalar {
            rational: self.rational.clone(),
            surd: -&self.surd,
            field: self.field,
        }
    }

    /// Field norm `a² − d·b²`, always rational.
    pub fn field_norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.field.radicand()));
        &self.rational * &self.rational - &self.surd * &self.surd * d
    }

    pub fn recip(&self) -> Result<QuadScalar> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let n = self.field_norm();
        let c = self.galois_conj();
        Self::new(&c.rational / &n, &c.surd / &n, self.field)
    }

    pub fn try_div(&self, rhs: &QuadScalar) -> Result<QuadScalar> {
        self.try_mul(&rhs.recip()?)
    }

    /// Exact sign. Compares `a` against `−b√d` by squaring.
    pub fn signum(&self) -> Ordering {
        let a = self.rational.cmp(&BigRational::zero());
        let b = self.surd.cmp(&BigRational::zero());
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, _) => {
                // opposite signs: sign of a wins iff a² > d·b²
                match self.field_norm().cmp(&BigRational::zero()) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Canonical text with an explicit leading `+` on positive values.
    pub fn to_signed_string(&self) -> String {
        let s = self.to_string();
        if self.signum() == Ordering::Greater && !s.starts_with('-') {
            format!("+{s}")
        } else {
            s
        }
    }
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<BigRational> for QuadScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write_ratio(f, &self.rational);
        }
        if !self.rational.is_zero() {
            write_ratio(f, &self.rational)?;
            if self.surd.is_positive() {
                f.write_str("+")?;
            }
        }
        write_ratio(f, &self.surd)?;
        write!(f, "*sqrt({})", self.field.radicand())
    }
}

impl FromStr for QuadScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse_scalar(s)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;

    fn neg(self) -> QuadScalar {
        QuadScalar {
            rational: -&self.rational,
            surd: -&self.surd,
            field: self.field,
        }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;

    fn neg(self) -> QuadScalar {
        -&self
    }
}

// Operator forms panic on mixed √2/√5 operands; use the `try_` methods where
// the fields are not known to agree.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;

            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }

        impl $tr for QuadScalar {
            type Output = QuadScalar;

            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl serde::Serialize for QuadScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QuadScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> QuadScalar {
        text.parse().unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let q = QuadScalar::ratio(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(QuadScalar::ratio(4, 2).to_string(), "2");
    }

    #[test]
    fn rational_tag_when_surd_vanishes() {
        let a = QuadScalar::surd(1, 2, 1, 2, Field::Sqrt2).unwrap();
        let b = QuadScalar::surd(0, 1, -1, 2, Field::Sqrt2).unwrap();
        let sum = &a + &b;
        assert_eq!(sum.field(), Field::Rational);
        assert_eq!(sum, QuadScalar::ratio(1, 2));
    }

    #[test]
    fn mixed_extensions_are_rejected() {
        let a = s("1*sqrt(2)");
        let b = s("1*sqrt(5)");
        assert!(matches!(
            a.try_add(&b),
            Err(Error::FieldMismatch { left: 2, right: 5 })
        ));
        assert!(a.try_mul(&b).is_err());
        // a rational operand coerces into either extension
        assert_eq!(a.try_add(&QuadScalar::one()).unwrap(), s("1+1*sqrt(2)"));
    }

    #[test]
    fn rational_field_rejects_surd() {
        assert!(QuadScalar::surd(0, 1, 1, 1, Field::Rational).is_err());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = s("sqrt(2)");
        assert_eq!(&r * &r, QuadScalar::int(2));
    }

    #[test]
    fn golden_ratio_identity() {
        // φ² = φ + 1
        let phi = s("1/2+1/2*sqrt(5)");
        assert_eq!(&phi * &phi, &phi + &QuadScalar::one());
        assert_eq!(phi.recip().unwrap(), s("-1/2+1/2*sqrt(5)"));
    }

    #[test]
    fn conjugate_product_is_field_norm() {
        let x = s("3/4-5/7*sqrt(5)");
        let p = &x * &x.galois_conj();
        assert_eq!(p, QuadScalar::from_rational(x.field_norm()));
    }

    #[test]
    fn sign_of_mixed_terms() {
        assert_eq!(s("1-1*sqrt(2)").signum(), Ordering::Less);
        assert_eq!(s("-1+1*sqrt(2)").signum(), Ordering::Greater);
        assert_eq!(s("3-1*sqrt(5)").signum(), Ordering::Greater);
        assert_eq!(QuadScalar::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn signed_text() {
        assert_eq!(QuadScalar::one().to_signed_string(), "+1");
        assert_eq!(QuadScalar::ratio(-1, 2).to_signed_string(), "-1/2");
        assert_eq!(QuadScalar::zero().to_signed_string(), "0");
        assert_eq!(s("1/6*sqrt(2)").to_signed_string(), "+1/6*sqrt(2)");
    }

    #[test]
    fn half_odd_predicate() {
        assert!(QuadScalar::ratio(3, 2).is_half_odd());
        assert!(QuadScalar::ratio(-1, 2).is_half_odd());
        assert!(!QuadScalar::ratio(1, 4).is_half_odd());
        assert!(!QuadScalar::int(1).is_half_odd());
    }

    #[test]
    fn display_forms() {
        assert_eq!(s("0+1/2*sqrt(2)").to_string(), "1/2*sqrt(2)");
        assert_eq!(s("-1/2 - 1/2*sqrt(5)").to_string(), "-1/2-1/2*sqrt(5)");
    }
}
