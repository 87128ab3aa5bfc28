//! Quaternions `w + x i + y j + z k` with exact quadratic-field components.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Field, QuadScalar};
use crate::text;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    w: QuadScalar,
    x: QuadScalar,
    y: QuadScalar,
    z: QuadScalar,
}

impl Quaternion {
    /// Builds a quaternion, rejecting components from different extensions.
    pub fn new(w: QuadScalar, x: QuadScalar, y: QuadScalar, z: QuadScalar) -> Result<Self> {
        let q = Quaternion { w, x, y, z };
        q.try_field()?;
        Ok(q)
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion {
            w: w.into(),
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    /// All four components divided by `den`.
    pub fn from_ratios(num: [i64; 4], den: i64) -> Self {
        let [w, x, y, z] = num.map(|n| QuadScalar::ratio(n, den));
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn w(&self) -> &QuadScalar {
        &self.w
    }

    pub fn x(&self) -> &QuadScalar {
        &self.x
    }

    pub fn y(&self) -> &QuadScalar {
        &self.y
    }

    pub fn z(&self) -> &QuadScalar {
        &self.z
    }

    pub fn components(&self) -> [&QuadScalar; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    fn try_field(&self) -> Result<Field> {
        self.components()
            .iter()
            .try_fold(Field::Rational, |acc, c| acc.join(c.field()))
    }

    /// The field the components live in; rational-valued quaternions report
    /// [`Field::Rational`].
    pub fn field(&self) -> Field {
        self.try_field()
            .expect("quaternion components share a field by construction")
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, rhs: &Quaternion) -> Result<Quaternion> {
        self.field().join(rhs.field())?;
        Ok(Quaternion {
            w: self.w.try_add(&rhs.w)?,
            x: self.x.try_add(&rhs.x)?,
            y: self.y.try_add(&rhs.y)?,
            z: self.z.try_add(&rhs.z)?,
        })
    }

    pub fn try_sub(&self, rhs: &Quaternion) -> Result<Quaternion> {
        self.try_add(&-rhs)
    }

    /// Hamilton product.
    pub fn try_mul(&self, rhs: &Quaternion) -> Result<Quaternion> {
        self.field().join(rhs.field())?;
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Ok(Quaternion {
            w: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            x: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            y: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            z: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        })
    }

    pub fn scale(&self, s: &QuadScalar) -> Result<Quaternion> {
        Ok(Quaternion {
            w: self.w.try_mul(s)?,
            x: self.x.try_mul(s)?,
            y: self.y.try_mul(s)?,
            z: self.z.try_mul(s)?,
        })
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    pub fn scal(&self) -> QuadScalar {
        self.w.clone()
    }

    pub fn norm(&self) -> QuadScalar {
        self.components()
            .iter()
            .map(|c| *c * *c)
            .fold(QuadScalar::zero(), |acc, t| acc + t)
    }

    /// Multiplicative inverse `conj(q) / norm(q)`.
    pub fn inverse(&self) -> Result<Quaternion> {
        self.conj().scale(&self.norm().recip()?)
    }

    /// Compact canonical text `(w,x,y,z)` without spaces.
    pub fn to_compact_string(&self) -> String {
        let [w, x, y, z] = self.components();
        format!("({w},{x},{y},{z})")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        text::parse_quaternion(s)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Quaternion> for &Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: &Quaternion) -> Quaternion {
                self.$checked(rhs).expect("quaternion field mismatch")
            }
        }

        impl $tr for Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$checked(&rhs).expect("quaternion field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl serde::Serialize for Quaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Quaternion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
