//! Fermion number and electric charge read off a Lambek charge.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::{Field, QuadScalar};

/// The fixed charge axis `i + j + k`.
pub fn charge_vector() -> Quaternion {
    Quaternion::i() + Quaternion::j() + Quaternion::k()
}

/// Scalar part of a rational quaternion.
pub fn fermion_number(q: &Quaternion) -> Result<BigRational> {
    if q.field() != Field::Rational {
        return Err(Error::FieldMismatch {
            left: 1,
            right: q.field().radicand(),
        });
    }
    Ok(q.w().as_rational().expect("rational field").clone())
}

/// One third of the scalar part of `(i + j + k)·conj(q)`.
pub fn electric_charge(q: &Quaternion) -> QuadScalar {
    let projected = (&charge_vector() * &q.conj()).scal();
    &projected * &QuadScalar::ratio(1, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    #[test]
    fn charge_vector_is_sum_of_imaginary_units() {
        assert_eq!(charge_vector(), q("(0,1,1,1)"));
    }

    #[test]
    fn fermion_number_examples() {
        assert_eq!(
            fermion_number(&q("(1,0,0,0)")).unwrap(),
            BigRational::from_integer(1.into())
        );
        assert_eq!(
            fermion_number(&q("(0,-1,-1,-1)")).unwrap(),
            BigRational::from_integer(0.into())
        );
        assert_eq!(
            fermion_number(&q("(1/2,-1/2,1/2,-1/2)")).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert!(fermion_number(&q("(1/2*sqrt(2),1/2*sqrt(2),0,0)")).is_err());
    }

    #[test]
    fn electric_charge_examples() {
        assert_eq!(electric_charge(&q("(1,-1,-1,-1)")), QuadScalar::int(-1));
        assert_eq!(
            electric_charge(&q("(1/2,1/2,1/2,-1/2)")),
            QuadScalar::ratio(1, 6)
        );
        assert_eq!(
            electric_charge(&q("(1/2*sqrt(2),1/2*sqrt(2),0,0)")),
            "1/6*sqrt(2)".parse().unwrap()
        );
    }

    #[test]
    fn charge_is_component_sum_over_three() {
        let p = q("(7/3,1/2,-2,5)");
        let sum = &(p.x() + p.y()) + p.z();
        assert_eq!(electric_charge(&p), &sum * &QuadScalar::ratio(1, 3));
    }
}
