//! Concrete matrices for G6 and the subgroups used alongside it.

use num_bigint::BigInt;

use crate::cyclo::{CycloNum, Rational};
use crate::matrix::Mat2;

fn entry(s: &str) -> CycloNum {
    s.parse().expect("built-in matrix entry")
}

fn scaled(entries: [&str; 4], denom: i64) -> Mat2 {
    let r = Rational::new(BigInt::from(1), BigInt::from(denom));
    Mat2::new(entry(entries[0]), entry(entries[1]), entry(entries[2]), entry(entries[3])).scale(&r)
}

/// Order-3 generator `diag(1, zeta)`.
pub fn generator_a() -> Mat2 {
    Mat2::diag(CycloNum::one(), CycloNum::zeta())
}

/// Order-2 generator.
pub fn generator_b() -> Mat2 {
    scaled(
        ["g^11 - g^7", "-2*g^11 - g^7", "2*g^11 + 4*g^7", "g^7 - g^11"],
        3,
    )
}

pub fn generators() -> Vec<Mat2> {
    vec![generator_a(), generator_b()]
}

/// The Coxeter element `A*B` as written out entry by entry.
pub fn coxeter_displayed() -> Mat2 {
    scaled(
        ["g^11 - g^7", "-2*g^11 - g^7", "2*g^11 - 2*g^7", "2*g^11 + g^7"],
        3,
    )
}

/// Second generator of G4 (the first is `A`); satisfies `B'^3 = I` and `A B' A = B' A B'`.
pub fn g4_generator_b_prime() -> Mat2 {
    scaled(["g^4 - g^8", "3*g^8", "-2*g^8", "-g^4 - 2*g^8"], 3)
}

/// Change of basis carrying `<S>` onto the monomial group G(4,2,2).
///
/// Conjugation `M x M^-1` sends `B` to `diag(1, -1)`, `A B A^-1` to
/// `antidiag(1, 1)` and `A^-1 B A` to `antidiag(-i, i)`.
pub fn change_of_basis() -> Mat2 {
    scaled(
        ["2", "-g^4 - g^7 - 2*g^11", "2*g^4 + 2*g^11", "-g^4 - g^7"],
        2,
    )
}

/// The change-of-basis matrix with lower-left entry `(g^4 + g^11)/2`.
///
/// This variant does not conjugate `B` to a diagonal matrix; it is kept so the
/// discrepancy with [`change_of_basis`] stays checkable.
pub fn change_of_basis_half_entry() -> Mat2 {
    scaled(["2", "-g^4 - g^7 - 2*g^11", "g^4 + g^11", "-g^4 - g^7"], 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relation() {
        let a = generator_a();
        let b = generator_b();
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab.pow(3), ba.pow(3));
    }

    #[test]
    fn g4_presentation() {
        let a = generator_a();
        let bp = g4_generator_b_prime();
        assert!(bp.pow(3).is_identity());
        assert_eq!(a.mul(&bp).mul(&a), bp.mul(&a).mul(&bp));
    }

    #[test]
    fn change_of_basis_images() {
        let m = change_of_basis();
        let a = generator_a();
        let ai = a.inv().unwrap();
        let b = generator_b();
        let one = CycloNum::one();
        let i = CycloNum::i();
        assert_eq!(b.conjugate_by(&m).unwrap(), Mat2::diag(one.clone(), -one.clone()));
        assert_eq!(
            a.mul(&b).mul(&ai).conjugate_by(&m).unwrap(),
            Mat2::antidiag(one.clone(), one)
        );
        assert_eq!(ai.mul(&b).mul(&a).conjugate_by(&m).unwrap(), Mat2::antidiag(-i.clone(), i));
    }

    #[test]
    fn half_entry_variant_fails_on_b() {
        let m = change_of_basis_half_entry();
        let b = generator_b();
        let target = Mat2::diag(CycloNum::one(), CycloNum::from_int(-1));
        assert_ne!(b.conjugate_by(&m).unwrap(), target);
        assert_ne!(b.conjugate_by(&m.inv().unwrap()).unwrap(), target);
    }
}
