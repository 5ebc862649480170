//! Isometry testing between ternary forms.

use crate::gram::GramMatrix;
use crate::linalg::{inverse_unimodular, mat_mul, Mat3};
use crate::reduce::minkowski_reduce;

/// Returns a unimodular `t` with `tᵀ · g1 · t = g2` if the forms are
/// isometric, `None` otherwise.  Deterministic: both forms are reduced to
/// the canonical representative and the witnessing transforms are composed.
pub fn is_isometric(g1: &GramMatrix, g2: &GramMatrix) -> Option<Mat3> {
    if g1.det_i128() != g2.det_i128() {
        return None;
    }
    let (r1, t1) = minkowski_reduce(g1).ok()?;
    let (r2, t2) = minkowski_reduce(g2).ok()?;
    if r1 != r2 {
        return None;
    }
    // t1ᵀ g1 t1 = r = t2ᵀ g2 t2, so (t1 t2⁻¹)ᵀ g1 (t1 t2⁻¹) = g2.
    let t = mat_mul(&t1, &inverse_unimodular(&t2));
    debug_assert_eq!(g1.transform(&t), *g2);
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::{a3_adjoint, cubic, diag, GramMatrix, k1};

    #[test]
    fn permuted_cubic_is_isometric() {
        let g = cubic();
        let perm = GramMatrix::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert!(is_isometric(&g, &perm).is_some());
        let t = is_isometric(&diag(1, 2, 3), &diag(3, 1, 2)).unwrap();
        assert_eq!(diag(1, 2, 3).transform(&t), diag(3, 1, 2));
    }

    #[test]
    fn k1_4_3_is_the_a3_adjoint() {
        assert!(is_isometric(&k1(4, 3), &a3_adjoint()).is_some());
    }

    #[test]
    fn distinct_classes_of_discriminant_three() {
        let hex_plus_one =
            GramMatrix::from_rows([[2, 1, 0], [1, 2, 0], [0, 0, 1]]).unwrap();
        assert!(is_isometric(&diag(1, 1, 3), &hex_plus_one).is_none());
    }

    #[test]
    fn equivalence_properties() {
        let forms =
            [diag(1, 2, 5), diag(2, 3, 7), k1(2, 5), diag(1, 2, 5).transform(&[[1, 1, 0], [0, 1, 0], [0, 0, 1]])];
        for a in &forms {
            assert!(is_isometric(a, a).is_some());
            for b in &forms {
                if let Some(t) = is_isometric(a, b) {
                    let back = is_isometric(b, a).expect("symmetry of isometry");
                    assert_eq!(b.transform(&back), *a);
                    assert_eq!(a.transform(&t), *b);
                }
            }
        }
    }
}
