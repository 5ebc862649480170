//! Minkowski reduction and a canonical class representative.
//!
//! The reduced basis is built straight from the definition: the first basis
//! vector attains the minimum of the form, the second attains the minimum
//! over vectors completing the first to a primitive pair, and the third the
//! minimum over vectors completing the pair to a basis.  Because every
//! admissible triple is enumerated, the lexicographically smallest Gram
//! entry tuple `(a11,a22,a33,a23,a13,a12)` over all reduced bases is a
//! total isometry invariant, which makes class deduplication a plain
//! equality check.

use crate::error::{Error, Result};
use crate::gram::{gcd, GramMatrix, Vector3};
use crate::linalg::{det3, Mat3, IDENTITY};
use crate::shortvec::short_vectors;

fn key(g: &GramMatrix) -> [i64; 6] {
    g.entries()
}

/// True if the pair spans a primitive (basis-extendable) rank-2 sublattice.
fn primitive_pair(u: &Vector3, v: &Vector3) -> bool {
    let m0 = u[1] * v[2] - u[2] * v[1];
    let m1 = u[2] * v[0] - u[0] * v[2];
    let m2 = u[0] * v[1] - u[1] * v[0];
    gcd(gcd(m0, m1), m2) == 1
}

fn basis_det(u: &Vector3, v: &Vector3, w: &Vector3) -> i64 {
    let m: Mat3 = [[u[0], v[0], w[0]], [u[1], v[1], w[1]], [u[2], v[2], w[2]]];
    det3(&m) as i64
}

/// Minkowski-reduces `g`, returning the canonical reduced Gram matrix and a
/// unimodular transform `t` with `tᵀ · g · t` equal to the reduced form.
/// Already-canonical input gets the identity transform.
pub fn minkowski_reduce(g: &GramMatrix) -> Result<(GramMatrix, Mat3)> {
    if g.det_i128() <= 0 || g.a11 <= 0 {
        return Err(Error::NotPositiveDefinite);
    }
    let max_diag = g.a11.max(g.a22).max(g.a33);

    // Successive minima by growing the search radius until each level has a
    // witness.
    let mut bound = max_diag;
    let (mu1, mu2, mu3, vecs) = loop {
        let vecs = short_vectors(g, bound);
        let mu1 = vecs.iter().map(|(_, q)| *q).min().unwrap();
        let v1s: Vec<Vector3> =
            vecs.iter().filter(|(_, q)| *q == mu1).map(|(v, _)| *v).collect();
        let mu2 = vecs
            .iter()
            .filter(|(v, _)| v1s.iter().any(|u| primitive_pair(u, v)))
            .map(|(_, q)| *q)
            .min();
        let mu3 = match mu2 {
            None => None,
            Some(m2) => vecs
                .iter()
                .filter(|(_, q)| *q >= m2)
                .flat_map(|(w, qw)| {
                    vecs.iter()
                        .filter(move |(_, qv)| *qv == m2)
                        .filter_map(move |(v, _)| {
                            v1s.iter()
                                .find(|u| {
                                    primitive_pair(u, v) && basis_det(u, v, w).abs() == 1
                                })
                                .map(|_| *qw)
                        })
                })
                .min(),
        };
        if let (Some(m2), Some(m3)) = (mu2, mu3) {
            break (mu1, m2, m3, vecs);
        }
        bound *= 2;
    };

    // Enumerate every admissible reduced triple and take the lex-min Gram.
    let at = |q: i64| -> Vec<Vector3> {
        vecs.iter().filter(|(_, qq)| *qq == q).map(|(v, _)| *v).collect()
    };
    let v1s = at(mu1);
    let v2s = at(mu2);
    let v3s = at(mu3);
    let mut best: Option<([i64; 6], Mat3)> = None;
    for u in &v1s {
        for v in &v2s {
            if !primitive_pair(u, v) {
                continue;
            }
            let b12 = g.bilinear(u, v);
            if 2 * b12.abs() > mu1 {
                continue;
            }
            for w in &v3s {
                if basis_det(u, v, w).abs() != 1 {
                    continue;
                }
                let b13 = g.bilinear(u, w);
                let b23 = g.bilinear(v, w);
                if 2 * b13.abs() > mu1 || 2 * b23.abs() > mu2 {
                    continue;
                }
                let cand = [mu1, mu2, mu3, b23, b13, b12];
                if best.as_ref().map_or(true, |(k, _)| cand < *k) {
                    let t: Mat3 =
                        [[u[0], v[0], w[0]], [u[1], v[1], w[1]], [u[2], v[2], w[2]]];
                    best = Some((cand, t));
                }
            }
        }
    }
    let (k, t) = best.ok_or_else(|| Error::structural("no reduced basis found"))?;
    let reduced = GramMatrix::raw(k[0], k[1], k[2], k[3], k[4], k[5]);
    debug_assert_eq!(g.transform(&t), reduced);
    if key(g) == key(&reduced) {
        return Ok((reduced, IDENTITY));
    }
    Ok((reduced, t))
}

/// Canonical representative of the isometry class of `g`.
pub fn canonical_form(g: &GramMatrix) -> Result<GramMatrix> {
    Ok(minkowski_reduce(g)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::{cubic, diag, GramMatrix};
    use crate::linalg::mat_mul;

    #[test]
    fn already_reduced_is_fixed_with_identity() {
        let g = diag(1, 1, 25);
        let (r, t) = minkowski_reduce(&g).unwrap();
        assert_eq!(r, g);
        assert_eq!(t, IDENTITY);
    }

    #[test]
    fn chain_member_reduces_to_printed_form() {
        let g = GramMatrix::from_rows([[2, 0, -7], [0, 2, -7], [-7, -7, 343]]).unwrap();
        let (r, _) = minkowski_reduce(&g).unwrap();
        assert_eq!(
            r,
            GramMatrix::from_rows([[2, 0, -1], [0, 2, -1], [-1, -1, 295]]).unwrap()
        );
    }

    #[test]
    fn random_unimodular_images_of_cubic_reduce_back() {
        // Deterministic sequence of unimodular matrices built from shears.
        let shears: Vec<Mat3> = vec![
            [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
            [[1, 0, 1], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 0], [1, 1, 0], [0, 0, 1]],
            [[1, 0, 0], [0, 1, 0], [1, 0, 1]],
        ];
        let mut u: Mat3 = IDENTITY;
        for k in 0..24 {
            u = mat_mul(&u, &shears[k % shears.len()]);
            let g = cubic().transform(&u);
            let (r, t) = minkowski_reduce(&g).unwrap();
            assert_eq!(r, cubic());
            assert_eq!(g.transform(&t), r);
            assert_eq!(det3(&t).abs(), 1);
        }
    }

    #[test]
    fn determinant_preserved() {
        let g = GramMatrix::from_rows([[5, 2, 1], [2, 6, 2], [1, 2, 9]]).unwrap();
        let (r, t) = minkowski_reduce(&g).unwrap();
        assert_eq!(r.det(), g.det());
        assert_eq!(det3(&t).abs(), 1);
        assert!(r.a11 <= r.a22 && r.a22 <= r.a33);
        assert!(2 * r.a12.abs() <= r.a11);
        assert!(2 * r.a13.abs() <= r.a11);
        assert!(2 * r.a23.abs() <= r.a22);
    }

    #[test]
    fn not_positive_definite_rejected() {
        let g = GramMatrix::raw(1, 1, -3, 0, 0, 0);
        assert!(minkowski_reduce(&g).is_err());
    }
}
