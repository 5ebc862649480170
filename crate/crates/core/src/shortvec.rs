//! Exhaustive short-vector enumeration and representation counts.

use crate::gram::{GramMatrix, Vector3};
use crate::linalg::{adjugate_w, widen};

/// Integer square root (floor).
pub fn isqrt(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut x = (n as f64).sqrt() as i128;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// All nonzero vectors `x` with `Q(x) <= bound`, sorted lexicographically.
/// The output is closed under negation.
pub fn short_vectors(g: &GramMatrix, bound: i64) -> Vec<(Vector3, i64)> {
    let rows = widen(&g.rows());
    let adj = adjugate_w(&rows);
    let d = g.det_i128();
    debug_assert!(d > 0);
    // For positive definite G, x_i² ≤ Q(x)·(G⁻¹)_{ii} = Q(x)·adj_{ii}/det.
    let lim = |i: usize| -> i64 {
        let num = bound as i128 * adj[i][i];
        isqrt(num / d) as i64 + 1
    };
    let (l1, l2, l3) = (lim(0), lim(1), lim(2));
    let mut out = Vec::new();
    for x1 in -l1..=l1 {
        for x2 in -l2..=l2 {
            for x3 in -l3..=l3 {
                if x1 == 0 && x2 == 0 && x3 == 0 {
                    continue;
                }
                let v = [x1, x2, x3];
                let q = g.value_i128(&v);
                if q <= bound as i128 {
                    out.push((v, q as i64));
                }
            }
        }
    }
    out.sort();
    out
}

/// Number of representations `|{x : Q(x) = t}|`; `r(0) = 1` counts only the
/// zero vector.
pub fn representation_count(t: i64, g: &GramMatrix) -> u64 {
    if t < 0 {
        return 0;
    }
    if t == 0 {
        return 1;
    }
    short_vectors(g, t).iter().filter(|(_, q)| *q == t).count() as u64
}

/// The primitive part of a vector (divided by the gcd of its coordinates).
pub fn primitive_part(v: &Vector3) -> Vector3 {
    let g = crate::gram::gcd(crate::gram::gcd(v[0], v[1]), v[2]);
    if g <= 1 {
        *v
    } else {
        [v[0] / g, v[1] / g, v[2] / g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::{a3, cubic, diag, GramMatrix};

    /// Independent oracle: plain box scan without the adjugate bound.
    fn brute_count(g: &GramMatrix, t: i64) -> u64 {
        let mut n = 0;
        let lim = 4 * t.max(1);
        for x1 in -lim..=lim {
            for x2 in -lim..=lim {
                for x3 in -lim..=lim {
                    if g.value_i128(&[x1, x2, x3]) == t as i128 {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn cubic_minimal_vectors() {
        let v = short_vectors(&cubic(), 1);
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|(_, q)| *q == 1));
    }

    #[test]
    fn a3_minimal_vectors() {
        let v = short_vectors(&a3(), 2);
        assert_eq!(v.iter().filter(|(_, q)| *q == 2).count(), 12);
    }

    #[test]
    fn one_one_three_counts() {
        let g = diag(1, 1, 3);
        let v = short_vectors(&g, 3);
        assert_eq!(v.iter().filter(|(_, q)| *q == 1).count(), 4);
        assert_eq!(v.iter().filter(|(_, q)| *q == 2).count(), 4);
        assert_eq!(v.iter().filter(|(_, q)| *q == 3).count(), 2);
    }

    #[test]
    fn representation_counts_match_brute_force() {
        let forms = [cubic(), a3(), diag(1, 1, 3), diag(2, 3, 7)];
        for g in &forms {
            for t in 0..8 {
                assert_eq!(representation_count(t, g), brute_count(g, t), "t={t} g={g:?}");
            }
        }
    }

    #[test]
    fn representation_examples() {
        assert_eq!(representation_count(1, &cubic()), 6);
        let hex_plus_one =
            GramMatrix::from_rows([[2, 1, 0], [1, 2, 0], [0, 0, 1]]).unwrap();
        assert_eq!(representation_count(1, &hex_plus_one), 2);
        assert_eq!(representation_count(3, &diag(1, 1, 3)), 2);
    }

    #[test]
    fn closed_under_negation() {
        let g = GramMatrix::from_rows([[2, 0, -1], [0, 2, -1], [-1, -1, 7]]).unwrap();
        let v = short_vectors(&g, 6);
        for (x, _) in &v {
            let neg = [-x[0], -x[1], -x[2]];
            assert!(v.iter().any(|(y, _)| *y == neg));
        }
    }
}
