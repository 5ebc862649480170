//! The finite orthogonal group of a ternary lattice: elements, symmetries
//! (reflections) with their form values, labels, orthogonal systems, and
//! recognition of the parametric families with large groups.

use crate::error::{Error, Result};
use crate::gram::{diag, GramMatrix, Vector3};
use crate::isom::is_isometric;
use crate::linalg::{det3, inverse_unimodular, mat_mul, mat_vec, transpose, Mat3, IDENTITY};
use crate::reduce::minkowski_reduce;
use crate::shortvec::{primitive_part, short_vectors};
use serde::Serialize;
use std::collections::BTreeSet;

/// Element of `O(G)`: an integer matrix `t` with `tᵀ G t = G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Isometry {
    pub matrix: Mat3,
}

impl Isometry {
    /// Multiplicative order; at most 6 for a ternary isometry group element
    /// of a positive definite lattice.
    pub fn order(&self) -> u32 {
        let mut m = self.matrix;
        for k in 1..=12 {
            if m == IDENTITY {
                return k;
            }
            m = mat_mul(&m, &self.matrix);
        }
        unreachable!("isometry of unbounded order")
    }
}

/// A reflection `τ_x` in a primitive vector `x`, tagged with `Q(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Symmetry {
    pub matrix: Mat3,
    pub axis: Vector3,
    pub q_value: i64,
}

/// Per-class invariant: the group order together with the sorted form
/// values of all symmetries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Label {
    pub order: u32,
    pub q_values: Vec<i64>,
}

impl Label {
    pub fn new(order: u32, mut q_values: Vec<i64>) -> Label {
        q_values.sort_unstable();
        Label { order, q_values }
    }

    /// Label of the same lattice with the form scaled by `c`.
    pub fn scaled(&self, c: i64) -> Label {
        Label { order: self.order, q_values: self.q_values.iter().map(|q| q * c).collect() }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q_values.is_empty() {
            write!(f, "<{}>", self.order)
        } else {
            let qs: Vec<String> = self.q_values.iter().map(|q| q.to_string()).collect();
            write!(f, "<{}; {}>", self.order, qs.join(","))
        }
    }
}

/// Three mutually commuting symmetries (their axes are orthogonal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSystem {
    pub symmetries: [Symmetry; 3],
}

/// The full orthogonal group of `g`, sorted deterministically.
pub fn orthogonal_group(g: &GramMatrix) -> Result<Vec<Isometry>> {
    let (r, t) = minkowski_reduce(g)?;
    let tinv = inverse_unimodular(&t);

    let max_diag = r.a11.max(r.a22).max(r.a33);
    let vecs = short_vectors(&r, max_diag);
    let with_q = |q: i64| -> Vec<Vector3> {
        vecs.iter().filter(|(_, qq)| *qq == q).map(|(v, _)| *v).collect()
    };
    let c1 = with_q(r.a11);
    let c2 = with_q(r.a22);
    let c3 = with_q(r.a33);

    let mut group = Vec::new();
    for u in &c1 {
        for v in &c2 {
            if r.bilinear(u, v) != r.a12 {
                continue;
            }
            for w in &c3 {
                if r.bilinear(u, w) != r.a13 || r.bilinear(v, w) != r.a23 {
                    continue;
                }
                let m: Mat3 = [[u[0], v[0], w[0]], [u[1], v[1], w[1]], [u[2], v[2], w[2]]];
                if det3(&m).abs() == 1 {
                    group.push(m);
                }
            }
        }
    }
    // Conjugate back to the original basis: σ_orig = t σ_red t⁻¹.
    let mut out: Vec<Isometry> = group
        .into_iter()
        .map(|m| Isometry { matrix: mat_mul(&mat_mul(&t, &m), &tinv) })
        .collect();
    out.sort();
    out.dedup();
    debug_assert!(out.len() % 2 == 0 && out.len() <= 48);
    debug_assert!(out.iter().any(|i| i.matrix == IDENTITY));
    Ok(out)
}

/// Order of `O(g)`.
pub fn group_order(g: &GramMatrix) -> Result<u32> {
    Ok(orthogonal_group(g)?.len() as u32)
}

fn trace(m: &Mat3) -> i64 {
    m[0][0] + m[1][1] + m[2][2]
}

/// All reflections in `O(g)`, with axes sign-normalized so the first
/// nonzero coordinate is positive.
pub fn symmetries(g: &GramMatrix) -> Result<Vec<Symmetry>> {
    let group = orthogonal_group(g)?;
    let mut out = Vec::new();
    for iso in &group {
        let m = iso.matrix;
        // A reflection has eigenvalues (-1, 1, 1): det -1, trace 1, m² = I.
        if det3(&m) != -1 || trace(&m) != 1 || mat_mul(&m, &m) != IDENTITY {
            continue;
        }
        let axis = reflection_axis(&m)?;
        out.push(Symmetry { matrix: m, axis, q_value: g.value(&axis) });
    }
    out.sort_by_key(|s| (s.q_value, s.axis));
    Ok(out)
}

/// Primitive (-1)-eigenvector of a reflection, first nonzero coordinate
/// positive.
fn reflection_axis(m: &Mat3) -> Result<Vector3> {
    // Columns of (m - I) span the (-1)-eigenspace image; any nonzero column
    // of m - I is a multiple of the axis since the fixed space has rank 2.
    let mut best: Option<Vector3> = None;
    for j in 0..3 {
        let col = [m[0][j] - ((j == 0) as i64), m[1][j] - ((j == 1) as i64), m[2][j] - ((j == 2) as i64)];
        if col != [0, 0, 0] {
            best = Some(primitive_part(&col));
            break;
        }
    }
    let mut axis = best.ok_or_else(|| Error::structural("reflection without axis"))?;
    let first = axis.iter().find(|&&c| c != 0).copied().unwrap_or(0);
    if first < 0 {
        axis = [-axis[0], -axis[1], -axis[2]];
    }
    debug_assert_eq!(mat_vec(m, &axis), [-axis[0], -axis[1], -axis[2]]);
    Ok(axis)
}

/// The label `⟨|O(g)|; sorted symmetry values⟩`.
pub fn label(g: &GramMatrix) -> Result<Label> {
    let order = group_order(g)?;
    let qs = symmetries(g)?.iter().map(|s| s.q_value).collect();
    Ok(Label::new(order, qs))
}

/// All triples of mutually commuting symmetries.
pub fn orthogonal_systems(g: &GramMatrix) -> Result<Vec<OrthogonalSystem>> {
    let syms = symmetries(g)?;
    let n = syms.len();
    let commute = |a: &Symmetry, b: &Symmetry| {
        mat_mul(&a.matrix, &b.matrix) == mat_mul(&b.matrix, &a.matrix)
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !commute(&syms[i], &syms[j]) {
                continue;
            }
            for k in j + 1..n {
                if commute(&syms[i], &syms[k]) && commute(&syms[j], &syms[k]) {
                    debug_assert_eq!(g.bilinear(&syms[i].axis, &syms[j].axis), 0);
                    debug_assert_eq!(g.bilinear(&syms[i].axis, &syms[k].axis), 0);
                    out.push(OrthogonalSystem { symmetries: [syms[i], syms[j], syms[k]] });
                }
            }
        }
    }
    Ok(out)
}

/// Partition of the symmetries into conjugacy classes under `O(g)`,
/// each class sorted and the classes ordered by their smallest member.
pub fn symmetry_conjugacy_classes(g: &GramMatrix) -> Result<Vec<Vec<Symmetry>>> {
    let group = orthogonal_group(g)?;
    let syms = symmetries(g)?;
    let mut seen: BTreeSet<Mat3> = BTreeSet::new();
    let mut classes = Vec::new();
    for s in &syms {
        if seen.contains(&s.matrix) {
            continue;
        }
        let mut class = Vec::new();
        for phi in &group {
            let conj = mat_mul(&mat_mul(&phi.matrix, &s.matrix), &inverse_unimodular(&phi.matrix));
            if seen.insert(conj) {
                if let Some(t) = syms.iter().find(|x| x.matrix == conj) {
                    class.push(*t);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    Ok(classes)
}

/// Centralizer order of a symmetry inside `O(g)`.
pub fn centralizer_order(g: &GramMatrix, s: &Symmetry) -> Result<u32> {
    let group = orthogonal_group(g)?;
    Ok(group
        .iter()
        .filter(|phi| mat_mul(&phi.matrix, &s.matrix) == mat_mul(&s.matrix, &phi.matrix))
        .count() as u32)
}

/// Family recognition output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    K1,
    K2,
    K3,
    K4,
}

/// Recognizes forms isometric to a member of one of the four parametric
/// families (including the order-48 exceptional members), returning the
/// family tag and its parameters.
pub fn recognize_family(g: &GramMatrix) -> Result<Option<(Family, i64, i64)>> {
    let lab = label(g)?;
    let d = g.det();
    let check = |fam: Family, a: i64, b: i64, target: GramMatrix| -> Option<(Family, i64, i64)> {
        if a > 0 && b > 0 && target.det_i128() > 0 && is_isometric(g, &target).is_some() {
            Some((fam, a, b))
        } else {
            None
        }
    };
    match lab.order {
        12 => {
            // All symmetry values equal 2a; d = a²(3b - 2a).
            let a = lab.q_values[0] / 2;
            if a > 0 && (d % (a * a)) == 0 && (d / (a * a) + 2 * a) % 3 == 0 {
                let b = (d / (a * a) + 2 * a) / 3;
                return Ok(check(Family::K1, a, b, crate::gram::k1(a, b)));
            }
            Ok(None)
        }
        24 => {
            // Values 2a (x3), 6a (x3), b; d = 3a²b.
            let a = lab.q_values[0] / 2;
            if a > 0 && d % (3 * a * a) == 0 {
                let b = d / (3 * a * a);
                return Ok(check(Family::K2, a, b, crate::gram::k2(a, b)));
            }
            Ok(None)
        }
        16 => {
            // K3(a,b): values {a,a,2a,2a,b}, d = a²b;
            // K4(a,b): values {2a,2a,4a,4a,4(b-a)}, d = 4a²(b-a).
            let a3 = lab.q_values[0];
            if a3 > 0 && d % (a3 * a3) == 0 {
                if let Some(hit) = check(Family::K3, a3, d / (a3 * a3), crate::gram::k3(a3, d / (a3 * a3))) {
                    return Ok(Some(hit));
                }
            }
            let a4 = lab.q_values[0] / 2;
            if a4 > 0 && d % (4 * a4 * a4) == 0 {
                let b = d / (4 * a4 * a4) + a4;
                if let Some(hit) = check(Family::K4, a4, b, crate::gram::k4(a4, b)) {
                    return Ok(Some(hit));
                }
            }
            Ok(None)
        }
        48 => {
            // Scalings of the three exceptional lattices.
            let (p, c) = g.primitivize();
            if is_isometric(&p, &crate::gram::cubic()).is_some() {
                return Ok(Some((Family::K3, c, c)));
            }
            if is_isometric(&p, &crate::gram::a3()).is_some() {
                return Ok(Some((Family::K4, c, 2 * c)));
            }
            if is_isometric(&p, &crate::gram::a3_adjoint()).is_some() {
                return Ok(Some((Family::K4, 2 * c, 3 * c)));
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// Embeds `O(L)` into `O(sub)` for a sublattice given by the basis matrix
/// `basis` (columns in `L`-coordinates), returning the conjugated elements
/// when all of them stabilize the sublattice.
pub fn restrict_group(group: &[Isometry], basis: &Mat3) -> Option<Vec<Mat3>> {
    // σ restricted to the sublattice has matrix basis⁻¹ σ basis, which must
    // be integral.
    let d = det3(basis);
    if d == 0 {
        return None;
    }
    let adj = crate::linalg::adjugate_w(&crate::linalg::widen(basis));
    let mut out = Vec::new();
    for iso in group {
        let num = crate::linalg::mat_mul_w(
            &crate::linalg::mat_mul_w(&adj, &crate::linalg::widen(&iso.matrix)),
            &crate::linalg::widen(basis),
        );
        let mut m = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                if num[i][j] % d != 0 {
                    return None;
                }
                m[i][j] = i64::try_from(num[i][j] / d).ok()?;
            }
        }
        out.push(m);
    }
    Some(out)
}

/// Applies `tᵀ · _ · t`-style conjugation to carry isometries of `g` to
/// isometries of `tᵀ g t`.
pub fn conjugate_isometries(isos: &[Isometry], t: &Mat3) -> Vec<Isometry> {
    let tinv = inverse_unimodular(t);
    isos.iter().map(|i| Isometry { matrix: mat_mul(&mat_mul(&tinv, &i.matrix), t) }).collect()
}

/// Checks `tᵀ g t = g` for every listed matrix; test helper for group
/// closure arguments.
pub fn all_preserve(g: &GramMatrix, mats: &[Mat3]) -> bool {
    mats.iter().all(|m| {
        let mt = transpose(m);
        let prod = mat_mul(&mat_mul(&mt, &g.rows()), m);
        prod == g.rows()
    })
}

/// Convenience: the diagonal form `<a,a,b>` together with its label; used
/// by tests.
pub fn k3_label(a: i64, b: i64) -> Result<Label> {
    label(&diag(a, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::{a3, a3_adjoint, cubic, diag, k1, k2, k3, k4};

    #[test]
    fn group_orders_of_named_lattices() {
        assert_eq!(group_order(&cubic()).unwrap(), 48);
        assert_eq!(group_order(&a3()).unwrap(), 48);
        assert_eq!(group_order(&a3_adjoint()).unwrap(), 48);
    }

    #[test]
    fn family_group_orders() {
        assert_eq!(group_order(&k1(1, 3)).unwrap(), 12);
        assert_eq!(group_order(&k1(2, 5)).unwrap(), 12);
        assert_eq!(group_order(&k2(1, 7)).unwrap(), 24);
        assert_eq!(group_order(&k2(2, 3)).unwrap(), 24);
        assert_eq!(group_order(&k3(1, 3)).unwrap(), 16);
        assert_eq!(group_order(&k4(1, 7)).unwrap(), 16);
        // Exceptional parameters give order 48.
        assert_eq!(group_order(&k1(1, 1)).unwrap(), 48);
        assert_eq!(group_order(&k1(1, 2)).unwrap(), 48);
        assert_eq!(group_order(&k1(4, 3)).unwrap(), 48);
        assert_eq!(group_order(&k3(1, 1)).unwrap(), 48);
        assert_eq!(group_order(&k4(1, 2)).unwrap(), 48);
        assert_eq!(group_order(&k4(2, 3)).unwrap(), 48);
    }

    #[test]
    fn symmetry_counts_per_family() {
        assert_eq!(symmetries(&k1(1, 3)).unwrap().len(), 3);
        assert_eq!(symmetries(&k2(1, 7)).unwrap().len(), 7);
        assert_eq!(symmetries(&k3(1, 3)).unwrap().len(), 5);
        assert_eq!(symmetries(&k4(1, 7)).unwrap().len(), 5);
        assert_eq!(symmetries(&cubic()).unwrap().len(), 9);
    }

    #[test]
    fn labels_match_family_shapes() {
        assert_eq!(label(&cubic()).unwrap(), Label::new(48, vec![1, 1, 1, 2, 2, 2, 2, 2, 2]));
        // K2(a,b) with b > 6a: <24; 2a,2a,2a,6a,6a,6a,b>.
        assert_eq!(label(&k2(1, 7)).unwrap(), Label::new(24, vec![2, 2, 2, 6, 6, 6, 7]));
        assert_eq!(label(&k3(1, 3)).unwrap(), Label::new(16, vec![1, 1, 2, 2, 3]));
        assert_eq!(label(&k4(1, 7)).unwrap(), Label::new(16, vec![2, 2, 4, 4, 24]));
        assert_eq!(label(&k1(1, 3)).unwrap(), Label::new(12, vec![2, 2, 2]));
        // Trivial group.
        assert_eq!(label(&diag(2, 3, 7).transform(&[[1, 1, 1], [0, 1, 1], [0, 0, 1]])).unwrap().order, 8);
    }

    #[test]
    fn trivial_label_is_bare_order_two() {
        // A form with no symmetries at all.
        let g = GramMatrix::from_rows([[2, 1, 1], [1, 3, 1], [1, 1, 11]]).unwrap();
        let lab = label(&g).unwrap();
        if lab.order == 2 {
            assert!(lab.q_values.is_empty());
        }
    }

    #[test]
    fn orthogonal_system_counts() {
        assert_eq!(orthogonal_systems(&k2(1, 7)).unwrap().len(), 3);
        assert_eq!(orthogonal_systems(&k3(1, 3)).unwrap().len(), 2);
        assert_eq!(orthogonal_systems(&k4(1, 7)).unwrap().len(), 2);
        assert_eq!(orthogonal_systems(&cubic()).unwrap().len(), 4);
        // Every symmetry belongs to a system when 8 divides the order.
        for g in [k3(1, 3), k4(1, 7), k2(1, 5), cubic(), diag(1, 2, 5)] {
            if group_order(&g).unwrap() % 8 == 0 {
                let systems = orthogonal_systems(&g).unwrap();
                for s in symmetries(&g).unwrap() {
                    assert!(systems.iter().any(|sys| sys.symmetries.contains(&s)));
                }
            }
        }
    }

    #[test]
    fn recognize_family_examples() {
        assert_eq!(recognize_family(&a3_adjoint()).unwrap(), Some((Family::K4, 2, 3)));
        assert_eq!(recognize_family(&cubic()).unwrap(), Some((Family::K3, 1, 1)));
        assert_eq!(recognize_family(&diag(1, 2, 5)).unwrap(), None);
        assert_eq!(recognize_family(&k2(2, 5)).unwrap(), Some((Family::K2, 2, 5)));
        assert_eq!(recognize_family(&k1(2, 5)).unwrap(), Some((Family::K1, 2, 5)));
        assert_eq!(recognize_family(&k4(1, 7)).unwrap(), Some((Family::K4, 1, 7)));
    }

    #[test]
    fn k2_center_symmetry() {
        // τ_{x3} is the only symmetry commuting with everything.
        let g = k2(1, 7);
        let syms = symmetries(&g).unwrap();
        let central: Vec<_> = syms
            .iter()
            .filter(|s| syms.iter().all(|t| mat_mul(&s.matrix, &t.matrix) == mat_mul(&t.matrix, &s.matrix)))
            .collect();
        assert_eq!(central.len(), 1);
        assert_eq!(central[0].q_value, 7);
    }

    #[test]
    fn group_closure_under_composition() {
        for g in [cubic(), k2(1, 7), k4(1, 7), diag(1, 2, 5)] {
            let group = orthogonal_group(&g).unwrap();
            let set: std::collections::BTreeSet<Mat3> =
                group.iter().map(|i| i.matrix).collect();
            for a in &group {
                for b in &group {
                    assert!(set.contains(&mat_mul(&a.matrix, &b.matrix)));
                }
            }
            assert!(set.contains(&[[-1, 0, 0], [0, -1, 0], [0, 0, -1]]));
        }
    }
}
