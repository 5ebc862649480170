//! Gram matrices of classically integral ternary lattices, basis vectors,
//! and the named forms and parametric families used throughout the crate.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Integer basis vector of a ternary lattice.
pub type Vector3 = [i64; 3];

/// Symmetric 3x3 integer Gram matrix of a positive definite lattice.
///
/// Six entries are stored as `(a11, a22, a33, a23, a13, a12)`, the same
/// order used for text input and JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GramMatrix {
    pub a11: i64,
    pub a22: i64,
    pub a33: i64,
    pub a23: i64,
    pub a13: i64,
    pub a12: i64,
}

impl GramMatrix {
    /// Builds from the six stored entries, checking positive definiteness.
    pub fn new(a11: i64, a22: i64, a33: i64, a23: i64, a13: i64, a12: i64) -> Result<Self> {
        let g = GramMatrix { a11, a22, a33, a23, a13, a12 };
        g.check_positive_definite()?;
        Ok(g)
    }

    /// Builds from a full 3x3 array, rejecting asymmetric input.
    pub fn from_rows(rows: [[i64; 3]; 3]) -> Result<Self> {
        if rows[0][1] != rows[1][0] || rows[0][2] != rows[2][0] || rows[1][2] != rows[2][1] {
            return Err(Error::InvalidForm("matrix is not symmetric".into()));
        }
        Self::new(rows[0][0], rows[1][1], rows[2][2], rows[1][2], rows[0][2], rows[0][1])
    }

    /// Builds without the positive definiteness check; for internal
    /// intermediates that are validated later.
    pub(crate) fn raw(a11: i64, a22: i64, a33: i64, a23: i64, a13: i64, a12: i64) -> Self {
        GramMatrix { a11, a22, a33, a23, a13, a12 }
    }

    pub fn rows(&self) -> [[i64; 3]; 3] {
        [
            [self.a11, self.a12, self.a13],
            [self.a12, self.a22, self.a23],
            [self.a13, self.a23, self.a33],
        ]
    }

    pub fn entries(&self) -> [i64; 6] {
        [self.a11, self.a22, self.a33, self.a23, self.a13, self.a12]
    }

    fn check_positive_definite(&self) -> Result<()> {
        let a = self.rows();
        let m1 = a[0][0] as i128;
        let m2 = a[0][0] as i128 * a[1][1] as i128 - (a[0][1] as i128).pow(2);
        let m3 = self.det_i128();
        if m1 > 0 && m2 > 0 && m3 > 0 {
            Ok(())
        } else {
            Err(Error::NotPositiveDefinite)
        }
    }

    pub(crate) fn det_i128(&self) -> i128 {
        let [a, b, c, r, s, t] =
            [self.a11 as i128, self.a22 as i128, self.a33 as i128, self.a23 as i128, self.a13 as i128, self.a12 as i128];
        a * b * c + 2 * r * s * t - a * r * r - b * s * s - c * t * t
    }

    /// Determinant of the Gram matrix (the discriminant of the lattice).
    pub fn det(&self) -> i64 {
        i64::try_from(self.det_i128()).expect("discriminant overflows i64")
    }

    /// Value of the quadratic form at `x`.
    pub fn value(&self, x: &Vector3) -> i64 {
        let q = self.value_i128(x);
        i64::try_from(q).expect("form value overflows i64")
    }

    pub(crate) fn value_i128(&self, x: &Vector3) -> i128 {
        let (x1, x2, x3) = (x[0] as i128, x[1] as i128, x[2] as i128);
        self.a11 as i128 * x1 * x1
            + self.a22 as i128 * x2 * x2
            + self.a33 as i128 * x3 * x3
            + 2 * (self.a23 as i128 * x2 * x3 + self.a13 as i128 * x1 * x3 + self.a12 as i128 * x1 * x2)
    }

    /// Bilinear form value `B(x, y)` (so `B(x, x) = Q(x)`).
    pub fn bilinear(&self, x: &Vector3, y: &Vector3) -> i64 {
        let g = self.rows();
        let mut acc: i128 = 0;
        for i in 0..3 {
            for j in 0..3 {
                acc += g[i][j] as i128 * x[i] as i128 * y[j] as i128;
            }
        }
        i64::try_from(acc).expect("bilinear value overflows i64")
    }

    /// Gram matrix in the basis whose columns are `t`: `tᵀ G t`.
    pub fn transform(&self, t: &[[i64; 3]; 3]) -> GramMatrix {
        let g = self.rows();
        let mut gt = [[0i128; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0i128;
                for k in 0..3 {
                    acc += g[i][k] as i128 * t[k][j] as i128;
                }
                gt[i][j] = acc;
            }
        }
        let mut out = [[0i128; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0i128;
                for k in 0..3 {
                    acc += t[k][i] as i128 * gt[k][j];
                }
                out[i][j] = acc;
            }
        }
        GramMatrix::raw(
            i64::try_from(out[0][0]).unwrap(),
            i64::try_from(out[1][1]).unwrap(),
            i64::try_from(out[2][2]).unwrap(),
            i64::try_from(out[1][2]).unwrap(),
            i64::try_from(out[0][2]).unwrap(),
            i64::try_from(out[0][1]).unwrap(),
        )
    }

    /// Gcd of all Gram entries; generates the scale ideal.
    pub fn content(&self) -> i64 {
        self.entries().iter().fold(0i64, |g, &e| gcd(g, e.abs()))
    }

    /// Divides every entry by the content, returning the primitive form and
    /// the scale factor.
    pub fn primitivize(&self) -> (GramMatrix, i64) {
        let c = self.content();
        debug_assert!(c > 0);
        (self.scale_div(c), c)
    }

    pub(crate) fn scale_div(&self, c: i64) -> GramMatrix {
        let e = self.entries();
        debug_assert!(e.iter().all(|&v| v % c == 0));
        GramMatrix::raw(e[0] / c, e[1] / c, e[2] / c, e[3] / c, e[4] / c, e[5] / c)
    }

    pub(crate) fn scale_mul(&self, c: i64) -> GramMatrix {
        let e = self.entries();
        GramMatrix::raw(e[0] * c, e[1] * c, e[2] * c, e[3] * c, e[4] * c, e[5] * c)
    }

    /// True if every value of the form is even (all diagonal entries even).
    pub fn is_even(&self) -> bool {
        self.a11 % 2 == 0 && self.a22 % 2 == 0 && self.a33 % 2 == 0
    }
}

/// Primitive form together with the positive scale divided out of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScaledLattice {
    pub primitive: GramMatrix,
    pub scale: i64,
}

impl ScaledLattice {
    pub fn of(g: &GramMatrix) -> ScaledLattice {
        let (primitive, scale) = g.primitivize();
        ScaledLattice { primitive, scale }
    }

    pub fn gram(&self) -> GramMatrix {
        self.primitive.scale_mul(self.scale)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Diagonal form `<a, b, c>`.
pub fn diag(a: i64, b: i64, c: i64) -> GramMatrix {
    GramMatrix::raw(a, b, c, 0, 0, 0)
}

/// The standard cubic lattice `<1,1,1>`.
pub fn cubic() -> GramMatrix {
    diag(1, 1, 1)
}

/// The root lattice of type A3.
pub fn a3() -> GramMatrix {
    GramMatrix::from_rows([[2, 1, 0], [1, 2, 1], [0, 1, 2]]).unwrap()
}

/// The primitive adjoint of the A3 root lattice.
pub fn a3_adjoint() -> GramMatrix {
    GramMatrix::from_rows([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]).unwrap()
}

/// Order-12 family (order 48 at the exceptional parameters (1,1), (1,2), (4,3)).
pub fn k1(a: i64, b: i64) -> GramMatrix {
    GramMatrix::from_rows([[2 * a, -a, -a], [-a, 2 * a, 0], [-a, 0, b]]).unwrap()
}

/// Order-24 family: the hexagonal plane scaled by `a`, orthogonal to `<b>`.
pub fn k2(a: i64, b: i64) -> GramMatrix {
    GramMatrix::from_rows([[2 * a, -a, 0], [-a, 2 * a, 0], [0, 0, b]]).unwrap()
}

/// Order-16 family `<a, a, b>` (order 48 at (1,1)).
pub fn k3(a: i64, b: i64) -> GramMatrix {
    diag(a, a, b)
}

/// Order-16 family with a non-split order-4 isometry (order 48 at (1,2) and (2,3)).
pub fn k4(a: i64, b: i64) -> GramMatrix {
    GramMatrix::from_rows([[2 * a, 0, -a], [0, 2 * a, -a], [-a, -a, b]]).unwrap()
}

/// Order-8 family `<a, b, c>` with distinct entries.
pub fn m1(a: i64, b: i64, c: i64) -> GramMatrix {
    diag(a, b, c)
}

/// Order-8 family `<a> ⊥ [[(b+c)/2,(b-c)/2],[(b-c)/2,(b+c)/2]]`; `b ≡ c (mod 2)`.
pub fn m2(a: i64, b: i64, c: i64) -> GramMatrix {
    assert!((b - c) % 2 == 0, "m2 requires b = c mod 2");
    GramMatrix::from_rows([
        [a, 0, 0],
        [0, (b + c) / 2, (b - c) / 2],
        [0, (b - c) / 2, (b + c) / 2],
    ])
    .unwrap()
}

/// Order-8 family of index 2 over `<2a, 2b, ...>`; `a + b + c` must be even.
pub fn m3(a: i64, b: i64, c: i64) -> GramMatrix {
    assert!((a + b + c) % 2 == 0, "m3 requires a + b + c even");
    GramMatrix::from_rows([[2 * a, 0, a], [0, 2 * b, b], [a, b, (a + b + c) / 2]]).unwrap()
}

/// Order-8 family of index 4 over a diagonal lattice.
pub fn m4(a: i64, b: i64, c: i64) -> GramMatrix {
    GramMatrix::from_rows([[4 * a, 2 * a, 2 * a], [2 * a, a + b, a], [2 * a, a, a + c]]).unwrap()
}

/// The hexagonal plane `[[2,1],[1,2]]` orthogonal to `<b>`: the generic
/// order-24 stable form of discriminant `3b`.
pub fn hex_perp(b: i64) -> GramMatrix {
    GramMatrix::from_rows([[2, 1, 0], [1, 2, 0], [0, 0, b]]).unwrap()
}

/// The family `K₄(1, 6·7^{2n} + 1)`, closed under the Watson transformation
/// at 7; member `n` has discriminant `24·7^{2n}`.
pub fn k4_chain(n: u32) -> GramMatrix {
    let b = 6 * 49i64.pow(n) + 1;
    k4(1, b)
}
