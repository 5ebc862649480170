//! Small exact linear algebra over the integers: 3x3 determinants and
//! adjugates, Hermite normal form, and rational lattices with a common
//! denominator (used for duals and local gluing).

pub type Mat3 = [[i64; 3]; 3];
pub type Mat3W = [[i128; 3]; 3];

pub const IDENTITY: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

pub fn det3(m: &Mat3) -> i128 {
    let w = widen(m);
    det3w(&w)
}

pub fn det3w(m: &Mat3W) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn widen(m: &Mat3) -> Mat3W {
    let mut w = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            w[i][j] = m[i][j] as i128;
        }
    }
    w
}

pub fn narrow(m: &Mat3W) -> Mat3 {
    let mut o = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            o[i][j] = i64::try_from(m[i][j]).expect("matrix entry overflows i64");
        }
    }
    o
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    narrow(&mat_mul_w(&widen(a), &widen(b)))
}

pub fn mat_mul_w(a: &Mat3W, b: &Mat3W) -> Mat3W {
    let mut o = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                o[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    o
}

pub fn mat_vec(a: &Mat3, x: &[i64; 3]) -> [i64; 3] {
    let mut o = [0i64; 3];
    for i in 0..3 {
        let mut acc = 0i128;
        for k in 0..3 {
            acc += a[i][k] as i128 * x[k] as i128;
        }
        o[i] = i64::try_from(acc).expect("vector entry overflows i64");
    }
    o
}

pub fn transpose(a: &Mat3) -> Mat3 {
    let mut o = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            o[i][j] = a[j][i];
        }
    }
    o
}

/// Adjugate: `adj(A) · A = det(A) · I`.
pub fn adjugate_w(m: &Mat3W) -> Mat3W {
    let c = |i: usize, j: usize| -> i128 {
        let r = [(i + 1) % 3, (i + 2) % 3];
        let s = [(j + 1) % 3, (j + 2) % 3];
        m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
    };
    // adj = transpose of cofactor matrix; with cyclic index choice above the
    // cofactor signs are already absorbed.
    let mut o = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            o[i][j] = c(j, i);
        }
    }
    o
}

/// Inverse of a unimodular matrix (det ±1), exact.
pub fn inverse_unimodular(m: &Mat3) -> Mat3 {
    let d = det3(m);
    assert!(d == 1 || d == -1, "matrix is not unimodular");
    let adj = adjugate_w(&widen(m));
    let mut o = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            o[i][j] = i64::try_from(adj[i][j] / d).unwrap();
        }
    }
    o
}

/// Hermite normal form of the lattice generated by `gens` (row vectors).
///
/// Requires full rank 3. The result is the unique upper-triangular basis
/// with positive pivots and above-pivot entries reduced into `[0, pivot)`.
pub fn hnf_rows(gens: &[[i128; 3]]) -> Mat3W {
    let mut rows: Vec<[i128; 3]> = gens.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..3 {
        loop {
            // Find the row at or below pivot_row with the smallest nonzero
            // entry in this column.
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if rows[r][col] != 0 {
                    best = match best {
                        None => Some(r),
                        Some(b) if rows[r][col].abs() < rows[b][col].abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let b = best.expect("generators do not have full rank");
            rows.swap(pivot_row, b);
            if rows[pivot_row][col] < 0 {
                for v in rows[pivot_row].iter_mut() {
                    *v = -*v;
                }
            }
            let p = rows[pivot_row][col];
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                let q = rows[r][col].div_euclid(p);
                if q != 0 {
                    for c in 0..3 {
                        rows[r][c] -= q * rows[pivot_row][c];
                    }
                }
                if rows[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        pivot_row += 1;
    }
    let mut h = [[0i128; 3]; 3];
    for i in 0..3 {
        h[i] = rows[i];
    }
    // Reduce above-pivot entries.
    for i in (1..3).rev() {
        let p = h[i][i];
        for r in 0..i {
            let q = h[r][i].div_euclid(p);
            if q != 0 {
                for c in 0..3 {
                    h[r][c] -= q * h[i][c];
                }
            }
        }
    }
    h
}

/// Lattice in `ℚ³` represented by an integer row basis over a common
/// positive denominator; kept in a canonical (HNF, reduced) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatLattice {
    pub basis: Mat3W,
    pub den: i128,
}

impl RatLattice {
    pub fn new(gens: &[[i128; 3]], den: i128) -> RatLattice {
        assert!(den > 0);
        let h = hnf_rows(gens);
        let mut l = RatLattice { basis: h, den };
        l.reduce();
        l
    }

    pub fn from_integer_basis(m: &Mat3W) -> RatLattice {
        RatLattice::new(&m.to_vec(), 1)
    }

    fn reduce(&mut self) {
        let mut g = self.den;
        for r in &self.basis {
            for &v in r {
                g = gcd_i128(g, v);
            }
        }
        if g > 1 {
            for r in self.basis.iter_mut() {
                for v in r.iter_mut() {
                    *v /= g;
                }
            }
            self.den /= g;
        }
    }

    /// Dual with respect to the standard inner product scaled by nothing:
    /// rows of `den · (basisᵀ)⁻¹`.
    pub fn dual(&self) -> RatLattice {
        let d = det3w(&self.basis);
        assert!(d != 0);
        let adj = adjugate_w(&self.basis);
        // (basis⁻¹)ᵀ = adjᵀ / d; lattice rows scaled by self.den.
        let mut rows = Vec::new();
        for i in 0..3 {
            rows.push([adj[0][i] * self.den, adj[1][i] * self.den, adj[2][i] * self.den]);
        }
        let (num, den) = if d < 0 {
            (rows.iter().map(|r| [-r[0], -r[1], -r[2]]).collect::<Vec<_>>(), -d)
        } else {
            (rows, d)
        };
        RatLattice::new(&num, den)
    }

    pub fn sum(&self, other: &RatLattice) -> RatLattice {
        let l = lcm_i128(self.den, other.den);
        let (sa, sb) = (l / self.den, l / other.den);
        let mut gens = Vec::with_capacity(6);
        for r in &self.basis {
            gens.push([r[0] * sa, r[1] * sa, r[2] * sa]);
        }
        for r in &other.basis {
            gens.push([r[0] * sb, r[1] * sb, r[2] * sb]);
        }
        RatLattice::new(&gens, l)
    }

    pub fn intersect(&self, other: &RatLattice) -> RatLattice {
        self.dual().sum(&other.dual()).dual()
    }

    /// Scales the lattice by the rational `num/den`.
    pub fn scale(&self, num: i128, den: i128) -> RatLattice {
        assert!(num > 0 && den > 0);
        let gens: Vec<[i128; 3]> =
            self.basis.iter().map(|r| [r[0] * num, r[1] * num, r[2] * num]).collect();
        RatLattice::new(&gens, self.den * den)
    }
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm_i128(a: i128, b: i128) -> i128 {
    a / gcd_i128(a, b) * b
}
