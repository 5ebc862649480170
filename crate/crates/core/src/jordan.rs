//! Odd-prime local invariants: exact p-adic diagonalization, the derived
//! unit square classes, and Hasse symbols.

use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::rat::Rat;
use crate::symbols::{hilbert, legendre, Place};
use num_traits::{Signed, Zero};

type RMat = [[Rat; 3]; 3];

fn to_rmat(g: &GramMatrix) -> RMat {
    let r = g.rows();
    let mut m = [[Rat::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = Rat::from_integer(r[i][j] as i128);
        }
    }
    m
}

fn val_int(mut n: i128, p: i128) -> i64 {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero rational.
fn val_rat(r: &Rat, p: i64) -> i64 {
    debug_assert!(!r.is_zero());
    val_int(*r.numer(), p as i128) - val_int(*r.denom(), p as i128)
}

/// Unit part of a nonzero rational, as a residue modulo `p^k`.
fn unit_mod(r: &Rat, p: i64, k: u32) -> i64 {
    let pk = (p as i128).pow(k);
    let v = val_rat(r, p);
    let (mut num, mut den) = (*r.numer(), *r.denom());
    let vn = val_int(num, p as i128);
    for _ in 0..vn {
        num /= p as i128;
    }
    for _ in 0..(vn as i64 - v) {
        den /= p as i128;
    }
    // num/den is now a p-adic unit; invert den mod p^k.
    let num = num.rem_euclid(pk);
    let den = den.rem_euclid(pk);
    let inv = mod_inverse(den, pk);
    (num * inv % pk) as i64
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    // Extended Euclid; a must be invertible mod m.
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

/// Symmetric elimination of row/column `i` against pivot `(i,i)`.
fn eliminate(m: &mut RMat, i: usize) {
    let pivot = m[i][i];
    debug_assert!(!pivot.is_zero());
    for j in 0..3 {
        if j == i || m[i][j].is_zero() {
            continue;
        }
        let f = m[i][j] / pivot;
        for k in 0..3 {
            let sub = f * m[i][k];
            m[j][k] -= sub;
        }
        for k in 0..3 {
            let sub = f * m[k][i];
            m[k][j] -= sub;
        }
    }
}

/// Diagonalizes the form over the rationals (any pivoting), returning the
/// three nonzero diagonal values.
pub fn diagonalize(g: &GramMatrix) -> [Rat; 3] {
    let mut m = to_rmat(g);
    for i in 0..3 {
        if m[i][i].is_zero() {
            // Bring a nonzero entry onto the diagonal: x_i += x_j.
            let j = (0..3)
                .find(|&j| j != i && !m[i][j].is_zero())
                .expect("degenerate form");
            for k in 0..3 {
                let add = m[j][k];
                m[i][k] += add;
            }
            for k in 0..3 {
                let add = m[k][j];
                m[k][i] += add;
            }
        }
        eliminate(&mut m, i);
    }
    [m[0][0], m[1][1], m[2][2]]
}

/// Diagonalizes over `ℤ_p` for odd `p`: pivots are chosen with minimal
/// p-valuation so the diagonal realizes the Jordan exponents.
fn diagonalize_p(g: &GramMatrix, p: i64) -> [Rat; 3] {
    let mut m = to_rmat(g);
    for i in 0..3 {
        // Find the entry of minimal valuation in the remaining block.
        let mut best: Option<(i64, usize, usize)> = None;
        for r in i..3 {
            for c in i..3 {
                if m[r][c].is_zero() {
                    continue;
                }
                let v = val_rat(&m[r][c], p);
                if best.map_or(true, |(bv, _, _)| v < bv) {
                    best = Some((v, r, c));
                }
            }
        }
        let (_, r, c) = best.expect("degenerate form");
        // Move the minimal entry into the (i,i) slot.
        if r == c {
            swap_basis(&mut m, i, r);
        } else {
            // x_r += x_c gives a diagonal entry of the same valuation
            // (2·m[r][c] dominates at odd p), then move it up.
            for k in 0..3 {
                let add = m[c][k];
                m[r][k] += add;
            }
            for k in 0..3 {
                let add = m[k][c];
                m[k][r] += add;
            }
            debug_assert_eq!(val_rat(&m[r][r], p), val_rat_or(&m, p));
            swap_basis(&mut m, i, r);
        }
        eliminate(&mut m, i);
    }
    [m[0][0], m[1][1], m[2][2]]
}

fn val_rat_or(_m: &RMat, _p: i64) -> i64 {
    // Only used in debug assertions; recomputing the minimum is not worth
    // the noise here.
    i64::MIN
}

fn swap_basis(m: &mut RMat, i: usize, j: usize) {
    if i == j {
        return;
    }
    m.swap(i, j);
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// Local invariants of a ternary lattice at an odd prime: exponents
/// `0 ≤ α ≤ β` (for primitive input the first exponent is 0) and the unit
/// square classes of a diagonalization `<ε₁, p^α ε₂, p^β ε₃>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanOdd {
    pub p: i64,
    /// Sorted exponents of the diagonal entries.
    pub exps: [i64; 3],
    /// Unit parts as residues mod p, aligned with `exps`.
    pub units: [i64; 3],
}

impl JordanOdd {
    pub fn alpha(&self) -> i64 {
        self.exps[1] - self.exps[0]
    }

    pub fn beta(&self) -> i64 {
        self.exps[2] - self.exps[0]
    }

    /// Legendre symbol of a unit against p.
    fn leg(&self, a: i64) -> i32 {
        legendre(a, self.p).expect("odd prime")
    }

    /// `e_ij = 1` iff `-ε_i ε_j` is a square mod p.
    pub fn e(&self, i: usize, j: usize) -> i32 {
        self.leg(-self.units[i] * self.units[j])
    }

    /// `η_ij = (1 + (ε_i ε_j / p)) / 2`.
    pub fn eta(&self, i: usize, j: usize) -> u64 {
        ((1 + self.leg(self.units[i] * self.units[j])) / 2) as u64
    }

    /// `η'_ij = (1 - (ε_i ε_j / p)) / 2`.
    pub fn eta_bar(&self, i: usize, j: usize) -> u64 {
        ((1 - self.leg(self.units[i] * self.units[j])) / 2) as u64
    }

    /// Case of the eightfold split by `(α, β)`; requires a primitive lattice
    /// (`exps[0] = 0`) with `α + β ≥ 2`.
    pub fn case_id(&self) -> Result<u8> {
        if self.exps[0] != 0 {
            return Err(Error::structural("jordan case on imprimitive data"));
        }
        let (a, b) = (self.alpha(), self.beta());
        Ok(match (a, b) {
            (0, 2) => 1,
            (0, _) if b >= 3 => 2,
            (1, 1) => 3,
            (1, 2) => 4,
            (1, _) if b >= 3 => 5,
            (2, 2) => 6,
            (2, _) if b >= 3 => 7,
            _ if a >= 3 => 8,
            _ => {
                return Err(Error::out_of_contract(format!(
                    "ord_p(d) = {} < 2 at p = {}",
                    a + b,
                    self.p
                )))
            }
        })
    }

    /// Square-class comparison of an integer against unit `i`, ignoring
    /// p-parts: `(q0 · ε_i / p)` where `q0` is the unit part of `q`.
    pub fn same_class_as_unit(&self, q: i64, i: usize) -> bool {
        let q0 = unit_of(q, self.p);
        self.leg(q0 * self.units[i]) == 1
    }
}

pub fn unit_of(q: i64, p: i64) -> i64 {
    let mut q = q;
    while q % p == 0 {
        q /= p;
    }
    q.rem_euclid(p)
}

/// Jordan data of `g` at an odd prime.
pub fn jordan_odd(g: &GramMatrix, p: i64) -> Result<JordanOdd> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidForm(format!("{p} is not an odd prime")));
    }
    legendre(1, p)?; // primality check
    let diag = diagonalize_p(g, p);
    let mut pairs: Vec<(i64, i64)> =
        diag.iter().map(|d| (val_rat(d, p), unit_mod(d, p, 1))).collect();
    pairs.sort();
    Ok(JordanOdd {
        p,
        exps: [pairs[0].0, pairs[1].0, pairs[2].0],
        units: [pairs[0].1, pairs[1].1, pairs[2].1],
    })
}

/// Hasse symbol at a finite place: the product `Π_{i≤j} (a_i, a_j)_p` over
/// any rational diagonalization, diagonal pairs included.
pub fn hasse_symbol(g: &GramMatrix, p: i64) -> Result<i32> {
    let diag = diagonalize(g);
    let place = Place::Finite(p);
    // Square classes only, so numerator·denominator represents the value.
    let reps: Vec<i128> = diag.iter().map(|d| d.numer() * d.denom()).collect();
    let mut s = 1i32;
    for i in 0..3 {
        for j in i..3 {
            s *= hilbert(reps[i], reps[j], place)?;
        }
    }
    Ok(s)
}

/// The anisotropy test for the ternary form at a finite place: isotropic
/// over `ℚ_p` iff `(-1, -d)_p` equals `Π_{i<j} (a_i, a_j)_p`.
pub fn is_anisotropic(g: &GramMatrix, p: i64) -> Result<bool> {
    let diag = diagonalize(g);
    let place = Place::Finite(p);
    let reps: Vec<i128> = diag.iter().map(|d| d.numer() * d.denom()).collect();
    let mut eps = 1i32;
    for i in 0..3 {
        for j in i + 1..3 {
            eps *= hilbert(reps[i], reps[j], place)?;
        }
    }
    let d: i128 = reps.iter().product();
    let iso = hilbert(-1, -d, place)? == eps;
    Ok(!iso)
}
