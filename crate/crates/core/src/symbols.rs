//! Legendre and Hilbert symbols.

use crate::error::{Error, Result};

fn mod_pow(mut base: i128, mut exp: i128, modulus: i128) -> i128 {
    let mut acc = 1i128;
    base = base.rem_euclid(modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: i64, p: i64) -> Result<i32> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::InvalidForm(format!("{p} is not an odd prime")));
    }
    let r = (a as i128).rem_euclid(p as i128);
    if r == 0 {
        return Ok(0);
    }
    let e = mod_pow(r, (p as i128 - 1) / 2, p as i128);
    Ok(if e == 1 { 1 } else { -1 })
}

/// A place of the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Finite(i64),
    Infinity,
}

fn two_val(mut n: i128) -> (u32, i128) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    (v, n)
}

fn p_val(mut n: i128, p: i128) -> (u32, i128) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Hilbert symbol `(a, b)_v` for nonzero integers; rational arguments
/// reduce to this case because the symbol only depends on square classes.
pub fn hilbert(a: i128, b: i128, v: Place) -> Result<i32> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidForm("hilbert symbol of zero".into()));
    }
    match v {
        Place::Infinity => Ok(if a < 0 && b < 0 { -1 } else { 1 }),
        Place::Finite(2) => {
            let (alpha, u) = two_val(a);
            let (beta, w) = two_val(b);
            let eps = |x: i128| -> i128 { ((x - 1) / 2).rem_euclid(2) };
            let omega = |x: i128| -> i128 { ((x * x - 1) / 8).rem_euclid(2) };
            let e = eps(u) * eps(w) + alpha as i128 * omega(w) + beta as i128 * omega(u);
            Ok(if e % 2 == 0 { 1 } else { -1 })
        }
        Place::Finite(p) => {
            if p < 3 || !is_prime(p) {
                return Err(Error::InvalidForm(format!("{p} is not a prime")));
            }
            let (alpha, u) = p_val(a, p as i128);
            let (beta, w) = p_val(b, p as i128);
            let lu = legendre((u.rem_euclid(p as i128)) as i64, p)?;
            let lw = legendre((w.rem_euclid(p as i128)) as i64, p)?;
            let lm1 = legendre(-1, p)?;
            let mut s = 1i32;
            if alpha % 2 == 1 && beta % 2 == 1 {
                s *= lm1;
            }
            if beta % 2 == 1 {
                s *= lu;
            }
            if alpha % 2 == 1 {
                s *= lw;
            }
            Ok(s)
        }
    }
}

/// Distinct prime factors, ascending, by trial division.
pub fn prime_factors(n: i64) -> Vec<i64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `ord_p(n)` for nonzero `n`.
pub fn valuation(n: i64, p: i64) -> u32 {
    p_val(n as i128, p as i128).0
}

/// Squarefree kernel of a positive integer.
pub fn squarefree_part(n: i64) -> i64 {
    let mut n = n;
    let mut out = 1i64;
    for p in prime_factors(n) {
        let mut v = 0;
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        if v % 2 == 1 {
            out *= p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_against_exhaustive_squares() {
        for p in [3i64, 5, 7, 11, 13] {
            let squares: std::collections::BTreeSet<i64> =
                (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expect = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a, p).unwrap(), expect, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7).unwrap(), 1);
        assert_eq!(legendre(-1, 5).unwrap(), 1);
        assert_eq!(legendre(3, 7).unwrap(), -1);
    }

    #[test]
    fn hilbert_at_infinity() {
        assert_eq!(hilbert(-1, -1, Place::Infinity).unwrap(), -1);
        assert_eq!(hilbert(-1, 2, Place::Infinity).unwrap(), 1);
    }

    #[test]
    fn hilbert_reciprocity() {
        // Product over all places is +1.
        let pairs = [(3, 5), (-2, 7), (6, -10), (15, 14), (-1, -1), (30, -42)];
        for (a, b) in pairs {
            let mut places = vec![Place::Infinity, Place::Finite(2)];
            for p in prime_factors(a).into_iter().chain(prime_factors(b)) {
                if p != 2 {
                    places.push(Place::Finite(p));
                }
            }
            places.dedup_by(|x, y| x == y);
            let mut prod = 1;
            for v in places {
                prod *= hilbert(a as i128, b as i128, v).unwrap();
            }
            assert_eq!(prod, 1, "a={a} b={b}");
        }
    }

    #[test]
    fn hilbert_two_adic_values() {
        assert_eq!(hilbert(3, 3, Place::Finite(2)).unwrap(), -1);
        assert_eq!(hilbert(2, 2, Place::Finite(2)).unwrap(), 1);
        assert_eq!(hilbert(2, 3, Place::Finite(2)).unwrap(), -1);
        assert_eq!(hilbert(5, 7, Place::Finite(2)).unwrap(), 1);
        assert_eq!(hilbert(-1, -1, Place::Finite(2)).unwrap(), -1);
    }

    #[test]
    fn rejects_non_prime_place() {
        assert!(legendre(1, 9).is_err());
        assert!(hilbert(1, 1, Place::Finite(15)).is_err());
    }
}
