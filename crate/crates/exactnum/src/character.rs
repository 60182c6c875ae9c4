use crate::{NumError, Result};
use serde::{Deserialize, Serialize};

/// Kronecker symbol (D|n).
pub fn kronecker(d: i64, n: i64) -> i32 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut a = d as i128;
    let mut b = n as i128;
    let mut k: i32 = 1;
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    // strip powers of two from b; (a|2) depends on a mod 8
    let mut v = 0;
    while b % 2 == 0 {
        b /= 2;
        v += 1;
    }
    if v > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if v % 2 == 1 && (a.rem_euclid(8) == 3 || a.rem_euclid(8) == 5) {
            k = -k;
        }
    }
    // b odd positive: Jacobi symbol (a|b)
    a = a.rem_euclid(b);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = b % 8;
            if r == 3 || r == 5 {
                k = -k;
            }
        }
        std::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            k = -k;
        }
        a %= b;
    }
    if b == 1 {
        k
    } else {
        0
    }
}

/// Hilbert symbol (a,b)_p at a finite prime p; `p = 0` means the real place.
pub fn hilbert_symbol(a: i64, b: i64, p: u64) -> i32 {
    assert!(a != 0 && b != 0);
    if p == 0 {
        return if a < 0 && b < 0 { -1 } else { 1 };
    }
    let split = |mut x: i64| {
        let mut v = 0u32;
        while x % p as i64 == 0 {
            x /= p as i64;
            v += 1;
        }
        (v, x)
    };
    let (al, u) = split(a);
    let (be, v) = split(b);
    if p == 2 {
        let eps = |x: i64| ((x.rem_euclid(8) - 1) / 2) % 2;
        let omega = |x: i64| {
            let r = x.rem_euclid(8);
            if r == 3 || r == 5 {
                1
            } else {
                0
            }
        };
        let e = eps(u) * eps(v) + al as i64 * omega(v) + be as i64 * omega(u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let pi = p as i64;
    let mut s = if (al as i64 * be as i64 * ((pi - 1) / 2)) % 2 == 0 { 1 } else { -1 };
    if be % 2 == 1 {
        s *= kronecker(u, pi);
    }
    if al % 2 == 1 {
        s *= kronecker(v, pi);
    }
    s
}

fn squarefree(mut n: i64) -> bool {
    n = n.abs();
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

pub fn is_fundamental(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

/// The primitive quadratic character χ_D attached to a fundamental
/// discriminant D (D = 1 is the trivial character).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticCharacter {
    pub discriminant: i64,
}

impl QuadraticCharacter {
    pub fn new(d: i64) -> Result<Self> {
        if !is_fundamental(d) {
            return Err(NumError::BadDiscriminant(d));
        }
        Ok(QuadraticCharacter { discriminant: d })
    }

    pub fn trivial() -> Self {
        QuadraticCharacter { discriminant: 1 }
    }

    pub fn conductor(&self) -> u64 {
        self.discriminant.unsigned_abs()
    }

    pub fn is_trivial(&self) -> bool {
        self.discriminant == 1
    }

    pub fn value(&self, n: i64) -> i32 {
        kronecker(self.discriminant, n)
    }

    /// χ^r: trivial for even r.
    pub fn pow(&self, r: u32) -> Self {
        if r % 2 == 0 {
            Self::trivial()
        } else {
            *self
        }
    }

    /// χ(−1).
    pub fn parity(&self) -> i32 {
        if self.discriminant < 0 {
            -1
        } else {
            1
        }
    }

    /// Primes dividing the conductor.
    pub fn ramified_primes(&self) -> Vec<u64> {
        crate::factor::factor_u64(self.conductor()).into_iter().map(|(p, _)| p).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-19, 2), -1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(5, 31), 1);
        assert_eq!(kronecker(-4, -1), -1);
        assert_eq!(kronecker(-19, -1), -1);
        assert_eq!(kronecker(5, -1), 1);
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3i64, 5, 7, 11, 13, 31, 97] {
            for a in -40i64..40 {
                let e = {
                    let mut r = 1i64;
                    let base = a.rem_euclid(p);
                    for _ in 0..(p - 1) / 2 {
                        r = r * base % p;
                    }
                    if r == p - 1 {
                        -1
                    } else {
                        r as i32
                    }
                };
                assert_eq!(kronecker(a, p), e, "({a}|{p})");
            }
        }
    }

    #[test]
    fn hilbert_symbols() {
        assert_eq!(hilbert_symbol(-1, -1, 2), -1);
        assert_eq!(hilbert_symbol(-1, -1, 3), 1);
        assert_eq!(hilbert_symbol(-1, -1, 0), -1);
        assert_eq!(hilbert_symbol(-1, -11, 11), -1);
        assert_eq!(hilbert_symbol(-1, -11, 2), 1);
        assert_eq!(hilbert_symbol(-2, -5, 5), -1);
        // −1 is not a norm from ℚ₂(i)
        assert_eq!(hilbert_symbol(-1, -4, 2), -1);
        // product formula
        for (a, b) in [(-1i64, -11i64), (-2, -13), (-3, -7), (6, -35), (-5, 10)] {
            let mut prod = hilbert_symbol(a, b, 0);
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
                prod *= hilbert_symbol(a, b, p);
            }
            assert_eq!(prod, 1, "({a},{b})");
        }
    }

    #[test]
    fn fundamental() {
        for d in [-4, -3, -7, -8, -19, 5, 8, 12, -11, 1] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [-1, 2, 3, -16, 20, 0, -12 * 4] {
            assert!(!is_fundamental(d), "{d}");
        }
    }

    #[test]
    fn characters_are_multiplicative_mod_conductor() {
        for d in [-4i64, -3, -8, -19, 5, 12] {
            let chi = QuadraticCharacter::new(d).unwrap();
            let f = chi.conductor() as i64;
            for a in 1..40 {
                assert_eq!(chi.value(a), chi.value(a + f));
                for b in 1..20 {
                    assert_eq!(chi.value(a * b), chi.value(a) * chi.value(b));
                }
            }
            assert_eq!(chi.value(-1), chi.parity());
        }
    }
}
