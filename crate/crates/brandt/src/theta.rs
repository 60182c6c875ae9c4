//! Enumeration of lattice vectors of bounded norm for a positive definite
//! integral form Q(x) = ½ xᵀ G x (G even, integral).

/// Q(x), exactly.
pub fn qform(g: &[[i64; 4]; 4], x: &[i64; 4]) -> i64 {
    let mut s = 0i128;
    for i in 0..4 {
        for j in 0..4 {
            s += g[i][j] as i128 * x[i] as i128 * x[j] as i128;
        }
    }
    (s / 2) as i64
}

/// Q(x) = Σ d_i (x_i + Σ_{j>i} μ_ij x_j)²: the LDLᵀ data of ½G, in f64.
fn ldl(g: &[[i64; 4]; 4]) -> ([f64; 4], [[f64; 4]; 4]) {
    let mut a = [[0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            a[i][j] = g[i][j] as f64 / 2.0;
        }
    }
    let mut d = [0f64; 4];
    let mut mu = [[0f64; 4]; 4];
    for i in 0..4 {
        d[i] = a[i][i];
        for j in i + 1..4 {
            mu[i][j] = a[i][j] / d[i];
        }
        for j in i + 1..4 {
            for k in i + 1..4 {
                a[j][k] -= mu[i][j] * a[i][k];
            }
        }
    }
    (d, mu)
}

/// Every x ≠ 0 with Q(x) ≤ bound, each with its exact norm.
pub fn short_vectors(g: &[[i64; 4]; 4], bound: i64) -> Vec<([i64; 4], i64)> {
    let (d, mu) = ldl(g);
    assert!(d.iter().all(|&x| x > 0.0), "form is not positive definite");
    let mut out = Vec::new();
    let mut x = [0i64; 4];
    let slack = 1e-6 * (1.0 + bound as f64);
    fn rec(i: usize, rem: f64, x: &mut [i64; 4], d: &[f64; 4], mu: &[[f64; 4]; 4], g: &[[i64; 4]; 4], bound: i64, slack: f64, out: &mut Vec<([i64; 4], i64)>) {
        let c: f64 = (i + 1..4).map(|j| mu[i][j] * x[j] as f64).sum();
        let r = ((rem + slack).max(0.0) / d[i]).sqrt();
        let lo = (-c - r).floor() as i64;
        let hi = (-c + r).ceil() as i64;
        for v in lo..=hi {
            x[i] = v;
            let t = v as f64 + c;
            let used = d[i] * t * t;
            if used > rem + slack {
                continue;
            }
            if i == 0 {
                if x.iter().any(|&y| y != 0) {
                    let n = qform(g, x);
                    if n <= bound {
                        out.push((*x, n));
                    }
                }
            } else {
                rec(i - 1, rem - used, x, d, mu, g, bound, slack, out);
            }
        }
        x[i] = 0;
    }
    rec(3, bound as f64, &mut x, &d, &mu, g, bound, slack, &mut out);
    out
}

/// #{x : Q(x) = n} for n = 0..=bound (index 0 counts only the zero vector).
pub fn theta_series(g: &[[i64; 4]; 4], bound: i64) -> Vec<u64> {
    let mut t = vec![0u64; bound as usize + 1];
    t[0] = 1;
    for (_, n) in short_vectors(g, bound) {
        t[n as usize] += 1;
    }
    t
}

pub fn count_norm(g: &[[i64; 4]; 4], n: i64) -> u64 {
    short_vectors(g, n).iter().filter(|(_, m)| *m == n).count() as u64
}
