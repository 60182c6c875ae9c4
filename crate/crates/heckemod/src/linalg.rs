//! Dense linear algebra over F_{p^k}.

use exactnum::ff::poly::{self, Poly};
use exactnum::{Fe, Gf};

pub type Mat = Vec<Vec<Fe>>;

pub fn from_int(gf: &Gf, m: &[Vec<i64>]) -> Mat {
    m.iter().map(|r| r.iter().map(|&x| gf.from_i64(x)).collect()).collect()
}

pub fn identity(gf: &Gf, n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { gf.one() } else { gf.zero() }).collect()).collect()
}

pub fn mul(gf: &Gf, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![gf.zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if gf.is_zero(&aik) {
                continue;
            }
            for j in 0..m {
                out[i][j] = gf.add(&out[i][j], &gf.mul(&aik, &bk[j]));
            }
        }
    }
    out
}

pub fn mat_vec(gf: &Gf, a: &Mat, v: &[Fe]) -> Vec<Fe> {
    a.iter().map(|r| r.iter().zip(v).fold(gf.zero(), |acc, (x, y)| gf.add(&acc, &gf.mul(x, y)))).collect()
}

/// a − λI.
pub fn shift(gf: &Gf, a: &Mat, lambda: &Fe) -> Mat {
    let mut m = a.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = gf.sub(&row[i], lambda);
    }
    m
}

/// f(a) by Horner's rule.
pub fn eval_poly(gf: &Gf, f: &Poly, a: &Mat) -> Mat {
    let n = a.len();
    let mut acc = vec![vec![gf.zero(); n]; n];
    for c in f.iter().rev() {
        acc = mul(gf, &acc, a);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = gf.add(&row[i], c);
        }
    }
    acc
}

/// a^e by repeated squaring.
pub fn pow(gf: &Gf, a: &Mat, mut e: usize) -> Mat {
    let mut base = a.clone();
    let mut acc = identity(gf, a.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(gf, &acc, &base);
        }
        base = mul(gf, &base, &base);
        e >>= 1;
    }
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(gf: &Gf, m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !gf.is_zero(&m[i][c])) else { continue };
        m.swap(r, i);
        let inv = gf.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = gf.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !gf.is_zero(&m[i][c]) {
                let f = m[i][c];
                for j in 0..cols {
                    let t = gf.mul(&f, &m[r][j]);
                    m[i][j] = gf.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(gf: &Gf, m: &Mat) -> usize {
    let mut m = m.clone();
    rref(gf, &mut m).len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace(gf: &Gf, m: &Mat, cols: usize) -> Vec<Vec<Fe>> {
    let mut r = m.clone();
    let pivots = rref(gf, &mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![gf.zero(); cols];
            v[f] = gf.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = gf.neg(&r[row][f]);
            }
            v
        })
        .collect()
}

/// Matrix of `a` on the invariant subspace spanned by `basis` (vectors of
/// length n), in that basis: a·b_i = Σ_j out[j][i] b_j.
pub fn restrict(gf: &Gf, a: &Mat, basis: &[Vec<Fe>]) -> Mat {
    let w = basis.len();
    // columns are basis vectors
    let n = a.len();
    let mut aug: Mat = (0..n).map(|i| basis.iter().map(|b| b[i]).collect()).collect();
    let images: Vec<Vec<Fe>> = basis.iter().map(|b| mat_vec(gf, a, b)).collect();
    for (i, row) in aug.iter_mut().enumerate() {
        row.extend(images.iter().map(|v| v[i]));
    }
    let pivots = rref(gf, &mut aug);
    debug_assert!(pivots.len() == w && pivots.iter().all(|&c| c < w), "subspace not invariant or basis dependent");
    (0..w).map(|j| (0..w).map(|i| aug[j][w + i]).collect()).collect()
}

/// Σ x_i b_i.
pub fn combine(gf: &Gf, basis: &[Vec<Fe>], x: &[Fe]) -> Vec<Fe> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = vec![gf.zero(); n];
    for (b, c) in basis.iter().zip(x) {
        for (o, v) in out.iter_mut().zip(b) {
            *o = gf.add(o, &gf.mul(c, v));
        }
    }
    out
}

/// Characteristic polynomial det(xI − a) via reduction to Hessenberg form.
pub fn charpoly(gf: &Gf, a: &Mat) -> Poly {
    let n = a.len();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| !gf.is_zero(&h[i][j])) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = gf.inv(&h[j + 1][j]).unwrap();
        for k in j + 2..n {
            if gf.is_zero(&h[k][j]) {
                continue;
            }
            let u = gf.mul(&h[k][j], &inv);
            for c in 0..n {
                let t = gf.mul(&u, &h[j + 1][c]);
                h[k][c] = gf.sub(&h[k][c], &t);
            }
            for row in h.iter_mut() {
                let t = gf.mul(&u, &row[k]);
                row[j + 1] = gf.add(&row[j + 1], &t);
            }
        }
    }
    let mut p: Vec<Poly> = vec![vec![gf.one()]];
    for m in 1..=n {
        let lin = vec![gf.neg(&h[m - 1][m - 1]), gf.one()];
        let mut pm = poly::mul(gf, &lin, &p[m - 1]);
        let mut t = gf.one();
        for i in 1..m {
            t = gf.mul(&t, &h[m - i][m - i - 1]);
            let c = gf.mul(&t, &h[m - i - 1][m - 1]);
            let term: Poly = p[m - i - 1].iter().map(|x| gf.mul(x, &c)).collect();
            pm = poly::sub(gf, &pm, &term);
        }
        poly::trim(&mut pm, gf);
        p.push(pm);
    }
    p.pop().unwrap()
}
