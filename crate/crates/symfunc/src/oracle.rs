use crate::partition::Partition;
use crate::{Result, SymError};

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn val(mut x: i64, q: i64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x % q == 0 {
        x /= q;
        v += 1;
    }
    Some(v)
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Least valuation of the r×r minors (None if all vanish).
fn minor_valuation(g: &[Vec<i64>], r: usize, q: i64) -> Option<u32> {
    let n = g.len();
    let mut best: Option<u32> = None;
    for rows in subsets(n, r) {
        for cols in subsets(n, r) {
            let m: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| g[i][j]).collect()).collect();
            if let Some(v) = val(det(&m), q) {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    best
}

/// Counts the cosets Kg ⊂ Kϖ^λK of GL(n, ℚ_q) by enumerating upper-triangular
/// Hermite forms g (diagonal q^{a_i}, entry (i, j) reduced mod q^{a_j}) and
/// testing the minor valuations: g ∈ Kϖ^λK iff the least valuation of the
/// r×r minors is the sum of the r smallest parts of λ, for every r.
pub fn coset_count_oracle(lambda: &Partition, n: usize, q: u64) -> Result<u64> {
    if !(1..=3).contains(&n) || ![2, 3, 5].contains(&q) || lambda.size() > 3 || lambda.len() > n {
        return Err(SymError::Bounds(format!("oracle range: {lambda}, n = {n}, q = {q}")));
    }
    let q = q as i64;
    let parts = lambda.padded(n);
    let target: Vec<u32> = (1..=n).map(|r| parts[n - r..].iter().sum()).collect();
    let k = lambda.size();
    let mut count = 0u64;
    // diagonal exponent vectors with sum k
    let mut diags = Vec::new();
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(i + 1, n, left - a, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut diags);
    for a in diags {
        // off-diagonal slots (i, j), i < j, with q^{a_j} choices each
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let radix: Vec<i64> = slots.iter().map(|&(_, j)| q.pow(a[j])).collect();
        let total: i64 = radix.iter().product();
        for mut idx in 0..total {
            let mut g = vec![vec![0i64; n]; n];
            for i in 0..n {
                g[i][i] = q.pow(a[i]);
            }
            for (s, &(i, j)) in slots.iter().enumerate() {
                g[i][j] = idx % radix[s];
                idx /= radix[s];
            }
            if (1..=n).all(|r| minor_valuation(&g, r, q) == Some(target[r - 1])) {
                count += 1;
            }
        }
    }
    Ok(count)
}
