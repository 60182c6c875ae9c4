use crate::partition::Partition;
use crate::poly::{LaurentSymPoly, SymPoly, TPoly};
use crate::{Result, SymError};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub const MAX_VARS: usize = 6;
pub const MAX_SIZE: u32 = 8;

/// Kostka number K_{μν}: semistandard tableaux of shape μ and content ν.
pub fn kostka(mu: &Partition, nu: &[u32]) -> u64 {
    fn rec(shape: &[u32], content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
        let total: u32 = shape.iter().sum();
        let need: u32 = content.iter().sum();
        if total != need {
            return 0;
        }
        if content.is_empty() {
            return 1;
        }
        let key = (shape.to_vec(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // remove a horizontal strip of size content.last() holding the largest label
        let k = *content.last().unwrap();
        let rest = &content[..content.len() - 1];
        let mut count = 0;
        let mut inner = vec![0u32; shape.len()];
        fn strips(
            i: usize,
            left: u32,
            shape: &[u32],
            inner: &mut Vec<u32>,
            rest: &[u32],
            count: &mut u64,
            memo: &mut HashMap<(Vec<u32>, usize), u64>,
        ) {
            if i == shape.len() {
                if left == 0 {
                    let mut s = inner.clone();
                    while s.last() == Some(&0) {
                        s.pop();
                    }
                    *count += rec(&s, rest, memo);
                }
                return;
            }
            // inner[i] ≥ shape[i+1] keeps the strip horizontal
            let lo = shape.get(i + 1).copied().unwrap_or(0);
            for v in lo..=shape[i] {
                let removed = shape[i] - v;
                if removed > left {
                    continue;
                }
                inner[i] = v;
                strips(i + 1, left - removed, shape, inner, rest, count, memo);
            }
        }
        strips(0, k, shape, &mut inner, rest, &mut count, memo);
        memo.insert(key, count);
        count
    }
    let mut memo = HashMap::new();
    rec(mu.parts(), nu, &mut memo)
}

/// Schur polynomial s_μ(x₁…x_n) in the monomial basis.
pub fn schur_monomial(mu: &Partition, n: usize) -> SymPoly {
    let mut coeffs = BTreeMap::new();
    if mu.len() <= n {
        for nu in Partition::all(mu.size(), n) {
            let k = kostka(mu, nu.parts());
            if k > 0 {
                coeffs.insert(nu, TPoly::constant(k as i64));
            }
        }
    }
    SymPoly { nvars: n, coeffs }
}

fn elementary_poly(r: usize, n: usize) -> LaurentSymPoly {
    let mut p = LaurentSymPoly::zero(n);
    let ones = Partition::column(r);
    for perm in crate::poly::distinct_permutations(&ones.padded(n)) {
        p.add_term(perm.into_iter().map(|x| x as i32).collect(), &TPoly::constant(1));
    }
    p
}

/// e_{λᶜ₁}⋯e_{λᶜ_r} expanded in the monomial basis.
pub fn elementary_monomial_expand(lambda: &Partition, n: usize) -> Result<SymPoly> {
    if lambda.len() > n {
        return Err(SymError::Bounds(format!("l({lambda}) > {n}")));
    }
    let mut acc = LaurentSymPoly::one(n);
    for r in lambda.conjugate().parts() {
        acc = acc.mul(&elementary_poly(*r as usize, n));
    }
    acc.to_monomial_basis()
}

/// v_m(t) = ∏_{j=1}^m (1 + t + … + t^{j−1}).
fn v_m(m: usize) -> TPoly {
    let mut acc = TPoly::constant(1);
    for j in 1..=m {
        acc = &acc * &TPoly::new(vec![1; j]);
    }
    acc
}

type Cache = Mutex<HashMap<(Partition, usize), Arc<SymPoly>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Hall–Littlewood P_λ(x₁…x_n; t) in the monomial basis, by symmetrizing
/// x^λ ∏_{i<j}(x_i − t x_j)/(x_i − x_j): the antisymmetrization of the
/// numerator is read in the Schur basis, then converted with Kostka numbers
/// and divided by v_λ(t).
pub fn hall_littlewood_p(lambda: &Partition, n: usize) -> Result<Arc<SymPoly>> {
    if n == 0 || n > MAX_VARS || lambda.size() > MAX_SIZE || lambda.len() > n {
        return Err(SymError::Bounds(format!("P_{lambda} in {n} variables")));
    }
    let key = (lambda.clone(), n);
    if let Some(p) = cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(compute_p(lambda, n));
    cache().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

fn compute_p(lambda: &Partition, n: usize) -> SymPoly {
    // expand F = x^λ ∏_{i<j}(x_i − t x_j)
    let mut terms: HashMap<Vec<i32>, TPoly> = HashMap::new();
    terms.insert(lambda.padded(n).into_iter().map(|x| x as i32).collect(), TPoly::constant(1));
    let mt = TPoly::monomial(-1, 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut next: HashMap<Vec<i32>, TPoly> = HashMap::with_capacity(terms.len() * 2);
            for (e, c) in terms {
                let mut a = e.clone();
                a[i] += 1;
                *next.entry(a).or_default() += &c;
                let mut b = e;
                b[j] += 1;
                *next.entry(b).or_default() += &(&c * &mt);
            }
            next.retain(|_, v| !v.is_zero());
            terms = next;
        }
    }
    // antisymmetrize: x^β with distinct entries ↦ ±a_{sort β} = ±s_{sort β − δ}
    let mut schur: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for (e, c) in terms {
        let mut v = e.clone();
        // sign of the sorting permutation (insertion sort counts inversions)
        let mut inv = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if v[a] < v[b] {
                    inv += 1;
                }
            }
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        if v.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let mu: Vec<u32> = v.iter().enumerate().map(|(k, &x)| (x - (n - 1 - k) as i32) as u32).collect();
        let mu = Partition::new(mu).expect("strictly decreasing minus δ is a partition");
        let c = if inv % 2 == 1 { -&c } else { c };
        *schur.entry(mu).or_default() += &c;
    }
    let mut v = TPoly::constant(1);
    for m in lambda.multiplicities(n) {
        v = &v * &v_m(m);
    }
    let mut coeffs: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for (mu, c) in schur {
        if c.is_zero() {
            continue;
        }
        for (nu, k) in schur_monomial(&mu, n).coeffs {
            *coeffs.entry(nu).or_default() += &(&c * &k);
        }
    }
    let coeffs = coeffs
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(nu, c)| {
            let q = c.div_exact(&v).expect("v_λ(t) divides the symmetrized numerator");
            (nu, q)
        })
        .collect();
    SymPoly { nvars: n, coeffs }
}
