use crate::hl::{elementary_monomial_expand, hall_littlewood_p};
use crate::partition::{pair_rho, pair_rho_partition, Partition};
use crate::poly::{distinct_permutations, elementary_eval, monomial_eval, LaurentQ};
use crate::{Result, SymError};
use exactnum::rat::{self, BigInt, BigRational};
use exactnum::{Fe, Gf};
use std::collections::BTreeMap;

/// Checks that s² is the image of q.
pub fn check_half(gf: &Gf, q: u64, s: Fe) -> Result<()> {
    if gf.square(&s) != gf.from_u64(q) {
        return Err(SymError::BadHalf(q));
    }
    Ok(())
}

/// ĉ_λ(α) = q^{⟨λ,ρ⟩} P_λ(α; q⁻¹) in F_{p^k}, with q^{1/2} realized by s.
pub fn satake_gl(gf: &Gf, lambda: &Partition, alpha: &[Fe], q: u64, s: Fe) -> Result<Fe> {
    let n = alpha.len();
    if lambda.len() > n {
        return Err(SymError::Bounds(format!("l({lambda}) > {n}")));
    }
    if alpha.iter().any(|a| gf.is_zero(&*a)) {
        return Err(SymError::NotInvertible);
    }
    check_half(gf, q, s)?;
    let p = hall_littlewood_p(lambda, n)?;
    let tw = pair_rho_partition(lambda, n).twice_value;
    let mut acc = gf.zero();
    for (mu, c) in &p.coeffs {
        let m = monomial_eval(gf, mu, alpha);
        // q^{⟨λ,ρ⟩} c(q⁻¹) = Σ_j c_j s^{tw − 2j}
        let mut coef = gf.zero();
        for (j, &cj) in c.coeffs().iter().enumerate() {
            if cj != 0 {
                let sp = gf.pow_i(&s, tw - 2 * j as i64).map_err(|_| SymError::NotInvertible)?;
                coef = gf.add(&coef, &gf.mul(&gf.from_i64(cj), &sp));
            }
        }
        acc = gf.add(&acc, &gf.mul(&coef, &m));
    }
    Ok(acc)
}

/// ĉ_λ(q^ρ) as a Laurent polynomial in q.
pub fn hecke_degree_gl_poly(lambda: &Partition, n: usize) -> Result<LaurentQ> {
    let p = hall_littlewood_p(lambda, n)?;
    let tw = pair_rho_partition(lambda, n).twice_value;
    let mut out = LaurentQ::default();
    for (mu, c) in &p.coeffs {
        for beta in distinct_permutations(&mu.padded(n)) {
            let b: Vec<i64> = beta.iter().map(|&x| x as i64).collect();
            let e2 = tw + pair_rho(&b, n).twice_value;
            debug_assert!(e2 % 2 == 0);
            for (j, &cj) in c.coeffs().iter().enumerate() {
                if cj != 0 {
                    out.add_term(e2 / 2 - j as i64, BigInt::from(cj));
                }
            }
        }
    }
    Ok(out)
}

/// The degree of Kϖ^λK in GL(n, F) for residue size q.
pub fn hecke_degree_gl(lambda: &Partition, n: usize, q: u64) -> Result<BigInt> {
    let v = hecke_degree_gl_poly(lambda, n)?.eval(&BigRational::from_integer(BigInt::from(q)));
    if !v.is_integer() || v < BigRational::from_integer(BigInt::from(0)) {
        return Err(SymError::NonIntegral(rat::to_string(&v)));
    }
    Ok(v.to_integer())
}

/// Z_r(α) = q^{(n−r)r/2} e_r(α).
pub fn gl_generator(gf: &Gf, r: usize, alpha: &[Fe], s: Fe) -> Result<Fe> {
    let n = alpha.len();
    if r == 0 || r > n {
        return Err(SymError::Bounds(format!("generator index {r} for n = {n}")));
    }
    let sp = gf.pow_u(&s, ((n - r) * r) as u64);
    Ok(gf.mul(&sp, &elementary_eval(gf, r, alpha)))
}

/// Z̃_r(α) = q^{Nr−r²} e_r(Y), Y_j = α_j + α_j⁻¹, for U(N) with n = ⌊N/2⌋ parameters.
pub fn u_generator(gf: &Gf, r: usize, alpha: &[Fe], big_n: usize, q: Fe) -> Result<Fe> {
    let n = alpha.len();
    if big_n / 2 != n || r == 0 || r > n {
        return Err(SymError::Bounds(format!("U({big_n}) generator {r} with {n} parameters")));
    }
    let y = y_values(gf, alpha)?;
    let e = (big_n * r - r * r) as u64;
    Ok(gf.mul(&gf.pow_u(&q, e), &elementary_eval(gf, r, &y)))
}

/// Y_j = α_j + α_j⁻¹.
pub fn y_values(gf: &Gf, alpha: &[Fe]) -> Result<Vec<Fe>> {
    alpha
        .iter()
        .map(|&a| gf.inv(&a).map(|i| gf.add(&a, &i)).ok_or(SymError::NotInvertible))
        .collect()
}

/// Coefficients of ĉ_λ in the monomials ∏_j Z_{μᶜ_j}, keyed by μ, for a
/// numeric residue size q. Integrality of every coefficient expresses that
/// the Z_r generate the integral spherical Hecke algebra of GL(n).
pub fn z_basis_gl(lambda: &Partition, n: usize, q: u64) -> Result<BTreeMap<Partition, BigRational>> {
    let p = hall_littlewood_p(lambda, n)?;
    let qq = BigRational::from_integer(BigInt::from(q));
    let qinv = rat::pow(&qq, -1);
    let rho = |m: &Partition| pair_rho_partition(m, n).twice_value;
    // A_μ: coefficient of q^{⟨μ,ρ⟩} m_μ
    let mut a: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (mu, c) in &p.coeffs {
        let d = rho(lambda) - rho(mu);
        debug_assert!(d % 2 == 0);
        a.insert(mu.clone(), rat::pow(&qq, d / 2) * c.eval_rational(&qinv));
    }
    let mut out = BTreeMap::new();
    // largest in lexicographic order first; lex refines dominance
    while let Some((mu, b)) = a.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        a.remove(&mu);
        if b == BigRational::from_integer(BigInt::from(0)) {
            continue;
        }
        let e = elementary_monomial_expand(&mu, n)?;
        for (nu, c) in &e.coeffs {
            if *nu == mu {
                continue;
            }
            let d = rho(&mu) - rho(nu);
            let delta = &b * BigRational::from_integer(BigInt::from(c.at_zero())) * rat::pow(&qq, d / 2);
            let entry = a.entry(nu.clone()).or_insert_with(|| BigRational::from_integer(BigInt::from(0)));
            *entry -= delta;
        }
        out.insert(mu, b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(hecke_degree_gl_poly(&p(&[1]), 3).unwrap(), LaurentQ::from_coefficients(&[1, 1, 1]));
        for q in [2u64, 3, 5, 7] {
            assert_eq!(hecke_degree_gl(&p(&[1, 1]), 2, q).unwrap(), BigInt::from(1));
            assert_eq!(hecke_degree_gl(&p(&[1]), 2, q).unwrap(), BigInt::from(q + 1));
        }
        assert_eq!(hecke_degree_gl(&p(&[2]), 2, 2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn satake_gl2() {
        let gf = Gf::new(13, 1).unwrap();
        // q = 3 = 4², s = 4
        let s = gf.from_u64(4);
        let a = [gf.from_u64(5), gf.from_u64(7)];
        let v = satake_gl(&gf, &p(&[1]), &a, 3, s).unwrap();
        assert_eq!(v, gf.mul(&s, &gf.add(&a[0], &a[1])));
        let v = satake_gl(&gf, &p(&[1, 1]), &a, 3, s).unwrap();
        assert_eq!(v, gf.mul(&a[0], &a[1]));
        let v = satake_gl(&gf, &p(&[2]), &a, 3, s).unwrap();
        let q = gf.from_u64(3);
        let expect = gf.add(
            &gf.mul(&q, &gf.add(&gf.square(&a[0]), &gf.square(&a[1]))),
            &gf.mul(&gf.sub(&q, &gf.one()), &gf.mul(&a[0], &a[1])));
        assert_eq!(v, expect);
        assert!(satake_gl(&gf, &p(&[1]), &a, 3, gf.from_u64(5)).is_err());
    }

    #[test]
    fn generators() {
        let gf = Gf::new(13, 1).unwrap();
        let s = gf.from_u64(4);
        let a = [gf.from_u64(5), gf.from_u64(7)];
        assert_eq!(gl_generator(&gf, 1, &a, s).unwrap(), gf.mul(&s, &gf.add(&a[0], &a[1])));
        assert_eq!(gl_generator(&gf, 2, &a, s).unwrap(), gf.mul(&a[0], &a[1]));
        // U(2) at trivial α = (q): q(q + q⁻¹) = q² + 1
        let q = gf.from_u64(3);
        assert_eq!(u_generator(&gf, 1, &[q], 2, q).unwrap(), gf.from_u64(10));
        // U(3), α = (q²): q²(q² + q⁻²) = q⁴ + 1
        assert_eq!(u_generator(&gf, 1, &[gf.square(&q)], 3, q).unwrap(), gf.from_u64(82 % 13));
    }
}
