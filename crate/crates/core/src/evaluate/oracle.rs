//! Independent checks for the coefficient-level code.
//!
//! Everything here works with explicit polynomials and tableau counts. None
//! of it calls the Littlewood–Richardson search or the closed-form series
//! supports, so agreement between the two sides is a real cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::kostka;
use super::poly::Poly;
use crate::partition::{partitions_of, Partition};
use crate::schur_ring::SchurElement;
use crate::series::SeriesName;

/// Schur expansion of a symmetric polynomial in `n` variables, degree `d`
/// part, by repeatedly peeling off the dominant monomial `x^λ` with
/// `s_λ = m_λ + (lower terms)`. Requires `n ≥ d` so that every partition of
/// `d` is visible.
pub fn schur_expand_by_leading_terms(poly: &Poly, degree: usize) -> SchurElement {
    let n = poly.nvars();
    // coefficients of the partition-shaped monomials, i.e. of m_κ
    let mut remaining: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for kappa in partitions_of(degree).into_iter().filter(|k| k.length() <= n) {
        let mut e = kappa.parts().to_vec();
        e.resize(n, 0);
        let c = poly.coefficient(&e);
        if !c.is_zero() {
            remaining.insert(kappa, c);
        }
    }
    let mut out = SchurElement::zero();
    // BTreeMap order puts the lexicographically largest partition first
    while let Some((lead, c)) = remaining.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
        out.add_term(lead.clone(), c.clone());
        for kappa in partitions_of(degree).into_iter().filter(|k| k.length() <= n) {
            let k = kostka(&lead, kappa.parts());
            if k == 0 {
                continue;
            }
            let slot = remaining.entry(kappa.clone()).or_default();
            *slot -= &c * BigInt::from(k);
            if slot.is_zero() {
                remaining.remove(&kappa);
            }
        }
    }
    out
}

/// Schur expansion of the degree-`d` part of a symmetric polynomial by the
/// alternant trick: the coefficient of `s_ν` is the coefficient of
/// `x^{ν+ρ}` in `f · a_ρ`, i.e. `Σ_w sgn(w) [x^{ν+ρ-w(ρ)}] f`.
pub fn schur_expand_by_alternant(poly: &Poly, degree: usize) -> SchurElement {
    let n = poly.nvars();
    let rho: Vec<i64> = (0..n).rev().map(|i| i as i64).collect();
    let perms = signed_permutations(n);
    let mut out = SchurElement::zero();
    for nu in partitions_of(degree).into_iter().filter(|k| k.length() <= n) {
        let mut total = BigInt::zero();
        'perm: for (perm, sign) in &perms {
            let mut e = Vec::with_capacity(n);
            for i in 0..n {
                let v = nu.part(i) as i64 + rho[i] - rho[perm[i]];
                if v < 0 {
                    continue 'perm;
                }
                e.push(v as u32);
            }
            let c = poly.coefficient(&e);
            if *sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        out.add_term(nu, total);
    }
    out
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in signed_permutations(n - 1) {
        // insert n-1 at position i, crossing (n-1-i) larger-index slots
        for i in 0..n {
            let mut p = perm.clone();
            p.insert(i, n - 1);
            let s = if (n - 1 - i).is_multiple_of(2) { sign } else { -sign };
            out.push((p, s));
        }
    }
    out
}

/// Expands the defining product of a Littlewood series in `max(d, 1)`
/// variables through degree `d`:
///
/// * `A = Π_{i<j}(1 - x_ix_j)`, `C = Π_{i≤j}(1 - x_ix_j)`
/// * `B = Π_{i<j}(1 - x_ix_j)^{-1}`, `D = Π_{i≤j}(1 - x_ix_j)^{-1}`
///
/// and converts each homogeneous part to the Schur basis by leading-term
/// subtraction. Entry `k` of the result is the degree-`k` term.
pub fn series_from_product_expansion(name: SeriesName, max_degree: usize) -> Vec<SchurElement> {
    let n = max_degree.max(1);
    let strict = matches!(name, SeriesName::A | SeriesName::B);
    let inverse = matches!(name, SeriesName::B | SeriesName::D);
    let mut product = Poly::one(n);
    for i in 0..n {
        for j in i..n {
            if strict && i == j {
                continue;
            }
            let mut factor = Poly::zero(n);
            for k in 0..=(max_degree / 2) as u32 {
                if !inverse && k > 1 {
                    break;
                }
                let mut e = vec![0u32; n];
                e[i] += k;
                e[j] += k;
                let sign = if !inverse && k == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                factor.add_term(e, sign);
            }
            product = product.mul_truncated(&factor, max_degree);
        }
    }
    (0..=max_degree)
        .map(|d| schur_expand_by_leading_terms(&product, d))
        .collect()
}
