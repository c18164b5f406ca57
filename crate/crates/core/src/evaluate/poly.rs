//! Sparse multivariate polynomials with big-integer coefficients, used by the
//! evaluation oracles. Exponent vectors always have length `nvars`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: HashMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigInt::one())
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, c: BigInt) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product keeping only monomials of total degree `≤ max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: usize) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1: usize = e1.iter().map(|&x| x as usize).sum();
            for (e2, c2) in &other.terms {
                let d2: usize = e2.iter().map(|&x| x as usize).sum();
                if d1 + d2 > max_degree {
                    continue;
                }
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Keeps monomials of total degree `≤ max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-indexes into `total` variables, placing variable `i` at `offset + i`.
    pub fn embed(&self, offset: usize, total: usize) -> Poly {
        assert!(offset + self.nvars <= total);
        let mut out = Poly::zero(total);
        for (e, c) in &self.terms {
            let mut full = vec![0; total];
            full[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(full, c.clone());
        }
        out
    }
}
