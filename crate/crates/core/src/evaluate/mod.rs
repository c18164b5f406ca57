//! Specialization of Schur functions and universal characters to finite
//! eigenvalue lists, in exact rational arithmetic.
//!
//! Two independent evaluators are provided: a branching (tableau) sum and the
//! bialternant determinant ratio. The polynomial helpers here also serve as
//! oracles for the coefficient-level code in the rest of the crate.

pub mod oracle;
pub mod poly;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::char_rings::{convert, BasisLabel, CharElement};
use crate::error::{Error, Result};
use crate::partition::Partition;
use poly::Poly;

/// Parses `p/q` or an integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::InvalidNumber(text.to_string());
    let value = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
    };
    Ok(value)
}

/// All partitions `μ ⊆ λ` with `λ/μ` a horizontal strip.
fn horizontal_strip_removals(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = vec![0u32; lambda.length()];
    fn rec(lambda: &Partition, i: usize, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == rows.len() {
            out.push(Partition::from_rows(rows.clone()));
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            rows[i] = v;
            rec(lambda, i + 1, rows, out);
        }
    }
    rec(lambda, 0, &mut rows, &mut out);
    out
}

/// `s_λ(x₁,…,x_n)` as the sum over semistandard tableaux, organized by the
/// branching rule `s_λ(x₁..x_n) = Σ_μ x_n^{|λ/μ|} s_μ(x₁..x_{n-1})` over
/// horizontal strips `λ/μ`. Returns zero when `n < ℓ(λ)`.
pub fn eval_schur_tableaux(lambda: &Partition, values: &[BigRational]) -> BigRational {
    let mut memo = HashMap::new();
    tableaux_rec(lambda, values, &mut memo)
}

fn tableaux_rec(
    lambda: &Partition,
    values: &[BigRational],
    memo: &mut HashMap<(Partition, usize), BigRational>,
) -> BigRational {
    if lambda.is_empty() {
        return BigRational::one();
    }
    if values.len() < lambda.length() {
        return BigRational::zero();
    }
    let key = (lambda.clone(), values.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (last, rest) = values.split_last().expect("nonempty");
    let mut total = BigRational::zero();
    for mu in horizontal_strip_removals(lambda) {
        let strip = (lambda.weight() - mu.weight()) as i32;
        let inner = tableaux_rec(&mu, rest, memo);
        if !inner.is_zero() {
            total += inner * pow(last, strip);
        }
    }
    memo.insert(key, total.clone());
    total
}

fn pow(x: &BigRational, e: i32) -> BigRational {
    if e == 0 {
        BigRational::one()
    } else {
        num_traits::pow::Pow::pow(x, e)
    }
}

/// `s_λ(x₁,…,x_n) = det(x_i^{λ_j+n-j}) / det(x_i^{n-j})`.
pub fn eval_schur_bialternant(lambda: &Partition, values: &[BigRational]) -> Result<BigRational> {
    let n = values.len();
    for i in 0..n {
        for j in i + 1..n {
            if values[i] == values[j] {
                return Err(Error::SingularDenominator);
            }
        }
    }
    if lambda.length() > n {
        return Ok(BigRational::zero());
    }
    let alternant = |shift: &dyn Fn(usize) -> u32| -> BigRational {
        let matrix = values
            .iter()
            .map(|x| (0..n).map(|j| pow(x, (shift(j) + (n - 1 - j) as u32) as i32)).collect())
            .collect();
        bareiss_determinant(matrix)
    };
    let numerator = alternant(&|j| lambda.part(j));
    let denominator = alternant(&|_| 0);
    Ok(numerator / denominator)
}

/// Determinant by Bareiss elimination: every intermediate is itself a minor,
/// and each division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut sign = BigRational::one();
    let mut prev = BigRational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigRational::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Connected component of a classical group whose eigenvalue parametrization
/// is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    GL,
    SL,
    /// `SO(2k+1)`: `x₁..x_k, x̄₁..x̄_k, 1`
    SOOdd,
    /// `O(2k+1)\SO(2k+1)`: `x₁..x_k, x̄₁..x̄_k, -1`
    OOddMinus,
    /// `Sp(2k)`: `x₁..x_k, x̄₁..x̄_k`
    SpEven,
    /// `SO(2k)`: `x₁..x_k, x̄₁..x̄_k`
    SOEven,
    /// `O(2k)\SO(2k)`: `x₁..x_{k-1}, x̄₁..x̄_{k-1}, 1, -1`
    OEvenMinus,
    /// `Sp(2k+1)`: `x₁..x_k, x̄₁..x̄_k, x_{2k+1}`
    SpOdd,
}

/// A group `G(n)` written as `GL(3)`, `SO(5)`, `O(5)-`, `Sp(4)`, …; the
/// trailing `-` selects the non-identity component of `O(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalGroup {
    pub family: GroupFamily,
    pub dimension: usize,
}

impl ClassicalGroup {
    /// Number of free parameters `x_i` the eigenvalue list needs.
    pub fn free_parameters(&self) -> usize {
        let n = self.dimension;
        match self.family {
            GroupFamily::GL | GroupFamily::SL => n,
            GroupFamily::SOOdd | GroupFamily::OOddMinus => (n - 1) / 2,
            GroupFamily::SpEven | GroupFamily::SOEven => n / 2,
            GroupFamily::OEvenMinus => n / 2 - 1,
            GroupFamily::SpOdd => (n - 1) / 2 + 1,
        }
    }

    /// Largest partition length for which universal characters specialize
    /// without modification.
    pub fn stable_rank(&self) -> usize {
        match self.family {
            GroupFamily::GL | GroupFamily::SL => self.dimension,
            _ => self.dimension / 2,
        }
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dimension;
        match self.family {
            GroupFamily::GL => write!(f, "GL({n})"),
            GroupFamily::SL => write!(f, "SL({n})"),
            GroupFamily::SOOdd | GroupFamily::SOEven => write!(f, "SO({n})"),
            GroupFamily::OOddMinus | GroupFamily::OEvenMinus => write!(f, "O({n})-"),
            GroupFamily::SpEven | GroupFamily::SpOdd => write!(f, "Sp({n})"),
        }
    }
}

impl FromStr for ClassicalGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("cannot parse group `{s}` (try GL(3), SO(5), O(4)-, Sp(4))"));
        let t = s.trim();
        let (body, minus) = match t.strip_suffix('-') {
            Some(b) => (b.trim(), true),
            None => (t, false),
        };
        let (name, rest) = body.split_once('(').ok_or_else(bad)?;
        let n: usize = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let odd = n % 2 == 1;
        let family = match (name.trim().to_ascii_uppercase().as_str(), minus) {
            ("GL", false) => GroupFamily::GL,
            ("SL", false) => GroupFamily::SL,
            ("SO", false) if odd => GroupFamily::SOOdd,
            ("SO", false) => GroupFamily::SOEven,
            ("O", true) if odd => GroupFamily::OOddMinus,
            ("O", true) => GroupFamily::OEvenMinus,
            ("SP", false) if odd => GroupFamily::SpOdd,
            ("SP", false) => GroupFamily::SpEven,
            _ => return Err(bad()),
        };
        if n == 0 || (family == GroupFamily::OEvenMinus && n < 2) {
            return Err(bad());
        }
        Ok(ClassicalGroup { family, dimension: n })
    }
}

/// A group element given by its free eigenvalue parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueSpec {
    pub group: ClassicalGroup,
    pub free_values: Vec<BigRational>,
}

impl EigenvalueSpec {
    pub fn new(group: ClassicalGroup, free_values: Vec<BigRational>) -> Result<Self> {
        let expected = group.free_parameters();
        if free_values.len() != expected {
            return Err(Error::InvalidSpec(format!(
                "{group} takes {expected} free value(s), got {}",
                free_values.len()
            )));
        }
        if free_values.iter().any(Zero::is_zero) {
            return Err(Error::ZeroValue);
        }
        if group.family == GroupFamily::SL {
            let product: BigRational = free_values.iter().product();
            if !product.is_one() {
                return Err(Error::InvalidSpec("SL(n) eigenvalues must multiply to 1".into()));
            }
        }
        Ok(EigenvalueSpec { group, free_values })
    }

    /// The full eigenvalue list.
    pub fn eigenvalues(&self) -> Vec<BigRational> {
        let xs = &self.free_values;
        let with_inverses = |xs: &[BigRational]| -> Vec<BigRational> {
            xs.iter().cloned().chain(xs.iter().map(|x| x.recip())).collect()
        };
        let one = BigRational::one;
        match self.group.family {
            GroupFamily::GL | GroupFamily::SL => xs.clone(),
            GroupFamily::SpEven | GroupFamily::SOEven => with_inverses(xs),
            GroupFamily::SOOdd => {
                let mut v = with_inverses(xs);
                v.push(one());
                v
            }
            GroupFamily::OOddMinus => {
                let mut v = with_inverses(xs);
                v.push(-one());
                v
            }
            GroupFamily::OEvenMinus => {
                let mut v = with_inverses(xs);
                v.push(one());
                v.push(-one());
                v
            }
            GroupFamily::SpOdd => {
                let (last, pairs) = xs.split_last().expect("at least one value");
                let mut v = with_inverses(pairs);
                v.push(last.clone());
                v
            }
        }
    }
}

/// Value of a universal character at a group element.
///
/// `O`/`Sp` basis terms must lie in the stable range `ℓ(λ) ≤ k`; outside it
/// the universal character is not the irreducible one. `Sp(2k+1)` is
/// rejected since its characters `⟨λ⟩` are those of indecomposable, not
/// irreducible, representations.
pub fn eval_character(x: &CharElement, spec: &EigenvalueSpec) -> Result<BigRational> {
    if spec.group.family == GroupFamily::SpOdd {
        return Err(Error::InvalidSpec(
            "Sp(2k+1) is not reductive; its universal characters are not evaluated".into(),
        ));
    }
    if x.basis != BasisLabel::GL {
        let rank = spec.group.stable_rank();
        if let Some((lambda, _)) = x.terms.terms().find(|(q, _)| q.length() > rank) {
            return Err(Error::OutOfStableRange {
                partition: lambda.to_string(),
                rank,
            });
        }
    }
    let values = spec.eigenvalues();
    let gl = convert(x, BasisLabel::GL);
    let mut memo = HashMap::new();
    let mut total = BigRational::zero();
    for (lambda, c) in gl.terms.terms() {
        total += tableaux_rec(lambda, &values, &mut memo) * BigRational::from_integer(c.clone());
    }
    Ok(total)
}

/// `s_λ(x₁,…,x_n)` as an explicit polynomial.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Poly {
    let mut memo = HashMap::new();
    schur_poly_rec(lambda, n, &mut memo).embed(0, n)
}

fn schur_poly_rec(lambda: &Partition, n: usize, memo: &mut HashMap<(Partition, usize), Poly>) -> Poly {
    if lambda.is_empty() {
        return Poly::one(n);
    }
    if n < lambda.length() {
        return Poly::zero(n);
    }
    let key = (lambda.clone(), n);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let mut total = Poly::zero(n);
    for mu in horizontal_strip_removals(lambda) {
        let strip = (lambda.weight() - mu.weight()) as u32;
        let inner = schur_poly_rec(&mu, n - 1, memo);
        for (e, c) in inner.terms() {
            let mut full = e.clone();
            full.push(strip);
            total.add_term(full, c.clone());
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Kostka number `K_{λκ}`: semistandard tableaux of shape `λ` and content `κ`.
pub fn kostka(lambda: &Partition, content: &[u32]) -> u64 {
    if lambda.weight() != content.iter().map(|&c| c as usize).sum::<usize>() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda, content, &mut memo)
}

fn kostka_rec(lambda: &Partition, content: &[u32], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(lambda.is_empty());
    };
    if lambda.length() > content.len() {
        return 0;
    }
    let key = (lambda.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let total = horizontal_strip_removals(lambda)
        .into_iter()
        .filter(|mu| lambda.weight() - mu.weight() == last as usize)
        .map(|mu| kostka_rec(&mu, rest, memo))
        .sum();
    memo.insert(key, total);
    total
}

/// Checks Cauchy's identity and its inverse,
/// `Π(1-x_iy_a)^{-1} = Σ s_λ(x)s_λ(y)` and `Π(1-x_iy_a) = Σ (-1)^{|λ|} s_λ(x)s_{λ'}(y)`,
/// as polynomials in `nx + ny` variables through degree `max_degree` in `x`.
pub fn verify_cauchy(nx: usize, ny: usize, max_degree: usize) -> bool {
    let total = nx + ny;
    let cap = 2 * max_degree;
    let mut kernel = Poly::one(total);
    let mut inverse_kernel = Poly::one(total);
    for i in 0..nx {
        for a in 0..ny {
            let mut geometric = Poly::zero(total);
            for k in 0..=max_degree as u32 {
                let mut e = vec![0; total];
                e[i] = k;
                e[nx + a] = k;
                geometric.add_term(e, BigInt::one());
            }
            kernel = kernel.mul_truncated(&geometric, cap);
            let mut e = vec![0; total];
            e[i] = 1;
            e[nx + a] = 1;
            let factor = Poly::one(total).sub(&Poly::monomial(total, e, BigInt::one()));
            inverse_kernel = inverse_kernel.mul_truncated(&factor, cap);
        }
    }
    let mut schur_side = Poly::zero(total);
    let mut signed_side = Poly::zero(total);
    for lambda in crate::partition::partitions_up_to(max_degree) {
        let sx = schur_polynomial(&lambda, nx).embed(0, total);
        schur_side = schur_side.add(&sx.mul(&schur_polynomial(&lambda, ny).embed(nx, total)));
        let term = sx.mul(&schur_polynomial(&lambda.conjugate(), ny).embed(nx, total));
        signed_side = signed_side.add(&term.scale(&BigInt::from(lambda.sign())));
    }
    kernel == schur_side.truncate(cap) && inverse_kernel == signed_side.truncate(cap)
}
