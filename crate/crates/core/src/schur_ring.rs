//! The Hopf algebra of symmetric functions on the Schur basis.
//!
//! Elements are finite integer combinations of Schur functions `s_λ`, stored as
//! coefficient tables with no zero entries. Every operation works at the level
//! of Littlewood–Richardson coefficients; no alphabet is ever materialized.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lr::{lr_expand_product, lr_expand_skew};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SchurElement {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `s_0`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurElement { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c.into());
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in display order (decreasing weight, then reverse lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
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

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The common weight of all terms, if there is one. The zero element is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|q| q.weight() == degree)
    }

    /// The degree-`d` component.
    pub fn component(&self, degree: usize) -> SchurElement {
        SchurElement {
            terms: self
                .terms
                .iter()
                .filter(|(q, _)| q.weight() == degree)
                .map(|(q, c)| (q.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> SchurElement {
        if factor.is_zero() {
            return Self::zero();
        }
        SchurElement {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), c * factor)).collect(),
        }
    }

    /// Applies `λ ↦ f(λ)` to every basis label, merging collisions.
    pub fn map_partitions(&self, f: impl Fn(&Partition) -> Partition) -> SchurElement {
        Self::from_terms(self.terms.iter().map(|(q, c)| (f(q), c.clone())))
    }

    pub fn multiply(&self, other: &SchurElement) -> SchurElement {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (nu, n) in lr_expand_product(a, b).iter() {
                    out.add_term(nu.clone(), &c * BigInt::from(*n));
                }
            }
        }
        out
    }

    /// `self / other`, the bilinear extension of `s_{ν/λ}`.
    pub fn skew(&self, other: &SchurElement) -> SchurElement {
        let mut out = Self::zero();
        for (nu, cn) in &self.terms {
            for (lambda, cl) in &other.terms {
                if !nu.contains(lambda) {
                    continue;
                }
                let c = cn * cl;
                for (mu, n) in lr_expand_skew(nu, lambda).iter() {
                    out.add_term(mu.clone(), &c * BigInt::from(*n));
                }
            }
        }
        out
    }

    /// `(X | Y)` with the Schur basis orthonormal.
    pub fn scalar_product(&self, other: &SchurElement) -> BigInt {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(q, c)| large.terms.get(q).map(|d| c * d))
            .sum()
    }

    /// `Δ(s_ν) = Σ_λ s_λ ⊗ s_{ν/λ}`, extended linearly.
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorElement::zero();
        for (nu, cn) in &self.terms {
            for lambda in nu.subpartitions() {
                for (mu, n) in lr_expand_skew(nu, &lambda).iter() {
                    out.add_term(lambda.clone(), mu.clone(), cn * BigInt::from(*n));
                }
            }
        }
        out
    }

    /// The coefficient of `s_0`.
    pub fn counit(&self) -> BigInt {
        self.coefficient(&Partition::empty())
    }

    /// `S(s_λ) = (-1)^{|λ|} s_{λ'}`, extended linearly.
    pub fn antipode(&self) -> SchurElement {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(q, c)| (q.conjugate(), if q.sign() > 0 { c.clone() } else { -c })),
        )
    }

    /// Renders with the given brackets, e.g. `{43}+2{32}-{0}`.
    pub fn render(&self, open: &str, close: &str) -> String {
        render_terms(self.terms.iter().map(|(q, c)| (format!("{open}{q}{close}"), c)))
    }
}

pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("{", "}"))
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurElement({self})")
    }
}

impl From<Partition> for SchurElement {
    fn from(lambda: Partition) -> Self {
        SchurElement::basis(lambda)
    }
}

impl AddAssign<&SchurElement> for SchurElement {
    fn add_assign(&mut self, rhs: &SchurElement) {
        for (q, c) in &rhs.terms {
            self.add_term(q.clone(), c.clone());
        }
    }
}

impl Add for &SchurElement {
    type Output = SchurElement;

    fn add(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurElement {
    type Output = SchurElement;

    fn sub(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.add_term(q.clone(), -c);
        }
        out
    }
}

impl Neg for &SchurElement {
    type Output = SchurElement;

    fn neg(self) -> SchurElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SchurElement {
    type Output = SchurElement;

    fn mul(self, rhs: &SchurElement) -> SchurElement {
        self.multiply(rhs)
    }
}

/// Finite integer combination of `s_λ ⊗ s_μ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s_0 ⊗ s_0`.
    pub fn one() -> Self {
        Self::pure(&SchurElement::one(), &SchurElement::one())
    }

    /// `a ⊗ b`.
    pub fn pure(a: &SchurElement, b: &SchurElement) -> Self {
        let mut out = Self::zero();
        for (l, cl) in a.terms() {
            for (r, cr) in b.terms() {
                out.add_term(l.clone(), r.clone(), cl * cr);
            }
        }
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((Partition, Partition), C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for ((l, r), c) in terms {
            out.add_term(l, r, c.into());
        }
        out
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &Partition, right: &Partition) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
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

    /// Swaps the two tensor slots.
    pub fn swap(&self) -> TensorElement {
        Self::from_terms(self.terms.iter().map(|((l, r), c)| ((r.clone(), l.clone()), c.clone())))
    }

    /// `(a⊗b)·(c⊗d) = (a·c)⊗(b·d)`, extended bilinearly.
    pub fn tensor_multiply(&self, other: &TensorElement) -> TensorElement {
        self.tensor_multiply_bounded(other, usize::MAX, usize::MAX)
    }

    /// [`TensorElement::tensor_multiply`] keeping only pairs with left weight
    /// `≤ max_left` and right weight `≤ max_right`. Weights add under the
    /// product, so the truncation is exact.
    pub fn tensor_multiply_bounded(&self, other: &TensorElement, max_left: usize, max_right: usize) -> TensorElement {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                if a.weight() + c.weight() > max_left || b.weight() + d.weight() > max_right {
                    continue;
                }
                let coeff = c1 * c2;
                let left = lr_expand_product(a, c);
                let right = lr_expand_product(b, d);
                for (l, nl) in left.iter() {
                    for (r, nr) in right.iter() {
                        out.add_term(l.clone(), r.clone(), &coeff * BigInt::from(nl * nr));
                    }
                }
            }
        }
        out
    }

    /// Applies `f` to the left slot and `g` to the right slot, then multiplies
    /// the slots together: `Σ c · f(a) · g(b)`.
    pub fn fold_product(
        &self,
        f: impl Fn(&SchurElement) -> SchurElement,
        g: impl Fn(&SchurElement) -> SchurElement,
    ) -> SchurElement {
        let mut out = SchurElement::zero();
        for ((a, b), c) in &self.terms {
            let left = f(&SchurElement::basis(a.clone()));
            let right = g(&SchurElement::basis(b.clone()));
            out += &left.multiply(&right).scale(c);
        }
        out
    }

    /// Keeps pairs whose total weight is at most `max_total`.
    pub fn truncate(&self, max_total: usize) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| l.weight() + r.weight() <= max_total)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn render(&self, open: &str, close: &str) -> String {
        let mut out = String::new();
        for ((l, r), c) in &self.terms {
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let magnitude = c.abs();
            let pair = format!("{open}{l}{close}⊗{open}{r}{close}");
            if magnitude.is_one() {
                out.push_str(&pair);
            } else {
                out.push_str(&format!("{magnitude}({pair})"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("{", "}"))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

// JSON: {"terms":[{"partition":[..],"coeff":n}, ...]}. Coefficients that fit in
// an i64 are written as numbers, larger ones as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl CoeffRepr {
    pub(crate) fn from_bigint(c: &BigInt) -> Self {
        i64::try_from(c).map_or_else(|_| CoeffRepr::Big(c.to_string()), CoeffRepr::Small)
    }

    pub(crate) fn to_bigint<E: serde::de::Error>(&self) -> Result<BigInt, E> {
        match self {
            CoeffRepr::Small(v) => Ok(BigInt::from(*v)),
            CoeffRepr::Big(s) => s.parse().map_err(|_| E::custom(format!("bad coefficient {s}"))),
        }
    }
}

pub(crate) fn partition_from_json<E: serde::de::Error>(parts: Vec<u32>) -> Result<Partition, E> {
    Partition::new(parts).map_err(E::custom)
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermRepr {
    pub partition: Vec<u32>,
    pub coeff: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    terms: Vec<TermRepr>,
}

impl SchurElement {
    pub(crate) fn to_term_reprs(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(q, c)| TermRepr {
                partition: q.parts().to_vec(),
                coeff: CoeffRepr::from_bigint(c),
            })
            .collect()
    }

    pub(crate) fn from_term_reprs<E: serde::de::Error>(terms: Vec<TermRepr>) -> Result<Self, E> {
        let mut out = SchurElement::zero();
        for t in terms {
            out.add_term(partition_from_json(t.partition)?, t.coeff.to_bigint()?);
        }
        Ok(out)
    }
}

impl Serialize for SchurElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            terms: self.to_term_reprs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        SchurElement::from_term_reprs(repr.terms)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct PairRepr {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub coeff: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    terms: Vec<PairRepr>,
}

impl TensorElement {
    pub(crate) fn to_pair_reprs(&self) -> Vec<PairRepr> {
        self.terms
            .iter()
            .map(|((l, r), c)| PairRepr {
                left: l.parts().to_vec(),
                right: r.parts().to_vec(),
                coeff: CoeffRepr::from_bigint(c),
            })
            .collect()
    }

    pub(crate) fn from_pair_reprs<E: serde::de::Error>(terms: Vec<PairRepr>) -> Result<Self, E> {
        let mut out = TensorElement::zero();
        for t in terms {
            out.add_term(
                partition_from_json(t.left)?,
                partition_from_json(t.right)?,
                t.coeff.to_bigint()?,
            );
        }
        Ok(out)
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TensorRepr {
            terms: self.to_pair_reprs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TensorRepr::deserialize(deserializer)?;
        TensorElement::from_pair_reprs(repr.terms)
    }
}
