//! Degree-graded Schur-function series: the Littlewood series `A`, `B`, `C`,
//! `D`, their products and inverses, skewing by a series, and the twisted
//! coproduct coefficients `Δ″(T) = (T⁻¹⊗T⁻¹)·Δ(T)`.
//!
//! A series carries an explicit cutoff; requesting a term past it is an
//! error, never a silent truncation.
//!
//! The four named series are generated from closed-form supports:
//!
//! | series | product                | support                         | sign          |
//! |--------|------------------------|---------------------------------|---------------|
//! | `D`    | `Π_{i≤j}(1-x_ix_j)^-1` | all parts even                  | `+1`          |
//! | `B`    | `Π_{i<j}(1-x_ix_j)^-1` | conjugates of the above         | `+1`          |
//! | `C`    | `Π_{i≤j}(1-x_ix_j)`    | Frobenius `(a₁+1,…|a₁,…)`       | `(-1)^{d/2}`  |
//! | `A`    | `Π_{i<j}(1-x_ix_j)`    | Frobenius `(a₁,…|a₁+1,…)`       | `(-1)^{d/2}`  |
//!
//! The `A`/`C` supports are checked against a direct expansion of the
//! products in `crate::evaluate::oracle`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::schur_ring::{SchurElement, TensorElement};

/// Cutoff used when none is given.
pub const DEFAULT_CUTOFF: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    A,
    B,
    C,
    D,
}

impl SeriesName {
    pub const ALL: [SeriesName; 4] = [SeriesName::A, SeriesName::B, SeriesName::C, SeriesName::D];

    /// The series obtained by conjugating every partition.
    pub fn conjugate(self) -> SeriesName {
        match self {
            SeriesName::A => SeriesName::C,
            SeriesName::C => SeriesName::A,
            SeriesName::B => SeriesName::D,
            SeriesName::D => SeriesName::B,
        }
    }

    /// The inverse series.
    pub fn inverse(self) -> SeriesName {
        match self {
            SeriesName::A => SeriesName::B,
            SeriesName::B => SeriesName::A,
            SeriesName::C => SeriesName::D,
            SeriesName::D => SeriesName::C,
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesName::A => "A",
            SeriesName::B => "B",
            SeriesName::C => "C",
            SeriesName::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(SeriesName::A),
            "B" | "b" => Ok(SeriesName::B),
            "C" | "c" => Ok(SeriesName::C),
            "D" | "d" => Ok(SeriesName::D),
            other => Err(Error::InvalidSpec(format!(
                "unknown series `{other}` (expected A, B, C or D)"
            ))),
        }
    }
}

/// `true` iff `λ` appears in the named series.
pub fn in_support(name: SeriesName, lambda: &Partition) -> bool {
    match name {
        SeriesName::D => lambda.parts().iter().all(|p| p % 2 == 0),
        SeriesName::B => lambda.conjugate().parts().iter().all(|p| p % 2 == 0),
        SeriesName::C => {
            let (arms, legs) = lambda.frobenius();
            arms.iter().zip(&legs).all(|(a, l)| *a == l + 1)
        }
        SeriesName::A => {
            let (arms, legs) = lambda.frobenius();
            arms.iter().zip(&legs).all(|(a, l)| a + 1 == *l)
        }
    }
}

/// Degree-`d` term of a named series, with no cutoff check.
pub fn named_term(name: SeriesName, d: usize) -> SchurElement {
    if d % 2 == 1 {
        return SchurElement::zero();
    }
    let sign: i64 = match name {
        SeriesName::B | SeriesName::D => 1,
        SeriesName::A | SeriesName::C => {
            if (d / 2).is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    };
    SchurElement::from_terms(
        partitions_of(d)
            .into_iter()
            .filter(|q| in_support(name, q))
            .map(|q| (q, sign)),
    )
}

/// Degree-`d` term of a named series, checked against `cutoff`.
pub fn series_term(name: SeriesName, d: usize, cutoff: usize) -> Result<SchurElement> {
    if d > cutoff {
        return Err(Error::DegreeOverflow { degree: d, cutoff });
    }
    Ok(named_term(name, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesLabel {
    Named(SeriesName),
    Unit,
    Custom(String),
}

impl fmt::Display for SeriesLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesLabel::Named(n) => write!(f, "{n}"),
            SeriesLabel::Unit => f.write_str("1"),
            SeriesLabel::Custom(s) => f.write_str(s),
        }
    }
}

type TermSource = Box<dyn Fn(usize) -> SchurElement + Send + Sync>;

struct Inner {
    label: SeriesLabel,
    cutoff: usize,
    source: TermSource,
    memo: Vec<OnceLock<SchurElement>>,
}

/// A lazily evaluated series `Σ_d S_d` with `S_d` homogeneous of degree `d`.
/// Cloning shares the memoized terms.
#[derive(Clone)]
pub struct SchurSeries {
    inner: Arc<Inner>,
}

impl SchurSeries {
    fn from_source(label: SeriesLabel, cutoff: usize, source: TermSource) -> Self {
        SchurSeries {
            inner: Arc::new(Inner {
                label,
                cutoff,
                source,
                memo: (0..=cutoff).map(|_| OnceLock::new()).collect(),
            }),
        }
    }

    pub fn named(name: SeriesName, cutoff: usize) -> Self {
        Self::from_source(SeriesLabel::Named(name), cutoff, Box::new(move |d| named_term(name, d)))
    }

    /// The series `1 = s_0`.
    pub fn unit(cutoff: usize) -> Self {
        Self::from_source(
            SeriesLabel::Unit,
            cutoff,
            Box::new(|d| {
                if d == 0 {
                    SchurElement::one()
                } else {
                    SchurElement::zero()
                }
            }),
        )
    }

    pub fn label(&self) -> &SeriesLabel {
        &self.inner.label
    }

    pub fn cutoff(&self) -> usize {
        self.inner.cutoff
    }

    /// Same terms under a new label.
    pub fn relabel(&self, label: SeriesLabel) -> SchurSeries {
        let terms: Vec<SchurElement> = (0..=self.cutoff()).map(|d| self.term_unchecked(d).clone()).collect();
        Self::from_terms_unchecked(label, terms)
    }

    pub fn term(&self, d: usize) -> Result<&SchurElement> {
        if d > self.inner.cutoff {
            return Err(Error::DegreeOverflow {
                degree: d,
                cutoff: self.inner.cutoff,
            });
        }
        Ok(self.term_unchecked(d))
    }

    fn term_unchecked(&self, d: usize) -> &SchurElement {
        self.inner.memo[d].get_or_init(|| (self.inner.source)(d))
    }

    /// `Σ_{d≤cutoff} S_d` as a single element.
    pub fn truncated_sum(&self) -> SchurElement {
        let mut out = SchurElement::zero();
        for d in 0..=self.cutoff() {
            out += self.term_unchecked(d);
        }
        out
    }

    /// `true` iff every term through the cutoff is `s_0` in degree 0 and zero
    /// elsewhere.
    pub fn is_unit(&self) -> bool {
        (0..=self.cutoff()).all(|d| {
            let t = self.term_unchecked(d);
            if d == 0 {
                *t == SchurElement::one()
            } else {
                t.is_zero()
            }
        })
    }

    fn from_terms_unchecked(label: SeriesLabel, terms: Vec<SchurElement>) -> Self {
        let cutoff = terms.len().saturating_sub(1);
        let series = Self::from_source(label, cutoff, Box::new(|_| SchurElement::zero()));
        for (d, t) in terms.into_iter().enumerate() {
            let _ = series.inner.memo[d].set(t);
        }
        series
    }
}

impl fmt::Debug for SchurSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurSeries({}, cutoff {})", self.inner.label, self.inner.cutoff)
    }
}

/// Builds a custom series from `(degree, element)` pairs; missing degrees up
/// to `cutoff` are zero.
pub fn series_from_element_list(
    label: impl Into<String>,
    terms: Vec<(usize, SchurElement)>,
    cutoff: usize,
) -> Result<SchurSeries> {
    let mut slots: Vec<Option<SchurElement>> = vec![None; cutoff + 1];
    for (d, element) in terms {
        if d > cutoff {
            return Err(Error::DegreeOverflow { degree: d, cutoff });
        }
        if !element.is_homogeneous_of(d) || slots[d].is_some() {
            return Err(Error::DegreeMismatch { degree: d });
        }
        slots[d] = Some(element);
    }
    let terms = slots.into_iter().map(Option::unwrap_or_default).collect();
    Ok(SchurSeries::from_terms_unchecked(
        SeriesLabel::Custom(label.into()),
        terms,
    ))
}

/// `(S1·S2)_d = Σ_{e≤d} S1_e · S2_{d-e}`, through `cutoff`.
pub fn series_product(s1: &SchurSeries, s2: &SchurSeries, cutoff: usize) -> Result<SchurSeries> {
    let limit = s1.cutoff().min(s2.cutoff());
    if cutoff > limit {
        return Err(Error::DegreeOverflow {
            degree: cutoff,
            cutoff: limit,
        });
    }
    let label = SeriesLabel::Custom(format!("{}{}", s1.label(), s2.label()));
    let (a, b) = (s1.clone(), s2.clone());
    Ok(SchurSeries::from_source(
        label,
        cutoff,
        Box::new(move |d| {
            let mut out = SchurElement::zero();
            for e in 0..=d {
                let (x, y) = (a.term_unchecked(e), b.term_unchecked(d - e));
                if !x.is_zero() && !y.is_zero() {
                    out += &x.multiply(y);
                }
            }
            out
        }),
    ))
}

/// The unique `T` with `S·T = 1` through `cutoff`, from
/// `T_d = -Σ_{e=1..d} S_e · T_{d-e}`.
pub fn series_inverse(s: &SchurSeries, cutoff: usize) -> Result<SchurSeries> {
    if cutoff > s.cutoff() {
        return Err(Error::DegreeOverflow {
            degree: cutoff,
            cutoff: s.cutoff(),
        });
    }
    if *s.term_unchecked(0) != SchurElement::one() {
        return Err(Error::NotInvertible);
    }
    let mut terms = vec![SchurElement::one()];
    for d in 1..=cutoff {
        let mut acc = SchurElement::zero();
        for e in 1..=d {
            let (x, y) = (s.term_unchecked(e), &terms[d - e]);
            if !x.is_zero() && !y.is_zero() {
                acc += &x.multiply(y);
            }
        }
        terms.push(-&acc);
    }
    let label = match s.label() {
        SeriesLabel::Named(n) => SeriesLabel::Named(n.inverse()),
        SeriesLabel::Unit => SeriesLabel::Unit,
        SeriesLabel::Custom(name) => SeriesLabel::Custom(format!("({name})^-1")),
    };
    Ok(SchurSeries::from_terms_unchecked(label, terms))
}

/// `X / S = Σ_d X / S_d`. Terms of `S` above the largest weight in `X` cannot
/// contribute, so the result is exact once the cutoff covers that weight.
pub fn skew_by_series(x: &SchurElement, s: &SchurSeries) -> Result<SchurElement> {
    let Some(top) = x.max_weight() else {
        return Ok(SchurElement::zero());
    };
    if top > s.cutoff() {
        return Err(Error::DegreeOverflow {
            degree: top,
            cutoff: s.cutoff(),
        });
    }
    let mut out = SchurElement::zero();
    for d in 0..=top {
        let t = s.term_unchecked(d);
        if !t.is_zero() {
            out += &x.skew(t);
        }
    }
    Ok(out)
}

/// Coefficients `b^T_{στ}` of `Δ″(T)`, for all pairs of total weight up to
/// the cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSeriesCoefficients {
    pub cutoff: usize,
    pub max_left: usize,
    pub max_right: usize,
    pub entries: TensorElement,
}

impl TensorSeriesCoefficients {
    pub fn coefficient(&self, sigma: &Partition, tau: &Partition) -> BigInt {
        self.entries.coefficient(sigma, tau)
    }

    /// `true` iff the entries are exactly `δ_{στ}` over the covered range.
    pub fn is_unit_diagonal(&self) -> bool {
        let off_or_wrong = self.entries.terms().any(|((l, r), c)| l != r || *c != BigInt::from(1));
        if off_or_wrong {
            return false;
        }
        let max_diag = self.max_left.min(self.max_right).min(self.cutoff / 2);
        (0..=max_diag).all(|d| {
            partitions_of(d)
                .iter()
                .all(|q| self.entries.coefficient(q, q) == BigInt::from(1))
        })
    }
}

/// `Δ″(T) = (T⁻¹⊗T⁻¹)·Δ(T)` through total degree `cutoff`.
pub fn delta_double_prime(t: &SchurSeries, cutoff: usize) -> Result<TensorSeriesCoefficients> {
    delta_double_prime_bounded(t, cutoff, cutoff, cutoff)
}

/// [`delta_double_prime`] restricted to `|σ| ≤ max_left`, `|τ| ≤ max_right`
/// and `|σ|+|τ| ≤ cutoff`.
pub fn delta_double_prime_bounded(
    t: &SchurSeries,
    cutoff: usize,
    max_left: usize,
    max_right: usize,
) -> Result<TensorSeriesCoefficients> {
    if cutoff > t.cutoff() {
        return Err(Error::DegreeOverflow {
            degree: cutoff,
            cutoff: t.cutoff(),
        });
    }
    if *t.term_unchecked(0) != SchurElement::one() {
        return Err(Error::NotInvertible);
    }
    let max_left = max_left.min(cutoff);
    let max_right = max_right.min(cutoff);
    let inverse = series_inverse(t, cutoff)?;

    let mut split = TensorElement::zero();
    for d in 0..=cutoff {
        let term = t.term_unchecked(d);
        if !term.is_zero() {
            split += &term.coproduct();
        }
    }
    let split = keep_bidegree(&split, cutoff, max_left, max_right);

    let mut inverse_pair = TensorElement::zero();
    for e in 0..=max_left {
        for f in 0..=max_right.min(cutoff - e) {
            let (a, b) = (inverse.term_unchecked(e), inverse.term_unchecked(f));
            if !a.is_zero() && !b.is_zero() {
                inverse_pair += &TensorElement::pure(a, b);
            }
        }
    }
    let product = inverse_pair.tensor_multiply_bounded(&split, max_left, max_right);
    Ok(TensorSeriesCoefficients {
        cutoff,
        max_left,
        max_right,
        entries: keep_bidegree(&product, cutoff, max_left, max_right),
    })
}

fn keep_bidegree(t: &TensorElement, cutoff: usize, max_left: usize, max_right: usize) -> TensorElement {
    TensorElement::from_terms(
        t.truncate(cutoff)
            .terms()
            .filter(|((l, r), _)| l.weight() <= max_left && r.weight() <= max_right)
            .map(|(k, c)| (k.clone(), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn el(terms: &[(&[u32], i64)]) -> SchurElement {
        SchurElement::from_terms(terms.iter().map(|(q, c)| (p(q), *c)))
    }

    #[test]
    fn named_terms() {
        assert_eq!(named_term(SeriesName::D, 4), el(&[(&[4], 1), (&[2, 2], 1)]));
        assert_eq!(
            named_term(SeriesName::B, 6),
            el(&[(&[3, 3], 1), (&[2, 2, 1, 1], 1), (&[1, 1, 1, 1, 1, 1], 1)])
        );
        assert_eq!(named_term(SeriesName::C, 2), el(&[(&[2], -1)]));
        assert_eq!(named_term(SeriesName::A, 4), el(&[(&[2, 1, 1], 1)]));
        for name in SeriesName::ALL {
            assert_eq!(named_term(name, 0), SchurElement::one());
            assert!(named_term(name, 5).is_zero());
        }
    }

    #[test]
    fn cutoff_is_enforced() {
        assert!(matches!(
            series_term(SeriesName::D, 9, 8),
            Err(Error::DegreeOverflow { degree: 9, cutoff: 8 })
        ));
        let d = SchurSeries::named(SeriesName::D, 4);
        assert!(d.term(4).is_ok());
        assert!(d.term(5).is_err());
        let x = SchurElement::basis(p(&[3, 2]));
        assert!(matches!(skew_by_series(&x, &d), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn element_list_series() {
        let unit = series_from_element_list("u", vec![(0, SchurElement::one())], 5).unwrap();
        assert!(unit.is_unit());
        let d_terms = (0..4).map(|i| (2 * i, named_term(SeriesName::D, 2 * i))).collect();
        let custom = series_from_element_list("d", d_terms, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(custom.term(k).unwrap(), &named_term(SeriesName::D, k));
        }
        assert!(matches!(
            series_from_element_list("bad", vec![(2, SchurElement::basis(p(&[3])))], 4),
            Err(Error::DegreeMismatch { degree: 2 })
        ));
        assert!(series_from_element_list("dup", vec![(0, SchurElement::one()), (0, SchurElement::one())], 2).is_err());
    }

    #[test]
    fn products_and_inverses() {
        let a = SchurSeries::named(SeriesName::A, 8);
        let b = SchurSeries::named(SeriesName::B, 8);
        let c = SchurSeries::named(SeriesName::C, 8);
        let d = SchurSeries::named(SeriesName::D, 8);
        assert!(series_product(&a, &b, 8).unwrap().is_unit());
        assert!(series_product(&c, &d, 8).unwrap().is_unit());
        let u = SchurSeries::unit(6);
        let prod = series_product(&u, &d, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(prod.term(k).unwrap(), d.term(k).unwrap());
        }
        let c_inv = series_inverse(&c, 6).unwrap();
        let a_inv = series_inverse(&a, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(c_inv.term(k).unwrap(), &named_term(SeriesName::D, k));
            assert_eq!(a_inv.term(k).unwrap(), &named_term(SeriesName::B, k));
        }
        assert!(series_inverse(&u, 4).unwrap().is_unit());
        let not_unit = series_from_element_list("x", vec![(0, el(&[(&[], 2)]))], 3).unwrap();
        assert!(matches!(series_inverse(&not_unit, 3), Err(Error::NotInvertible)));
        assert!(series_product(&a, &SchurSeries::named(SeriesName::B, 4), 6).is_err());
    }

    #[test]
    fn skew_by_named_series() {
        let d = SchurSeries::named(SeriesName::D, 8);
        let b = SchurSeries::named(SeriesName::B, 8);
        assert_eq!(
            skew_by_series(&SchurElement::basis(p(&[4])), &d).unwrap(),
            el(&[(&[4], 1), (&[2], 1), (&[], 1)])
        );
        assert_eq!(
            skew_by_series(&SchurElement::basis(p(&[1, 1, 1, 1])), &b).unwrap(),
            el(&[(&[1, 1, 1, 1], 1), (&[1, 1], 1), (&[], 1)])
        );
        let x = el(&[(&[3, 1], 2), (&[1], -1)]);
        assert_eq!(skew_by_series(&x, &SchurSeries::unit(8)).unwrap(), x);
    }

    #[test]
    fn twisted_coproduct_of_d_and_b_is_diagonal() {
        for name in [SeriesName::D, SeriesName::B] {
            let t = SchurSeries::named(name, 4);
            let coeffs = delta_double_prime(&t, 4).unwrap();
            assert!(coeffs.is_unit_diagonal(), "{name}: {}", coeffs.entries);
            assert_eq!(coeffs.coefficient(&p(&[1, 1]), &p(&[1, 1])), BigInt::from(1));
            assert_eq!(coeffs.coefficient(&p(&[2]), &p(&[1, 1])), BigInt::from(0));
        }
        let unit = delta_double_prime(&SchurSeries::unit(5), 5).unwrap();
        assert_eq!(unit.entries, TensorElement::one());
    }
}
