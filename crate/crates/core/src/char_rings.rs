//! Universal character rings `CharGL`, `CharO` and `CharSp`.
//!
//! A [`CharElement`] is a coefficient table over one of the three bases
//! `{λ}`, `[λ]`, `⟨λ⟩`. The bases are related through the Littlewood series:
//!
//! ```text
//! {λ} = [λ/D] = ⟨λ/B⟩      [λ] = {λ/C} = ⟨λ/BC⟩      ⟨λ⟩ = {λ/A} = [λ/AD]
//! ```
//!
//! Results are universal characters. Specializing them to a finite rank
//! outside the stable range needs modification rules, which this crate does
//! not implement. For `Sp(2k+1)` a character `⟨λ⟩` describes an
//! indecomposable rather than an irreducible representation.
//!
//! Arithmetic never converts implicitly: combining elements of different
//! bases is an [`Error::MixedBasis`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur_ring::{PairRepr, SchurElement, TensorElement, TermRepr};
use crate::series::{
    delta_double_prime_bounded, in_support, series_product, skew_by_series, SchurSeries, SeriesName,
    TensorSeriesCoefficients,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    GL,
    O,
    Sp,
}

impl BasisLabel {
    pub const ALL: [BasisLabel; 3] = [BasisLabel::GL, BasisLabel::O, BasisLabel::Sp];

    pub fn brackets(self) -> (&'static str, &'static str) {
        match self {
            BasisLabel::GL => ("{", "}"),
            BasisLabel::O => ("[", "]"),
            BasisLabel::Sp => ("⟨", "⟩"),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BasisLabel::GL => "GL",
            BasisLabel::O => "O",
            BasisLabel::Sp => "Sp",
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gl" => Ok(BasisLabel::GL),
            "o" => Ok(BasisLabel::O),
            "sp" => Ok(BasisLabel::Sp),
            other => Err(Error::InvalidSpec(format!(
                "unknown basis `{other}` (expected GL, O or Sp)"
            ))),
        }
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct CharElement {
    pub basis: BasisLabel,
    pub terms: SchurElement,
}

impl CharElement {
    pub fn new(basis: BasisLabel, terms: SchurElement) -> Self {
        CharElement { basis, terms }
    }

    pub fn basis_element(basis: BasisLabel, lambda: Partition) -> Self {
        CharElement::new(basis, SchurElement::basis(lambda))
    }

    /// The unit `{0}`, `[0]` or `⟨0⟩`.
    pub fn one(basis: BasisLabel) -> Self {
        CharElement::new(basis, SchurElement::one())
    }

    pub fn zero(basis: BasisLabel) -> Self {
        CharElement::new(basis, SchurElement::zero())
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.coefficient(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same_basis(&self, other: &CharElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::MixedBasis {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CharElement) -> Result<CharElement> {
        self.same_basis(other)?;
        Ok(CharElement::new(self.basis, &self.terms + &other.terms))
    }

    pub fn sub(&self, other: &CharElement) -> Result<CharElement> {
        self.same_basis(other)?;
        Ok(CharElement::new(self.basis, &self.terms - &other.terms))
    }

    pub fn scale(&self, factor: &BigInt) -> CharElement {
        CharElement::new(self.basis, self.terms.scale(factor))
    }
}

impl fmt::Display for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = self.basis.brackets();
        f.write_str(&self.terms.render(open, close))
    }
}

impl fmt::Debug for CharElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharElement({}: {self})", self.basis)
    }
}

#[derive(Serialize, Deserialize)]
struct CharRepr {
    basis: BasisLabel,
    terms: Vec<TermRepr>,
}

impl Serialize for CharElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharRepr {
            basis: self.basis,
            terms: self.terms.to_term_reprs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CharRepr::deserialize(deserializer)?;
        Ok(CharElement::new(repr.basis, SchurElement::from_term_reprs(repr.terms)?))
    }
}

/// A tensor of two characters in the same basis; the value of a coproduct.
#[derive(Clone, PartialEq, Eq)]
pub struct CharTensor {
    pub basis: BasisLabel,
    pub terms: TensorElement,
}

impl fmt::Display for CharTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = self.basis.brackets();
        f.write_str(&self.terms.render(open, close))
    }
}

impl fmt::Debug for CharTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharTensor({}: {self})", self.basis)
    }
}

#[derive(Serialize, Deserialize)]
struct CharTensorRepr {
    basis: BasisLabel,
    terms: Vec<PairRepr>,
}

impl Serialize for CharTensor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharTensorRepr {
            basis: self.basis,
            terms: self.terms.to_pair_reprs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharTensor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CharTensorRepr::deserialize(deserializer)?;
        Ok(CharTensor {
            basis: repr.basis,
            terms: TensorElement::from_pair_reprs(repr.terms)?,
        })
    }
}

/// Skews by a named series sized to the element.
fn skew_named(x: &SchurElement, name: SeriesName) -> SchurElement {
    let cutoff = x.max_weight().unwrap_or(0);
    skew_by_series(x, &SchurSeries::named(name, cutoff)).expect("cutoff covers the element")
}

/// Skews by the product of two named series sized to the element.
fn skew_named_pair(x: &SchurElement, first: SeriesName, second: SeriesName) -> SchurElement {
    let cutoff = x.max_weight().unwrap_or(0);
    let product = series_product(
        &SchurSeries::named(first, cutoff),
        &SchurSeries::named(second, cutoff),
        cutoff,
    )
    .expect("cutoffs agree");
    skew_by_series(x, &product).expect("cutoff covers the element")
}

/// Re-expresses `x` in the basis `to`.
pub fn convert(x: &CharElement, to: BasisLabel) -> CharElement {
    use BasisLabel::*;
    let terms = match (x.basis, to) {
        (from, to) if from == to => x.terms.clone(),
        (GL, O) => skew_named(&x.terms, SeriesName::D),
        (GL, Sp) => skew_named(&x.terms, SeriesName::B),
        (O, GL) => skew_named(&x.terms, SeriesName::C),
        (Sp, GL) => skew_named(&x.terms, SeriesName::A),
        (O, Sp) => skew_named_pair(&x.terms, SeriesName::B, SeriesName::C),
        (Sp, O) => skew_named_pair(&x.terms, SeriesName::A, SeriesName::D),
        _ => unreachable!(),
    };
    CharElement::new(to, terms)
}

/// `GL(n) ⊃ O(n)`: `{λ} → [λ/D]`.
pub fn branch_gl_to_o(lambda: &Partition) -> CharElement {
    CharElement::new(
        BasisLabel::O,
        skew_named(&SchurElement::basis(lambda.clone()), SeriesName::D),
    )
}

/// `GL(n) ⊃ Sp(n)`: `{λ} → ⟨λ/B⟩`.
pub fn branch_gl_to_sp(lambda: &Partition) -> CharElement {
    CharElement::new(
        BasisLabel::Sp,
        skew_named(&SchurElement::basis(lambda.clone()), SeriesName::B),
    )
}

/// Branching from GL to `target`, which must be `O` or `Sp`.
pub fn branch(lambda: &Partition, target: BasisLabel) -> Result<CharElement> {
    match target {
        BasisLabel::O => Ok(branch_gl_to_o(lambda)),
        BasisLabel::Sp => Ok(branch_gl_to_sp(lambda)),
        BasisLabel::GL => Err(Error::BasisMisuse {
            basis: target,
            reason: "branching targets are O and Sp".into(),
        }),
    }
}

/// Product of two basis characters.
///
/// In `GL` this is the Littlewood–Richardson product. In `O` and `Sp` it is
/// the Newell–Littlewood sum `Σ_σ [(λ/σ)·(μ/σ)]`, where only `σ ⊆ λ ∩ μ`
/// contributes, so `|σ| ≤ min(|λ|, |μ|)`.
pub fn tensor_product(lambda: &Partition, mu: &Partition, basis: BasisLabel) -> CharElement {
    let sl = SchurElement::basis(lambda.clone());
    let sm = SchurElement::basis(mu.clone());
    let terms = match basis {
        BasisLabel::GL => sl.multiply(&sm),
        BasisLabel::O | BasisLabel::Sp => {
            let mut out = SchurElement::zero();
            for sigma in lambda.subpartitions().into_iter().filter(|s| mu.contains(s)) {
                let ss = SchurElement::basis(sigma);
                out += &sl.skew(&ss).multiply(&sm.skew(&ss));
            }
            out
        }
    };
    CharElement::new(basis, terms)
}

/// `Σ_{σ,τ} b_{στ} [[(λ/σ)·(μ/τ)]]` with `b` read from `Δ″(T)`. The result is
/// tagged with `basis`, the basis of the characters `[[·]]` defined by `T`.
pub fn tensor_product_generic(
    lambda: &Partition,
    mu: &Partition,
    t: &SchurSeries,
    basis: BasisLabel,
) -> Result<CharElement> {
    let (l, m) = (lambda.weight(), mu.weight());
    let coeffs = delta_double_prime_bounded(t, l + m, l, m)?;
    Ok(tensor_product_with_coefficients(lambda, mu, &coeffs, basis))
}

/// [`tensor_product_generic`] with precomputed `Δ″` coefficients; those must
/// cover `|σ| ≤ |λ|` and `|τ| ≤ |μ|`.
pub fn tensor_product_with_coefficients(
    lambda: &Partition,
    mu: &Partition,
    coeffs: &TensorSeriesCoefficients,
    basis: BasisLabel,
) -> CharElement {
    debug_assert!(coeffs.max_left >= lambda.weight() && coeffs.max_right >= mu.weight());
    let sl = SchurElement::basis(lambda.clone());
    let sm = SchurElement::basis(mu.clone());
    let mut out = SchurElement::zero();
    for ((sigma, tau), b) in coeffs.entries.terms() {
        if !lambda.contains(sigma) || !mu.contains(tau) {
            continue;
        }
        let left = sl.skew(&SchurElement::basis(sigma.clone()));
        let right = sm.skew(&SchurElement::basis(tau.clone()));
        out += &left.multiply(&right).scale(b);
    }
    CharElement::new(basis, out)
}

/// The ring product of the basis, extended bilinearly.
pub fn char_multiply(x: &CharElement, y: &CharElement) -> Result<CharElement> {
    x.same_basis(y)?;
    let mut out = SchurElement::zero();
    for (a, ca) in x.terms.terms() {
        for (b, cb) in y.terms.terms() {
            out += &tensor_product(a, b, x.basis).terms.scale(&(ca * cb));
        }
    }
    Ok(CharElement::new(x.basis, out))
}

/// Coproduct of the character ring:
///
/// * `Δ{λ} = Σ_ζ {λ/ζ} ⊗ {ζ}`
/// * `Δ[λ] = Σ_ζ [λ/ζ] ⊗ [ζ/D]`
/// * `Δ⟨λ⟩ = Σ_ζ ⟨λ/ζ⟩ ⊗ ⟨ζ/B⟩`
pub fn char_coproduct(x: &CharElement) -> CharTensor {
    let right_series = match x.basis {
        BasisLabel::GL => None,
        BasisLabel::O => Some(SeriesName::D),
        BasisLabel::Sp => Some(SeriesName::B),
    };
    let mut out = TensorElement::zero();
    for (lambda, c) in x.terms.terms() {
        let sl = SchurElement::basis(lambda.clone());
        for zeta in lambda.subpartitions() {
            let sz = SchurElement::basis(zeta);
            let left = sl.skew(&sz);
            let right = match right_series {
                Some(name) => skew_named(&sz, name),
                None => sz,
            };
            out += &TensorElement::pure(&left.scale(c), &right);
        }
    }
    CharTensor {
        basis: x.basis,
        terms: out,
    }
}

/// Counit: `ε{λ} = δ_{λ,0}`, `ε[λ]` is the coefficient of `s_λ` in `C`, and
/// `ε⟨λ⟩` the coefficient of `s_λ` in `A`.
pub fn char_counit(x: &CharElement) -> BigInt {
    let series = match x.basis {
        BasisLabel::GL => return x.terms.counit(),
        BasisLabel::O => SeriesName::C,
        BasisLabel::Sp => SeriesName::A,
    };
    let mut total = BigInt::zero();
    for (lambda, c) in x.terms.terms() {
        if in_support(series, lambda) {
            // supports of A and C live in even degrees
            if (lambda.weight() / 2) % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    }
    total
}

/// Antipode: `S{λ} = (-1)^{|λ|}{λ'}`, `S[λ] = (-1)^{|λ|}[λ'/AD]`,
/// `S⟨λ⟩ = (-1)^{|λ|}⟨λ'/CB⟩`.
pub fn char_antipode(x: &CharElement) -> CharElement {
    let conjugated = x.terms.antipode();
    let terms = match x.basis {
        BasisLabel::GL => conjugated,
        BasisLabel::O => skew_named_pair(&conjugated, SeriesName::A, SeriesName::D),
        BasisLabel::Sp => skew_named_pair(&conjugated, SeriesName::C, SeriesName::B),
    };
    CharElement::new(x.basis, terms)
}

/// `(ε⊗I)∘Δ (x) - x`, zero when counitarity holds.
pub fn left_counitarity_defect(x: &CharElement) -> CharElement {
    let delta = char_coproduct(x);
    let mut folded = SchurElement::zero();
    for ((l, r), c) in delta.terms.terms() {
        let e = char_counit(&CharElement::basis_element(x.basis, l.clone()));
        if !e.is_zero() {
            folded.add_term(r.clone(), c * e);
        }
    }
    CharElement::new(x.basis, &folded - &x.terms)
}

/// `(I⊗ε)∘Δ (x) - x`.
pub fn right_counitarity_defect(x: &CharElement) -> CharElement {
    let delta = char_coproduct(x);
    let mut folded = SchurElement::zero();
    for ((l, r), c) in delta.terms.terms() {
        let e = char_counit(&CharElement::basis_element(x.basis, r.clone()));
        if !e.is_zero() {
            folded.add_term(l.clone(), c * e);
        }
    }
    CharElement::new(x.basis, &folded - &x.terms)
}

/// `m∘(S⊗I)∘Δ (x) - ι ε(x)` using the ring product of the basis.
pub fn left_antipode_defect(x: &CharElement) -> CharElement {
    antipode_defect(x, true)
}

/// `m∘(I⊗S)∘Δ (x) - ι ε(x)`.
pub fn right_antipode_defect(x: &CharElement) -> CharElement {
    antipode_defect(x, false)
}

fn antipode_defect(x: &CharElement, left: bool) -> CharElement {
    let basis = x.basis;
    let delta = char_coproduct(x);
    let mut folded = CharElement::zero(basis);
    for ((l, r), c) in delta.terms.terms() {
        let a = CharElement::basis_element(basis, l.clone());
        let b = CharElement::basis_element(basis, r.clone());
        let (a, b) = if left {
            (char_antipode(&a), b)
        } else {
            (a, char_antipode(&b))
        };
        let prod = char_multiply(&a, &b).expect("same basis");
        folded = folded.add(&prod.scale(c)).expect("same basis");
    }
    let expected = CharElement::one(basis).scale(&char_counit(x));
    folded.sub(&expected).expect("same basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ch(basis: BasisLabel, terms: &[(&[u32], i64)]) -> CharElement {
        CharElement::new(basis, SchurElement::from_terms(terms.iter().map(|(q, c)| (p(q), *c))))
    }

    #[test]
    fn conversions() {
        let two = CharElement::basis_element(BasisLabel::GL, p(&[2]));
        assert_eq!(convert(&two, BasisLabel::O), ch(BasisLabel::O, &[(&[2], 1), (&[], 1)]));
        let x = ch(BasisLabel::O, &[(&[3, 1], 2), (&[], -1)]);
        assert_eq!(convert(&x, BasisLabel::O), x);
        let sp = CharElement::basis_element(BasisLabel::Sp, p(&[1, 1]));
        assert_eq!(
            convert(&sp, BasisLabel::GL),
            ch(BasisLabel::GL, &[(&[1, 1], 1), (&[], -1)])
        );
    }

    #[test]
    fn branching_table() {
        assert_eq!(branch_gl_to_o(&p(&[4])).to_string(), "[4]+[2]+[0]");
        assert_eq!(branch_gl_to_o(&p(&[1, 1, 1, 1])).to_string(), "[1^4]");
        assert_eq!(branch_gl_to_o(&p(&[2, 2, 1, 1])).to_string(), "[2^2 1^2]+[21^2]+[1^2]");
        assert_eq!(branch_gl_to_sp(&p(&[4])).to_string(), "⟨4⟩");
        assert_eq!(branch_gl_to_sp(&p(&[1, 1, 1, 1])).to_string(), "⟨1^4⟩+⟨1^2⟩+⟨0⟩");
        assert_eq!(
            branch_gl_to_sp(&p(&[2, 2, 1, 1])).to_string(),
            "⟨2^2 1^2⟩+⟨2^2⟩+⟨21^2⟩+⟨1^4⟩+2⟨1^2⟩+⟨0⟩"
        );
        assert!(matches!(
            branch(&p(&[1]), BasisLabel::GL),
            Err(Error::BasisMisuse { .. })
        ));
    }

    #[test]
    fn small_tensor_products() {
        assert_eq!(
            tensor_product(&p(&[1]), &p(&[1]), BasisLabel::O).to_string(),
            "[2]+[1^2]+[0]"
        );
        for basis in BasisLabel::ALL {
            let l = p(&[3, 1]);
            assert_eq!(
                tensor_product(&l, &Partition::empty(), basis),
                CharElement::basis_element(basis, l.clone())
            );
        }
        let b = SchurSeries::named(SeriesName::B, 2);
        assert_eq!(
            tensor_product_generic(&p(&[1]), &p(&[1]), &b, BasisLabel::Sp)
                .unwrap()
                .to_string(),
            "⟨2⟩+⟨1^2⟩+⟨0⟩"
        );
        let unit = SchurSeries::unit(7);
        assert_eq!(
            tensor_product_generic(&p(&[2, 2]), &p(&[2, 1]), &unit, BasisLabel::GL).unwrap(),
            tensor_product(&p(&[2, 2]), &p(&[2, 1]), BasisLabel::GL)
        );
        let short = SchurSeries::named(SeriesName::D, 3);
        assert!(matches!(
            tensor_product_generic(&p(&[2]), &p(&[2]), &short, BasisLabel::O),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn mixed_bases_are_rejected() {
        let a = CharElement::one(BasisLabel::O);
        let b = CharElement::one(BasisLabel::Sp);
        assert!(matches!(a.add(&b), Err(Error::MixedBasis { .. })));
        assert!(matches!(char_multiply(&a, &b), Err(Error::MixedBasis { .. })));
    }

    #[test]
    fn coproduct_examples() {
        let gl = char_coproduct(&CharElement::basis_element(BasisLabel::GL, p(&[1])));
        assert_eq!(gl.to_string(), "{1}⊗{0}+{0}⊗{1}");
        let o = char_coproduct(&CharElement::basis_element(BasisLabel::O, p(&[2])));
        let expected = TensorElement::from_terms([
            ((p(&[2]), p(&[])), 1),
            ((p(&[1]), p(&[1])), 1),
            ((p(&[]), p(&[2])), 1),
            ((p(&[]), p(&[])), 1),
        ]);
        assert_eq!(o.terms, expected);
        let sp = char_coproduct(&CharElement::basis_element(BasisLabel::Sp, p(&[1, 1])));
        let expected = TensorElement::from_terms([
            ((p(&[1, 1]), p(&[])), 1),
            ((p(&[1]), p(&[1])), 1),
            ((p(&[]), p(&[1, 1])), 1),
            ((p(&[]), p(&[])), 1),
        ]);
        assert_eq!(sp.terms, expected);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(char_counit(&CharElement::one(BasisLabel::O)), BigInt::from(1));
        assert_eq!(
            char_counit(&CharElement::basis_element(BasisLabel::O, p(&[2]))),
            BigInt::from(-1)
        );
        assert_eq!(
            char_counit(&CharElement::basis_element(BasisLabel::O, p(&[1]))),
            BigInt::from(0)
        );
        assert_eq!(
            char_counit(&CharElement::basis_element(BasisLabel::Sp, p(&[1, 1]))),
            BigInt::from(-1)
        );
        assert_eq!(
            char_counit(&CharElement::basis_element(BasisLabel::Sp, p(&[2, 1, 1]))),
            BigInt::from(1)
        );
        assert_eq!(
            char_counit(&CharElement::basis_element(BasisLabel::GL, p(&[2]))),
            BigInt::from(0)
        );
    }

    #[test]
    fn antipode_examples() {
        let s2 = char_antipode(&CharElement::basis_element(BasisLabel::GL, p(&[2])));
        assert_eq!(s2, CharElement::basis_element(BasisLabel::GL, p(&[1, 1])));
        let s1 = char_antipode(&CharElement::basis_element(BasisLabel::O, p(&[1])));
        assert_eq!(s1, ch(BasisLabel::O, &[(&[1], -1)]));
        for basis in BasisLabel::ALL {
            assert_eq!(char_antipode(&CharElement::one(basis)), CharElement::one(basis));
        }
    }

    #[test]
    fn axioms_on_small_elements() {
        for basis in BasisLabel::ALL {
            for q in crate::partition::partitions_up_to(3) {
                let x = CharElement::basis_element(basis, q);
                assert!(left_counitarity_defect(&x).is_zero(), "{x:?}");
                assert!(right_counitarity_defect(&x).is_zero(), "{x:?}");
                assert!(left_antipode_defect(&x).is_zero(), "{x:?}");
                assert!(right_antipode_defect(&x).is_zero(), "{x:?}");
            }
        }
    }

    #[test]
    fn json_carries_basis() {
        let x = ch(BasisLabel::Sp, &[(&[1, 1], 1), (&[], -1)]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"Sp","terms":[{"partition":[1,1],"coeff":1},{"partition":[],"coeff":-1}]}"#
        );
        let back: CharElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
