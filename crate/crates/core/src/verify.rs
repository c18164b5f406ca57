//! Built-in verification suites: the algebraic identities the library is
//! expected to satisfy, checked exhaustively over small weights. Each check
//! reports the first failing input as its witness.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::char_rings::{
    branch_gl_to_o, branch_gl_to_sp, left_antipode_defect, left_counitarity_defect, right_antipode_defect,
    right_counitarity_defect, tensor_product, BasisLabel, CharElement,
};
use crate::error::Error;
use crate::evaluate::{oracle::series_from_product_expansion, verify_cauchy};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::schur_ring::{SchurElement, TensorElement};
use crate::series::{delta_double_prime, named_term, series_inverse, series_product, SchurSeries, SeriesName};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Series,
    Cauchy,
    Tables,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hopf" => Ok(Suite::Hopf),
            "series" => Ok(Suite::Series),
            "cauchy" => Ok(Suite::Cauchy),
            "tables" => Ok(Suite::Tables),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidSpec(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        let (passed, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " -- witness: {w}")?;
            }
            writeln!(f)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

/// Runs `suite` with every weight bound capped at `max_degree`.
pub fn run(suite: Suite, max_degree: usize) -> Report {
    let mut report = Report::default();
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(&mut report);
    }
    if matches!(suite, Suite::Series | Suite::All) {
        series(&mut report, max_degree);
    }
    if matches!(suite, Suite::Cauchy | Suite::All) {
        cauchy(&mut report);
    }
    if matches!(suite, Suite::Hopf | Suite::All) {
        hopf(&mut report, max_degree);
    }
    report
}

fn part(text: &str) -> Partition {
    text.parse().expect("literal partition")
}

fn first_failure<T: fmt::Debug>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool) -> Result<(), String> {
    match items.into_iter().find(|x| !ok(x)) {
        Some(x) => Err(format!("{x:?}")),
        None => Ok(()),
    }
}

fn expect_rendered(actual: &CharElement, expected: &str) -> Result<(), String> {
    let rendered = actual.to_string();
    if rendered == expected {
        Ok(())
    } else {
        Err(format!("got {rendered}, expected {expected}"))
    }
}

fn tables(report: &mut Report) {
    let branching = [
        ("4", "[4]+[2]+[0]", "⟨4⟩"),
        ("1^4", "[1^4]", "⟨1^4⟩+⟨1^2⟩+⟨0⟩"),
        (
            "2^2 1^2",
            "[2^2 1^2]+[21^2]+[1^2]",
            "⟨2^2 1^2⟩+⟨2^2⟩+⟨21^2⟩+⟨1^4⟩+2⟨1^2⟩+⟨0⟩",
        ),
    ];
    for (lambda, o, sp) in branching {
        report.record(
            format!("branching {{{lambda}}} -> O"),
            expect_rendered(&branch_gl_to_o(&part(lambda)), o),
        );
        report.record(
            format!("branching {{{lambda}}} -> Sp"),
            expect_rendered(&branch_gl_to_sp(&part(lambda)), sp),
        );
    }
    let gl = "{43}+{421}+{3^2 1}+{32^2}+{321^2}+{2^3 1}";
    let o = "[43]+[421]+[3^2 1]+[32^2]+[321^2]+[2^3 1]+[41]+2[32]+2[31^2]+2[2^2 1]+[21^3]+[3]+2[21]+[1^3]+[1]";
    let (a, b) = (part("2^2"), part("21"));
    report.record(
        "tensor {2^2}.{21} in GL",
        expect_rendered(&tensor_product(&a, &b, BasisLabel::GL), gl),
    );
    report.record(
        "tensor [2^2].[21] in O",
        expect_rendered(&tensor_product(&a, &b, BasisLabel::O), o),
    );
    let sp = o.replace('[', "⟨").replace(']', "⟩");
    report.record(
        "tensor ⟨2^2⟩.⟨21⟩ in Sp",
        expect_rendered(&tensor_product(&a, &b, BasisLabel::Sp), &sp),
    );
}

fn series(report: &mut Report, max_degree: usize) {
    let listed = max_degree.min(6);
    let d_terms = ["0", "", "2", "", "4|2^2", "", "6|42|2^3"];
    let b_terms = ["0", "", "1^2", "", "2^2|1^4", "", "3^2|2^2 1^2|1^6"];
    for (name, listing) in [(SeriesName::D, d_terms), (SeriesName::B, b_terms)] {
        let outcome = first_failure(0..=listed, |&d| {
            let expected: Vec<Partition> = match listing[d] {
                "" => Vec::new(),
                "0" => vec![Partition::empty()],
                text => split_listing(text),
            };
            named_term(name, d) == SchurElement::from_terms(expected.into_iter().map(|q| (q, 1)))
        });
        report.record(
            format!("{name} matches its listed terms through degree {listed}"),
            outcome,
        );
    }

    let series = |name| SchurSeries::named(name, max_degree);
    for (x, y) in [(SeriesName::A, SeriesName::B), (SeriesName::C, SeriesName::D)] {
        let unit = series_product(&series(x), &series(y), max_degree).expect("cutoffs agree");
        report.record(
            format!("{x}.{y} = 1 through degree {max_degree}"),
            first_failure(1..=max_degree, |&d| {
                unit.term(d).map(SchurElement::is_zero).unwrap_or(false)
            }),
        );
    }
    let inv = series_inverse(&series(SeriesName::C), max_degree).expect("invertible");
    report.record(
        format!("C^-1 = D through degree {max_degree}"),
        first_failure(0..=max_degree, |&d| {
            inv.term(d).ok() == Some(&named_term(SeriesName::D, d))
        }),
    );
    for name in [SeriesName::A, SeriesName::C] {
        let oracle = series_from_product_expansion(name, max_degree);
        report.record(
            format!("{name} agrees with its product expansion through degree {max_degree}"),
            first_failure(0..=max_degree, |&d| oracle[d] == named_term(name, d)),
        );
    }
    report.record(
        format!("conjugation maps C to A and D to B through degree {max_degree}"),
        first_failure(0..=max_degree, |&d| {
            named_term(SeriesName::C, d).map_partitions(Partition::conjugate) == named_term(SeriesName::A, d)
                && named_term(SeriesName::D, d).map_partitions(Partition::conjugate) == named_term(SeriesName::B, d)
        }),
    );
    let cutoff = max_degree.min(6);
    for name in [SeriesName::D, SeriesName::B] {
        let coeffs = delta_double_prime(&SchurSeries::named(name, cutoff), cutoff).expect("invertible");
        let outcome = if coeffs.is_unit_diagonal() {
            Ok(())
        } else {
            Err(coeffs.entries.to_string())
        };
        report.record(
            format!("Δ″({name}) is the unit diagonal through degree {cutoff}"),
            outcome,
        );
    }
}

fn split_listing(text: &str) -> Vec<Partition> {
    text.split('|').map(part).collect()
}

fn cauchy(report: &mut Report) {
    for (nx, ny, d) in [(1, 1, 4), (2, 2, 4), (3, 2, 4)] {
        let outcome = if verify_cauchy(nx, ny, d) {
            Ok(())
        } else {
            Err(format!("nx={nx} ny={ny} d={d}"))
        };
        report.record(
            format!("Cauchy kernels in {nx}+{ny} variables through degree {d}"),
            outcome,
        );
    }
}

/// `Σ_μ (-1)^{|μ|} (s_ν/s_μ)·s_{μ'}`.
pub fn schur_identity_sum(nu: &Partition) -> SchurElement {
    let sn = SchurElement::basis(nu.clone());
    let mut out = SchurElement::zero();
    for mu in nu.subpartitions() {
        let term = sn
            .skew(&SchurElement::basis(mu.clone()))
            .multiply(&SchurElement::basis(mu.conjugate()));
        out += &term.scale(&BigInt::from(mu.sign()));
    }
    out
}

type Triple = BTreeMap<(Partition, Partition, Partition), BigInt>;

/// `(Δ⊗I)∘Δ` and `(I⊗Δ)∘Δ` as triple-tensor coefficient tables.
pub fn iterated_coproducts(lambda: &Partition) -> (Triple, Triple) {
    let delta = SchurElement::basis(lambda.clone()).coproduct();
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in delta.terms() {
        for ((a1, a2), c1) in SchurElement::basis(a.clone()).coproduct().terms() {
            *left.entry((a1.clone(), a2.clone(), b.clone())).or_default() += c * c1;
        }
        for ((b1, b2), c2) in SchurElement::basis(b.clone()).coproduct().terms() {
            *right.entry((a.clone(), b1.clone(), b2.clone())).or_default() += c * c2;
        }
    }
    left.retain(|_, c| *c != BigInt::from(0));
    right.retain(|_, c| *c != BigInt::from(0));
    (left, right)
}

fn hopf(report: &mut Report, max_degree: usize) {
    let s = |q: &Partition| SchurElement::basis(q.clone());
    let upto = |w: usize| partitions_up_to(w.min(max_degree));

    let bound = 7.min(max_degree);
    report.record(
        format!("antipode identity on s_λ, |λ| ≤ {bound}"),
        first_failure(upto(7), |q| {
            let unit = SchurElement::one().scale(&s(q).counit());
            let delta = s(q).coproduct();
            delta.fold_product(SchurElement::antipode, Clone::clone) == unit
                && delta.fold_product(Clone::clone, SchurElement::antipode) == unit
        }),
    );
    report.record(
        format!("counitarity on s_λ, |λ| ≤ {}", 8.min(max_degree)),
        first_failure(upto(8), |q| {
            let delta = s(q).coproduct();
            let counit = |x: &SchurElement| SchurElement::one().scale(&x.counit());
            delta.fold_product(counit, Clone::clone) == s(q) && delta.fold_product(Clone::clone, counit) == s(q)
        }),
    );
    report.record(
        format!("coassociativity and cocommutativity, |λ| ≤ {}", 6.min(max_degree)),
        first_failure(upto(6), |q| {
            let (l, r) = iterated_coproducts(q);
            let delta = s(q).coproduct();
            l == r && delta == delta.swap()
        }),
    );
    let pairs_bound = 6.min(max_degree);
    let pairs: Vec<(Partition, Partition)> = upto(6)
        .into_iter()
        .flat_map(|a| {
            partitions_up_to(pairs_bound - a.weight())
                .into_iter()
                .map(move |b| (a.clone(), b))
        })
        .collect();
    report.record(
        format!("Δ(XY) = Δ(X)Δ(Y), total weight ≤ {pairs_bound}"),
        first_failure(pairs.iter(), |(a, b)| {
            s(a).multiply(&s(b)).coproduct() == s(a).coproduct().tensor_multiply(&s(b).coproduct())
        }),
    );
    report.record(
        format!("Σ_μ (-1)^|μ| s_ν/μ s_μ' = δ_ν0, |ν| ≤ {}", 8.min(max_degree)),
        first_failure(upto(8), |nu| {
            let expected = if nu.is_empty() {
                SchurElement::one()
            } else {
                SchurElement::zero()
            };
            schur_identity_sum(nu) == expected
        }),
    );
    report.record(
        format!("(λ/μ)/ν = λ/(μν), |λ| ≤ {}", 7.min(max_degree)),
        first_failure(upto(7), |lambda| {
            lambda.subpartitions().iter().all(|mu| {
                partitions_up_to(lambda.weight() - mu.weight())
                    .iter()
                    .all(|nu| s(lambda).skew(&s(mu)).skew(&s(nu)) == s(lambda).skew(&s(mu).multiply(&s(nu))))
            })
        }),
    );
    report.record(
        format!("(μν)/ρ = Σ c^ρ_στ (μ/σ)(ν/τ), |μ|+|ν| ≤ {pairs_bound}"),
        first_failure(pairs.iter(), |(mu, nu)| {
            partitions_up_to(mu.weight() + nu.weight()).iter().all(|rho| {
                let lhs = s(mu).multiply(&s(nu)).skew(&s(rho));
                let mut rhs = SchurElement::zero();
                for ((sigma, tau), c) in s(rho).coproduct().terms() {
                    rhs += &s(mu).skew(&s(sigma)).multiply(&s(nu).skew(&s(tau))).scale(c);
                }
                lhs == rhs
            })
        }),
    );
    report.record(
        format!(
            "duality (s_ν|s_λ s_μ) = (s_ν/λ|s_μ) = Δ(s_ν)_λμ, |ν| ≤ {}",
            7.min(max_degree)
        ),
        first_failure(upto(7), |nu| {
            let delta: TensorElement = s(nu).coproduct();
            nu.subpartitions().iter().all(|lambda| {
                partitions_of(nu.weight() - lambda.weight()).iter().all(|mu| {
                    let a = s(nu).scalar_product(&s(lambda).multiply(&s(mu)));
                    a == s(nu).skew(&s(lambda)).scalar_product(&s(mu)) && a == delta.coefficient(lambda, mu)
                })
            })
        }),
    );

    let char_bound = 5.min(max_degree);
    for basis in [BasisLabel::O, BasisLabel::Sp] {
        let elements: Vec<CharElement> = upto(5)
            .into_iter()
            .map(|q| CharElement::basis_element(basis, q))
            .collect();
        report.record(
            format!("Char{basis} counitarity, |λ| ≤ {char_bound}"),
            first_failure(elements.iter(), |x| {
                left_counitarity_defect(x).is_zero() && right_counitarity_defect(x).is_zero()
            }),
        );
        report.record(
            format!("Char{basis} antipode identity, |λ| ≤ {char_bound}"),
            first_failure(elements.iter(), |x| {
                left_antipode_defect(x).is_zero() && right_antipode_defect(x).is_zero()
            }),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let report = run(Suite::Tables, 8);
        assert!(report.passed(), "{report}");
        let report = run(Suite::Series, 4);
        assert!(report.passed(), "{report}");
        let report = run(Suite::Hopf, 3);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn identity_sum_vanishes_for_two() {
        assert!(schur_identity_sum(&part("2")).is_zero());
        assert_eq!(schur_identity_sum(&Partition::empty()), SchurElement::one());
    }
}
