//! Integer partitions and the combinatorial primitives shared by every other
//! module.
//!
//! Partitions are stored without trailing zeros, so two partitions are equal
//! exactly when their stored parts are equal. Missing parts read as zero via
//! [`Partition::part`].
//!
//! The [`Ord`] instance is the display order used throughout the crate:
//! decreasing weight first, then reverse-lexicographic order among partitions
//! of equal weight. `partitions_of(4)` therefore yields
//! `4, 31, 2^2, 21^2, 1^4`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on the weight of parsed partitions.
pub const DEFAULT_WEIGHT_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The zero partition `0`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(invalid(&parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts, "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    /// Trims trailing zeros from a weakly decreasing row vector.
    pub(crate) fn from_rows(mut rows: Vec<u32>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::from_parts_unchecked(rows)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: its `i`-th part counts the parts of `self`
    /// that are at least `i`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `true` iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Frobenius coordinates `(arms, legs)` of the diagonal cells.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let rank = self
            .parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count();
        let arms = (0..rank).map(|i| self.parts[i] - 1 - i as u32).collect();
        let legs = (0..rank).map(|i| conj.parts[i] - 1 - i as u32).collect();
        (arms, legs)
    }

    /// Inverse of [`Partition::frobenius`]. Both sequences must be strictly
    /// decreasing and of equal length.
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition> {
        let strictly_decreasing = |s: &[u32]| s.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strictly_decreasing(arms) || !strictly_decreasing(legs) {
            return Err(Error::InvalidPartition {
                text: format!("({arms:?}|{legs:?})"),
                reason: "Frobenius coordinates must be strictly decreasing sequences of equal length".into(),
            });
        }
        let rank = arms.len();
        let height = legs.first().map_or(0, |&l| l as usize + 1);
        let mut rows = vec![0u32; height.max(rank)];
        for (i, row) in rows.iter_mut().enumerate() {
            if i < rank {
                *row = arms[i] + 1 + i as u32;
            } else {
                // below the Durfee square, column j reaches down to row j + legs[j]
                *row = legs.iter().enumerate().filter(|(j, &l)| *j + l as usize >= i).count() as u32;
            }
        }
        Partition::new(rows)
    }

    /// Every partition contained in `self`, in display order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rows = Vec::with_capacity(self.length());
        sub_rec(self, 0, u32::MAX, &mut rows, &mut out);
        out.sort();
        out
    }

    /// Sign `(-1)^{|λ|}`.
    pub fn sign(&self) -> i32 {
        if self.weight().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Exponent-form rendering (`2^2 1^2`, `421`, `0`). Falls back to a comma
    /// list when a part has more than one digit.
    pub fn to_exponent_form(&self) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        if self.parts.iter().any(|&p| p >= 10) {
            return self.to_comma_form();
        }
        let mut out = String::new();
        let mut i = 0;
        let mut after_exponent = false;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if after_exponent {
                out.push(' ');
            }
            out.push_str(&p.to_string());
            after_exponent = run > 1;
            if after_exponent {
                out.push('^');
                out.push_str(&run.to_string());
            }
            i += run;
        }
        out
    }

    /// Comma list; a single part gets a trailing comma (`10,`) so that it is
    /// not read back in exponent form.
    pub fn to_comma_form(&self) -> String {
        match self.parts.as_slice() {
            [] => "0".to_string(),
            [single] => format!("{single},"),
            parts => parts.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
        }
    }
}

fn sub_rec(outer: &Partition, i: usize, cap: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == outer.length() {
        out.push(Partition::from_rows(rows.clone()));
        return;
    }
    let hi = outer.parts[i].min(cap);
    for p in 0..=hi {
        rows.push(p);
        if p == 0 {
            // all remaining rows are forced to zero
            out.push(Partition::from_rows(rows.clone()));
        } else {
            sub_rec(outer, i + 1, p, rows, out);
        }
        rows.pop();
    }
}

fn invalid(parts: &[u32], reason: &str) -> Error {
    Error::InvalidPartition {
        text: format!("{parts:?}"),
        reason: reason.to_string(),
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exponent_form())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        )
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Parses either a comma list (`4,2,1`) or exponent form (`2^2 1^2`, `21`).
///
/// In exponent form every part is a single digit, optionally followed by
/// `^e`; groups may be separated by whitespace, which is required after an
/// exponent. `0` and the empty string denote the zero partition. Surrounding
/// brackets of any of the kinds `(){}[]⟨⟩<>` are ignored.
pub fn parse_partition(text: &str) -> Result<Partition> {
    parse_partition_with_limit(text, DEFAULT_WEIGHT_LIMIT)
}

pub fn parse_partition_with_limit(text: &str, limit: usize) -> Result<Partition> {
    let err = |reason: &str| Error::InvalidPartition {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text
        .trim()
        .trim_start_matches(['(', '{', '[', '<', '⟨'])
        .trim_end_matches([')', '}', ']', '>', '⟩'])
        .trim();
    let parts: Vec<u32> = if trimmed.is_empty() || trimmed == "0" {
        Vec::new()
    } else if trimmed.contains(',') {
        trimmed
            .strip_suffix(',')
            .unwrap_or(trimmed)
            .split(',')
            .map(|item| item.trim().parse::<u32>().map_err(|_| err("expected an integer part")))
            .collect::<Result<_>>()?
    } else {
        parse_exponent_form(trimmed).ok_or_else(|| err("malformed exponent form"))?
    };
    if parts.contains(&0) {
        return Err(err("parts must be positive"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(err("parts must be weakly decreasing"));
    }
    let partition = Partition::from_parts_unchecked(parts);
    let weight = partition.weight();
    if weight > limit {
        return Err(Error::WeightLimit { weight, limit });
    }
    Ok(partition)
}

fn parse_exponent_form(text: &str) -> Option<Vec<u32>> {
    let mut parts = Vec::new();
    for token in text.split_whitespace() {
        let bytes = token.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if !bytes[i].is_ascii_digit() {
                return None;
            }
            let part = u32::from(bytes[i] - b'0');
            i += 1;
            let mut count = 1usize;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                count = token[start..i].parse().ok()?;
                // an exponent ends its group
                if i < bytes.len() {
                    return None;
                }
            }
            parts.extend(std::iter::repeat_n(part, count));
        }
    }
    Some(parts)
}

/// All partitions of `d` in reverse-lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    partitions_rec(d as u32, d as u32, &mut rows, &mut out);
    out
}

fn partitions_rec(remaining: u32, max: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(rows.clone()));
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        rows.push(p);
        partitions_rec(remaining - p, p, rows, out);
        rows.pop();
    }
}

/// All partitions of weight at most `d`, in display order.
pub fn partitions_up_to(d: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=d).flat_map(partitions_of).collect();
    out.sort();
    out
}

/// `true` iff `outer / inner` is a horizontal strip (no two cells in a column).
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..outer.length()).all(|i| outer.part(i) <= inner.part(i - 1))
}

/// `true` iff `outer / inner` is a vertical strip (no two cells in a row).
pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (0..outer.length()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_both_syntaxes() {
        assert_eq!(parse_partition("2^2 1^2").unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!(parse_partition("0").unwrap(), Partition::empty());
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("4,2,1").unwrap(), p(&[4, 2, 1]));
        assert_eq!(parse_partition("21^2").unwrap(), p(&[2, 1, 1]));
        assert_eq!(parse_partition("3^21").unwrap().length(), 21);
        assert!(matches!(parse_partition("3^2x"), Err(Error::InvalidPartition { .. })));
        assert_eq!(parse_partition("3^2 1").unwrap(), p(&[3, 3, 1]));
        assert_eq!(parse_partition("12,3").unwrap(), p(&[12, 3]));
        assert_eq!(parse_partition("[2^2 1^2]").unwrap(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(matches!(parse_partition("1,2"), Err(Error::InvalidPartition { .. })));
        assert!(matches!(parse_partition("2,0,1"), Err(Error::InvalidPartition { .. })));
        assert!(matches!(parse_partition("2,-1"), Err(Error::InvalidPartition { .. })));
        assert!(matches!(parse_partition("12"), Err(Error::InvalidPartition { .. })));
        assert!(matches!(parse_partition("x"), Err(Error::InvalidPartition { .. })));
        assert!(matches!(
            parse_partition_with_limit("9,9", 10),
            Err(Error::WeightLimit { weight: 18, limit: 10 })
        ));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn renders_exponent_form() {
        assert_eq!(p(&[2, 2, 1, 1]).to_string(), "2^2 1^2");
        assert_eq!(p(&[2, 1, 1]).to_string(), "21^2");
        assert_eq!(p(&[3, 3, 1]).to_string(), "3^2 1");
        assert_eq!(p(&[4, 2]).to_string(), "42");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(&[11, 2]).to_string(), "11,2");
        assert_eq!(p(&[10]).to_string(), "10,");
        assert_eq!(parse_partition("10,").unwrap(), p(&[10]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2, 1, 1]).conjugate(), p(&[4, 2]));
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 1]).contains(&p(&[2])));
        assert!(!p(&[3, 1]).contains(&p(&[1, 1, 1])));
        assert!(p(&[3, 1]).contains(&Partition::empty()));
        assert!(Partition::empty().contains(&Partition::empty()));
    }

    #[test]
    fn enumerates_partitions() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(6).len(), 11);
    }

    /// Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> Vec<u64> {
        let mut counts = vec![0i64; n + 1];
        counts[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for k in 1.. {
                let k = k as i64;
                let sign = if k % 2 == 1 { 1 } else { -1 };
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                total += sign * counts[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * counts[m - g2];
                }
            }
            counts[m] = total;
        }
        counts.into_iter().map(|c| c as u64).collect()
    }

    #[test]
    fn enumeration_matches_recurrence() {
        let counts = partition_count(20);
        for (d, &count) in counts.iter().enumerate() {
            let parts = partitions_of(d);
            assert_eq!(parts.len() as u64, count, "p({d})");
            assert!(parts.iter().all(|q| q.weight() == d));
            let mut sorted = parts.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), parts.len());
            assert!(parts.windows(2).all(|w| w[0] < w[1]), "order at d={d}");
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(p(&[3, 3]).frobenius(), (vec![2, 1], vec![1, 0]));
        assert_eq!(p(&[2]).frobenius(), (vec![1], vec![0]));
        assert_eq!(p(&[2, 1, 1]).frobenius(), (vec![1], vec![2]));
        assert_eq!(Partition::empty().frobenius(), (vec![], vec![]));
    }

    #[test]
    fn subpartitions_of_small_shape() {
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs, vec![p(&[2, 1]), p(&[2]), p(&[1, 1]), p(&[1]), Partition::empty()]);
    }

    #[test]
    fn strips() {
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[1])));
        assert!(is_horizontal_strip(&p(&[2, 2]), &p(&[2])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[1])));
        assert!(is_vertical_strip(&p(&[2, 2]), &p(&[1, 1])));
        assert!(!is_vertical_strip(&p(&[3]), &p(&[1])));
    }

    fn arb_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
        (0..=max_weight).prop_flat_map(|d| {
            let all = partitions_of(d);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_weight_preserving_involution(l in arb_partition(10)) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().weight(), l.weight());
        }

        #[test]
        fn containment_commutes_with_conjugation(l in arb_partition(8), m in arb_partition(8)) {
            prop_assert_eq!(l.contains(&m), l.conjugate().contains(&m.conjugate()));
        }

        #[test]
        fn frobenius_round_trips(l in arb_partition(14)) {
            let (arms, legs) = l.frobenius();
            prop_assert_eq!(arms.len(), legs.len());
            prop_assert_eq!(Partition::from_frobenius(&arms, &legs).unwrap(), l);
        }

        #[test]
        fn text_forms_round_trip(l in arb_partition(12)) {
            prop_assert_eq!(parse_partition(&l.to_exponent_form()).unwrap(), l.clone());
            prop_assert_eq!(parse_partition(&l.to_comma_form()).unwrap(), l);
        }
    }
}
