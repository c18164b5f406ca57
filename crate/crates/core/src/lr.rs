//! Littlewood–Richardson coefficients.
//!
//! All three entry points run the same search: fill the skew shape
//! `outer / inner` row by row with weakly increasing entries, column-strict,
//! such that the reverse reading word (rows right to left, top to bottom) is a
//! lattice word. Fixing the content gives products, fixing the outer shape
//! gives skews, fixing both gives a single coefficient.
//!
//! Expansions are memoized in a process-wide LRU cache whose capacity is read
//! from `SCHURHOPF_LR_CACHE` (entries; `0` disables caching).

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex, OnceLock};

use lru::LruCache;

use crate::partition::{is_horizontal_strip, is_vertical_strip, Partition};

/// Environment variable holding the LR cache capacity.
pub const CACHE_ENV: &str = "SCHURHOPF_LR_CACHE";
pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 16;

/// A coefficient expansion: partitions in display order with positive counts.
pub type Expansion = Arc<Vec<(Partition, u64)>>;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Product(Partition, Partition),
    Skew(Partition, Partition),
}

struct Cache {
    entries: Option<Mutex<LruCache<Key, Expansion>>>,
}

impl Cache {
    fn from_env() -> Self {
        let capacity = std::env::var(CACHE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(DEFAULT_CACHE_ENTRIES);
        Cache {
            entries: NonZeroUsize::new(capacity).map(|c| Mutex::new(LruCache::new(c))),
        }
    }

    fn get_or_compute(&self, key: Key, compute: impl FnOnce() -> Vec<(Partition, u64)>) -> Expansion {
        let Some(entries) = &self.entries else {
            return Arc::new(compute());
        };
        if let Some(hit) = entries.lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        // computed outside the lock; a racing thread may duplicate the work
        let value = Arc::new(compute());
        entries.lock().unwrap().put(key, Arc::clone(&value));
        value
    }
}

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Cache::from_env)
}

/// Drops every memoized expansion.
pub fn clear_cache() {
    if let Some(entries) = &cache().entries {
        entries.lock().unwrap().clear();
    }
}

/// The coefficient `c^ν_{λμ}` of `s_ν` in `s_λ · s_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // the content is the shorter of the two, which keeps the search narrow
    let (inner, content) = if mu.length() <= lambda.length() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    if content.length() <= 1 {
        return u64::from(is_horizontal_strip(nu, inner));
    }
    if content.part(0) == 1 {
        return u64::from(is_vertical_strip(nu, inner));
    }
    let mut total = 0u64;
    Search::new(inner, Some(nu), Some(content)).run(&mut |_, _| total += 1);
    total
}

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`.
pub fn lr_expand_product(lambda: &Partition, mu: &Partition) -> Expansion {
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    cache().get_or_compute(Key::Product(a.clone(), b.clone()), || compute_product(lambda, mu))
}

/// `s_{ν/λ} = Σ_μ c^ν_{λμ} s_μ`; empty when `λ ⊄ ν`.
pub fn lr_expand_skew(nu: &Partition, lambda: &Partition) -> Expansion {
    if !nu.contains(lambda) {
        return Arc::new(Vec::new());
    }
    if lambda.is_empty() {
        return Arc::new(vec![(nu.clone(), 1)]);
    }
    cache().get_or_compute(Key::Skew(nu.clone(), lambda.clone()), || {
        let mut table = BTreeMap::new();
        Search::new(lambda, Some(nu), None).run(&mut |_, content| {
            *table.entry(Partition::from_rows(content.to_vec())).or_insert(0u64) += 1;
        });
        table.into_iter().collect()
    })
}

fn compute_product(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let (inner, content) = if mu.length() <= lambda.length() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut table = BTreeMap::new();
    if content.length() <= 1 {
        horizontal_strips(inner, content.weight() as u32, &mut |nu| {
            table.insert(nu, 1);
        });
    } else if content.part(0) == 1 {
        vertical_strips(inner, content.weight() as u32, &mut |nu| {
            table.insert(nu, 1);
        });
    } else {
        Search::new(inner, None, Some(content)).run(&mut |shape, _| {
            *table.entry(Partition::from_rows(shape.to_vec())).or_insert(0u64) += 1;
        });
    }
    table.into_iter().collect()
}

/// Pieri rule for `s_λ · s_(m)`.
fn horizontal_strips(inner: &Partition, size: u32, emit: &mut impl FnMut(Partition)) {
    let rows = inner.length() + 1;
    let mut shape = vec![0u32; rows];
    fn rec(inner: &Partition, r: usize, left: u32, shape: &mut Vec<u32>, emit: &mut impl FnMut(Partition)) {
        if r == shape.len() {
            if left == 0 {
                emit(Partition::from_rows(shape.clone()));
            }
            return;
        }
        let base = inner.part(r);
        let room = if r == 0 {
            left
        } else {
            (inner.part(r - 1) - base).min(left)
        };
        for add in 0..=room {
            shape[r] = base + add;
            rec(inner, r + 1, left - add, shape, emit);
        }
    }
    rec(inner, 0, size, &mut shape, emit);
}

/// Pieri rule for `s_λ · s_(1^m)`.
fn vertical_strips(inner: &Partition, size: u32, emit: &mut impl FnMut(Partition)) {
    let rows = inner.length() + size as usize;
    let mut shape = vec![0u32; rows];
    fn rec(inner: &Partition, r: usize, left: u32, shape: &mut Vec<u32>, emit: &mut impl FnMut(Partition)) {
        if left == 0 {
            let mut full = shape[..r].to_vec();
            full.extend((r..shape.len()).map(|i| inner.part(i)));
            emit(Partition::from_rows(full));
            return;
        }
        if r == shape.len() {
            return;
        }
        let base = inner.part(r);
        for add in 0..=1u32 {
            let row = base + add;
            if add > left || (r > 0 && row > shape[r - 1]) {
                continue;
            }
            shape[r] = row;
            rec(inner, r + 1, left - add, shape, emit);
        }
    }
    rec(inner, 0, size, &mut shape, emit);
}

/// Enumerates LR fillings of `outer / inner`.
struct Search<'a> {
    inner: &'a Partition,
    outer: Option<&'a Partition>,
    content: Option<&'a Partition>,
    rows: usize,
    values: usize,
    /// `prefix[r][k]` = number of entries `≤ k` placed in row `r`.
    prefix: Vec<Vec<u32>>,
    /// Entries of each value placed so far, index `k - 1`.
    counts: Vec<u32>,
    shape: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(inner: &'a Partition, outer: Option<&'a Partition>, content: Option<&'a Partition>) -> Self {
        let rows = match (outer, content) {
            (Some(nu), _) => nu.length(),
            (None, Some(mu)) => inner.length() + mu.length(),
            (None, None) => unreachable!("either the outer shape or the content must be fixed"),
        };
        let values = content.map_or(rows, Partition::length);
        Search {
            inner,
            outer,
            content,
            rows,
            values,
            prefix: vec![vec![0; values + 1]; rows],
            counts: vec![0; values],
            shape: vec![0; rows],
        }
    }

    fn run(&mut self, emit: &mut impl FnMut(&[u32], &[u32])) {
        self.fill(0, 1, emit);
    }

    fn fill(&mut self, r: usize, k: usize, emit: &mut impl FnMut(&[u32], &[u32])) {
        if r == self.rows {
            if let Some(mu) = self.content {
                if (0..self.values).any(|i| self.counts[i] != mu.part(i)) {
                    return;
                }
            }
            emit(&self.shape, &self.counts);
            return;
        }
        let row_values = (r + 1).min(self.values);
        let inner_r = self.inner.part(r);
        if k > row_values {
            let total = self.prefix[r][row_values];
            if let Some(nu) = self.outer {
                if inner_r + total != nu.part(r) {
                    return;
                }
            }
            for j in row_values + 1..=self.values {
                self.prefix[r][j] = total;
            }
            self.shape[r] = inner_r + total;
            if self.outer.is_none() && total == 0 && self.content_exhausted() {
                // nothing more can be placed; remaining rows keep the inner shape
                for i in r + 1..self.rows {
                    self.shape[i] = self.inner.part(i);
                }
                self.fill(self.rows, 1, emit);
                return;
            }
            self.fill(r + 1, 1, emit);
            return;
        }

        let base = self.prefix[r][k - 1];
        let mut hi = u32::MAX;
        if let Some(mu) = self.content {
            hi = hi.min(mu.part(k - 1) - self.counts[k - 1]);
        }
        if k >= 2 {
            // lattice: k's in this row are read before its (k-1)'s
            let placed_here = self.prefix[r][k - 1] - self.prefix[r][k - 2];
            let before = self.counts[k - 2] - placed_here;
            hi = hi.min(before - self.counts[k - 1]);
        }
        if r >= 1 {
            let limit = self.inner.part(r - 1) + self.prefix[r - 1][k - 1];
            hi = hi.min(limit - inner_r - base);
        }
        if let Some(nu) = self.outer {
            hi = hi.min(nu.part(r) - inner_r - base);
        }
        debug_assert!(hi != u32::MAX);
        for n in 0..=hi {
            self.prefix[r][k] = base + n;
            self.counts[k - 1] += n;
            self.fill(r, k + 1, emit);
            self.counts[k - 1] -= n;
        }
    }

    fn content_exhausted(&self) -> bool {
        match self.content {
            Some(mu) => (0..self.values).all(|i| self.counts[i] == mu.part(i)),
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, partitions_up_to};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn table(e: &Expansion) -> Vec<(Vec<u32>, u64)> {
        e.iter().map(|(q, c)| (q.parts().to_vec(), *c)).collect()
    }

    /// Brute-force oracle: every filling of `ν/λ` with entries `1..=ℓ(μ)`,
    /// checked for semistandardness, content and the lattice property.
    fn brute_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !nu.contains(lambda) || lambda.weight() + mu.weight() != nu.weight() {
            return 0;
        }
        let cells: Vec<(usize, usize)> = (0..nu.length())
            .flat_map(|r| (lambda.part(r) as usize..nu.part(r) as usize).map(move |c| (r, c)))
            .collect();
        let m = mu.length().max(1) as u32;
        let mut filling = vec![0u32; cells.len()];
        let mut count = 0;
        loop {
            let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| filling[i]);
            let ok_rows = cells
                .iter()
                .enumerate()
                .all(|(i, &(r, c))| c == 0 || at(r, c - 1).is_none_or(|left| left <= filling[i]));
            let ok_cols = cells
                .iter()
                .enumerate()
                .all(|(i, &(r, c))| r == 0 || at(r - 1, c).is_none_or(|up| up < filling[i]));
            if ok_rows && ok_cols {
                let mut seen = vec![0u32; m as usize + 2];
                let mut lattice = true;
                for r in 0..nu.length() {
                    for c in (lambda.part(r) as usize..nu.part(r) as usize).rev() {
                        let v = at(r, c).unwrap() as usize;
                        seen[v] += 1;
                        if v > 1 && seen[v] > seen[v - 1] {
                            lattice = false;
                        }
                    }
                }
                let content_ok = (1..=m as usize).all(|v| seen[v] == mu.part(v - 1));
                if lattice && content_ok {
                    count += 1;
                }
            }
            // odometer over fillings
            let mut i = 0;
            loop {
                if i == filling.len() {
                    return count;
                }
                filling[i] += 1;
                if filling[i] <= m {
                    break;
                }
                filling[i] = 1;
                i += 1;
            }
            if filling.contains(&0) {
                filling.iter_mut().for_each(|v| *v = (*v).max(1));
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        for l in partitions_up_to(5) {
            assert_eq!(lr_coefficient(&l, &Partition::empty(), &l), 1);
        }
        assert_eq!(brute_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(brute_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn coefficients_match_brute_force() {
        for n in 0..=6 {
            for nu in partitions_of(n) {
                for lambda in nu.subpartitions() {
                    for mu in partitions_of(n - lambda.weight()) {
                        assert_eq!(
                            lr_coefficient(&lambda, &mu, &nu),
                            brute_coefficient(&lambda, &mu, &nu),
                            "c^{nu:?}_{lambda:?},{mu:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let gl = lr_expand_product(&p(&[2, 2]), &p(&[2, 1]));
        assert_eq!(
            table(&gl),
            vec![
                (vec![4, 3], 1),
                (vec![4, 2, 1], 1),
                (vec![3, 3, 1], 1),
                (vec![3, 2, 2], 1),
                (vec![3, 2, 1, 1], 1),
                (vec![2, 2, 2, 1], 1),
            ]
        );
        assert_eq!(
            table(&lr_expand_product(&p(&[1]), &p(&[1]))),
            vec![(vec![2], 1), (vec![1, 1], 1)]
        );
        let mu = p(&[3, 1, 1]);
        assert_eq!(
            table(&lr_expand_product(&Partition::empty(), &mu)),
            vec![(vec![3, 1, 1], 1)]
        );
    }

    #[test]
    fn skew_examples() {
        assert_eq!(
            table(&lr_expand_skew(&p(&[2, 1]), &p(&[1]))),
            vec![(vec![2], 1), (vec![1, 1], 1)]
        );
        assert_eq!(
            table(&lr_expand_skew(&p(&[3, 2]), &Partition::empty())),
            vec![(vec![3, 2], 1)]
        );
        assert!(lr_expand_skew(&p(&[1]), &p(&[2])).is_empty());
        assert_eq!(table(&lr_expand_skew(&p(&[2]), &p(&[2]))), vec![(vec![], 1)]);
    }

    #[test]
    fn expansions_agree_with_coefficients() {
        for a in partitions_up_to(4) {
            for b in partitions_up_to(4) {
                let product = lr_expand_product(&a, &b);
                for nu in partitions_of(a.weight() + b.weight()) {
                    let c = product.iter().find(|(q, _)| *q == nu).map_or(0, |(_, c)| *c);
                    assert_eq!(c, lr_coefficient(&a, &b, &nu));
                    let skew = lr_expand_skew(&nu, &a);
                    let s = skew.iter().find(|(q, _)| *q == b).map_or(0, |(_, c)| *c);
                    assert_eq!(s, c);
                }
            }
        }
    }

    #[test]
    fn symmetry_and_conjugation() {
        let all = partitions_up_to(8);
        for nu in all.iter().filter(|q| q.weight() <= 8) {
            for lambda in nu.subpartitions() {
                for mu in partitions_of(nu.weight() - lambda.weight()) {
                    let c = lr_coefficient(&lambda, &mu, nu);
                    assert_eq!(c, lr_coefficient(&mu, &lambda, nu));
                    assert_eq!(c, lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
                }
            }
        }
    }

    #[test]
    fn pieri_paths_agree_with_general_search() {
        for inner in partitions_up_to(5) {
            for m in 1..=4u32 {
                let row = p(&[m]);
                let column = Partition::new(vec![1; m as usize]).unwrap();
                for content in [row, column] {
                    let mut general = BTreeMap::new();
                    Search::new(&inner, None, Some(&content)).run(&mut |shape, _| {
                        *general.entry(Partition::from_rows(shape.to_vec())).or_insert(0u64) += 1;
                    });
                    let fast: BTreeMap<_, _> = compute_product(&inner, &content).into_iter().collect();
                    assert_eq!(fast, general, "{inner:?} * {content:?}");
                }
            }
        }
    }
}
