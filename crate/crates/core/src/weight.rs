//! The restricted weight on `F_p` for a unit subgroup `E`, error patterns,
//! and enumeration of weight balls.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField, UnitSubgroup};
use crate::lattice::QuotientContext;

/// Largest radius [`enumerate_weight_ball`] accepts.
pub const MAX_BALL_RADIUS: u32 = 6;

/// `w(x)` = fewest elements of `E` summing to `x`, for every `x` in `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    subgroup: UnitSubgroup,
    weights: Vec<u32>,
    // shells[w] = elements of weight exactly w, ascending symmetric order
    shells: Vec<Vec<FieldElement>>,
}

/// Breadth-first search from 0 in the Cayley graph of `(F_p, +)` with
/// generators `E`.
pub fn build_weight_table(subgroup: &UnitSubgroup) -> WeightTable {
    let f = *subgroup.field();
    let p = f.p() as usize;
    let mut weights = vec![u32::MAX; p];
    weights[0] = 0;
    let mut queue = VecDeque::from([f.zero()]);
    while let Some(x) = queue.pop_front() {
        let w = weights[x.residue() as usize];
        for &e in subgroup.elements() {
            let y = x + e;
            let slot = &mut weights[y.residue() as usize];
            if *slot == u32::MAX {
                *slot = w + 1;
                queue.push_back(y);
            }
        }
    }
    let max = weights.iter().copied().max().unwrap_or(0) as usize;
    let mut shells = vec![Vec::new(); max + 1];
    for x in f.elements() {
        shells[weights[x.residue() as usize] as usize].push(x);
    }
    WeightTable { subgroup: subgroup.clone(), weights, shells }
}

impl WeightTable {
    pub fn new(subgroup: &UnitSubgroup) -> Self {
        build_weight_table(subgroup)
    }

    pub fn subgroup(&self) -> &UnitSubgroup {
        &self.subgroup
    }

    pub fn field(&self) -> &PrimeField {
        self.subgroup.field()
    }

    #[inline]
    pub fn weight(&self, x: FieldElement) -> u32 {
        self.weights[x.residue() as usize]
    }

    /// Weights indexed by the residue in `[0, p)`.
    #[inline]
    pub fn weights_by_residue(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.shells.len() as u32 - 1
    }

    /// Elements of weight exactly `w`.
    pub fn shell(&self, w: u32) -> &[FieldElement] {
        self.shells.get(w as usize).map_or(&[], |s| s.as_slice())
    }

    /// Additive extension to vectors.
    pub fn vector_weight(&self, v: &[FieldElement]) -> u64 {
        v.iter().map(|&x| self.weight(x) as u64).sum()
    }

    /// The 0/1/2/infinity weight `w'` (`None` is infinity): 1 on `E`, 2 on
    /// `(E + E) \ E`. Not a metric in general; only used for comparison.
    pub fn w_prime(&self, x: FieldElement) -> Option<u32> {
        if x.is_zero() {
            return Some(0);
        }
        if self.subgroup.contains(x) {
            return Some(1);
        }
        let e = self.subgroup.elements();
        e.iter().any(|&a| self.subgroup.contains(x - a)).then_some(2)
    }

    /// Number of vectors of length `n` and weight at most `radius`.
    /// Saturates at `u128::MAX`.
    pub fn ball_size(&self, n: usize, radius: u32) -> u128 {
        let r = radius as usize;
        let per_pos: Vec<u128> = (0..=r).map(|w| self.shell(w as u32).len() as u128).collect();
        let mut acc = vec![0u128; r + 1];
        acc[0] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; r + 1];
            for (i, &a) in acc.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (w, &c) in per_pos.iter().enumerate().take(r + 1 - i) {
                    next[i + w] = next[i + w].saturating_add(a.saturating_mul(c));
                }
            }
            acc = next;
        }
        acc.iter().fold(0u128, |s, &x| s.saturating_add(x))
    }

    /// Whether `w` agrees with the lattice quotient weight on all of `F_p`.
    pub fn matches_quotient_weight(&self, ctx: &QuotientContext) -> Result<bool> {
        if ctx.field() != self.field() {
            return Err(Error::KindMismatch);
        }
        Ok(self.field().elements().all(|x| self.weight(x) == ctx.quotient_weight(x)))
    }
}

/// `restricted_weight_prime`: compares the restricted weight with the
/// quotient weight of `ctx`.
pub fn matches_quotient_weight(t: &WeightTable, ctx: &QuotientContext) -> Result<bool> {
    t.matches_quotient_weight(ctx)
}

/// A sparse error vector; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ErrorPattern {
    length: usize,
    entries: Vec<(usize, FieldElement)>,
}

impl ErrorPattern {
    pub fn zero(length: usize) -> Self {
        ErrorPattern { length, entries: Vec::new() }
    }

    pub fn from_dense(v: &[FieldElement]) -> Self {
        let entries = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, &x)| (i, x)).collect();
        ErrorPattern { length: v.len(), entries }
    }

    /// Builds a pattern from `(position, value)` pairs, summing repeated
    /// positions and dropping zeros.
    pub fn from_entries(length: usize, pairs: impl IntoIterator<Item = (usize, FieldElement)>) -> Self {
        let mut pat = ErrorPattern::zero(length);
        for (i, x) in pairs {
            pat.add_at(i, x);
        }
        pat
    }

    /// Adds `x` at position `i`.
    pub fn add_at(&mut self, i: usize, x: FieldElement) {
        assert!(i < self.length, "position {i} outside length {}", self.length);
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => {
                let v = self.entries[k].1 + x;
                if v.is_zero() {
                    self.entries.remove(k);
                } else {
                    self.entries[k].1 = v;
                }
            }
            Err(k) if !x.is_zero() => self.entries.insert(k, (i, x)),
            Err(_) => {}
        }
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries by ascending position.
    pub fn entries(&self) -> &[(usize, FieldElement)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<FieldElement> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| self.entries[k].1)
    }

    pub fn to_dense(&self, f: &PrimeField) -> Vec<FieldElement> {
        let mut v = vec![f.zero(); self.length];
        for &(i, x) in &self.entries {
            v[i] = x;
        }
        v
    }

    pub fn weight(&self, t: &WeightTable) -> u64 {
        self.entries.iter().map(|&(_, x)| t.weight(x) as u64).sum()
    }
}

/// Every vector of length `n` with restricted weight at most `radius`,
/// each exactly once.
///
/// Order: by total weight, then support size, then support positions
/// (lexicographic), then per-position weights, then values.
pub fn enumerate_weight_ball(t: &WeightTable, n: usize, radius: u32) -> Result<WeightBall<'_>> {
    if radius > MAX_BALL_RADIUS {
        return Err(Error::RadiusTooLarge { radius, max: MAX_BALL_RADIUS });
    }
    Ok(WeightBall::new(t, n, radius))
}

/// Iterator behind [`enumerate_weight_ball`].
#[derive(Debug, Clone)]
pub struct WeightBall<'a> {
    table: &'a WeightTable,
    n: usize,
    radius: u32,
    total: u32,
    positions: Vec<usize>,
    parts: Vec<u32>,
    values: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> WeightBall<'a> {
    fn new(table: &'a WeightTable, n: usize, radius: u32) -> Self {
        WeightBall {
            table,
            n,
            radius,
            total: 0,
            positions: Vec::new(),
            parts: Vec::new(),
            values: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn shell_len(&self, w: u32) -> usize {
        self.table.shell(w).len()
    }

    // first composition of `total` into `s` parts with nonempty shells,
    // lexicographically
    fn first_parts(&self, s: usize, total: u32) -> Option<Vec<u32>> {
        let mut parts = vec![0; s];
        if self.fill_parts(&mut parts, 0, total) {
            Some(parts)
        } else {
            None
        }
    }

    fn fill_parts(&self, parts: &mut [u32], from: usize, remaining: u32) -> bool {
        if from == parts.len() {
            return remaining == 0;
        }
        let slots_after = (parts.len() - from - 1) as u32;
        for w in 1..=remaining.saturating_sub(slots_after) {
            if self.shell_len(w) == 0 {
                continue;
            }
            parts[from] = w;
            if self.fill_parts(parts, from + 1, remaining - w) {
                return true;
            }
        }
        false
    }

    fn next_parts(&mut self) -> bool {
        let s = self.parts.len();
        // bump position k, refill the tail with the smallest completion
        for k in (0..s).rev() {
            let prefix: u32 = self.parts[..k].iter().sum();
            let left = self.total - prefix;
            let slots_after = (s - k - 1) as u32;
            let mut w = self.parts[k] + 1;
            while w + slots_after <= left {
                if self.shell_len(w) > 0 {
                    let mut parts = self.parts.clone();
                    parts[k] = w;
                    if self.fill_parts(&mut parts, k + 1, left - w) {
                        self.parts = parts;
                        return true;
                    }
                }
                w += 1;
            }
        }
        false
    }

    fn next_positions(&mut self) -> bool {
        let s = self.positions.len();
        for k in (0..s).rev() {
            if self.positions[k] < self.n - (s - k) {
                self.positions[k] += 1;
                for j in k + 1..s {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn next_values(&mut self) -> bool {
        for k in (0..self.values.len()).rev() {
            if self.values[k] + 1 < self.shell_len(self.parts[k]) {
                self.values[k] += 1;
                for v in &mut self.values[k + 1..] {
                    *v = 0;
                }
                return true;
            }
        }
        false
    }

    // set up the first pattern with total weight >= self.total and support
    // size >= s
    fn seek(&mut self, mut s: usize) -> bool {
        loop {
            while s <= (self.total as usize).min(self.n) {
                if let Some(parts) = self.first_parts(s, self.total) {
                    self.positions = (0..s).collect();
                    self.values = vec![0; s];
                    self.parts = parts;
                    return true;
                }
                s += 1;
            }
            self.total += 1;
            if self.total > self.radius {
                return false;
            }
            s = 1;
        }
    }

    fn advance(&mut self) -> bool {
        if self.total == 0 {
            if self.radius == 0 {
                return false;
            }
            self.total = 1;
            return self.seek(1);
        }
        if self.next_values() {
            return true;
        }
        self.values.iter_mut().for_each(|v| *v = 0);
        if self.next_parts() {
            return true;
        }
        if self.next_positions() {
            let s = self.parts.len();
            self.parts = self.first_parts(s, self.total).expect("composition existed");
            return true;
        }
        let s = self.positions.len() + 1;
        self.seek(s)
    }

    fn current(&self) -> ErrorPattern {
        let entries = self
            .positions
            .iter()
            .zip(&self.parts)
            .zip(&self.values)
            .map(|((&i, &w), &k)| (i, self.table.shell(w)[k]))
            .collect();
        ErrorPattern { length: self.n, entries }
    }
}

impl Iterator for WeightBall<'_> {
    type Item = ErrorPattern;

    fn next(&mut self) -> Option<ErrorPattern> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(ErrorPattern::zero(self.n));
        }
        if self.n == 0 || !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, subgroup_of_order};
    use crate::lattice::{make_context, LatticeKind};

    fn table(p: u64, m: u32) -> WeightTable {
        let f = make_field(p).unwrap();
        build_weight_table(&subgroup_of_order(&f, m).unwrap())
    }

    #[test]
    fn bfs_weights() {
        let t = table(13, 4);
        let f = *t.field();
        assert_eq!(t.weight(f.elem(5)), 1);
        assert_eq!(t.weight(f.elem(6)), 2);
        assert_eq!(t.weight(f.elem(2)), 2);
        let lee = table(13, 2);
        for x in 0..13i64 {
            assert_eq!(lee.weight(f.elem(x)) as i64, x.min(13 - x));
        }
        let ham = table(13, 12);
        for x in f.elements() {
            assert_eq!(ham.weight(x), u32::from(!x.is_zero()));
        }
    }

    #[test]
    fn vector_weights() {
        let t = table(13, 4);
        let f = *t.field();
        assert_eq!(t.vector_weight(&[f.zero(); 4]), 0);
        assert_eq!(t.vector_weight(&[f.elem(1), f.elem(-5), f.zero()]), 2);
        assert_eq!(t.vector_weight(&[f.elem(2), f.elem(6)]), 4);
    }

    #[test]
    fn small_balls() {
        let t = table(13, 4);
        assert_eq!(enumerate_weight_ball(&t, 3, 0).unwrap().count(), 1);
        assert_eq!(enumerate_weight_ball(&t, 3, 1).unwrap().count(), 13);
        let shells = t.field().elements().filter(|&x| t.weight(x) <= 2).count();
        assert_eq!(enumerate_weight_ball(&t, 1, 2).unwrap().count(), shells);
        assert!(matches!(enumerate_weight_ball(&t, 3, 7), Err(Error::RadiusTooLarge { radius: 7, .. })));
    }

    #[test]
    fn ball_emits_each_vector_once_and_in_weight_order() {
        let t = table(7, 2);
        let f = *t.field();
        let ball: Vec<_> = enumerate_weight_ball(&t, 4, 3).unwrap().collect();
        let mut seen = std::collections::HashSet::new();
        let mut last = 0;
        for e in &ball {
            let w = e.weight(&t);
            assert!(w <= 3 && w >= last);
            last = w;
            assert!(seen.insert(e.to_dense(&f)));
        }
        assert_eq!(ball.len() as u128, t.ball_size(4, 3));
    }

    #[test]
    fn restricted_weight_equals_quotient_weight() {
        let c13 = make_context(13, LatticeKind::Gaussian).unwrap();
        assert!(table(13, 4).matches_quotient_weight(&c13).unwrap());
        assert!(!table(13, 2).matches_quotient_weight(&c13).unwrap());
        let c19 = make_context(19, LatticeKind::Eisenstein).unwrap();
        assert!(table(19, 6).matches_quotient_weight(&c19).unwrap());
        assert_eq!(table(19, 6).matches_quotient_weight(&c13), Err(Error::KindMismatch));
    }

    #[test]
    fn pattern_bookkeeping() {
        let f = make_field(13).unwrap();
        let mut e = ErrorPattern::zero(5);
        e.add_at(3, f.elem(1));
        e.add_at(1, f.elem(5));
        e.add_at(3, f.elem(-1));
        assert_eq!(e.entries(), &[(1, f.elem(5))]);
        assert_eq!(e.get(1), Some(f.elem(5)));
        assert_eq!(ErrorPattern::from_dense(&e.to_dense(&f)), e);
    }
}
