//! Minimum-distance and perfectness verification.
//!
//! Two search strategies certify distance claims: full enumeration of the
//! codewords (exact distance, feasible when `p^k` is small) and a
//! bounded-weight search proving that no nonzero vector of weight below a
//! bound lies in `ker H` (feasible when the weight ball is small). Both are
//! split into partitions so that callers can fan them out over threads;
//! merging partials in any order gives the same report.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{pow_saturating, LinearCode, MAX_CODEWORDS};
use crate::decode::MAX_TABLE;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::weight::{enumerate_weight_ball, ErrorPattern};

/// Largest bound accepted by [`min_distance_bounded`].
pub const MAX_BOUND: u32 = 6;

/// Bounded searches refuse balls larger than this.
pub const MAX_BALL_SEARCH: u128 = 20_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    FullEnumeration,
    BoundedWeight,
    SyndromeInjectivity,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::FullEnumeration => "full_enumeration",
            Method::BoundedWeight => "bounded_weight",
            Method::SyndromeInjectivity => "syndrome_injectivity",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub code_id: String,
    pub method: Method,
    /// The distance the search tried to certify.
    pub bound_checked: u32,
    /// Exact distance when `exact`, otherwise a certified lower bound.
    pub result: u32,
    pub exact: bool,
    /// A minimum-weight nonzero codeword, when one was found.
    pub witness: Option<Vec<FieldElement>>,
    /// Wall-clock seconds; set by callers that time the search.
    pub elapsed: f64,
}

impl DistanceReport {
    /// Whether the distance is at least `bound_checked`.
    pub fn certified(&self) -> bool {
        self.result >= self.bound_checked
    }
}

/// Best candidate of one partition: `(weight, codeword residues)`.
///
/// Ties between equal weights go to the lexicographically smallest residue
/// vector, which makes the merge independent of partitioning.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partial {
    pub best: Option<(u32, Vec<u32>)>,
}

impl Partial {
    fn offer(&mut self, weight: u32, word: &[u32]) {
        let better = match &self.best {
            None => true,
            Some((w, c)) => (weight, word) < (*w, c.as_slice()),
        };
        if better {
            self.best = Some((weight, word.to_vec()));
        }
    }

    pub fn merge(mut self, other: Partial) -> Partial {
        if let Some((w, c)) = other.best {
            self.offer(w, &c);
        }
        self
    }
}

// column j times each field value, as residues: contrib[j][x][row]
fn contributions(code: &LinearCode) -> Vec<Vec<Vec<u32>>> {
    let f = *code.field();
    (0..code.len())
        .map(|j| {
            let col = code.column(j);
            (0..f.p())
                .map(|x| {
                    let x = f.from_residue(x);
                    col.iter().map(|&h| (h * x).residue()).collect()
                })
                .collect()
        })
        .collect()
}

fn residues(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|x| x.residue()).collect()
}

/// Exact minimum distance over the codewords whose top message digit lies
/// in partition `part` of `parts`.
pub fn min_distance_full_partition(code: &LinearCode, part: usize, parts: usize) -> Result<Partial> {
    let size = code.codeword_count();
    if size > MAX_CODEWORDS {
        return Err(Error::SpaceTooLarge { size, max: MAX_CODEWORDS });
    }
    let mut partial = Partial::default();
    let k = code.dimension();
    if k == 0 {
        return Ok(partial);
    }
    let p = code.field().p();
    let weights = code.metric().weights_by_residue();
    let basis: Vec<Vec<u32>> = code.kernel_basis().iter().map(|b| residues(b)).collect();
    let n = code.len();
    let top = k - 1;
    let add = |c: &mut [u32], b: &[u32]| {
        for (x, &y) in c.iter_mut().zip(b) {
            *x += y;
            if *x >= p {
                *x -= p;
            }
        }
    };

    for lead in (0..p).filter(|v| (*v as usize) % parts == part) {
        let mut c = vec![0u32; n];
        for _ in 0..lead {
            add(&mut c, &basis[top]);
        }
        let mut digits = vec![0u32; top];
        loop {
            if lead != 0 || digits.iter().any(|&d| d != 0) {
                let w: u32 = c.iter().map(|&x| weights[x as usize]).sum();
                let better = partial.best.as_ref().is_none_or(|(bw, bc)| (w, c.as_slice()) < (*bw, bc.as_slice()));
                if better {
                    partial.best = Some((w, c.clone()));
                }
            }
            // odometer over the lower digits
            let mut j = 0;
            while j < top {
                add(&mut c, &basis[j]);
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
            if j == top {
                break;
            }
        }
    }
    Ok(partial)
}

fn full_report(code: &LinearCode, partial: Partial) -> DistanceReport {
    let f = *code.field();
    let (result, exact, witness) = match partial.best {
        Some((w, c)) => (w, true, Some(c.iter().map(|&x| f.from_residue(x)).collect())),
        // no nonzero codeword: anything above the largest possible weight
        None => (code.len() as u32 * code.metric().max_weight() + 1, false, None),
    };
    DistanceReport {
        code_id: code.id(),
        method: Method::FullEnumeration,
        bound_checked: code.guaranteed_distance(),
        result,
        exact,
        witness,
        elapsed: 0.0,
    }
}

/// Merges partials from [`min_distance_full_partition`].
pub fn full_report_from(code: &LinearCode, partials: impl IntoIterator<Item = Partial>) -> DistanceReport {
    let merged = partials.into_iter().fold(Partial::default(), Partial::merge);
    full_report(code, merged)
}

/// Exact minimum restricted weight over all nonzero codewords.
pub fn min_distance_full(code: &LinearCode) -> Result<DistanceReport> {
    Ok(full_report(code, min_distance_full_partition(code, 0, 1)?))
}

fn check_bound(code: &LinearCode, bound: u32) -> Result<()> {
    if bound > MAX_BOUND {
        return Err(Error::RadiusTooLarge { radius: bound.saturating_sub(1), max: MAX_BOUND - 1 });
    }
    let size = code.metric().ball_size(code.len(), bound.saturating_sub(1));
    if size > MAX_BALL_SEARCH {
        return Err(Error::SpaceTooLarge { size, max: MAX_BALL_SEARCH });
    }
    Ok(())
}

struct BallSearch<'a> {
    n: usize,
    p: u32,
    rows: usize,
    contrib: Vec<Vec<Vec<u32>>>,
    shells: Vec<Vec<u32>>,
    best: &'a mut Partial,
    // support as (position, residue)
    support: Vec<(usize, u32)>,
    // partial syndromes, one slot of `rows` entries per depth
    stack: Vec<u32>,
}

impl BallSearch<'_> {
    fn record(&mut self, weight: u32) {
        let mut word = vec![0u32; self.n];
        for &(j, x) in &self.support {
            word[j] = x;
        }
        self.best.offer(weight, &word);
    }

    fn limit(&self, budget: u32) -> u32 {
        match &self.best.best {
            Some((w, _)) => budget.min(*w),
            None => budget,
        }
    }

    fn place(&mut self, j: usize, used: u32, budget: u32) {
        let depth = self.support.len();
        let (cur, next) = (depth * self.rows, (depth + 1) * self.rows);
        for w in 1..=self.limit(budget).saturating_sub(used) {
            for k in 0..self.shells[w as usize].len() {
                let x = self.shells[w as usize][k];
                let add = &self.contrib[j][x as usize];
                let mut zero = true;
                for r in 0..self.rows {
                    let mut s = self.stack[cur + r] + add[r];
                    if s >= self.p {
                        s -= self.p;
                    }
                    self.stack[next + r] = s;
                    zero &= s == 0;
                }
                self.support.push((j, x));
                if zero {
                    self.record(used + w);
                } else if used + w < self.limit(budget) {
                    for i in j + 1..self.n {
                        self.place(i, used + w, budget);
                    }
                }
                self.support.pop();
            }
        }
    }
}

/// Searches nonzero vectors of weight below `bound` whose leading support
/// position lies in partition `part` of `parts`, for members of `ker H`.
pub fn min_distance_bounded_partition(code: &LinearCode, bound: u32, part: usize, parts: usize) -> Result<Partial> {
    check_bound(code, bound)?;
    let mut partial = Partial::default();
    if bound <= 1 {
        return Ok(partial);
    }
    let radius = bound - 1;
    let shells = (0..=radius).map(|w| code.metric().shell(w).iter().map(|x| x.residue()).collect()).collect();
    let mut search = BallSearch {
        n: code.len(),
        p: code.field().p(),
        rows: code.row_count(),
        contrib: contributions(code),
        shells,
        best: &mut partial,
        support: Vec::new(),
        stack: vec![0u32; (radius as usize + 1) * code.row_count()],
    };
    for j in (0..code.len()).filter(|j| j % parts == part) {
        search.place(j, 0, radius);
    }
    Ok(partial)
}

/// Merges partials from [`min_distance_bounded_partition`].
pub fn bounded_report_from(
    code: &LinearCode,
    bound: u32,
    partials: impl IntoIterator<Item = Partial>,
) -> DistanceReport {
    let f = *code.field();
    let merged = partials.into_iter().fold(Partial::default(), Partial::merge);
    let (result, exact, witness) = match merged.best {
        // everything lighter was searched, so the hit is the distance
        Some((w, c)) => (w, true, Some(c.iter().map(|&x| f.from_residue(x)).collect())),
        None => (bound, false, None),
    };
    DistanceReport {
        code_id: code.id(),
        method: Method::BoundedWeight,
        bound_checked: bound,
        result,
        exact,
        witness,
        elapsed: 0.0,
    }
}

/// Certifies `d >= bound`, or returns a lightest codeword as witness.
pub fn min_distance_bounded(code: &LinearCode, bound: u32) -> Result<DistanceReport> {
    let partial = min_distance_bounded_partition(code, bound, 0, 1)?;
    Ok(bounded_report_from(code, bound, [partial]))
}

/// Picks full enumeration when `p^k` is within limits and no larger than
/// the weight ball below `bound`, bounded search otherwise.
pub fn choose_method(code: &LinearCode, bound: u32) -> Result<Method> {
    let words = code.codeword_count();
    let ball = code.metric().ball_size(code.len(), bound.saturating_sub(1));
    let bounded_ok = bound <= MAX_BOUND && ball <= MAX_BALL_SEARCH;
    if words <= MAX_CODEWORDS && (!bounded_ok || words <= ball) {
        Ok(Method::FullEnumeration)
    } else if bounded_ok {
        Ok(Method::BoundedWeight)
    } else if bound > MAX_BOUND {
        Err(Error::RadiusTooLarge { radius: bound - 1, max: MAX_BOUND - 1 })
    } else {
        Err(Error::SpaceTooLarge { size: words.min(ball), max: MAX_CODEWORDS })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub t: u32,
    pub injective: bool,
    /// Two distinct patterns of weight at most `t` with equal syndromes.
    pub collision: Option<(ErrorPattern, ErrorPattern)>,
}

/// Whether the syndrome map is injective on the ball of radius `t`, which
/// holds exactly when `d > 2t`.
pub fn syndrome_injectivity(code: &LinearCode, t: u32) -> Result<InjectivityReport> {
    let size = code.metric().ball_size(code.len(), t);
    if size > MAX_TABLE {
        return Err(Error::SpaceTooLarge { size, max: MAX_TABLE });
    }
    let mut seen: BTreeMap<Vec<u32>, ErrorPattern> = BTreeMap::new();
    for e in enumerate_weight_ball(code.metric(), code.len(), t)? {
        let key = residues(code.pattern_syndrome(&e).values());
        if let Some(prev) = seen.get(&key) {
            return Ok(InjectivityReport { t, injective: false, collision: Some((prev.clone(), e)) });
        }
        seen.insert(key, e);
    }
    Ok(InjectivityReport { t, injective: true, collision: None })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectReport {
    pub t: u32,
    /// `|B_t|`.
    pub ball_size: u128,
    /// `log_p |C| = n - rank(H)`.
    pub dimension: usize,
    pub length: usize,
    pub disjoint: bool,
    pub collision: Option<(ErrorPattern, ErrorPattern)>,
    /// `|C| * |B_t| = p^n`, equivalently `|B_t| = p^rank`.
    pub counting_holds: bool,
}

impl PerfectReport {
    pub fn perfect(&self) -> bool {
        self.disjoint && self.counting_holds
    }
}

/// Checks that radius-`t` balls around codewords are disjoint (syndrome
/// injectivity) and cover `F_p^n` (counting).
pub fn check_perfect(code: &LinearCode, t: u32) -> Result<PerfectReport> {
    let inj = syndrome_injectivity(code, t)?;
    let ball_size = code.metric().ball_size(code.len(), t);
    let cosets = pow_saturating(code.field().p() as u128, code.rank() as u32);
    if ball_size == u128::MAX || cosets == u128::MAX {
        return Err(Error::SpaceTooLarge { size: u128::MAX, max: u128::MAX - 1 });
    }
    Ok(PerfectReport {
        t,
        ball_size,
        dimension: code.dimension(),
        length: code.len(),
        disjoint: inj.injective,
        collision: inj.collision,
        counting_holds: ball_size == cosets,
    })
}
