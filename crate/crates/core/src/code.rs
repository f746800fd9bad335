//! Linear codes given by a parity-check matrix, and the five constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{make_field, subgroup_of_order, FieldElement, PrimeField};
use crate::lattice::{make_context, Admissibility, LatticeKind, QuotientContext};
use crate::weight::{build_weight_table, ErrorPattern, WeightTable};

/// Codeword enumeration refuses spaces larger than this.
pub const MAX_CODEWORDS: u128 = 10_000_000;

/// Orbit enumeration for one-error codes refuses `p^r` above this.
pub const MAX_AMBIENT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// One representative per `E`-orbit of `F_p^r \ {0}`.
    Perfect1,
    /// Rows `1, re, im, alpha^2` over `J = A + iA`.
    Gauss2,
    /// Rows `1, re, im, alpha^2, alpha^3` over `J = A + iA`.
    Gauss3,
    /// Rows `1, phi, psi, alpha^2` over `J = A + rho A`.
    EisenGeo,
    /// Rows `1, alpha, alpha^4, alpha^7` over cube-root coset representatives.
    EisenAlg,
    /// Any other parity-check matrix.
    Custom,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Perfect1, Family::Gauss2, Family::Gauss3, Family::EisenGeo, Family::EisenAlg];

    pub fn name(self) -> &'static str {
        match self {
            Family::Perfect1 => "perfect1",
            Family::Gauss2 => "gauss2",
            Family::Gauss3 => "gauss3",
            Family::EisenGeo => "eisen-geo",
            Family::EisenAlg => "eisen-alg",
            Family::Custom => "custom",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        match s {
            "perfect1" => Some(Family::Perfect1),
            "gauss2" => Some(Family::Gauss2),
            "gauss3" => Some(Family::Gauss3),
            "eisen-geo" | "eisen_geo" => Some(Family::EisenGeo),
            "eisen-alg" | "eisen_alg" => Some(Family::EisenAlg),
            "custom" => Some(Family::Custom),
            _ => None,
        }
    }

    pub fn lattice(self) -> Option<LatticeKind> {
        match self {
            Family::Gauss2 | Family::Gauss3 => Some(LatticeKind::Gaussian),
            Family::EisenGeo | Family::EisenAlg => Some(LatticeKind::Eisenstein),
            Family::Perfect1 | Family::Custom => None,
        }
    }

    /// Distance bound of the family when `a + b` is large enough.
    pub fn distance_bound(self) -> u32 {
        match self {
            Family::Perfect1 => 3,
            Family::Gauss2 | Family::EisenGeo => 6,
            Family::Gauss3 => 8,
            // a zero-sum triple 1 + zeta + zeta^2 plus a cancelling pair gives
            // weight-5 codewords for most primes, e.g. p = 37
            Family::EisenAlg => 5,
            Family::Custom => 1,
        }
    }

    /// Smallest `a + b` for which [`Family::distance_bound`] is proven.
    pub fn required_a_plus_b(self) -> Option<u64> {
        match self {
            Family::Gauss2 => Some(7),
            Family::Gauss3 => Some(9),
            Family::EisenGeo => Some(6),
            Family::EisenAlg => Some(5),
            Family::Perfect1 | Family::Custom => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Attached when the prime is too small for the family's distance bound;
/// the guarantee then degrades to `a + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Warning {
    pub a_plus_b: u64,
    pub required: u64,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a + b = {} is below {}; guaranteed distance falls back to a + b", self.a_plus_b, self.required)
    }
}

/// `H * v^T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(pub Vec<FieldElement>);

impl Syndrome {
    pub fn values(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

/// A linear code `C = ker H` over `F_p` with its restricted-weight metric.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: PrimeField,
    family: Family,
    rows: Vec<Vec<FieldElement>>,
    labels: Option<Vec<FieldElement>>,
    guaranteed_distance: u32,
    metric: WeightTable,
    context: Option<QuotientContext>,
    value_set: Option<Vec<i64>>,
    dimension: Option<usize>,
    warning: Option<Warning>,
    rank: usize,
    kernel: Vec<Vec<FieldElement>>,
}

impl LinearCode {
    fn assemble(
        field: PrimeField,
        family: Family,
        rows: Vec<Vec<FieldElement>>,
        metric: WeightTable,
        guaranteed_distance: u32,
    ) -> Self {
        let n = rows.first().map_or(0, |r| r.len());
        let (rank, kernel) = kernel_basis(&field, &rows, n);
        LinearCode {
            field,
            family,
            rows,
            labels: None,
            guaranteed_distance,
            metric,
            context: None,
            value_set: None,
            dimension: None,
            warning: None,
            rank,
            kernel,
        }
    }

    /// A code with an arbitrary parity-check matrix, measured with the
    /// restricted weight for the subgroup of order `m`.
    pub fn from_matrix(field: PrimeField, rows: Vec<Vec<FieldElement>>, m: u32) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.len() });
        }
        let metric = build_weight_table(&subgroup_of_order(&field, m)?);
        Ok(Self::assemble(field, Family::Custom, rows, metric, 1))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Parity-check matrix as rows.
    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Code length.
    pub fn len(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Column labels `alpha_1, ..., alpha_n`; `None` for vector-valued
    /// columns (one-error codes with `r > 1`) and custom matrices.
    pub fn labels(&self) -> Option<&[FieldElement]> {
        self.labels.as_deref()
    }

    pub fn guaranteed_distance(&self) -> u32 {
        self.guaranteed_distance
    }

    /// Errors every pattern of weight up to this radius.
    pub fn correction_radius(&self) -> u32 {
        self.guaranteed_distance.saturating_sub(1) / 2
    }

    pub fn metric(&self) -> &WeightTable {
        &self.metric
    }

    pub fn context(&self) -> Option<&QuotientContext> {
        self.context.as_ref()
    }

    /// The value set `A` of the geometric constructions.
    pub fn value_set(&self) -> Option<&[i64]> {
        self.value_set.as_deref()
    }

    /// The `r` of a one-error code.
    pub fn dimension_param(&self) -> Option<usize> {
        self.dimension
    }

    pub fn warning(&self) -> Option<Warning> {
        self.warning
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `k = n - rank(H)`.
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// Basis of `ker H`.
    pub fn kernel_basis(&self) -> &[Vec<FieldElement>] {
        &self.kernel
    }

    /// `p^k`, saturating.
    pub fn codeword_count(&self) -> u128 {
        pow_saturating(self.field.p() as u128, self.dimension() as u32)
    }

    /// Short identifier such as `gauss2-p13`.
    pub fn id(&self) -> String {
        match self.family {
            Family::Perfect1 => format!(
                "perfect1-p{}-m{}-r{}",
                self.field.p(),
                self.metric.subgroup().order(),
                self.dimension.unwrap_or(0)
            ),
            family => format!("{}-p{}", family.name(), self.field.p()),
        }
    }

    /// Position of the column labelled `alpha`.
    pub fn position_of(&self, alpha: FieldElement) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|&x| x == alpha)
    }

    /// `sum_j x_j * basis_j` for a message of length `k`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch { expected: self.dimension(), found: message.len() });
        }
        let mut c = vec![self.field.zero(); self.len()];
        for (&m, b) in message.iter().zip(&self.kernel) {
            if m.is_zero() {
                continue;
            }
            for (ci, &bi) in c.iter_mut().zip(b) {
                *ci += m * bi;
            }
        }
        Ok(c)
    }

    pub fn syndrome(&self, v: &[FieldElement]) -> Result<Syndrome> {
        syndrome(self, v)
    }

    /// Syndrome of a sparse vector.
    pub fn pattern_syndrome(&self, e: &ErrorPattern) -> Syndrome {
        let mut s = vec![self.field.zero(); self.rows.len()];
        for &(j, x) in e.entries() {
            for (si, row) in s.iter_mut().zip(&self.rows) {
                *si += row[j] * x;
            }
        }
        Syndrome(s)
    }

    pub fn is_codeword(&self, v: &[FieldElement]) -> bool {
        self.syndrome(v).map(|s| s.is_zero()).unwrap_or(false)
    }
}

/// `H * v^T`.
pub fn syndrome(code: &LinearCode, v: &[FieldElement]) -> Result<Syndrome> {
    if v.len() != code.len() {
        return Err(Error::LengthMismatch { expected: code.len(), found: v.len() });
    }
    let s =
        code.rows.iter().map(|row| row.iter().zip(v).fold(code.field.zero(), |acc, (&h, &x)| acc + h * x)).collect();
    Ok(Syndrome(s))
}

pub fn pow_saturating(base: u128, exp: u32) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// Row-reduces a copy of `rows`; returns the rank and a kernel basis with
/// an identity block on the free columns.
fn kernel_basis(f: &PrimeField, rows: &[Vec<FieldElement>], n: usize) -> (usize, Vec<Vec<FieldElement>>) {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col];
                for j in 0..n {
                    let d = factor * m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc];
            }
            v
        })
        .collect();
    (pivots.len(), basis)
}

/// Perfect one-error code: the lexicographically smallest member of each
/// `E`-orbit of `F_p^r \ {0}` as a column, where coordinates compare by
/// their representative in `[0, p)`.
pub fn construct_perfect1(f: &PrimeField, m: u32, r: usize) -> Result<LinearCode> {
    let subgroup = subgroup_of_order(f, m)?;
    if r == 0 {
        return Err(Error::LengthMismatch { expected: 1, found: 0 });
    }
    let p = f.p() as u128;
    let total = pow_saturating(p, r as u32);
    if total > MAX_AMBIENT {
        return Err(Error::SpaceTooLarge { size: total, max: MAX_AMBIENT });
    }
    let total = total as usize;
    let index = |v: &[u32]| v.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize);
    let mut seen = vec![false; total];
    let mut columns: Vec<Vec<FieldElement>> = Vec::new();
    let mut digits = vec![0u32; r];
    for idx in 1..total {
        // digits of idx in base p, most significant first
        let mut rest = idx;
        for d in digits.iter_mut().rev() {
            *d = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        if seen[idx] {
            continue;
        }
        let v: Vec<FieldElement> = digits.iter().map(|&d| f.from_residue(d)).collect();
        for &e in subgroup.elements() {
            let scaled: Vec<u32> = v.iter().map(|&x| (x * e).residue()).collect();
            seen[index(&scaled)] = true;
        }
        columns.push(v);
    }
    let n = columns.len();
    let rows = (0..r).map(|i| (0..n).map(|j| columns[j][i]).collect()).collect();
    let metric = build_weight_table(&subgroup);
    let mut code = LinearCode::assemble(*f, Family::Perfect1, rows, metric, 3);
    if r == 1 {
        code.labels = Some(columns.into_iter().map(|c| c[0]).collect());
    }
    code.dimension = Some(r);
    Ok(code)
}

fn normalize_set(set: &[i64]) -> Vec<i64> {
    let mut a = set.to_vec();
    a.sort_unstable();
    a.dedup();
    a
}

fn is_symmetric(set: &[i64]) -> bool {
    set.iter().all(|x| set.binary_search(&-x).is_ok())
}

fn guarantee(family: Family, ctx: &QuotientContext) -> (u32, Option<Warning>) {
    let ab = ctx.min_lattice_weight();
    let required = family.required_a_plus_b().expect("lattice family");
    let d = ab.min(family.distance_bound() as u64) as u32;
    let warning = (ab < required).then_some(Warning { a_plus_b: ab, required });
    (d, warning)
}

fn construct_geometric(p: u64, family: Family, set: Option<&[i64]>) -> Result<LinearCode> {
    let kind = family.lattice().expect("geometric family");
    let ctx = make_context(p, kind)?;
    let f = *ctx.field();
    let condition = match family {
        Family::Gauss3 => Admissibility::ThreeError,
        _ => Admissibility::TwoError,
    };
    let set = match set {
        Some(s) => normalize_set(s),
        None => ctx.admissible_set(condition)?,
    };
    let needs_symmetry = matches!(family, Family::Gauss3 | Family::EisenGeo);
    if needs_symmetry && !is_symmetric(&set) {
        return Err(Error::AsymmetricSet);
    }
    if set.len() <= 1 || !ctx.is_admissible(&set, condition) {
        return Err(Error::InadmissibleSet);
    }

    let mut cols: Vec<(FieldElement, i64, i64)> = Vec::with_capacity(set.len() * set.len());
    for &x in &set {
        for &y in &set {
            cols.push((ctx.residue(ctx.point(x, y)), x, y));
        }
    }
    cols.sort_by_key(|c| c.0.value());

    let mut rows = vec![
        cols.iter().map(|_| f.one()).collect::<Vec<_>>(),
        cols.iter().map(|c| f.elem(c.1)).collect(),
        cols.iter().map(|c| f.elem(c.2)).collect(),
        cols.iter().map(|c| c.0.pow(2)).collect(),
    ];
    if family == Family::Gauss3 {
        rows.push(cols.iter().map(|c| c.0.pow(3)).collect());
    }
    let metric = build_weight_table(&subgroup_of_order(&f, kind.unit_count())?);
    let (d, warning) = guarantee(family, &ctx);
    let row_count = rows.len();
    let mut code = LinearCode::assemble(f, family, rows, metric, d);
    if code.rank < row_count {
        return Err(Error::InadmissibleSet);
    }
    code.labels = Some(cols.iter().map(|c| c.0).collect());
    code.context = Some(ctx);
    code.value_set = Some(set);
    code.warning = warning;
    Ok(code)
}

/// Two-error code over the Gaussian integers. `set` defaults to the largest
/// admissible interval.
pub fn construct_gauss2(p: u64, set: Option<&[i64]>) -> Result<LinearCode> {
    construct_geometric(p, Family::Gauss2, set)
}

/// Three-error code over the Gaussian integers.
pub fn construct_gauss3(p: u64, set: Option<&[i64]>) -> Result<LinearCode> {
    construct_geometric(p, Family::Gauss3, set)
}

/// Two-error code over the Eisenstein integers built from `phi`, `psi`.
pub fn construct_eisen_geo(p: u64, set: Option<&[i64]>) -> Result<LinearCode> {
    construct_geometric(p, Family::EisenGeo, set)
}

/// Two-error code over the Eisenstein integers with rows `1, alpha,
/// alpha^4, alpha^7` and labels `0, 1, g, ..., g^((p-4)/3)`.
pub fn construct_eisen_alg(p: u64) -> Result<LinearCode> {
    let ctx = make_context(p, LatticeKind::Eisenstein)?;
    let f = *ctx.field();
    let g = f.primitive_element();
    let mut labels = vec![f.zero()];
    let mut x = f.one();
    for _ in 0..(p - 1) / 3 {
        labels.push(x);
        x *= g;
    }
    // 0^0 = 1 in the first row
    let rows = [0u64, 1, 4, 7].iter().map(|&k| labels.iter().map(|a| a.pow(k)).collect()).collect();
    let metric = build_weight_table(&subgroup_of_order(&f, 6)?);
    let (d, warning) = guarantee(Family::EisenAlg, &ctx);
    let mut code = LinearCode::assemble(f, Family::EisenAlg, rows, metric, d);
    code.labels = Some(labels);
    code.context = Some(ctx);
    code.warning = warning;
    Ok(code)
}

/// Builds any family from its parameters; `m` and `r` only matter for
/// one-error codes.
pub fn construct(family: Family, p: u64, m: u32, r: usize, set: Option<&[i64]>) -> Result<LinearCode> {
    match family {
        Family::Perfect1 => construct_perfect1(&make_field(p)?, m, r),
        Family::Gauss2 => construct_gauss2(p, set),
        Family::Gauss3 => construct_gauss3(p, set),
        Family::EisenGeo => construct_eisen_geo(p, set),
        Family::EisenAlg => construct_eisen_alg(p),
        Family::Custom => Err(Error::WrongFamily),
    }
}

/// Every codeword exactly once, as `sum m_j b_j` over messages in odometer
/// order.
pub fn codeword_space(code: &LinearCode) -> Result<Codewords<'_>> {
    let size = code.codeword_count();
    if size > MAX_CODEWORDS {
        return Err(Error::SpaceTooLarge { size, max: MAX_CODEWORDS });
    }
    Ok(Codewords {
        code,
        digits: vec![0; code.dimension()],
        current: vec![code.field.zero(); code.len()],
        started: false,
        done: false,
    })
}

/// Iterator behind [`codeword_space`].
#[derive(Debug, Clone)]
pub struct Codewords<'a> {
    code: &'a LinearCode,
    digits: Vec<u32>,
    current: Vec<FieldElement>,
    started: bool,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let p = self.code.field.p();
        for (j, d) in self.digits.iter_mut().enumerate() {
            // adding b_j p times is a no-op, so a wrap just keeps adding
            for (c, &b) in self.current.iter_mut().zip(&self.code.kernel[j]) {
                *c += b;
            }
            *d += 1;
            if *d < p {
                return Some(self.current.clone());
            }
            *d = 0;
        }
        self.done = true;
        None
    }
}
