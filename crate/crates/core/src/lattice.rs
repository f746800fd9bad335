//! Gaussian and Eisenstein integers and the quotient `F_p = Z[u]/(pi)`.
//!
//! A [`QuotientContext`] fixes the Gaussian prime `pi = a + ib` or the
//! Eisenstein prime `pi = a + rho b` above `p`, the residue of the unit `i`
//! (resp. `rho`) in `F_p`, and a table of minimal-weight representatives
//! from which the Mannheim and hexagonal weights on `F_p` are read off.
//!
//! Eisenstein integers are kept in `(u, v)` coordinates for `u + rho v`,
//! with `rho^2 = rho - 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{make_field, FieldElement, PrimeField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub x: i64,
    pub y: i64,
}

/// `u + rho v` with `rho = (1 + sqrt(-3)) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisenInt {
    pub u: i64,
    pub v: i64,
}

impl GaussInt {
    pub const fn new(x: i64, y: i64) -> Self {
        GaussInt { x, y }
    }

    pub const I: GaussInt = GaussInt { x: 0, y: 1 };
}

impl EisenInt {
    pub const fn new(u: i64, v: i64) -> Self {
        EisenInt { u, v }
    }

    pub const RHO: EisenInt = EisenInt { u: 0, v: 1 };

    /// Complex conjugate, `rho -> 1 - rho`.
    pub fn conj(self) -> Self {
        EisenInt { u: self.u + self.v, v: -self.v }
    }
}

impl Add for GaussInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussInt::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for GaussInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussInt::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for GaussInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussInt::new(-self.x, -self.y)
    }
}

impl Mul for GaussInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussInt::new(self.x * o.x - self.y * o.y, self.x * o.y + self.y * o.x)
    }
}

impl Add for EisenInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        EisenInt::new(self.u + o.u, self.v + o.v)
    }
}

impl Sub for EisenInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        EisenInt::new(self.u - o.u, self.v - o.v)
    }
}

impl Neg for EisenInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisenInt::new(-self.u, -self.v)
    }
}

impl Mul for EisenInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // v v' rho^2 = v v' (rho - 1)
        EisenInt::new(self.u * o.u - self.v * o.v, self.u * o.v + self.v * o.u + self.v * o.v)
    }
}

/// Manhattan weight `|x| + |y|`.
#[inline]
pub fn manhattan_weight(z: GaussInt) -> u64 {
    z.x.unsigned_abs() + z.y.unsigned_abs()
}

/// Shortest path length from 0 using steps `±1, ±rho, ±rho^2`.
#[inline]
pub fn hex_weight(z: EisenInt) -> u64 {
    (z.u.unsigned_abs() + z.v.unsigned_abs() + (z.u + z.v).unsigned_abs()) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    Gaussian,
    Eisenstein,
}

impl LatticeKind {
    /// Order of the unit group `{±1, ±i}` resp. `{±1, ±rho, ±rho^2}`.
    pub fn unit_count(self) -> u32 {
        match self {
            LatticeKind::Gaussian => 4,
            LatticeKind::Eisenstein => 6,
        }
    }

    fn modulus(self) -> u32 {
        match self {
            LatticeKind::Gaussian => 4,
            LatticeKind::Eisenstein => 6,
        }
    }
}

/// A point of `Z[i]` or `Z[rho]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticePoint {
    Gauss(GaussInt),
    Eisen(EisenInt),
}

impl LatticePoint {
    fn from_coords(kind: LatticeKind, c0: i64, c1: i64) -> Self {
        match kind {
            LatticeKind::Gaussian => LatticePoint::Gauss(GaussInt::new(c0, c1)),
            LatticeKind::Eisenstein => LatticePoint::Eisen(EisenInt::new(c0, c1)),
        }
    }

    /// `(x, y)` resp. `(u, v)`.
    pub fn coords(self) -> (i64, i64) {
        match self {
            LatticePoint::Gauss(z) => (z.x, z.y),
            LatticePoint::Eisen(z) => (z.u, z.v),
        }
    }

    pub fn kind(self) -> LatticeKind {
        match self {
            LatticePoint::Gauss(_) => LatticeKind::Gaussian,
            LatticePoint::Eisen(_) => LatticeKind::Eisenstein,
        }
    }

    /// Manhattan or hexagonal weight, according to the lattice.
    pub fn weight(self) -> u64 {
        match self {
            LatticePoint::Gauss(z) => manhattan_weight(z),
            LatticePoint::Eisen(z) => hex_weight(z),
        }
    }
}

impl From<GaussInt> for LatticePoint {
    fn from(z: GaussInt) -> Self {
        LatticePoint::Gauss(z)
    }
}

impl From<EisenInt> for LatticePoint {
    fn from(z: EisenInt) -> Self {
        LatticePoint::Eisen(z)
    }
}

/// `p = a^2 + b^2` with `a` odd and `b` even, both positive.
pub fn two_squares(p: u64) -> Result<(u64, u64)> {
    if p % 4 != 1 {
        return Err(Error::BadResidueClass { p: p as u32, modulus: 4 });
    }
    let mut a = 1;
    while a * a < p {
        let rest = p - a * a;
        let b = rest.isqrt();
        if b * b == rest && b > 0 && b % 2 == 0 {
            return Ok((a, b));
        }
        a += 2;
    }
    Err(Error::CompositeModulus(p))
}

/// `p = a^2 + ab + b^2` with `a >= b > 0`.
pub fn eisen_decompose(p: u64) -> Result<(u64, u64)> {
    if p % 6 != 1 {
        return Err(Error::BadResidueClass { p: p as u32, modulus: 6 });
    }
    let mut b = 1;
    while 3 * b * b <= p {
        // a^2 + ab + b^2 - p = 0, a = (-b + sqrt(4p - 3b^2)) / 2
        let disc = 4 * p - 3 * b * b;
        let s = disc.isqrt();
        if s * s == disc && s > b && (s - b) % 2 == 0 {
            let a = (s - b) / 2;
            if a >= b {
                return Ok((a, b));
            }
        }
        b += 1;
    }
    Err(Error::CompositeModulus(p))
}

/// Which containment a value set `A` must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    /// `A + unit*A` inside the fundamental cell.
    TwoError,
    /// `A + A + unit*A` inside the fundamental cell.
    ThreeError,
}

/// The quotient `F_p = Z[i]/(pi)` or `Z[rho]/(pi)` with its weight data.
#[derive(Debug, Clone)]
pub struct QuotientContext {
    field: PrimeField,
    kind: LatticeKind,
    a: u64,
    b: u64,
    unit_residue: FieldElement,
    // minimal-weight representative of each class, indexed by residue
    region: Vec<LatticePoint>,
    weights: Vec<u32>,
}

/// Builds the quotient data for `p`, including the fundamental region.
pub fn make_context(p: u64, kind: LatticeKind) -> Result<QuotientContext> {
    let field = make_field(p)?;
    let (a, b) = match kind {
        LatticeKind::Gaussian => two_squares(p)?,
        LatticeKind::Eisenstein => eisen_decompose(p)?,
    };
    // pi = a + b*unit = 0 in F_p
    let unit_residue = -field.elem(a as i64) / field.elem(b as i64);

    let n = p as usize;
    let bound = (a + b) as i64;
    let mut region: Vec<Option<LatticePoint>> = vec![None; n];
    let mut weights = vec![u32::MAX; n];
    let unit = unit_residue.value();
    for c0 in -bound..=bound {
        for c1 in -bound..=bound {
            let z = LatticePoint::from_coords(kind, c0, c1);
            let w = z.weight() as u32;
            let r = field.elem(c0 + c1 * unit).residue() as usize;
            if w < weights[r] {
                weights[r] = w;
                region[r] = Some(z);
            }
        }
    }
    let region = region.into_iter().map(|z| z.expect("box of radius a+b covers every class")).collect();
    Ok(QuotientContext { field, kind, a, b, unit_residue, region, weights })
}

impl QuotientContext {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `pi = a + ib` resp. `a + rho b`.
    pub fn pi(&self) -> LatticePoint {
        LatticePoint::from_coords(self.kind, self.a as i64, self.b as i64)
    }

    /// Residue of `i` (Gaussian) or `rho` (Eisenstein) in `F_p`.
    pub fn unit_residue(&self) -> FieldElement {
        self.unit_residue
    }

    /// One representative per class; `region()[r]` maps to residue `r`.
    pub fn region(&self) -> &[LatticePoint] {
        &self.region
    }

    /// The quotient map `Z[unit] -> F_p`.
    pub fn residue(&self, z: impl Into<LatticePoint>) -> FieldElement {
        let (c0, c1) = z.into().coords();
        self.field.elem(c0) + self.field.elem(c1) * self.unit_residue
    }

    /// Minimal-weight representative of the class of `e`; ties go to the
    /// lexicographically smallest coordinate pair.
    pub fn reduce_to_region(&self, e: FieldElement) -> LatticePoint {
        self.region[e.residue() as usize]
    }

    /// Mannheim (Gaussian) or hexagonal (Eisenstein) weight on `F_p`.
    #[inline]
    pub fn quotient_weight(&self, e: FieldElement) -> u32 {
        self.weights[e.residue() as usize]
    }

    /// Minimum weight of a nonzero lattice point of `(pi)`, which is `a + b`.
    pub fn min_lattice_weight(&self) -> u64 {
        self.a + self.b
    }

    /// `min_lattice_weight` recomputed by scanning all points of `(pi)` in
    /// the box of radius `2(a+b)`.
    pub fn min_lattice_weight_enumerated(&self) -> u64 {
        let r = 2 * (self.a + self.b) as i64;
        let mut best = u64::MAX;
        for c0 in -r..=r {
            for c1 in -r..=r {
                if (c0, c1) == (0, 0) {
                    continue;
                }
                let z = LatticePoint::from_coords(self.kind, c0, c1);
                if self.residue(z).is_zero() {
                    best = best.min(z.weight());
                }
            }
        }
        best
    }

    /// Whether `z` lies in the closed cell `[-1/2,1/2] pi + [-1/2,1/2] i pi`
    /// (Gaussian) or the scaled unit hexagon `Delta pi` (Eisenstein).
    ///
    /// No lattice point lies on the boundary since `p` is odd, so distinct
    /// points of the cell are distinct modulo `pi`.
    pub fn cell_contains(&self, z: impl Into<LatticePoint>) -> bool {
        let p = self.field.p() as i64;
        let (a, b) = (self.a as i64, self.b as i64);
        match z.into() {
            LatticePoint::Gauss(z) => {
                // z * conj(pi) = (ax + by) + i(ay - bx)
                let s = a * z.x + b * z.y;
                let t = a * z.y - b * z.x;
                2 * s.abs() <= p && 2 * t.abs() <= p
            }
            LatticePoint::Eisen(z) => {
                let q = z * EisenInt::new(a, b).conj();
                2 * hex_weight(q) as i64 <= p
            }
        }
    }

    /// The lattice point `x + unit*y`.
    pub fn point(&self, x: i64, y: i64) -> LatticePoint {
        LatticePoint::from_coords(self.kind, x, y)
    }

    /// Checks the containment for `A`, exhaustively over all sums.
    pub fn is_admissible(&self, set: &[i64], condition: Admissibility) -> bool {
        let extra: &[i64] = match condition {
            Admissibility::TwoError => &[0],
            Admissibility::ThreeError => set,
        };
        set.iter().all(|&x| extra.iter().all(|&x2| set.iter().all(|&y| self.cell_contains(self.point(x + x2, y)))))
    }

    /// Largest `A = {-k, ..., k}` meeting the containment.
    pub fn admissible_set(&self, condition: Admissibility) -> Result<Vec<i64>> {
        let interval = |k: i64| (-k..=k).collect::<Vec<_>>();
        if !self.is_admissible(&[0], condition) {
            return Err(Error::NoAdmissibleSet);
        }
        let mut k = 0;
        while k < (self.a + self.b) as i64 && self.is_admissible(&interval(k + 1), condition) {
            k += 1;
        }
        Ok(interval(k))
    }

    /// The pair `(x, y)` in `A x A` with `alpha = x + unit*y`, i.e. the
    /// real/imaginary parts (Gaussian) or the maps `phi, psi` (Eisenstein).
    pub fn component_maps(&self, set: &[i64], alpha: FieldElement) -> Result<(i64, i64)> {
        for &x in set {
            for &y in set {
                if self.residue(self.point(x, y)) == alpha {
                    return Ok((x, y));
                }
            }
        }
        Err(Error::OutsideDomain)
    }
}

/// `residue(ctx, z)`.
pub fn residue(ctx: &QuotientContext, z: impl Into<LatticePoint>) -> FieldElement {
    ctx.residue(z)
}

/// Checks that `kind` matches `p` modulo 4 or 6 without building anything.
pub fn check_residue_class(p: u64, kind: LatticeKind) -> Result<()> {
    let m = kind.modulus() as u64;
    if p % m == 1 {
        Ok(())
    } else {
        Err(Error::BadResidueClass { p: p as u32, modulus: m as u32 })
    }
}
