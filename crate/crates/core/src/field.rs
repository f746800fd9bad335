//! Arithmetic in the prime field `F_p` and its unit subgroups.
//!
//! Elements are stored by their symmetric representative in
//! `[-(p-1)/2, (p-1)/2]`, which is also how every matrix in this crate is
//! printed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Moduli must satisfy `p < 2^31` so that products fit in `i64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The field `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    inv2: FieldElement,
    inv3: Option<FieldElement>,
}

/// An element of `F_p`, tagged with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: i32,
    p: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds `F_p`. Fails on composite, even or oversized moduli.
pub fn make_field(p: u64) -> Result<PrimeField> {
    if p == 2 {
        return Err(Error::EvenModulus);
    }
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p));
    }
    let p = p as u32;
    let raw = |z: i64| FieldElement::reduce(z, p);
    let inv2 = raw(2).inv().expect("2 is a unit in odd characteristic");
    let inv3 = raw(3).inv();
    Ok(PrimeField { p, inv2, inv3 })
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        make_field(p)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Largest symmetric representative, `(p-1)/2`.
    #[inline]
    pub fn half(&self) -> i64 {
        (self.p as i64 - 1) / 2
    }

    #[inline]
    pub fn elem(&self, z: i64) -> FieldElement {
        FieldElement::reduce(z, self.p)
    }

    #[inline]
    pub fn from_residue(&self, r: u32) -> FieldElement {
        FieldElement::reduce(r as i64, self.p)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    pub fn inv2(&self) -> FieldElement {
        self.inv2
    }

    /// `None` when `p = 3`.
    pub fn inv3(&self) -> Option<FieldElement> {
        self.inv3
    }

    /// All elements in ascending symmetric order `-(p-1)/2, ..., (p-1)/2`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let h = self.half();
        (-h..=h).map(move |z| self.elem(z))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: FieldElement) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let n = self.p as u64 - 1;
        let mut ord = n;
        for q in prime_factors(n) {
            while ord % q == 0 && x.pow(ord / q) == self.one() {
                ord /= q;
            }
        }
        Some(ord)
    }

    /// Smallest positive integer generating `F_p*`.
    pub fn primitive_element(&self) -> FieldElement {
        primitive_element(self)
    }
}

/// Smallest positive integer generating `F_p*`.
pub fn primitive_element(f: &PrimeField) -> FieldElement {
    let n = f.p as u64 - 1;
    let factors = prime_factors(n);
    (1..f.p as i64)
        .map(|g| f.elem(g))
        .find(|&g| factors.iter().all(|&q| g.pow(n / q) != f.one()))
        .expect("F_p* is cyclic")
}

impl FieldElement {
    #[inline]
    fn reduce(z: i64, p: u32) -> Self {
        let pi = p as i64;
        let mut r = z.rem_euclid(pi);
        if r > pi / 2 {
            r -= pi;
        }
        FieldElement { value: r as i32, p }
    }

    /// Symmetric representative.
    #[inline]
    pub fn value(self) -> i64 {
        self.value as i64
    }

    /// Representative in `[0, p)`.
    #[inline]
    pub fn residue(self) -> u32 {
        if self.value < 0 {
            (self.value as i64 + self.p as i64) as u32
        } else {
            self.value as u32
        }
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FieldElement::reduce(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0.div_euclid(r1);
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        // r0 = ±1 since p is prime
        Some(FieldElement::reduce(t0 * r0, self.p))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        FieldElement::reduce(self.value as i64 + rhs.value as i64, self.p)
    }
}

impl Sub for FieldElement {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        FieldElement::reduce(self.value as i64 - rhs.value as i64, self.p)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        FieldElement::reduce(self.value as i64 * rhs.value as i64, self.p)
    }
}

impl Div for FieldElement {
    type Output = Self;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        FieldElement { value: -self.value, p: self.p }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

/// A subgroup `E` of `F_p*` of even order, so that `-1` is in `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSubgroup {
    field: PrimeField,
    m: u32,
    generator: FieldElement,
    elements: Vec<FieldElement>,
    member: Vec<bool>,
}

/// `E = { g^(k(p-1)/m) }` for the smallest primitive element `g`.
pub fn subgroup_of_order(f: &PrimeField, m: u32) -> Result<UnitSubgroup> {
    let p = f.p();
    if m == 0 || m % 2 == 1 || (p - 1) % m != 0 {
        return Err(Error::BadOrder { p, m });
    }
    let generator = primitive_element(f).pow(((p - 1) / m) as u64);
    let mut elements = Vec::with_capacity(m as usize);
    let mut member = vec![false; p as usize];
    let mut x = f.one();
    for _ in 0..m {
        elements.push(x);
        member[x.residue() as usize] = true;
        x *= generator;
    }
    Ok(UnitSubgroup { field: *f, m, generator, elements, member })
}

impl UnitSubgroup {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Elements as successive powers of the generator, starting at 1.
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    /// Elements in ascending symmetric order.
    pub fn sorted(&self) -> Vec<FieldElement> {
        let mut v = self.elements.clone();
        v.sort_by_key(|x| x.value());
        v
    }

    #[inline]
    pub fn contains(&self, x: FieldElement) -> bool {
        self.member[x.residue() as usize]
    }
}

/// Roots of `sigma(z) = 1 + a_1 z + ... + a_t z^t` given as locators.
///
/// Returns every `alpha` in `domain` with `sigma` having the factor
/// `(1 - alpha z)`, i.e. the roots of the reversed polynomial
/// `x^t + a_1 x^(t-1) + ... + a_t`, each repeated by its multiplicity.
pub fn poly_roots(coeffs: &[FieldElement], domain: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = Vec::new();
    let Some(first) = coeffs.first().or(domain.first()) else {
        return out;
    };
    // reversed polynomial, leading coefficient first
    let mut rev = Vec::with_capacity(coeffs.len() + 1);
    rev.push(FieldElement::reduce(1, first.p));
    rev.extend_from_slice(coeffs);
    for &alpha in domain {
        let mut poly = rev.clone();
        while poly.len() > 1 {
            let mut quotient = Vec::with_capacity(poly.len() - 1);
            let mut acc = poly[0];
            for &c in &poly[1..] {
                quotient.push(acc);
                acc = acc * alpha + c;
            }
            if !acc.is_zero() {
                break;
            }
            out.push(alpha);
            poly = quotient;
        }
    }
    out
}
