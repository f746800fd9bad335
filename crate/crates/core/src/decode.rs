//! Syndrome decoders: Newton-identity locator recovery, the two-error
//! product identities, algebraic decoders for the Gaussian two-error and
//! Eisenstein algebraic families, and a bounded-search reference decoder.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{Family, LinearCode, Syndrome};
use crate::error::{Error, Result};
use crate::field::{poly_roots, FieldElement, PrimeField};
use crate::weight::{enumerate_weight_ball, ErrorPattern};

/// Syndrome tables larger than this are refused.
pub const MAX_TABLE: u128 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    DetectedUncorrectable,
}

/// How a decode was resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeRoute {
    Algebraic,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// The error that was removed; present when corrected.
    pub pattern: Option<ErrorPattern>,
    /// `received - pattern`; absent when uncorrectable.
    pub codeword: Option<Vec<FieldElement>>,
    pub route: DecodeRoute,
}

impl DecodeResult {
    fn no_error(received: &[FieldElement], route: DecodeRoute) -> Self {
        DecodeResult { status: DecodeStatus::NoError, pattern: None, codeword: Some(received.to_vec()), route }
    }

    fn corrected(received: &[FieldElement], pattern: ErrorPattern, route: DecodeRoute) -> Self {
        let mut c = received.to_vec();
        for &(i, x) in pattern.entries() {
            c[i] -= x;
        }
        DecodeResult { status: DecodeStatus::Corrected, pattern: Some(pattern), codeword: Some(c), route }
    }

    fn detected(route: DecodeRoute) -> Self {
        DecodeResult { status: DecodeStatus::DetectedUncorrectable, pattern: None, codeword: None, route }
    }
}

/// `sigma(z) = 1 + a_1 z + ... + a_t z^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorPolynomial {
    pub coefficients: Vec<FieldElement>,
}

impl LocatorPolynomial {
    /// Locators `alpha` in `domain` with `(1 - alpha z) | sigma`.
    pub fn roots(&self, domain: &[FieldElement]) -> Vec<FieldElement> {
        poly_roots(&self.coefficients, domain)
    }
}

/// Power sums `S_1, ..., S_t` of `roots`.
pub fn power_sums(f: &PrimeField, roots: &[FieldElement], t: usize) -> Vec<FieldElement> {
    (1..=t as u64).map(|i| roots.iter().fold(f.zero(), |acc, r| acc + r.pow(i))).collect()
}

/// Locator coefficients from `S_1, ..., S_t` by the Newton identities
/// `-j a_j = S_j + a_1 S_(j-1) + ... + a_(j-1) S_1`.
pub fn newton_coefficients(f: &PrimeField, s: &[FieldElement], t: usize) -> Result<LocatorPolynomial> {
    if t >= f.p() as usize {
        return Err(Error::CharacteristicTooSmall { t, p: f.p() });
    }
    if s.len() < t {
        return Err(Error::LengthMismatch { expected: t, found: s.len() });
    }
    let mut a: Vec<FieldElement> = Vec::with_capacity(t);
    for j in 1..=t {
        let mut acc = s[j - 1];
        for i in 1..j {
            acc += a[i - 1] * s[j - i - 1];
        }
        let inv_j = f.elem(j as i64).inv().expect("j < p");
        a.push(-acc * inv_j);
    }
    Ok(LocatorPolynomial { coefficients: a })
}

/// `(S_1^3 - S_3) / (3 S_1)`, which is `alpha beta` for two locators.
pub fn product_from_s13(f: &PrimeField, s1: FieldElement, s3: FieldElement) -> Result<FieldElement> {
    let inv3 = f.inv3().ok_or(Error::UnsupportedCharacteristic(f.p()))?;
    if s1.is_zero() {
        return Err(Error::ZeroFirstSyndrome);
    }
    Ok((s1.pow(3) - s3) * inv3 / s1)
}

/// `2 (S_1^7 - S_7) / (7 S_1 (S_1^4 + S_4))`, which is `alpha beta` for two
/// locators whenever `alpha^2 + alpha beta + beta^2 != 0`.
pub fn product_from_s147(f: &PrimeField, s1: FieldElement, s4: FieldElement, s7: FieldElement) -> Result<FieldElement> {
    if f.p() == 7 {
        return Err(Error::UnsupportedCharacteristic(7));
    }
    if s1.is_zero() {
        return Err(Error::ZeroFirstSyndrome);
    }
    let d = s1.pow(4) + s4;
    if d.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    Ok(f.elem(2) * (s1.pow(7) - s7) / (f.elem(7) * s1 * d))
}

fn check_length(code: &LinearCode, received: &[FieldElement]) -> Result<()> {
    if received.len() != code.len() {
        return Err(Error::LengthMismatch { expected: code.len(), found: received.len() });
    }
    Ok(())
}

fn accept(code: &LinearCode, syn: &Syndrome, pattern: &ErrorPattern, t: u64) -> bool {
    !pattern.is_empty() && pattern.weight(code.metric()) <= t && &code.pattern_syndrome(pattern) == syn
}

/// Reference decoder: scans the weight ball of radius `t` for the pattern
/// whose syndrome matches. Needs `2t < d`.
pub fn decode_bounded(code: &LinearCode, received: &[FieldElement], t: u32) -> Result<DecodeResult> {
    check_radius(code, t)?;
    check_length(code, received)?;
    let syn = code.syndrome(received)?;
    if syn.is_zero() {
        return Ok(DecodeResult::no_error(received, DecodeRoute::Search));
    }
    for e in enumerate_weight_ball(code.metric(), code.len(), t)? {
        if code.pattern_syndrome(&e) == syn {
            return Ok(DecodeResult::corrected(received, e, DecodeRoute::Search));
        }
    }
    Ok(DecodeResult::detected(DecodeRoute::Search))
}

fn check_radius(code: &LinearCode, t: u32) -> Result<()> {
    if 2 * t >= code.guaranteed_distance() {
        return Err(Error::RadiusExceedsGuarantee { t, distance: code.guaranteed_distance() });
    }
    Ok(())
}

/// [`decode_bounded`] with the ball precomputed into a syndrome table.
#[derive(Debug, Clone)]
pub struct BoundedDecoder {
    t: u32,
    table: BTreeMap<Vec<u32>, ErrorPattern>,
}

impl BoundedDecoder {
    pub fn new(code: &LinearCode, t: u32) -> Result<Self> {
        check_radius(code, t)?;
        let size = code.metric().ball_size(code.len(), t);
        if size > MAX_TABLE {
            return Err(Error::SpaceTooLarge { size, max: MAX_TABLE });
        }
        let mut table = BTreeMap::new();
        for e in enumerate_weight_ball(code.metric(), code.len(), t)? {
            let key = syndrome_key(&code.pattern_syndrome(&e));
            table.entry(key).or_insert(e);
        }
        Ok(BoundedDecoder { t, table })
    }

    pub fn radius(&self) -> u32 {
        self.t
    }

    pub fn decode(&self, code: &LinearCode, received: &[FieldElement]) -> Result<DecodeResult> {
        check_length(code, received)?;
        let syn = code.syndrome(received)?;
        if syn.is_zero() {
            return Ok(DecodeResult::no_error(received, DecodeRoute::Search));
        }
        Ok(match self.table.get(&syndrome_key(&syn)) {
            Some(e) => DecodeResult::corrected(received, e.clone(), DecodeRoute::Search),
            None => DecodeResult::detected(DecodeRoute::Search),
        })
    }
}

fn syndrome_key(s: &Syndrome) -> Vec<u32> {
    s.values().iter().map(|x| x.residue()).collect()
}

/// Algebraic decoder for [`Family::Gauss2`], correcting every pattern of
/// Mannheim weight at most 2.
///
/// The first syndrome is the sum of the unit errors. Each way of writing it
/// as a sum of at most two units gives a candidate:
/// equal values recover `alpha + beta` and `alpha beta` from the real,
/// imaginary and square rows; opposite values recover `alpha - beta` and
/// `alpha^2 - beta^2`; values differing by a factor `±i` are read off
/// componentwise from the real and imaginary rows. A candidate is accepted
/// only if its full syndrome matches.
pub fn decode_gauss2(code: &LinearCode, received: &[FieldElement]) -> Result<DecodeResult> {
    if code.family() != Family::Gauss2 {
        return Err(Error::WrongFamily);
    }
    check_length(code, received)?;
    let syn = code.syndrome(received)?;
    if syn.is_zero() {
        return Ok(DecodeResult::no_error(received, DecodeRoute::Algebraic));
    }
    let f = *code.field();
    let ctx = code.context().expect("gauss2 carries its lattice");
    let set = code.value_set().expect("gauss2 carries its value set");
    let labels = code.labels().expect("gauss2 has labels");
    let i = ctx.unit_residue();
    let s = syn.values();
    let (s1, s2, s3, s4) = (s[0], s[1], s[2], s[3]);
    let units = code.metric().subgroup().elements();
    let n = code.len();

    let at = |alpha: FieldElement| code.position_of(alpha);
    let mut candidates: Vec<ErrorPattern> = Vec::new();

    // one unit error
    for &eps in units {
        if s1 != eps {
            continue;
        }
        let alpha = s2 / eps + i * (s3 / eps);
        if let Some(j) = at(alpha) {
            candidates.push(ErrorPattern::from_entries(n, [(j, eps)]));
        }
    }

    // two unit errors, unordered
    for (k, &e1) in units.iter().enumerate() {
        for &e2 in &units[k..] {
            if e1 + e2 != s1 {
                continue;
            }
            let ratio = e2 / e1;
            let (c2, c3, c4) = (s2 / e1, s3 / e1, s4 / e1);
            if ratio == f.one() {
                // alpha + beta and alpha^2 + beta^2
                let sum = c2 + i * c3;
                let prod = (sum * sum - c4) * f.inv2();
                let roots = poly_roots(&[-sum, prod], labels);
                if roots.len() == 2 {
                    if let (Some(a), Some(b)) = (at(roots[0]), at(roots[1])) {
                        candidates.push(ErrorPattern::from_entries(n, [(a, e1), (b, e2)]));
                    }
                }
            } else if ratio == -f.one() {
                // alpha - beta and alpha^2 - beta^2
                let diff = c2 + i * c3;
                if diff.is_zero() {
                    continue;
                }
                let sum = c4 / diff;
                let alpha = (sum + diff) * f.inv2();
                let beta = (sum - diff) * f.inv2();
                if let (Some(a), Some(b)) = (at(alpha), at(beta)) {
                    candidates.push(ErrorPattern::from_entries(n, [(a, e1), (b, e2)]));
                }
            } else {
                // c2 = re alpha + ratio * re beta, likewise for im
                let split = |c: FieldElement| -> Vec<(i64, i64)> {
                    let mut out = Vec::new();
                    for &x in set {
                        for &y in set {
                            if f.elem(x) + ratio * f.elem(y) == c {
                                out.push((x, y));
                            }
                        }
                    }
                    out
                };
                for (re_a, re_b) in split(c2) {
                    for (im_a, im_b) in split(c3) {
                        let alpha = f.elem(re_a) + i * f.elem(im_a);
                        let beta = f.elem(re_b) + i * f.elem(im_b);
                        if let (Some(a), Some(b)) = (at(alpha), at(beta)) {
                            candidates.push(ErrorPattern::from_entries(n, [(a, e1), (b, e2)]));
                        }
                    }
                }
            }
        }
    }

    Ok(candidates
        .into_iter()
        .find(|e| accept(code, &syn, e, 2))
        .map(|e| DecodeResult::corrected(received, e, DecodeRoute::Algebraic))
        .unwrap_or(DecodeResult::detected(DecodeRoute::Algebraic)))
}

/// Algebraic decoder for [`Family::EisenAlg`] with bounded-search fallback.
///
/// An error `±zeta^e` at `alpha` contributes `±(zeta^e alpha)^k` to the
/// syndrome rows `k = 1, 4, 7` because `zeta^4 = zeta^7 = zeta`. Two errors
/// of the same sign therefore give power sums of the folded locators, whose
/// product comes from [`product_from_s147`]; the locators are unfolded by
/// looking up their `zeta`-orbit in the column labels. Opposite-sign pairs
/// and anything else left unresolved go to the search decoder with `t = 2`.
pub fn decode_eisen_alg2(code: &LinearCode, received: &[FieldElement]) -> Result<DecodeResult> {
    decode_eisen_alg2_with(code, received, None)
}

/// [`decode_eisen_alg2`] falling back to a prebuilt table when given.
pub fn decode_eisen_alg2_with(
    code: &LinearCode,
    received: &[FieldElement],
    fallback: Option<&BoundedDecoder>,
) -> Result<DecodeResult> {
    if code.family() != Family::EisenAlg {
        return Err(Error::WrongFamily);
    }
    check_length(code, received)?;
    let syn = code.syndrome(received)?;
    if syn.is_zero() {
        return Ok(DecodeResult::no_error(received, DecodeRoute::Algebraic));
    }
    if let Some(e) = eisen_alg_candidate(code, &syn) {
        return Ok(DecodeResult::corrected(received, e, DecodeRoute::Algebraic));
    }
    match fallback {
        Some(table) if table.radius() == 2 => table.decode(code, received),
        _ => decode_bounded(code, received, 2),
    }
}

fn eisen_alg_candidate(code: &LinearCode, syn: &Syndrome) -> Option<ErrorPattern> {
    let f = *code.field();
    let ctx = code.context()?;
    let labels = code.labels()?;
    let n = code.len();
    let units = code.metric().subgroup();
    let rho = ctx.unit_residue();
    let zeta = rho * rho;
    let zpow = [f.one(), zeta, zeta * zeta];
    let s = syn.values();
    // rows are alpha^0, alpha^1, alpha^4, alpha^7
    let (s0, s1, s4, s7) = (s[0], s[1], s[2], s[3]);

    // single error: s0 is the value, s1 = value * alpha
    if units.contains(s0) {
        if let Some(j) = code.position_of(s1 / s0) {
            let e = ErrorPattern::from_entries(n, [(j, s0)]);
            if accept(code, syn, &e, 2) {
                return Some(e);
            }
        }
    }

    // zeta-orbit of every nonzero element: residue -> (column, exponent)
    let zero_col = code.position_of(f.zero());
    let mut orbit = vec![None; f.p() as usize];
    for (j, &alpha) in labels.iter().enumerate() {
        if alpha.is_zero() {
            continue;
        }
        for (e, &z) in zpow.iter().enumerate() {
            orbit[(z * alpha).residue() as usize] = Some((j, e));
        }
    }
    let all: Vec<FieldElement> = f.elements().collect();

    for sign in [f.one(), -f.one()] {
        let (p1, p4, p7) = (s1 / sign, s4 / sign, s7 / sign);
        let prod = match product_from_s147(&f, p1, p4, p7) {
            Ok(x) => x,
            // lambda^2 + lambda mu + mu^2 = 0 gives (lambda + mu)^2 = lambda mu
            Err(Error::DegenerateDenominator) => p1 * p1,
            Err(_) => continue,
        };
        let roots = poly_roots(&[-p1, prod], &all);
        if roots.len() != 2 {
            continue;
        }
        // value exponent per locator; a zero locator takes what is left of s0
        let mut placed: Vec<(usize, Option<usize>)> = Vec::with_capacity(2);
        for &lambda in &roots {
            if lambda.is_zero() {
                placed.push((zero_col?, None));
            } else {
                let (j, e) = orbit[lambda.residue() as usize]?;
                placed.push((j, Some(e)));
            }
        }
        let known: FieldElement = placed.iter().filter_map(|x| x.1).fold(f.zero(), |a, e| a + zpow[e]);
        let mut entries = Vec::with_capacity(2);
        let mut ok = true;
        for &(j, e) in &placed {
            let z = match e {
                Some(e) => zpow[e],
                None => {
                    let rest = s0 / sign - known;
                    if !zpow.contains(&rest) {
                        ok = false;
                        break;
                    }
                    rest
                }
            };
            entries.push((j, sign * z));
        }
        if !ok {
            continue;
        }
        let e = ErrorPattern::from_entries(n, entries);
        if accept(code, syn, &e, 2) {
            return Some(e);
        }
    }
    None
}

/// Which decoder a [`Decoder`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    /// The family's algebraic decoder where one exists, search otherwise.
    Algebraic,
    /// Syndrome-table search at the code's correction radius.
    Bounded,
}

/// A decoder bound to one code, correcting up to its correction radius.
#[derive(Debug, Clone)]
pub struct Decoder<'a> {
    code: &'a LinearCode,
    kind: DecoderKind,
    table: BoundedDecoder,
}

impl<'a> Decoder<'a> {
    pub fn new(code: &'a LinearCode, kind: DecoderKind) -> Result<Self> {
        let table = BoundedDecoder::new(code, code.correction_radius())?;
        Ok(Decoder { code, kind, table })
    }

    pub fn code(&self) -> &LinearCode {
        self.code
    }

    /// Name of the routine that will actually run.
    pub fn name(&self) -> &'static str {
        match (self.kind, self.code.family()) {
            (DecoderKind::Algebraic, Family::Gauss2) => "gauss2-algebraic",
            (DecoderKind::Algebraic, Family::EisenAlg) => "eisen-alg-algebraic",
            _ => "bounded",
        }
    }

    pub fn decode(&self, received: &[FieldElement]) -> Result<DecodeResult> {
        match (self.kind, self.code.family()) {
            (DecoderKind::Algebraic, Family::Gauss2) => decode_gauss2(self.code, received),
            (DecoderKind::Algebraic, Family::EisenAlg) => {
                decode_eisen_alg2_with(self.code, received, Some(&self.table))
            }
            _ => self.table.decode(self.code, received),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{construct_eisen_alg, construct_gauss2, construct_gauss3};
    use crate::field::make_field;

    // sigma = prod (1 - r z), expanded by repeated multiplication
    fn expand(f: &PrimeField, roots: &[FieldElement]) -> Vec<FieldElement> {
        let mut poly = vec![f.one()];
        for &r in roots {
            let mut next = vec![f.zero(); poly.len() + 1];
            for (k, &c) in poly.iter().enumerate() {
                next[k] += c;
                next[k + 1] -= c * r;
            }
            poly = next;
        }
        poly.remove(0);
        poly
    }

    #[test]
    fn newton_examples() {
        let f = make_field(13).unwrap();
        let s = [f.elem(3), f.elem(5)];
        let sigma = newton_coefficients(&f, &s, 2).unwrap();
        assert_eq!(sigma.coefficients, [f.elem(-3), f.elem(2)]);
        assert_eq!(sigma.coefficients, expand(&f, &[f.elem(1), f.elem(2)]));

        let zero = newton_coefficients(&f, &[f.zero(); 3], 3).unwrap();
        assert!(zero.coefficients.iter().all(|a| a.is_zero()));

        let f29 = make_field(29).unwrap();
        let roots = [f29.elem(11), f29.elem(12), f29.elem(13)];
        let s = power_sums(&f29, &roots, 3);
        assert_eq!(s[0].value(), 7);
        assert_eq!(s[1].residue(), 434 % 29);
        assert_eq!(s[2].residue(), (11u32.pow(3) + 12u32.pow(3) + 13u32.pow(3)) % 29);
        let sigma = newton_coefficients(&f29, &s, 3).unwrap();
        assert_eq!(sigma.coefficients, expand(&f29, &roots));
        let all: Vec<_> = f29.elements().collect();
        assert_eq!(sigma.roots(&all), [f29.elem(11), f29.elem(12), f29.elem(13)]);

        let f3 = make_field(3).unwrap();
        assert_eq!(newton_coefficients(&f3, &[f3.zero(); 3], 3), Err(Error::CharacteristicTooSmall { t: 3, p: 3 }));
    }

    #[test]
    fn product_identities() {
        let f13 = make_field(13).unwrap();
        assert_eq!(product_from_s13(&f13, f13.elem(3), f13.elem(9)), Ok(f13.elem(2)));
        assert_eq!(product_from_s13(&f13, f13.zero(), f13.elem(4)), Err(Error::ZeroFirstSyndrome));

        let f = make_field(37).unwrap();
        let (s1, s4, s7) = (f.elem(3), f.elem(17), f.elem(18));
        assert_eq!(s7, f.elem(1 + 128));
        assert_eq!(product_from_s147(&f, s1, s4, s7), Ok(f.elem(2)));
        let one = f.one();
        assert_eq!(product_from_s147(&f, one, one, one), Ok(f.zero()));

        // beta = zeta alpha with zeta a primitive cube root
        let zeta = f.primitive_element().pow(12);
        let (a, b) = (f.elem(5), f.elem(5) * zeta);
        let s = |k| a.pow(k) + b.pow(k);
        assert_eq!(product_from_s147(&f, s(1), s(4), s(7)), Err(Error::DegenerateDenominator));
        // the direct route
        assert_eq!(s(1) * s(1), a * b);

        let f7 = make_field(7).unwrap();
        assert_eq!(product_from_s147(&f7, one_of(&f7), f7.zero(), f7.zero()), Err(Error::UnsupportedCharacteristic(7)));
    }

    fn one_of(f: &PrimeField) -> FieldElement {
        f.one()
    }

    #[test]
    fn gauss2_named_cases() {
        let code = construct_gauss2(13, None).unwrap();
        let f = *code.field();
        let zero = vec![f.zero(); 9];
        assert_eq!(decode_gauss2(&code, &zero).unwrap().status, DecodeStatus::NoError);

        let pos = |a| code.position_of(f.elem(a)).unwrap();
        // mixed values
        let e = ErrorPattern::from_entries(9, [(pos(4), f.one()), (pos(-6), f.elem(5))]);
        let r = decode_gauss2(&code, &e.to_dense(&f)).unwrap();
        assert_eq!(r.status, DecodeStatus::Corrected);
        assert_eq!(r.pattern.as_ref(), Some(&e));
        // opposite values
        let e = ErrorPattern::from_entries(9, [(pos(1), f.one()), (pos(4), -f.one())]);
        let r = decode_gauss2(&code, &e.to_dense(&f)).unwrap();
        assert_eq!(r.pattern, Some(e));
        assert_eq!(r.codeword.unwrap(), zero);

        let g3 = construct_gauss3(29, None).unwrap();
        assert_eq!(decode_gauss2(&g3, &[g3.field().zero(); 9]), Err(Error::WrongFamily));
    }

    #[test]
    fn bounded_radius_guard() {
        let code = construct_gauss2(13, None).unwrap();
        let zero = vec![code.field().zero(); 9];
        assert_eq!(decode_bounded(&code, &zero, 3), Err(Error::RadiusExceedsGuarantee { t: 3, distance: 5 }));
        assert!(BoundedDecoder::new(&code, 3).is_err());
    }

    #[test]
    fn eisen_alg_routes() {
        let code = construct_eisen_alg(37).unwrap();
        let f = *code.field();
        let n = code.len();
        let e = ErrorPattern::from_entries(n, [(3, f.one()), (7, f.one())]);
        let r = decode_eisen_alg2(&code, &e.to_dense(&f)).unwrap();
        assert_eq!((r.route, r.pattern), (DecodeRoute::Algebraic, Some(e)));

        let e = ErrorPattern::from_entries(n, [(3, f.one()), (7, -f.one())]);
        let r = decode_eisen_alg2(&code, &e.to_dense(&f)).unwrap();
        assert_eq!((r.route, r.pattern), (DecodeRoute::Search, Some(e)));
    }
}
