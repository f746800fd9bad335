use core::fmt;

/// Everything that can go wrong while building fields, lattices, codes or
/// running searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime number.
    CompositeModulus(u64),
    /// The modulus is 2; every construction here needs an odd field.
    EvenModulus,
    /// Products of two residues must fit in 64 bits.
    ModulusTooLarge(u64),
    /// A unit subgroup order that is odd or does not divide `p - 1`.
    BadOrder { p: u32, m: u32 },
    /// The prime has the wrong residue class for the requested lattice.
    BadResidueClass { p: u32, modulus: u32 },
    /// A quotient context and weight table disagree about the field.
    KindMismatch,
    /// Value set `A` violates the containment needed by the construction.
    InadmissibleSet,
    /// Value set `A` is not symmetric around zero.
    AsymmetricSet,
    /// No nontrivial value set exists for the prime.
    NoAdmissibleSet,
    /// A field element could not be written as `x + unit*y` with `x, y` in `A`.
    OutsideDomain,
    /// Vector length differs from the code length.
    LengthMismatch { expected: usize, found: usize },
    /// Ball radius above the enumeration guard.
    RadiusTooLarge { radius: u32, max: u32 },
    /// Predicted enumeration size above the configured budget.
    SpaceTooLarge { size: u128, max: u128 },
    /// Newton recursion needs `t < p`.
    CharacteristicTooSmall { t: usize, p: u32 },
    /// The identity divides by a constant that vanishes in this field.
    UnsupportedCharacteristic(u32),
    /// The first power sum is zero.
    ZeroFirstSyndrome,
    /// `S1^4 + S4` vanishes, i.e. the two locators differ by a cube root of unity.
    DegenerateDenominator,
    /// Requested correction radius is not below half the guaranteed distance.
    RadiusExceedsGuarantee { t: u32, distance: u32 },
    /// Decoder called on a code of another family.
    WrongFamily,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CompositeModulus(p) => write!(f, "modulus {p} is not prime"),
            Error::EvenModulus => write!(f, "modulus must be an odd prime"),
            Error::ModulusTooLarge(p) => write!(f, "modulus {p} must be below 2^31"),
            Error::BadOrder { p, m } => {
                write!(f, "no subgroup of order {m} in F_{p}* with -1 in it")
            }
            Error::BadResidueClass { p, modulus } => {
                write!(f, "p = {p} ≢ 1 (mod {modulus})")
            }
            Error::KindMismatch => write!(f, "weight table and lattice context do not match"),
            Error::InadmissibleSet => write!(f, "value set does not give a usable code"),
            Error::AsymmetricSet => write!(f, "value set must satisfy -A = A"),
            Error::NoAdmissibleSet => write!(f, "no admissible value set for this prime"),
            Error::OutsideDomain => write!(f, "element has no decomposition over the value set"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, got {found}")
            }
            Error::RadiusTooLarge { radius, max } => {
                write!(f, "radius {radius} exceeds the enumeration limit {max}")
            }
            Error::SpaceTooLarge { size, max } => {
                write!(f, "search space of {size} elements exceeds the limit {max}")
            }
            Error::CharacteristicTooSmall { t, p } => {
                write!(f, "cannot recover {t} locator coefficients in characteristic {p}")
            }
            Error::UnsupportedCharacteristic(p) => {
                write!(f, "identity is undefined in characteristic {p}")
            }
            Error::ZeroFirstSyndrome => write!(f, "first syndrome is zero"),
            Error::DegenerateDenominator => write!(f, "S1^4 + S4 vanishes"),
            Error::RadiusExceedsGuarantee { t, distance } => {
                write!(f, "cannot correct {t} errors with guaranteed distance {distance}")
            }
            Error::WrongFamily => write!(f, "decoder does not apply to this code family"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
