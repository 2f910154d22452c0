//! Scalar domains and the semirings that parameterize every kernel.
//!
//! A [`Semiring`] is a closed record of an additive monoid (`add`,
//! `add_identity`) and a multiplicative operation (`mult`,
//! `mult_identity`) over one [`Scalar`] domain. The additive identity is the
//! implicit value of every absent sparse entry.
//!
//! Floating-point `add` is declared associative even though IEEE addition is
//! only approximately so. Flag verification and law checks on `f64` compare
//! with a relative tolerance of [`FLOAT_REL_TOL`]; checks that need exact
//! equality use the integer and boolean semirings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Relative tolerance used whenever two `f64` scalars are compared.
pub const FLOAT_REL_TOL: f64 = 1e-12;

/// Reserved `+∞` of the `min_plus_i64` semiring.
pub const POS_INF: i64 = i64::MAX;

/// Reserved `−∞` of the `max_plus_i64` and `max_min_i64` semirings.
pub const NEG_INF: i64 = i64::MIN;

/// Number of random samples used when a semiring is constructed.
pub const CONSTRUCTION_SAMPLES: usize = 1000;

const CONSTRUCTION_SEED: u64 = 0x5eed_a1ce;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    F64,
    I64,
    Bool,
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarDomain::F64 => "f64",
            ScalarDomain::I64 => "i64",
            ScalarDomain::Bool => "bool",
        })
    }
}

/// A value that can live in a sparse matrix and be combined by a semiring.
pub trait Scalar: Copy + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const DOMAIN: ScalarDomain;

    /// Equality used by law checks: exact for integers and booleans,
    /// relative [`FLOAT_REL_TOL`] for floats.
    fn approx_eq(self, other: Self) -> bool;

    /// Stable bit pattern, used for bitwise determinism checks and checksums.
    fn to_bits(self) -> u64;

    /// A small "ordinary" value for randomized checks.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Values for matrix-level law checks. Floats stay positive so sums of
    /// products never cancel.
    fn sample_well_conditioned<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::sample(rng)
    }
}

impl Scalar for f64 {
    const DOMAIN: ScalarDomain = ScalarDomain::F64;

    fn approx_eq(self, other: Self) -> bool {
        if self == other {
            return true;
        }
        let scale = self.abs().max(other.abs());
        (self - other).abs() <= FLOAT_REL_TOL * scale
    }

    fn to_bits(self) -> u64 {
        f64::to_bits(self)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        // Mixed-sign small integers are exact in f64; arbitrary positive
        // fractions avoid catastrophic cancellation.
        if rng.random_bool(0.5) {
            rng.random_range(-100i32..=100) as f64
        } else {
            rng.random_range(0.5..2.0)
        }
    }

    fn sample_well_conditioned<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_range(0.5..2.0)
    }
}

impl Scalar for i64 {
    const DOMAIN: ScalarDomain = ScalarDomain::I64;

    fn approx_eq(self, other: Self) -> bool {
        self == other
    }

    fn to_bits(self) -> u64 {
        self as u64
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_range(-1000..=1000)
    }
}

impl Scalar for bool {
    const DOMAIN: ScalarDomain = ScalarDomain::Bool;

    fn approx_eq(self, other: Self) -> bool {
        self == other
    }

    fn to_bits(self) -> u64 {
        self as u64
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random_bool(0.5)
    }
}

/// Declared algebraic properties of a semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiringFlags {
    pub add_commutative: bool,
    pub add_associative: bool,
    pub mult_commutative: bool,
    pub mult_associative: bool,
    pub distributive: bool,
    pub add_identity_annihilates_mult: bool,
}

impl SemiringFlags {
    /// Every flag set: a commutative semiring whose zero annihilates.
    pub const ALL: SemiringFlags = SemiringFlags {
        add_commutative: true,
        add_associative: true,
        mult_commutative: true,
        mult_associative: true,
        distributive: true,
        add_identity_annihilates_mult: true,
    };

    pub const NONE: SemiringFlags = SemiringFlags {
        add_commutative: false,
        add_associative: false,
        mult_commutative: false,
        mult_associative: false,
        distributive: false,
        add_identity_annihilates_mult: false,
    };

    fn declared(&self) -> Vec<Flag> {
        Flag::ALL
            .into_iter()
            .filter(|f| match f {
                Flag::AddCommutative => self.add_commutative,
                Flag::AddAssociative => self.add_associative,
                Flag::MultCommutative => self.mult_commutative,
                Flag::MultAssociative => self.mult_associative,
                Flag::Distributive => self.distributive,
                Flag::AddIdentityAnnihilatesMult => self.add_identity_annihilates_mult,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    AddCommutative,
    AddAssociative,
    MultCommutative,
    MultAssociative,
    Distributive,
    AddIdentityAnnihilatesMult,
}

impl Flag {
    pub const ALL: [Flag; 6] = [
        Flag::AddCommutative,
        Flag::AddAssociative,
        Flag::MultCommutative,
        Flag::MultAssociative,
        Flag::Distributive,
        Flag::AddIdentityAnnihilatesMult,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::AddCommutative => "add_commutative",
            Flag::AddAssociative => "add_associative",
            Flag::MultCommutative => "mult_commutative",
            Flag::MultAssociative => "mult_associative",
            Flag::Distributive => "distributive",
            Flag::AddIdentityAnnihilatesMult => "add_identity_annihilates_mult",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An `add`/`mult` pair over the scalar domain `T`.
///
/// Semirings are plain values built from function pointers, so they are
/// `Copy` and can be shared freely across threads.
#[derive(Clone, Copy)]
pub struct Semiring<T: Scalar> {
    name: &'static str,
    add: fn(T, T) -> T,
    add_identity: T,
    mult: fn(T, T) -> T,
    mult_identity: T,
    flags: SemiringFlags,
}

impl<T: Scalar> fmt::Debug for Semiring<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semiring")
            .field("name", &self.name)
            .field("domain", &T::DOMAIN)
            .field("add_identity", &self.add_identity)
            .field("mult_identity", &self.mult_identity)
            .field("flags", &self.flags)
            .finish()
    }
}

impl<T: Scalar> Semiring<T> {
    /// Builds a semiring and checks every declared flag on
    /// [`CONSTRUCTION_SAMPLES`] random scalars. A flag that fails, or an
    /// `add_identity` that is not absorbed by `add`, is an error.
    pub fn new(
        name: &'static str,
        add: fn(T, T) -> T,
        add_identity: T,
        mult: fn(T, T) -> T,
        mult_identity: T,
        flags: SemiringFlags,
    ) -> Result<Self> {
        let s = Self::new_unchecked(name, add, add_identity, mult, mult_identity, flags);
        let mut rng = ChaCha8Rng::seed_from_u64(CONSTRUCTION_SEED);
        for _ in 0..CONSTRUCTION_SAMPLES {
            let x = s.sample(&mut rng);
            if !s.add(add_identity, x).approx_eq(x) || !s.add(x, add_identity).approx_eq(x) {
                return Err(Error::SemiringLaw {
                    semiring: name.to_string(),
                    law: "add_identity".into(),
                    detail: format!("add({add_identity}, {x}) != {x}"),
                });
            }
        }
        let report = s.verify_flags(CONSTRUCTION_SAMPLES);
        if let Some(failed) = report.checks.iter().find(|c| !c.passed) {
            return Err(Error::SemiringLaw {
                semiring: name.to_string(),
                law: failed.flag.name().into(),
                detail: failed.counterexample.clone().unwrap_or_default(),
            });
        }
        Ok(s)
    }

    /// Builds a semiring without checking its declared flags.
    pub fn new_unchecked(
        name: &'static str,
        add: fn(T, T) -> T,
        add_identity: T,
        mult: fn(T, T) -> T,
        mult_identity: T,
        flags: SemiringFlags,
    ) -> Self {
        Semiring {
            name,
            add,
            add_identity,
            mult,
            mult_identity,
            flags,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn domain(&self) -> ScalarDomain {
        T::DOMAIN
    }

    #[inline]
    pub fn add(&self, a: T, b: T) -> T {
        (self.add)(a, b)
    }

    #[inline]
    pub fn mult(&self, a: T, b: T) -> T {
        (self.mult)(a, b)
    }

    #[inline]
    pub fn add_identity(&self) -> T {
        self.add_identity
    }

    #[inline]
    pub fn mult_identity(&self) -> T {
        self.mult_identity
    }

    pub fn flags(&self) -> SemiringFlags {
        self.flags
    }

    #[inline]
    pub fn is_add_identity(&self, x: T) -> bool {
        x == self.add_identity
    }

    /// Random scalar for checks; one draw in eight is one of the identities.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> T {
        match rng.random_range(0..16u8) {
            0 => self.add_identity,
            1 => self.mult_identity,
            _ => T::sample(rng),
        }
    }

    /// Checks every declared flag on `samples` random scalar triples.
    pub fn verify_flags(&self, samples: usize) -> FlagReport {
        self.verify_flags_seeded(samples, CONSTRUCTION_SEED ^ 0x9e37_79b9)
    }

    pub fn verify_flags_seeded(&self, samples: usize, seed: u64) -> FlagReport {
        let samples = samples.max(1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checks = Vec::new();
        for flag in self.flags.declared() {
            let mut counterexample = None;
            for _ in 0..samples {
                let (a, b, c) = (self.sample(&mut rng), self.sample(&mut rng), self.sample(&mut rng));
                if let Some(msg) = self.check_flag(flag, a, b, c) {
                    counterexample = Some(msg);
                    break;
                }
            }
            checks.push(FlagCheck {
                flag,
                passed: counterexample.is_none(),
                samples,
                counterexample,
            });
        }
        FlagReport {
            semiring: self.name.to_string(),
            checks,
        }
    }

    /// Evaluates one flag on one triple; `Some` carries the counterexample.
    pub fn check_flag(&self, flag: Flag, a: T, b: T, c: T) -> Option<String> {
        let (lhs, rhs, what) = match flag {
            Flag::AddCommutative => (self.add(a, b), self.add(b, a), format!("a={a}, b={b}")),
            Flag::AddAssociative => (
                self.add(self.add(a, b), c),
                self.add(a, self.add(b, c)),
                format!("a={a}, b={b}, c={c}"),
            ),
            Flag::MultCommutative => (self.mult(a, b), self.mult(b, a), format!("a={a}, b={b}")),
            Flag::MultAssociative => (
                self.mult(self.mult(a, b), c),
                self.mult(a, self.mult(b, c)),
                format!("a={a}, b={b}, c={c}"),
            ),
            Flag::Distributive => (
                self.mult(a, self.add(b, c)),
                self.add(self.mult(a, b), self.mult(a, c)),
                format!("a={a}, b={b}, c={c}"),
            ),
            Flag::AddIdentityAnnihilatesMult => {
                let z = self.add_identity;
                let l = self.mult(z, a);
                let r = self.mult(a, z);
                if l.approx_eq(z) && r.approx_eq(z) {
                    return None;
                }
                return Some(format!("mult({z}, {a}) = {l}, mult({a}, {z}) = {r}"));
            }
        };
        if lhs.approx_eq(rhs) {
            None
        } else {
            Some(format!("{what}: {lhs} != {rhs}"))
        }
    }
}

#[derive(Debug, Clone)]
pub struct FlagCheck {
    pub flag: Flag,
    pub passed: bool,
    pub samples: usize,
    pub counterexample: Option<String>,
}

/// Outcome of [`Semiring::verify_flags`]; one entry per declared flag.
#[derive(Debug, Clone)]
pub struct FlagReport {
    pub semiring: String,
    pub checks: Vec<FlagCheck>,
}

impl FlagReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, flag: Flag) -> Option<&FlagCheck> {
        self.checks.iter().find(|c| c.flag == flag)
    }
}

fn min_plus_mult(a: i64, b: i64) -> i64 {
    if a == POS_INF || b == POS_INF {
        return POS_INF;
    }
    a.saturating_add(b)
}

fn max_plus_mult(a: i64, b: i64) -> i64 {
    if a == NEG_INF || b == NEG_INF {
        return NEG_INF;
    }
    a.saturating_add(b)
}

pub fn plus_times_f64() -> Semiring<f64> {
    Semiring::new_unchecked("plus_times_f64", |a, b| a + b, 0.0, |a, b| a * b, 1.0, SemiringFlags::ALL)
}

/// Integer ring with wrapping arithmetic, so the laws hold exactly even on
/// overflow.
pub fn plus_times_i64() -> Semiring<i64> {
    Semiring::new_unchecked(
        "plus_times_i64",
        i64::wrapping_add,
        0,
        i64::wrapping_mul,
        1,
        SemiringFlags::ALL,
    )
}

pub fn or_and_bool() -> Semiring<bool> {
    Semiring::new_unchecked("or_and_bool", |a, b| a | b, false, |a, b| a & b, true, SemiringFlags::ALL)
}

/// Tropical semiring; [`POS_INF`] is the additive identity and `⊗` saturates
/// to it.
pub fn min_plus_i64() -> Semiring<i64> {
    Semiring::new_unchecked("min_plus_i64", i64::min, POS_INF, min_plus_mult, 0, SemiringFlags::ALL)
}

pub fn max_plus_i64() -> Semiring<i64> {
    Semiring::new_unchecked("max_plus_i64", i64::max, NEG_INF, max_plus_mult, 0, SemiringFlags::ALL)
}

pub fn max_min_i64() -> Semiring<i64> {
    Semiring::new_unchecked("max_min_i64", i64::max, NEG_INF, i64::min, POS_INF, SemiringFlags::ALL)
}

/// The six semirings shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinSemiring {
    PlusTimesF64,
    PlusTimesI64,
    OrAndBool,
    MinPlusI64,
    MaxPlusI64,
    MaxMinI64,
}

impl BuiltinSemiring {
    pub const ALL: [BuiltinSemiring; 6] = [
        BuiltinSemiring::PlusTimesF64,
        BuiltinSemiring::PlusTimesI64,
        BuiltinSemiring::OrAndBool,
        BuiltinSemiring::MinPlusI64,
        BuiltinSemiring::MaxPlusI64,
        BuiltinSemiring::MaxMinI64,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinSemiring::PlusTimesF64 => "plus_times_f64",
            BuiltinSemiring::PlusTimesI64 => "plus_times_i64",
            BuiltinSemiring::OrAndBool => "or_and_bool",
            BuiltinSemiring::MinPlusI64 => "min_plus_i64",
            BuiltinSemiring::MaxPlusI64 => "max_plus_i64",
            BuiltinSemiring::MaxMinI64 => "max_min_i64",
        }
    }

    pub fn semiring(self) -> AnySemiring {
        match self {
            BuiltinSemiring::PlusTimesF64 => AnySemiring::F64(plus_times_f64()),
            BuiltinSemiring::PlusTimesI64 => AnySemiring::I64(plus_times_i64()),
            BuiltinSemiring::OrAndBool => AnySemiring::Bool(or_and_bool()),
            BuiltinSemiring::MinPlusI64 => AnySemiring::I64(min_plus_i64()),
            BuiltinSemiring::MaxPlusI64 => AnySemiring::I64(max_plus_i64()),
            BuiltinSemiring::MaxMinI64 => AnySemiring::I64(max_min_i64()),
        }
    }
}

impl FromStr for BuiltinSemiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinSemiring::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownSemiring(s.to_string()))
    }
}

impl fmt::Display for BuiltinSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A semiring over any of the supported scalar domains.
#[derive(Debug, Clone, Copy)]
pub enum AnySemiring {
    F64(Semiring<f64>),
    I64(Semiring<i64>),
    Bool(Semiring<bool>),
}

impl AnySemiring {
    pub fn name(&self) -> &'static str {
        match self {
            AnySemiring::F64(s) => s.name(),
            AnySemiring::I64(s) => s.name(),
            AnySemiring::Bool(s) => s.name(),
        }
    }

    pub fn domain(&self) -> ScalarDomain {
        match self {
            AnySemiring::F64(_) => ScalarDomain::F64,
            AnySemiring::I64(_) => ScalarDomain::I64,
            AnySemiring::Bool(_) => ScalarDomain::Bool,
        }
    }

    pub fn verify_flags(&self, samples: usize) -> FlagReport {
        match self {
            AnySemiring::F64(s) => s.verify_flags(samples),
            AnySemiring::I64(s) => s.verify_flags(samples),
            AnySemiring::Bool(s) => s.verify_flags(samples),
        }
    }
}

/// Looks up one of the builtin semirings by its CLI name.
pub fn builtin_semiring(name: &str) -> Result<AnySemiring> {
    Ok(name.parse::<BuiltinSemiring>()?.semiring())
}

/// Name-indexed catalogue: the builtins plus user-registered semirings.
#[derive(Debug, Clone)]
pub struct SemiringRegistry {
    entries: BTreeMap<String, AnySemiring>,
}

impl Default for SemiringRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl SemiringRegistry {
    pub fn with_builtins() -> Self {
        let entries = BuiltinSemiring::ALL
            .into_iter()
            .map(|b| (b.name().to_string(), b.semiring()))
            .collect();
        SemiringRegistry { entries }
    }

    /// Adds a user-defined semiring. Its declared flags are re-verified;
    /// names may not shadow an existing entry.
    pub fn register(&mut self, semiring: AnySemiring) -> Result<()> {
        let name = semiring.name();
        if self.entries.contains_key(name) {
            return Err(Error::InvalidArgument(format!("semiring {name:?} is already registered")));
        }
        let report = semiring.verify_flags(CONSTRUCTION_SAMPLES);
        if let Some(failed) = report.checks.iter().find(|c| !c.passed) {
            return Err(Error::SemiringLaw {
                semiring: name.to_string(),
                law: failed.flag.name().into(),
                detail: failed.counterexample.clone().unwrap_or_default(),
            });
        }
        self.entries.insert(name.to_string(), semiring);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<AnySemiring> {
        self.entries
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSemiring(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}
