//! Executable matrix laws.
//!
//! Each law is checked on random sparse instances and compared with
//! [`matrix_equal`] using the semiring's additive identity as the implicit
//! zero. Scalar properties of the semiring carry over to these matrix
//! identities; a failure here means a kernel, not the algebra, is wrong.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ewise_add, ewise_mult, spgemm};
use crate::algebra::{AnySemiring, Scalar, Semiring};
use crate::error::{Error, Result};
use crate::matrix::{matrix_equal, SparseMatrix};
use crate::random::random_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Closure,
    AdditiveCommutativity,
    MultiplicativeCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    ElementwiseDistributivity,
    MatmulDistributivity,
    MatmulAssociativity,
    SpgemmThreadDeterminism,
}

impl Law {
    pub const ALL: [Law; 9] = [
        Law::Closure,
        Law::AdditiveCommutativity,
        Law::MultiplicativeCommutativity,
        Law::AdditiveAssociativity,
        Law::MultiplicativeAssociativity,
        Law::ElementwiseDistributivity,
        Law::MatmulDistributivity,
        Law::MatmulAssociativity,
        Law::SpgemmThreadDeterminism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Closure => "closure",
            Law::AdditiveCommutativity => "additive_commutativity",
            Law::MultiplicativeCommutativity => "multiplicative_commutativity",
            Law::AdditiveAssociativity => "additive_associativity",
            Law::MultiplicativeAssociativity => "multiplicative_associativity",
            Law::ElementwiseDistributivity => "elementwise_distributivity",
            Law::MatmulDistributivity => "matmul_distributivity",
            Law::MatmulAssociativity => "matmul_associativity",
            Law::SpgemmThreadDeterminism => "spgemm_thread_determinism",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Law::Closure => "every output is a valid CSR matrix of the right shape",
            Law::AdditiveCommutativity => "A ⊕ B = B ⊕ A",
            Law::MultiplicativeCommutativity => "A ⊗ B = B ⊗ A",
            Law::AdditiveAssociativity => "(A ⊕ B) ⊕ C = A ⊕ (B ⊕ C)",
            Law::MultiplicativeAssociativity => "(A ⊗ B) ⊗ C = A ⊗ (B ⊗ C)",
            Law::ElementwiseDistributivity => "A ⊗ (B ⊕ C) = (A ⊗ B) ⊕ (A ⊗ C)",
            Law::MatmulDistributivity => "A(B ⊕ C) = (AB) ⊕ (AC)",
            Law::MatmulAssociativity => "(AB)C = A(BC)",
            Law::SpgemmThreadDeterminism => "AB is bitwise identical on 1, 2 and 4 threads",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct LawConfig {
    pub trials: usize,
    /// Upper bound (inclusive) on every random dimension.
    pub max_dim: usize,
    /// Densities are drawn uniformly from `[0, max_density]`.
    pub max_density: f64,
    pub seed: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            trials: 200,
            max_dim: 12,
            max_density: 0.5,
            seed: 0x1a75_5eed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LawOutcome {
    pub law: Law,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub semiring: String,
    pub outcomes: Vec<LawOutcome>,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn outcome(&self, law: Law) -> &LawOutcome {
        self.outcomes.iter().find(|o| o.law == law).expect("every law is reported")
    }
}

struct Tally {
    outcomes: Vec<LawOutcome>,
}

impl Tally {
    fn new(trials: usize) -> Self {
        Tally {
            outcomes: Law::ALL
                .into_iter()
                .map(|law| LawOutcome {
                    law,
                    trials,
                    failures: 0,
                    first_failure: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, law: Law, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            return;
        }
        let o = self.outcomes.iter_mut().find(|o| o.law == law).unwrap();
        o.failures += 1;
        if o.first_failure.is_none() {
            o.first_failure = Some(detail());
        }
    }
}

fn bitwise_equal<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>) -> bool {
    a.shape() == b.shape()
        && a.row_offsets() == b.row_offsets()
        && a.col_indices() == b.col_indices()
        && a.values().iter().zip(b.values()).all(|(x, y)| x.to_bits() == y.to_bits())
}

/// Runs every [`Law`] on `cfg.trials` random instances over `s`.
pub fn check_laws<T: Scalar>(s: &Semiring<T>, cfg: &LawConfig) -> Result<LawReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pools = [1usize, 2, 4]
        .into_iter()
        .map(|p| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(p)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot build a {p}-thread pool: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let zero = s.add_identity();
    let eq = |x: &SparseMatrix<T>, y: &SparseMatrix<T>| matrix_equal(x, y, zero);
    let mut tally = Tally::new(cfg.trials);

    for trial in 0..cfg.trials {
        let dim = |rng: &mut ChaCha8Rng| rng.random_range(0..=cfg.max_dim);
        let (m, k, n, p) = (dim(&mut rng), dim(&mut rng), dim(&mut rng), dim(&mut rng));
        let gen = |rng: &mut ChaCha8Rng, r: usize, c: usize| {
            let density = rng.random_range(0.0..=cfg.max_density);
            random_matrix(rng, r, c, density, |rng| match rng.random_range(0..16u8) {
                0 => s.add_identity(),
                1 => s.mult_identity(),
                _ => T::sample_well_conditioned(rng),
            })
        };

        // Element-wise laws on three m×n operands.
        let (a, b, c) = (gen(&mut rng, m, n), gen(&mut rng, m, n), gen(&mut rng, m, n));
        let ab_add = ewise_add(&a, &b, s)?;
        let ba_add = ewise_add(&b, &a, s)?;
        let ab_mul = ewise_mult(&a, &b, s)?;
        let ba_mul = ewise_mult(&b, &a, s)?;
        let bc_add = ewise_add(&b, &c, s)?;
        let ac_mul = ewise_mult(&a, &c, s)?;
        let lhs_add_assoc = ewise_add(&ab_add, &c, s)?;
        let rhs_add_assoc = ewise_add(&a, &bc_add, s)?;
        let lhs_mul_assoc = ewise_mult(&ab_mul, &c, s)?;
        let rhs_mul_assoc = ewise_mult(&a, &ewise_mult(&b, &c, s)?, s)?;
        let lhs_dist = ewise_mult(&a, &bc_add, s)?;
        let rhs_dist = ewise_add(&ab_mul, &ac_mul, s)?;

        let ctx = || format!("trial {trial}, shape {m}x{n}");
        tally.record(Law::AdditiveCommutativity, eq(&ab_add, &ba_add), || format!("{}: {ab_add:?} vs {ba_add:?}", ctx()));
        tally.record(Law::MultiplicativeCommutativity, eq(&ab_mul, &ba_mul), || format!("{}: {ab_mul:?} vs {ba_mul:?}", ctx()));
        tally.record(Law::AdditiveAssociativity, eq(&lhs_add_assoc, &rhs_add_assoc), ctx);
        tally.record(Law::MultiplicativeAssociativity, eq(&lhs_mul_assoc, &rhs_mul_assoc), ctx);
        tally.record(Law::ElementwiseDistributivity, eq(&lhs_dist, &rhs_dist), ctx);

        // Product laws on A: m×k, B, C: k×n, D: n×p.
        let a = gen(&mut rng, m, k);
        let (b, c) = (gen(&mut rng, k, n), gen(&mut rng, k, n));
        let d = gen(&mut rng, n, p);
        let ab = spgemm(&a, &b, s)?;
        let ac = spgemm(&a, &c, s)?;
        let b_plus_c = ewise_add(&b, &c, s)?;
        let lhs_mm_dist = spgemm(&a, &b_plus_c, s)?;
        let rhs_mm_dist = ewise_add(&ab, &ac, s)?;
        let lhs_mm_assoc = spgemm(&ab, &d, s)?;
        let rhs_mm_assoc = spgemm(&a, &spgemm(&b, &d, s)?, s)?;
        let ctx = || format!("trial {trial}, shapes {m}x{k}, {k}x{n}, {n}x{p}");
        tally.record(Law::MatmulDistributivity, eq(&lhs_mm_dist, &rhs_mm_dist), ctx);
        tally.record(Law::MatmulAssociativity, eq(&lhs_mm_assoc, &rhs_mm_assoc), ctx);

        let closed = [
            (&ab_add, (m, n)),
            (&ab_mul, (m, n)),
            (&lhs_add_assoc, (m, n)),
            (&lhs_dist, (m, n)),
            (&rhs_dist, (m, n)),
            (&ab, (m, n)),
            (&lhs_mm_dist, (m, n)),
            (&lhs_mm_assoc, (m, p)),
            (&rhs_mm_assoc, (m, p)),
        ]
        .iter()
        .all(|(x, shape)| x.shape() == *shape && x.validate().is_ok());
        tally.record(Law::Closure, closed, ctx);

        let per_pool = pools
            .iter()
            .map(|pool| pool.install(|| spgemm(&a, &b, s)))
            .collect::<Result<Vec<_>>>()?;
        let deterministic = per_pool.windows(2).all(|w| bitwise_equal(&w[0], &w[1]));
        tally.record(Law::SpgemmThreadDeterminism, deterministic, ctx);
    }

    Ok(LawReport {
        semiring: s.name().to_string(),
        outcomes: tally.outcomes,
        elapsed: start.elapsed(),
    })
}

/// [`check_laws`] for a semiring chosen at run time.
pub fn check_laws_any(s: &AnySemiring, cfg: &LawConfig) -> Result<LawReport> {
    match s {
        AnySemiring::F64(s) => check_laws(s, cfg),
        AnySemiring::I64(s) => check_laws(s, cfg),
        AnySemiring::Bool(s) => check_laws(s, cfg),
    }
}
