//! Flag verification and the matrix law suite for every builtin semiring.

use graphblas::algebra::{BuiltinSemiring, CONSTRUCTION_SAMPLES};
use graphblas::kernels::laws::{check_laws_any, LawConfig};

fn main() -> graphblas::Result<()> {
    println!("scalar flags ({CONSTRUCTION_SAMPLES} samples each):");
    for b in BuiltinSemiring::ALL {
        let report = b.semiring().verify_flags(CONSTRUCTION_SAMPLES);
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.flag.name()).collect();
        println!("  {:<16} {}", b.name(), if failed.is_empty() { "all pass".to_string() } else { failed.join(", ") });
    }

    let cfg = LawConfig { trials: 100, ..LawConfig::default() };
    for b in BuiltinSemiring::ALL {
        let report = check_laws_any(&b.semiring(), &cfg)?;
        println!("\n{} ({:.1?})", report.semiring, report.elapsed);
        for o in &report.outcomes {
            println!("  {:<48} {:>4}/{:<4} {}", o.law.statement(), o.trials - o.failures, o.trials, if o.passed() { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}
