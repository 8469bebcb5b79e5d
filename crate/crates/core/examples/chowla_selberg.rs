//! The Γ-value product for p = 5 and 7, with the reflection sanity check.
use genus_one::numeric;

fn main() -> genus_one::Result<()> {
    for p in [5, 7] {
        let v = numeric::chowla_selberg_log(p, 160)?;
        let r = numeric::reflection_check(p, 160)?;
        println!("p={p}: sigma = {}, log value = {} (err <= {})", v.data.sigma, v.value.value, v.value.err);
        for k in 1..p {
            println!("  exponent of Gamma({k}/{p}): {}", v.data.total_exponent(k));
        }
        println!("  reflection passed: {} (difference {})", r.passed, r.diff);
    }
    Ok(())
}
