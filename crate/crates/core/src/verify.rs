//! Exhaustive desk-scale verification of the linearity propositions, the
//! two fractal-membership theorems, and the digit/geometry oracle
//! equivalences.
//!
//! Enumeration is lexicographic over digit strings so counterexample lists
//! are reproducible. The pair space is partitioned by outer index across
//! worker threads; each worker is pure and partial results are merged in
//! worker order, so reports are identical for any `--jobs` value.

use std::fmt;
use std::time::Instant;

use crate::digitvec::{DigitVec2, DigitVec3};
use crate::egyptian::{sigma_of_digits2, sigma_of_digits3};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fractal::{
    digit_member_sierpinski, digit_member_snowflake, sierpinski_member, snowflake_member, Point,
};
use crate::numeral::{frac_value2, frac_value3};

/// Outcome of one exhaustive run.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Property identifier (`sum2`, `sum3`, `thm1`, `thm2`, `lemmas`).
    pub property: String,
    /// Human description of the search space.
    pub space: String,
    /// Number of cases examined.
    pub checked: u64,
    /// Counterexample inputs, in enumeration order; empty on success.
    pub violations: Vec<String>,
    /// Named counts gathered during the run, in a fixed order.
    pub stats: Vec<(String, u64)>,
    /// Wall-clock duration of the enumeration.
    pub millis: u128,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn stat(&self, name: &str) -> Option<u64> {
        self.stats
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    /// One-line machine-readable summary for CI assertions.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "property={} space=\"{}\" checked={} violations={}",
            self.property,
            self.space,
            self.checked,
            self.violations.len()
        );
        for (name, value) in &self.stats {
            line.push_str(&format!(" {name}={value}"));
        }
        line.push_str(&format!(" millis={} pass={}", self.millis, self.pass()));
        line
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property: {}", self.property)?;
        writeln!(f, "space: {}", self.space)?;
        writeln!(f, "checked: {}", self.checked)?;
        writeln!(f, "violations: {}", self.violations.len())?;
        for v in self.violations.iter().take(10) {
            writeln!(f, "  counterexample: {v}")?;
        }
        if self.violations.len() > 10 {
            writeln!(f, "  ... {} more", self.violations.len() - 10)?;
        }
        for (name, value) in &self.stats {
            writeln!(f, "{name}: {value}")?;
        }
        writeln!(f, "millis: {}", self.millis)?;
        write!(f, "result: {}", if self.pass() { "PASS" } else { "FAIL" })
    }
}

/// Per-worker accumulator.
struct Partial {
    checked: u64,
    violations: Vec<String>,
    counters: Vec<u64>,
}

impl Partial {
    fn new(slots: usize) -> Self {
        Partial {
            checked: 0,
            violations: Vec::new(),
            counters: vec![0; slots],
        }
    }
}

fn effective_jobs(jobs: usize) -> usize {
    if jobs == 0 {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    } else {
        jobs
    }
}

/// Splits `0..total` into contiguous ranges, runs `work` on each in its own
/// thread, and merges partials in range order. The merge is a plain sum and
/// concatenation, so results do not depend on the number of workers.
fn run_partitioned<W>(total: u64, jobs: usize, slots: usize, work: W) -> Partial
where
    W: Fn(std::ops::Range<u64>, &mut Partial) + Sync,
{
    let jobs = effective_jobs(jobs).max(1).min(total.max(1) as usize);
    let chunk = total.div_ceil(jobs as u64).max(1);
    let ranges: Vec<std::ops::Range<u64>> = (0..jobs as u64)
        .map(|i| (i * chunk).min(total)..((i + 1) * chunk).min(total))
        .filter(|r| !r.is_empty())
        .collect();
    let partials: Vec<Partial> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| {
                let work = &work;
                scope.spawn(move || {
                    let mut partial = Partial::new(slots);
                    work(range, &mut partial);
                    partial
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = Partial::new(slots);
    for p in partials {
        merged.checked += p.checked;
        merged.violations.extend(p.violations);
        for (slot, value) in merged.counters.iter_mut().zip(p.counters) {
            *slot += value;
        }
    }
    merged
}

/// All Z2 vectors of length <= max_len with their sigma values, indexed by
/// mask.
fn sigma_table2(max_len: u32) -> Vec<Rational> {
    (0..(1u64 << max_len))
        .map(|m| sigma_of_digits2(&DigitVec2::from_mask(m)))
        .collect()
}

/// Z3 vector for an enumeration index: digit at position j is
/// (idx / 3^j) % 3 - 1.
fn vec3_of_index(idx: u64, len: u32) -> DigitVec3 {
    let mut digits = Vec::with_capacity(len as usize);
    let mut rest = idx;
    for _ in 0..len {
        digits.push((rest % 3) as i8 - 1);
        rest /= 3;
    }
    DigitVec3::new(digits).expect("digits in range")
}

/// Exhaustive check of the Z2 linearity criterion: the sum rule is linear
/// on a pair exactly when the agreement vector is empty. Enumerates all
/// 2^max_len x 2^max_len pairs.
pub fn verify_prop_sum2(max_len: u32, jobs: usize) -> Result<VerificationReport> {
    if max_len > 12 {
        return Err(Error::Resource(format!(
            "sum2 enumeration capped at length 12, got {max_len}"
        )));
    }
    let start = Instant::now();
    let sigma = sigma_table2(max_len);
    let count = 1u64 << max_len;
    let merged = run_partitioned(count, jobs, 1, |range, partial| {
        for a in range {
            let sa = &sigma[a as usize];
            for b in 0..count {
                partial.checked += 1;
                let lhs = sa + &sigma[b as usize];
                let rhs = &sigma[(a ^ b) as usize];
                let linear = &lhs == rhs;
                let z_empty = a & b == 0;
                if linear {
                    partial.counters[0] += 1;
                }
                if linear != z_empty {
                    partial.violations.push(format!(
                        "x={} y={} lhs={} rhs={} z_empty={}",
                        DigitVec2::from_mask(a),
                        DigitVec2::from_mask(b),
                        lhs,
                        rhs,
                        z_empty
                    ));
                }
            }
        }
    });
    Ok(VerificationReport {
        property: "sum2".into(),
        space: format!("all pairs of Z2 digit vectors of length <= {max_len}"),
        checked: merged.checked,
        violations: merged.violations,
        stats: vec![("linear_pairs".into(), merged.counters[0])],
        millis: start.elapsed().as_millis(),
    })
}

/// Exhaustive check of the Z3 linearity criterion: empty agreement vector
/// implies linearity, and linearity implies sigma(h(z)) = 0. Also counts
/// converse-probe hits (sigma(h(z)) = 0, z nonempty, not linear) without
/// judging them.
pub fn verify_prop_sum3(max_len: u32, jobs: usize) -> Result<VerificationReport> {
    if max_len > 8 {
        return Err(Error::Resource(format!(
            "sum3 enumeration capped at length 8, got {max_len}"
        )));
    }
    let start = Instant::now();
    let count = 3u64.pow(max_len);
    let vectors: Vec<DigitVec3> = (0..count).map(|i| vec3_of_index(i, max_len)).collect();
    let sigma: Vec<Rational> = vectors.iter().map(sigma_of_digits3).collect();
    // index of the all-zero vector: every digit slot holds offset 1
    let zero_idx: u64 = (0..max_len).map(|j| 3u64.pow(j)).sum();
    let pow3: Vec<u64> = (0..max_len).map(|j| 3u64.pow(j)).collect();
    let zero = Rational::zero();
    let merged = run_partitioned(count, jobs, 3, |range, partial| {
        for a in range {
            let sa = &sigma[a as usize];
            let va = &vectors[a as usize];
            for b in 0..count {
                partial.checked += 1;
                let vb = &vectors[b as usize];
                // componentwise balanced sum and agreement, as indices
                let mut sum_idx = 0u64;
                let mut z_idx = 0u64;
                for (j, p) in pow3.iter().enumerate() {
                    let da = va.digit(j + 1);
                    let db = vb.digit(j + 1);
                    let s = match da + db {
                        2 => -1,
                        -2 => 1,
                        d => d,
                    };
                    let z = if da == 1 && db == 1 {
                        1
                    } else if da == -1 && db == -1 {
                        -1
                    } else {
                        0
                    };
                    sum_idx += (s + 1) as u64 * p;
                    z_idx += (z + 1) as u64 * p;
                }
                let lhs = sa + &sigma[b as usize];
                let linear = lhs == sigma[sum_idx as usize];
                let z_empty = z_idx == zero_idx;
                let sigma_z = &sigma[z_idx as usize];
                if z_empty {
                    partial.counters[0] += 1;
                    if !linear {
                        partial.violations.push(format!(
                            "part (a): x={va} y={vb} z empty but not linear"
                        ));
                    }
                }
                if linear {
                    partial.counters[1] += 1;
                    if sigma_z != &zero {
                        partial.violations.push(format!(
                            "part (b): x={va} y={vb} linear but sigma(h(z)) = {sigma_z}"
                        ));
                    }
                }
                if sigma_z == &zero && !z_empty && !linear {
                    partial.counters[2] += 1;
                }
            }
        }
    });
    Ok(VerificationReport {
        property: "sum3".into(),
        space: format!("all pairs of Z3 digit vectors of length <= {max_len}"),
        checked: merged.checked,
        violations: merged.violations,
        stats: vec![
            ("z_empty_pairs".into(), merged.counters[0]),
            ("linear_pairs".into(), merged.counters[1]),
            ("converse_probe".into(), merged.counters[2]),
        ],
        millis: start.elapsed().as_millis(),
    })
}

/// Exhaustive check that every linear Z2 pair lands in the Sierpinski
/// approximant at depth max_len + extra_depth, plus the negative control:
/// non-linear pairs always fail the finite digit condition.
pub fn verify_theorem_main(
    max_len: u32,
    extra_depth: u32,
    jobs: usize,
) -> Result<VerificationReport> {
    if max_len > 10 {
        return Err(Error::Resource(format!(
            "thm1 enumeration capped at length 10, got {max_len}"
        )));
    }
    let start = Instant::now();
    let sigma = sigma_table2(max_len);
    let values: Vec<Rational> = (0..(1u64 << max_len))
        .map(|m| frac_value2(&DigitVec2::from_mask(m)))
        .collect();
    let count = 1u64 << max_len;
    let depth = max_len + extra_depth;
    let merged = run_partitioned(count, jobs, 2, |range, partial| {
        for a in range {
            let x = DigitVec2::from_mask(a);
            for b in 0..count {
                partial.checked += 1;
                let y = DigitVec2::from_mask(b);
                let lhs = &sigma[a as usize] + &sigma[b as usize];
                let linear = lhs == sigma[(a ^ b) as usize];
                if linear {
                    partial.counters[0] += 1;
                    let p = Point::new(values[a as usize].clone(), values[b as usize].clone());
                    if sierpinski_member(&p, depth).member {
                        partial.counters[1] += 1;
                    } else {
                        partial.violations.push(format!(
                            "linear pair x={x} y={y} rejected by the depth-{depth} oracle at {p}"
                        ));
                    }
                } else if digit_member_sierpinski(&x, &y, false) {
                    partial.violations.push(format!(
                        "negative control: non-linear pair x={x} y={y} passes the digit condition"
                    ));
                }
            }
        }
    });
    Ok(VerificationReport {
        property: "thm1".into(),
        space: format!(
            "all pairs of Z2 digit vectors of length <= {max_len}, geometric depth {depth}"
        ),
        checked: merged.checked,
        violations: merged.violations,
        stats: vec![
            ("linear_pairs".into(), merged.counters[0]),
            ("members".into(), merged.counters[1]),
        ],
        millis: start.elapsed().as_millis(),
    })
}

/// Exhaustive check that every Z3 pair with an empty agreement vector lands
/// in the snowflake approximant at depth max_len + extra_depth.
pub fn verify_theorem_snowflake(
    max_len: u32,
    extra_depth: u32,
    jobs: usize,
) -> Result<VerificationReport> {
    if max_len > 6 {
        return Err(Error::Resource(format!(
            "thm2 enumeration capped at length 6, got {max_len}"
        )));
    }
    let start = Instant::now();
    let count = 3u64.pow(max_len);
    let vectors: Vec<DigitVec3> = (0..count).map(|i| vec3_of_index(i, max_len)).collect();
    let values: Vec<Rational> = vectors.iter().map(frac_value3).collect();
    let depth = max_len + extra_depth;
    let merged = run_partitioned(count, jobs, 2, |range, partial| {
        for a in range {
            let va = &vectors[a as usize];
            for b in 0..count {
                partial.checked += 1;
                let vb = &vectors[b as usize];
                let z_empty = crate::digitvec::agreement3(va, vb).is_empty();
                if !z_empty {
                    continue;
                }
                partial.counters[0] += 1;
                let p = Point::new(values[a as usize].clone(), values[b as usize].clone());
                match snowflake_member(&p, depth) {
                    Ok(m) if m.member => partial.counters[1] += 1,
                    _ => partial.violations.push(format!(
                        "z-empty pair x={va} y={vb} rejected by the depth-{depth} oracle at {p}"
                    )),
                }
            }
        }
    });
    Ok(VerificationReport {
        property: "thm2".into(),
        space: format!(
            "all pairs of Z3 digit vectors of length <= {max_len}, geometric depth {depth}"
        ),
        checked: merged.checked,
        violations: merged.violations,
        stats: vec![
            ("z_empty_pairs".into(), merged.counters[0]),
            ("members".into(), merged.counters[1]),
        ],
        millis: start.elapsed().as_millis(),
    })
}

/// Exhaustive equivalence of the digit oracles (with dual-tail search) and
/// the geometric oracles, both fractals. Base 2 runs at length
/// min(max_len, 8), base 3 at length min(max_len, 5), each against the
/// geometric approximant of the same depth.
pub fn verify_lemma_oracles(max_len: u32, jobs: usize) -> Result<VerificationReport> {
    if max_len > 8 {
        return Err(Error::Resource(format!(
            "lemma enumeration capped at length 8, got {max_len}"
        )));
    }
    let start = Instant::now();
    let len2 = max_len.min(8);
    let len3 = max_len.min(5);

    let count2 = 1u64 << len2;
    let merged2 = run_partitioned(count2, jobs, 2, |range, partial| {
        for a in range {
            let x = DigitVec2::from_mask(a);
            let vx = frac_value2(&x);
            for b in 0..count2 {
                partial.checked += 1;
                let y = DigitVec2::from_mask(b);
                let p = Point::new(vx.clone(), frac_value2(&y));
                let digit = digit_member_sierpinski(&x, &y, true);
                let geo = sierpinski_member(&p, len2).member;
                if digit {
                    partial.counters[0] += 1;
                }
                if digit != geo {
                    partial.violations.push(format!(
                        "sierpinski x={x} y={y}: digit={digit} geometric={geo} at {p}"
                    ));
                }
            }
        }
    });

    let count3 = 3u64.pow(len3);
    let vectors: Vec<DigitVec3> = (0..count3).map(|i| vec3_of_index(i, len3)).collect();
    let values: Vec<Rational> = vectors.iter().map(frac_value3).collect();
    let merged3 = run_partitioned(count3, jobs, 2, |range, partial| {
        for a in range {
            let x = &vectors[a as usize];
            for b in 0..count3 {
                partial.checked += 1;
                let y = &vectors[b as usize];
                let p = Point::new(values[a as usize].clone(), values[b as usize].clone());
                let digit = digit_member_snowflake(x, y, true);
                let geo = snowflake_member(&p, len3)
                    .map(|m| m.member)
                    .unwrap_or(false);
                if digit {
                    partial.counters[0] += 1;
                }
                if digit != geo {
                    partial.violations.push(format!(
                        "snowflake x={x} y={y}: digit={digit} geometric={geo} at {p}"
                    ));
                }
            }
        }
    });

    let mut violations = merged2.violations;
    violations.extend(merged3.violations);
    Ok(VerificationReport {
        property: "lemmas".into(),
        space: format!(
            "Z2 pairs of length <= {len2} vs depth-{len2} triangle; \
             Z3 pairs of length <= {len3} vs depth-{len3} snowflake"
        ),
        checked: merged2.checked + merged3.checked,
        violations,
        stats: vec![
            ("base2_pairs".into(), merged2.checked),
            ("base2_members".into(), merged2.counters[0]),
            ("base3_pairs".into(), merged3.checked),
            ("base3_members".into(), merged3.counters[0]),
        ],
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum2_small_counts() {
        let report = verify_prop_sum2(3, 1).unwrap();
        assert_eq!(report.checked, 64);
        assert!(report.pass());
        assert_eq!(report.stat("linear_pairs"), Some(27));

        let report = verify_prop_sum2(1, 1).unwrap();
        assert_eq!(report.checked, 4);
        assert_eq!(report.stat("linear_pairs"), Some(3));
    }

    #[test]
    fn sum3_small_counts() {
        let report = verify_prop_sum3(1, 1).unwrap();
        assert_eq!(report.checked, 9);
        assert!(report.pass());
        assert_eq!(report.stat("z_empty_pairs"), Some(7));

        let report = verify_prop_sum3(2, 1).unwrap();
        assert_eq!(report.checked, 81);
        assert!(report.pass());
        assert_eq!(report.stat("z_empty_pairs"), Some(49));
    }

    #[test]
    fn thm1_small() {
        let report = verify_theorem_main(1, 2, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.stat("linear_pairs"), Some(3));
        assert_eq!(report.stat("members"), Some(3));

        let report = verify_theorem_main(4, 2, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.stat("linear_pairs"), Some(81));
        assert_eq!(report.stat("members"), Some(81));
    }

    #[test]
    fn thm2_small() {
        let report = verify_theorem_snowflake(1, 1, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.stat("z_empty_pairs"), Some(7));
        assert_eq!(report.stat("members"), Some(7));

        let report = verify_theorem_snowflake(3, 1, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.stat("z_empty_pairs"), Some(343));
        assert_eq!(report.stat("members"), Some(343));
    }

    #[test]
    fn lemma_oracles_small() {
        let report = verify_lemma_oracles(4, 1).unwrap();
        assert!(report.pass(), "violations: {:?}", report.violations);
        assert_eq!(report.stat("base2_pairs"), Some(256));
        assert_eq!(report.stat("base3_pairs"), Some(81 * 81));
    }

    #[test]
    fn reports_are_schedule_independent() {
        let single = verify_prop_sum2(6, 1).unwrap();
        let multi = verify_prop_sum2(6, 4).unwrap();
        assert_eq!(single.checked, multi.checked);
        assert_eq!(single.violations, multi.violations);
        assert_eq!(single.stats, multi.stats);

        let single = verify_prop_sum3(3, 1).unwrap();
        let multi = verify_prop_sum3(3, 3).unwrap();
        assert_eq!(single.checked, multi.checked);
        assert_eq!(single.stats, multi.stats);
    }

    #[test]
    fn guards_reject_oversized_runs() {
        assert!(matches!(verify_prop_sum2(13, 1), Err(Error::Resource(_))));
        assert!(matches!(verify_prop_sum3(9, 1), Err(Error::Resource(_))));
        assert!(matches!(
            verify_theorem_main(11, 0, 1),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            verify_theorem_snowflake(7, 0, 1),
            Err(Error::Resource(_))
        ));
        assert!(matches!(verify_lemma_oracles(9, 1), Err(Error::Resource(_))));
    }

    #[test]
    fn summary_line_is_machine_parsable() {
        let report = verify_prop_sum2(2, 1).unwrap();
        let line = report.summary_line();
        assert!(line.starts_with("property=sum2 "));
        assert!(line.contains(" checked=16 "));
        assert!(line.contains(" violations=0 "));
        assert!(line.contains(" linear_pairs=9 "));
        assert!(line.contains(" pass=true"));
    }
}
