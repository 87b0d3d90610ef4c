//! Cross-validation suite: every enumeration route, oracle pair, and
//! structural classifier checked against the others and against the known
//! count table.
//!
//! Used by the acceptance test target and by the CLI `verify` subcommand.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::ascent::AscentSequence;
use crate::blocks;
use crate::counts;
use crate::gf;
use crate::interval::{sequence_from_poset_with_cap, IntervalRepresentation};
use crate::poset::patterns;

/// Known counts per number of points: `(n, semiorders, hereditary,
/// dimension <= 2, dimension = 3)`. Columns are OEIS A000108, A293499,
/// A293498, A293501.
pub const KNOWN_COUNTS: [(u32, u64, u64, u64, u64); 25] = [
    (1, 1, 1, 1, 0),
    (2, 2, 2, 2, 0),
    (3, 5, 5, 5, 0),
    (4, 14, 14, 14, 0),
    (5, 42, 42, 42, 0),
    (6, 132, 132, 132, 0),
    (7, 429, 428, 426, 3),
    (8, 1_430, 1_415, 1_390, 40),
    (9, 4_862, 4_730, 4_544, 318),
    (10, 16_796, 15_901, 14_822, 1_974),
    (11, 58_786, 53_593, 48_183, 10_603),
    (12, 208_012, 180_809, 156_118, 51_894),
    (13, 742_900, 610_157, 504_487, 238_413),
    (14, 2_674_440, 2_058_962, 1_627_000, 1_047_440),
    (15, 9_694_845, 6_947_145, 5_240_019, 4_454_826),
    (16, 35_357_670, 23_437_854, 16_861_453, 18_496_217),
    (17, 129_644_790, 79_067_006, 54_228_190, 75_416_600),
    (18, 477_638_700, 266_717_300, 174_351_450, 303_287_250),
    (19, 1_767_263_190, 899_693_960, 560_481_708, 1_206_781_482),
    (
        20,
        6_564_120_420,
        3_034_814_143,
        1_801_653_769,
        4_762_466_651,
    ),
    (
        21,
        24_466_267_020,
        10_236_853_534,
        5_791_301_311,
        18_674_965_709,
    ),
    (
        22,
        91_482_563_640,
        34_530_252_629,
        18_615_976_402,
        72_866_587_238,
    ),
    (
        23,
        343_059_613_650,
        116_475_001_757,
        59_841_686_254,
        283_217_927_396,
    ),
    (
        24,
        1_289_904_147_324,
        392_885_252_033,
        192_366_897_839,
        1_097_537_249_485,
    ),
    (
        25,
        4_861_946_401_452,
        1_325_253_166_761,
        618_392_292_337,
        4_243_554_109_115,
    ),
];

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Scope of each exhaustive family. `standard()` is the full suite; smaller
/// bounds shrink the searches proportionally.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Coefficient comparison range for the closed forms (max 25).
    pub table_max: u32,
    /// Exhaustive census range.
    pub brute_max: u32,
    /// Oracle-triangle range (realizer search is exponential past 8).
    pub oracle_max: u32,
    /// Bijection round-trip range.
    pub round_trip_max: u32,
    /// Block coherence and labeling range.
    pub blocks_max: u32,
    /// Restricted-iff-hereditary range.
    pub restricted_max: u32,
    /// No-duplicated-holdings comparison range.
    pub nodh_max: u32,
    /// Worker count for the census; `None` = machine parallelism.
    pub jobs: Option<usize>,
}

impl VerifyOptions {
    pub fn standard() -> VerifyOptions {
        VerifyOptions {
            table_max: 25,
            brute_max: 10,
            oracle_max: 8,
            round_trip_max: 9,
            blocks_max: 9,
            restricted_max: 9,
            nodh_max: 10,
            jobs: None,
        }
    }

    /// Standard scopes clipped to `n_max`, with only the census allowed to
    /// grow (up to the brute-force cap).
    pub fn capped(n_max: u32, jobs: Option<usize>) -> VerifyOptions {
        let std = VerifyOptions::standard();
        VerifyOptions {
            table_max: std.table_max.min(n_max),
            brute_max: n_max.min(counts::BRUTE_FORCE_CAP).min(std.table_max),
            oracle_max: std.oracle_max.min(n_max),
            round_trip_max: std.round_trip_max.min(n_max),
            blocks_max: std.blocks_max.min(n_max),
            restricted_max: std.restricted_max.min(n_max),
            nodh_max: std.nodh_max.min(n_max).min(counts::BRUTE_FORCE_CAP),
            jobs,
        }
    }
}

pub fn run_verification(opts: &VerifyOptions) -> Vec<CriterionResult> {
    match opts.jobs {
        None => run_criteria(opts),
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(|| run_criteria(opts)),
    }
}

/// Splits the length-`n` sequence stream into per-prefix shards and checks
/// them in parallel, surfacing the first failure.
fn sharded_check(
    n: usize,
    check: impl Fn(&AscentSequence) -> Result<u64, String> + Sync,
) -> Result<u64, String> {
    let shard_len = n.saturating_sub(1).clamp(1, 5);
    AscentSequence::enumerate(shard_len)
        .expect("positive length")
        .par_bridge()
        .map(|prefix| {
            let mut tally = 0u64;
            for seq in crate::ascent::AscentSequences::with_prefix(n, &prefix) {
                tally += check(&seq)?;
            }
            Ok(tally)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

type Check<'a> = (&'static str, Box<dyn Fn() -> Result<String, String> + 'a>);

fn run_criteria(opts: &VerifyOptions) -> Vec<CriterionResult> {
    // `None` inherits the pool installed by `run_verification`
    let census = counts::brute_force_table(opts.brute_max.max(opts.nodh_max), None)
        .expect("census bounds stay under the cap");
    let checks: Vec<Check<'_>> = vec![
        (
            "table via generating functions",
            Box::new(|| table_via_gfs(opts.table_max)),
        ),
        (
            "table via brute force",
            Box::new(|| table_via_census(&census, opts.brute_max)),
        ),
        ("grammar equals closed forms", Box::new(grammar_equivalence)),
        (
            "oracle triangle",
            Box::new(|| oracle_triangle(opts.oracle_max)),
        ),
        (
            "bijection round trip",
            Box::new(|| bijection_round_trip(opts.round_trip_max)),
        ),
        (
            "block coherence",
            Box::new(|| block_coherence(opts.blocks_max)),
        ),
        (
            "restricted iff hereditary",
            Box::new(|| restricted_iff_hereditary(opts.restricted_max)),
        ),
        (
            "no-duplicated-holdings counts",
            Box::new(|| nodh_counts(&census, opts.nodh_max)),
        ),
        ("asymptotics", Box::new(asymptotics)),
        ("pattern sanity", Box::new(pattern_sanity)),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let (passed, detail) = match check() {
                Ok(detail) => (true, detail),
                Err(detail) => (false, detail),
            };
            CriterionResult {
                index: i + 1,
                name,
                passed,
                detail,
            }
        })
        .collect()
}

fn table_via_gfs(table_max: u32) -> Result<String, String> {
    let max = table_max.min(25) as usize;
    let h = gf::hereditary_gf().coefficients(max);
    let d = gf::dim2_gf().coefficients(max);
    for &(n, semi, hered, dim2, dim3) in &KNOWN_COUNTS[..max] {
        let idx = n as usize;
        let cat = gf::catalan(n as u64);
        if cat != BigInt::from(semi) {
            return Err(format!("catalan({n}) != {semi}"));
        }
        if h[idx] != BigInt::from(hered) {
            return Err(format!(
                "hereditary coefficient at n={n}: {} != {hered}",
                h[idx]
            ));
        }
        if d[idx] != BigInt::from(dim2) {
            return Err(format!("dim2 coefficient at n={n}: {} != {dim2}", d[idx]));
        }
        if &cat - &d[idx] != BigInt::from(dim3) {
            return Err(format!("catalan - dim2 at n={n} != {dim3}"));
        }
    }
    Ok(format!(
        "closed-form coefficients match the table for n=1..{max}"
    ))
}

fn table_via_census(census: &[counts::CountRow], brute_max: u32) -> Result<String, String> {
    for row in census.iter().take(brute_max as usize) {
        let (n, semi, hered, dim2, dim3) = KNOWN_COUNTS[row.n as usize - 1];
        debug_assert_eq!(n, row.n);
        if (row.semiorders, row.hereditary, row.dim2, row.dim3) != (semi, hered, dim2, dim3) {
            return Err(format!(
                "census row n={n}: got ({}, {}, {}, {}), want ({semi}, {hered}, {dim2}, {dim3})",
                row.semiorders, row.hereditary, row.dim2, row.dim3
            ));
        }
    }
    Ok(format!(
        "exhaustive census matches the table for n=1..{brute_max}"
    ))
}

fn grammar_equivalence() -> Result<String, String> {
    if gf::hereditary_gf_from_grammar() != gf::hereditary_gf() {
        return Err("hereditary grammar assembly differs from the closed form".into());
    }
    if gf::dim2_gf_from_grammar() != gf::dim2_gf() {
        return Err("dim2 grammar assembly differs from the closed form".into());
    }
    if gf::hereditary_gf_from_grammar_in(&gf::RationalGf::x()) != gf::hereditary_nodh_gf() {
        return Err("hereditary NODH grammar differs from its closed form".into());
    }
    if gf::dim2_gf_from_grammar_in(&gf::RationalGf::x()) != gf::dim2_nodh_gf() {
        return Err("dim2 NODH grammar differs from its closed form".into());
    }
    Ok("both grammar assemblies equal their closed forms by cross-multiplication".into())
}

fn oracle_triangle(oracle_max: u32) -> Result<String, String> {
    let two_two = patterns::two_plus_two();
    let one_three = patterns::one_plus_three();
    let fx2 = patterns::fx2();
    let h0 = patterns::h0();
    let g0 = patterns::g0();
    let mut checked = 0u64;
    for n in 1..=oracle_max as usize {
        checked += sharded_check(n, |seq| {
            let rep = IntervalRepresentation::from_sequence(seq);
            let poset = rep.to_poset();
            let by_containment = rep.is_semiorder();
            if poset.contains_induced(&two_two) {
                return Err(format!("{seq}: coded poset contains 2+2"));
            }
            let by_subposets = !poset.contains_induced(&one_three);
            if by_containment != by_subposets {
                return Err(format!(
                    "{seq}: containment and subposet semiorder tests disagree"
                ));
            }
            if !by_containment {
                return Ok(0);
            }
            let forced = poset.contains_induced(&fx2)
                || poset.contains_induced(&h0)
                || poset.contains_induced(&g0);
            let realizer = poset
                .has_dimension_at_most_2_with_cap(n)
                .map_err(|e| e.to_string())?;
            if realizer == forced {
                return Err(format!(
                    "{seq}: realizer and forbidden-subposet oracles disagree"
                ));
            }
            match blocks::decompose(seq) {
                Ok(decomp) => {
                    if decomp.dimension_at_most_2() != realizer {
                        return Err(format!(
                            "{seq}: structural classifier disagrees with realizer"
                        ));
                    }
                }
                Err(_) => {
                    // a non-hereditary semiorder must have dimension 3
                    if !forced || realizer {
                        return Err(format!(
                            "{seq}: non-hereditary semiorder not of dimension 3"
                        ));
                    }
                }
            }
            Ok(1)
        })?;
    }
    Ok(format!(
        "zero disagreements across {checked} semiorders up to {oracle_max} points"
    ))
}

fn bijection_round_trip(round_trip_max: u32) -> Result<String, String> {
    let mut checked = 0u64;
    for n in 1..=round_trip_max as usize {
        checked += sharded_check(n, |seq| {
            let rep = IntervalRepresentation::from_sequence(seq);
            let recovered =
                sequence_from_poset_with_cap(&rep.to_poset(), n).map_err(|e| e.to_string())?;
            if recovered != *seq {
                return Err(format!("round trip of {seq} returned {recovered}"));
            }
            Ok(1)
        })?;
    }
    Ok(format!(
        "identity on all {checked} sequences of length <= {round_trip_max}"
    ))
}

fn block_coherence(blocks_max: u32) -> Result<String, String> {
    let mut hereditary_count = 0u64;
    for n in 1..=blocks_max as usize {
        hereditary_count += sharded_check(n, |seq| {
            let replay = blocks::is_hereditary(seq);
            let decomp = match blocks::decompose(seq) {
                Err(err) => {
                    if replay {
                        return Err(format!(
                            "{seq}: decompose failed at {} on a hereditary sequence",
                            err.prefix_len
                        ));
                    }
                    return Ok(0);
                }
                Ok(decomp) => decomp,
            };
            if !replay {
                return Err(format!(
                    "{seq}: decompose succeeded on a non-hereditary sequence"
                ));
            }
            let rendered = decomp.render();
            let direct = IntervalRepresentation::from_sequence(seq);
            if !rendered.same_interval_set(&direct) {
                return Err(format!(
                    "{seq}: render(decompose) differs from the direct representation"
                ));
            }
            let labels = blocks::boundary_labeling(&rendered).map_err(|e| e.to_string())?;
            let cmp = blocks::compare_labeling(&decomp, &labels);
            if !cmp.mismatches.is_empty() {
                return Err(format!("{seq}: labeling mismatches {:?}", cmp.mismatches));
            }
            // the known ambiguity: an extra `w` may appear only just past an
            // optional boundary
            for pos in &cmp.extra_weak {
                let explained = decomp.boundaries().iter().any(|b| {
                    b.kind == blocks::BoundaryKind::WeakOptional && b.position + 1 == *pos
                });
                if !explained {
                    return Err(format!("{seq}: unexplained extra w label at {pos}"));
                }
            }
            Ok(1)
        })?;
    }
    Ok(format!(
        "render = direct representation and labeling recovers boundaries on {hereditary_count} hereditary sequences"
    ))
}

fn restricted_iff_hereditary(restricted_max: u32) -> Result<String, String> {
    for n in 1..=restricted_max as usize {
        let restricted_semiorders = sharded_check(n, |seq| {
            let rep = IntervalRepresentation::from_sequence(seq);
            if !rep.is_semiorder() {
                return Ok(0);
            }
            let restricted = seq.is_restricted();
            let hereditary = blocks::decompose(seq).is_ok();
            if restricted != hereditary {
                return Err(format!(
                    "{seq}: restricted={restricted} but hereditary={hereditary}"
                ));
            }
            Ok(u64::from(restricted))
        })?;
        let expected = KNOWN_COUNTS[n - 1].2;
        if restricted_semiorders != expected {
            return Err(format!(
                "n={n}: {restricted_semiorders} restricted semiorder sequences, want {expected}"
            ));
        }
    }
    Ok(format!(
        "restricted and hereditary coincide on semiorders up to length {restricted_max}, with matching counts"
    ))
}

fn nodh_counts(census: &[counts::CountRow], nodh_max: u32) -> Result<String, String> {
    let max = nodh_max as usize;
    let h_n = gf::hereditary_nodh_gf().coefficients(max);
    let d_n = gf::dim2_nodh_gf().coefficients(max);
    for row in census.iter().take(max) {
        let n = row.n as usize;
        if BigInt::from(row.nodh_hereditary) != h_n[n] {
            return Err(format!(
                "NODH hereditary at n={n}: census {} vs series {}",
                row.nodh_hereditary, h_n[n]
            ));
        }
        if BigInt::from(row.nodh_dim2) != d_n[n] {
            return Err(format!(
                "NODH dim2 at n={n}: census {} vs series {}",
                row.nodh_dim2, d_n[n]
            ));
        }
        if BigInt::from(row.nodh_semiorders) != gf::nodh_semiorder_count(n as u64) {
            return Err(format!(
                "NODH semiorders at n={n}: census {} vs formula",
                row.nodh_semiorders
            ));
        }
    }
    Ok(format!(
        "NODH census matches both series and the multinomial formula for n=1..{max}"
    ))
}

fn asymptotics() -> Result<String, String> {
    let checks = [
        (
            gf::hereditary_gf(),
            0.29646,
            3.373133,
            0.08346,
            "hereditary",
        ),
        (gf::dim2_gf(), 0.311065, 3.2148, 0.12958, "dim2"),
    ];
    let mut ratios = Vec::new();
    for (series, rho, growth, constant, name) in checks {
        let asy = series.dominant_asymptotics().map_err(|e| e.to_string())?;
        if (asy.rho - rho).abs() >= 1e-4 {
            return Err(format!("{name}: rho {} vs {rho}", asy.rho));
        }
        if (asy.growth - growth).abs() >= 1e-3 {
            return Err(format!("{name}: growth {} vs {growth}", asy.growth));
        }
        if (asy.constant - constant).abs() >= 1e-3 {
            return Err(format!("{name}: constant {} vs {constant}", asy.constant));
        }
        let c25 = series.coefficients(25)[25]
            .to_f64()
            .expect("25th coefficient fits in f64");
        let ratio = c25 / (asy.constant * asy.growth.powi(25));
        if !(0.99..=1.01).contains(&ratio) {
            return Err(format!(
                "{name}: c_25 off the predicted growth, ratio {ratio}"
            ));
        }
        ratios.push(format!("{name} ratio {ratio:.5}"));
    }
    Ok(format!(
        "poles, growth rates, constants within tolerance ({})",
        ratios.join(", ")
    ))
}

fn pattern_sanity() -> Result<String, String> {
    for (pattern, name) in [
        (patterns::fx2(), "FX2"),
        (patterns::h0(), "H0"),
        (patterns::g0(), "G0"),
    ] {
        if pattern.len() != 7 {
            return Err(format!("{name} is not on 7 points"));
        }
        if !pattern.is_semiorder() {
            return Err(format!("{name} is not a semiorder"));
        }
        if pattern
            .has_dimension_at_most_2()
            .map_err(|e| e.to_string())?
        {
            return Err(format!("{name} admits a 2-realizer"));
        }
        if pattern.semiorder_dimension().map_err(|e| e.to_string())? != 3 {
            return Err(format!("{name} does not have dimension 3"));
        }
    }
    Ok("FX2, H0, G0 are 7-point semiorders of dimension exactly 3".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_scopes_pass_quickly() {
        let opts = VerifyOptions::capped(6, Some(1));
        let results = run_verification(&opts);
        assert_eq!(results.len(), 10);
        for r in &results {
            assert!(r.passed, "criterion {} failed: {}", r.name, r.detail);
        }
    }
}
