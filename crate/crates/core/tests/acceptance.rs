//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values are frozen from classical facts about the
//! matrices involved, not from this crate's output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use rees_core::detideal::{
    apply_elementary_op, build_linear_forms, grade_profile, minors_ideal, signed_maximal_minors,
    PolyMatrix,
};
use rees_core::gradecalc::GradeValue;
use rees_core::groebner::Ideal;
use rees_core::koszul::{
    buchsbaum_eisenbud_acyclic, check_lemma_24, check_lemma_25, power_resolution, strand_matrix,
    strand_ranks, WedgeMonomialBasis,
};
use rees_core::poly::{make_ring, MonomialOrder, Ring, RingExt};
use rees_core::sample::{random_matrix, random_op_of_kind, rng_from_seed, sample_ring, MatrixShape};
use rees_core::theorems::{
    check_theorem_11, check_theorem_12, grade_linear_forms, rees_equals_symmetric, rees_ideal,
    soundness_sweep, symmetric_ideal, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ring(vars: &[&str], forms: usize) -> Arc<Ring> {
    make_ring(32003, vars, forms, MonomialOrder::Grevlex).unwrap()
}

fn mat(r: &Arc<Ring>, rows: &[&[&str]]) -> PolyMatrix {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    PolyMatrix::from_strings(r, &rows).unwrap()
}

fn generic23() -> PolyMatrix {
    let r = ring(&["a", "b", "c", "d", "e", "f"], 3);
    mat(&r, &[&["a", "b", "c"], &["d", "e", "f"]])
}

fn square_power() -> PolyMatrix {
    let r = ring(&["x", "y"], 3);
    mat(&r, &[&["x", "y", "0"], &["0", "x", "y"]])
}

fn seed() -> u64 {
    std::env::var("REES_CHECK_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_261_015)
}

// I_1 is generated by six independent variables (height 6); maximal minors
// of a generic m x n matrix have height n - m + 1 = 2; the generic forms
// f_1, f_2 form a regular sequence (height 2).
fn criterion_1() -> Outcome {
    let m = generic23();
    let profile = grade_profile(&m).map_err(|e| e.to_string())?;
    let expected = vec![(1, GradeValue::Finite(6)), (2, GradeValue::Finite(2))];
    ensure!(profile.0 == expected, "profile {:?}", profile.0);
    let g = grade_linear_forms(&m).map_err(|e| e.to_string())?;
    ensure!(g == GradeValue::Finite(2), "grade (f)S = {g}");
    let report = check_theorem_11(&m).map_err(|e| e.to_string())?;
    ensure!(report.verdict == Verdict::EquivBothTrue, "verdict {}", report.verdict);
    Ok("profile [(1,6),(2,2)], grade (f)S = 2, EQUIV_BOTH_TRUE".into())
}

fn criterion_2() -> Outcome {
    let m = generic23();
    let report = check_theorem_12(&m).map_err(|e| e.to_string())?;
    ensure!(report.side_holds(1), "side 1 fails: {:?}", report.failing());
    let rees = rees_ideal(&m).map_err(|e| e.to_string())?;
    let sym = symmetric_ideal(&m).map_err(|e| e.to_string())?;
    ensure!(rees.equals(&sym).map_err(|e| e.to_string())?, "Rees kernel differs from (f)S");
    ensure!(report.verdict == Verdict::EquivBothTrue, "verdict {}", report.verdict);
    Ok("grades 6 >= 3, 2 >= 2; Rees kernel = (f1, f2); EQUIV_BOTH_TRUE".into())
}

// (x, y)^2 = I_2 has height 2 < 3 and satisfies T1*T3 - T2^2 on the Rees
// side, a quadric absent from the linear ideal (f1, f2).
fn criterion_3() -> Outcome {
    let m = square_power();
    let r12 = check_theorem_12(&m).map_err(|e| e.to_string())?;
    ensure!(r12.verdict == Verdict::EquivBothFalse, "1.2 verdict {}", r12.verdict);
    let k1 = &r12.conditions[0];
    ensure!(k1.label.starts_with("grade I_1") && !k1.pass, "k=1 condition {k1:?}");
    ensure!(!rees_equals_symmetric(&m).map_err(|e| e.to_string())?, "kernel equality should fail");
    let failing: Vec<&str> = r12
        .failing()
        .into_iter()
        .filter(|c| c.side == 2)
        .map(|c| c.label.as_str())
        .collect();
    ensure!(failing == vec!["Rees kernel = (f_1..f_m)S"], "side 2 failures {failing:?}");
    let quadric = m.ring().parse("T1*T3 - T2^2").unwrap();
    ensure!(rees_ideal(&m).unwrap().contains(&quadric).unwrap(), "T1*T3 - T2^2 not in kernel");
    let r11 = check_theorem_11(&m).map_err(|e| e.to_string())?;
    ensure!(r11.verdict == Verdict::EquivBothTrue, "1.1 verdict {}", r11.verdict);
    Ok(format!(
        "1.2 EQUIV_BOTH_FALSE (k=1: {} < 3; failing side-2 clause: {}); 1.1 EQUIV_BOTH_TRUE",
        k1.computed, failing[0]
    ))
}

fn criterion_4() -> Outcome {
    let m = generic23();
    let c = power_resolution(&m, 1).map_err(|e| e.to_string())?;
    ensure!(c.ranks() == [3, 2], "ranks {:?}", c.ranks());
    ensure!(*c.map(1) == m.transpose(), "position-1 matrix is not the transpose");
    let cert = buchsbaum_eisenbud_acyclic(&c);
    ensure!(cert.pass, "certificate {cert:?}");
    let eps = Ideal::new(m.ring(), c.augmentation().unwrap().entries().to_vec()).unwrap();
    ensure!(eps.equals(&minors_ideal(&m, 2).unwrap()).unwrap(), "image of eps is not I_2");
    Ok("ranks [3, 2], A_1 = M^t, certificate pass, eps(F_0) = I_2(M)".into())
}

/// Counts basis pairs by walking every index subset and every exponent
/// vector with entries at most the degree.
fn brute_rank(m: usize, n: usize, r: usize, l: usize) -> usize {
    if l < r {
        return 0;
    }
    let d = l - r;
    let subsets = (0u32..(1 << m)).filter(|s| s.count_ones() as usize == r).count();
    let vectors = (0..(d + 1).pow(n as u32))
        .filter(|&code| {
            let mut c = code;
            let mut sum = 0;
            for _ in 0..n {
                sum += c % (d + 1);
                c /= d + 1;
            }
            sum == d
        })
        .count();
    subsets * vectors
}

fn criterion_5() -> Outcome {
    let mut rng = rng_from_seed(seed());
    for _ in 0..20 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(m..=m + 3);
        let top = strand_ranks(m, n, m);
        ensure!(top[m] == 1, "rank [K_m]_m = {} for ({m},{n})", top[m]);
        ensure!(top[m - 1] == m * n, "rank [K_(m-1)]_m = {} for ({m},{n})", top[m - 1]);
        let one = strand_ranks(m, n, 1);
        ensure!(one[1] == m && one[0] == n, "degree-1 ranks {one:?} for ({m},{n})");
        for l in 0..=m + 1 {
            let ranks = strand_ranks(m, n, l);
            for (r, &rank) in ranks.iter().enumerate() {
                ensure!(rank == brute_rank(m, n, r, l), "({m},{n}) r={r} l={l}");
                ensure!(rank == WedgeMonomialBasis::new(m, n, r, l).len(), "basis size ({m},{n}) r={r} l={l}");
            }
        }
    }
    Ok("20 random (m,n): ranks 1, mn, m, n and brute-force enumeration agree".into())
}

fn criterion_6() -> Outcome {
    let mut rng = rng_from_seed(seed().wrapping_add(6));
    for i in 0..20 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(rows..=4);
        let base = rng.gen_range(1..=4);
        let shape = MatrixShape { rows, cols, base_vars: base, max_degree: 1, zero_percent: 20 };
        let r = sample_ring(base, cols).unwrap();
        let m = random_matrix(&mut rng, &r, &shape);
        ensure!(check_lemma_24(&m).map_err(|e| e.to_string())?, "top identity fails on sample {i}: {m}");
        ensure!(check_lemma_25(&m).map_err(|e| e.to_string())?, "bottom identity fails on sample {i}: {m}");
    }
    Ok("I_1([d_m]_m) = I_1(M) and I_m([d_1]_1) = I_m(M) on 20 random matrices".into())
}

fn criterion_7() -> Outcome {
    let s = seed().wrapping_add(7);
    let mut rng = rng_from_seed(s);
    for i in 0..10 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(rows..=4);
        let base = rng.gen_range(1..=3);
        let shape = MatrixShape { rows, cols, base_vars: base, max_degree: 2, zero_percent: 20 };
        let r = sample_ring(base, cols).unwrap();
        let m = random_matrix(&mut rng, &r, &shape);
        for l in 0..=rows + 1 {
            for k in 1..rows {
                let a = strand_matrix(&m, k, l).unwrap();
                let b = strand_matrix(&m, k + 1, l).unwrap();
                ensure!(a.mul(&b).unwrap().is_zero(), "d o d != 0 on sample {i}, l={l}, r={k}");
            }
        }
        if cols == rows + 1 {
            let g = signed_maximal_minors(&m).unwrap();
            let col = PolyMatrix::new(&r, cols, 1, g).unwrap();
            ensure!(m.mul(&col).unwrap().is_zero(), "M g != 0 on sample {i}");
        }
    }

    // every operation kind on 2 x 3 matrices
    let r = sample_ring(3, 3).unwrap();
    let shape = MatrixShape { rows: 2, cols: 3, base_vars: 3, max_degree: 2, zero_percent: 20 };
    for i in 0..4 {
        let m = random_matrix(&mut rng, &r, &shape);
        let profile = grade_profile(&m).unwrap();
        let forms = grade_linear_forms(&m).unwrap();
        let v11 = check_theorem_11(&m).unwrap().verdict;
        let v12 = check_theorem_12(&m).unwrap().verdict;
        for kind in 0..6 {
            let op = random_op_of_kind(&mut rng, &m, kind).unwrap();
            let n = apply_elementary_op(&m, &op).unwrap();
            ensure!(grade_profile(&n).unwrap() == profile, "{} changed the profile ({i})", op.kind());
            ensure!(grade_linear_forms(&n).unwrap() == forms, "{} changed grade (f)S ({i})", op.kind());
            ensure!(check_theorem_11(&n).unwrap().verdict == v11, "{} changed 1.1 ({i})", op.kind());
            ensure!(check_theorem_12(&n).unwrap().verdict == v12, "{} changed 1.2 ({i})", op.kind());
        }
    }

    let summary = soundness_sweep(s, 200).map_err(|e| e.to_string())?;
    ensure!(summary.pass(), "sweep failures: {:?}", summary.failures);
    Ok(format!(
        "d o d = 0, M g = 0, six op kinds invariant; sweep of {} matrices (seed {}): 1.1 {}T/{}F, 1.2 {}T/{}F, {} ops, no VIOLATION",
        summary.matrices,
        summary.seed,
        summary.theorem_11_both_true,
        summary.theorem_11_both_false,
        summary.theorem_12_both_true,
        summary.theorem_12_both_false,
        summary.ops_checked
    ))
}

fn criterion_8() -> Outcome {
    // zero 2 x 3 matrix: every minor ideal is zero
    let r = ring(&["x", "y"], 3);
    let z = PolyMatrix::zeros(&r, 2, 3);
    let p = grade_profile(&z).unwrap();
    ensure!(p.0 == vec![(1, GradeValue::Finite(0)), (2, GradeValue::Finite(0))], "zero profile {:?}", p.0);
    ensure!(grade_linear_forms(&z).unwrap() == GradeValue::Finite(0), "zero forms grade");
    ensure!(check_theorem_11(&z).unwrap().verdict == Verdict::EquivBothFalse, "zero 1.1");
    ensure!(check_theorem_12(&z).unwrap().verdict == Verdict::EquivBothFalse, "zero 1.2");
    ensure!(rees_ideal(&z).is_err(), "zero Rees must be rejected");
    ensure!(build_linear_forms(&z).unwrap().iter().all(|f| f.is_zero()), "zero forms");

    // m = n = 1 with a unit entry: I_1 is the unit ideal
    let r1 = ring(&["x"], 1);
    let unit = mat(&r1, &[&["1"]]);
    ensure!(grade_profile(&unit).unwrap().0 == vec![(1, GradeValue::Infinite)], "unit profile");
    ensure!(check_theorem_11(&unit).unwrap().verdict == Verdict::EquivBothTrue, "unit 1.1");
    let x = mat(&r1, &[&["x"]]);
    ensure!(check_theorem_11(&x).unwrap().verdict == Verdict::EquivBothTrue, "[x] 1.1");
    let zero = mat(&r1, &[&["0"]]);
    ensure!(check_theorem_11(&zero).unwrap().verdict == Verdict::EquivBothFalse, "[0] 1.1");

    // I_2 = 0 but I_1 != 0
    let r2 = ring(&["x"], 2);
    let deg = mat(&r2, &[&["x", "0"], &["0", "0"]]);
    let p = grade_profile(&deg).unwrap();
    ensure!(p.0 == vec![(1, GradeValue::Finite(1)), (2, GradeValue::Finite(0))], "I_2 = 0 profile {:?}", p.0);
    ensure!(check_theorem_11(&deg).unwrap().verdict == Verdict::EquivBothFalse, "I_2 = 0 1.1");
    let r3 = ring(&["x", "y"], 3);
    let rank1 = mat(&r3, &[&["x", "y", "x"], &["x", "y", "x"]]);
    ensure!(check_theorem_12(&rank1).unwrap().verdict == Verdict::EquivBothFalse, "rank-1 1.2");
    Ok("zero matrix, 1 x 1 (unit, x, 0) and I_m(M) = 0 give the conventional grades 0 / INFINITY".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("generic 2x3 grade equivalence", criterion_1),
        ("generic 2x3 linear type", criterion_2),
        ("non-linear-type witness", criterion_3),
        ("resolution of I", criterion_4),
        ("strand rank identities", criterion_5),
        ("top and bottom strand ideal identities", criterion_6),
        ("property suite", criterion_7),
        ("degenerate inputs", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
