//! Executable forms of the two equivalences: grade of the minor ideals
//! versus grade of `(f_1..f_m)S`, and, for `m x (m+1)` matrices, linear
//! type of `I_m(M)` (the Rees kernel equals `(f_1..f_m)S`).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detideal::{
    apply_elementary_op, build_linear_forms, grade_profile, signed_maximal_minors, GradeProfile,
    PolyMatrix,
};
use crate::error::{Error, Result};
use crate::gradecalc::{grade, GradeValue};
use crate::groebner::Ideal;
use crate::poly::RingExt;
use crate::sample::{random_matrix, random_op_of_kind, random_shape, rng_from_seed, sample_ring};

/// `(f_1..f_m)S`.
pub fn symmetric_ideal(m: &PolyMatrix) -> Result<Ideal> {
    Ideal::new(m.ring(), build_linear_forms(m)?)
}

/// Grade of `(f_1..f_m)` in the full ring `S`.
pub fn grade_linear_forms(m: &PolyMatrix) -> Result<GradeValue> {
    Ok(grade(&symmetric_ideal(m)?))
}

fn require_rees_shape(m: &PolyMatrix) -> Result<()> {
    m.ensure_standard()?;
    if m.cols() != m.rows() + 1 {
        return Err(Error::Shape(format!(
            "the Rees construction needs an m x (m+1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.ring().form_count() != m.cols() {
        return Err(Error::Shape(format!(
            "ring has {} form variables but the matrix has {} columns",
            m.ring().form_count(),
            m.cols()
        )));
    }
    Ok(())
}

/// Kernel of `S -> R[t]`, `T_j -> g_j t`, by eliminating `t` from
/// `(T_j - t g_j)`. No degeneracy check.
fn rees_kernel(m: &PolyMatrix) -> Result<Ideal> {
    let ring = m.ring();
    let g = signed_maximal_minors(m)?;
    let ext = ring.with_elimination_var()?;
    let t = ext.elim_var().expect("extended ring has t");
    let gens = g
        .iter()
        .enumerate()
        .map(|(j, gj)| Ok(&ext.form(j) - &(&ext.var(t) * &gj.embed(&ext)?)))
        .collect::<Result<Vec<_>>>()?;
    let kernel = Ideal::new(&ext, gens)?.eliminate(&[t])?;
    let back = kernel
        .gens()
        .iter()
        .map(|p| p.embed(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// Defining ideal of the Rees algebra of `I = I_m(M)` as a quotient of `S`.
/// Requires `n = m + 1` and `I != 0`.
pub fn rees_ideal(m: &PolyMatrix) -> Result<Ideal> {
    require_rees_shape(m)?;
    if signed_maximal_minors(m)?.iter().all(|g| g.is_zero()) {
        return Err(Error::DegenerateRees);
    }
    rees_kernel(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    EquivBothTrue,
    EquivBothFalse,
    Violation,
}

impl Verdict {
    pub fn from_sides(side1: bool, side2: bool) -> Verdict {
        match (side1, side2) {
            (true, true) => Verdict::EquivBothTrue,
            (false, false) => Verdict::EquivBothFalse,
            _ => Verdict::Violation,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::EquivBothTrue => "EQUIV_BOTH_TRUE",
            Verdict::EquivBothFalse => "EQUIV_BOTH_FALSE",
            Verdict::Violation => "VIOLATION",
        })
    }
}

/// A grade, a boolean identity, or free text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConditionValue {
    Grade(GradeValue),
    Flag(bool),
    Text(String),
}

impl fmt::Display for ConditionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionValue::Grade(g) => write!(f, "{g}"),
            ConditionValue::Flag(b) => write!(f, "{b}"),
            ConditionValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub label: String,
    /// Which side of the equivalence (1 or 2) the condition belongs to.
    pub side: u8,
    pub expected: ConditionValue,
    pub computed: ConditionValue,
    pub pass: bool,
}

impl ConditionRecord {
    fn grade_bound(label: String, side: u8, bound: usize, computed: GradeValue) -> ConditionRecord {
        ConditionRecord {
            label,
            side,
            expected: ConditionValue::Grade(GradeValue::Finite(bound)),
            computed: ConditionValue::Grade(computed),
            pass: computed.at_least(bound as i64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    /// "1.1" for the grade equivalence, "1.2" for linear type.
    pub theorem: String,
    pub conditions: Vec<ConditionRecord>,
    pub verdict: Verdict,
}

impl TheoremReport {
    pub fn side_holds(&self, side: u8) -> bool {
        self.conditions.iter().filter(|c| c.side == side).all(|c| c.pass)
    }

    pub fn failing(&self) -> Vec<&ConditionRecord> {
        self.conditions.iter().filter(|c| !c.pass).collect()
    }

    fn from_conditions(theorem: &str, conditions: Vec<ConditionRecord>) -> TheoremReport {
        let side = |s: u8| conditions.iter().filter(|c| c.side == s).all(|c| c.pass);
        let verdict = Verdict::from_sides(side(1), side(2));
        TheoremReport {
            theorem: theorem.into(),
            conditions,
            verdict,
        }
    }
}

/// Assembles the grade-equivalence report from precomputed pieces:
/// side 1 is `grade I_k(M) >= m - k + 1` for all `k`, side 2 is
/// `grade (f)S = m`.
pub fn theorem_11_report(rows: usize, profile: &GradeProfile, forms_grade: GradeValue) -> TheoremReport {
    let mut conditions: Vec<ConditionRecord> = profile
        .0
        .iter()
        .map(|&(k, g)| {
            ConditionRecord::grade_bound(format!("grade I_{k}(M) >= {}", rows - k + 1), 1, rows - k + 1, g)
        })
        .collect();
    conditions.push(ConditionRecord {
        label: format!("grade (f_1..f_{rows})S = {rows}"),
        side: 2,
        expected: ConditionValue::Grade(GradeValue::Finite(rows)),
        computed: ConditionValue::Grade(forms_grade),
        pass: forms_grade == GradeValue::Finite(rows),
    });
    TheoremReport::from_conditions("1.1", conditions)
}

/// Assembles the linear-type report: side 1 is `grade I_k(M) >= m - k + 2`
/// for all `k`, side 2 is the kernel identity together with
/// `grade (f)S = m`.
pub fn theorem_12_report(
    rows: usize,
    profile: &GradeProfile,
    forms_grade: GradeValue,
    kernel_equal: bool,
) -> TheoremReport {
    let mut conditions: Vec<ConditionRecord> = profile
        .0
        .iter()
        .map(|&(k, g)| {
            ConditionRecord::grade_bound(format!("grade I_{k}(M) >= {}", rows - k + 2), 1, rows - k + 2, g)
        })
        .collect();
    conditions.push(ConditionRecord {
        label: "Rees kernel = (f_1..f_m)S".into(),
        side: 2,
        expected: ConditionValue::Flag(true),
        computed: ConditionValue::Flag(kernel_equal),
        pass: kernel_equal,
    });
    conditions.push(ConditionRecord {
        label: format!("grade (f_1..f_{rows})S = {rows}"),
        side: 2,
        expected: ConditionValue::Grade(GradeValue::Finite(rows)),
        computed: ConditionValue::Grade(forms_grade),
        pass: forms_grade == GradeValue::Finite(rows),
    });
    TheoremReport::from_conditions("1.2", conditions)
}

pub fn check_theorem_11(m: &PolyMatrix) -> Result<TheoremReport> {
    m.ensure_standard()?;
    let (profile, forms) = rayon::join(|| grade_profile(m), || grade_linear_forms(m));
    Ok(theorem_11_report(m.rows(), &profile?, forms?))
}

/// Whether the Rees kernel equals `(f)S`. When `I_m(M) = 0` the kernel is
/// `(T_1..T_n)`, which the elimination also produces.
pub fn rees_equals_symmetric(m: &PolyMatrix) -> Result<bool> {
    require_rees_shape(m)?;
    rees_kernel(m)?.equals(&symmetric_ideal(m)?)
}

pub fn check_theorem_12(m: &PolyMatrix) -> Result<TheoremReport> {
    require_rees_shape(m)?;
    let ((profile, forms), kernel) = rayon::join(
        || rayon::join(|| grade_profile(m), || grade_linear_forms(m)),
        || rees_equals_symmetric(m),
    );
    Ok(theorem_12_report(m.rows(), &profile?, forms?, kernel?))
}

/// Outcome of a randomized soundness sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub seed: u64,
    pub matrices: usize,
    pub theorem_11_both_true: usize,
    pub theorem_11_both_false: usize,
    pub theorem_12_checked: usize,
    pub theorem_12_both_true: usize,
    pub theorem_12_both_false: usize,
    /// Elementary operations applied, one per matrix where the shape allows.
    pub ops_checked: usize,
    /// Descriptions of verdicts of VIOLATION or of invariants that changed
    /// under an elementary operation.
    pub failures: Vec<String>,
}

impl SweepSummary {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

struct SampleOutcome {
    t11: Verdict,
    t12: Option<Verdict>,
    op_checked: bool,
    failures: Vec<String>,
}

fn sweep_one(seed: u64, index: usize) -> Result<SampleOutcome> {
    let mut rng = rng_from_seed(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let shape = random_shape(&mut rng, 2, 3, 4);
    let ring = sample_ring(shape.base_vars, shape.cols)?;
    let m = random_matrix(&mut rng, &ring, &shape);
    let mut failures = Vec::new();

    let r11 = check_theorem_11(&m)?;
    let r12 = if m.cols() == m.rows() + 1 {
        Some(check_theorem_12(&m)?)
    } else {
        None
    };
    if r11.verdict == Verdict::Violation {
        failures.push(format!("sample {index}: theorem 1.1 VIOLATION on {m}"));
    }
    if let Some(r) = &r12 {
        if r.verdict == Verdict::Violation {
            failures.push(format!("sample {index}: theorem 1.2 VIOLATION on {m}"));
        }
        if r.side_holds(1) && !r11.side_holds(1) {
            failures.push(format!("sample {index}: linear-type bounds hold but grade bounds fail"));
        }
    }

    let kind = index % 6;
    let op = (0..6).find_map(|d| random_op_of_kind(&mut rng, &m, (kind + d) % 6));
    let mut op_checked = false;
    if let Some(op) = op {
        op_checked = true;
        let n = apply_elementary_op(&m, &op)?;
        if grade_profile(&n)? != grade_profile(&m)? {
            failures.push(format!("sample {index}: {} changed the grade profile", op.kind()));
        }
        if grade_linear_forms(&n)? != grade_linear_forms(&m)? {
            failures.push(format!("sample {index}: {} changed grade (f)S", op.kind()));
        }
        if check_theorem_11(&n)?.verdict != r11.verdict {
            failures.push(format!("sample {index}: {} changed the 1.1 verdict", op.kind()));
        }
        if let Some(r) = &r12 {
            if check_theorem_12(&n)?.verdict != r.verdict {
                failures.push(format!("sample {index}: {} changed the 1.2 verdict", op.kind()));
            }
        }
    }
    Ok(SampleOutcome {
        t11: r11.verdict,
        t12: r12.map(|r| r.verdict),
        op_checked,
        failures,
    })
}

/// Checks both theorems on `count` seeded random matrices (`m <= 2`,
/// `n <= 3`, at most four base variables, linear or quadratic entries
/// over GF(32003)), plus invariance of grades and verdicts under one
/// random elementary operation per matrix.
pub fn soundness_sweep(seed: u64, count: usize) -> Result<SweepSummary> {
    let outcomes = (0..count)
        .into_par_iter()
        .map(|i| sweep_one(seed, i))
        .collect::<Result<Vec<_>>>()?;
    let mut s = SweepSummary {
        seed,
        matrices: count,
        ..SweepSummary::default()
    };
    for o in outcomes {
        match o.t11 {
            Verdict::EquivBothTrue => s.theorem_11_both_true += 1,
            Verdict::EquivBothFalse => s.theorem_11_both_false += 1,
            Verdict::Violation => {}
        }
        if let Some(v) = o.t12 {
            s.theorem_12_checked += 1;
            match v {
                Verdict::EquivBothTrue => s.theorem_12_both_true += 1,
                Verdict::EquivBothFalse => s.theorem_12_both_false += 1,
                Verdict::Violation => {}
            }
        }
        s.ops_checked += usize::from(o.op_checked);
        s.failures.extend(o.failures);
    }
    Ok(s)
}
