//! End-to-end checks of the D4~, E6~ and Kronecker computations against the shipped fixture files.
//! Each check loads what it needs from disk, so a damaged fixture shows up as a named
//! failure rather than a crash.

use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cc::{cc_from_table, frieze_from_tube, growth_via_homogeneous, homogeneous_powers, verify_prop41_d4};
use crate::chebyshev::chebyshev_t;
use crate::cluster::{check_relations, ModularAction, Seed, DEFAULT_MAX_NODES};
use crate::error::{Error, Result};
use crate::fixtures::{load_quiver, load_rep, load_tube, read_text};
use crate::frieze::{FriezePattern, Quiddity};
use crate::laurent::{make_vars, LaurentPoly};
use crate::rep::{grassmannian_table, DimVector};
use crate::theta::growth_from_affine_quiver;

/// Euler characteristics of the Grassmannians of `M_lambda`, in enumeration order.
pub const M_LAMBDA_TABLE: [([u32; 5], i64); 13] = [
    ([0, 0, 0, 0, 0], 1),
    ([1, 0, 0, 0, 0], 1),
    ([0, 1, 0, 0, 0], 1),
    ([1, 1, 0, 0, 0], 1),
    ([1, 0, 1, 0, 0], 1),
    ([0, 1, 1, 0, 0], 1),
    ([1, 1, 1, 0, 0], 2),
    ([1, 1, 2, 0, 0], 1),
    ([1, 1, 1, 1, 0], 1),
    ([1, 1, 2, 1, 0], 1),
    ([1, 1, 1, 0, 1], 1),
    ([1, 1, 2, 0, 1], 1),
    ([1, 1, 2, 1, 1], 1),
];

/// The CC value of `M_lambda`: numerator terms over `x1 x2 x3^2 x4 x5`.
pub const M_LAMBDA_NUMERATOR: &str = "x1^2*x2^2*x3^2 + 2*x1^2*x2^2*x3 + x1^2*x2^2 + 4*x1*x2*x3*x4*x5 \
                                      + 2*x1*x2*x4*x5 + x3^2*x4^2*x5^2 + 2*x3*x4^2*x5^2 + x4^2*x5^2";

pub fn m_lambda_golden() -> LaurentPoly {
    let vars = make_vars(&["x1", "x2", "x3", "x4", "x5"]);
    let num = LaurentPoly::parse(M_LAMBDA_NUMERATOR, &vars).expect("valid golden");
    let den = LaurentPoly::parse("x1*x2*x3^2*x4*x5", &vars).expect("valid golden");
    num.div_exact(&den).expect("monomial division")
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub group: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn(&Path) -> Result<String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invalid(msg.into()))
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn d4_friezes(dir: &Path) -> Result<String> {
    let f1 = frieze_from_tube(&load_tube(&dir.join("d4/tube1.json"))?, 6)?;
    let expected1: [&[i64]; 5] = [&[15, 15], &[28, 112], &[209, 209], &[1560, 390], &[2911, 2911]];
    for (r, want) in expected1.iter().enumerate() {
        ensure(f1.row(r + 2) == ints(want), format!("tube 1 row {} is {:?}", r + 2, f1.row(r + 2)))?;
    }
    for t in [2, 3] {
        let f = frieze_from_tube(&load_tube(&dir.join(format!("d4/tube{t}.json")))?, 4)?;
        ensure(
            f.row(2) == ints(&[15, 15]) && f.row(3) == ints(&[56, 56]) && f.row(4) == ints(&[209, 209]),
            format!("tube {t} rows differ"),
        )?;
    }
    Ok("rows 15; 28,112; 209; 1560,390; 2911 and 15; 56; 209".into())
}

fn d4_growth(dir: &Path) -> Result<String> {
    for t in 1..=3 {
        let f = frieze_from_tube(&load_tube(&dir.join(format!("d4/tube{t}.json")))?, 6)?;
        let s = f.growth_coefficients(3)?;
        ensure(s[1..] == ints(&[14, 194, 2702]), format!("tube {t} growth {:?}", &s[1..]))?;
    }
    Ok("s1 = 14, s2 = 194, s3 = 2702 on all three tubes".into())
}

fn d4_table(dir: &Path) -> Result<String> {
    let m = load_rep(&dir.join("d4/m_lambda.json"))?;
    let table = grassmannian_table(&m, None)?;
    let got: Vec<(DimVector, BigInt)> = table.rows.iter().map(|r| (r.e.clone(), r.chi.clone())).collect();
    let want: Vec<(DimVector, BigInt)> =
        M_LAMBDA_TABLE.iter().map(|(e, c)| (DimVector(e.to_vec()), BigInt::from(*c))).collect();
    ensure(got == want, format!("table has {} rows: {:?}", got.len(), got))?;
    Ok(format!("13 rows, total {}", table.total()))
}

fn d4_cc(dir: &Path) -> Result<String> {
    let m = load_rep(&dir.join("d4/m_lambda.json"))?;
    let cc = cc_from_table(&m, &grassmannian_table(&m, None)?)?;
    ensure(cc.laurent == m_lambda_golden(), format!("X = {}", cc.laurent))?;
    Ok(format!("X(M_lambda) matches, value {}", cc.at_ones))
}

fn d4_theta(dir: &Path) -> Result<String> {
    let (q, _) = load_quiver(&dir.join("d4/quiver.json"))?;
    let g = growth_from_affine_quiver(&q, 1000)?;
    ensure(g.theta.integer == BigInt::from(14), format!("theta = {}", g.theta.integer))?;
    let m = load_rep(&dir.join("d4/m_lambda.json"))?;
    let cc = cc_from_table(&m, &grassmannian_table(&m, None)?)?;
    ensure(g.theta.laurent == cc.laurent, "theta differs from X(M_lambda)")?;
    Ok(format!("theta = 14 after {} mutations, {} quivers visited", g.word.len(), g.visited))
}

fn d4_degenerate(dir: &Path) -> Result<String> {
    let r = verify_prop41_d4(&load_rep(&dir.join("d4/m_degenerate.json"))?, &load_rep(&dir.join("d4/m_lambda.json"))?)?;
    ensure(r.holds && r.degenerate.at_ones == BigInt::from(15), format!("value {}", r.degenerate.at_ones))?;
    Ok("X(degenerate) = X(M_lambda) + 1 = 15".into())
}

fn homogeneous(_: &Path) -> Result<String> {
    let x1 = BigInt::from(14);
    let u = homogeneous_powers(&x1, 3);
    ensure(u[2] == BigInt::from(195) && u[3] == BigInt::from(2716), format!("u = {u:?}"))?;
    let f = FriezePattern::generate(&Quiddity::from_ints(&[8, 2])?, 12)?;
    for k in 1..=6 {
        let s = growth_via_homogeneous(&x1, k)?;
        ensure(s == chebyshev_t(k, &x1) && s == f.measured_growth(k)?, format!("k = {k}"))?;
    }
    Ok("u2 = 195, u3 = 2716; s_k agrees for k = 1..6".into())
}

fn e6_growth(dir: &Path) -> Result<String> {
    let (q, _) = load_quiver(&dir.join("e6/quiver.json"))?;
    let g = growth_from_affine_quiver(&q, DEFAULT_MAX_NODES)?;
    ensure(g.theta.integer == BigInt::from(322), format!("theta = {}", g.theta.integer))?;
    Ok(format!("theta = 322 after {} quivers", g.visited))
}

fn e6_friezes(dir: &Path) -> Result<String> {
    let json: serde_json::Value = serde_json::from_str(&read_text(&dir.join("e6/quiddities.json"))?)?;
    let tubes: Vec<Vec<i64>> = serde_json::from_value(json["tubes"].clone())?;
    for t in &tubes {
        let f = FriezePattern::generate(&Quiddity::from_ints(t)?, 2 * t.len() + 1)?;
        ensure(f.growth(1)? == BigInt::from(322), format!("{t:?} growth {}", f.growth(1)?))?;
    }
    let a = FriezePattern::generate(&Quiddity::from_ints(&tubes[0])?, 3)?;
    ensure(a.row(2) == ints(&[323, 323]) && a.row(3) == ints(&[11592, 2898]), "rows of (9,36)")?;
    let b = FriezePattern::generate(&Quiddity::from_ints(&tubes[1])?, 3)?;
    ensure(b.row(2) == ints(&[48, 48, 48]) && b.row(3) == ints(&[329, 329, 329]), "rows of (7,7,7)")?;
    Ok("323; 11592, 2898 and 48; 329; s1 = 322".into())
}

fn modular(dir: &Path) -> Result<String> {
    let mut out = Vec::new();
    for name in ["e6", "e7", "e8"] {
        let (q, _) = load_quiver(&dir.join(format!("{name}/eshape.json")))?;
        let action = ModularAction::new(&q)?;
        let report = check_relations(&action, &Seed::initial(&q))?;
        ensure(report.all_hold(), format!("{name}: {report:?}"))?;
        ensure(name != "e6" || report.gamma_relations.is_some(), "missing symmetry on E6")?;
        out.push(format!("{name} ok ({:?})", action.order()));
    }
    Ok(out.join(", "))
}

fn kronecker(dir: &Path) -> Result<String> {
    let (q, _) = load_quiver(&dir.join("kronecker/quiver.json"))?;
    let g = growth_from_affine_quiver(&q, DEFAULT_MAX_NODES)?;
    let f = frieze_from_tube(&[load_rep(&dir.join("kronecker/regular.json"))?], 4)?;
    ensure(g.theta.integer == BigInt::from(3) && f.growth(1)? == BigInt::from(3), "growth differs from 3")?;
    Ok("theta = 3 = s1 of the tube frieze".into())
}

pub fn checks() -> Vec<(&'static str, &'static str, Check)> {
    vec![
        ("d4", "d4-friezes", d4_friezes),
        ("d4", "d4-growth", d4_growth),
        ("d4", "d4-grassmannian-table", d4_table),
        ("d4", "d4-cc-laurent", d4_cc),
        ("d4", "d4-theta", d4_theta),
        ("d4", "d4-degenerate-module", d4_degenerate),
        ("d4", "homogeneous-growth", homogeneous),
        ("e6", "e6-theta", e6_growth),
        ("e6", "e6-friezes", e6_friezes),
        ("modular", "modular-relations", modular),
        ("kronecker", "kronecker-growth", kronecker),
    ]
}

/// Runs the checks whose group or name is in `only` (all when empty).
pub fn run(dir: &Path, only: &[String]) -> Vec<CheckResult> {
    checks()
        .into_iter()
        .filter(|(g, n, _)| only.is_empty() || only.iter().any(|o| o == g || o == n))
        .map(|(group, name, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(dir) {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            CheckResult { name: name.into(), group: group.into(), passed, detail, millis: start.elapsed().as_millis() }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::default_dir;

    #[test]
    fn golden_has_eight_terms() {
        let g = m_lambda_golden();
        assert_eq!(g.nterms(), 8);
        assert_eq!(g.at_ones(), BigInt::from(14));
    }

    #[test]
    fn quick_groups_pass() {
        for r in run(&default_dir(), &["d4".into(), "kronecker".into()]) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn missing_fixture_is_a_named_failure() {
        let results = run(Path::new("/nonexistent"), &["d4-theta".into()]);
        assert_eq!(results.len(), 1);
        assert!(!results[0].passed);
        assert!(results[0].detail.contains("d4/quiver.json"));
    }
}
